#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "macc/bounds.hpp"
#include "json.hpp"

namespace macc::bounds {

inline constexpr const char* kCurveCsvHeader = "M,R,family,witness,M_decimal,R_decimal";

// One row per point of every applicable curve; R is the clamped display
// value. Inapplicable curves contribute no rows.
void write_curves_csv(std::ostream& os, const std::vector<BoundCurve>& curves);
nlohmann::ordered_json curves_to_json(const MaccParams& params, const std::vector<BoundCurve>& curves);

void write_dominance_csv(std::ostream& os, const DominanceReport& report);
nlohmann::ordered_json dominance_to_json(const DominanceReport& report);

std::string witness_label(const BoundPoint& point, int b_cap);

}  // namespace macc::bounds
