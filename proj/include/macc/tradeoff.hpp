#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "macc/rational.hpp"

namespace macc::sim {

struct AchievablePoint {
  Rational M;
  Rational R;
  std::string scheme_id;
};

// Vertices of the achievable (3,2,3) region: (0,3), (2/3,1), (1,1/3), (3/2,0).
// (1, 1/3) comes from a scheme that is cited but not simulated here.
std::vector<AchievablePoint> achievable_points_323();

// Lower convex envelope of `points` evaluated at M. Throws DomainError when
// `points` is empty or M lies outside [min M, max M].
Rational memory_share(const std::vector<AchievablePoint>& points, const Rational& M);

// Exact optimal trade-off of the (3,2,3) network on [0, 3/2].
Rational optimal_tradeoff_323(const Rational& M);

// Header "M,R,scheme_id", fraction strings.
void write_achievable_csv(std::ostream& os, const std::vector<AchievablePoint>& points);

}  // namespace macc::sim
