#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "macc/scheme.hpp"

namespace macc::sim {

struct DemandResult {
  DemandVector d;
  Rational rate;
  bool pass = true;
};

struct DecodeFailure {
  DemandVector d;
  int user = 0;
  std::string reason;

  friend bool operator<(const DecodeFailure& a, const DecodeFailure& b) {
    return a.d != b.d ? a.d < b.d : a.user < b.user;
  }
};

struct VerificationReport {
  std::string scheme_id;
  MaccParams params;
  std::size_t F = 0;
  std::optional<std::uint64_t> seed;
  Rational worst_case_rate;
  std::size_t checks = 0;  // (demand, user) pairs decoded
  std::vector<DemandResult> per_demand;
  std::vector<DecodeFailure> failures;  // sorted by (d, k)

  bool ok() const { return failures.empty(); }
};

// Places once, then for every demand vector in lexicographic order delivers
// and decodes at every user from its window alone. A wrong decode, a decoder
// exception, or a rate that does not match the payload length is a failure.
// Throws SubpacketizationError / DomainError for an inadmissible library.
VerificationReport verify_scheme(const Scheme& scheme, const FileLibrary& library,
                                 std::optional<std::uint64_t> seed = std::nullopt);

// Same, with a caller-supplied placement (for fault injection).
VerificationReport verify_with_placement(const Scheme& scheme, const FileLibrary& library,
                                         const CacheContents& caches,
                                         std::optional<std::uint64_t> seed = std::nullopt);

nlohmann::ordered_json report_to_json(const VerificationReport& report);

}  // namespace macc::sim
