#include "macc/verify.hpp"

#include <algorithm>

#include "macc/errors.hpp"

namespace macc::sim {

VerificationReport verify_scheme(const Scheme& scheme, const FileLibrary& library,
                                 std::optional<std::uint64_t> seed) {
  if (!scheme.admits(library.params())) {
    throw DomainError(scheme.id() + " does not support " + library.params().to_string());
  }
  scheme.check_file_size(library.file_bits());
  return verify_with_placement(scheme, library, scheme.place(library), seed);
}

VerificationReport verify_with_placement(const Scheme& scheme, const FileLibrary& library,
                                         const CacheContents& caches,
                                         std::optional<std::uint64_t> seed) {
  const MaccParams& params = library.params();
  if (!scheme.admits(params)) {
    throw DomainError(scheme.id() + " does not support " + params.to_string());
  }
  scheme.check_file_size(library.file_bits());
  const std::size_t F = library.file_bits();

  VerificationReport report{scheme.id(), params, F, seed, Rational(0), 0, {}, {}};
  for (const DemandVector& d : enumerate_demands(params)) {
    const Transmission x = scheme.deliver(library, d);
    DemandResult result{d, x.rate, true};
    if (x.rate * Rational(static_cast<std::int64_t>(F)) !=
        Rational(static_cast<std::int64_t>(x.payload.size()))) {
      result.pass = false;
      report.failures.push_back({d, 0, "rate does not match payload length"});
    }
    for (int k = 1; k <= params.K; ++k) {
      ++report.checks;
      const AccessibleCaches window(caches, k);
      std::string reason;
      try {
        if (scheme.decode(k, x, window, d, F) != library.file(d.of(k))) {
          reason = "decoded bits differ from W_" + std::to_string(d.of(k));
        }
      } catch (const std::exception& e) {
        reason = std::string("decoder error: ") + e.what();
      }
      if (!reason.empty()) {
        result.pass = false;
        report.failures.push_back({d, k, reason});
      }
    }
    report.worst_case_rate = std::max(report.worst_case_rate, x.rate);
    report.per_demand.push_back(std::move(result));
  }
  std::sort(report.failures.begin(), report.failures.end());
  return report;
}

nlohmann::ordered_json report_to_json(const VerificationReport& report) {
  nlohmann::ordered_json root;
  root["scheme_id"] = report.scheme_id;
  root["params"] = {{"K", report.params.K}, {"L", report.params.L}, {"N", report.params.N}};
  root["F"] = report.F;
  if (report.seed) {
    root["seed"] = *report.seed;
  } else {
    root["seed"] = nullptr;
  }
  root["worst_case_rate"] = report.worst_case_rate.to_string();
  root["per_demand"] = nlohmann::ordered_json::array();
  for (const DemandResult& r : report.per_demand) {
    nlohmann::ordered_json j;
    j["d"] = r.d.files;
    j["rate"] = r.rate.to_string();
    j["pass"] = r.pass;
    root["per_demand"].push_back(std::move(j));
  }
  root["failures"] = nlohmann::ordered_json::array();
  for (const DecodeFailure& f : report.failures) {
    nlohmann::ordered_json j;
    j["d"] = f.d.files;
    j["k"] = f.user;
    j["reason"] = f.reason;
    root["failures"].push_back(std::move(j));
  }
  return root;
}

}  // namespace macc::sim
