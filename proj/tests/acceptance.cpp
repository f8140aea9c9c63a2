// Acceptance suite: one line per criterion, exit status 0 iff all pass.
// Runtime budgets are part of each criterion.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "macc/bounds.hpp"
#include "macc/entropy.hpp"
#include "macc/scheme.hpp"
#include "macc/tradeoff.hpp"
#include "macc/verify.hpp"

using macc::MaccParams;
using macc::Rational;
namespace bounds = macc::bounds;
namespace sim = macc::sim;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;  // keep the first failure
    pass = false;
  }
};

template <typename Fn>
void for_each_param_grid(Fn&& fn) {
  for (int K = 2; K <= 10; ++K) {
    for (int L = 1; L <= K; ++L) {
      for (int N = 1; N <= 12; ++N) fn(MaccParams(K, L, N));
    }
  }
}

Outcome sandwich_323() {
  Outcome o;
  const MaccParams p(3, 2, 3);
  const auto vertices = sim::achievable_points_323();
  const auto grid = bounds::uniform_grid(0, Rational(3, 2), 151);
  for (const Rational& M : grid) {
    const Rational lower = bounds::best_lower_bound(p, M).R;
    const Rational closed = sim::optimal_tradeoff_323(M);
    const Rational shared = sim::memory_share(vertices, M);
    if (lower != closed || closed != shared) {
      o.fail("M=" + M.to_string() + ": bound " + lower.to_string() + ", closed form " +
             closed.to_string() + ", shared " + shared.to_string());
    }
  }
  if (o.pass) o.detail = "151 points, exact equality";
  return o;
}

Outcome coded_placement_scheme() {
  Outcome o;
  const MaccParams p(3, 2, 3);
  const auto scheme = sim::scheme_coded_placement_323();
  std::size_t checks = 0;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const auto report = sim::verify_scheme(*scheme, sim::FileLibrary::random(p, 12, seed), seed);
    checks += report.checks;
    if (!report.ok()) o.fail("seed " + std::to_string(seed) + ": " + report.failures.front().reason);
    if (report.per_demand.size() != 27) o.fail("expected 27 demand vectors");
    for (const auto& r : report.per_demand) {
      if (r.rate != 1) o.fail("rate " + r.rate.to_string() + " at d=" + r.d.to_string());
    }
  }
  if (o.pass) o.detail = std::to_string(checks) + " decodes over 20 seeds, every rate 1";
  return o;
}

Outcome corner_scheme() {
  Outcome o;
  const MaccParams p(3, 2, 3);
  const auto scheme = sim::scheme_full_access_corner_323();
  if (scheme->memory() != Rational(3, 2)) o.fail("memory is not 3/2");
  const auto report = sim::verify_scheme(*scheme, sim::FileLibrary::random(p, 12, 1), 1);
  if (!report.ok()) o.fail(report.failures.front().reason);
  if (report.per_demand.size() != 27) o.fail("expected 27 demand vectors");
  for (const auto& r : report.per_demand) {
    if (r.rate != 0 || !r.pass) o.fail("d=" + r.d.to_string() + " rate " + r.rate.to_string());
  }
  if (o.pass) o.detail = "27 demand vectors x 3 users, rate 0";
  return o;
}

Outcome improved_dominates_cutset() {
  Outcome o;
  int triples = 0;
  for_each_param_grid([&](const MaccParams& p) {
    ++triples;
    for (const Rational& M : bounds::uniform_grid(0, Rational(p.N, p.L), 51)) {
      const Rational imp = bounds::improved_bound(p, M).R;
      const Rational cut = bounds::cutset_bound(p, M).R;
      if (imp < cut) o.fail(p.to_string() + " M=" + M.to_string());
    }
  });
  if (o.pass) o.detail = std::to_string(triples) + " triples x 51 points, zero violations";
  return o;
}

Outcome cutset_dominates_lemma3() {
  Outcome o;
  int strict_required = 0;
  for_each_param_grid([&](const MaccParams& p) {
    bool needs_strict = false;
    for (int s = 1; s <= std::min(p.K, p.N); ++s) needs_strict |= (s + p.L - 1 > p.K && p.N / s >= 1);
    bool strict = false;
    for (const Rational& M : bounds::uniform_grid(0, Rational(p.N, p.L), 51)) {
      const Rational cut = bounds::cutset_bound(p, M).R;
      const Rational lem = bounds::hkd2_lemma3_bound(p, M).R;
      if (cut < lem) o.fail(p.to_string() + " M=" + M.to_string() + ": cut-set below the uncapped bound");
      if (M > 0 && cut > lem) strict = true;
    }
    for (const Rational& M : bounds::uniform_grid(0, Rational(p.N), 51)) {
      if (bounds::cutset_bound(p, M).R < bounds::hkd2_lemma3_bound(p, M).R) {
        o.fail(p.to_string() + " M=" + M.to_string() + ": cut-set below the uncapped bound");
      }
    }
    if (needs_strict) {
      ++strict_required;
      if (!strict) o.fail(p.to_string() + ": no strict improvement");
    }
  });
  if (o.pass) o.detail = "pointwise on [0,N/L] and [0,N]; strict in all " + std::to_string(strict_required) + " triples with s+L-1>K";
  return o;
}

Outcome endpoint_identities() {
  Outcome o;
  for_each_param_grid([&](const MaccParams& p) {
    if (bounds::improved_bound(p, 0).R != std::min(p.K, p.N)) o.fail(p.to_string() + ": improved(0)");
    if (bounds::improved_term(p, Rational(p.N, p.L), 1, p.N) != 0) o.fail(p.to_string() + ": (1,N) term");
  });
  if (o.pass) o.detail = "improved(0)=min(K,N), (s=1,l=N) term at N/L is 0";
  return o;
}

Outcome entropy_suite() {
  Outcome o;
  constexpr double tol = 1e-9;
  const auto small = macc::entropy::run_batch(3, 2, 1000, 1, tol);
  const auto large = macc::entropy::run_batch(5, 3, 200, 1, tol);
  for (const auto* r : {&small, &large}) {
    for (const auto& f : r->failures) {
      o.fail("K=" + std::to_string(r->K) + " trial " + std::to_string(f.trial) + " " + f.kind);
    }
    if (r->max_joint_error > 1e-12) o.fail("full-window average differs from joint entropy");
  }
  if (o.pass) {
    std::ostringstream d;
    d << "1000 + 200 pmfs, min margins " << small.min_margin << " / " << large.min_margin
      << ", joint error " << std::max(small.max_joint_error, large.max_joint_error);
    o.detail = d.str();
  }
  return o;
}

Outcome figure_shapes() {
  Outcome o;
  const std::vector<MaccParams> settings{{20, 5, 20}, {10, 7, 10}, {10, 6, 10}, {11, 3, 11}, {10, 3, 10}};
  const bounds::BoundFamily families[] = {bounds::BoundFamily::cutset_thm1, bounds::BoundFamily::improved_thm2,
                                          bounds::BoundFamily::hkd_lemma2, bounds::BoundFamily::hkd2_lemma3,
                                          bounds::BoundFamily::best};
  for (const MaccParams& p : settings) {
    const auto full = bounds::uniform_grid(0, Rational(p.N), 101);
    for (auto family : families) {
      const auto curve = bounds::sweep_curve(p, family, full);
      if (!curve.applicable) continue;
      const std::string tag = p.to_string() + " " + std::string(bounds::family_id(family));
      const auto& pts = curve.points;
      for (std::size_t i = 1; i < pts.size(); ++i) {
        if (pts[i].display() > pts[i - 1].display()) o.fail(tag + ": increases");
        if (i + 1 < pts.size() &&
            Rational(2) * pts[i].display() > pts[i - 1].display() + pts[i + 1].display()) {
          o.fail(tag + ": not convex");
        }
      }
      if (family != bounds::BoundFamily::hkd_lemma2 && pts.front().display() != std::min(p.K, p.N)) {
        o.fail(tag + ": does not start at min(K,N)");
      }
    }
    const auto access = bounds::uniform_grid(0, Rational(p.N, p.L), 101);
    const auto imp = bounds::sweep_curve(p, bounds::BoundFamily::improved_thm2, access);
    const auto cut = bounds::sweep_curve(p, bounds::BoundFamily::cutset_thm1, access);
    for (std::size_t i = 0; i < access.size(); ++i) {
      if (imp.points[i].display() < cut.points[i].display()) o.fail(p.to_string() + ": improved below cutset");
    }
  }
  if (o.pass) o.detail = "5 settings, all families non-increasing and convex";
  return o;
}

struct Criterion {
  int id;
  const char* name;
  double budget_s;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "exact (3,2,3) optimality sandwich", 1.0, sandwich_323},
      {2, "coded placement scheme, rate 1, 20 seeds", 1.0, coded_placement_scheme},
      {3, "(3/2, 0) corner scheme", 1.0, corner_scheme},
      {4, "improved >= cut-set on [0, N/L]", 120.0, improved_dominates_cutset},
      {5, "cut-set >= uncapped cut-set, with strictness", 120.0, cutset_dominates_lemma3},
      {6, "endpoint identities", 30.0, endpoint_identities},
      {7, "sliding-window entropy suite", 30.0, entropy_suite},
      {8, "figure-shape reproduction", 10.0, figure_shapes},
  };
  int passed = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.budget_s) o.fail("over the " + std::to_string(c.budget_s) + " s budget");
    passed += o.pass ? 1 : 0;
    std::printf("[%s] %d. %s (%.3f s): %s\n", o.pass ? "PASS" : "FAIL", c.id, c.name, secs, o.detail.c_str());
  }
  std::printf("%d/%zu acceptance criteria passed\n", passed, criteria.size());
  return passed == static_cast<int>(criteria.size()) ? 0 : 1;
}
