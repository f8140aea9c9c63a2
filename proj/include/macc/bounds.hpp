#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "macc/params.hpp"
#include "macc/rational.hpp"

// Lower bounds on the optimal rate-memory trade-off R*(M) of the (K, L, N)
// multi-access coded caching network. Every value is an exact Rational.
namespace macc::bounds {

enum class BoundFamily {
  cutset_thm1,    // cut-set bound with min(s+L-1, K) caches
  improved_thm2,  // non-cut-set bound over (s, l)
  hkd_lemma2,     // prior bound over (s, t, b), needs L <= K/2
  hkd2_lemma3,    // prior cut-set bound, uncapped s+L-1
  best,           // pointwise max of the four, clamped at 0
};

// The four concrete families, in tie-break order for `best`.
inline constexpr BoundFamily kConcreteFamilies[] = {
    BoundFamily::cutset_thm1, BoundFamily::improved_thm2, BoundFamily::hkd_lemma2,
    BoundFamily::hkd2_lemma3};

std::string_view family_id(BoundFamily family);
// Accepts canonical ids and the short forms cutset, improved, hkd, hkd2.
std::optional<BoundFamily> parse_family(std::string_view name);

// The parameters of the affine term that attained a maximum. Unused
// parameters are 0. For `best`, `family` names the winning family.
struct Witness {
  BoundFamily family = BoundFamily::cutset_thm1;
  int s = 0;
  int l = 0;
  int t = 0;
  int b = 0;

  std::string to_string() const;  // "s=1;l=1", "s=1;t=5;b=1", ...
  friend bool operator==(const Witness&, const Witness&) = default;
};

struct BoundPoint {
  Rational M;
  // Raw maximum, may be negative. For `best` this is already clamped at 0.
  Rational R;
  Witness witness;
  // False when the family's parameter set is empty (the (s, t, b) prior bound with
  // L > floor(K/2)); R is then meaningless and reported as 0.
  bool applicable = true;

  Rational display() const { return applicable ? positive_part(R) : Rational(0); }
};

struct BoundCurve {
  MaccParams params;
  BoundFamily family;
  std::vector<BoundPoint> points;
  bool applicable = true;
  int b_cap = 0;  // search cap used for hkd_lemma2 (0 for other families)
};

// Single affine terms. These do not check that the parameters are inside the
// family's search range; they just evaluate the printed expression.
Rational cutset_term(const MaccParams& p, const Rational& M, int s);
Rational improved_term(const MaccParams& p, const Rational& M, int s, int l);
Rational hkd_lemma2_term(const MaccParams& p, const Rational& M, int s, int t, int b);
Rational hkd2_lemma3_term(const MaccParams& p, const Rational& M, int s);

// Re-evaluates the term named by `w` (for `best`, of the winning family).
Rational evaluate_witness(const MaccParams& p, const Rational& M, const Witness& w);

// max over s in [1, min(K,N)] of s - min(s+L-1, K) M / floor(N/s).
BoundPoint cutset_bound(const MaccParams& p, const Rational& M);

// max over s in [1, K], l in [1, ceil(N/s)] of
//   (1/l) { N - (1 - q/K)(N - l s)^+ - (N - l K)^+ - q M },  q = min(s+L-1, K).
BoundPoint improved_bound(const MaccParams& p, const Rational& M);

// max of lambda min{st - L + 1, N/(sb)} - (t/b) M over st in [L, floor(K/2)],
// t in [1, K], b in [1, b_cap]. b_cap <= 0 selects the default cap N.
BoundPoint hkd_lemma2_bound(const MaccParams& p, const Rational& M, int b_cap = 0);

// max over s in [1, min(K,N)] of s - (s+L-1) M / floor(N/s).
BoundPoint hkd2_lemma3_bound(const MaccParams& p, const Rational& M);

BoundPoint best_lower_bound(const MaccParams& p, const Rational& M, int b_cap = 0);

BoundPoint evaluate(BoundFamily family, const MaccParams& p, const Rational& M, int b_cap = 0);

// `grid` must be non-empty, strictly increasing and inside [0, N].
BoundCurve sweep_curve(const MaccParams& p, BoundFamily family, const std::vector<Rational>& grid,
                       int b_cap = 0);

// `count` >= 2 evenly spaced points from start to stop inclusive.
std::vector<Rational> uniform_grid(const Rational& start, const Rational& stop, int count);
// 101 points on [0, N/L].
std::vector<Rational> default_grid(const MaccParams& p);

struct DominanceEntry {
  Rational M;
  Rational improved;
  Rational cutset;
  Rational lemma3;
  bool improved_checked = false;  // M <= N/L
  bool improved_ok = true;        // improved >= cutset
  bool cap_ok = true;             // cutset >= lemma3
};

struct DominanceViolation {
  Rational M;
  std::string relation;  // "improved_thm2>=cutset_thm1" or "cutset_thm1>=hkd2_lemma3"
  Rational lhs;
  Rational rhs;
};

struct DominanceReport {
  MaccParams params;
  std::vector<DominanceEntry> entries;
  std::vector<DominanceViolation> violations;

  bool ok() const { return violations.empty(); }
};

// Checks improved >= cutset for grid points in [0, N/L] and cutset >= lemma3
// for every grid point, on raw (unclamped) values.
DominanceReport verify_dominance(const MaccParams& p, const std::vector<Rational>& grid);

// (N/L, ceil(K/L) N/K).
std::pair<Rational, Rational> uncoded_threshold_gap(const MaccParams& p);

}  // namespace macc::bounds
