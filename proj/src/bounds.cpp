#include "macc/bounds.hpp"

#include <algorithm>

#include "macc/errors.hpp"

namespace macc::bounds {

namespace {

void require_memory(const MaccParams& p, const Rational& M) {
  if (M < 0 || M > Rational(p.N)) {
    throw DomainError("memory M=" + M.to_string() + " outside [0, " + std::to_string(p.N) + "]");
  }
}

int caches_reached(const MaccParams& p, int s) { return std::min(s + p.L - 1, p.K); }

// Keeps the first maximum seen; callers enumerate in tie-break order.
struct ArgMax {
  std::optional<Rational> value;
  Witness witness;

  void offer(const Rational& v, const Witness& w) {
    if (!value || v > *value) {
      value = v;
      witness = w;
    }
  }
};

}  // namespace

std::string_view family_id(BoundFamily family) {
  switch (family) {
    case BoundFamily::cutset_thm1: return "cutset_thm1";
    case BoundFamily::improved_thm2: return "improved_thm2";
    case BoundFamily::hkd_lemma2: return "hkd_lemma2";
    case BoundFamily::hkd2_lemma3: return "hkd2_lemma3";
    case BoundFamily::best: return "best";
  }
  return "unknown";
}

std::optional<BoundFamily> parse_family(std::string_view name) {
  if (name == "cutset" || name == "cutset_thm1") return BoundFamily::cutset_thm1;
  if (name == "improved" || name == "improved_thm2") return BoundFamily::improved_thm2;
  if (name == "hkd" || name == "hkd_lemma2") return BoundFamily::hkd_lemma2;
  if (name == "hkd2" || name == "hkd2_lemma3") return BoundFamily::hkd2_lemma3;
  if (name == "best") return BoundFamily::best;
  return std::nullopt;
}

std::string Witness::to_string() const {
  std::string out = "s=" + std::to_string(s);
  switch (family) {
    case BoundFamily::improved_thm2:
      out += ";l=" + std::to_string(l);
      break;
    case BoundFamily::hkd_lemma2:
      out += ";t=" + std::to_string(t) + ";b=" + std::to_string(b);
      break;
    default:
      break;
  }
  return out;
}

Rational cutset_term(const MaccParams& p, const Rational& M, int s) {
  const int rounds = p.N / s;
  return Rational(s) - Rational(caches_reached(p, s), rounds) * M;
}

Rational improved_term(const MaccParams& p, const Rational& M, int s, int l) {
  const int q = caches_reached(p, s);
  const Rational N(p.N);
  const Rational unseen = positive_part(N - Rational(std::int64_t(l) * s));
  const Rational undecoded = positive_part(N - Rational(std::int64_t(l) * p.K));
  const Rational body = N - (Rational(1) - Rational(q, p.K)) * unseen - undecoded - Rational(q) * M;
  return body / Rational(l);
}

Rational hkd_lemma2_term(const MaccParams& p, const Rational& M, int s, int t, int b) {
  const std::int64_t st = std::int64_t(s) * t;
  const Rational lambda = st == p.L ? Rational(1) : Rational(1, 2);
  const Rational reach = std::min(Rational(st - p.L + 1), Rational(p.N, std::int64_t(s) * b));
  return lambda * reach - Rational(t, b) * M;
}

Rational hkd2_lemma3_term(const MaccParams& p, const Rational& M, int s) {
  const int rounds = p.N / s;
  return Rational(s) - Rational(s + p.L - 1, rounds) * M;
}

Rational evaluate_witness(const MaccParams& p, const Rational& M, const Witness& w) {
  switch (w.family) {
    case BoundFamily::cutset_thm1: return cutset_term(p, M, w.s);
    case BoundFamily::improved_thm2: return improved_term(p, M, w.s, w.l);
    case BoundFamily::hkd_lemma2: return hkd_lemma2_term(p, M, w.s, w.t, w.b);
    case BoundFamily::hkd2_lemma3: return hkd2_lemma3_term(p, M, w.s);
    case BoundFamily::best: break;
  }
  throw DomainError("witness must name a concrete bound family");
}

BoundPoint cutset_bound(const MaccParams& p, const Rational& M) {
  require_memory(p, M);
  ArgMax best;
  for (int s = 1; s <= std::min(p.K, p.N); ++s) {
    best.offer(cutset_term(p, M, s), {BoundFamily::cutset_thm1, s});
  }
  return {M, *best.value, best.witness};
}

BoundPoint improved_bound(const MaccParams& p, const Rational& M) {
  require_memory(p, M);
  ArgMax best;
  for (int s = 1; s <= p.K; ++s) {
    const int rounds = (p.N + s - 1) / s;
    for (int l = 1; l <= rounds; ++l) {
      best.offer(improved_term(p, M, s, l), {BoundFamily::improved_thm2, s, l});
    }
  }
  return {M, *best.value, best.witness};
}

BoundPoint hkd_lemma2_bound(const MaccParams& p, const Rational& M, int b_cap) {
  require_memory(p, M);
  if (b_cap <= 0) b_cap = p.N;
  const int upper = p.K / 2;
  ArgMax best;
  for (int s = 1; s <= upper; ++s) {
    for (int t = 1; t <= p.K; ++t) {
      const int st = s * t;
      if (st < p.L || st > upper) continue;
      for (int b = 1; b <= b_cap; ++b) {
        best.offer(hkd_lemma2_term(p, M, s, t, b), {BoundFamily::hkd_lemma2, s, 0, t, b});
      }
    }
  }
  if (!best.value) {
    return {M, Rational(0), Witness{BoundFamily::hkd_lemma2}, false};
  }
  return {M, *best.value, best.witness};
}

BoundPoint hkd2_lemma3_bound(const MaccParams& p, const Rational& M) {
  require_memory(p, M);
  ArgMax best;
  for (int s = 1; s <= std::min(p.K, p.N); ++s) {
    best.offer(hkd2_lemma3_term(p, M, s), {BoundFamily::hkd2_lemma3, s});
  }
  return {M, *best.value, best.witness};
}

BoundPoint best_lower_bound(const MaccParams& p, const Rational& M, int b_cap) {
  require_memory(p, M);
  ArgMax best;
  for (BoundFamily family : kConcreteFamilies) {
    const BoundPoint point = evaluate(family, p, M, b_cap);
    if (point.applicable) best.offer(point.R, point.witness);
  }
  return {M, positive_part(*best.value), best.witness};
}

BoundPoint evaluate(BoundFamily family, const MaccParams& p, const Rational& M, int b_cap) {
  switch (family) {
    case BoundFamily::cutset_thm1: return cutset_bound(p, M);
    case BoundFamily::improved_thm2: return improved_bound(p, M);
    case BoundFamily::hkd_lemma2: return hkd_lemma2_bound(p, M, b_cap);
    case BoundFamily::hkd2_lemma3: return hkd2_lemma3_bound(p, M);
    case BoundFamily::best: return best_lower_bound(p, M, b_cap);
  }
  throw DomainError("unknown bound family");
}

BoundCurve sweep_curve(const MaccParams& p, BoundFamily family, const std::vector<Rational>& grid,
                       int b_cap) {
  if (grid.empty()) throw DomainError("empty memory grid");
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (!(grid[i - 1] < grid[i])) throw DomainError("memory grid must be strictly increasing");
  }
  BoundCurve curve{p, family, {}, true, 0};
  if (family == BoundFamily::hkd_lemma2 || family == BoundFamily::best) {
    curve.b_cap = b_cap > 0 ? b_cap : p.N;
  }
  curve.points.reserve(grid.size());
  for (const Rational& M : grid) curve.points.push_back(evaluate(family, p, M, b_cap));
  curve.applicable = curve.points.front().applicable;
  return curve;
}

std::vector<Rational> uniform_grid(const Rational& start, const Rational& stop, int count) {
  if (count < 2) throw DomainError("grid needs at least 2 points");
  if (!(start < stop)) throw DomainError("grid start must be below grid stop");
  std::vector<Rational> grid;
  grid.reserve(count);
  const Rational span = stop - start;
  for (int i = 0; i < count; ++i) grid.push_back(start + span * Rational(i, count - 1));
  return grid;
}

std::vector<Rational> default_grid(const MaccParams& p) {
  return uniform_grid(Rational(0), Rational(p.N, p.L), 101);
}

DominanceReport verify_dominance(const MaccParams& p, const std::vector<Rational>& grid) {
  DominanceReport report{p, {}, {}};
  const Rational limit(p.N, p.L);
  for (const Rational& M : grid) {
    DominanceEntry e;
    e.M = M;
    e.cutset = cutset_bound(p, M).R;
    e.lemma3 = hkd2_lemma3_bound(p, M).R;
    e.improved = improved_bound(p, M).R;
    e.improved_checked = M <= limit;
    if (e.improved_checked && e.improved < e.cutset) {
      e.improved_ok = false;
      report.violations.push_back({M, "improved_thm2>=cutset_thm1", e.improved, e.cutset});
    }
    if (e.cutset < e.lemma3) {
      e.cap_ok = false;
      report.violations.push_back({M, "cutset_thm1>=hkd2_lemma3", e.cutset, e.lemma3});
    }
    report.entries.push_back(e);
  }
  return report;
}

std::pair<Rational, Rational> uncoded_threshold_gap(const MaccParams& p) {
  const int blocks = (p.K + p.L - 1) / p.L;
  return {Rational(p.N, p.L), Rational(std::int64_t(blocks) * p.N, p.K)};
}

}  // namespace macc::bounds
