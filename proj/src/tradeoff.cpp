#include "macc/tradeoff.hpp"

#include <algorithm>
#include <ostream>

#include "macc/errors.hpp"

namespace macc::sim {

std::vector<AchievablePoint> achievable_points_323() {
  return {{Rational(0), Rational(3), "zero-memory"},
          {Rational(2, 3), Rational(1), "appendix-b"},
          {Rational(1), Rational(1, 3), "cited-uncoded"},
          {Rational(3, 2), Rational(0), "corner-323"}};
}

Rational memory_share(const std::vector<AchievablePoint>& points, const Rational& M) {
  if (points.empty()) throw DomainError("memory sharing needs at least one point");

  std::vector<AchievablePoint> sorted = points;
  std::sort(sorted.begin(), sorted.end(), [](const AchievablePoint& a, const AchievablePoint& b) {
    return a.M != b.M ? a.M < b.M : a.R < b.R;
  });
  if (M < sorted.front().M || M > sorted.back().M) {
    throw DomainError("M=" + M.to_string() + " outside the memory range of the points");
  }

  // Monotone chain, lower hull only; equal-M duplicates keep the lowest R.
  std::vector<AchievablePoint> hull;
  for (const AchievablePoint& p : sorted) {
    if (!hull.empty() && hull.back().M == p.M) continue;
    while (hull.size() >= 2) {
      const AchievablePoint& a = hull[hull.size() - 2];
      const AchievablePoint& b = hull.back();
      const Rational cross = (b.M - a.M) * (p.R - a.R) - (b.R - a.R) * (p.M - a.M);
      if (cross > 0) break;
      hull.pop_back();
    }
    hull.push_back(p);
  }

  for (std::size_t i = 0; i + 1 < hull.size(); ++i) {
    const AchievablePoint& a = hull[i];
    const AchievablePoint& b = hull[i + 1];
    if (M >= a.M && M <= b.M) {
      return a.R + (b.R - a.R) * (M - a.M) / (b.M - a.M);
    }
  }
  return hull.front().R;  // single distinct memory value
}

Rational optimal_tradeoff_323(const Rational& M) {
  if (M < 0 || M > Rational(3, 2)) {
    throw DomainError("optimal (3,2,3) trade-off is defined on [0, 3/2], got " + M.to_string());
  }
  if (M <= Rational(2, 3)) return Rational(3) * (Rational(1) - M);
  if (M <= Rational(1)) return Rational(7, 3) - Rational(2) * M;
  return Rational(1) - Rational(2, 3) * M;
}

void write_achievable_csv(std::ostream& os, const std::vector<AchievablePoint>& points) {
  os << "M,R,scheme_id\n";
  for (const AchievablePoint& p : points) {
    os << p.M.to_string() << ',' << p.R.to_string() << ',' << p.scheme_id << '\n';
  }
}

}  // namespace macc::sim
