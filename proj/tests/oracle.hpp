#pragma once

// Brute-force evaluation of the bound formulas with boost::rational. Shares
// no code with the library; used to freeze expected values and to cross-check.

#include <algorithm>
#include <boost/rational.hpp>
#include <optional>

#include "macc/rational.hpp"

namespace oracle {

using Q = boost::rational<long long>;

inline Q pos(Q x) { return x < Q(0) ? Q(0) : x; }

inline Q cutset(int K, int L, int N, Q M, bool cap = true) {
  std::optional<Q> best;
  for (int s = 1; s <= std::min(K, N); ++s) {
    const int p = cap ? std::min(s + L - 1, K) : s + L - 1;
    const Q v = Q(s) - Q(p, N / s) * M;
    if (!best || v > *best) best = v;
  }
  return *best;
}

inline Q improved(int K, int L, int N, Q M) {
  std::optional<Q> best;
  for (int s = 1; s <= K; ++s) {
    const int p = std::min(s + L - 1, K);
    for (int l = 1; l * s < N + s; ++l) {  // l <= ceil(N/s)
      const Q v = (Q(N) - (Q(1) - Q(p, K)) * pos(Q(N - l * s)) - pos(Q(N - l * K)) - Q(p) * M) / Q(l);
      if (!best || v > *best) best = v;
    }
  }
  return *best;
}

inline std::optional<Q> hkd(int K, int L, int N, Q M, int b_cap = 0) {
  if (b_cap <= 0) b_cap = N;
  std::optional<Q> best;
  for (int s = 1; s <= K; ++s) {
    for (int t = 1; t <= K; ++t) {
      if (s * t < L || s * t > K / 2) continue;
      for (int b = 1; b <= b_cap; ++b) {
        const Q lambda = s * t == L ? Q(1) : Q(1, 2);
        const Q v = lambda * std::min(Q(s * t - L + 1), Q(N, s * b)) - Q(t, b) * M;
        if (!best || v > *best) best = v;
      }
    }
  }
  return best;
}

inline Q to_q(const macc::Rational& r) { return Q(r.num(), r.den()); }
inline macc::Rational from_q(const Q& q) { return macc::Rational(q.numerator(), q.denominator()); }

}  // namespace oracle
