#include "macc/params.hpp"

#include "macc/errors.hpp"

namespace macc {

MaccParams::MaccParams(int users, int window, int files) : K(users), L(window), N(files) {
  if (K < 1) throw DomainError("K must be positive, got " + std::to_string(K));
  if (L < 1 || L > K) {
    throw DomainError("L must satisfy 1 <= L <= K, got L=" + std::to_string(L) +
                      " with K=" + std::to_string(K));
  }
  if (N < 1) throw DomainError("N must be positive, got " + std::to_string(N));
}

std::string MaccParams::to_string() const {
  return "(K=" + std::to_string(K) + ",L=" + std::to_string(L) + ",N=" + std::to_string(N) + ")";
}

int cyclic_index(long long i, int K) {
  if (K < 1) throw DomainError("cyclic_index needs K >= 1");
  long long r = i % K;
  if (r < 0) r += K;
  return r == 0 ? K : static_cast<int>(r);
}

std::vector<int> access_window(int k, const MaccParams& params) {
  if (k < 1 || k > params.K) {
    throw DomainError("user index " + std::to_string(k) + " outside [1, " +
                      std::to_string(params.K) + "]");
  }
  std::vector<int> window;
  window.reserve(params.L);
  for (int j = 0; j < params.L; ++j) window.push_back(cyclic_index(k + j, params.K));
  return window;
}

}  // namespace macc
