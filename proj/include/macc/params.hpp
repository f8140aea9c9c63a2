#pragma once

#include <string>
#include <vector>

namespace macc {

// The (K, L, N) multi-access network: K users and K caches, each user reads
// L consecutive caches with cyclic wrap-around, N files in the library.
struct MaccParams {
  int K = 1;
  int L = 1;
  int N = 1;

  // Throws DomainError unless 1 <= L <= K and N >= 1.
  MaccParams(int users, int window, int files);

  std::string to_string() const;  // "(K=3,L=2,N=3)"

  friend bool operator==(const MaccParams&, const MaccParams&) = default;
};

// <i>_K: i mod K, with 0 mapped to K. Result is in [1, K].
int cyclic_index(long long i, int K);

// Cache indices k, <k+1>_K, ..., <k+L-1>_K (all 1-based).
std::vector<int> access_window(int k, const MaccParams& params);

}  // namespace macc
