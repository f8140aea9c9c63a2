#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "json.hpp"

// Numeric checks of the sliding-window subset entropy inequality on explicit
// joint distributions. Variables are 0-based here; entropies are in bits.
namespace macc::entropy {

inline constexpr std::size_t kMaxOutcomes = std::size_t(1) << 16;
inline constexpr double kNormalizationTol = 1e-12;
inline constexpr double kDefaultTol = 1e-9;

// Dense joint pmf over Y_0..Y_{K-1}. Outcome index is row-major with Y_0 the
// most significant digit.
class JointPmf {
 public:
  // Throws DomainError on a bad shape, a negative entry, a product alphabet
  // above kMaxOutcomes, or a total that is not 1 within kNormalizationTol.
  JointPmf(std::vector<int> alphabet_sizes, std::vector<double> probs);

  // Uniform on the simplex: normalized i.i.d. Exp(1) weights.
  static JointPmf random(std::vector<int> alphabet_sizes, std::mt19937_64& rng);

  int K() const { return static_cast<int>(alphabets_.size()); }
  const std::vector<int>& alphabet_sizes() const { return alphabets_; }
  const std::vector<double>& probs() const { return probs_; }
  std::size_t outcomes() const { return probs_.size(); }

  // Digit of variable `var` in outcome `index`.
  int value(std::size_t index, int var) const;

 private:
  std::vector<int> alphabets_;
  std::vector<std::size_t> strides_;
  std::vector<double> probs_;
};

// H of the marginal over `subset` (duplicates ignored). Empty or
// out-of-range subsets throw DomainError.
double marginal_entropy(const JointPmf& pmf, std::vector<int> subset);

// (1/s) sum_{i} H(Y_i, ..., Y_{i+s-1 mod K}), 1 <= s <= K.
double window_entropy_sum(const JointPmf& pmf, int s);

struct WindowReport {
  std::vector<double> sequence;  // sequence[s-1] = window_entropy_sum(s)
  std::vector<double> margins;   // margins[s-1] = sequence[s-1] - sequence[s]
  double min_margin = 0.0;
  std::vector<int> failures;  // s with margin < -tol

  bool ok() const { return failures.empty(); }
};

WindowReport check_sliding_window(const JointPmf& pmf, double tol = kDefaultTol);

struct ConditionalReport {
  // sequence[p-1] = (1/p) sum_k H(Z window of length p starting at k | W)
  std::vector<double> sequence;
  double joint = 0.0;  // H(Z_1..Z_K | W)
  std::vector<double> margins;  // sequence[p-1] - joint
  double min_margin = 0.0;
  std::vector<int> failures;  // p with margin < -tol

  bool ok() const { return failures.empty(); }
};

// The last variable of `pmf` is the conditioner W; the others are Z_1..Z_K.
// Conditional entropies are averages over W = w of unconditional window sums
// of the conditional distribution.
ConditionalReport check_conditional_window(const JointPmf& pmf, double tol = kDefaultTol);

struct BatchFailure {
  int trial = 0;
  std::string kind;  // "sliding", "conditional", "joint"
  int s = 0;
  double margin = 0.0;
};

struct BatchReport {
  int K = 0;
  int alphabet = 0;
  int trials = 0;
  std::uint64_t seed = 0;
  double tol = kDefaultTol;
  std::vector<double> sequence;  // mean over trials of window_entropy_sum(s)
  double min_margin = 0.0;
  double conditional_min_margin = 0.0;
  double max_joint_error = 0.0;  // max |window_entropy_sum(K) - H(Y_1..Y_K)|
  std::vector<BatchFailure> failures;

  bool ok() const { return failures.empty(); }
};

// `trials` random pmfs over K variables (and K+1 for the conditional form),
// every alphabet of size `alphabet`. Deterministic in `seed`.
BatchReport run_batch(int K, int alphabet, int trials, std::uint64_t seed, double tol = kDefaultTol);

nlohmann::ordered_json batch_to_json(const BatchReport& report);

}  // namespace macc::entropy
