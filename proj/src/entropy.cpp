#include "macc/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "macc/errors.hpp"

namespace macc::entropy {

namespace {

double shannon(const std::vector<double>& probs) {
  double h = 0.0;
  for (double p : probs) {
    if (p > 0.0) h -= p * std::log2(p);
  }
  return h;
}

std::vector<int> cyclic_window(int start, int length, int K) {
  std::vector<int> vars;
  for (int j = 0; j < length; ++j) vars.push_back((start + j) % K);
  return vars;
}

std::size_t product_alphabet(const std::vector<int>& alphabets) {
  std::size_t total = 1;
  for (int a : alphabets) {
    if (a < 1) throw DomainError("alphabet sizes must be positive");
    total *= static_cast<std::size_t>(a);
    if (total > kMaxOutcomes) throw DomainError("product alphabet exceeds 2^16 outcomes");
  }
  return total;
}

}  // namespace

JointPmf::JointPmf(std::vector<int> alphabet_sizes, std::vector<double> probs)
    : alphabets_(std::move(alphabet_sizes)), probs_(std::move(probs)) {
  if (alphabets_.empty()) throw DomainError("pmf needs at least one variable");
  const std::size_t total = product_alphabet(alphabets_);
  if (probs_.size() != total) throw DomainError("pmf table size does not match alphabets");
  double sum = 0.0;
  for (double p : probs_) {
    if (!(p >= 0.0)) throw DomainError("pmf entries must be non-negative");
    sum += p;
  }
  if (std::abs(sum - 1.0) > kNormalizationTol) throw DomainError("pmf does not sum to 1");
  strides_.assign(alphabets_.size(), 1);
  for (int v = K() - 2; v >= 0; --v) strides_[v] = strides_[v + 1] * alphabets_[v + 1];
}

JointPmf JointPmf::random(std::vector<int> alphabet_sizes, std::mt19937_64& rng) {
  const std::size_t total = product_alphabet(alphabet_sizes);
  std::exponential_distribution<double> exp1(1.0);
  std::vector<double> w(total);
  for (double& x : w) x = exp1(rng);
  const double sum = std::accumulate(w.begin(), w.end(), 0.0);
  for (double& x : w) x /= sum;
  return JointPmf(std::move(alphabet_sizes), std::move(w));
}

int JointPmf::value(std::size_t index, int var) const {
  return static_cast<int>((index / strides_[var]) % static_cast<std::size_t>(alphabets_[var]));
}

double marginal_entropy(const JointPmf& pmf, std::vector<int> subset) {
  if (subset.empty()) throw DomainError("marginal entropy of an empty subset");
  std::sort(subset.begin(), subset.end());
  subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
  if (subset.front() < 0 || subset.back() >= pmf.K()) throw DomainError("variable index out of range");

  std::vector<std::size_t> strides(subset.size(), 1);
  std::size_t cells = 1;
  for (std::size_t i = subset.size(); i-- > 0;) {
    strides[i] = cells;
    cells *= static_cast<std::size_t>(pmf.alphabet_sizes()[subset[i]]);
  }
  std::vector<double> marginal(cells, 0.0);
  const auto& probs = pmf.probs();
  for (std::size_t idx = 0; idx < probs.size(); ++idx) {
    std::size_t cell = 0;
    for (std::size_t i = 0; i < subset.size(); ++i) {
      cell += static_cast<std::size_t>(pmf.value(idx, subset[i])) * strides[i];
    }
    marginal[cell] += probs[idx];
  }
  return shannon(marginal);
}

double window_entropy_sum(const JointPmf& pmf, int s) {
  const int K = pmf.K();
  if (s < 1 || s > K) throw DomainError("window length must lie in [1, K]");
  double total = 0.0;
  for (int i = 0; i < K; ++i) total += marginal_entropy(pmf, cyclic_window(i, s, K));
  return total / s;
}

WindowReport check_sliding_window(const JointPmf& pmf, double tol) {
  if (!(tol > 0.0)) throw DomainError("tolerance must be positive");
  WindowReport report;
  for (int s = 1; s <= pmf.K(); ++s) report.sequence.push_back(window_entropy_sum(pmf, s));
  report.min_margin = 0.0;
  for (int s = 1; s < pmf.K(); ++s) {
    const double margin = report.sequence[s - 1] - report.sequence[s];
    report.margins.push_back(margin);
    if (s == 1 || margin < report.min_margin) report.min_margin = margin;
    if (margin < -tol) report.failures.push_back(s);
  }
  return report;
}

ConditionalReport check_conditional_window(const JointPmf& pmf, double tol) {
  if (!(tol > 0.0)) throw DomainError("tolerance must be positive");
  if (pmf.K() < 2) throw DomainError("conditional check needs at least one Z and the conditioner");
  const int K = pmf.K() - 1;
  const int w_size = pmf.alphabet_sizes().back();
  const std::vector<int> z_alphabets(pmf.alphabet_sizes().begin(), pmf.alphabet_sizes().end() - 1);
  const std::size_t z_cells = pmf.outcomes() / static_cast<std::size_t>(w_size);

  ConditionalReport report;
  report.sequence.assign(K, 0.0);
  // The conditioner is the least significant digit, so a fixed w picks out
  // every w_size-th entry.
  for (int w = 0; w < w_size; ++w) {
    std::vector<double> slice(z_cells);
    double pw = 0.0;
    for (std::size_t z = 0; z < z_cells; ++z) {
      slice[z] = pmf.probs()[z * w_size + w];
      pw += slice[z];
    }
    if (pw <= 0.0) continue;
    for (double& x : slice) x /= pw;
    const JointPmf given(z_alphabets, std::move(slice));
    for (int p = 1; p <= K; ++p) report.sequence[p - 1] += pw * window_entropy_sum(given, p);
    report.joint += pw * marginal_entropy(given, cyclic_window(0, K, K));
  }
  for (int p = 1; p <= K; ++p) {
    const double margin = report.sequence[p - 1] - report.joint;
    report.margins.push_back(margin);
    if (p == 1 || margin < report.min_margin) report.min_margin = margin;
    if (margin < -tol) report.failures.push_back(p);
  }
  return report;
}

BatchReport run_batch(int K, int alphabet, int trials, std::uint64_t seed, double tol) {
  if (K < 1) throw DomainError("K must be positive");
  if (alphabet < 1) throw DomainError("alphabet size must be positive");
  if (trials < 1 || trials > 1'000'000) throw DomainError("trials must lie in [1, 1000000]");
  if (!(tol > 0.0)) throw DomainError("tolerance must be positive");
  product_alphabet(std::vector<int>(K + 1, alphabet));

  BatchReport report;
  report.K = K;
  report.alphabet = alphabet;
  report.trials = trials;
  report.seed = seed;
  report.tol = tol;
  report.sequence.assign(K, 0.0);

  std::mt19937_64 rng(seed);
  bool first = true;
  std::vector<int> all(K);
  std::iota(all.begin(), all.end(), 0);
  for (int trial = 0; trial < trials; ++trial) {
    const JointPmf pmf = JointPmf::random(std::vector<int>(K, alphabet), rng);
    const WindowReport sliding = check_sliding_window(pmf, tol);
    for (int s = 0; s < K; ++s) report.sequence[s] += sliding.sequence[s];
    for (int s : sliding.failures) report.failures.push_back({trial, "sliding", s, sliding.margins[s - 1]});

    const double joint_error = std::abs(sliding.sequence.back() - marginal_entropy(pmf, all));
    report.max_joint_error = std::max(report.max_joint_error, joint_error);
    if (joint_error > kNormalizationTol) report.failures.push_back({trial, "joint", K, joint_error});

    const JointPmf with_w = JointPmf::random(std::vector<int>(K + 1, alphabet), rng);
    const ConditionalReport cond = check_conditional_window(with_w, tol);
    for (int p : cond.failures) report.failures.push_back({trial, "conditional", p, cond.margins[p - 1]});

    if (K > 1) {
      if (first || sliding.min_margin < report.min_margin) report.min_margin = sliding.min_margin;
    }
    if (first || cond.min_margin < report.conditional_min_margin) {
      report.conditional_min_margin = cond.min_margin;
    }
    first = false;
  }
  for (double& v : report.sequence) v /= trials;
  return report;
}

nlohmann::ordered_json batch_to_json(const BatchReport& report) {
  nlohmann::ordered_json root;
  root["K"] = report.K;
  root["alphabets"] = std::vector<int>(report.K, report.alphabet);
  root["seed"] = report.seed;
  root["trials"] = report.trials;
  root["tol"] = report.tol;
  root["sequence"] = report.sequence;
  root["min_margin"] = report.min_margin;
  root["conditional_min_margin"] = report.conditional_min_margin;
  root["max_joint_error"] = report.max_joint_error;
  root["failures"] = nlohmann::ordered_json::array();
  for (const BatchFailure& f : report.failures) {
    nlohmann::ordered_json j;
    j["trial"] = f.trial;
    j["kind"] = f.kind;
    j["s"] = f.s;
    j["margin"] = f.margin;
    root["failures"].push_back(std::move(j));
  }
  return root;
}

}  // namespace macc::entropy
