#include <cmath>
#include <map>

#include "doctest.h"
#include "macc/entropy.hpp"
#include "macc/errors.hpp"

using namespace macc::entropy;

namespace {

JointPmf uniform(std::vector<int> alphabets) {
  std::size_t n = 1;
  for (int a : alphabets) n *= static_cast<std::size_t>(a);
  return JointPmf(std::move(alphabets), std::vector<double>(n, 1.0 / static_cast<double>(n)));
}

// Y_0 = Y_1 = ... = Y_{K-1}, a single fair bit.
JointPmf copies(int K) {
  std::vector<double> probs(std::size_t(1) << K, 0.0);
  probs.front() = 0.5;
  probs.back() = 0.5;
  return JointPmf(std::vector<int>(K, 2), probs);
}

// Independent of the library: brute-force marginal via an explicit digit
// decode and a std::map, windows summed in reverse order.
double reference_entropy(const JointPmf& pmf, const std::vector<int>& vars) {
  std::map<std::vector<int>, double> marginal;
  for (std::size_t idx = 0; idx < pmf.outcomes(); ++idx) {
    std::vector<int> digits(pmf.K());
    std::size_t rest = idx;
    for (int v = pmf.K() - 1; v >= 0; --v) {
      digits[v] = static_cast<int>(rest % pmf.alphabet_sizes()[v]);
      rest /= pmf.alphabet_sizes()[v];
    }
    std::vector<int> key;
    for (int v : vars) key.push_back(digits[v]);
    marginal[key] += pmf.probs()[idx];
  }
  double h = 0.0;
  for (const auto& [key, p] : marginal) {
    if (p > 0) h -= p * std::log(p) / std::log(2.0);
  }
  return h;
}

double reference_window_sum(const JointPmf& pmf, int s) {
  double total = 0.0;
  for (int i = pmf.K() - 1; i >= 0; --i) {
    std::vector<int> vars;
    for (int j = s - 1; j >= 0; --j) vars.push_back((i + j) % pmf.K());
    total += reference_entropy(pmf, vars);
  }
  return total / s;
}

}  // namespace

TEST_CASE("pmf validation") {
  CHECK_THROWS_AS(JointPmf({2, 2}, {0.5, 0.5, 0.0}), macc::DomainError);
  CHECK_THROWS_AS(JointPmf({2}, {0.7, 0.7}), macc::DomainError);
  CHECK_THROWS_AS(JointPmf({2}, {1.5, -0.5}), macc::DomainError);
  CHECK_THROWS_AS(JointPmf({}, {}), macc::DomainError);
  CHECK_THROWS_AS(JointPmf(std::vector<int>(17, 2), {}), macc::DomainError);
  CHECK_NOTHROW(JointPmf({2}, {1.0, 0.0}));
}

TEST_CASE("marginal entropies") {
  CHECK(marginal_entropy(uniform({2, 2, 2}), {0, 1}) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(marginal_entropy(copies(3), {0, 1, 2}) == doctest::Approx(1.0).epsilon(1e-12));
  // Uniform over {(0,0), (1,1), (1,0)}; Y_0 = 1 with probability 2/3.
  const JointPmf pmf({2, 2}, {1.0 / 3, 0.0, 1.0 / 3, 1.0 / 3});
  CHECK(marginal_entropy(pmf, {0}) == doctest::Approx(0.9182958341).epsilon(1e-10));
  CHECK(marginal_entropy(pmf, {0, 0}) == marginal_entropy(pmf, {0}));
  CHECK(marginal_entropy(JointPmf({2}, {1.0, 0.0}), {0}) == 0.0);
  CHECK_THROWS_AS(marginal_entropy(pmf, {}), macc::DomainError);
  CHECK_THROWS_AS(marginal_entropy(pmf, {2}), macc::DomainError);
}

TEST_CASE("window sums") {
  const JointPmf ind = uniform({2, 2, 2});
  for (int s = 1; s <= 3; ++s) CHECK(window_entropy_sum(ind, s) == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(window_entropy_sum(copies(3), 1) == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(window_entropy_sum(copies(3), 2) == doctest::Approx(1.5).epsilon(1e-12));
  CHECK_THROWS_AS(window_entropy_sum(ind, 0), macc::DomainError);
  CHECK_THROWS_AS(window_entropy_sum(ind, 4), macc::DomainError);

  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const JointPmf pmf = JointPmf::random({2, 3, 2, 2}, rng);
    for (int s = 1; s <= 4; ++s) {
      CHECK(std::abs(window_entropy_sum(pmf, s) - reference_window_sum(pmf, s)) < 1e-12);
    }
  }
}

TEST_CASE("property: entropy bounds and the full window") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    const std::vector<int> alphabets{2, 3, 4};
    const JointPmf pmf = JointPmf::random(alphabets, rng);
    for (std::vector<int> subset : {std::vector<int>{0}, {1, 2}, {0, 2}, {0, 1, 2}}) {
      double cap = 0.0;
      for (int v : subset) cap += std::log2(alphabets[v]);
      const double h = marginal_entropy(pmf, subset);
      CHECK(h >= 0.0);
      CHECK(h <= cap + 1e-12);
    }
    CHECK(std::abs(window_entropy_sum(pmf, 3) - marginal_entropy(pmf, {0, 1, 2})) < 1e-12);
  }
}

TEST_CASE("sliding window check") {
  const auto eq = check_sliding_window(uniform({2, 2, 2, 2}));
  CHECK(eq.ok());
  for (double m : eq.margins) CHECK(std::abs(m) < 1e-12);

  const auto c = check_sliding_window(copies(4));
  CHECK(c.ok());
  CHECK(c.sequence.front() == doctest::Approx(4.0));
  CHECK(c.sequence.back() == doctest::Approx(1.0));

  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 100; ++trial) {
    const auto r = check_sliding_window(JointPmf::random({3, 3, 3, 3}, rng));
    CHECK(r.ok());
    for (std::size_t i = 1; i < r.sequence.size(); ++i) CHECK(r.sequence[i] <= r.sequence[i - 1] + 1e-9);
  }
  CHECK_THROWS_AS(check_sliding_window(copies(2), 0.0), macc::DomainError);
}

TEST_CASE("conditional window check") {
  // W independent of Z: conditional sequence equals the unconditional one.
  std::mt19937_64 rng(3);
  const JointPmf z = JointPmf::random({2, 2, 2}, rng);
  const JointPmf w = JointPmf({2}, {0.3, 0.7});
  std::vector<double> joint;
  for (double pz : z.probs()) {
    for (double pw : w.probs()) joint.push_back(pz * pw);
  }
  const JointPmf product({2, 2, 2, 2}, joint);
  const auto cond = check_conditional_window(product);
  const auto plain = check_sliding_window(z);
  CHECK(cond.ok());
  for (int p = 0; p < 3; ++p) CHECK(std::abs(cond.sequence[p] - plain.sequence[p]) < 1e-12);
  CHECK(std::abs(cond.joint - plain.sequence.back()) < 1e-12);

  // Z_k all equal to W: everything given W is 0.
  const auto same = check_conditional_window(copies(4));
  CHECK(same.ok());
  for (double v : same.sequence) CHECK(std::abs(v) < 1e-12);
  CHECK(std::abs(same.joint) < 1e-12);

  // Chain-rule oracle: H(A | W) = H(A, W) - H(W).
  for (int trial = 0; trial < 50; ++trial) {
    const JointPmf pmf = JointPmf::random({2, 2, 2, 3}, rng);
    const auto r = check_conditional_window(pmf);
    CHECK(r.ok());
    const double hw = marginal_entropy(pmf, {3});
    CHECK(std::abs(r.joint - (marginal_entropy(pmf, {0, 1, 2, 3}) - hw)) < 1e-12);
    double pairs = 0.0;
    for (int k = 0; k < 3; ++k) pairs += marginal_entropy(pmf, {k, (k + 1) % 3, 3}) - hw;
    CHECK(std::abs(r.sequence[1] - pairs / 2) < 1e-12);
  }
  CHECK_THROWS_AS(check_conditional_window(JointPmf({2}, {0.5, 0.5})), macc::DomainError);
}

TEST_CASE("batch runs are deterministic and clean") {
  const BatchReport a = run_batch(3, 2, 200, 1);
  const BatchReport b = run_batch(3, 2, 200, 1);
  CHECK(a.ok());
  CHECK(a.sequence == b.sequence);
  CHECK(a.min_margin == b.min_margin);
  CHECK(batch_to_json(a).dump() == batch_to_json(b).dump());
  CHECK(a.max_joint_error < 1e-12);
  CHECK(run_batch(3, 2, 200, 2).sequence != a.sequence);
  CHECK_THROWS_AS(run_batch(3, 2, 0, 1), macc::DomainError);
  CHECK_THROWS_AS(run_batch(16, 2, 1, 1), macc::DomainError);
  const auto j = batch_to_json(a);
  CHECK(j["alphabets"] == std::vector<int>{2, 2, 2});
  CHECK(j.begin().key() == "K");
}
