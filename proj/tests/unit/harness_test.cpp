#include <gtest/gtest.h>

#include "arlab/classes.hpp"
#include "arlab/errors.hpp"
#include "arlab/evolution.hpp"
#include "arlab/harness.hpp"

using namespace arlab;

namespace {

TrialConfig shifted_config(const FiniteClass& F, LearnerId learner, std::size_t T, std::size_t m) {
  TrialConfig c;
  c.F = &F;
  c.D = Distribution::uniform(chain_domain(8));
  c.T = T;
  c.learner = learner;
  c.m = m;
  c.seed = 17;
  return c;
}

}  // namespace

TEST(Distribution, Validation) {
  EXPECT_THROW(Distribution({}, {}), std::invalid_argument);
  EXPECT_THROW(Distribution({"0"_bits, "0"_bits}, {Rational(1, 2), Rational(1, 2)}), std::invalid_argument);
  EXPECT_THROW(Distribution({"0"_bits, "1"_bits}, {Rational(1, 2), Rational(1, 3)}), std::invalid_argument);
  EXPECT_THROW(Distribution({"0"_bits, "1"_bits}, {Rational(1), Rational(0)}), std::invalid_argument);
  EXPECT_NO_THROW(Distribution({"0"_bits, "1"_bits}, {Rational(1, 3), Rational(2, 3)}));
}

TEST(Distribution, SamplingFollowsProbabilities) {
  const Distribution D({"0"_bits, "1"_bits, "00"_bits}, {Rational(1, 6), Rational(1, 3), Rational(1, 2)});
  Rng rng(41);
  std::vector<int> counts(3, 0);
  for (int i = 0; i < 60000; ++i) ++counts[D.sample_index(rng)];
  EXPECT_NEAR(counts[0], 10000, 500);
  EXPECT_NEAR(counts[1], 20000, 600);
  EXPECT_NEAR(counts[2], 30000, 700);
  EXPECT_EQ(D.max_length(), 2U);
}

TEST(Names, RoundTrip) {
  for (LearnerId l : {LearnerId::erm_e2e, LearnerId::cot_compress, LearnerId::linear_stable}) {
    EXPECT_EQ(parse_learner(to_string(l)), l);
  }
  EXPECT_EQ(parse_mode("cot"), Mode::cot);
  EXPECT_EQ(mode_of(LearnerId::erm_e2e), Mode::e2e);
  EXPECT_EQ(mode_of(LearnerId::linear_stable), Mode::cot);
  EXPECT_THROW(parse_learner("svm"), std::invalid_argument);
  EXPECT_EQ(parse_target_policy("worst_case"), TargetPolicy::worst_case);
}

TEST(Trial, CoveringSampleGivesZeroError) {
  const FiniteClass F = make_shifted_subset_class(IntervalSet({1, 3, 4}), 16, 32);
  for (LearnerId l : {LearnerId::erm_e2e, LearnerId::cot_compress}) {
    for (std::size_t T : {1, 4}) {
      TrialConfig c = shifted_config(F, l, T, 400);
      const TrialResult r = run_trial(c);
      EXPECT_TRUE(r.population_error.is_zero()) << to_string(l) << " T=" << T;
    }
  }
}

TEST(Trial, EmptySampleUsesFirstGenerator) {
  const FiniteClass F = make_shifted_subset_class(IntervalSet({1, 3, 4}), 16, 32);
  TrialConfig c = shifted_config(F, LearnerId::erm_e2e, 2, 0);
  c.target = 8 * 3 + 1;  // s = 3, A = {1}: e2e at T = 2 is 1 on 0^2 only
  const TrialResult r = run_trial(c);
  // The first generator is constant 0, wrong exactly where the target says 1.
  std::size_t ones = 0;
  for (const auto& x : chain_domain(8)) ones += to_int(e2e_output(F[*c.target], x, 2));
  EXPECT_EQ(r.population_error, Rational(static_cast<std::int64_t>(ones), 8));
  EXPECT_EQ(r.target, *c.target);
}

TEST(Trial, Reproducible) {
  const FiniteClass F = make_shifted_subset_class(IntervalSet({1, 3, 4}), 16, 32);
  const TrialConfig c = shifted_config(F, LearnerId::cot_compress, 3, 6);
  const auto a = run_trials(c, 20, 1);
  const auto b = run_trials(c, 20, 3);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].population_error, b[i].population_error);
    EXPECT_EQ(a[i].target, b[i].target);
    EXPECT_EQ(a[i].kernel_size, b[i].kernel_size);
  }
}

TEST(Trial, Validation) {
  const FiniteClass F = make_full_class(4);
  TrialConfig c;
  EXPECT_THROW(validate(c), std::invalid_argument);
  c.F = &F;
  c.target = 99;
  EXPECT_THROW(validate(c), std::invalid_argument);
  c.target.reset();
  c.T = 0;
  EXPECT_THROW(validate(c), std::invalid_argument);
  c.T = 1;
  c.learner = LearnerId::linear_stable;
  EXPECT_THROW(validate(c), std::invalid_argument);
}

TEST(Estimate, SingletonClassNeedsNoData) {
  const FiniteClass F({Generator::constant(Bit::one, 16)}, 16);
  TrialConfig c = shifted_config(F, LearnerId::erm_e2e, 2, 0);
  const SampleComplexity s = estimate_sample_complexity(c, Rational(1, 10), Rational(1, 10), {});
  EXPECT_EQ(s.m_hat, 0U);
  EXPECT_TRUE(s.failure_at_m_hat().is_zero());
  EstimateOptions few;
  few.R = 10;
  EXPECT_THROW(estimate_sample_complexity(c, Rational(1, 10), Rational(1, 10), few), std::invalid_argument);
}

TEST(Estimate, CapThrowsUnlearnable) {
  const FiniteClass F = make_shifted_subset_class(IntervalSet({1, 3, 4}), 16, 32);
  TrialConfig c = shifted_config(F, LearnerId::erm_e2e, 4, 0);
  EstimateOptions o;
  o.R = 50;
  o.m_cap = 2;
  EXPECT_THROW(estimate_sample_complexity(c, Rational(1, 100), Rational(1, 100), o), Unlearnable);
}

TEST(Estimate, FailureRateAtEstimateIsWithinDelta) {
  const FiniteClass F = make_shifted_subset_class(IntervalSet({1, 3, 4}), 16, 32);
  TrialConfig c = shifted_config(F, LearnerId::erm_e2e, 2, 0);
  EstimateOptions o;
  o.R = 60;
  const SampleComplexity s = estimate_sample_complexity(c, Rational(1, 10), Rational(1, 10), o);
  EXPECT_LE(s.failure_at_m_hat(), Rational(1, 10));
  if (s.m_hat > 0) {
    // One fewer sample fails (bisection ends next to a failing size).
    ASSERT_TRUE(s.failure_rate.count(s.m_hat - 1));
    EXPECT_GT(s.failure_rate.at(s.m_hat - 1), Rational(1, 10));
  }
}

TEST(Sweep, Shapes) {
  const FiniteClass P = make_parity_class(8, 24);
  TrialConfig c;
  c.F = &P;
  std::vector<BitString> Q;
  for (std::size_t k = 1; k <= 8; ++k) Q.push_back(parity_query(k));
  c.D = Distribution::uniform(Q);
  c.learner = LearnerId::erm_e2e;
  c.seed = 3;
  EstimateOptions o;
  o.R = 50;
  EXPECT_TRUE(sweep_T(c, {}, Rational(1, 10), Rational(1, 10), o).empty());
  const auto rows = sweep_T(c, {2, 4, 6}, Rational(1, 10), Rational(1, 10), o);
  ASSERT_EQ(rows.size(), 3U);
  for (const auto& r : rows) {
    EXPECT_EQ(r.m_hat, 0U);
    EXPECT_EQ(r.mode, Mode::e2e);
  }
}

TEST(Parity, ExperimentStatistics) {
  ParityExperimentOptions o;
  o.R = 60;
  o.seed = 5;
  const ParityStatistics s = parity_lower_bound_experiment(o);
  EXPECT_EQ(s.support_size, 8U);
  EXPECT_EQ(s.errors.size(), 60U);
  for (const auto& e : s.errors) {
    EXPECT_GE(e, Rational(0));
    EXPECT_LE(e, Rational(1));
  }
  for (std::size_t i = 0; i < s.unseen.size(); ++i) EXPECT_LE(s.bad[i], s.unseen[i]);

  o.n = 0;
  const ParityStatistics none = parity_lower_bound_experiment(o);
  EXPECT_EQ(none.support_size, 8U);
  EXPECT_GE(none.frequency, 0.8);

  o.T = 2;
  EXPECT_THROW(parity_lower_bound_experiment(o), std::invalid_argument);
  o.T = 3;
  o.n = 5;
  EXPECT_THROW(parity_lower_bound_experiment(o), std::invalid_argument);
}

TEST(SignTest, PValues) {
  EXPECT_DOUBLE_EQ(sign_test_p_value(0, 0), 1.0);
  EXPECT_NEAR(sign_test_p_value(5, 5), 1.0, 1e-12);
  EXPECT_NEAR(sign_test_p_value(10, 0), 2.0 / 1024.0, 1e-12);
  EXPECT_NEAR(sign_test_p_value(0, 10), 2.0 / 1024.0, 1e-12);
}
