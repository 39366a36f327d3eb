#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "arlab/bits.hpp"
#include "arlab/finite_class.hpp"
#include "arlab/learners.hpp"
#include "arlab/rational.hpp"
#include "arlab/rng.hpp"

namespace arlab {

/// Finite distribution over prompts with exact probabilities.
class Distribution {
 public:
  /// Throws std::invalid_argument unless the support is non-empty and
  /// distinct and the probabilities are positive and sum to exactly 1.
  Distribution(std::vector<BitString> support, std::vector<Rational> probs);
  static Distribution uniform(std::vector<BitString> support);

  const std::vector<BitString>& support() const noexcept { return support_; }
  const std::vector<Rational>& probs() const noexcept { return probs_; }
  std::size_t size() const noexcept { return support_.size(); }
  std::size_t max_length() const noexcept;

  /// Index into the support. Exact: one integer draw below the common
  /// denominator of the probabilities.
  std::size_t sample_index(Rng& rng) const;

 private:
  std::vector<BitString> support_;
  std::vector<Rational> probs_;
  std::vector<std::int64_t> cumulative_;  // numerators over denominator_
  std::int64_t denominator_ = 1;
};

enum class Mode { e2e, cot };
enum class LearnerId { erm_e2e, cot_compress, linear_stable };

const char* to_string(Mode mode) noexcept;
const char* to_string(LearnerId id) noexcept;
/// Throw std::invalid_argument on unknown names.
Mode parse_mode(const std::string& s);
LearnerId parse_learner(const std::string& s);
/// The mode a learner is trained in: erm_e2e sees final answers, the others
/// whole traces.
Mode mode_of(LearnerId id) noexcept;

struct TrialConfig {
  const FiniteClass* F = nullptr;
  Distribution D = Distribution::uniform({BitString{}});
  /// Fixed target; drawn uniformly from F with the trial's seed when empty.
  std::optional<std::size_t> target;
  std::size_t T = 1;
  LearnerId learner = LearnerId::erm_e2e;
  std::size_t m = 0;
  std::uint64_t seed = 0;
  BoostingOptions boosting;
  /// Window length for linear_stable.
  std::size_t linear_d = 0;
};

struct TrialResult {
  std::size_t target = 0;
  Rational population_error;
  std::optional<std::size_t> kernel_size;
  double wall_time_ms = 0;
};

/// Throws std::invalid_argument on an inconsistent config (missing class,
/// target out of range, T = 0, prompts past the horizon, linear_d = 0 for
/// linear_stable).
void validate(const TrialConfig& c);

/// Draws the target (unless fixed) and then m prompts i.i.d. from D, both
/// from Rng(c.seed), so a smaller m trains on a prefix of a larger m's
/// sample. Labels by the target per the learner's mode, trains, and returns
/// the exact end-to-end error over the support of D.
TrialResult run_trial(const TrialConfig& c);

/// Runs trials 0..R-1 with seeds derive_seed(c.seed, r), on up to `jobs`
/// threads. Results are in trial order regardless of jobs.
std::vector<TrialResult> run_trials(const TrialConfig& c, std::size_t R, std::size_t jobs = 1);

struct SampleComplexity {
  std::size_t m_hat = 0;
  /// Under TargetPolicy::worst_case, the first target attaining m_hat.
  std::optional<std::size_t> target;
  /// Failure rate (fraction of trials with error > epsilon) at each m tried.
  std::map<std::size_t, Rational> failure_rate;
  Rational failure_at_m_hat() const { return failure_rate.at(m_hat); }
};

/// per_trial: each trial uses c.target, or draws one from its seed.
/// worst_case: m_hat is the maximum over every member of the class taken as
/// a fixed target, i.e. the "for every target" sample complexity on D.
enum class TargetPolicy { per_trial, worst_case };

const char* to_string(TargetPolicy p) noexcept;
TargetPolicy parse_target_policy(const std::string& s);

struct EstimateOptions {
  std::size_t R = 100;
  TargetPolicy targets = TargetPolicy::per_trial;
  std::size_t m_cap = 4096;
  std::size_t jobs = 1;
};

/// Smallest m on the grid 0, 1, 2, 4, ... (then bisection between the last
/// failing and first passing size) whose failure rate over R trials is at
/// most delta. Trials share seeds across m (and across targets). Requires
/// R >= 50; throws Unlearnable if m_cap fails.
SampleComplexity estimate_sample_complexity(const TrialConfig& c, const Rational& epsilon, const Rational& delta,
                                            const EstimateOptions& options = {});

struct SweepRow {
  std::size_t T = 0;
  Mode mode = Mode::e2e;
  std::size_t m_hat = 0;
  Rational failure_rate;
};

/// estimate_sample_complexity for each T, in the given order.
std::vector<SweepRow> sweep_T(const TrialConfig& base, const std::vector<std::size_t>& Ts, const Rational& epsilon,
                              const Rational& delta, const EstimateOptions& options = {});

struct ParityExperimentOptions {
  std::size_t k_max = 8;
  std::size_t n = 4;
  std::size_t R = 200;
  std::uint64_t seed = 0;
  /// Odd generation length.
  std::size_t T = 3;
  BoostingOptions boosting;
};

struct ParityStatistics {
  std::size_t support_size = 0;  // 2n, or k_max when n = 0
  std::vector<Rational> errors;
  /// Per trial: support indices missing from the training sample, and how
  /// many of those the learner gets wrong.
  std::vector<std::size_t> unseen;
  std::vector<std::size_t> bad;
  /// Trials with error >= 1/4, as a fraction of R.
  double frequency = 0;
  /// Sign test of bad - unseen/2 over trials (ties dropped).
  std::size_t above = 0;
  std::size_t below = 0;
  double sign_test_p = 1;
};

/// Uniform target b, uniform D over Q_1..Q_{2n}, n training prompts, CoT
/// compression learner, exact error. Throws std::invalid_argument if T is
/// even or 2n > k_max.
ParityStatistics parity_lower_bound_experiment(const ParityExperimentOptions& options);

/// Two-sided exact sign test p-value for `above` successes against `below`.
double sign_test_p_value(std::size_t above, std::size_t below);

}  // namespace arlab
