#include "arlab/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <numeric>
#include <set>
#include <stdexcept>
#include <thread>

#include "arlab/classes.hpp"
#include "arlab/errors.hpp"
#include "arlab/evolution.hpp"
#include "arlab/max_margin.hpp"
#include "arlab/samples.hpp"

namespace arlab {

Distribution::Distribution(std::vector<BitString> support, std::vector<Rational> probs)
    : support_(std::move(support)), probs_(std::move(probs)) {
  if (support_.empty()) throw std::invalid_argument("distribution with empty support");
  if (support_.size() != probs_.size()) throw std::invalid_argument("support and probabilities differ in length");
  if (std::set<BitString>(support_.begin(), support_.end()).size() != support_.size()) {
    throw std::invalid_argument("distribution support has duplicate prompts");
  }
  Rational total;
  std::int64_t lcm = 1;
  for (const auto& p : probs_) {
    if (p.sign() <= 0) throw std::invalid_argument("probability " + p.to_string() + " is not positive");
    total += p;
    lcm = std::lcm(lcm, p.den());
  }
  if (total != Rational(1)) throw std::invalid_argument("probabilities sum to " + total.to_string() + ", not 1");
  denominator_ = lcm;
  std::int64_t acc = 0;
  for (const auto& p : probs_) {
    acc += p.num() * (lcm / p.den());
    cumulative_.push_back(acc);
  }
}

Distribution Distribution::uniform(std::vector<BitString> support) {
  const auto n = static_cast<std::int64_t>(support.size());
  if (n == 0) throw std::invalid_argument("distribution with empty support");
  std::vector<Rational> probs(support.size(), Rational(1, n));
  return Distribution(std::move(support), std::move(probs));
}

std::size_t Distribution::max_length() const noexcept {
  std::size_t len = 0;
  for (const auto& x : support_) len = std::max(len, x.size());
  return len;
}

std::size_t Distribution::sample_index(Rng& rng) const {
  const auto u = static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(denominator_)));
  return static_cast<std::size_t>(std::upper_bound(cumulative_.begin(), cumulative_.end(), u) - cumulative_.begin());
}

const char* to_string(Mode mode) noexcept { return mode == Mode::e2e ? "e2e" : "cot"; }

const char* to_string(LearnerId id) noexcept {
  switch (id) {
    case LearnerId::erm_e2e: return "erm_e2e";
    case LearnerId::cot_compress: return "cot_compress";
    case LearnerId::linear_stable: return "linear_stable";
  }
  return "?";
}

Mode parse_mode(const std::string& s) {
  if (s == "e2e") return Mode::e2e;
  if (s == "cot") return Mode::cot;
  throw std::invalid_argument("unknown mode '" + s + "' (expected e2e or cot)");
}

LearnerId parse_learner(const std::string& s) {
  for (LearnerId id : {LearnerId::erm_e2e, LearnerId::cot_compress, LearnerId::linear_stable}) {
    if (s == to_string(id)) return id;
  }
  throw std::invalid_argument("unknown learner '" + s + "' (expected erm_e2e, cot_compress or linear_stable)");
}

Mode mode_of(LearnerId id) noexcept { return id == LearnerId::erm_e2e ? Mode::e2e : Mode::cot; }

void validate(const TrialConfig& c) {
  if (c.F == nullptr || c.F->empty()) throw std::invalid_argument("trial without a class");
  if (c.target && *c.target >= c.F->size()) {
    throw std::invalid_argument("target index " + std::to_string(*c.target) + " outside class of size " +
                                std::to_string(c.F->size()));
  }
  if (c.T == 0) throw std::invalid_argument("T must be at least 1");
  require_horizon(c.D.max_length(), c.T, c.F->horizon());
  if (c.learner == LearnerId::linear_stable && c.linear_d == 0) {
    throw std::invalid_argument("linear_stable needs the window length d");
  }
}

namespace {

struct TrialDetail {
  std::size_t target = 0;
  std::vector<std::size_t> sample;  // support indices, in draw order
  std::vector<Bit> truth;           // per support point
  std::vector<Bit> prediction;
  std::optional<std::size_t> kernel_size;
};

constexpr std::uint64_t kLearnerStream = 0x6c6561726e6572ULL;

TrialDetail detail_trial(const TrialConfig& c) {
  validate(c);
  const FiniteClass& F = *c.F;
  const auto& support = c.D.support();
  Rng rng(c.seed);
  TrialDetail out;
  out.target = c.target ? *c.target : static_cast<std::size_t>(rng.below(F.size()));
  out.sample.reserve(c.m);
  for (std::size_t i = 0; i < c.m; ++i) out.sample.push_back(c.D.sample_index(rng));

  const Generator& target = F[out.target];
  out.truth.reserve(support.size());
  for (const auto& x : support) out.truth.push_back(e2e_output(target, x, c.T));

  if (c.learner == LearnerId::erm_e2e) {
    E2eSample A;
    A.reserve(c.m);
    for (std::size_t i : out.sample) A.emplace_back(support[i], out.truth[i]);
    const Generator& h = F[erm_e2e_index(F, A, c.T)];
    for (const auto& x : support) out.prediction.push_back(e2e_output(h, x, c.T));
    return out;
  }

  CotSample S(c.T);
  for (std::size_t i : out.sample) S.push_back({support[i], cot_trace(target, support[i], c.T)});
  if (c.learner == LearnerId::cot_compress) {
    const CompressedCot compressed = cot_compress(F, S, derive_seed(c.seed, kLearnerStream), c.boosting);
    out.kernel_size = compressed.kernel.size();
    const MajorityHypothesis h = cot_reconstruct(F, compressed);
    for (const auto& x : support) out.prediction.push_back(h.e2e(x, c.T));
  } else {
    const CotSample kernel = stable_compress_cot(S, c.linear_d);
    out.kernel_size = kernel.size();
    const Generator h = Generator::linear(stable_reconstruct_cot(kernel, c.linear_d), F.horizon());
    for (const auto& x : support) out.prediction.push_back(e2e_output(h, x, c.T));
  }
  return out;
}

}  // namespace

TrialResult run_trial(const TrialConfig& c) {
  const auto start = std::chrono::steady_clock::now();
  const TrialDetail d = detail_trial(c);
  TrialResult r;
  r.target = d.target;
  r.kernel_size = d.kernel_size;
  for (std::size_t i = 0; i < d.truth.size(); ++i) {
    if (d.truth[i] != d.prediction[i]) r.population_error += c.D.probs()[i];
  }
  r.wall_time_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::vector<TrialResult> run_trials(const TrialConfig& c, std::size_t R, std::size_t jobs) {
  validate(c);
  std::vector<TrialResult> results(R);
  std::vector<std::exception_ptr> errors(R);
  auto one = [&](std::size_t r) {
    TrialConfig cr = c;
    cr.seed = derive_seed(c.seed, r);
    try {
      results[r] = run_trial(cr);
    } catch (...) {
      errors[r] = std::current_exception();
    }
  };
  jobs = std::max<std::size_t>(1, std::min(jobs, R));
  if (jobs == 1) {
    for (std::size_t r = 0; r < R; ++r) one(r);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> workers;
    workers.reserve(jobs);
    for (std::size_t j = 0; j < jobs; ++j) {
      workers.emplace_back([&] {
        for (std::size_t r = next++; r < R; r = next++) one(r);
      });
    }
    for (auto& w : workers) w.join();
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return results;
}

const char* to_string(TargetPolicy p) noexcept { return p == TargetPolicy::per_trial ? "per_trial" : "worst_case"; }

TargetPolicy parse_target_policy(const std::string& s) {
  if (s == "per_trial") return TargetPolicy::per_trial;
  if (s == "worst_case") return TargetPolicy::worst_case;
  throw std::invalid_argument("unknown target policy '" + s + "' (expected per_trial or worst_case)");
}

namespace {

SampleComplexity estimate_for_config(const TrialConfig& c, const Rational& epsilon, const Rational& delta,
                                     const EstimateOptions& options) {
  SampleComplexity out;
  auto passes = [&](std::size_t m) {
    auto it = out.failure_rate.find(m);
    if (it == out.failure_rate.end()) {
      TrialConfig cm = c;
      cm.m = m;
      std::int64_t failures = 0;
      for (const auto& r : run_trials(cm, options.R, options.jobs)) failures += r.population_error > epsilon ? 1 : 0;
      it = out.failure_rate.emplace(m, Rational(failures, static_cast<std::int64_t>(options.R))).first;
    }
    return it->second <= delta;
  };

  if (passes(0)) return out;
  std::size_t lo = 0;
  std::size_t hi = 1;
  while (!passes(hi)) {
    if (hi >= options.m_cap) {
      throw Unlearnable("failure rate " + out.failure_rate.at(hi).to_string() + " > " + delta.to_string() +
                        " at the sample-size cap " + std::to_string(options.m_cap));
    }
    lo = hi;
    hi = std::min(2 * hi, options.m_cap);
  }
  while (hi - lo > 1) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (passes(mid)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  out.m_hat = hi;
  return out;
}

}  // namespace

SampleComplexity estimate_sample_complexity(const TrialConfig& c, const Rational& epsilon, const Rational& delta,
                                            const EstimateOptions& options) {
  if (options.R < 50) throw std::invalid_argument("need at least 50 trials, got " + std::to_string(options.R));
  validate(c);
  if (options.targets == TargetPolicy::per_trial) return estimate_for_config(c, epsilon, delta, options);
  SampleComplexity worst;
  for (std::size_t i = 0; i < c.F->size(); ++i) {
    TrialConfig ci = c;
    ci.target = i;
    SampleComplexity est = estimate_for_config(ci, epsilon, delta, options);
    if (!worst.target || est.m_hat > worst.m_hat) {
      worst = std::move(est);
      worst.target = i;
    }
  }
  return worst;
}

std::vector<SweepRow> sweep_T(const TrialConfig& base, const std::vector<std::size_t>& Ts, const Rational& epsilon,
                              const Rational& delta, const EstimateOptions& options) {
  std::vector<SweepRow> rows;
  rows.reserve(Ts.size());
  for (std::size_t T : Ts) {
    TrialConfig c = base;
    c.T = T;
    const SampleComplexity est = estimate_sample_complexity(c, epsilon, delta, options);
    rows.push_back({T, mode_of(base.learner), est.m_hat, est.failure_at_m_hat()});
  }
  return rows;
}

double sign_test_p_value(std::size_t above, std::size_t below) {
  const std::size_t n = above + below;
  if (n == 0) return 1.0;
  const std::size_t k = std::min(above, below);
  double tail = 0;
  const double log_half_n = static_cast<double>(n) * std::log(0.5);
  for (std::size_t i = 0; i <= k; ++i) {
    const double log_binom = std::lgamma(static_cast<double>(n) + 1) - std::lgamma(static_cast<double>(i) + 1) -
                             std::lgamma(static_cast<double>(n - i) + 1);
    tail += std::exp(log_binom + log_half_n);
  }
  return std::min(1.0, 2 * tail);
}

ParityStatistics parity_lower_bound_experiment(const ParityExperimentOptions& o) {
  if (o.T % 2 == 0) throw std::invalid_argument("parity experiment needs odd T");
  if (2 * o.n > o.k_max) {
    throw std::invalid_argument("support size 2n = " + std::to_string(2 * o.n) + " exceeds k_max = " +
                                std::to_string(o.k_max));
  }
  ParityStatistics stats;
  stats.support_size = o.n == 0 ? o.k_max : 2 * o.n;
  if (stats.support_size == 0) throw std::invalid_argument("parity experiment needs k_max >= 1");
  const FiniteClass F = make_parity_class(o.k_max, o.k_max + 1 + o.T);
  std::vector<BitString> support;
  for (std::size_t k = 1; k <= stats.support_size; ++k) support.push_back(parity_query(k));

  TrialConfig c;
  c.F = &F;
  c.D = Distribution::uniform(std::move(support));
  c.T = o.T;
  c.learner = LearnerId::cot_compress;
  c.m = o.n;
  c.boosting = o.boosting;

  std::size_t hits = 0;
  const Rational quarter(1, 4);
  for (std::size_t r = 0; r < o.R; ++r) {
    c.seed = derive_seed(o.seed, r);
    const TrialDetail d = detail_trial(c);
    std::vector<bool> seen(stats.support_size, false);
    for (std::size_t i : d.sample) seen[i] = true;
    Rational error;
    std::size_t unseen = 0;
    std::size_t bad = 0;
    for (std::size_t i = 0; i < stats.support_size; ++i) {
      const bool wrong = d.truth[i] != d.prediction[i];
      if (wrong) error += c.D.probs()[i];
      if (!seen[i]) {
        ++unseen;
        bad += wrong ? 1 : 0;
      }
    }
    if (error >= quarter) ++hits;
    if (2 * bad > unseen) ++stats.above;
    if (2 * bad < unseen) ++stats.below;
    stats.errors.push_back(error);
    stats.unseen.push_back(unseen);
    stats.bad.push_back(bad);
  }
  stats.frequency = o.R == 0 ? 0.0 : static_cast<double>(hits) / static_cast<double>(o.R);
  stats.sign_test_p = sign_test_p_value(stats.above, stats.below);
  return stats;
}

}  // namespace arlab
