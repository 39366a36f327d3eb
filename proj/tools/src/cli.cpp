#include "arlab_cli/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "arlab/classes.hpp"
#include "arlab/errors.hpp"
#include "arlab/evolution.hpp"
#include "arlab/harness.hpp"
#include "arlab/learners.hpp"
#include "arlab/leveled.hpp"
#include "arlab/max_margin.hpp"
#include "arlab/patterns.hpp"
#include "arlab/rates.hpp"
#include "arlab/shattering.hpp"
#include "arlab/suites.hpp"
#include "arlab_cli/io.hpp"
#include "arlab_cli/spec_file.hpp"
#include "arlab_cli/svg.hpp"

namespace arlab::cli {
namespace {

std::string ms(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

std::size_t max_length(const Domain& D) {
  std::size_t len = 0;
  for (const auto& x : D) len = std::max(len, x.size());
  return len;
}

// ---------------------------------------------------------------- dims

struct DimsArgs {
  std::string spec;
  std::string domain;
  std::size_t T = 1;
  std::string which = "all";
  std::optional<std::size_t> m;
  std::size_t cap = kDefaultEnumerationCap;
  std::size_t depth_cap = 12;
};

const std::vector<std::string>& dimension_names() {
  static const std::vector<std::string> names{"vc_base",     "vc_e2e",         "natarajan_cot", "dual_vc",
                                              "littlestone", "atdim_realized", "growth_e2e",    "growth_cot"};
  return names;
}

// `all` covers the dimensions; growth values are requested explicitly.
const std::vector<std::string>& all_dimensions() {
  static const std::vector<std::string> names{"vc_base",     "vc_e2e",        "natarajan_cot",
                                              "dual_vc",     "littlestone",   "atdim_realized"};
  return names;
}

int cmd_dims(const DimsArgs& a, std::ostream& out, std::ostream& err) {
  std::vector<std::string> which;
  if (a.which == "all") {
    which = all_dimensions();
  } else {
    for (const auto& w : split(a.which, ',')) {
      const auto& known = dimension_names();
      if (std::find(known.begin(), known.end(), w) == known.end()) {
        throw SpecError("which", "unknown dimension '" + w + "'");
      }
      which.push_back(w);
    }
  }
  if (a.T == 0) throw SpecError("T", "must be at least 1");
  const Domain D = parse_domain(a.domain);
  if (a.m && *a.m > D.size()) throw SpecError("m", "larger than the domain");
  const ClassSpec spec = load_class_spec(a.spec);
  const BuiltClass built = build_class(spec, max_length(D) + a.T, a.cap);
  const FiniteClass& F = built.F;
  const std::size_t m = a.m ? *a.m : D.size();

  out << "dimension,value,wall_time_ms\n";
  for (const auto& w : which) {
    const auto start = std::chrono::steady_clock::now();
    std::size_t value = 0;
    if (w == "vc_base") {
      value = vc_dimension(restrict_base(F, D));
    } else if (w == "vc_e2e") {
      value = vc_dimension(restrict_e2e(F, D, a.T));
    } else if (w == "natarajan_cot") {
      value = natarajan_dimension(restrict_cot(F, D, a.T));
    } else if (w == "dual_vc") {
      value = dual_vc_dimension(F, D);
    } else if (w == "littlestone") {
      const LittlestoneResult L = littlestone_dimension(F, D, a.depth_cap);
      value = L.value;
      if (L.truncated) err << "littlestone: search stopped at depth cap " << a.depth_cap << '\n';
    } else if (w == "atdim_realized") {
      value = atdim_realized(F, D, a.T);
    } else if (w == "growth_e2e") {
      value = growth_function(restrict_e2e(F, D, a.T), m);
    } else if (w == "growth_cot") {
      value = growth_function(restrict_cot(F, D, a.T), m);
    }
    const double elapsed =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    out << w << ',' << value << ',' << ms(elapsed) << '\n';
  }
  return kOk;
}

// ------------------------------------------------------------ taxonomy

struct TaxonomyArgs {
  std::string rate;
  std::optional<std::size_t> t_max;
  std::optional<std::size_t> s_max;
  std::size_t cap = kDefaultEnumerationCap;
};

int cmd_taxonomy(const TaxonomyArgs& a, std::ostream& out, std::ostream&) {
  const auto values = parse_int_list(a.rate, "rate");
  const std::size_t t_max = a.t_max ? *a.t_max : values.size();
  if (t_max == 0 || t_max > values.size()) {
    throw SpecError("Tmax", "must be between 1 and the number of rate values (" + std::to_string(values.size()) + ")");
  }
  const RateTable r(values);
  const std::size_t s_max = a.s_max ? *a.s_max : t_max;
  const TaxonomyLayout layout = taxonomy_layout(r, s_max, t_max);
  const FiniteClass F = make_taxonomy_class(r, s_max, layout.part_horizon, a.cap);
  const Domain D = layout.domain();

  bool all_ok = true;
  out << "T,r,vc_e2e_restricted,lower_ok,upper_ok\n";
  for (std::size_t T = 1; T <= t_max; ++T) {
    const std::size_t vc = vc_dimension(restrict_e2e(F, D, T));
    const auto rT = static_cast<std::size_t>(r(T));
    const bool lower = vc >= rT;
    const bool upper = vc <= rT + static_cast<std::size_t>(r(1));
    all_ok = all_ok && lower && upper;
    out << T << ',' << rT << ',' << vc << ',' << (lower ? "true" : "false") << ',' << (upper ? "true" : "false")
        << '\n';
  }
  return all_ok ? kOk : kCheckFailed;
}

// --------------------------------------------------------------- learn

struct BoostingArgs {
  std::size_t s = 0;
  std::size_t vc_multiplier = 12;
  std::size_t n_max = 200;
  std::size_t retry_cap = 20;

  BoostingOptions options() const {
    BoostingOptions o;
    o.s = s;
    o.vc_multiplier = vc_multiplier;
    o.n_max = n_max;
    o.retry_cap = retry_cap;
    return o;
  }
};

void add_boosting_flags(CLI::App* cmd, BoostingArgs& b) {
  cmd->add_option("--s", b.s, "Examples drawn per boosting round (0: multiplier x VC)");
  cmd->add_option("--vc-multiplier", b.vc_multiplier, "Draw size per unit of VC dimension");
  cmd->add_option("--n-max", b.n_max, "Maximum boosting rounds");
  cmd->add_option("--retry-cap", b.retry_cap, "Redraws per round before giving up");
}

struct LearnArgs {
  std::string spec;
  std::string sample;
  std::string learner;
  std::uint64_t seed = 0;
  std::optional<std::size_t> d;
  std::string domain;
  std::string report;
  std::size_t cap = kDefaultEnumerationCap;
  BoostingArgs boosting;
};

std::size_t window_length(const std::optional<std::size_t>& flag, const BuiltClass& built) {
  if (flag) {
    if (*flag == 0) throw SpecError("d", "must be at least 1");
    return *flag;
  }
  if (built.linear_d) return *built.linear_d;
  throw SpecError("d", "linear_stable needs --d or a linear_grid spec");
}

int cmd_learn(const LearnArgs& a, std::ostream& out, std::ostream& err) {
  const LearnerId learner = parse_learner(a.learner);
  const CotSample S = read_sample_file(a.sample);
  const Domain extra = a.domain.empty() ? Domain{} : parse_domain(a.domain);
  std::size_t longest = max_length(extra);
  for (const auto& e : S) longest = std::max(longest, e.x.size());
  const std::size_t T = S.T();
  const ClassSpec spec = load_class_spec(a.spec);
  const BuiltClass built = build_class(spec, longest + T, a.cap);
  const FiniteClass& F = built.F;

  std::vector<std::pair<std::string, std::string>> report{{"learner", to_string(learner)},
                                                          {"m", std::to_string(S.size())},
                                                          {"T", std::to_string(T)}};
  std::function<BitString(const BitString&)> predict;

  if (learner == LearnerId::erm_e2e) {
    E2eSample A;
    for (const auto& e : S) A.emplace_back(e.x, e.y.back());
    const std::size_t idx = erm_e2e_index(F, A, T);
    const Generator h = F[idx];
    predict = [h, T](const BitString& x) {
      BitString b;
      b.push_back(e2e_output(h, x, T));
      return b;
    };
    report.emplace_back("hypothesis_index", std::to_string(idx));
    report.emplace_back("hypothesis", h.describe());
  } else if (learner == LearnerId::cot_compress) {
    if (!realizable(F, S)) throw NotRealizable("no member of the class reproduces every trace of the sample");
    const CompressedCot c = cot_compress(F, S, a.seed, a.boosting.options());
    const MajorityHypothesis h = cot_reconstruct(F, c);
    predict = [h, T](const BitString& x) { return h.cot(x, T); };
    report.emplace_back("kernel_size", std::to_string(c.kernel.size()));
    report.emplace_back("rounds", std::to_string(c.rounds()));
    report.emplace_back("draw_size", std::to_string(c.s));
    report.emplace_back("index_list_size", std::to_string(c.index_list_size()));
    report.emplace_back("information_bits", format_decimal(c.information_bits(S.size())));
  } else {
    const std::size_t d = window_length(a.d, built);
    const CotSample K = stable_compress_cot(S, d);
    const LinearParams p = stable_reconstruct_cot(K, d);
    const Generator h = Generator::linear(p, F.horizon());
    predict = [h, T](const BitString& x) { return cot_trace(h, x, T); };
    report.emplace_back("kernel_size", std::to_string(K.size()));
    report.emplace_back("d", std::to_string(d));
    report.emplace_back("hypothesis", h.describe());
  }

  std::size_t correct = 0;
  out << "prompt,trace,predicted,correct\n";
  for (const auto& e : S) {
    const BitString y = predict(e.x);
    const bool ok = learner == LearnerId::erm_e2e ? y.back() == e.y.back() : y == e.y;
    correct += ok ? 1 : 0;
    out << csv_bits(e.x) << ',' << csv_bits(e.y) << ',' << csv_bits(y) << ',' << (ok ? 1 : 0) << '\n';
  }
  for (const auto& x : extra) out << csv_bits(x) << ",," << csv_bits(predict(x)) << ",\n";
  report.emplace_back("sample_correct", std::to_string(correct));

  std::ofstream file;
  if (!a.report.empty()) {
    file.open(a.report);
    if (!file) throw SpecError("report", "cannot write '" + a.report + "'");
  }
  std::ostream& rep = a.report.empty() ? err : file;
  rep << "metric,value\n";
  for (const auto& [k, v] : report) rep << k << ',' << csv_text(v) << '\n';
  return correct == S.size() ? kOk : kCheckFailed;
}

// --------------------------------------------------------------- sweep

struct SweepArgs {
  std::string spec;
  std::string domain;
  std::string probs;
  std::string ts;
  std::string learner;
  std::string mode;
  std::string epsilon = "0.1";
  std::string delta = "0.1";
  std::size_t R = 100;
  std::uint64_t seed = 0;
  std::size_t jobs = 1;
  std::string targets = "worst_case";
  std::optional<std::size_t> target;
  std::size_t m_cap = 4096;
  std::optional<std::size_t> d;
  std::string svg;
  std::size_t cap = kDefaultEnumerationCap;
  BoostingArgs boosting;
};

int cmd_sweep(const SweepArgs& a, std::ostream& out, std::ostream&) {
  // Flag validation first.
  const std::vector<std::size_t> Ts = a.ts.empty() ? std::vector<std::size_t>{} : parse_count_list(a.ts, "Ts");
  for (std::size_t T : Ts) {
    if (T == 0) throw SpecError("Ts", "generation lengths must be at least 1");
  }
  std::vector<LearnerId> learners;
  if (!a.learner.empty() && !a.mode.empty()) throw SpecError("learner", "give either --learner or --mode");
  if (!a.learner.empty()) {
    for (const auto& l : split(a.learner, ',')) learners.push_back(parse_learner(l));
  } else if (!a.mode.empty()) {
    for (const auto& m : split(a.mode, ',')) {
      learners.push_back(parse_mode(m) == Mode::e2e ? LearnerId::erm_e2e : LearnerId::cot_compress);
    }
  } else {
    throw SpecError("learner", "give --learner or --mode");
  }
  std::set<Mode> modes;
  for (LearnerId l : learners) {
    if (!modes.insert(mode_of(l)).second) throw SpecError("learner", "at most one learner per mode");
  }
  Rational epsilon;
  Rational delta;
  try {
    epsilon = Rational::parse(a.epsilon);
    delta = Rational::parse(a.delta);
  } catch (const std::exception& e) {
    throw SpecError("epsilon", e.what());
  }
  if (a.R < 50) throw SpecError("R", "at least 50 trials are required");
  EstimateOptions options;
  options.R = a.R;
  options.m_cap = a.m_cap;
  options.jobs = std::max<std::size_t>(1, a.jobs);
  options.targets = a.target ? TargetPolicy::per_trial : parse_target_policy(a.targets);

  Domain D = parse_domain(a.domain);
  const std::size_t T_max = Ts.empty() ? 1 : *std::max_element(Ts.begin(), Ts.end());
  const ClassSpec spec = load_class_spec(a.spec);
  const BuiltClass built = build_class(spec, max_length(D) + T_max, a.cap);

  TrialConfig base;
  base.F = &built.F;
  base.D = a.probs.empty() ? Distribution::uniform(std::move(D))
                           : Distribution(std::move(D), parse_rational_list(a.probs, "probs"));
  base.target = a.target;
  base.seed = a.seed;
  base.boosting = a.boosting.options();

  std::vector<SweepRow> rows;
  for (LearnerId l : learners) {
    TrialConfig c = base;
    c.learner = l;
    if (l == LearnerId::linear_stable) c.linear_d = window_length(a.d, built);
    for (auto& row : sweep_T(c, Ts, epsilon, delta, options)) rows.push_back(row);
  }
  std::stable_sort(rows.begin(), rows.end(), [](const SweepRow& x, const SweepRow& y) {
    return std::pair(x.T, x.mode) < std::pair(y.T, y.mode);
  });

  out << "T,mode,m_hat,failure_rate\n";
  for (const auto& r : rows) {
    out << r.T << ',' << to_string(r.mode) << ',' << r.m_hat << ',' << format_decimal(r.failure_rate.to_double())
        << '\n';
  }
  if (!a.svg.empty()) {
    std::ofstream svg(a.svg);
    if (!svg) throw SpecError("svg", "cannot write '" + a.svg + "'");
    write_sweep_svg(svg, rows, "sample size vs T (eps " + a.epsilon + ", delta " + a.delta + ")");
  }
  return kOk;
}

// -------------------------------------------------------------- verify

struct VerifyArgs {
  std::string suite;
  std::uint64_t seed = 0;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream&) {
  const auto& names = suite_names();
  if (std::find(names.begin(), names.end(), a.suite) == names.end()) {
    throw SpecError("suite", "unknown suite '" + a.suite + "' (expected lemmas, compression, parity or sauer)");
  }
  bool all = true;
  out << "suite,check,status,wall_time_ms,detail\n";
  for (const Check& c : run_suite(a.suite, a.seed)) {
    all = all && c.passed;
    out << a.suite << ',' << c.name << ',' << (c.passed ? "PASS" : "FAIL") << ',' << ms(c.wall_time_ms) << ',' << csv_text(c.detail)
        << '\n';
  }
  return all ? kOk : kCheckFailed;
}

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const SpecError*>(&e) != nullptr) return kParseError;
  if (dynamic_cast<const RateInvalid*>(&e) != nullptr) return kInvalidRate;
  if (dynamic_cast<const EnumerationTooLarge*>(&e) != nullptr || dynamic_cast<const SearchCapExceeded*>(&e) != nullptr ||
      dynamic_cast<const DepthCapExceeded*>(&e) != nullptr || dynamic_cast<const Unlearnable*>(&e) != nullptr) {
    return kCapExceeded;
  }
  if (dynamic_cast<const NotRealizable*>(&e) != nullptr) return kNotRealizable;
  if (dynamic_cast<const HorizonExceeded*>(&e) != nullptr || dynamic_cast<const HorizonTooSmall*>(&e) != nullptr ||
      dynamic_cast<const std::invalid_argument*>(&e) != nullptr) {
    return kParseError;
  }
  return kCheckFailed;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Brute-force experiments on finite classes of autoregressive next-token generators", "arlab"};
  app.require_subcommand(1);

  DimsArgs dims;
  auto* c_dims = app.add_subcommand("dims", "Dimensions of a class restricted to a finite domain");
  c_dims->add_option("spec", dims.spec, "Class-spec JSON file")->required();
  c_dims->add_option("--domain", dims.domain, "chain:K or a comma-separated prompt list")->required();
  c_dims->add_option("--T", dims.T, "Generation length");
  c_dims->add_option("--which", dims.which, "all, or a comma-separated subset of the dimension names");
  c_dims->add_option("--m", dims.m, "Sample size for growth_e2e / growth_cot (default: |domain|)");
  c_dims->add_option("--depth-cap", dims.depth_cap, "Littlestone search depth cap");
  c_dims->add_option("--cap", dims.cap, "Enumeration cap on class size");

  TaxonomyArgs tax;
  auto* c_tax = app.add_subcommand("taxonomy", "Check the e2e VC sandwich for a rate");
  c_tax->add_option("--rate", tax.rate, "r(1),r(2),...")->required();
  c_tax->add_option("--Tmax", tax.t_max, "Largest T (default: number of rate values)");
  c_tax->add_option("--smax", tax.s_max, "Largest shift (default: Tmax)");
  c_tax->add_option("--cap", tax.cap, "Enumeration cap on class size");

  LearnArgs learn;
  auto* c_learn = app.add_subcommand("learn", "Train a learner on a CoT sample and evaluate it");
  c_learn->add_option("spec", learn.spec, "Class-spec JSON file")->required();
  c_learn->add_option("sample", learn.sample, "CSV with columns prompt,trace")->required();
  c_learn->add_option("--learner", learn.learner, "erm_e2e, cot_compress or linear_stable")->required();
  c_learn->add_option("--seed", learn.seed, "Seed for randomized learners");
  c_learn->add_option("--d", learn.d, "Window length for linear_stable");
  c_learn->add_option("--domain", learn.domain, "Extra prompts to predict on");
  c_learn->add_option("--report", learn.report, "Write the kernel report here instead of stderr");
  c_learn->add_option("--cap", learn.cap, "Enumeration cap on class size");
  add_boosting_flags(c_learn, learn.boosting);

  SweepArgs sweep;
  auto* c_sweep = app.add_subcommand("sweep", "Estimated sample complexity as a function of T");
  c_sweep->add_option("spec", sweep.spec, "Class-spec JSON file")->required();
  c_sweep->add_option("--domain", sweep.domain, "Support of D: chain:K or a prompt list")->required();
  c_sweep->add_option("--probs", sweep.probs, "Probabilities of the support points (default uniform)");
  c_sweep->add_option("--Ts", sweep.ts, "Comma-separated generation lengths")->required();
  c_sweep->add_option("--learner", sweep.learner, "Comma-separated learners, at most one per mode");
  c_sweep->add_option("--mode", sweep.mode, "e2e (erm_e2e) and/or cot (cot_compress)");
  c_sweep->add_option("--epsilon", sweep.epsilon, "Error threshold");
  c_sweep->add_option("--delta", sweep.delta, "Allowed failure rate");
  c_sweep->add_option("--R", sweep.R, "Trials per sample size (>= 50)");
  c_sweep->add_option("--seed", sweep.seed, "Master seed");
  c_sweep->add_option("--jobs", sweep.jobs, "Worker threads");
  c_sweep->add_option("--targets", sweep.targets, "worst_case or per_trial");
  c_sweep->add_option("--target", sweep.target, "Fixed target index (implies per_trial)");
  c_sweep->add_option("--m-cap", sweep.m_cap, "Largest sample size tried");
  c_sweep->add_option("--d", sweep.d, "Window length for linear_stable");
  c_sweep->add_option("--svg", sweep.svg, "Also write an SVG chart here");
  c_sweep->add_option("--cap", sweep.cap, "Enumeration cap on class size");
  add_boosting_flags(c_sweep, sweep.boosting);

  VerifyArgs verify;
  auto* c_verify = app.add_subcommand("verify", "Run a property suite");
  c_verify->add_option("--suite", verify.suite, "lemmas, compression, parity or sauer")->required();
  c_verify->add_option("--seed", verify.seed, "Seed for the random instances");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return e.get_exit_code() == 0 ? kOk : kParseError;
  }

  try {
    if (c_dims->parsed()) return cmd_dims(dims, out, err);
    if (c_tax->parsed()) return cmd_taxonomy(tax, out, err);
    if (c_learn->parsed()) return cmd_learn(learn, out, err);
    if (c_sweep->parsed()) return cmd_sweep(sweep, out, err);
    if (c_verify->parsed()) return cmd_verify(verify, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e);
  }
  return kParseError;
}

}  // namespace arlab::cli
