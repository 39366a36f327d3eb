#include "arlab/suites.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "arlab/classes.hpp"
#include "arlab/errors.hpp"
#include "arlab/evolution.hpp"
#include "arlab/harness.hpp"
#include "arlab/learners.hpp"
#include "arlab/leveled.hpp"
#include "arlab/max_margin.hpp"
#include "arlab/patterns.hpp"
#include "arlab/random_instances.hpp"
#include "arlab/rates.hpp"
#include "arlab/shattering.hpp"

namespace arlab {
namespace {

template <class Body>
Check timed(std::string name, Body&& body) {
  Check c;
  c.name = std::move(name);
  const auto start = std::chrono::steady_clock::now();
  try {
    std::ostringstream detail;
    c.passed = body(detail);
    c.detail = detail.str();
  } catch (const std::exception& e) {
    c.passed = false;
    c.detail = std::string("exception: ") + e.what();
  }
  c.wall_time_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return c;
}

std::string join(const std::vector<std::size_t>& v) {
  std::ostringstream out;
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
  return out.str();
}

constexpr std::uint64_t kCotStream = 1;
constexpr std::uint64_t kLinearStream = 2;
constexpr std::uint64_t kGrowthStream = 3;
constexpr std::uint64_t kSauerStream = 4;
constexpr std::uint64_t kParityStream = 5;

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"lemmas", "compression", "parity", "sauer"};
  return names;
}

std::vector<Check> run_suite(const std::string& name, std::uint64_t seed) {
  if (name == "lemmas") return lemma_suite(seed);
  if (name == "compression") return compression_suite(seed);
  if (name == "parity") return parity_suite(seed);
  if (name == "sauer") return sauer_suite(seed);
  throw std::invalid_argument("unknown suite '" + name + "'");
}

std::vector<Check> lemma_suite(std::uint64_t seed) {
  std::vector<Check> out;

  out.push_back(timed("interval_density_identity", [](std::ostream& d) {
    const IntervalSet N({1, 3, 4});
    const FiniteClass F = make_shifted_subset_class(N, 16, 32);
    const Domain D = chain_domain(8);
    std::vector<std::size_t> vc;
    std::vector<std::size_t> density;
    for (std::size_t T = 1; T <= 6; ++T) {
      vc.push_back(vc_dimension(restrict_e2e(F, D, T)));
      density.push_back(static_cast<std::size_t>(interval_density(N, T)));
    }
    d << "vc=" << join(vc) << " density=" << join(density);
    return vc == density;
  }));

  out.push_back(timed("full_class_vc_equals_T", [](std::ostream& d) {
    const FiniteClass F = make_full_class(16);
    const Domain D = chain_domain(10);
    std::vector<std::size_t> vc;
    std::vector<std::size_t> expected;
    for (std::size_t T = 1; T <= 5; ++T) {
      vc.push_back(vc_dimension(restrict_e2e(F, D, T)));
      expected.push_back(T);
    }
    d << "vc=" << join(vc);
    return vc == expected;
  }));

  out.push_back(timed("rate_round_trip_sqrt", [](std::ostream& d) {
    std::vector<std::int64_t> values;
    for (std::int64_t T = 1; T <= 64; ++T) {
      values.push_back(static_cast<std::int64_t>(std::ceil(std::sqrt(static_cast<long double>(T)))));
    }
    const RateTable r(values);
    const IntervalSet N = rate_to_set(r);
    std::size_t mismatches = 0;
    for (std::size_t T = 1; T <= 64; ++T) mismatches += interval_density(N, T) != r(T) ? 1 : 0;
    d << "N=" << N.to_string() << " mismatches=" << mismatches;
    return mismatches == 0;
  }));

  out.push_back(timed("product_additivity", [](std::ostream& d) {
    const FiniteClass part = make_shifted_subset_class(IntervalSet({1, 3}), 4, 12);
    const FiniteClass product = make_product_class({part, part});
    const Domain single = chain_domain(6);
    const Domain relocated = relocated_chain_domain(2, 6);
    const std::size_t base_part = vc_dimension(restrict_base(part, single));
    const std::size_t base_product = vc_dimension(restrict_base(product, relocated));
    const std::size_t e2e_part = vc_dimension(restrict_e2e(part, single, 2));
    const std::size_t e2e_product = vc_dimension(restrict_e2e(product, relocated, 2));
    d << "base " << base_product << " vs 2x" << base_part << ", e2e(T=2) " << e2e_product << " vs 2x" << e2e_part;
    return base_product == 2 * base_part && e2e_product == 2 * e2e_part;
  }));

  out.push_back(timed("taxonomy_sandwich", [](std::ostream& d) {
    const RateTable r({2, 2, 2, 4});
    const TaxonomyLayout layout = taxonomy_layout(r, 4, 4);
    const FiniteClass F = make_taxonomy_class(r, 4, layout.part_horizon);
    const Domain D = layout.domain();
    bool ok = true;
    std::vector<std::size_t> vc;
    for (std::size_t T = 1; T <= 4; ++T) {
      const std::size_t v = vc_dimension(restrict_e2e(F, D, T));
      vc.push_back(v);
      const auto lo = static_cast<std::size_t>(r(T));
      ok = ok && v >= lo && v <= lo + static_cast<std::size_t>(r(1));
    }
    d << "vc=" << join(vc) << " rate=" << r.to_string();
    return ok;
  }));

  out.push_back(timed("atdim_example", [](std::ostream& d) {
    const std::size_t depth = 4;
    const FiniteClass F = make_atdim_example_class(depth, 32);
    const Domain labels = chain_domain((std::size_t{1} << depth) - 1);
    Domain prompts = labels;
    prompts.insert(prompts.begin(), BitString{});
    const std::size_t vc = vc_dimension(restrict_base(F, labels));
    const std::size_t atdim = atdim_realized(F, prompts, 6);
    const LittlestoneResult L = littlestone_dimension(F, labels);
    std::size_t max_branches = 0;
    bool branch_law = true;
    for (std::size_t T = 2; T <= 6; ++T) {
      for (const auto& x : prompts) {
        const std::size_t b = realized_trace_tree(F, x, T).branches.size();
        max_branches = std::max(max_branches, b);
        branch_law = branch_law && b <= T * T;
      }
    }
    d << "vc=" << vc << " atdim=" << atdim << " littlestone=" << L.value << " max_branches=" << max_branches;
    return vc == 1 && atdim == 1 && L.value >= depth && branch_law;
  }));

  out.push_back(timed("parity_even_vc_zero", [](std::ostream& d) {
    const FiniteClass F = make_parity_class(8, 16);
    Domain D;
    for (std::size_t k = 1; k <= 8; ++k) D.push_back(parity_query(k));
    const std::size_t v2 = vc_dimension(restrict_e2e(F, D, 2));
    const std::size_t v4 = vc_dimension(restrict_e2e(F, D, 4));
    const std::size_t v3 = vc_dimension(restrict_e2e(F, D, 3));
    d << "vc(T=2)=" << v2 << " vc(T=4)=" << v4 << " vc(T=3)=" << v3;
    return v2 == 0 && v4 == 0 && v3 == 8;
  }));

  out.push_back(timed("arl_bound_atdim_example", [](std::ostream& d) {
    const FiniteClass F = make_atdim_example_class(3, 40);
    const ArlCheck c = arl_bound_check(F, chain_domain(7), 32);
    d << "vc_e2e=" << c.vc_e2e << " rhs=" << c.rhs << " gated=" << c.gated;
    return c.holds;
  }));

  out.push_back(timed("growth_inequalities", [seed](std::ostream& d) {
    const GrowthStats g = growth_inequalities(seed, 50);
    d << g.comparisons << " comparisons, " << g.violations << " violations" << g.first_failure;
    return g.violations == 0;
  }));

  return out;
}

RoundTripStats cot_round_trips(std::uint64_t seed, std::size_t trials) {
  const FiniteClass F = make_shifted_subset_class(IntervalSet({1, 3, 4}), 16, 32);
  RoundTripStats s;
  for (std::size_t i = 0; i < trials; ++i) {
    const std::uint64_t trial_seed = derive_seed(derive_seed(seed, kCotStream), i);
    Rng rng(trial_seed);
    const Generator& target = F[rng.below(F.size())];
    const auto m = static_cast<std::size_t>(rng.below(21));
    const auto T = static_cast<std::size_t>(1 + rng.below(4));
    const CotSample S = random_realizable_sample(target, m, T, 12, rng);
    ++s.trials;
    bool ok = true;
    try {
      const CompressedCot c = cot_compress(F, S, trial_seed);
      s.max_kernel = std::max(s.max_kernel, c.kernel.size());
      const MajorityHypothesis h = cot_reconstruct(F, c);
      for (const auto& e : S) ok = ok && h.cot(e.x, T) == e.y;
    } catch (const Error& e) {
      ok = false;
    }
    if (!ok) {
      if (s.failures == 0) s.first_failure = " (first at trial " + std::to_string(i) + ")";
      ++s.failures;
    }
  }
  return s;
}

LinearStats linear_round_trips(std::uint64_t seed, std::size_t trials) {
  const std::size_t H = 16;
  LinearStats s;
  auto fail = [&s](std::size_t i, const char* what) {
    if (s.first_failure.empty()) s.first_failure = std::string(" (first: ") + what + " at trial " + std::to_string(i) + ")";
  };
  for (std::size_t i = 0; i < trials; ++i) {
    Rng rng(derive_seed(derive_seed(seed, kLinearStream), i));
    const auto d = static_cast<std::size_t>(1 + rng.below(3));
    const Generator target = Generator::linear(random_linear_params(d, 3, rng), H);
    const auto m = static_cast<std::size_t>(rng.below(16));
    const auto T = static_cast<std::size_t>(1 + rng.below(3));
    const CotSample S = random_realizable_sample(target, m, T, 8, rng);
    ++s.trials;
    try {
      const MaxMarginResult mm = max_margin(inflate(S), d);
      std::vector<std::size_t> kernel_pos;
      for (const auto& e : mm.support) kernel_pos.push_back(*e.origin);
      std::sort(kernel_pos.begin(), kernel_pos.end());
      kernel_pos.erase(std::unique(kernel_pos.begin(), kernel_pos.end()), kernel_pos.end());
      const CotSample K = stable_compress_cot(S, d);
      if (K.size() > d + 1 || K != S.subset(kernel_pos)) {
        ++s.kernel_violations;
        fail(i, "kernel size");
      }
      const Generator h = Generator::linear(stable_reconstruct_cot(K, d), H);
      if (!cot_consistent(h, S)) {
        ++s.round_trip_failures;
        fail(i, "round trip");
      }
      for (std::size_t j = 0; j < S.size(); ++j) {
        if (std::binary_search(kernel_pos.begin(), kernel_pos.end(), j)) continue;
        ++s.deletions_checked;
        if (stable_compress_cot(S.without(j), d) != K) {
          ++s.stability_violations;
          fail(i, "stability");
        }
      }
    } catch (const Error& e) {
      ++s.round_trip_failures;
      fail(i, e.what());
    }
  }
  return s;
}

GrowthStats growth_inequalities(std::uint64_t seed, std::size_t classes) {
  const std::size_t H = 8;
  GrowthStats g;
  auto check = [&g](bool ok, const std::string& what) {
    ++g.comparisons;
    if (!ok) {
      if (g.violations == 0) g.first_failure = " (first: " + what + ")";
      ++g.violations;
    }
  };
  for (std::size_t c = 0; c < classes; ++c) {
    Rng rng(derive_seed(derive_seed(seed, kGrowthStream), c));
    const FiniteClass F = random_small_class(H, rng);
    const Domain D = random_domain(F, 6, 4, rng);
    ++g.classes;
    const PatternSet base = restrict_base(F, D);
    const std::size_t vc_base = vc_dimension(base);
    for (std::size_t T = 1; T <= 3; ++T) {
      const PatternSet cot = restrict_cot(F, D, T);
      const PatternSet first = first_bit_projection(cot, T);
      const PatternSet e2e = restrict_e2e(F, D, T);
      const std::size_t vc_e2e = vc_dimension(e2e);
      const std::size_t nat = natarajan_dimension(cot);
      const std::string where = "class " + std::to_string(c) + ", T = " + std::to_string(T);
      check(first.rows == base.rows, "first-bit projection differs from base patterns, " + where);
      for (std::size_t m = 0; m <= D.size(); ++m) {
        const std::size_t g_first = growth_function(first, m);
        const std::size_t g_cot = growth_function(cot, m);
        check(g_first <= g_cot, "projection growth above trace growth, " + where + ", m = " + std::to_string(m));
        if (m == 0) continue;
        const auto two_em = [m](std::size_t dim) { return ssp_bound(m, 2, dim); };
        check(static_cast<long double>(growth_function(base, m)) <= two_em(vc_base),
              "base growth above (2em)^(2VC), " + where + ", m = " + std::to_string(m));
        check(static_cast<long double>(growth_function(e2e, m)) <= two_em(vc_e2e),
              "e2e growth above (2em)^(2VC), " + where + ", m = " + std::to_string(m));
        check(static_cast<long double>(g_cot) <= ssp_bound(m, cot.label_count, nat),
              "trace growth above (e m |Y|)^(2 Nat), " + where + ", m = " + std::to_string(m));
      }
    }
  }
  return g;
}

SauerStats sauer_random_trees(std::uint64_t seed, std::size_t trees, std::size_t depth) {
  SauerStats s;
  for (std::size_t i = 0; i < trees; ++i) {
    Rng rng(derive_seed(derive_seed(seed, kSauerStream), i));
    const double p_both = 0.1 + 0.8 * rng.unit();
    const BinaryTree t = random_tree(depth, p_both, rng);
    const std::size_t d = leveled_subtree_depth(t);
    ++s.trees;
    s.max_leaves = std::max(s.max_leaves, t.leaf_count());
    s.max_depth_found = std::max(s.max_depth_found, d);
    if (!leaf_count_bound_check(t, d)) ++s.violations;
  }
  return s;
}

std::vector<Check> compression_suite(std::uint64_t seed, std::size_t cot_trials, std::size_t linear_trials) {
  std::vector<Check> out;
  out.push_back(timed("cot_compression_round_trip", [&](std::ostream& d) {
    const RoundTripStats s = cot_round_trips(seed, cot_trials);
    d << s.trials << " samples, " << s.failures << " failures, max kernel " << s.max_kernel << s.first_failure;
    return s.failures == 0;
  }));
  out.push_back(timed("linear_stable_compression", [&](std::ostream& d) {
    const LinearStats s = linear_round_trips(seed, linear_trials);
    d << s.trials << " samples, kernel " << s.kernel_violations << ", stability " << s.stability_violations << " of "
      << s.deletions_checked << " deletions, round trip " << s.round_trip_failures << s.first_failure;
    return s.kernel_violations == 0 && s.stability_violations == 0 && s.round_trip_failures == 0;
  }));
  return out;
}

std::vector<Check> parity_suite(std::uint64_t seed) {
  std::vector<Check> out;
  out.push_back(timed("parity_even_vc_zero", [](std::ostream& d) {
    const FiniteClass F = make_parity_class(8, 16);
    Domain D;
    for (std::size_t k = 1; k <= 8; ++k) D.push_back(parity_query(k));
    const std::size_t v2 = vc_dimension(restrict_e2e(F, D, 2));
    const std::size_t v4 = vc_dimension(restrict_e2e(F, D, 4));
    d << "vc(T=2)=" << v2 << " vc(T=4)=" << v4;
    return v2 == 0 && v4 == 0;
  }));
  ParityStatistics stats;
  out.push_back(timed("parity_lower_bound_frequency", [&](std::ostream& d) {
    ParityExperimentOptions o;
    o.seed = derive_seed(seed, kParityStream);
    stats = parity_lower_bound_experiment(o);
    d << "frequency of error >= 1/4: " << stats.frequency << " (n = 4, m = 8, R = 200)";
    return stats.frequency >= 0.4;
  }));
  out.push_back(timed("parity_bad_count_symmetry", [&](std::ostream& d) {
    d << stats.above << " above, " << stats.below << " below half, sign test p = " << stats.sign_test_p;
    return stats.sign_test_p >= 0.01;
  }));
  out.push_back(timed("parity_no_information", [&](std::ostream& d) {
    ParityExperimentOptions o;
    o.n = 0;
    o.seed = derive_seed(seed, kParityStream + 1);
    const ParityStatistics s = parity_lower_bound_experiment(o);
    d << "frequency with n = 0: " << s.frequency;
    return s.frequency >= 0.9;
  }));
  return out;
}

std::vector<Check> sauer_suite(std::uint64_t seed, std::size_t trees) {
  std::vector<Check> out;
  out.push_back(timed("leaf_count_bound_random_trees", [&](std::ostream& d) {
    const SauerStats s = sauer_random_trees(seed, trees);
    d << s.trees << " trees of depth 10, " << s.violations << " violations, max leaves " << s.max_leaves
      << ", max leveled depth " << s.max_depth_found;
    return s.violations == 0;
  }));
  out.push_back(timed("leaf_count_bound_tight_on_perfect_trees", [](std::ostream& d) {
    bool ok = true;
    for (std::size_t T = 0; T <= 10; ++T) {
      const BinaryTree t = BinaryTree::perfect(T);
      const std::size_t depth = leveled_subtree_depth(t);
      ok = ok && depth == T && t.leaf_count() == binomial_prefix_sum(T, depth);
    }
    d << "perfect trees of depth 0..10";
    return ok;
  }));
  return out;
}

}  // namespace arlab
