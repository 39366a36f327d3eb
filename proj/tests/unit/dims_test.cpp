#include <gtest/gtest.h>

#include <cmath>

#include "arlab/classes.hpp"
#include "arlab/errors.hpp"
#include "arlab/evolution.hpp"
#include "arlab/leveled.hpp"
#include "arlab/patterns.hpp"
#include "arlab/random_instances.hpp"
#include "arlab/shattering.hpp"
#include "oracles.hpp"

using namespace arlab;

namespace {

PatternSet all_patterns(std::size_t m) {
  std::vector<std::vector<std::uint32_t>> rows;
  for (std::uint64_t v = 0; v < (std::uint64_t{1} << m); ++v) {
    std::vector<std::uint32_t> r;
    for (std::size_t j = 0; j < m; ++j) r.push_back(static_cast<std::uint32_t>((v >> j) & 1U));
    rows.push_back(r);
  }
  return PatternSet::from_rows(m, 2, rows);
}

FiniteClass constants(std::size_t H) {
  return FiniteClass({Generator::constant(Bit::zero, H), Generator::constant(Bit::zero, H)}, H);
}

Domain with_empty(Domain D) {
  D.insert(D.begin(), BitString{});
  return D;
}

}  // namespace

TEST(Restrict, E2eExamples) {
  EXPECT_EQ(restrict_e2e(constants(8), chain_domain(4), 2).size(), 1U);
  EXPECT_EQ(restrict_e2e(make_full_class(8), {"0"_bits, "00"_bits}, 2).size(), 4U);
  const FiniteClass P = make_parity_class(4, 12);
  Domain Q;
  for (std::size_t k = 1; k <= 4; ++k) Q.push_back(parity_query(k));
  const PatternSet even = restrict_e2e(P, Q, 2);
  ASSERT_EQ(even.size(), 1U);
  EXPECT_EQ(even.rows[0], std::vector<std::uint32_t>(4, 0));
  EXPECT_THROW(restrict_e2e(make_full_class(4), {"000"_bits}, 2), HorizonExceeded);
  EXPECT_THROW(validate_domain({"0"_bits, "0"_bits}), std::invalid_argument);
}

TEST(Restrict, CotExamples) {
  const FiniteClass one({Generator::constant(Bit::one, 4)}, 4);
  const PatternSet p = restrict_cot(one, {BitString{}}, 3);
  ASSERT_EQ(p.size(), 1U);
  EXPECT_EQ(p.rows[0], std::vector<std::uint32_t>{7});
}

TEST(Restrict, CotDominatesE2eAndProjectsToBase) {
  Rng rng(21);
  for (int i = 0; i < 40; ++i) {
    const FiniteClass F = random_small_class(10, rng);
    const Domain D = random_domain(F, 5, 4, rng);
    const std::size_t T = 1 + rng.below(4);
    const PatternSet cot = restrict_cot(F, D, T);
    EXPECT_GE(cot.size(), restrict_e2e(F, D, T).size());
    EXPECT_EQ(first_bit_projection(cot, T).rows, restrict_base(F, D).rows);
  }
}

TEST(Vc, Examples) {
  EXPECT_EQ(vc_dimension(restrict_base(constants(4), chain_domain(3))), 0U);
  for (std::size_t m = 0; m <= 6; ++m) EXPECT_EQ(vc_dimension(all_patterns(m)), m);
  const FiniteClass F = make_shifted_subset_class(IntervalSet({1, 3, 4}), 16, 32);
  EXPECT_EQ(vc_dimension(restrict_e2e(F, chain_domain(8), 4)), 3U);
}

TEST(Vc, MatchesOracleAndMonotone) {
  Rng rng(22);
  for (int i = 0; i < 100; ++i) {
    const FiniteClass F = random_small_class(10, rng);
    const Domain D = random_domain(F, 6, 4, rng);
    const PatternSet P = restrict_base(F, D);
    EXPECT_EQ(vc_dimension(P), oracle::vc(P.rows));
    // Dropping a coordinate never increases the dimension.
    std::vector<std::size_t> keep;
    for (std::size_t j = 1; j < D.size(); ++j) keep.push_back(j);
    EXPECT_LE(vc_dimension(P.project(keep)), vc_dimension(P));
    // Nor does dropping a pattern.
    PatternSet fewer = P;
    fewer.rows.pop_back();
    EXPECT_LE(vc_dimension(fewer), vc_dimension(P));
  }
}

TEST(Natarajan, Examples) {
  const FiniteClass two({Generator::constant(Bit::zero, 4), Generator::constant(Bit::one, 4)}, 4);
  EXPECT_EQ(natarajan_dimension(restrict_cot(two, {BitString{}}, 2)), 1U);
  EXPECT_EQ(natarajan_dimension(restrict_cot(constants(6), chain_domain(3), 2)), 0U);
  Rng rng(23);
  for (int i = 0; i < 60; ++i) {
    const FiniteClass F = random_small_class(10, rng);
    const Domain D = random_domain(F, 5, 4, rng);
    const PatternSet base = restrict_base(F, D);
    EXPECT_EQ(natarajan_dimension(base), vc_dimension(base));
    const PatternSet cot = restrict_cot(F, D, 2);
    EXPECT_EQ(natarajan_dimension(cot), oracle::natarajan(cot.rows));
  }
}

TEST(DualVc, Examples) {
  EXPECT_EQ(dual_vc_dimension(constants(4), chain_domain(3)), 0U);
  for (std::size_t m : {2, 3, 4, 5}) {
    const FiniteClass F = make_full_class(m + 1);
    Domain D;
    for (std::size_t j = 0; j < m; ++j) D.push_back(BitString::zeros(j));
    // On 0^0..0^{m-1} the prefix class shows m + 1 patterns: a one-hot
    // vector per position of the first 1, plus all zeros.
    EXPECT_EQ(restrict_base(F, D).size(), m + 1);
    EXPECT_EQ(dual_vc_dimension(F, D), oracle::vc(restrict_base(F, D).transposed().rows));
  }
}

TEST(DualVc, AllLabelingsOfMPoints) {
  for (std::size_t m = 2; m <= 5; ++m) {
    const PatternSet P = all_patterns(m);
    const std::size_t dual = vc_dimension(P.transposed());
    EXPECT_EQ(dual, static_cast<std::size_t>(std::floor(std::log2(double(m)))));
  }
}

TEST(DualVc, BoundedByVc) {
  Rng rng(24);
  for (int i = 0; i < 60; ++i) {
    const FiniteClass F = random_small_class(10, rng);
    const Domain D = random_domain(F, 6, 4, rng);
    const std::size_t vc = vc_dimension(restrict_base(F, D));
    EXPECT_LE(dual_vc_dimension(F, D), std::size_t{1} << (vc + 1));
    EXPECT_EQ(dual_vc_dimension(F, D), oracle::vc(restrict_base(F, D).transposed().rows));
  }
}

TEST(Littlestone, Examples) {
  EXPECT_EQ(littlestone_dimension(constants(4), chain_domain(3)).value, 0U);
  const FiniteClass ex = make_atdim_example_class(3, 16);
  EXPECT_GE(littlestone_dimension(ex, chain_domain(7)).value, 3U);
  const LittlestoneResult capped = littlestone_dimension(all_patterns(5), 2);
  EXPECT_EQ(capped.value, 2U);
  EXPECT_TRUE(capped.truncated);
}

TEST(Littlestone, MatchesOracleAndOrders) {
  Rng rng(25);
  for (int i = 0; i < 60; ++i) {
    const FiniteClass F = random_small_class(10, rng);
    const Domain D = random_domain(F, 5, 4, rng);
    const PatternSet P = restrict_base(F, D);
    const std::size_t L = littlestone_dimension(F, D).value;
    EXPECT_EQ(L, oracle::littlestone(P.rows));
    EXPECT_LE(vc_dimension(P), L);
  }
}

TEST(Growth, Examples) {
  const PatternSet P = all_patterns(4);
  EXPECT_EQ(growth_function(P, 0), 1U);
  for (std::size_t m = 0; m <= 4; ++m) EXPECT_EQ(growth_function(P, m), std::size_t{1} << m);
}

TEST(Growth, OracleAndBounds) {
  Rng rng(26);
  for (int i = 0; i < 40; ++i) {
    const FiniteClass F = random_small_class(10, rng);
    const Domain D = random_domain(F, 5, 4, rng);
    const std::size_t T = 1 + rng.below(3);
    const PatternSet base = restrict_base(F, D);
    const PatternSet cot = restrict_cot(F, D, T);
    const std::size_t vc = vc_dimension(base);
    const std::size_t nat = natarajan_dimension(cot);
    for (std::size_t m = 0; m <= D.size(); ++m) {
      EXPECT_EQ(growth_function(cot, m), oracle::growth(cot.rows, m));
      EXPECT_LE(growth_function(first_bit_projection(cot, T), m), growth_function(cot, m));
      if (m > 0) {
        EXPECT_LE(static_cast<long double>(growth_function(base, m)), std::pow(2.0L * std::exp(1.0L) * m, 2.0L * vc));
        EXPECT_LE(static_cast<long double>(growth_function(cot, m)),
                  std::pow(std::exp(1.0L) * m * std::pow(2.0L, T), 2.0L * nat));
      }
    }
  }
}

TEST(Leveled, Examples) {
  for (std::size_t T = 0; T <= 6; ++T) EXPECT_EQ(leveled_subtree_depth(BinaryTree::perfect(T)), T);
  EXPECT_EQ(leveled_subtree_depth(BinaryTree::from_paths({"0"_bits, "01"_bits, "011"_bits})), 0U);
  // A depth-3 tree whose root splits, then each side runs straight for one
  // level before splitting again: depth-2 leveled subtree on levels 0, 2, 3.
  const BinaryTree fig = BinaryTree::from_paths({"000"_bits, "001"_bits, "100"_bits, "101"_bits});
  EXPECT_EQ(leveled_subtree_depth(fig), 2U);
  // Splits at different levels on the two sides break the leveling.
  const BinaryTree skew = BinaryTree::from_paths({"00"_bits, "01"_bits, "100"_bits, "101"_bits});
  EXPECT_EQ(leveled_subtree_depth(skew), 1U);
  EXPECT_EQ(oracle::leveled_depth(skew), 1U);
  EXPECT_THROW(leveled_subtree_depth(BinaryTree::perfect(5), 4), DepthCapExceeded);
}

TEST(Leveled, AgreesWithExhaustiveOracleOnAllSmallShapes) {
  for (std::size_t n = 1; n <= 9; ++n) {
    for (const auto& paths : oracle::all_shapes(n)) {
      const BinaryTree t = BinaryTree::from_paths(paths);
      ASSERT_EQ(t.size(), n);
      ASSERT_EQ(leveled_subtree_depth(t), oracle::leveled_depth(t));
    }
  }
}

TEST(Leveled, LeafBound) {
  EXPECT_TRUE(leaf_count_bound_check(BinaryTree::perfect(5), 5));
  EXPECT_EQ(binomial_prefix_sum(5, 5), 32U);
  EXPECT_EQ(binomial_prefix_sum(10, 0), 1U);
  EXPECT_EQ(binomial_prefix_sum(10, 3), oracle::binomial_sum(10, 3));
  EXPECT_TRUE(leaf_count_bound_check(BinaryTree::from_paths({"0"_bits, "01"_bits}), 0));
  EXPECT_FALSE(leaf_count_bound_check(BinaryTree::perfect(3), 1));
  Rng rng(27);
  for (int i = 0; i < 100; ++i) {
    const BinaryTree t = random_tree(8, rng.unit(), rng);
    EXPECT_TRUE(leaf_count_bound_check(t, leveled_subtree_depth(t)));
  }
}

TEST(Atdim, RealizedExamples) {
  EXPECT_EQ(atdim_realized(constants(8), chain_domain(3), 4), 0U);
  const FiniteClass ex = make_atdim_example_class(4, 32);
  EXPECT_EQ(atdim_realized(ex, with_empty(chain_domain(15)), 6), 1U);
  EXPECT_EQ(atdim_realized(make_full_class(6), {"0"_bits}, 3), 3U);
}

TEST(Atdim, ShatteredExamples) {
  const FiniteClass ex = make_atdim_example_class(3, 16);
  EXPECT_TRUE(atdim_shattered(ex, BitString{}, 2, 0));
  EXPECT_FALSE(atdim_shattered(ex, BitString{}, 2, 2));
  EXPECT_TRUE(atdim_shattered(make_full_class(6), "0"_bits, 3, 2));
  EXPECT_THROW(atdim_shattered(ex, BitString{}, 9, 1), SearchCapExceeded);
}

TEST(Atdim, RealizedImpliesShattered) {
  Rng rng(28);
  for (int i = 0; i < 40; ++i) {
    const FiniteClass F = random_small_class(10, rng);
    const BitString x = random_bits(rng.below(3), rng);
    const std::size_t T = 1 + rng.below(4);
    const std::size_t d = leveled_subtree_depth(realized_trace_tree(F, x, T).shape());
    EXPECT_TRUE(atdim_shattered(F, x, T, std::min<std::size_t>(d, 4)));
  }
}

TEST(Atdim, BranchCountLaw) {
  Rng rng(29);
  for (int i = 0; i < 40; ++i) {
    const FiniteClass F = random_small_class(12, rng);
    const BitString x = random_bits(rng.below(3), rng);
    for (std::size_t T = 2; T <= 6; ++T) {
      const TraceTrie t = realized_trace_tree(F, x, T);
      const std::size_t a = leveled_subtree_depth(t.shape());
      EXPECT_LE(static_cast<double>(t.branches.size()), std::pow(double(T), 2.0 * a));
    }
  }
}

TEST(ArlBound, Examples) {
  const ArlCheck c = arl_bound_check(constants(40), chain_domain(4), 32);
  EXPECT_TRUE(c.holds);
  EXPECT_EQ(c.vc_e2e, 0U);
  const ArlCheck ex = arl_bound_check(make_atdim_example_class(3, 40), chain_domain(7), 32);
  EXPECT_TRUE(ex.holds);
  EXPECT_FALSE(ex.gated);
  const ArlCheck dense = arl_bound_check(make_shifted_subset_class(IntervalSet({1, 2, 3}), 4, 12), chain_domain(4), 2);
  EXPECT_TRUE(dense.gated);
  EXPECT_TRUE(dense.holds);
}
