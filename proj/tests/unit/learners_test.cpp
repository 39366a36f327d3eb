#include <gtest/gtest.h>

#include "arlab/classes.hpp"
#include "arlab/errors.hpp"
#include "arlab/evolution.hpp"
#include "arlab/learners.hpp"
#include "arlab/max_margin.hpp"
#include "arlab/random_instances.hpp"
#include "arlab/samples.hpp"

using namespace arlab;

namespace {

CotSample one_example(const char* x, const char* y) {
  CotSample S(std::string(y).size());
  S.push_back({BitString::parse(x), BitString::parse(y)});
  return S;
}

FiniteClass zero_one(std::size_t H) {
  return FiniteClass({Generator::constant(Bit::zero, H), Generator::constant(Bit::one, H)}, H);
}

BinaryExample ex(const char* x, int y) { return {BitString::parse(x), to_bit(y != 0), std::nullopt}; }

}  // namespace

TEST(Inflate, Example) {
  const BinarySample U = inflate(one_example("0", "101"));
  ASSERT_EQ(U.size(), 3U);
  EXPECT_EQ(U[0].x, "0"_bits);
  EXPECT_EQ(U[0].y, Bit::one);
  EXPECT_EQ(U[1].x, "01"_bits);
  EXPECT_EQ(U[1].y, Bit::zero);
  EXPECT_EQ(U[2].x, "010"_bits);
  EXPECT_EQ(U[2].y, Bit::one);
  for (const auto& e : U) EXPECT_EQ(e.origin, std::optional<std::size_t>(0));
}

TEST(Inflate, SizeAndIdentityAtOneStep) {
  Rng rng(31);
  const FiniteClass F = random_small_class(16, rng);
  for (int i = 0; i < 50; ++i) {
    const std::size_t T = 1 + rng.below(4);
    const std::size_t m = rng.below(6);
    const CotSample S = random_realizable_sample(F[rng.below(F.size())], m, T, 6, rng);
    const BinarySample U = inflate(S);
    EXPECT_EQ(U.size(), m * T);
    if (T == 1) {
      for (std::size_t j = 0; j < m; ++j) {
        EXPECT_EQ(U[j].x, S[j].x);
        EXPECT_EQ(U[j].y, S[j].y[0]);
      }
    }
  }
}

TEST(Inflate, ConsistencyEquivalence) {
  Rng rng(32);
  for (int i = 0; i < 60; ++i) {
    const FiniteClass F = random_small_class(12, rng);
    const std::size_t T = 1 + rng.below(4);
    const std::size_t m = rng.below(5);
    // Label with one member, then test every member against both views.
    const CotSample S = random_realizable_sample(F[rng.below(F.size())], m, T, 6, rng);
    const BinarySample U = inflate(S);
    for (const auto& f : F) EXPECT_EQ(consistent(f, U), cot_consistent(f, S));
  }
}

TEST(Deflate, Examples) {
  CotSample S(1);
  for (const char* x : {"0", "1", "00", "01"}) S.push_back({BitString::parse(x), "1"_bits});
  const BinarySample U = inflate(S);
  EXPECT_TRUE(deflate({}, S).empty());
  EXPECT_EQ(deflate({U[3]}, S), S.subset({3}));
  EXPECT_THROW(deflate({ex("0", 1)}, S), OriginMissing);

  Rng rng(33);
  for (int i = 0; i < 100; ++i) {
    const CotSample R = random_realizable_sample(Generator::constant(Bit::one, 12), 1 + rng.below(6), 3, 6, rng);
    const BinarySample UR = inflate(R);
    BinarySample pick;
    for (const auto& e : UR) {
      if (rng.coin()) pick.push_back(e);
    }
    EXPECT_LE(deflate(pick, R).size(), pick.size());
  }
}

TEST(Erm, Examples) {
  const FiniteClass F = zero_one(4);
  EXPECT_EQ(erm_index(F, {}), 0U);
  EXPECT_EQ(erm_index(F, {ex("", 1)}), 1U);
  EXPECT_THROW(erm_index(F, {ex("", 1), ex("0", 0)}), NotRealizable);
}

TEST(Erm, ConsistentWithSupersetsFromTheSameTarget) {
  Rng rng(34);
  for (int i = 0; i < 50; ++i) {
    const FiniteClass F = random_small_class(12, rng);
    const Generator& target = F[rng.below(F.size())];
    const CotSample S = random_realizable_sample(target, 6, 3, 6, rng);
    const BinarySample U = inflate(S);
    BinarySample part;
    for (const auto& e : U) {
      if (rng.coin()) part.push_back(e);
    }
    const Generator& h = erm(F, U);
    EXPECT_TRUE(consistent(h, part));
    EXPECT_TRUE(consistent(h, U));
  }
}

TEST(Majority, Votes) {
  const Generator z = Generator::constant(Bit::zero, 8);
  const Generator o = Generator::constant(Bit::one, 8);
  EXPECT_EQ(MajorityHypothesis({z, z, o}).cot("1"_bits, 3), "000"_bits);
  EXPECT_EQ(MajorityHypothesis({z, o}).cot(BitString{}, 2), "00"_bits);  // ties go to 0
  const Generator f = Generator::prefix_sequence("0110"_bits, 8);
  EXPECT_EQ(MajorityHypothesis({f}).cot("0"_bits, 3), cot_trace(f, "0"_bits, 3));
  EXPECT_THROW(MajorityHypothesis({}), std::invalid_argument);
}

TEST(CotCompress, SingletonClass) {
  const FiniteClass F({Generator::constant(Bit::one, 12)}, 12);
  const CotSample S = one_example("01", "111");
  const CompressedCot c = cot_compress(F, S, 1);
  EXPECT_EQ(c.rounds(), 1U);
  EXPECT_TRUE(c.kernel.empty());
  EXPECT_TRUE(c.side_info[0].empty());
  EXPECT_EQ(cot_reconstruct(F, c).cot("01"_bits, 3), "111"_bits);
}

TEST(CotCompress, RoundTripsOnShiftedSubsetClass) {
  const FiniteClass F = make_shifted_subset_class(IntervalSet({1, 3, 4}), 16, 32);
  Rng rng(35);
  for (int i = 0; i < 40; ++i) {
    const Generator& target = F[rng.below(F.size())];
    const std::size_t T = 1 + rng.below(4);
    const CotSample S = random_realizable_sample(target, rng.below(21), T, 12, rng);
    const std::uint64_t seed = rng.next_u64();
    const CompressedCot c = cot_compress(F, S, seed);
    const MajorityHypothesis h = cot_reconstruct(F, c);
    for (const auto& e : S) EXPECT_EQ(h.cot(e.x, T), e.y);
    // Kernel is a sub-sample and every index list addresses it.
    for (const auto& k : c.kernel) EXPECT_NE(std::find(S.begin(), S.end(), k), S.end());
    for (const auto& round : c.side_info) {
      if (c.s > 0) {
        EXPECT_LE(round.size(), c.s);
      }
      for (std::size_t p : round) EXPECT_LT(p, c.kernel.size());
    }
    EXPECT_EQ(cot_compress(F, S, seed), c);
  }
}

TEST(CotCompress, NonRealizableFails) {
  CotSample S(1);
  S.push_back({"0"_bits, "1"_bits});
  S.push_back({"0"_bits, "0"_bits});
  EXPECT_THROW(cot_compress(zero_one(4), S, 1), Error);
}

TEST(MaxMargin, OneDimensionalThreshold) {
  const MaxMarginResult r = max_margin({ex("0", 0), ex("1", 1)}, 1);
  // w x + b with margin 1 at both points: w = 2, b = -1, threshold 1/2.
  EXPECT_EQ(r.params.w, std::vector<Rational>{Rational(2)});
  EXPECT_EQ(r.params.b, Rational(-1));
  EXPECT_EQ(r.support_positions, (std::vector<std::size_t>{0, 1}));
}

TEST(MaxMargin, DuplicatesDoNotMatter) {
  const BinarySample A{ex("01", 1), ex("10", 0), ex("00", 0)};
  const BinarySample B{ex("01", 1), ex("10", 0), ex("01", 1), ex("00", 0), ex("10", 0)};
  EXPECT_EQ(max_margin(A, 2).params, max_margin(B, 2).params);
}

TEST(MaxMargin, EdgeCases) {
  const MaxMarginResult none = max_margin({}, 2);
  EXPECT_EQ(none.params.b, Rational(-1));
  EXPECT_TRUE(none.support.empty());
  const MaxMarginResult pos = max_margin({ex("11", 1), ex("0", 1)}, 2);
  EXPECT_EQ(pos.params.b, Rational(1));
  EXPECT_EQ(pos.support.size(), 1U);
  EXPECT_THROW(max_margin({ex("1", 1), ex("01", 0)}, 1), NotSeparable);
  // XOR of the last two bits is not linearly separable.
  EXPECT_THROW(max_margin({ex("00", 0), ex("01", 1), ex("10", 1), ex("11", 0)}, 2), NotSeparable);
}

TEST(MaxMargin, SeparatesAndIsStableUnderDeletions) {
  Rng rng(36);
  for (int i = 0; i < 200; ++i) {
    const std::size_t d = 1 + rng.below(3);
    const Generator f = make_linear_generator(random_linear_params(d, 3, rng), 16);
    BinarySample A;
    for (std::size_t k = 0, m = rng.below(12); k < m; ++k) {
      const BitString x = random_bits(rng.below(6), rng);
      A.push_back({x, f(x), std::nullopt});
    }
    const MaxMarginResult r = max_margin(A, d);
    EXPECT_LE(r.support.size(), d + 1);
    for (const auto& e : A) EXPECT_EQ(eval_linear(r.params, e.x), e.y);
    for (std::size_t j = 0; j < A.size(); ++j) {
      if (std::binary_search(r.support_positions.begin(), r.support_positions.end(), j)) continue;
      BinarySample less = A;
      less.erase(less.begin() + static_cast<std::ptrdiff_t>(j));
      EXPECT_EQ(max_margin(less, d).params, r.params);
    }
  }
}

TEST(StableCompression, Examples) {
  const CotSample S = one_example("1", "1");
  EXPECT_EQ(stable_compress_cot(S, 1), S);
  const LinearParams p = stable_reconstruct_cot(S, 1);
  EXPECT_EQ(cot_trace(Generator::linear(p, 8), "1"_bits, 1), "1"_bits);
}

TEST(StableCompression, KernelRoundTripAndStability) {
  Rng rng(37);
  for (int i = 0; i < 150; ++i) {
    const std::size_t d = 1 + rng.below(3);
    const std::size_t T = 1 + rng.below(3);
    const Generator f = make_linear_generator(random_linear_params(d, 3, rng), 16);
    const CotSample S = random_realizable_sample(f, rng.below(16), T, 8, rng);
    const CotSample K = stable_compress_cot(S, d);
    EXPECT_LE(K.size(), d + 1);
    const Generator h = Generator::linear(stable_reconstruct_cot(K, d), 16);
    for (const auto& e : S) EXPECT_EQ(cot_trace(h, e.x, T), e.y);
    // The full sample reconstructs to the same separator as its kernel.
    EXPECT_EQ(stable_reconstruct_cot(S, d), stable_reconstruct_cot(K, d));
    for (std::size_t j = 0; j < S.size(); ++j) {
      if (std::find(K.begin(), K.end(), S[j]) != K.end()) continue;
      EXPECT_EQ(stable_compress_cot(S.without(j), d), K);
    }
  }
}
