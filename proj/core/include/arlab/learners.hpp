#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "arlab/finite_class.hpp"
#include "arlab/samples.hpp"

namespace arlab {

/// Index of the first member of F consistent with A. Throws NotRealizable.
std::size_t erm_index(const FiniteClass& F, const BinarySample& A);
const Generator& erm(const FiniteClass& F, const BinarySample& A);

/// Prompt with its final answer only.
using E2eSample = std::vector<std::pair<BitString, Bit>>;

/// First member whose T-step final answer matches every label.
std::size_t erm_e2e_index(const FiniteClass& F, const E2eSample& A, std::size_t T);

/// Pointwise majority of the voters as a next-token map; ties resolve to 0.
class MajorityHypothesis {
 public:
  /// Throws std::invalid_argument when voters is empty.
  explicit MajorityHypothesis(std::vector<Generator> voters);

  const std::vector<Generator>& voters() const noexcept { return voters_; }
  std::size_t horizon() const noexcept { return horizon_; }
  Bit operator()(BitView x) const;
  /// The T bits generated by iterating the majority map from x.
  BitString cot(BitView x, std::size_t T) const;
  Bit e2e(BitView x, std::size_t T) const { return cot(x, T).back(); }

 private:
  std::vector<Generator> voters_;
  std::size_t horizon_ = 0;
};

struct BoostingOptions {
  /// Inflated examples drawn per round; 0 means vc_multiplier * max(1, VC),
  /// VC being the base class's VC dimension on the inflated prompts.
  std::size_t s = 0;
  std::size_t vc_multiplier = 12;
  std::size_t n_max = 200;
  std::size_t retry_cap = 20;
  double weight_factor = 2.0;
};

/// Kernel plus explicit index lists: round j used kernel positions
/// side_info[j].
struct CompressedCot {
  CotSample kernel{1};
  std::vector<std::vector<std::size_t>> side_info;
  std::size_t s = 0;

  std::size_t rounds() const noexcept { return side_info.size(); }
  /// Total length of the index lists.
  std::size_t index_list_size() const noexcept;
  /// s * n * log2(m): what a bit-optimal encoding of the side information
  /// would roughly need for an original sample of size m.
  double information_bits(std::size_t m) const noexcept;

  bool operator==(const CompressedCot&) const = default;
};

/// Compresses a realizable CoT sample into subsets A_1..A_n with |A_j| <= s
/// whose ERM hypotheses vote correctly on every inflated example, using
/// multiplicative-weights boosting over the inflated sample. Each round draws
/// s inflated examples by weight, takes the CoT examples they come from,
/// and accepts the ERM hypothesis on their inflation if its weighted error is
/// at most 1/3 (redrawing up to retry_cap times); weights of its mistakes
/// are then multiplied by weight_factor. Throws BoostingFailed when n_max
/// rounds or the retry cap are exhausted.
CompressedCot cot_compress(const FiniteClass& F, const CotSample& S, std::uint64_t seed,
                           const BoostingOptions& options = {});

/// Rebuilds h_j = erm(F, inflate(A_j)) for every round and returns their
/// majority.
MajorityHypothesis cot_reconstruct(const FiniteClass& F, const CompressedCot& c);

}  // namespace arlab
