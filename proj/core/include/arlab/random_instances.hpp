#pragma once

#include <cstddef>
#include <cstdint>

#include "arlab/bits.hpp"
#include "arlab/finite_class.hpp"
#include "arlab/generator.hpp"
#include "arlab/patterns.hpp"
#include "arlab/rng.hpp"
#include "arlab/samples.hpp"
#include "arlab/trees.hpp"

namespace arlab {

/// Seeded random inputs shared by the verification suites, the tests and
/// the benchmarks.

/// Every node above `depth` gets both children with probability p_both and
/// otherwise one child on a fair-coin side, so all leaves sit at `depth`.
BinaryTree random_tree(std::size_t depth, double p_both, Rng& rng);

BitString random_bits(std::size_t length, Rng& rng);

/// Length uniform in [0, max_length]; with probability 1/2 the string f
/// generates from the empty prompt (the only prompts on which many classes
/// say anything), otherwise uniform bits.
BitString random_prompt_for(const Generator& f, std::size_t max_length, Rng& rng);

/// m prompts from random_prompt_for, labeled with f's length-T traces.
/// Requires max_length + T <= f.horizon().
CotSample random_realizable_sample(const Generator& f, std::size_t m, std::size_t T, std::size_t max_length,
                                   Rng& rng);

/// Integer weights and bias in [-bound, bound].
LinearParams random_linear_params(std::size_t d, std::int64_t bound, Rng& rng);

/// 2 to 10 generators of mixed kinds (prefix sequences, small linear
/// windows, constants, parity) over horizon H >= 4.
FiniteClass random_small_class(std::size_t H, Rng& rng);

/// `size` distinct prompts of length <= max_length, drawn with
/// random_prompt_for against random members of F. Requires enough distinct
/// strings to exist.
Domain random_domain(const FiniteClass& F, std::size_t size, std::size_t max_length, Rng& rng);

}  // namespace arlab
