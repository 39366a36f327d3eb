#pragma once

#include <cstddef>

#include "arlab/finite_class.hpp"
#include "arlab/patterns.hpp"

namespace arlab {

/// Largest k such that some k coordinates carry all 2^k sub-patterns.
/// Searches k = 1, 2, ... with coordinate subsets in lexicographic order,
/// pruning any prefix that is not itself shattered, and stops at the first
/// k with no shattered subset. Requires binary patterns.
std::size_t vc_dimension(const PatternSet& P);

/// Largest k admitting coordinates c_1..c_k and label pairs a_j != b_j such
/// that every mixture (a or b per coordinate) is realized by some row.
std::size_t natarajan_dimension(const PatternSet& P);

/// VC dimension of the transposed evaluation matrix of F on D.
std::size_t dual_vc_dimension(const FiniteClass& F, const Domain& D);

/// Max over m-subsets of coordinates of the number of distinct projections.
std::size_t growth_function(const PatternSet& P, std::size_t m);

struct LittlestoneResult {
  std::size_t value = 0;
  /// The search stopped at depth_cap; the true dimension may be larger.
  bool truncated = false;
};

/// Exact min(Littlestone dimension, depth_cap) of a binary pattern set:
/// min-max recursion over version spaces, memoized on their bitsets.
LittlestoneResult littlestone_dimension(const PatternSet& P, std::size_t depth_cap = 12);
LittlestoneResult littlestone_dimension(const FiniteClass& F, const Domain& D, std::size_t depth_cap = 12);

/// (e * m * labels)^(2 * dim), evaluated in long double.
long double ssp_bound(std::size_t m, std::size_t labels, std::size_t dim);

}  // namespace arlab
