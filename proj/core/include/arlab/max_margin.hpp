#pragma once

#include <cstddef>
#include <vector>

#include "arlab/generator.hpp"
#include "arlab/samples.hpp"

namespace arlab {

struct MaxMarginResult {
  LinearParams params;
  /// One representative per support point: the first example of the input
  /// (in input order) sitting on that point.
  BinarySample support;
  /// Positions of the representatives in the input, ascending.
  std::vector<std::size_t> support_positions;
};

/// Hard-margin separator of A in the tail encoding x -> (x[-1], ..., x[-d])
/// (zero-padded), together with a smallest support set that determines it.
///
/// Distinct points are indexed by their feature vector. Candidate supports
/// are tried by increasing size and then lexicographically; for each one the
/// equality-constrained problem is solved exactly, and the first candidate
/// whose multipliers are positive and whose hyperplane has functional margin
/// >= 1 on every point wins. All-negative (or empty) samples give w = 0,
/// b = -1 with an empty support; all-positive samples give w = 0, b = 1
/// supported by the smallest point. Throws NotSeparable otherwise.
MaxMarginResult max_margin(const BinarySample& A, std::size_t d);

/// deflate(support of max_margin(inflate(S), d)).
CotSample stable_compress_cot(const CotSample& S, std::size_t d);

/// Separator learned from a kernel; its CoT map is the reconstruction.
LinearParams stable_reconstruct_cot(const CotSample& K, std::size_t d);

}  // namespace arlab
