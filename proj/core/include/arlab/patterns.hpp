#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "arlab/bits.hpp"
#include "arlab/finite_class.hpp"

namespace arlab {

/// Ordered list of distinct prompts.
using Domain = std::vector<BitString>;

/// Throws std::invalid_argument on duplicate prompts.
void validate_domain(const Domain& D);

/// Distinct label vectors induced on a domain. Labels are small integers in
/// [0, label_count); a length-T trace is stored as its big-endian integer
/// value, so its first bit is the most significant one. Rows are sorted.
struct PatternSet {
  std::size_t width = 0;
  std::uint32_t label_count = 2;
  std::vector<std::vector<std::uint32_t>> rows;

  /// Sorts and removes duplicate rows.
  static PatternSet from_rows(std::size_t width, std::uint32_t label_count,
                              std::vector<std::vector<std::uint32_t>> rows);

  std::size_t size() const noexcept { return rows.size(); }
  bool binary() const noexcept { return label_count <= 2; }
  /// Keeps only the given coordinates, in the given order.
  PatternSet project(const std::vector<std::size_t>& coords) const;
  /// Rows become columns. Only meaningful for binary patterns.
  PatternSet transposed() const;
};

/// (f(x))_{x in D} for f in F.
PatternSet restrict_base(const FiniteClass& F, const Domain& D);
/// (last bit of the length-T trace from x)_{x in D}.
PatternSet restrict_e2e(const FiniteClass& F, const Domain& D, std::size_t T);
/// (length-T trace from x)_{x in D}; requires T <= 24.
PatternSet restrict_cot(const FiniteClass& F, const Domain& D, std::size_t T);
/// First generated bit of each trace label of a restrict_cot result.
PatternSet first_bit_projection(const PatternSet& cot, std::size_t T);

/// Raw evaluation matrix: entry [g][j] = f_g(D[j]) (not deduplicated).
std::vector<std::vector<std::uint32_t>> base_matrix(const FiniteClass& F, const Domain& D);

}  // namespace arlab
