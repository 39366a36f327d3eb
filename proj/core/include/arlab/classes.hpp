#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "arlab/finite_class.hpp"
#include "arlab/generator.hpp"
#include "arlab/rates.hpp"

namespace arlab {

/// {f_a : a in {0,1}^H}, f_a(x) = a_{|x|+1} if x is a proper prefix of a,
/// else 0. Ordered lexicographically by a. Requires H >= 2.
FiniteClass make_full_class(std::size_t H, std::size_t cap = kDefaultEnumerationCap);

/// Indicator string of s + A on positions 1..H.
BitString shifted_indicator(const std::vector<std::int64_t>& A, std::int64_t s, std::size_t H);

/// One prefix-sequence generator per (s, A), s in [0, s_max], A a subset of
/// N, reading the indicator of s + A. Order: s ascending, then A by bitmask
/// ascending where bit j selects the j-th smallest element of N. Throws
/// HorizonTooSmall if max(N) + s_max > H.
FiniteClass make_shifted_subset_class(const IntervalSet& N, std::size_t s_max, std::size_t H,
                                      std::size_t cap = kDefaultEnumerationCap);

/// Relocates part i (1-based) behind the prefix 0^i 1; strings with no such
/// prefix map to 0. One generator per tuple, odometer order with the last
/// part varying fastest.
FiniteClass make_product_class(const std::vector<FiniteClass>& parts, std::size_t cap = kDefaultEnumerationCap);

/// normalize -> rate_to_set -> shifted-subset class -> product of r(1) copies.
FiniteClass make_taxonomy_class(const RateTable& r, std::size_t s_max, std::size_t H,
                                std::size_t cap = kDefaultEnumerationCap);

Generator make_linear_generator(const LinearParams& p, std::size_t H);

/// All integer (w_1..w_d, b) with entries in [-bound, bound]; odometer order
/// with w_1 most significant and b fastest.
FiniteClass enumerate_linear_class(std::size_t d, std::int64_t weight_bound, std::size_t H,
                                   std::size_t cap = kDefaultEnumerationCap);

/// {f_b : b in {0,1}^{k_max}}, lexicographic in b.
FiniteClass make_parity_class(std::size_t k_max, std::size_t H, std::size_t cap = kDefaultEnumerationCap);

/// One branch generator per root-to-leaf branch of the perfect binary tree of
/// depth D whose internal node i (breadth-first, 1-based) is labeled 0^i.
/// Branches ordered lexicographically by their direction string. Requires
/// H >= 2^D.
FiniteClass make_atdim_example_class(std::size_t D, std::size_t H, std::size_t cap = kDefaultEnumerationCap);

/// Prompts 0^1, ..., 0^K.
std::vector<BitString> chain_domain(std::size_t K);

/// Prompts 0^i 1 0^t for i = 1..copies (outer) and t = 1..K: the chain
/// domain of every part of a product class.
std::vector<BitString> relocated_chain_domain(std::size_t copies, std::size_t K);

/// Parameters under which the taxonomy class realizes its lower bound on
/// relocated_chain_domain(r(1), chain_length) for every T <= T_max: each part
/// is F(N) with N = rate_to_set(normalize_rate(r)), chain_length = max(N),
/// part horizon max(N) + max(s_max, T_max) + 1.
struct TaxonomyLayout {
  IntervalSet N;
  std::size_t copies = 0;
  std::size_t chain_length = 0;
  std::size_t part_horizon = 0;

  /// Plain chain when there is a single copy (the class is then not a
  /// product), relocated chains otherwise.
  std::vector<BitString> domain() const;
};
TaxonomyLayout taxonomy_layout(const RateTable& r, std::size_t s_max, std::size_t T_max);

/// Q_k = 0^k 1.
inline BitString parity_query(std::size_t k) { return zeros_then_one(k); }

}  // namespace arlab
