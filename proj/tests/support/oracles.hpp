#pragma once

// Slow, independent re-implementations used to cross-check the library.
// Nothing here calls the code under test except for plain data types.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "arlab/bits.hpp"
#include "arlab/trees.hpp"

namespace oracle {

using arlab::Bit;
using arlab::BitString;

/// A next-token rule as a plain function on '0'/'1' text.
using NextBit = std::function<int(const std::string&)>;

std::string text(const BitString& s);

/// Iterates `f` T times from x and returns the generated suffix.
std::string trace(const NextBit& f, std::string x, std::size_t T);

/// f_a of the full class: a[|x|] when x is a proper prefix of a, else 0.
int full(const std::string& a, const std::string& x);

/// Shifted-subset rule: reads the indicator of {s + n : n in A}.
int shifted(const std::vector<int>& A, int s, const std::string& x);

/// Parity rule by string inspection: x = 0^k 1 r with r empty gives b_k
/// (0 past the end of b), r = (10)^j with j >= 1 gives 1, anything else 0.
int parity(const std::string& b, const std::string& x);

/// Integer linear rule over the last d bits, zero padded.
int linear(const std::vector<int>& w, int bias, const std::string& x);

/// |N ∩ [u+1, u+T]| maximized over every u in [0, max N].
int interval_density(const std::vector<int>& N, int T);

using Rows = std::vector<std::vector<std::uint32_t>>;

/// VC dimension by checking every column subset (no pruning).
std::size_t vc(const Rows& rows);

/// Natarajan dimension by checking every column subset and every choice of
/// two labels per column. Only for tiny inputs.
std::size_t natarajan(const Rows& rows);

/// Growth function by checking every m-subset of columns.
std::size_t growth(const Rows& rows, std::size_t m);

/// Littlestone dimension by the plain mistake-tree recursion over row
/// subsets (no memoization).
std::size_t littlestone(const Rows& rows);

/// Deepest perfect binary tree with a level-preserving embedding into t,
/// by backtracking over images of the pattern nodes in breadth-first order.
std::size_t leveled_depth(const arlab::BinaryTree& t);

/// Every tree shape with exactly n nodes, as prefix-closed path sets.
const std::vector<std::vector<BitString>>& all_shapes(std::size_t n);

/// Binomial prefix sum in 64-bit, straight from Pascal's triangle.
std::uint64_t binomial_sum(std::size_t T, std::size_t d);

}  // namespace oracle
