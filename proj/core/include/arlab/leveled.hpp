#pragma once

#include <cstddef>
#include <cstdint>

#include "arlab/finite_class.hpp"
#include "arlab/patterns.hpp"
#include "arlab/trees.hpp"

namespace arlab {

/// Deepest perfect binary tree that embeds in t so that each pattern edge
/// in direction b lands in the b-subtree of the image of its parent and
/// pattern depth i maps to one tree level l_i. Throws DepthCapExceeded if
/// t is deeper than max_depth.
std::size_t leveled_subtree_depth(const BinaryTree& t, std::size_t max_depth = 16);

/// sum_{i <= d} C(T, i), saturating at UINT64_MAX.
std::uint64_t binomial_prefix_sum(std::size_t T, std::size_t d);

/// leaf_count(t) <= sum_{i <= d} C(depth(t), i).
bool leaf_count_bound_check(const BinaryTree& t, std::size_t d);

/// Max over prompts x and T' <= T_max of the leveled depth of the realized
/// trace trie. The realized trie for T' is the truncation of the one for
/// T_max, so only T_max is built.
std::size_t atdim_realized(const FiniteClass& F, const Domain& prompts, std::size_t T_max);

/// Whether the generation tree of x of depth T holds a perfect leveled
/// subtree of depth d every branch of which (internal strings labeled by the
/// direction taken) agrees with some member of F. Requires T <= 8, d <= 4.
/// Throws SearchCapExceeded after `node_budget` search steps.
bool atdim_shattered(const FiniteClass& F, BitView x, std::size_t T, std::size_t d,
                     std::uint64_t node_budget = 50'000'000);

struct ArlCheck {
  bool gated = false;  // T < 20 * ATdim * VC: the bound says nothing
  bool holds = true;
  std::size_t vc_e2e = 0;
  std::size_t vc_base = 0;
  std::size_t atdim = 0;
  double rhs = 0;  // 20 * ATdim * VC * log2(T)
};

/// Compares restricted e2e VC on D at T with 20 * ATdim * VC * log2 T when
/// T >= 20 * ATdim * VC. The base VC is taken over D together with every
/// string on a realized trace from D; ATdim is atdim_realized over D with
/// T' <= min(T, 16).
ArlCheck arl_bound_check(const FiniteClass& F, const Domain& D, std::size_t T);

}  // namespace arlab
