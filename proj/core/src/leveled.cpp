#include "arlab/leveled.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

#include "arlab/errors.hpp"
#include "arlab/evolution.hpp"
#include "arlab/shattering.hpp"

namespace arlab {
namespace {

class LeveledSearch {
 public:
  explicit LeveledSearch(const BinaryTree& t) : t_(t), levels_(t.levels()), stamp_(t.size(), 0) {}

  bool feasible(std::size_t d) {
    const std::size_t depth = levels_.size() - 1;
    for (std::size_t last = d; last <= depth; ++last) {
      const auto& bottom = levels_[last];
      if (bottom.size() < (std::size_t{1} << d)) continue;
      if (d == 0 || extend(d, last, bottom)) return true;
    }
    return false;
  }

 private:
  // `below` holds the nodes at level `lower_level` that can serve as roots
  // of stage-`stage` subtrees. Tries every level for stage-1 above it.
  bool extend(std::size_t stage, std::size_t lower_level, const std::vector<int>& below) {
    std::vector<int> frontier = below;  // nodes at level lvl + 1 with a feasible descendant
    for (std::size_t lvl = lower_level; lvl-- > stage - 1;) {
      const std::uint64_t mark = ++epoch_;
      for (int c : frontier) stamp_[static_cast<std::size_t>(c)] = mark;
      std::vector<int> feasible_here;
      std::vector<int> parents;
      for (int c : frontier) {
        const int p = t_.node(c).parent;
        if (p < 0 || stamp_[static_cast<std::size_t>(p)] == mark + 1) continue;
        stamp_[static_cast<std::size_t>(p)] = mark + 1;
        parents.push_back(p);
        const int c0 = t_.child(p, Bit::zero);
        const int c1 = t_.child(p, Bit::one);
        if (c0 >= 0 && c1 >= 0 && stamp_[static_cast<std::size_t>(c0)] == mark &&
            stamp_[static_cast<std::size_t>(c1)] == mark) {
          feasible_here.push_back(p);
        }
      }
      ++epoch_;
      const std::size_t needed = std::size_t{1} << (stage - 1);
      if (feasible_here.size() >= needed) {
        if (stage == 1) return true;
        std::sort(feasible_here.begin(), feasible_here.end());
        if (extend(stage - 1, lvl, feasible_here)) return true;
      }
      if (parents.empty()) break;
      frontier = std::move(parents);
    }
    return false;
  }

  const BinaryTree& t_;
  std::vector<std::vector<int>> levels_;
  std::vector<std::uint64_t> stamp_;
  std::uint64_t epoch_ = 0;
};

using Bits = std::vector<std::uint64_t>;

bool any_bit(const Bits& b) {
  return std::any_of(b.begin(), b.end(), [](std::uint64_t w) { return w != 0; });
}

class ShatterSearch {
 public:
  ShatterSearch(std::vector<Bits> ones, std::size_t words, std::size_t d, std::uint64_t budget)
      : ones_(std::move(ones)), words_(words), d_(d), budget_(budget) {}

  bool run(const std::vector<std::size_t>& levels, const Bits& all) {
    levels_ = levels;
    const std::size_t l0 = levels[0];
    const std::size_t first = (std::size_t{1} << l0) - 1;
    for (std::size_t o = 0; o < (std::size_t{1} << l0); ++o) {
      if (solve(first + o, 0, all)) return true;
    }
    return false;
  }

 private:
  bool solve(std::size_t v, std::size_t stage, const Bits& V) {
    if (++steps_ > budget_) throw SearchCapExceeded("atdim_shattered exceeded its search budget");
    for (int b = 0; b < 2; ++b) {
      Bits vb(words_);
      for (std::size_t w = 0; w < words_; ++w) vb[w] = b == 1 ? (V[w] & ones_[v][w]) : (V[w] & ~ones_[v][w]);
      if (!any_bit(vb)) return false;
      if (stage + 1 == d_) continue;
      // descendants of child (2v + 1 + b) at level levels_[stage + 1]
      const std::size_t child = 2 * v + 1 + static_cast<std::size_t>(b);
      const std::size_t gap = levels_[stage + 1] - levels_[stage] - 1;
      const std::size_t leftmost = ((child + 1) << gap) - 1;
      bool found = false;
      for (std::size_t u = leftmost; u < leftmost + (std::size_t{1} << gap) && !found; ++u) {
        found = solve(u, stage + 1, vb);
      }
      if (!found) return false;
    }
    return true;
  }

  std::vector<Bits> ones_;
  std::size_t words_;
  std::size_t d_;
  std::uint64_t budget_;
  std::uint64_t steps_ = 0;
  std::vector<std::size_t> levels_;
};

}  // namespace

std::size_t leveled_subtree_depth(const BinaryTree& t, std::size_t max_depth) {
  const std::size_t depth = t.depth();
  if (depth > max_depth) {
    throw DepthCapExceeded("tree depth " + std::to_string(depth) + " exceeds bound " + std::to_string(max_depth));
  }
  LeveledSearch search(t);
  std::size_t best = 0;
  for (std::size_t d = 1; d <= depth; ++d) {
    if (!search.feasible(d)) break;
    best = d;
  }
  return best;
}

std::uint64_t binomial_prefix_sum(std::size_t T, std::size_t d) {
  std::uint64_t total = 0;
  std::uint64_t c = 1;  // C(T, i)
  for (std::size_t i = 0; i <= d && i <= T; ++i) {
    if (total > std::numeric_limits<std::uint64_t>::max() - c) return std::numeric_limits<std::uint64_t>::max();
    total += c;
    // C(T, i+1) = C(T, i) * (T - i) / (i + 1); exact in 128 bits
    const unsigned __int128 next = static_cast<unsigned __int128>(c) * (T - i) / (i + 1);
    if (next > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
    c = static_cast<std::uint64_t>(next);
  }
  return total;
}

bool leaf_count_bound_check(const BinaryTree& t, std::size_t d) {
  return t.leaf_count() <= binomial_prefix_sum(t.depth(), d);
}

std::size_t atdim_realized(const FiniteClass& F, const Domain& prompts, std::size_t T_max) {
  std::size_t best = 0;
  if (T_max == 0) return 0;
  for (const auto& x : prompts) {
    const TraceTrie trie = realized_trace_tree(F, x, T_max);
    best = std::max(best, leveled_subtree_depth(trie.shape(), std::max<std::size_t>(16, T_max)));
  }
  return best;
}

bool atdim_shattered(const FiniteClass& F, BitView x, std::size_t T, std::size_t d, std::uint64_t node_budget) {
  if (T > 8 || d > 4) throw SearchCapExceeded("atdim_shattered is limited to T <= 8 and d <= 4");
  if (d == 0) return !F.empty();
  if (d > T) return false;
  require_horizon(x.size(), T, F.horizon());
  // Internal nodes of the generation tree: heap indices 0 .. 2^T - 2.
  const std::size_t internal = (std::size_t{1} << T) - 1;
  const GenerationTree g = full_generation_tree(x, T - 1);
  std::vector<std::vector<std::uint32_t>> rows;
  rows.reserve(F.size());
  for (const auto& f : F) {
    std::vector<std::uint32_t> row(internal);
    for (std::size_t v = 0; v < internal; ++v) row[v] = static_cast<std::uint32_t>(to_int(f(g.node_strings[v])));
    rows.push_back(std::move(row));
  }
  std::sort(rows.begin(), rows.end());
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
  const std::size_t words = (rows.size() + 63) / 64;
  std::vector<Bits> ones(internal, Bits(words, 0));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t v = 0; v < internal; ++v) {
      if (rows[r][v] != 0) ones[v][r / 64] |= std::uint64_t{1} << (r % 64);
    }
  }
  Bits all(words, 0);
  for (std::size_t r = 0; r < rows.size(); ++r) all[r / 64] |= std::uint64_t{1} << (r % 64);

  ShatterSearch search(std::move(ones), words, d, node_budget);
  // Internal stages sit on strictly increasing levels l_0 < ... < l_{d-1} <= T-1.
  std::vector<std::size_t> levels(d);
  for (std::size_t i = 0; i < d; ++i) levels[i] = i;
  while (true) {
    if (search.run(levels, all)) return true;
    std::size_t i = d;
    while (i > 0 && levels[i - 1] == (T - 1) - (d - i)) --i;
    if (i == 0) return false;
    ++levels[i - 1];
    for (std::size_t j = i; j < d; ++j) levels[j] = levels[j - 1] + 1;
  }
}

ArlCheck arl_bound_check(const FiniteClass& F, const Domain& D, std::size_t T) {
  ArlCheck out;
  out.vc_e2e = vc_dimension(restrict_e2e(F, D, T));
  std::set<BitString> extended(D.begin(), D.end());
  for (const auto& x : D) {
    const TraceTrie trie = realized_trace_tree(F, x, T);
    for (const auto& p : trie.nodes()) {
      if (p.size() < T) extended.insert(x + p.view());
    }
  }
  out.vc_base = vc_dimension(restrict_base(F, Domain(extended.begin(), extended.end())));
  out.atdim = atdim_realized(F, D, std::min<std::size_t>(T, 16));
  const double threshold = 20.0 * static_cast<double>(out.atdim * out.vc_base);
  out.gated = static_cast<double>(T) < threshold;
  out.rhs = threshold * std::log2(static_cast<double>(T));
  out.holds = out.gated || static_cast<double>(out.vc_e2e) <= out.rhs;
  return out;
}

}  // namespace arlab
