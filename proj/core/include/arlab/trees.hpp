#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "arlab/bits.hpp"
#include "arlab/finite_class.hpp"

namespace arlab {

/// Rooted tree with at most one 0-child and one 1-child per node. Node 0 is
/// the root at level 0. This is the common shape behind generation trees,
/// realized trace tries and the random trees used in tests.
class BinaryTree {
 public:
  struct Node {
    std::array<int, 2> child{-1, -1};
    int parent = -1;
    int level = 0;
  };

  BinaryTree() : nodes_(1) {}

  /// Trie of the given strings (prefix-closed; the root is the empty path).
  static BinaryTree from_paths(const std::vector<BitString>& paths);
  static BinaryTree perfect(std::size_t depth);

  /// Returns the existing child if present.
  int add_child(int parent, Bit dir);
  int child(int node, Bit dir) const { return nodes_[static_cast<std::size_t>(node)].child[to_int(dir)]; }
  const Node& node(int i) const { return nodes_[static_cast<std::size_t>(i)]; }
  std::size_t size() const noexcept { return nodes_.size(); }
  /// Largest node level.
  std::size_t depth() const noexcept;
  std::size_t leaf_count() const noexcept;
  bool is_leaf(int i) const { return node(i).child[0] < 0 && node(i).child[1] < 0; }
  /// Directions from the root to node i.
  BitString path(int i) const;
  /// Node ids grouped by level.
  std::vector<std::vector<int>> levels() const;

 private:
  std::vector<Node> nodes_;
};

/// Complete binary tree of all continuations of `prompt` by at most `depth`
/// bits. Nodes are stored in heap order: root 0, children of i at 2i+1 (bit 0)
/// and 2i+2 (bit 1).
struct GenerationTree {
  BitString prompt;
  std::size_t depth = 0;
  std::vector<BitString> node_strings;

  std::size_t node_count() const noexcept { return node_strings.size(); }
  std::vector<BitString> leaves() const;
  BinaryTree shape() const { return BinaryTree::perfect(depth); }
};

/// Requires depth <= 24.
GenerationTree full_generation_tree(BitView prompt, std::size_t depth);

/// Prefix tree of the traces a class realizes from one prompt. Branches are
/// sorted and distinct; witness[i] is the index of the first generator in
/// class order producing branches[i].
struct TraceTrie {
  BitString prompt;
  std::size_t depth = 0;
  std::vector<BitString> branches;
  std::vector<std::size_t> witness;

  BinaryTree shape() const { return BinaryTree::from_paths(branches); }
  /// All prefixes of branches (including the empty one), sorted by length
  /// then lexicographically.
  std::vector<BitString> nodes() const;
};

TraceTrie realized_trace_tree(const FiniteClass& F, BitView prompt, std::size_t T);

}  // namespace arlab
