#include "arlab/trees.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "arlab/evolution.hpp"

namespace arlab {

BinaryTree BinaryTree::from_paths(const std::vector<BitString>& paths) {
  BinaryTree t;
  for (const auto& p : paths) {
    int cur = 0;
    for (std::size_t i = 0; i < p.size(); ++i) cur = t.add_child(cur, p[i]);
  }
  return t;
}

BinaryTree BinaryTree::perfect(std::size_t depth) {
  BinaryTree t;
  std::vector<int> frontier{0};
  for (std::size_t lvl = 0; lvl < depth; ++lvl) {
    std::vector<int> next;
    next.reserve(frontier.size() * 2);
    for (int v : frontier) {
      next.push_back(t.add_child(v, Bit::zero));
      next.push_back(t.add_child(v, Bit::one));
    }
    frontier = std::move(next);
  }
  return t;
}

int BinaryTree::add_child(int parent, Bit dir) {
  auto& slot = nodes_[static_cast<std::size_t>(parent)].child[to_int(dir)];
  if (slot >= 0) return slot;
  Node n;
  n.parent = parent;
  n.level = nodes_[static_cast<std::size_t>(parent)].level + 1;
  const int id = static_cast<int>(nodes_.size());
  nodes_.push_back(n);
  nodes_[static_cast<std::size_t>(parent)].child[to_int(dir)] = id;
  return id;
}

std::size_t BinaryTree::depth() const noexcept {
  int d = 0;
  for (const auto& n : nodes_) d = std::max(d, n.level);
  return static_cast<std::size_t>(d);
}

std::size_t BinaryTree::leaf_count() const noexcept {
  std::size_t c = 0;
  for (const auto& n : nodes_) c += (n.child[0] < 0 && n.child[1] < 0) ? 1 : 0;
  return c;
}

BitString BinaryTree::path(int i) const {
  std::vector<Bit> rev;
  while (node(i).parent >= 0) {
    const int p = node(i).parent;
    rev.push_back(node(p).child[1] == i ? Bit::one : Bit::zero);
    i = p;
  }
  std::reverse(rev.begin(), rev.end());
  return BitString(std::move(rev));
}

std::vector<std::vector<int>> BinaryTree::levels() const {
  std::vector<std::vector<int>> out(depth() + 1);
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    out[static_cast<std::size_t>(nodes_[i].level)].push_back(static_cast<int>(i));
  }
  return out;
}

std::vector<BitString> GenerationTree::leaves() const {
  const std::size_t first = (std::size_t{1} << depth) - 1;
  return {node_strings.begin() + static_cast<std::ptrdiff_t>(first), node_strings.end()};
}

GenerationTree full_generation_tree(BitView prompt, std::size_t depth) {
  if (depth > 24) throw std::invalid_argument("full_generation_tree: depth above 24");
  GenerationTree t;
  t.prompt = BitString(prompt);
  t.depth = depth;
  const std::size_t count = (std::size_t{2} << depth) - 1;
  t.node_strings.resize(count);
  t.node_strings[0] = t.prompt;
  for (std::size_t i = 0; 2 * i + 2 < count; ++i) {
    t.node_strings[2 * i + 1] = t.node_strings[i] + BitString{Bit::zero}.view();
    t.node_strings[2 * i + 2] = t.node_strings[i] + BitString{Bit::one}.view();
  }
  return t;
}

std::vector<BitString> TraceTrie::nodes() const {
  std::set<std::pair<std::size_t, BitString>> all;
  all.emplace(0, BitString{});
  for (const auto& b : branches) {
    for (std::size_t len = 1; len <= b.size(); ++len) all.emplace(len, b.prefix(len));
  }
  std::vector<BitString> out;
  out.reserve(all.size());
  for (auto& [len, s] : all) out.push_back(s);
  return out;
}

TraceTrie realized_trace_tree(const FiniteClass& F, BitView prompt, std::size_t T) {
  require_horizon(prompt.size(), T, F.horizon());
  std::map<BitString, std::size_t> first_witness;
  for (std::size_t i = 0; i < F.size(); ++i) first_witness.emplace(cot_trace(F[i], prompt, T), i);
  TraceTrie trie;
  trie.prompt = BitString(prompt);
  trie.depth = T;
  for (auto& [branch, idx] : first_witness) {
    trie.branches.push_back(branch);
    trie.witness.push_back(idx);
  }
  return trie;
}

}  // namespace arlab
