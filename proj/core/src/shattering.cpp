#include "arlab/shattering.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <unordered_map>

namespace arlab {
namespace {

void require_binary(const PatternSet& P, const char* who) {
  if (!P.binary()) throw std::invalid_argument(std::string(who) + " needs binary patterns");
}

/// Counts distinct values in keys[0..n) that are known to lie in [0, range).
class DistinctCounter {
 public:
  std::size_t count(const std::vector<std::uint32_t>& keys, std::uint32_t range) {
    if (stamp_.size() < range) stamp_.resize(range, 0);
    ++epoch_;
    std::size_t distinct = 0;
    for (auto k : keys) {
      if (stamp_[k] != epoch_) {
        stamp_[k] = epoch_;
        ++distinct;
      }
    }
    return distinct;
  }

 private:
  std::vector<std::uint64_t> stamp_;
  std::uint64_t epoch_ = 0;
};

struct VcSearch {
  std::size_t width = 0;
  std::size_t k = 0;
  std::vector<std::vector<std::uint32_t>> columns;  // columns[c][r]
  DistinctCounter counter;

  bool dfs(std::size_t start, std::size_t depth, const std::vector<std::uint32_t>& keys) {
    if (depth == k) return true;
    for (std::size_t c = start; c + (k - depth) <= width; ++c) {
      std::vector<std::uint32_t> next(keys.size());
      for (std::size_t r = 0; r < keys.size(); ++r) next[r] = (keys[r] << 1U) | columns[c][r];
      const auto range = std::uint32_t{1} << (depth + 1);
      if (counter.count(next, range) == range && dfs(c + 1, depth + 1, next)) return true;
    }
    return false;
  }
};

struct NatarajanSearch {
  std::size_t width = 0;
  std::size_t k = 0;
  const PatternSet* P = nullptr;
  std::vector<std::vector<std::uint32_t>> labels_at;  // distinct labels per coordinate
  DistinctCounter counter;
  static constexpr std::uint32_t kDead = 0xFFFFFFFFU;

  bool dfs(std::size_t start, std::size_t depth, const std::vector<std::uint32_t>& keys) {
    if (depth == k) return true;
    for (std::size_t c = start; c + (k - depth) <= width; ++c) {
      const auto& labs = labels_at[c];
      for (std::size_t i = 0; i < labs.size(); ++i) {
        for (std::size_t j = i + 1; j < labs.size(); ++j) {
          std::vector<std::uint32_t> next;
          next.reserve(keys.size());
          for (std::size_t r = 0; r < keys.size(); ++r) {
            if (keys[r] == kDead) continue;
            const auto v = P->rows[r][c];
            if (v == labs[i]) {
              next.push_back(keys[r] << 1U);
            } else if (v == labs[j]) {
              next.push_back((keys[r] << 1U) | 1U);
            }
          }
          const auto range = std::uint32_t{1} << (depth + 1);
          if (next.size() < range || counter.count(next, range) != range) continue;
          // Re-expand to per-row keys for the next level.
          std::vector<std::uint32_t> full(keys.size(), kDead);
          for (std::size_t r = 0; r < keys.size(); ++r) {
            if (keys[r] == kDead) continue;
            const auto v = P->rows[r][c];
            if (v == labs[i]) full[r] = keys[r] << 1U;
            if (v == labs[j]) full[r] = (keys[r] << 1U) | 1U;
          }
          if (dfs(c + 1, depth + 1, full)) return true;
        }
      }
    }
    return false;
  }
};

std::size_t floor_log2(std::size_t n) { return n == 0 ? 0 : static_cast<std::size_t>(std::bit_width(n) - 1); }

using Bits = std::vector<std::uint64_t>;

struct BitsHash {
  std::size_t operator()(const Bits& b) const noexcept {
    std::size_t h = 0x9E3779B97F4A7C15ULL;
    for (auto w : b) h = (h ^ w) * 0x100000001B3ULL + (h >> 29U);
    return h;
  }
};

struct LittlestoneSearch {
  std::size_t cap = 12;
  std::vector<Bits> ones;  // per coordinate: rows labeled 1
  std::unordered_map<Bits, std::size_t, BitsHash> memo;

  static std::size_t popcount(const Bits& b) {
    std::size_t c = 0;
    for (auto w : b) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  std::size_t solve(const Bits& V, std::size_t count) {
    if (count <= 1) return 0;
    const std::size_t upper = std::min(floor_log2(count), cap);
    if (auto it = memo.find(V); it != memo.end()) return it->second;
    std::size_t best = 0;
    Bits v1(V.size());
    Bits v0(V.size());
    for (const auto& col : ones) {
      for (std::size_t w = 0; w < V.size(); ++w) {
        v1[w] = V[w] & col[w];
        v0[w] = V[w] & ~col[w];
      }
      const std::size_t n1 = popcount(v1);
      const std::size_t n0 = count - n1;
      if (n1 == 0 || n0 == 0) continue;
      if (1 + std::min(floor_log2(n0), floor_log2(n1)) <= best) continue;
      const bool zero_first = n0 <= n1;
      const Bits a = zero_first ? v0 : v1;
      const Bits b = zero_first ? v1 : v0;
      const std::size_t da = solve(a, zero_first ? n0 : n1);
      if (1 + da <= best) continue;
      const std::size_t db = solve(b, zero_first ? n1 : n0);
      best = std::max(best, 1 + std::min(da, db));
      if (best >= upper) break;
    }
    best = std::min(best, cap);
    memo.emplace(V, best);
    return best;
  }
};

}  // namespace

std::size_t vc_dimension(const PatternSet& P) {
  require_binary(P, "vc_dimension");
  if (P.rows.size() < 2) return 0;
  VcSearch s;
  s.columns.assign(P.width, std::vector<std::uint32_t>(P.rows.size()));
  for (std::size_t r = 0; r < P.rows.size(); ++r) {
    for (std::size_t c = 0; c < P.width; ++c) s.columns[c][r] = P.rows[r][c];
  }
  // Duplicate and constant columns never help shattering; dropping them does
  // not change the answer.
  std::sort(s.columns.begin(), s.columns.end());
  s.columns.erase(std::unique(s.columns.begin(), s.columns.end()), s.columns.end());
  std::erase_if(s.columns, [](const std::vector<std::uint32_t>& col) {
    return std::all_of(col.begin(), col.end(), [&](std::uint32_t v) { return v == col.front(); });
  });
  s.width = s.columns.size();
  const std::vector<std::uint32_t> empty(P.rows.size(), 0);
  std::size_t d = 0;
  for (std::size_t k = 1; k <= s.width && (std::size_t{1} << k) <= P.rows.size() && k < 31; ++k) {
    s.k = k;
    if (!s.dfs(0, 0, empty)) break;
    d = k;
  }
  return d;
}

std::size_t natarajan_dimension(const PatternSet& P) {
  if (P.rows.size() < 2) return 0;
  if (P.binary()) return vc_dimension(P);
  NatarajanSearch s;
  s.width = P.width;
  s.P = &P;
  s.labels_at.resize(P.width);
  for (std::size_t c = 0; c < P.width; ++c) {
    for (const auto& r : P.rows) s.labels_at[c].push_back(r[c]);
    auto& l = s.labels_at[c];
    std::sort(l.begin(), l.end());
    l.erase(std::unique(l.begin(), l.end()), l.end());
  }
  const std::vector<std::uint32_t> empty(P.rows.size(), 0);
  std::size_t d = 0;
  for (std::size_t k = 1; k <= P.width && (std::size_t{1} << k) <= P.rows.size() && k < 31; ++k) {
    s.k = k;
    if (!s.dfs(0, 0, empty)) break;
    d = k;
  }
  return d;
}

std::size_t dual_vc_dimension(const FiniteClass& F, const Domain& D) {
  return vc_dimension(restrict_base(F, D).transposed());
}

std::size_t growth_function(const PatternSet& P, std::size_t m) {
  if (m > P.width) throw std::invalid_argument("growth_function: m exceeds domain size");
  if (P.rows.empty()) return 0;
  if (m == 0) return 1;
  std::size_t best = 0;
  std::vector<std::size_t> idx(m);
  for (std::size_t i = 0; i < m; ++i) idx[i] = i;
  std::unordered_map<std::uint64_t, std::uint32_t> ids;
  std::vector<std::uint32_t> key(P.rows.size());
  while (true) {
    std::fill(key.begin(), key.end(), 0);
    std::uint32_t next_id = 1;
    for (std::size_t c : idx) {
      ids.clear();
      next_id = 0;
      for (std::size_t r = 0; r < P.rows.size(); ++r) {
        const std::uint64_t composite = (static_cast<std::uint64_t>(key[r]) << 32U) | P.rows[r][c];
        auto [it, inserted] = ids.emplace(composite, next_id);
        if (inserted) ++next_id;
        key[r] = it->second;
      }
    }
    best = std::max<std::size_t>(best, next_id);
    // next lexicographic m-subset
    std::size_t i = m;
    while (i > 0 && idx[i - 1] == P.width - m + (i - 1)) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < m; ++j) idx[j] = idx[j - 1] + 1;
  }
  return best;
}

LittlestoneResult littlestone_dimension(const PatternSet& P, std::size_t depth_cap) {
  require_binary(P, "littlestone_dimension");
  if (P.rows.size() < 2) return {0, false};
  LittlestoneSearch s;
  s.cap = depth_cap;
  const std::size_t words = (P.rows.size() + 63) / 64;
  std::vector<Bits> cols;
  for (std::size_t c = 0; c < P.width; ++c) {
    Bits col(words, 0);
    for (std::size_t r = 0; r < P.rows.size(); ++r) {
      if (P.rows[r][c] != 0) col[r / 64] |= std::uint64_t{1} << (r % 64);
    }
    cols.push_back(std::move(col));
  }
  std::sort(cols.begin(), cols.end());
  cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
  s.ones = std::move(cols);
  Bits all(words, 0);
  for (std::size_t r = 0; r < P.rows.size(); ++r) all[r / 64] |= std::uint64_t{1} << (r % 64);
  const std::size_t v = s.solve(all, P.rows.size());
  return {v, v >= depth_cap};
}

LittlestoneResult littlestone_dimension(const FiniteClass& F, const Domain& D, std::size_t depth_cap) {
  return littlestone_dimension(restrict_base(F, D), depth_cap);
}

long double ssp_bound(std::size_t m, std::size_t labels, std::size_t dim) {
  const long double base = std::numbers::e_v<long double> * static_cast<long double>(m) * static_cast<long double>(labels);
  return std::pow(base, static_cast<long double>(2 * dim));
}

}  // namespace arlab
