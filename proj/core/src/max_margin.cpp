#include "arlab/max_margin.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>

#include "arlab/errors.hpp"
#include "arlab/rational.hpp"

namespace arlab {
namespace {

struct Point {
  std::vector<int> phi;
  int z = 0;                  // +1 / -1
  std::size_t first_pos = 0;  // first input position on this point
};

/// Solves M v = rhs exactly; nullopt if M is singular.
std::optional<std::vector<Rational>> solve(std::vector<std::vector<Rational>> M, std::vector<Rational> rhs) {
  const std::size_t n = M.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && M[pivot][col].is_zero()) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(M[pivot], M[col]);
    std::swap(rhs[pivot], rhs[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || M[r][col].is_zero()) continue;
      const Rational factor = M[r][col] / M[col][col];
      for (std::size_t c = col; c < n; ++c) M[r][c] -= factor * M[col][c];
      rhs[r] -= factor * rhs[col];
    }
  }
  std::vector<Rational> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = rhs[i] / M[i][i];
  return v;
}

bool separates(const LinearParams& p, const std::vector<Point>& pts) {
  for (const auto& pt : pts) {
    Rational s = p.b;
    for (std::size_t j = 0; j < pt.phi.size(); ++j) {
      if (pt.phi[j] != 0) s += p.w[j];
    }
    if (s * Rational(pt.z) < Rational(1)) return false;
  }
  return true;
}

/// Minimizes |w|^2 subject to z_p (w . x_p + b) = 1 for p in the subset.
/// Returns nullopt for degenerate subsets or non-positive multipliers.
std::optional<LinearParams> equality_solution(const std::vector<Point>& pts, const std::vector<std::size_t>& subset,
                                              std::size_t d) {
  const std::size_t k = subset.size();
  const std::size_t n = d + 1 + k;  // unknowns: w (d), b, alpha (k)
  std::vector<std::vector<Rational>> M(n, std::vector<Rational>(n));
  std::vector<Rational> rhs(n);
  // w - sum_p alpha_p z_p x_p = 0
  for (std::size_t j = 0; j < d; ++j) {
    M[j][j] = 1;
    for (std::size_t q = 0; q < k; ++q) {
      const Point& pt = pts[subset[q]];
      M[j][d + 1 + q] = Rational(-pt.z * pt.phi[j]);
    }
  }
  // sum_p alpha_p z_p = 0
  for (std::size_t q = 0; q < k; ++q) M[d][d + 1 + q] = Rational(pts[subset[q]].z);
  // z_p (w . x_p + b) = 1
  for (std::size_t q = 0; q < k; ++q) {
    const Point& pt = pts[subset[q]];
    for (std::size_t j = 0; j < d; ++j) M[d + 1 + q][j] = Rational(pt.z * pt.phi[j]);
    M[d + 1 + q][d] = Rational(pt.z);
    rhs[d + 1 + q] = 1;
  }
  const auto v = solve(std::move(M), std::move(rhs));
  if (!v) return std::nullopt;
  if (k >= 2) {
    for (std::size_t q = 0; q < k; ++q) {
      if ((*v)[d + 1 + q].sign() <= 0) return std::nullopt;
    }
  }
  LinearParams p;
  p.w.assign(v->begin(), v->begin() + static_cast<std::ptrdiff_t>(d));
  p.b = (*v)[d];
  return p;
}

bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t k = idx.size();
  std::size_t i = k;
  while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
  if (i == 0) return false;
  ++idx[i - 1];
  for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  return true;
}

}  // namespace

MaxMarginResult max_margin(const BinarySample& A, std::size_t d) {
  if (d == 0) throw std::invalid_argument("max_margin: d must be at least 1");
  std::map<std::vector<int>, Point> by_key;
  for (std::size_t i = 0; i < A.size(); ++i) {
    std::vector<int> phi = tail_features(A[i].x, d);
    const int z = A[i].y == Bit::one ? 1 : -1;
    auto [it, inserted] = by_key.try_emplace(phi, Point{phi, z, i});
    if (!inserted && it->second.z != z) {
      throw NotSeparable("point " + A[i].x.to_string() + " appears with both labels in its last " + std::to_string(d) +
                         " bits");
    }
  }
  std::vector<Point> pts;
  pts.reserve(by_key.size());
  for (auto& [key, pt] : by_key) pts.push_back(pt);

  auto finish = [&](LinearParams p, const std::vector<std::size_t>& subset) {
    MaxMarginResult r;
    r.params = std::move(p);
    for (std::size_t q : subset) r.support_positions.push_back(pts[q].first_pos);
    std::sort(r.support_positions.begin(), r.support_positions.end());
    for (std::size_t pos : r.support_positions) r.support.push_back(A[pos]);
    return r;
  };

  // Size 0: nothing positive, predict 0 everywhere.
  {
    LinearParams p;
    p.w.assign(d, Rational(0));
    p.b = Rational(-1);
    if (separates(p, pts)) return finish(std::move(p), {});
  }
  for (std::size_t k = 1; k <= d + 1 && k <= pts.size(); ++k) {
    std::vector<std::size_t> subset(k);
    for (std::size_t i = 0; i < k; ++i) subset[i] = i;
    do {
      auto p = equality_solution(pts, subset, d);
      if (p && separates(*p, pts)) return finish(std::move(*p), subset);
    } while (next_combination(subset, pts.size()));
  }
  throw NotSeparable("no separator of the " + std::to_string(pts.size()) + " distinct points in their last " +
                     std::to_string(d) + " bits");
}

CotSample stable_compress_cot(const CotSample& S, std::size_t d) {
  return deflate(max_margin(inflate(S), d).support, S);
}

LinearParams stable_reconstruct_cot(const CotSample& K, std::size_t d) {
  return max_margin(inflate(K), d).params;
}

}  // namespace arlab
