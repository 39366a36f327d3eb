#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace arlab {

/// r(1), ..., r(T_max): positive, non-decreasing and subadditive on the
/// table. Validated on construction (throws RateInvalid).
class RateTable {
 public:
  explicit RateTable(std::vector<std::int64_t> values);

  std::size_t t_max() const noexcept { return values_.size(); }
  /// r(T), 1-based.
  std::int64_t operator()(std::size_t T) const { return values_.at(T - 1); }
  const std::vector<std::int64_t>& values() const noexcept { return values_; }
  std::string to_string() const;

  bool operator==(const RateTable&) const = default;

 private:
  std::vector<std::int64_t> values_;
};

/// Strictly increasing positive integers.
class IntervalSet {
 public:
  IntervalSet() = default;
  /// Sorts and validates (positive, distinct); throws std::invalid_argument.
  explicit IntervalSet(std::vector<std::int64_t> elements);

  const std::vector<std::int64_t>& elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }
  bool empty() const noexcept { return elements_.empty(); }
  std::int64_t max() const { return elements_.empty() ? 0 : elements_.back(); }
  std::string to_string() const;

  bool operator==(const IntervalSet&) const = default;

 private:
  std::vector<std::int64_t> elements_;
};

/// Largest number of elements of N inside a window [u+1, u+T]. 0 for empty N.
std::int64_t interval_density(const IntervalSet& N, std::size_t T);

/// N = { min{T : r(T) >= k} : 1 <= k <= r(T_max) }. Requires r(1) = 1
/// (RateNotNormalized otherwise).
IntervalSet rate_to_set(const RateTable& r);

/// ceil(r(T) / r(1)).
RateTable normalize_rate(const RateTable& r);

/// M(d, T) for the diagonal construction.
using GrowthBound = std::function<double(std::size_t d, std::int64_t T)>;

struct DiagonalRate {
  std::vector<std::int64_t> breakpoints;  // T_0 = 1, T_1, ..., T_{d_max}
  RateTable rate;                         // tabulated up to T_{d_max}
};

/// Builds the rate that beats M(d, .) at T_d for every d <= d_max:
/// N_d = first T with M(d, T) * 2^{d+3} < T, T_d = max(4 T_{d-1}, N_d),
/// piecewise-linear r~ through (1, 1) and (T_d, T_d / 2^d), r = ceil(r~).
/// Interpolation is exact. Throws SearchCapExceeded if some N_d (or T_d)
/// would exceed search_cap.
DiagonalRate diagonal_rate(const GrowthBound& M, std::size_t d_max, std::int64_t search_cap);

}  // namespace arlab
