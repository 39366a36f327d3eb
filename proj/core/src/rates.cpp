#include "arlab/rates.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "arlab/errors.hpp"
#include "arlab/rational.hpp"

namespace arlab {
namespace {

std::string join(const std::vector<std::int64_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) s += ",";
    s += std::to_string(v[i]);
  }
  return s;
}

}  // namespace

RateTable::RateTable(std::vector<std::int64_t> values) : values_(std::move(values)) {
  if (values_.empty()) throw RateInvalid("rate table is empty");
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (values_[i] <= 0) throw RateInvalid("r(" + std::to_string(i + 1) + ") is not positive");
    if (i > 0 && values_[i] < values_[i - 1]) {
      throw RateInvalid("rate decreases at T = " + std::to_string(i + 1) + " (" + std::to_string(values_[i - 1]) +
                        " -> " + std::to_string(values_[i]) + ")");
    }
  }
  const std::size_t n = values_.size();
  for (std::size_t a = 1; a <= n; ++a) {
    for (std::size_t b = a; a + b <= n; ++b) {
      if (values_[a + b - 1] > values_[a - 1] + values_[b - 1]) {
        throw RateInvalid("rate is not subadditive: r(" + std::to_string(a + b) + ") > r(" + std::to_string(a) +
                          ") + r(" + std::to_string(b) + ")");
      }
    }
  }
}

std::string RateTable::to_string() const { return join(values_); }

IntervalSet::IntervalSet(std::vector<std::int64_t> elements) : elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end());
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (elements_[i] <= 0) throw std::invalid_argument("interval set elements must be positive");
    if (i > 0 && elements_[i] == elements_[i - 1]) {
      throw std::invalid_argument("interval set has duplicate element " + std::to_string(elements_[i]));
    }
  }
}

std::string IntervalSet::to_string() const { return "{" + join(elements_) + "}"; }

std::int64_t interval_density(const IntervalSet& N, std::size_t T) {
  if (T == 0) throw std::invalid_argument("interval_density: T must be at least 1");
  const auto& e = N.elements();
  // An optimal window can always be slid right until it starts at an element.
  std::size_t best = 0;
  std::size_t hi = 0;
  for (std::size_t lo = 0; lo < e.size(); ++lo) {
    hi = std::max(hi, lo);
    while (hi < e.size() && e[hi] - e[lo] < static_cast<std::int64_t>(T)) ++hi;
    best = std::max(best, hi - lo);
  }
  return static_cast<std::int64_t>(best);
}

IntervalSet rate_to_set(const RateTable& r) {
  if (r(1) != 1) throw RateNotNormalized("rate_to_set needs r(1) = 1, got " + std::to_string(r(1)));
  std::vector<std::int64_t> N;
  std::int64_t k = 1;
  for (std::size_t T = 1; T <= r.t_max(); ++T) {
    while (k <= r(T)) {
      N.push_back(static_cast<std::int64_t>(T));
      ++k;
    }
  }
  return IntervalSet(std::move(N));
}

RateTable normalize_rate(const RateTable& r) {
  const std::int64_t c = r(1);
  std::vector<std::int64_t> out;
  out.reserve(r.t_max());
  for (std::int64_t v : r.values()) out.push_back((v + c - 1) / c);
  return RateTable(std::move(out));
}

DiagonalRate diagonal_rate(const GrowthBound& M, std::size_t d_max, std::int64_t search_cap) {
  if (d_max > 40) throw std::invalid_argument("diagonal_rate: d_max above 40");
  std::vector<std::int64_t> Td{1};
  for (std::size_t d = 1; d <= d_max; ++d) {
    const double scale = std::ldexp(1.0, static_cast<int>(d + 3));
    std::int64_t n_d = -1;
    for (std::int64_t T = 1; T <= search_cap; ++T) {
      if (M(d, T) * scale < static_cast<double>(T)) {
        n_d = T;
        break;
      }
    }
    if (n_d < 0) {
      throw SearchCapExceeded("no T <= " + std::to_string(search_cap) + " with M(" + std::to_string(d) +
                              ", T) / T < 2^-" + std::to_string(d + 3));
    }
    const std::int64_t t_d = std::max(4 * Td.back(), n_d);
    if (t_d > search_cap) {
      throw SearchCapExceeded("T_" + std::to_string(d) + " = " + std::to_string(t_d) + " exceeds search cap");
    }
    Td.push_back(t_d);
  }
  auto anchor = [](std::size_t d, std::int64_t t) {
    return d == 0 ? Rational(1) : Rational(t, std::int64_t{1} << d);
  };
  std::vector<std::int64_t> values;
  values.reserve(static_cast<std::size_t>(Td.back()));
  values.push_back(1);
  for (std::size_t d = 0; d + 1 < Td.size(); ++d) {
    const Rational y0 = anchor(d, Td[d]);
    const Rational y1 = anchor(d + 1, Td[d + 1]);
    const Rational slope = (y1 - y0) / Rational(Td[d + 1] - Td[d]);
    for (std::int64_t T = Td[d] + 1; T <= Td[d + 1]; ++T) {
      values.push_back((y0 + slope * Rational(T - Td[d])).ceil());
    }
  }
  return {Td, RateTable(std::move(values))};
}

}  // namespace arlab
