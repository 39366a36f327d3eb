#include "arlab/patterns.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "arlab/evolution.hpp"

namespace arlab {

void validate_domain(const Domain& D) {
  std::set<BitString> seen;
  for (const auto& x : D) {
    if (!seen.insert(x).second) throw std::invalid_argument("domain has duplicate prompt \"" + x.to_string() + "\"");
  }
}

PatternSet PatternSet::from_rows(std::size_t width, std::uint32_t label_count,
                                 std::vector<std::vector<std::uint32_t>> rows) {
  std::sort(rows.begin(), rows.end());
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
  PatternSet p;
  p.width = width;
  p.label_count = label_count;
  p.rows = std::move(rows);
  return p;
}

PatternSet PatternSet::project(const std::vector<std::size_t>& coords) const {
  std::vector<std::vector<std::uint32_t>> out;
  out.reserve(rows.size());
  for (const auto& r : rows) {
    std::vector<std::uint32_t> v;
    v.reserve(coords.size());
    for (std::size_t c : coords) v.push_back(r.at(c));
    out.push_back(std::move(v));
  }
  return from_rows(coords.size(), label_count, std::move(out));
}

PatternSet PatternSet::transposed() const {
  std::vector<std::vector<std::uint32_t>> out(width, std::vector<std::uint32_t>(rows.size()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < width; ++j) out[j][i] = rows[i][j];
  }
  return from_rows(rows.size(), label_count, std::move(out));
}

std::vector<std::vector<std::uint32_t>> base_matrix(const FiniteClass& F, const Domain& D) {
  for (const auto& x : D) require_horizon(x.size(), 1, F.horizon());
  std::vector<std::vector<std::uint32_t>> m;
  m.reserve(F.size());
  for (const auto& f : F) {
    std::vector<std::uint32_t> row;
    row.reserve(D.size());
    for (const auto& x : D) row.push_back(static_cast<std::uint32_t>(to_int(f(x))));
    m.push_back(std::move(row));
  }
  return m;
}

PatternSet restrict_base(const FiniteClass& F, const Domain& D) {
  return PatternSet::from_rows(D.size(), 2, base_matrix(F, D));
}

PatternSet restrict_e2e(const FiniteClass& F, const Domain& D, std::size_t T) {
  for (const auto& x : D) require_horizon(x.size(), T, F.horizon());
  std::vector<std::vector<std::uint32_t>> rows;
  rows.reserve(F.size());
  for (const auto& f : F) {
    std::vector<std::uint32_t> row;
    row.reserve(D.size());
    for (const auto& x : D) row.push_back(static_cast<std::uint32_t>(to_int(e2e_output(f, x, T))));
    rows.push_back(std::move(row));
  }
  return PatternSet::from_rows(D.size(), 2, std::move(rows));
}

PatternSet restrict_cot(const FiniteClass& F, const Domain& D, std::size_t T) {
  if (T > 24) throw std::invalid_argument("restrict_cot: T above 24");
  for (const auto& x : D) require_horizon(x.size(), T, F.horizon());
  std::vector<std::vector<std::uint32_t>> rows;
  rows.reserve(F.size());
  for (const auto& f : F) {
    std::vector<std::uint32_t> row;
    row.reserve(D.size());
    for (const auto& x : D) row.push_back(static_cast<std::uint32_t>(cot_trace(f, x, T).to_uint()));
    rows.push_back(std::move(row));
  }
  return PatternSet::from_rows(D.size(), std::uint32_t{1} << T, std::move(rows));
}

PatternSet first_bit_projection(const PatternSet& cot, std::size_t T) {
  std::vector<std::vector<std::uint32_t>> rows = cot.rows;
  for (auto& r : rows) {
    for (auto& v : r) v >>= (T - 1);
  }
  return PatternSet::from_rows(cot.width, 2, std::move(rows));
}

}  // namespace arlab
