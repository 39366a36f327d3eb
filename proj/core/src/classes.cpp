#include "arlab/classes.hpp"

#include <algorithm>
#include <stdexcept>

#include "arlab/errors.hpp"

namespace arlab {
namespace {

long double power(long double base, std::size_t e) {
  long double v = 1;
  for (std::size_t i = 0; i < e; ++i) v *= base;
  return v;
}

}  // namespace

FiniteClass make_full_class(std::size_t H, std::size_t cap) {
  if (H < 2) throw std::invalid_argument("make_full_class: horizon must be at least 2");
  check_enumeration(power(2, H), cap, "full class with H = " + std::to_string(H));
  std::vector<Generator> gens;
  const std::uint64_t count = std::uint64_t{1} << H;
  gens.reserve(count);
  for (std::uint64_t a = 0; a < count; ++a) gens.push_back(Generator::prefix_sequence(BitString::from_uint(a, H), H));
  return FiniteClass(std::move(gens), H, "full");
}

BitString shifted_indicator(const std::vector<std::int64_t>& A, std::int64_t s, std::size_t H) {
  std::vector<Bit> bits(H, Bit::zero);
  for (std::int64_t a : A) {
    const std::int64_t pos = a + s;
    if (pos >= 1 && pos <= static_cast<std::int64_t>(H)) bits[static_cast<std::size_t>(pos - 1)] = Bit::one;
  }
  return BitString(std::move(bits));
}

FiniteClass make_shifted_subset_class(const IntervalSet& N, std::size_t s_max, std::size_t H, std::size_t cap) {
  if (static_cast<std::size_t>(N.max()) + s_max > H) {
    throw HorizonTooSmall("max(N) + s_max = " + std::to_string(static_cast<std::size_t>(N.max()) + s_max) +
                          " exceeds horizon " + std::to_string(H));
  }
  if (N.size() > 40) throw EnumerationTooLarge("interval set too large to enumerate subsets");
  check_enumeration(static_cast<long double>(s_max + 1) * power(2, N.size()), cap,
                    "shifted-subset class over " + N.to_string());
  const auto& e = N.elements();
  std::vector<Generator> gens;
  for (std::size_t s = 0; s <= s_max; ++s) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << e.size()); ++mask) {
      std::vector<std::int64_t> A;
      for (std::size_t j = 0; j < e.size(); ++j) {
        if ((mask >> j) & 1U) A.push_back(e[j]);
      }
      gens.push_back(Generator::prefix_sequence(shifted_indicator(A, static_cast<std::int64_t>(s), H), H));
    }
  }
  return FiniteClass(std::move(gens), H, "shifted_subset" + N.to_string());
}

FiniteClass make_product_class(const std::vector<FiniteClass>& parts, std::size_t cap) {
  if (parts.empty()) throw std::invalid_argument("make_product_class: no parts");
  long double total = 1;
  for (const auto& p : parts) total *= static_cast<long double>(p.size());
  check_enumeration(total, cap, "product of " + std::to_string(parts.size()) + " classes");
  std::vector<std::size_t> idx(parts.size(), 0);
  std::vector<Generator> gens;
  gens.reserve(static_cast<std::size_t>(total));
  while (true) {
    std::vector<Generator> tuple;
    tuple.reserve(parts.size());
    for (std::size_t i = 0; i < parts.size(); ++i) tuple.push_back(parts[i][idx[i]]);
    gens.push_back(Generator::product(std::move(tuple)));
    std::size_t pos = parts.size();
    while (pos > 0) {
      --pos;
      if (++idx[pos] < parts[pos].size()) break;
      idx[pos] = 0;
      if (pos == 0) {
        const std::size_t h = gens.front().horizon();
        return FiniteClass(std::move(gens), h, "product");
      }
    }
  }
}

FiniteClass make_taxonomy_class(const RateTable& r, std::size_t s_max, std::size_t H, std::size_t cap) {
  const RateTable normalized = normalize_rate(r);
  const IntervalSet N = rate_to_set(normalized);
  FiniteClass base = make_shifted_subset_class(N, s_max, H, cap);
  const auto copies = static_cast<std::size_t>(r(1));
  if (copies == 1) return base;
  return make_product_class(std::vector<FiniteClass>(copies, base), cap);
}

Generator make_linear_generator(const LinearParams& p, std::size_t H) {
  if (p.d() == 0) throw std::invalid_argument("linear generator needs d >= 1");
  return Generator::linear(p, H);
}

FiniteClass enumerate_linear_class(std::size_t d, std::int64_t weight_bound, std::size_t H, std::size_t cap) {
  if (d == 0) throw std::invalid_argument("enumerate_linear_class: d must be at least 1");
  if (weight_bound < 0) throw std::invalid_argument("enumerate_linear_class: negative weight bound");
  const auto side = static_cast<std::size_t>(2 * weight_bound + 1);
  check_enumeration(power(static_cast<long double>(side), d + 1), cap,
                    "linear grid d = " + std::to_string(d) + ", bound " + std::to_string(weight_bound));
  std::vector<std::int64_t> coords(d + 1, -weight_bound);
  std::vector<Generator> gens;
  while (true) {
    LinearParams p;
    for (std::size_t j = 0; j < d; ++j) p.w.emplace_back(coords[j]);
    p.b = Rational(coords[d]);
    gens.push_back(Generator::linear(std::move(p), H));
    std::size_t pos = d + 1;
    bool done = true;
    while (pos > 0) {
      --pos;
      if (++coords[pos] <= weight_bound) {
        done = false;
        break;
      }
      coords[pos] = -weight_bound;
    }
    if (done) break;
  }
  return FiniteClass(std::move(gens), H, "linear_grid");
}

FiniteClass make_parity_class(std::size_t k_max, std::size_t H, std::size_t cap) {
  if (k_max == 0) throw std::invalid_argument("make_parity_class: k_max must be at least 1");
  check_enumeration(power(2, k_max), cap, "parity class with k_max = " + std::to_string(k_max));
  std::vector<Generator> gens;
  for (std::uint64_t b = 0; b < (std::uint64_t{1} << k_max); ++b) {
    gens.push_back(Generator::parity(BitString::from_uint(b, k_max), H));
  }
  return FiniteClass(std::move(gens), H, "parity");
}

FiniteClass make_atdim_example_class(std::size_t D, std::size_t H, std::size_t cap) {
  if (D == 0) throw std::invalid_argument("make_atdim_example_class: depth must be at least 1");
  check_enumeration(power(2, D), cap, "branch class of depth " + std::to_string(D));
  if (H < (std::size_t{1} << D)) {
    throw HorizonTooSmall("branch class of depth " + std::to_string(D) + " needs horizon >= " +
                          std::to_string(std::size_t{1} << D));
  }
  std::vector<Generator> gens;
  for (std::uint64_t b = 0; b < (std::uint64_t{1} << D); ++b) {
    gens.push_back(Generator::tree_branch(BitString::from_uint(b, D), H));
  }
  return FiniteClass(std::move(gens), H, "atdim_example");
}

std::vector<BitString> chain_domain(std::size_t K) {
  std::vector<BitString> out;
  out.reserve(K);
  for (std::size_t k = 1; k <= K; ++k) out.push_back(BitString::zeros(k));
  return out;
}

std::vector<BitString> relocated_chain_domain(std::size_t copies, std::size_t K) {
  std::vector<BitString> out;
  out.reserve(copies * K);
  for (std::size_t i = 1; i <= copies; ++i) {
    for (std::size_t t = 1; t <= K; ++t) out.push_back(zeros_then_one(i) + BitString::zeros(t).view());
  }
  return out;
}

TaxonomyLayout taxonomy_layout(const RateTable& r, std::size_t s_max, std::size_t T_max) {
  TaxonomyLayout out;
  out.N = rate_to_set(normalize_rate(r));
  out.copies = static_cast<std::size_t>(r(1));
  out.chain_length = static_cast<std::size_t>(out.N.max());
  out.part_horizon = out.chain_length + std::max(s_max, T_max) + 1;
  return out;
}

std::vector<BitString> TaxonomyLayout::domain() const {
  return copies == 1 ? chain_domain(chain_length) : relocated_chain_domain(copies, chain_length);
}

}  // namespace arlab
