#include "arlab/random_instances.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "arlab/evolution.hpp"

namespace arlab {

BinaryTree random_tree(std::size_t depth, double p_both, Rng& rng) {
  BinaryTree t;
  std::vector<int> frontier{0};
  for (std::size_t level = 0; level < depth; ++level) {
    std::vector<int> next;
    for (int v : frontier) {
      if (rng.bernoulli(p_both)) {
        next.push_back(t.add_child(v, Bit::zero));
        next.push_back(t.add_child(v, Bit::one));
      } else {
        next.push_back(t.add_child(v, to_bit(rng.coin())));
      }
    }
    frontier = std::move(next);
  }
  return t;
}

BitString random_bits(std::size_t length, Rng& rng) {
  BitString s;
  s.reserve(length);
  for (std::size_t i = 0; i < length; ++i) s.push_back(to_bit(rng.coin()));
  return s;
}

BitString random_prompt_for(const Generator& f, std::size_t max_length, Rng& rng) {
  const auto length = static_cast<std::size_t>(rng.below(max_length + 1));
  if (rng.coin() && length > 0) return rollout(f, BitString{}, length);
  return random_bits(length, rng);
}

CotSample random_realizable_sample(const Generator& f, std::size_t m, std::size_t T, std::size_t max_length,
                                   Rng& rng) {
  CotSample S(T);
  for (std::size_t i = 0; i < m; ++i) {
    BitString x = random_prompt_for(f, max_length, rng);
    BitString y = cot_trace(f, x, T);
    S.push_back({std::move(x), std::move(y)});
  }
  return S;
}

LinearParams random_linear_params(std::size_t d, std::int64_t bound, Rng& rng) {
  LinearParams p;
  for (std::size_t j = 0; j < d; ++j) p.w.emplace_back(rng.between(-bound, bound));
  p.b = Rational(rng.between(-bound, bound));
  return p;
}

FiniteClass random_small_class(std::size_t H, Rng& rng) {
  if (H < 4) throw std::invalid_argument("random_small_class: horizon must be at least 4");
  const auto count = static_cast<std::size_t>(rng.between(2, 10));
  std::vector<Generator> gens;
  gens.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const auto kind = rng.below(20);
    if (kind < 8) {
      gens.push_back(Generator::prefix_sequence(random_bits(H, rng), H));
    } else if (kind < 14) {
      gens.push_back(Generator::linear(random_linear_params(1 + rng.below(2), 2, rng), H));
    } else if (kind < 17) {
      gens.push_back(Generator::constant(to_bit(rng.coin()), H));
    } else {
      gens.push_back(Generator::parity(random_bits(3, rng), H));
    }
  }
  return FiniteClass(std::move(gens), H, "random");
}

Domain random_domain(const FiniteClass& F, std::size_t size, std::size_t max_length, Rng& rng) {
  if (max_length < 62 && size > (std::size_t{2} << max_length) - 1) {
    throw std::invalid_argument("random_domain: not enough distinct strings");
  }
  std::set<BitString> seen;
  Domain D;
  while (D.size() < size) {
    BitString x = random_prompt_for(F[rng.below(F.size())], max_length, rng);
    if (seen.insert(x).second) D.push_back(std::move(x));
  }
  return D;
}

}  // namespace arlab
