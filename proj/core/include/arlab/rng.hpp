#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace arlab {

/// SplitMix64 finalizer. Used to derive independent child seeds from a
/// (master seed, index) pair and to seed the engine.
std::uint64_t splitmix64(std::uint64_t x) noexcept;

/// Seed for item `index` of a family rooted at `master`.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) noexcept {
  return splitmix64(splitmix64(master) ^ (index * 0x9E3779B97F4A7C15ULL + 0x632BE59BD9B4E019ULL));
}

/// Thin wrapper over std::mt19937_64. All draws are computed from raw 64-bit
/// engine output by the helpers below rather than std distributions, whose
/// output is implementation-defined; this keeps streams identical across
/// standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(splitmix64(seed)) {}

  std::uint64_t next_u64() { return engine_(); }
  /// Uniform integer in [0, bound). bound must be positive. Rejection sampling
  /// on the top of the 64-bit range, so unbiased.
  std::uint64_t below(std::uint64_t bound);
  /// Uniform integer in [lo, hi].
  std::int64_t between(std::int64_t lo, std::int64_t hi);
  /// Uniform double in [0, 1) with 53 random bits.
  double unit();
  bool coin() { return (next_u64() >> 63U) != 0; }
  bool bernoulli(double p) { return unit() < p; }
  /// Index drawn proportionally to non-negative weights (at least one positive).
  std::size_t weighted_index(const std::vector<double>& weights);
  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace arlab
