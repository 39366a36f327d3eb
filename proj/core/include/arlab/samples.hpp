#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "arlab/bits.hpp"
#include "arlab/finite_class.hpp"

namespace arlab {

struct CotExample {
  BitString x;
  BitString y;  // the generated trace, |y| = T

  bool operator==(const CotExample&) const = default;
};

/// Prompts with their length-T traces.
class CotSample {
 public:
  /// Throws std::invalid_argument if T == 0 or a trace has the wrong length.
  explicit CotSample(std::size_t T);
  CotSample(std::vector<CotExample> examples, std::size_t T);

  std::size_t T() const noexcept { return T_; }
  std::size_t size() const noexcept { return examples_.size(); }
  bool empty() const noexcept { return examples_.empty(); }
  const CotExample& operator[](std::size_t i) const { return examples_[i]; }
  const std::vector<CotExample>& examples() const noexcept { return examples_; }
  auto begin() const noexcept { return examples_.begin(); }
  auto end() const noexcept { return examples_.end(); }

  void push_back(CotExample e);
  /// Examples at the given positions, in the given order.
  CotSample subset(const std::vector<std::size_t>& positions) const;
  /// Copy with position i removed.
  CotSample without(std::size_t i) const;

  bool operator==(const CotSample&) const = default;

 private:
  std::vector<CotExample> examples_;
  std::size_t T_ = 1;
};

/// One next-token example. `origin` is the index of the CoT example it was
/// unrolled from, when known.
struct BinaryExample {
  BitString x;
  Bit y = Bit::zero;
  std::optional<std::size_t> origin;

  bool operator==(const BinaryExample&) const = default;
};

using BinarySample = std::vector<BinaryExample>;

/// (x_i . y_i[<t], y_i[t]) for every example i and step t, in that order.
BinarySample inflate(const CotSample& S);

/// The examples of S whose index is the origin of some element of subset,
/// in index order. Throws OriginMissing for elements without an origin.
CotSample deflate(const BinarySample& subset, const CotSample& S);

bool consistent(const Generator& f, const BinarySample& A);
/// The CoT map of f reproduces every trace of S.
bool cot_consistent(const Generator& f, const CotSample& S);
/// Some member of F is CoT-consistent with S.
bool realizable(const FiniteClass& F, const CotSample& S);

/// Labels prompts with f's traces.
CotSample label_with(const Generator& f, const std::vector<BitString>& prompts, std::size_t T);

}  // namespace arlab
