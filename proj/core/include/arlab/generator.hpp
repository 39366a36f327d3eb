#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "arlab/bits.hpp"
#include "arlab/rational.hpp"

namespace arlab {

/// Weights and bias of a linear next-token rule over the last d bits.
/// w[j-1] multiplies x[-j], the j-th bit from the end; missing positions of
/// short inputs read as 0 (left zero padding).
struct LinearParams {
  std::vector<Rational> w;
  Rational b;

  std::size_t d() const noexcept { return w.size(); }
  bool operator==(const LinearParams&) const = default;
};

enum class GeneratorKind { constant, prefix_sequence, linear, parity, tree_branch, product };

const char* to_string(GeneratorKind kind) noexcept;

struct GeneratorRule;

/// Deterministic next-token map {0,1}^* -> {0,1} defined on strings shorter
/// than its horizon. Cheap to copy (the rule is shared and immutable).
class Generator {
 public:
  /// Always emits `value`.
  static Generator constant(Bit value, std::size_t horizon);
  /// f(x) = seq[|x|] when x is a proper prefix of seq, else 0.
  static Generator prefix_sequence(BitString seq, std::size_t horizon);
  /// f(x) = 1 iff sum_j w[j-1] * x[-j] + b >= 0.
  static Generator linear(LinearParams params, std::size_t horizon);
  /// Q/A/B case analysis over b = (b_1..b_K); see ParityRule.
  static Generator parity(BitString b, std::size_t horizon);
  /// Follows one root-to-leaf branch of the perfect binary tree whose node i
  /// (breadth-first, 1-based) is labeled 0^i.
  static Generator tree_branch(BitString directions, std::size_t horizon);
  /// Part i (1-based) answers on strings 0^i 1 z by evaluating itself on z.
  static Generator product(std::vector<Generator> parts);

  std::size_t horizon() const noexcept { return horizon_; }
  GeneratorKind kind() const noexcept;
  const GeneratorRule& rule() const noexcept { return *rule_; }

  /// Next token for x. Throws HorizonExceeded if |x| >= horizon().
  Bit operator()(BitView x) const;
  Bit operator()(const BitString& x) const { return (*this)(x.view()); }

  /// Short human-readable description, e.g. "prefix(0010)".
  std::string describe() const;

 private:
  Generator(std::shared_ptr<const GeneratorRule> rule, std::size_t horizon)
      : rule_(std::move(rule)), horizon_(horizon) {}
  Bit eval_unchecked(BitView x) const;

  std::shared_ptr<const GeneratorRule> rule_;
  std::size_t horizon_ = 0;
};

struct ConstantRule {
  Bit value = Bit::zero;
};

struct PrefixSequenceRule {
  BitString sequence;
};

struct LinearRule {
  LinearParams params;
};

/// With Q_k = 0^k 1, A_{k,y,t} = Q_k (y0)^t y, B_{k,y,t} = Q_k (y0)^{t+1}:
/// f(Q_k) = b_k (0 when k > K), f(A) = 0, f(B) = y, and 0 otherwise.
struct ParityRule {
  BitString b;
};

struct TreeBranchRule {
  BitString directions;
};

struct ProductRule {
  std::vector<Generator> parts;
};

struct GeneratorRule {
  std::variant<ConstantRule, PrefixSequenceRule, LinearRule, ParityRule, TreeBranchRule, ProductRule> rule;
};

/// Evaluates a linear rule on x (no horizon check).
Bit eval_linear(const LinearParams& p, BitView x);

/// Tail feature vector (x[-1], ..., x[-d]) as 0/1 integers, zero-padded.
std::vector<int> tail_features(BitView x, std::size_t d);

/// The string 0^k 1.
BitString zeros_then_one(std::size_t k);

}  // namespace arlab
