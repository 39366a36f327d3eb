#include "arlab/generator.hpp"

#include <algorithm>
#include <limits>

#include "arlab/errors.hpp"

namespace arlab {
namespace {

template <class... Fs>
struct overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
overloaded(Fs...) -> overloaded<Fs...>;

Bit eval_prefix(const BitString& seq, BitView x) {
  if (x.size() >= seq.size()) return Bit::zero;
  if (!is_prefix(x, seq.view())) return Bit::zero;
  return seq[x.size()];
}

Bit eval_parity(const BitString& b, BitView x) {
  std::size_t k = 0;
  while (k < x.size() && x[k] == Bit::zero) ++k;
  if (k == 0 || k == x.size()) return Bit::zero;
  // x = 0^k 1 r
  const std::size_t start = k + 1;
  const std::size_t len = x.size() - start;
  if (len == 0) return k <= b.size() ? b[k - 1] : Bit::zero;
  const Bit y = x[start];
  for (std::size_t i = 0; i < len; ++i) {
    const Bit expected = (i % 2 == 0) ? y : Bit::zero;
    if (x[start + i] != expected) return Bit::zero;
  }
  // odd length: (y0)^t y, the A case; even length: (y0)^{t+1}, the B case.
  return (len % 2 == 1) ? Bit::zero : y;
}

Bit eval_tree_branch(const BitString& dirs, BitView x) {
  if (x.empty()) return Bit::zero;
  for (Bit c : x) {
    if (c != Bit::zero) return Bit::zero;
  }
  const std::size_t i = x.size();
  std::size_t depth = 0;
  while ((std::size_t{2} << depth) <= i) ++depth;
  if (depth >= dirs.size()) return Bit::zero;
  const std::size_t offset = i - (std::size_t{1} << depth);
  // Node `offset` on level `depth` lies on the branch iff the first `depth`
  // directions spell offset in binary.
  for (std::size_t j = 0; j < depth; ++j) {
    const bool bit = ((offset >> (depth - 1 - j)) & 1U) != 0;
    if (to_bit(bit) != dirs[j]) return Bit::zero;
  }
  return dirs[depth];
}

std::size_t product_horizon(const std::vector<Generator>& parts) {
  std::size_t h = std::numeric_limits<std::size_t>::max();
  // part i (0-based) sits behind a prefix of length i + 2
  for (std::size_t i = 0; i < parts.size(); ++i) h = std::min(h, parts[i].horizon() + i + 2);
  return h;
}

}  // namespace

const char* to_string(GeneratorKind kind) noexcept {
  switch (kind) {
    case GeneratorKind::constant:
      return "constant";
    case GeneratorKind::prefix_sequence:
      return "prefix_sequence";
    case GeneratorKind::linear:
      return "linear";
    case GeneratorKind::parity:
      return "parity";
    case GeneratorKind::tree_branch:
      return "tree_branch";
    case GeneratorKind::product:
      return "product";
  }
  return "unknown";
}

BitString zeros_then_one(std::size_t k) {
  BitString s = BitString::zeros(k);
  s.push_back(Bit::one);
  return s;
}

std::vector<int> tail_features(BitView x, std::size_t d) {
  std::vector<int> phi(d, 0);
  for (std::size_t j = 1; j <= d && j <= x.size(); ++j) phi[j - 1] = to_int(x[x.size() - j]);
  return phi;
}

Bit eval_linear(const LinearParams& p, BitView x) {
  Rational acc = p.b;
  for (std::size_t j = 1; j <= p.d() && j <= x.size(); ++j) {
    if (x[x.size() - j] == Bit::one) acc += p.w[j - 1];
  }
  return to_bit(acc.sign() >= 0);
}

Generator Generator::constant(Bit value, std::size_t horizon) {
  return {std::make_shared<const GeneratorRule>(GeneratorRule{ConstantRule{value}}), horizon};
}

Generator Generator::prefix_sequence(BitString seq, std::size_t horizon) {
  return {std::make_shared<const GeneratorRule>(GeneratorRule{PrefixSequenceRule{std::move(seq)}}), horizon};
}

Generator Generator::linear(LinearParams params, std::size_t horizon) {
  return {std::make_shared<const GeneratorRule>(GeneratorRule{LinearRule{std::move(params)}}), horizon};
}

Generator Generator::parity(BitString b, std::size_t horizon) {
  return {std::make_shared<const GeneratorRule>(GeneratorRule{ParityRule{std::move(b)}}), horizon};
}

Generator Generator::tree_branch(BitString directions, std::size_t horizon) {
  return {std::make_shared<const GeneratorRule>(GeneratorRule{TreeBranchRule{std::move(directions)}}), horizon};
}

Generator Generator::product(std::vector<Generator> parts) {
  if (parts.empty()) throw std::invalid_argument("product of zero generators");
  const std::size_t h = product_horizon(parts);
  return {std::make_shared<const GeneratorRule>(GeneratorRule{ProductRule{std::move(parts)}}), h};
}

GeneratorKind Generator::kind() const noexcept {
  return static_cast<GeneratorKind>(rule_->rule.index());
}

Bit Generator::operator()(BitView x) const {
  if (x.size() >= horizon_) {
    throw HorizonExceeded("evaluation at length " + std::to_string(x.size()) + " needs horizon > " +
                          std::to_string(x.size()) + " (have " + std::to_string(horizon_) + ")");
  }
  return eval_unchecked(x);
}

Bit Generator::eval_unchecked(BitView x) const {
  return std::visit(overloaded{
                        [](const ConstantRule& r) { return r.value; },
                        [&](const PrefixSequenceRule& r) { return eval_prefix(r.sequence, x); },
                        [&](const LinearRule& r) { return eval_linear(r.params, x); },
                        [&](const ParityRule& r) { return eval_parity(r.b, x); },
                        [&](const TreeBranchRule& r) { return eval_tree_branch(r.directions, x); },
                        [&](const ProductRule& r) {
                          std::size_t k = 0;
                          while (k < x.size() && x[k] == Bit::zero) ++k;
                          if (k == 0 || k == x.size() || k > r.parts.size()) return Bit::zero;
                          return r.parts[k - 1].eval_unchecked(x.subspan(k + 1));
                        },
                    },
                    rule_->rule);
}

std::string Generator::describe() const {
  return std::visit(overloaded{
                        [](const ConstantRule& r) { return std::string("const(") + to_char(r.value) + ")"; },
                        [](const PrefixSequenceRule& r) { return "prefix(" + r.sequence.to_string() + ")"; },
                        [](const LinearRule& r) {
                          std::string s = "linear(w=[";
                          for (std::size_t i = 0; i < r.params.w.size(); ++i) {
                            if (i > 0) s += ",";
                            s += r.params.w[i].to_string();
                          }
                          return s + "],b=" + r.params.b.to_string() + ")";
                        },
                        [](const ParityRule& r) { return "parity(" + r.b.to_string() + ")"; },
                        [](const TreeBranchRule& r) { return "branch(" + r.directions.to_string() + ")"; },
                        [](const ProductRule& r) {
                          std::string s = "product(";
                          for (std::size_t i = 0; i < r.parts.size(); ++i) {
                            if (i > 0) s += ";";
                            s += r.parts[i].describe();
                          }
                          return s + ")";
                        },
                    },
                    rule_->rule);
}

}  // namespace arlab
