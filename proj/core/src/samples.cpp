#include "arlab/samples.hpp"

#include <algorithm>
#include <stdexcept>

#include "arlab/errors.hpp"
#include "arlab/evolution.hpp"

namespace arlab {

CotSample::CotSample(std::size_t T) : T_(T) {
  if (T == 0) throw std::invalid_argument("CoT sample needs T >= 1");
}

CotSample::CotSample(std::vector<CotExample> examples, std::size_t T) : CotSample(T) {
  for (auto& e : examples) push_back(std::move(e));
}

void CotSample::push_back(CotExample e) {
  if (e.y.size() != T_) {
    throw std::invalid_argument("trace \"" + e.y.to_string() + "\" has length " + std::to_string(e.y.size()) +
                                ", expected " + std::to_string(T_));
  }
  examples_.push_back(std::move(e));
}

CotSample CotSample::subset(const std::vector<std::size_t>& positions) const {
  CotSample out(T_);
  for (std::size_t p : positions) out.push_back(examples_.at(p));
  return out;
}

CotSample CotSample::without(std::size_t i) const {
  CotSample out(T_);
  for (std::size_t j = 0; j < examples_.size(); ++j) {
    if (j != i) out.push_back(examples_[j]);
  }
  return out;
}

BinarySample inflate(const CotSample& S) {
  BinarySample out;
  out.reserve(S.size() * S.T());
  for (std::size_t i = 0; i < S.size(); ++i) {
    BitString prefix = S[i].x;
    for (std::size_t t = 0; t < S.T(); ++t) {
      out.push_back({prefix, S[i].y[t], i});
      prefix.push_back(S[i].y[t]);
    }
  }
  return out;
}

CotSample deflate(const BinarySample& subset, const CotSample& S) {
  std::vector<std::size_t> origins;
  origins.reserve(subset.size());
  for (const auto& e : subset) {
    if (!e.origin) throw OriginMissing("inflated example \"" + e.x.to_string() + "\" carries no origin index");
    if (*e.origin >= S.size()) throw OriginMissing("origin index " + std::to_string(*e.origin) + " out of range");
    origins.push_back(*e.origin);
  }
  std::sort(origins.begin(), origins.end());
  origins.erase(std::unique(origins.begin(), origins.end()), origins.end());
  return S.subset(origins);
}

bool consistent(const Generator& f, const BinarySample& A) {
  return std::all_of(A.begin(), A.end(), [&](const BinaryExample& e) { return f(e.x) == e.y; });
}

bool cot_consistent(const Generator& f, const CotSample& S) {
  return std::all_of(S.begin(), S.end(), [&](const CotExample& e) { return cot_trace(f, e.x, S.T()) == e.y; });
}

bool realizable(const FiniteClass& F, const CotSample& S) {
  return std::any_of(F.begin(), F.end(), [&](const Generator& f) { return cot_consistent(f, S); });
}

CotSample label_with(const Generator& f, const std::vector<BitString>& prompts, std::size_t T) {
  CotSample S(T);
  for (const auto& x : prompts) S.push_back({x, cot_trace(f, x, T)});
  return S;
}

}  // namespace arlab
