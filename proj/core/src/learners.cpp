#include "arlab/learners.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <stdexcept>

#include "arlab/errors.hpp"
#include "arlab/evolution.hpp"
#include "arlab/rng.hpp"
#include "arlab/shattering.hpp"

namespace arlab {

std::size_t erm_index(const FiniteClass& F, const BinarySample& A) {
  for (std::size_t i = 0; i < F.size(); ++i) {
    if (consistent(F[i], A)) return i;
  }
  throw NotRealizable("no generator of the class is consistent with the " + std::to_string(A.size()) +
                      " given examples");
}

const Generator& erm(const FiniteClass& F, const BinarySample& A) { return F[erm_index(F, A)]; }

std::size_t erm_e2e_index(const FiniteClass& F, const E2eSample& A, std::size_t T) {
  for (std::size_t i = 0; i < F.size(); ++i) {
    const bool ok = std::all_of(A.begin(), A.end(), [&](const auto& e) { return e2e_output(F[i], e.first, T) == e.second; });
    if (ok) return i;
  }
  throw NotRealizable("no generator of the class matches the " + std::to_string(A.size()) + " final answers");
}

MajorityHypothesis::MajorityHypothesis(std::vector<Generator> voters) : voters_(std::move(voters)) {
  if (voters_.empty()) throw std::invalid_argument("majority of zero voters");
  horizon_ = std::numeric_limits<std::size_t>::max();
  for (const auto& v : voters_) horizon_ = std::min(horizon_, v.horizon());
}

Bit MajorityHypothesis::operator()(BitView x) const {
  std::size_t ones = 0;
  for (const auto& v : voters_) ones += static_cast<std::size_t>(to_int(v(x)));
  return to_bit(2 * ones > voters_.size());
}

BitString MajorityHypothesis::cot(BitView x, std::size_t T) const {
  if (T == 0) throw std::invalid_argument("cot: T must be at least 1");
  require_horizon(x.size(), T, horizon_);
  return rollout(*this, x, T);
}

std::size_t CompressedCot::index_list_size() const noexcept {
  std::size_t n = 0;
  for (const auto& a : side_info) n += a.size();
  return n;
}

double CompressedCot::information_bits(std::size_t m) const noexcept {
  return static_cast<double>(s) * static_cast<double>(rounds()) * std::log2(static_cast<double>(std::max<std::size_t>(m, 2)));
}

namespace {

std::size_t default_draw_size(const FiniteClass& F, const BinarySample& U, const BoostingOptions& options) {
  if (options.s > 0) return options.s;
  std::set<BitString> prompts;
  for (const auto& e : U) prompts.insert(e.x);
  const std::size_t vc = vc_dimension(restrict_base(F, Domain(prompts.begin(), prompts.end())));
  return options.vc_multiplier * std::max<std::size_t>(1, vc);
}

}  // namespace

CompressedCot cot_compress(const FiniteClass& F, const CotSample& S, std::uint64_t seed, const BoostingOptions& options) {
  const BinarySample U = inflate(S);
  CompressedCot out;
  out.kernel = CotSample(S.T());

  if (consistent(erm(F, {}), U)) {
    out.side_info.emplace_back();
    return out;
  }

  const std::size_t s = default_draw_size(F, U, options);
  out.s = s;
  Rng rng(seed);
  std::vector<int> exponent(U.size(), 0);
  std::vector<std::size_t> ones_votes(U.size(), 0);
  std::vector<std::vector<std::size_t>> rounds;  // original indices per round

  for (std::size_t round = 0; round < options.n_max; ++round) {
    const int top = *std::max_element(exponent.begin(), exponent.end());
    std::vector<double> weights(U.size());
    for (std::size_t i = 0; i < U.size(); ++i) weights[i] = std::pow(options.weight_factor, exponent[i] - top);
    double total = 0;
    for (double w : weights) total += w;

    bool accepted = false;
    for (std::size_t attempt = 0; attempt < options.retry_cap && !accepted; ++attempt) {
      BinarySample draw;
      draw.reserve(s);
      for (std::size_t k = 0; k < s; ++k) draw.push_back(U[rng.weighted_index(weights)]);
      const CotSample A = deflate(draw, S);
      const Generator& h = erm(F, inflate(A));
      std::vector<Bit> pred(U.size());
      double err = 0;
      for (std::size_t i = 0; i < U.size(); ++i) {
        pred[i] = h(U[i].x);
        if (pred[i] != U[i].y) err += weights[i];
      }
      if (err > total / 3.0) continue;
      accepted = true;

      std::vector<std::size_t> origins;
      for (const auto& e : draw) origins.push_back(*e.origin);
      std::sort(origins.begin(), origins.end());
      origins.erase(std::unique(origins.begin(), origins.end()), origins.end());
      rounds.push_back(std::move(origins));
      for (std::size_t i = 0; i < U.size(); ++i) {
        ones_votes[i] += static_cast<std::size_t>(to_int(pred[i]));
        if (pred[i] != U[i].y) ++exponent[i];
      }
    }
    if (!accepted) {
      throw BoostingFailed("no weak hypothesis with weighted error <= 1/3 after " + std::to_string(options.retry_cap) +
                           " draws of size " + std::to_string(s) + " in round " + std::to_string(round + 1));
    }

    const std::size_t n = rounds.size();
    bool all_correct = true;
    for (std::size_t i = 0; i < U.size() && all_correct; ++i) {
      all_correct = to_bit(2 * ones_votes[i] > n) == U[i].y;
    }
    if (all_correct) {
      std::vector<std::size_t> kernel_idx;
      for (const auto& r : rounds) kernel_idx.insert(kernel_idx.end(), r.begin(), r.end());
      std::sort(kernel_idx.begin(), kernel_idx.end());
      kernel_idx.erase(std::unique(kernel_idx.begin(), kernel_idx.end()), kernel_idx.end());
      out.kernel = S.subset(kernel_idx);
      for (const auto& r : rounds) {
        std::vector<std::size_t> pos;
        pos.reserve(r.size());
        for (std::size_t idx : r) {
          pos.push_back(static_cast<std::size_t>(std::lower_bound(kernel_idx.begin(), kernel_idx.end(), idx) -
                                                 kernel_idx.begin()));
        }
        out.side_info.push_back(std::move(pos));
      }
      return out;
    }
  }
  throw BoostingFailed("majority vote still wrong after " + std::to_string(options.n_max) + " rounds");
}

MajorityHypothesis cot_reconstruct(const FiniteClass& F, const CompressedCot& c) {
  std::vector<Generator> voters;
  voters.reserve(c.rounds());
  for (const auto& positions : c.side_info) voters.push_back(erm(F, inflate(c.kernel.subset(positions))));
  return MajorityHypothesis(std::move(voters));
}

}  // namespace arlab
