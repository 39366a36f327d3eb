#pragma once

#include <cstddef>
#include <stdexcept>

#include "arlab/bits.hpp"
#include "arlab/generator.hpp"

namespace arlab {

/// Runs T steps of x <- x . next(x) and returns the T appended bits.
/// `next` is any callable BitView -> Bit; no horizon checks are made here.
template <class NextToken>
BitString rollout(NextToken&& next, BitView x, std::size_t T) {
  BitString buf(x);
  buf.reserve(x.size() + T);
  for (std::size_t t = 0; t < T; ++t) buf.push_back(next(buf.view()));
  return buf.suffix_from(x.size());
}

/// x followed by f(x).
BitString apply_and_append(const Generator& f, BitView x);

/// The T bits generated from x. Requires T >= 1 and |x| + T <= f.horizon().
BitString cot_trace(const Generator& f, BitView x, std::size_t T);

/// Last bit of cot_trace(f, x, T).
Bit e2e_output(const Generator& f, BitView x, std::size_t T);

/// Throws HorizonExceeded unless |x| + T <= horizon.
void require_horizon(std::size_t prompt_length, std::size_t T, std::size_t horizon);

}  // namespace arlab
