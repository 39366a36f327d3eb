#include "arlab/evolution.hpp"

#include <string>

#include "arlab/errors.hpp"

namespace arlab {

void require_horizon(std::size_t prompt_length, std::size_t T, std::size_t horizon) {
  if (prompt_length + T > horizon) {
    throw HorizonExceeded("prompt of length " + std::to_string(prompt_length) + " with T = " + std::to_string(T) +
                          " exceeds horizon " + std::to_string(horizon));
  }
}

BitString apply_and_append(const Generator& f, BitView x) {
  BitString out(x);
  out.push_back(f(x));
  return out;
}

BitString cot_trace(const Generator& f, BitView x, std::size_t T) {
  if (T == 0) throw std::invalid_argument("cot_trace: T must be at least 1");
  require_horizon(x.size(), T, f.horizon());
  return rollout([&f](BitView s) { return f(s); }, x, T);
}

Bit e2e_output(const Generator& f, BitView x, std::size_t T) {
  return cot_trace(f, x, T).back();
}

}  // namespace arlab
