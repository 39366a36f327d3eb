#include "arlab/finite_class.hpp"

#include <stdexcept>
#include <unordered_set>

#include "arlab/errors.hpp"

namespace arlab {

FiniteClass::FiniteClass(std::vector<Generator> generators, std::size_t horizon, std::string name)
    : generators_(std::move(generators)), horizon_(horizon), name_(std::move(name)) {
  if (generators_.empty()) throw std::invalid_argument("a finite class needs at least one generator");
  for (const auto& g : generators_) {
    if (g.horizon() != horizon_) {
      throw std::invalid_argument("generator " + g.describe() + " has horizon " + std::to_string(g.horizon()) +
                                  ", class horizon is " + std::to_string(horizon_));
    }
  }
}

FiniteClass FiniteClass::deduplicated() const {
  std::unordered_set<std::string> seen;
  std::vector<Generator> kept;
  for (const auto& g : generators_) {
    if (seen.insert(g.describe()).second) kept.push_back(g);
  }
  return FiniteClass(std::move(kept), horizon_, name_);
}

void check_enumeration(long double count, std::size_t cap, const std::string& what) {
  if (count > static_cast<long double>(cap)) {
    throw EnumerationTooLarge(what + " would enumerate " + std::to_string(static_cast<double>(count)) +
                              " generators (cap " + std::to_string(cap) + ")");
  }
}

}  // namespace arlab
