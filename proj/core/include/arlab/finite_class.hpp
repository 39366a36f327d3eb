#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "arlab/generator.hpp"

namespace arlab {

/// Default limit on the number of generators any constructor will enumerate.
inline constexpr std::size_t kDefaultEnumerationCap = std::size_t{1} << 20U;

/// Ordered list of generators sharing one horizon. Order is part of the
/// value: ERM returns the first consistent member.
class FiniteClass {
 public:
  FiniteClass() = default;
  /// Throws std::invalid_argument if the class is empty or a generator's
  /// horizon differs from `horizon`.
  FiniteClass(std::vector<Generator> generators, std::size_t horizon, std::string name = {});

  std::size_t size() const noexcept { return generators_.size(); }
  bool empty() const noexcept { return generators_.empty(); }
  std::size_t horizon() const noexcept { return horizon_; }
  const std::string& name() const noexcept { return name_; }
  const Generator& operator[](std::size_t i) const { return generators_[i]; }
  const Generator& at(std::size_t i) const { return generators_.at(i); }
  const std::vector<Generator>& generators() const noexcept { return generators_; }
  auto begin() const noexcept { return generators_.begin(); }
  auto end() const noexcept { return generators_.end(); }

  /// Copy without structurally identical generators (first occurrence kept).
  FiniteClass deduplicated() const;

 private:
  std::vector<Generator> generators_;
  std::size_t horizon_ = 0;
  std::string name_;
};

/// Throws EnumerationTooLarge when count > cap.
void check_enumeration(long double count, std::size_t cap, const std::string& what);

}  // namespace arlab
