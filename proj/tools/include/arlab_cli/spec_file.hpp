#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "arlab/finite_class.hpp"

namespace arlab::cli {

/// One class-spec object. Which fields are required depends on `type`:
///   full            horizon
///   shifted_subset  N, s_max
///   product         parts
///   linear_grid     d, weight_bound
///   parity          k_max
///   atdim_example   depth
///   taxonomy        rate (s_max optional)
/// `horizon` is optional everywhere except `full`; when absent the smallest
/// horizon that fits both the construction and the caller's prompts is used.
struct ClassSpec {
  std::string type;
  std::vector<std::int64_t> N;
  std::vector<std::int64_t> rate;
  std::optional<std::size_t> s_max;
  std::optional<std::size_t> horizon;
  std::optional<std::size_t> d;
  std::optional<std::int64_t> weight_bound;
  std::optional<std::size_t> k_max;
  std::optional<std::size_t> depth;
  std::vector<ClassSpec> parts;
};

/// Parses JSON text. Throws SpecError naming the offending field.
ClassSpec parse_class_spec(const std::string& text);
/// Reads and parses a file. Throws SpecError("file", ...) if unreadable.
ClassSpec load_class_spec(const std::string& path);

struct BuiltClass {
  FiniteClass F;
  /// Window length, for linear_grid specs.
  std::optional<std::size_t> linear_d;
};

/// `min_horizon` is the longest prompt the caller will use plus the longest
/// generation; an explicit horizon below it is kept (evaluation then fails
/// with HorizonExceeded). Taxonomy specs default s_max to the length of
/// `rate`.
BuiltClass build_class(const ClassSpec& spec, std::size_t min_horizon, std::size_t cap);

}  // namespace arlab::cli
