#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace arlab {

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
  double wall_time_ms = 0;
};

/// Names accepted by run_suite.
const std::vector<std::string>& suite_names();

/// Runs one named property suite. Throws std::invalid_argument for an
/// unknown name.
std::vector<Check> run_suite(const std::string& name, std::uint64_t seed);

/// Individual suites.
std::vector<Check> lemma_suite(std::uint64_t seed);
std::vector<Check> compression_suite(std::uint64_t seed, std::size_t cot_trials = 500,
                                     std::size_t linear_trials = 500);
std::vector<Check> parity_suite(std::uint64_t seed);
std::vector<Check> sauer_suite(std::uint64_t seed, std::size_t trees = 1000);

/// Building blocks reused by the acceptance binary.

/// Random realizable CoT samples over F(N = {1,3,4}) (s_max 16, H 32) with
/// m <= 20 and T <= 4; counts samples whose compression round trip is not
/// consistent (boosting failures included).
struct RoundTripStats {
  std::size_t trials = 0;
  std::size_t failures = 0;
  std::size_t max_kernel = 0;
  std::string first_failure;
};
RoundTripStats cot_round_trips(std::uint64_t seed, std::size_t trials);

/// Random realizable samples over linear windows d in {1,2,3}, m <= 15,
/// T <= 3: kernel size, deletion stability and round trip.
struct LinearStats {
  std::size_t trials = 0;
  std::size_t kernel_violations = 0;
  std::size_t stability_violations = 0;
  std::size_t round_trip_failures = 0;
  std::size_t deletions_checked = 0;
  std::string first_failure;
};
LinearStats linear_round_trips(std::uint64_t seed, std::size_t trials);

/// Growth-function inequalities on random small classes (m <= 6, T <= 3):
/// first-bit projection below the trace patterns, and Sauer-Shelah-Perles
/// style bounds for the binary and trace restrictions.
struct GrowthStats {
  std::size_t classes = 0;
  std::size_t comparisons = 0;
  std::size_t violations = 0;
  std::string first_failure;
};
GrowthStats growth_inequalities(std::uint64_t seed, std::size_t classes);

/// Sauer bound for leveled depth on random depth-10 trees.
struct SauerStats {
  std::size_t trees = 0;
  std::size_t violations = 0;
  std::size_t max_leaves = 0;
  std::size_t max_depth_found = 0;
};
SauerStats sauer_random_trees(std::uint64_t seed, std::size_t trees, std::size_t depth = 10);

}  // namespace arlab
