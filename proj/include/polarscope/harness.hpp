#pragma once

#include <cstdint>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include "polarscope/pseudopolar.hpp"

namespace polarscope {

struct HarnessOptions {
  std::size_t max_sections = std::numeric_limits<std::size_t>::max();  // same-rank hyperplanes to test
  std::size_t samples = 100;                                            // random non-examples
  std::uint64_t seed = 1;
  bool embedded_on_negatives = true;
  unsigned threads = 0;  // 0: POLARSCOPE_THREADS, else hardware concurrency
};

/// One candidate set that the theorem says is pseudopolar.
struct PositiveResult {
  std::string label;
  std::vector<Element> covector;  // empty for the quadric-in-symplectic set
  std::size_t size = 0;
  bool strong = false;
  bool pseudo = false;
  bool alt = false;
  EmbeddedVerdict embedded;
  bool passed = false;  // all checks pass, rank d, parameter e-1, |O| and |E| as expected
};

/// One random set of generators of the size a pseudopolar set must have.
struct NegativeResult {
  std::size_t sample = 0;
  std::vector<std::uint32_t> members;  // positions in the space's generator list
  bool strong = false;
  bool pseudo = false;
  bool alt = false;
  std::optional<bool> embedded;  // is_polar_space, when run
  std::string pseudo_failure;    // first failing condition of check_pseudopolar
  bool rejected() const { return !pseudo; }
};

struct HarnessSummary {
  PolarSpaceSpec space;
  std::size_t hyperplanes_total = 0;
  std::size_t hyperplanes_examined = 0;
  std::size_t tangent = 0;
  std::size_t same_rank = 0;
  std::size_t rank_drop = 0;
  std::vector<PositiveResult> positives;
  std::vector<NegativeResult> negatives;
  std::size_t implication_violations = 0;  // strong pass without pseudo and alt pass

  bool all_positive_pass() const;
  bool all_negative_fail() const;
  bool passed() const { return all_positive_pass() && all_negative_fail() && implication_violations == 0; }
};

/// Worker count from POLARSCOPE_THREADS (if set and positive) or the hardware.
unsigned default_threads();

/// Uniform integer in [0, n) by rejection, independent of the standard
/// library's distribution implementation.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n);

/// k distinct indices from [0, n), sorted.
std::vector<std::uint32_t> random_subset(std::mt19937_64& rng, std::uint32_t n, std::uint32_t k);

/// Normalized covectors of PG(n, q) in lexicographic order.
std::vector<std::vector<Element>> hyperplane_covectors(const Field& field, int n);

/// Runs the checkers and the embedded verifier on every positive instance of
/// the characterization (same-rank hyperplane sections; the quadric set for
/// W(2d-1, q), q even) and on seeded random sets of the same size.
/// Throws InvalidArgument for spaces outside Q(2d,q), W(2d-1,q) q even,
/// H(2d,q^2), Q-(2d+1,q).
HarnessSummary equivalence_harness(const PolarSpace& space, const HarnessOptions& options = {});

}  // namespace polarscope
