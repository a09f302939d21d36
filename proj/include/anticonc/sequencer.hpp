#pragma once

#include "anticonc/graph.hpp"
#include "anticonc/ground_set.hpp"
#include "anticonc/numeric.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace anticonc {

inline constexpr std::uint64_t kDefaultSeed = 424242;

/// An ordering (v_1,...,v_n) of a zero-free ground set together with its
/// partial sums (s_0,...,s_n), s_0 = 0. Consecutive sums always differ.
struct Ordering {
  GroundSet ground;
  std::vector<BigInt> perm;
  std::vector<BigInt> partial_sums;  // size n+1, canonical
};

/// Builds and validates an ordering from a permutation of the set.
Ordering make_ordering(const GroundSet& ground, std::vector<BigInt> perm);

/// Pairs (i, j), i < j, that are graph edges with equal partial sums.
/// Index 0 is not a graph vertex and never participates.
struct CollisionReport {
  std::vector<std::pair<int, int>> violations;
  std::size_t count() const { return violations.size(); }
  bool clean() const { return violations.empty(); }
};

CollisionReport verify(const Ordering& ordering, const ConstraintGraph& gamma);

/// Finds a subset T of size >= m none of whose nonempty subsets of size
/// <= t sums to the identity. Failure means the search budget ran out (the
/// set may be below the existence threshold), not a nonexistence proof.
std::optional<std::vector<BigInt>> zero_sum_free_subset(const GroundSet& set, unsigned t,
                                                        unsigned m);

/// Orders h elements of U so that (a) partial sums differ across edges of
/// gamma among indices 1..h and (b) no partial sum s_0..s_h equals `total`.
/// total must be nonzero (s_0 = 0 must itself satisfy (b); throws
/// otherwise). Success is guaranteed for h <= |U| - max_degree - 1, where a
/// candidate count rules out dead ends; larger h may exhaust the
/// backtracking and return nullopt.
std::optional<std::vector<BigInt>> greedy_prefix(const GroundSet& u, unsigned h,
                                                 const ConstraintGraph& gamma,
                                                 const BigInt& total);

struct SequencingParams {
  unsigned t = 0;            // 0 = auto: max_degree + 1
  unsigned m = 0;            // 0 = auto: smallest m with collision bound < 0.9
  unsigned max_trials = 2000;
  std::uint64_t seed = kDefaultSeed;
  int threads = 1;
};

struct SequencingResult {
  bool success = false;
  std::optional<Ordering> ordering;  // present iff success
  CollisionReport best_report;       // diagnostics for the best attempt seen
  unsigned trials_used = 0;
  bool used_repair = false;
  std::string stage;  // "pipeline" or "pure-random"
};

/// Randomized solver: zero-sum-free subset, deterministic prefix, seeded
/// uniform completions, then local repair by suffix transpositions. When the
/// staged preconditions fail (small n, zero total, no feasible m) it
/// degrades to pure random search over full orderings plus repair.
/// Identical (inputs, seed) give identical results for any thread count.
SequencingResult randomized_sequencing(const GroundSet& set, const ConstraintGraph& gamma,
                                       const SequencingParams& params = {});

/// Lexicographically first valid ordering, or nullopt as a certified
/// "none exists". Guard: n <= 10.
std::optional<Ordering> exhaustive_sequencing(const GroundSet& set,
                                              const ConstraintGraph& gamma);

/// Right-hand side of the expected-collision-count bound
///   t^2/m + (m+t)t/m * (1 - (m-(t-1))^t/(m+t)^t) + 1/3 + t*d/m.
double expected_collisions_bound(unsigned n, unsigned t, unsigned m, unsigned d);

struct MonteCarloEstimate {
  double mean;
  double std_error;
  unsigned trials;
};

/// Samples uniform completions of a fixed prefix and averages the violation
/// count; std_error is the standard error of the mean.
MonteCarloEstimate monte_carlo_collisions(const GroundSet& set, const ConstraintGraph& gamma,
                                          const std::vector<BigInt>& prefix, unsigned trials,
                                          std::uint64_t seed);

}  // namespace anticonc
