#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "heapbound/heap.hpp"

namespace heapbound {

// Independent checks for the worst-case bound: brute force over all
// permutations for small n, seeded random sampling for larger n, and a
// per-size verification sweep combining every check.

inline constexpr std::uint64_t kDefaultExhaustiveLimit = 9;

struct ExhaustiveResult {
  std::uint64_t max_comparisons = 0;
  std::vector<Key> witness;  // lexicographically smallest maximizing permutation
};

// Run buildheap on every permutation of 1..n. Refuses n > limit with
// std::domain_error; n! runs make anything past 10 or 11 impractical.
ExhaustiveResult exhaustive_max_comparisons(std::uint64_t n,
                                            std::uint64_t limit = kDefaultExhaustiveLimit);

// Uniform permutation of 1..n via Fisher-Yates. Draws come straight from
// std::mt19937_64 with rejection sampling instead of std::shuffle or
// std::uniform_int_distribution, whose outputs differ between standard
// library implementations; the same seed yields the same permutations
// everywhere.
std::vector<Key> random_permutation(std::uint64_t n, std::mt19937_64& rng);

struct RandomCheckResult {
  bool ok = false;  // no sampled run exceeded the comparison or swap bound
  std::uint64_t max_comparisons = 0;
  std::uint64_t max_swaps = 0;
};

// Run buildheap on `samples` seeded random permutations of 1..n and compare
// against worst_case_bound(n) and height_sum_formula(n). Throws
// std::domain_error when n == 0 or samples == 0.
RandomCheckResult random_bound_check(std::uint64_t n, std::uint64_t samples, std::uint64_t seed);

struct VerifyRecord {
  std::uint64_t n = 0;
  std::uint64_t mu = 0;
  std::uint64_t sigma = 0;
  std::uint64_t lambda = 0;
  std::uint64_t bound = 0;      // predicted worst-case comparisons
  std::uint64_t t_formula = 0;  // closed-form height sum
  std::uint64_t t_direct = 0;   // per-node height sum
  std::uint64_t achieved = 0;   // comparisons of the generated worst case
  std::optional<std::uint64_t> exhaustive;  // brute-force max, small n only

  bool witness_ok = false;     // achieved == bound, heap result, permutation kept, swaps <= t
  bool height_ok = false;      // t_direct == t_formula
  bool cover_ok = false;       // edge_cover_check(n)
  bool exhaustive_ok = false;  // exhaustive max == bound, or skipped
  bool random_ok = false;      // sampled runs stayed within bounds, or skipped
  bool pass = false;
};

struct VerifyOptions {
  std::uint64_t exhaustive_limit = kDefaultExhaustiveLimit;
  std::uint64_t samples = 0;  // 0 disables random sampling
  std::uint64_t seed = 1;
};

// One record per n in lo..hi. Check failures mark the record and keep going;
// only precondition violations (lo < 1 or lo > hi) throw.
std::vector<VerifyRecord> verify_range(std::uint64_t lo, std::uint64_t hi,
                                       const VerifyOptions& opts = {});

}  // namespace heapbound
