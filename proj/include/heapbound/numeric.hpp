#pragma once

#include <cstdint>
#include <vector>

namespace heapbound {

// Binary digit statistics of a key count n >= 1. Digits are stored
// most-significant first, so digits.front() is always 1.
struct BinaryProfile {
  std::uint64_t n = 0;
  std::vector<std::uint8_t> digits;
  std::uint64_t mu = 0;              // number of 1 digits
  std::uint64_t sigma = 0;           // number of 0 digits after the last 1; 0 iff n is odd
  std::uint64_t lambda = 0;          // number of 0 digits
  std::uint64_t lowest_one_bit = 0;  // bit index of the last 1 digit; always equals sigma
  std::uint64_t floor_log2 = 0;      // depth of the deepest level of the size-n complete tree
  std::uint64_t bit_length = 0;      // digit count; floor_log2 + 1

  bool operator==(const BinaryProfile&) const = default;
};

// Exact worst-case figures for building a max heap of n distinct keys bottom-up.
struct BoundReport {
  std::uint64_t n = 0;
  std::uint64_t worst_case_comparisons = 0;  // 2n - 2*mu(n) - sigma(n)
  std::uint64_t height_sum = 0;              // t(n) = n - bit_length(n) + lambda(n)

  bool operator==(const BoundReport&) const = default;
};

// All functions throw std::domain_error when n == 0.
BinaryProfile binary_profile(std::uint64_t n);

// Largest number of key comparisons bottom-up max-heap construction can
// perform on n distinct keys: 2n - 2*mu(n) - sigma(n).
std::uint64_t worst_case_bound(std::uint64_t n);

// t(n) = n - bit_length(n) + lambda(n), the sum of subtree heights over all
// internal nodes of the size-n complete binary tree. Also the exact upper
// bound on swaps performed by the construction.
std::uint64_t height_sum_formula(std::uint64_t n);

// Perfect-tree special case 2n - 2*bit_length(n). Defined only when n + 1 is
// a power of two; throws std::domain_error otherwise. Agrees with
// worst_case_bound on its domain.
std::uint64_t kruskal_bound(std::uint64_t n);

BoundReport bound_report(std::uint64_t n);

}  // namespace heapbound
