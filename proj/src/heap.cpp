#include "heapbound/heap.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace heapbound {

void heapdown(HeapArray& h, std::uint64_t i, RunStats& stats) {
  const std::uint64_t n = h.size();
  if (i < 1 || i > n) throw std::domain_error("heapdown: node out of range");
  while (2 * i + 1 <= n) {
    std::uint64_t k = 2 * i;
    ++stats.comparisons;
    if (h[k] < h[k + 1]) k = k + 1;  // larger child
    ++stats.comparisons;
    if (h[i] < h[k]) {
      std::swap(h[i], h[k]);
      ++stats.swaps;
      i = k;
    } else {
      return;  // sift stops here; the single-child test below is skipped
    }
  }
  if (2 * i == n) {
    // Node n/2 of an even-sized array has one child, so there is no child
    // comparison; the key test is still counted whichever way it goes.
    ++stats.comparisons;
    if (h[i] < h[n]) {
      std::swap(h[i], h[n]);
      ++stats.swaps;
    }
  }
}

void heapdown_checked(HeapArray& h, std::uint64_t i, RunStats& stats) {
  const std::uint64_t n = h.size();
  if (i < 1 || i > n) throw std::domain_error("heapdown: node out of range");
  if (!is_almost_heap(h, i))
    throw std::logic_error("heapdown: H(i..n) is not an almost-heap");
  heapdown(h, i, stats);
}

RunStats buildheap(HeapArray& h) {
  if (h.empty()) throw std::domain_error("buildheap: array is empty");
  RunStats stats;
  for (std::uint64_t i = h.size() / 2; i >= 1; --i) heapdown(h, i, stats);
  return stats;
}

bool is_heap(const HeapArray& h, std::uint64_t from) {
  const std::uint64_t n = h.size();
  if (from < 1 || from > n) throw std::domain_error("is_heap: node out of range");
  for (std::uint64_t j = from + 1; j <= n; ++j) {
    const std::uint64_t parent = j / 2;
    if (parent >= from && h[parent] < h[j]) return false;
  }
  return true;
}

bool is_almost_heap(const HeapArray& h, std::uint64_t from) {
  const std::uint64_t n = h.size();
  if (from < 1 || from > n) throw std::domain_error("is_almost_heap: node out of range");
  for (std::uint64_t j = from + 1; j <= n; ++j) {
    const std::uint64_t parent = j / 2;
    if (parent > from && h[parent] < h[j]) return false;
  }
  return true;
}

bool is_min_heap_subtree(const HeapArray& h, std::uint64_t j) {
  const std::uint64_t n = h.size();
  if (j < 1 || j > n) throw std::domain_error("is_min_heap_subtree: node out of range");
  // Level-order walk over the subtree of j.
  std::uint64_t lo = j, hi = j;
  while (lo <= n) {
    const std::uint64_t level_end = std::min(hi, n);
    for (std::uint64_t x = lo; x <= level_end; ++x)
      for (std::uint64_t c = 2 * x; c <= n && c <= 2 * x + 1; ++c)
        if (h[x] > h[c]) return false;
    lo *= 2;
    hi = 2 * hi + 1;
  }
  return true;
}

bool is_permutation_1_to_n(const HeapArray& h) {
  const std::uint64_t n = h.size();
  std::vector<std::uint8_t> seen(n + 1, 0);
  for (Key key : h.keys()) {
    if (key < 1 || key > n || seen[key]) return false;
    seen[key] = 1;
  }
  return true;
}

}  // namespace heapbound
