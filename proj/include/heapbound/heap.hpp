#pragma once

#include <cstdint>
#include <vector>

namespace heapbound {

using Key = std::uint64_t;

// 1-indexed key array backing a complete binary tree: H(1) is the root and
// the children of node i are nodes 2i and 2i+1. Physically the keys sit in a
// contiguous 0-based vector; only the accessors shift the index.
class HeapArray {
 public:
  HeapArray() = default;
  explicit HeapArray(std::vector<Key> keys) : keys_(std::move(keys)) {}

  std::uint64_t size() const { return keys_.size(); }
  bool empty() const { return keys_.empty(); }
  Key operator[](std::uint64_t i) const { return keys_[i - 1]; }
  Key& operator[](std::uint64_t i) { return keys_[i - 1]; }
  const std::vector<Key>& keys() const { return keys_; }

  bool operator==(const HeapArray&) const = default;

 private:
  std::vector<Key> keys_;
};

struct RunStats {
  std::uint64_t comparisons = 0;  // key-to-key comparisons only; index tests are free
  std::uint64_t swaps = 0;

  bool operator==(const RunStats&) const = default;
};

// Sift the key at node i down into the almost-heap H(i..n), counting exactly.
// Every loop iteration entered costs two comparisons: one to pick the larger
// child and one to test the sifted key against it, even when the iteration
// stops the sift. When the walk ends on the single-child node n/2 of an
// even-sized array, the final test costs one more comparison whether or not
// it swaps. Throws std::domain_error unless 1 <= i <= size.
void heapdown(HeapArray& h, std::uint64_t i, RunStats& stats);

// Same as heapdown but first validates the almost-heap precondition and
// throws std::logic_error when it does not hold. The validation performs no
// counted comparisons; use plain heapdown for timing-faithful runs.
void heapdown_checked(HeapArray& h, std::uint64_t i, RunStats& stats);

// Bottom-up max-heap construction: heapdown for i = size/2 down to 1.
// Throws std::domain_error on an empty array.
RunStats buildheap(HeapArray& h);

// True iff every node j in from..size whose parent is also in that range
// satisfies H(parent) >= H(j). Performs no counted comparisons.
bool is_heap(const HeapArray& h, std::uint64_t from = 1);

// Like is_heap over from..size, but the pairs whose parent is node `from`
// itself are exempt. This is the precondition state of heapdown.
bool is_almost_heap(const HeapArray& h, std::uint64_t from);

// True iff the subtree rooted at j is a minimum heap (every parent at most
// its children).
bool is_min_heap_subtree(const HeapArray& h, std::uint64_t j);

// True iff the keys are exactly 1..size in some order.
bool is_permutation_1_to_n(const HeapArray& h);

}  // namespace heapbound
