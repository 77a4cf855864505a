#pragma once

#include <cstdint>
#include <span>

#include "heapbound/heap.hpp"

namespace heapbound {

// Generators for inputs on which bottom-up heap construction performs the
// worst-case number of comparisons exactly. Keys are always 1..n.

// Write `keys` (sorted ascending) over the subtree rooted at `root` in level
// order, which makes every node of the subtree a minimum-heap root. Throws
// std::domain_error when the key count does not match the subtree size or
// root is out of range.
void fill_min_heap_block(HeapArray& h, std::uint64_t root, std::span<const Key> keys);

// Odd n: the root-to-n path takes the bit_length(n) largest keys increasing
// with depth; each maximal off-path subtree becomes a minimum heap over one
// contiguous block of the remaining keys, blocks handed out in ascending
// root order. Throws std::domain_error unless n is odd.
HeapArray worst_case_odd(std::uint64_t n);

// Even n: keys rise from the subtrees right of the path (1 upward), through
// the lower path segment, then the upper path segment, and the subtrees left
// of the path take the largest keys. Path segments increase with depth and
// off-path subtrees are minimum heaps as in the odd case. Throws
// std::domain_error unless n is even and positive.
HeapArray worst_case_even(std::uint64_t n);

// Parity dispatch to the two generators above. Throws on n == 0.
HeapArray worst_case(std::uint64_t n);

}  // namespace heapbound
