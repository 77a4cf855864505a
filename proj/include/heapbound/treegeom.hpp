#pragma once

#include <cstdint>
#include <vector>

namespace heapbound {

// Geometry of the complete binary tree laid out in an array: node 1 is the
// root and node i has children 2i and 2i+1. Heights are counted in edges, so
// a leaf has height 0.

enum class EdgeDir : std::uint8_t { left, right };

// The path from the root to the last node n. The node at depth d is the
// binary prefix of n that is d+1 digits long, so the path node at distance j
// above n is n >> j and the digit at depth d is the low bit of that prefix.
struct PathDescriptor {
  std::vector<std::uint64_t> nodes;      // nodes.front() == 1, nodes.back() == n
  std::vector<std::uint8_t> digits;      // binary digits of n, aligned with nodes
  std::vector<EdgeDir> edge_directions;  // direction of edge nodes[d] -> nodes[d+1]
};

// Path that leaves an internal node j through its right child and then keeps
// to left children: j, 2j+1, 2(2j+1), 4(2j+1), ... truncated at n. When the
// right child 2j+1 is already absent the path is the single node j.
struct SpecialPath {
  std::uint64_t root = 0;
  std::vector<std::uint64_t> nodes;
  std::uint64_t length = 0;  // edge count, nodes.size() - 1
};

// Disjoint split of nodes 1..n (n even) around the root-to-n path. Off-path
// nodes compare their index against the path node at the same depth. The path
// itself splits at height sigma(n): the deepest sigma(n)+1 path nodes form
// the lower segment, the rest the upper segment.
struct TreePartition {
  std::vector<std::uint64_t> left_of_path;
  std::vector<std::uint64_t> path_upper;
  std::vector<std::uint64_t> path_lower;
  std::vector<std::uint64_t> right_of_path;
};

// Height of the subtree rooted at j, i.e. the largest d with j * 2^d <= n.
// Throws std::domain_error unless 1 <= j <= n.
std::uint64_t subtree_height(std::uint64_t j, std::uint64_t n);

PathDescriptor distinguished_path(std::uint64_t n);

// Throws std::domain_error unless j is internal (1 <= j <= n/2).
SpecialPath special_path(std::uint64_t j, std::uint64_t n);

// 1, 2, 4, ..., 2^floor_log2(n).
std::vector<std::uint64_t> leftmost_path(std::uint64_t n);

// True iff the special paths of all internal nodes plus the leftmost path
// cover every tree edge exactly once and the special path lengths add up to
// n - 1 - floor_log2(n).
bool edge_cover_check(std::uint64_t n);

// Sum of subtree_height(j, n) over all internal j, evaluated per node. Kept
// independent of the closed form so the two can be checked against each other.
std::uint64_t height_sum_direct(std::uint64_t n);

// Throws std::domain_error unless n is even and positive.
TreePartition partition_around_path(std::uint64_t n);

}  // namespace heapbound
