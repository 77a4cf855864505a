#include "heapbound/adversary.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <iterator>
#include <numeric>
#include <stdexcept>

#include "heapbound/treegeom.hpp"

namespace heapbound {

namespace {

// Subtree node indices in level order, which for a complete tree is the same
// as ascending index order.
std::vector<std::uint64_t> subtree_nodes(std::uint64_t root, std::uint64_t n) {
  std::vector<std::uint64_t> nodes;
  std::uint64_t lo = root, hi = root;
  while (lo <= n) {
    for (std::uint64_t x = lo; x <= std::min(hi, n); ++x) nodes.push_back(x);
    lo *= 2;
    hi = 2 * hi + 1;
  }
  return nodes;
}

std::uint64_t subtree_size(std::uint64_t root, std::uint64_t n) {
  std::uint64_t count = 0;
  std::uint64_t lo = root, hi = root;
  while (lo <= n) {
    count += std::min(hi, n) - lo + 1;
    lo *= 2;
    hi = 2 * hi + 1;
  }
  return count;
}

// Roots of the maximal subtrees hanging off the root-to-n path: the sibling
// of each path child, when present. Walking the path downward yields them in
// ascending index order on each side.
struct OffPathRoots {
  std::vector<std::uint64_t> left;   // sibling index below the path child
  std::vector<std::uint64_t> right;  // sibling index above the path child
};

OffPathRoots off_path_roots(const PathDescriptor& path, std::uint64_t n) {
  OffPathRoots roots;
  for (std::size_t d = 0; d + 1 < path.nodes.size(); ++d) {
    const std::uint64_t child = path.nodes[d + 1];
    const std::uint64_t sibling = child ^ 1u;
    if (sibling <= n) (sibling < child ? roots.left : roots.right).push_back(sibling);
  }
  return roots;
}

// Hand each root one contiguous ascending block starting at `next`; returns
// the first unused key.
Key fill_blocks(HeapArray& h, const std::vector<std::uint64_t>& roots, Key next) {
  const std::uint64_t n = h.size();
  for (std::uint64_t root : roots) {
    std::vector<Key> block(subtree_size(root, n));
    std::iota(block.begin(), block.end(), next);
    fill_min_heap_block(h, root, block);
    next += block.size();
  }
  return next;
}

}  // namespace

void fill_min_heap_block(HeapArray& h, std::uint64_t root, std::span<const Key> keys) {
  const std::uint64_t n = h.size();
  if (root < 1 || root > n) throw std::domain_error("fill_min_heap_block: root out of range");
  const std::vector<std::uint64_t> nodes = subtree_nodes(root, n);
  if (nodes.size() != keys.size())
    throw std::domain_error("fill_min_heap_block: key count does not match subtree size");
  // Ascending keys in level order put the smallest key at the root of every
  // subtree below `root`.
  for (std::size_t i = 0; i < nodes.size(); ++i) h[nodes[i]] = keys[i];
}

HeapArray worst_case_odd(std::uint64_t n) {
  if (n == 0 || (n & 1u) == 0) throw std::domain_error("worst_case_odd: n must be odd");
  const PathDescriptor path = distinguished_path(n);
  HeapArray h(std::vector<Key>(n, 0));

  Key next = n - path.nodes.size() + 1;
  for (std::uint64_t node : path.nodes) h[node] = next++;

  const OffPathRoots roots = off_path_roots(path, n);
  std::vector<std::uint64_t> all_roots;
  all_roots.reserve(roots.left.size() + roots.right.size());
  std::merge(roots.left.begin(), roots.left.end(), roots.right.begin(), roots.right.end(),
             std::back_inserter(all_roots));
  const Key used = fill_blocks(h, all_roots, Key{1});
  assert(used == n - path.nodes.size() + 1);
  (void)used;
  return h;
}

HeapArray worst_case_even(std::uint64_t n) {
  if (n == 0 || (n & 1u) != 0)
    throw std::domain_error("worst_case_even: n must be even and positive");
  const PathDescriptor path = distinguished_path(n);
  const OffPathRoots roots = off_path_roots(path, n);
  const std::uint64_t path_len = path.nodes.size();
  const std::uint64_t lower_len = static_cast<std::uint64_t>(std::countr_zero(n)) + 1;
  const std::uint64_t upper_len = path_len - lower_len;

  HeapArray h(std::vector<Key>(n, 0));
  Key next = fill_blocks(h, roots.right, Key{1});
  for (std::uint64_t d = upper_len; d < path_len; ++d) h[path.nodes[d]] = next++;
  for (std::uint64_t d = 0; d < upper_len; ++d) h[path.nodes[d]] = next++;
  next = fill_blocks(h, roots.left, next);
  assert(next == n + 1);
  return h;
}

HeapArray worst_case(std::uint64_t n) {
  if (n == 0) throw std::domain_error("worst_case: n must be >= 1");
  return (n & 1u) ? worst_case_odd(n) : worst_case_even(n);
}

}  // namespace heapbound
