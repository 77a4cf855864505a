#include "heapbound/treegeom.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace heapbound {

namespace {

void require_positive(std::uint64_t n, const char* where) {
  if (n == 0) throw std::domain_error(std::string(where) + ": n must be >= 1");
}

}  // namespace

std::uint64_t subtree_height(std::uint64_t j, std::uint64_t n) {
  require_positive(n, "subtree_height");
  if (j < 1 || j > n) throw std::domain_error("subtree_height: node out of range");
  // The leftmost descendant of j at relative depth d has index j * 2^d, and
  // levels of a complete tree fill from the left, so the subtree reaches
  // depth d exactly when j * 2^d <= n, i.e. j <= n >> d.
  std::uint64_t h = 0;
  for (std::uint64_t m = n >> 1; j <= m; m >>= 1) ++h;
  return h;
}

PathDescriptor distinguished_path(std::uint64_t n) {
  require_positive(n, "distinguished_path");
  PathDescriptor path;
  for (std::uint64_t x = n; x >= 1; x >>= 1) path.nodes.push_back(x);
  std::reverse(path.nodes.begin(), path.nodes.end());
  path.digits.reserve(path.nodes.size());
  // The node at depth d is the (d+1)-digit prefix of n, so its low bit is
  // the digit of n at that depth.
  for (std::uint64_t x : path.nodes)
    path.digits.push_back(static_cast<std::uint8_t>(x & 1u));
  for (std::size_t d = 0; d + 1 < path.nodes.size(); ++d)
    path.edge_directions.push_back(path.digits[d + 1] ? EdgeDir::right : EdgeDir::left);
  return path;
}

SpecialPath special_path(std::uint64_t j, std::uint64_t n) {
  require_positive(n, "special_path");
  if (j < 1 || j > n / 2) throw std::domain_error("special_path: node is not internal");
  SpecialPath sp;
  sp.root = j;
  sp.nodes.push_back(j);
  // Right child first, then left children only. When n is even, node n/2 has
  // no right child and keeps an empty path.
  for (std::uint64_t x = 2 * j + 1; x <= n; x *= 2) sp.nodes.push_back(x);
  sp.length = sp.nodes.size() - 1;
  return sp;
}

std::vector<std::uint64_t> leftmost_path(std::uint64_t n) {
  require_positive(n, "leftmost_path");
  std::vector<std::uint64_t> nodes;
  for (std::uint64_t x = 1; x <= n; x *= 2) nodes.push_back(x);
  return nodes;
}

bool edge_cover_check(std::uint64_t n) {
  require_positive(n, "edge_cover_check");
  // An edge is identified by its child index c in 2..n.
  std::vector<std::uint8_t> covered(n + 1, 0);
  std::uint64_t special_edges = 0;
  for (std::uint64_t j = 1; j <= n / 2; ++j) {
    const SpecialPath sp = special_path(j, n);
    special_edges += sp.length;
    for (std::size_t i = 1; i < sp.nodes.size(); ++i) {
      const std::uint64_t c = sp.nodes[i];
      if (covered[c]) return false;  // two special paths share an edge
      covered[c] = 1;
    }
  }
  for (std::uint64_t c = 2; c <= n; c *= 2) {
    if (covered[c]) return false;  // leftmost-path edge already claimed
    covered[c] = 1;
  }
  for (std::uint64_t c = 2; c <= n; ++c)
    if (!covered[c]) return false;  // edge missed by every path
  const std::uint64_t floor_log2 = static_cast<std::uint64_t>(std::bit_width(n)) - 1;
  return special_edges == n - 1 - floor_log2;
}

std::uint64_t height_sum_direct(std::uint64_t n) {
  require_positive(n, "height_sum_direct");
  std::uint64_t total = 0;
  for (std::uint64_t j = 1; j <= n / 2; ++j) {
    std::uint64_t h = 0;
    for (std::uint64_t m = n >> 1; j <= m; m >>= 1) ++h;
    total += h;
  }
  return total;
}

TreePartition partition_around_path(std::uint64_t n) {
  if (n == 0 || (n & 1u) != 0)
    throw std::domain_error("partition_around_path: n must be even and positive");
  const PathDescriptor path = distinguished_path(n);
  const std::uint64_t depth = path.nodes.size() - 1;
  // Path node at depth d has height depth - d; the lower segment holds
  // heights 0 through sigma(n).
  const std::uint64_t lower_len = static_cast<std::uint64_t>(std::countr_zero(n)) + 1;

  TreePartition part;
  for (std::uint64_t d = 0; d <= depth; ++d) {
    const std::uint64_t p = path.nodes[d];
    const std::uint64_t first = std::uint64_t{1} << d;
    const std::uint64_t last = (d == depth) ? n : (std::uint64_t{1} << (d + 1)) - 1;
    for (std::uint64_t x = first; x < p; ++x) part.left_of_path.push_back(x);
    for (std::uint64_t x = p + 1; x <= last; ++x) part.right_of_path.push_back(x);
    ((depth - d) < lower_len ? part.path_lower : part.path_upper).push_back(p);
  }
  return part;
}

}  // namespace heapbound
