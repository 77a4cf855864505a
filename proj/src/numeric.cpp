#include "heapbound/numeric.hpp"

#include <bit>
#include <limits>
#include <stdexcept>
#include <string>

namespace heapbound {

namespace {

void require_positive(std::uint64_t n, const char* where) {
  if (n == 0) throw std::domain_error(std::string(where) + ": n must be >= 1");
}

void require_doubling_fits(std::uint64_t n, const char* where) {
  if (n > std::numeric_limits<std::uint64_t>::max() / 2)
    throw std::domain_error(std::string(where) + ": 2n does not fit in 64 bits");
}

}  // namespace

BinaryProfile binary_profile(std::uint64_t n) {
  require_positive(n, "binary_profile");
  BinaryProfile p;
  p.n = n;
  p.bit_length = static_cast<std::uint64_t>(std::bit_width(n));
  p.floor_log2 = p.bit_length - 1;
  p.mu = static_cast<std::uint64_t>(std::popcount(n));
  p.lambda = p.bit_length - p.mu;
  p.lowest_one_bit = static_cast<std::uint64_t>(std::countr_zero(n));
  p.sigma = p.lowest_one_bit;
  p.digits.reserve(p.bit_length);
  for (std::uint64_t i = p.bit_length; i-- > 0;)
    p.digits.push_back(static_cast<std::uint8_t>((n >> i) & 1u));
  return p;
}

std::uint64_t worst_case_bound(std::uint64_t n) {
  require_positive(n, "worst_case_bound");
  require_doubling_fits(n, "worst_case_bound");
  const std::uint64_t mu = static_cast<std::uint64_t>(std::popcount(n));
  const std::uint64_t sigma = static_cast<std::uint64_t>(std::countr_zero(n));
  return 2 * n - 2 * mu - sigma;
}

std::uint64_t height_sum_formula(std::uint64_t n) {
  require_positive(n, "height_sum_formula");
  const std::uint64_t bit_length = static_cast<std::uint64_t>(std::bit_width(n));
  const std::uint64_t lambda = bit_length - static_cast<std::uint64_t>(std::popcount(n));
  return n - bit_length + lambda;
}

std::uint64_t kruskal_bound(std::uint64_t n) {
  require_positive(n, "kruskal_bound");
  // n + 1 wraps to 0 at the type maximum; has_single_bit(0) is false, so the
  // wrap falls through to the same rejection.
  if (!std::has_single_bit(n + 1))
    throw std::domain_error("kruskal_bound: n + 1 must be a power of two");
  require_doubling_fits(n, "kruskal_bound");
  return 2 * n - 2 * static_cast<std::uint64_t>(std::bit_width(n));
}

BoundReport bound_report(std::uint64_t n) {
  return BoundReport{n, worst_case_bound(n), height_sum_formula(n)};
}

}  // namespace heapbound
