#include <doctest.h>

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "heapbound/numeric.hpp"

using namespace heapbound;

namespace {

// Independent digit extraction by repeated division.
std::vector<std::uint8_t> digits_by_division(std::uint64_t n) {
  std::vector<std::uint8_t> digits;
  while (n > 0) {
    digits.push_back(static_cast<std::uint8_t>(n % 2));
    n /= 2;
  }
  std::reverse(digits.begin(), digits.end());
  return digits;
}

}  // namespace

TEST_SUITE("numeric") {

TEST_CASE("binary_profile on 25") {
  const BinaryProfile p = binary_profile(25);
  CHECK(p.n == 25);
  CHECK(p.digits == std::vector<std::uint8_t>{1, 1, 0, 0, 1});
  CHECK(p.mu == 3);
  CHECK(p.sigma == 0);
  CHECK(p.lambda == 2);
  CHECK(p.lowest_one_bit == 0);
  CHECK(p.floor_log2 == 4);
  CHECK(p.bit_length == 5);
}

TEST_CASE("binary_profile on 44") {
  const BinaryProfile p = binary_profile(44);
  CHECK(p.digits == std::vector<std::uint8_t>{1, 0, 1, 1, 0, 0});
  CHECK(p.mu == 3);
  CHECK(p.sigma == 2);
  CHECK(p.lambda == 3);
  CHECK(p.lowest_one_bit == 2);
}

TEST_CASE("binary_profile on 1") {
  const BinaryProfile p = binary_profile(1);
  CHECK(p.digits == std::vector<std::uint8_t>{1});
  CHECK(p.mu == 1);
  CHECK(p.sigma == 0);
  CHECK(p.lambda == 0);
  CHECK(p.floor_log2 == 0);
  CHECK(p.bit_length == 1);
}

TEST_CASE("binary_profile rejects 0") {
  CHECK_THROWS_AS(binary_profile(0), std::domain_error);
}

TEST_CASE("binary_profile digits match repeated division") {
  for (std::uint64_t n = 1; n <= 5000; ++n)
    CHECK(binary_profile(n).digits == digits_by_division(n));
}

TEST_CASE("worst_case_bound fixed values") {
  CHECK(worst_case_bound(1) == 0);
  CHECK(worst_case_bound(2) == 1);
  CHECK(worst_case_bound(3) == 2);
  CHECK(worst_case_bound(4) == 4);
  CHECK(worst_case_bound(5) == 6);
  CHECK(worst_case_bound(7) == 8);
  CHECK(worst_case_bound(15) == 22);
  CHECK(worst_case_bound(25) == 44);
  CHECK(worst_case_bound(44) == 80);
  CHECK_THROWS_AS(worst_case_bound(0), std::domain_error);
}

TEST_CASE("height_sum_formula fixed values") {
  CHECK(height_sum_formula(1) == 0);
  CHECK(height_sum_formula(3) == 1);
  CHECK(height_sum_formula(4) == 3);
  CHECK(height_sum_formula(25) == 22);
  CHECK(height_sum_formula(44) == 41);
  CHECK_THROWS_AS(height_sum_formula(0), std::domain_error);
}

TEST_CASE("kruskal_bound on perfect sizes") {
  CHECK(kruskal_bound(1) == 0);
  CHECK(kruskal_bound(7) == 8);
  CHECK(kruskal_bound(15) == 22);
  CHECK_THROWS_AS(kruskal_bound(4), std::domain_error);
  CHECK_THROWS_AS(kruskal_bound(0), std::domain_error);
}

TEST_CASE("kruskal_bound agrees with the general bound") {
  for (std::uint64_t k = 1; k <= 20; ++k) {
    const std::uint64_t n = (std::uint64_t{1} << k) - 1;
    CHECK(kruskal_bound(n) == worst_case_bound(n));
  }
}

TEST_CASE("profile and bound identities") {
  for (std::uint64_t n = 1; n <= 5000; ++n) {
    const BinaryProfile p = binary_profile(n);
    CHECK(p.mu + p.lambda == p.bit_length);
    CHECK(p.sigma == p.lowest_one_bit);
    CHECK((p.sigma == 0) == (n % 2 == 1));
    CHECK(p.bit_length == p.floor_log2 + 1);
    CHECK((std::uint64_t{1} << p.floor_log2) <= n);
    CHECK(n < (std::uint64_t{1} << p.bit_length));
    CHECK(p.digits.front() == 1);

    // The comparison bound is twice the height sum minus sigma.
    CHECK(worst_case_bound(n) == 2 * height_sum_formula(n) - p.sigma);
    CHECK(worst_case_bound(n) <= 2 * n);
  }
}

TEST_CASE("bound_report bundles both numbers") {
  const BoundReport r = bound_report(25);
  CHECK(r.n == 25);
  CHECK(r.worst_case_comparisons == 44);
  CHECK(r.height_sum == 22);
}

}  // TEST_SUITE("numeric")
