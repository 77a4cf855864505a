#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>
#include <vector>

#include "heapbound/heap.hpp"
#include "heapbound/numeric.hpp"
#include "heapbound/oracle.hpp"

using namespace heapbound;

TEST_SUITE("heap") {

TEST_CASE("heapdown counts a stopped sift") {
  HeapArray h(std::vector<Key>{3, 1, 2});
  RunStats stats;
  heapdown(h, 1, stats);
  // The iteration is entered, picks child 3, and stops: both comparisons count.
  CHECK(h == HeapArray(std::vector<Key>{3, 1, 2}));
  CHECK(stats.comparisons == 2);
  CHECK(stats.swaps == 0);
}

TEST_CASE("heapdown sifts through both children") {
  HeapArray h(std::vector<Key>{1, 2, 3});
  RunStats stats;
  heapdown(h, 1, stats);
  CHECK(h == HeapArray(std::vector<Key>{3, 2, 1}));
  CHECK(stats.comparisons == 2);
  CHECK(stats.swaps == 1);
}

TEST_CASE("heapdown single-child test is one comparison") {
  HeapArray h(std::vector<Key>{1, 2});
  RunStats stats;
  heapdown(h, 1, stats);
  CHECK(h == HeapArray(std::vector<Key>{2, 1}));
  CHECK(stats.comparisons == 1);
  CHECK(stats.swaps == 1);

  // Same cost when the test does not swap.
  HeapArray g(std::vector<Key>{2, 1});
  RunStats gstats;
  heapdown(g, 1, gstats);
  CHECK(g == HeapArray(std::vector<Key>{2, 1}));
  CHECK(gstats.comparisons == 1);
  CHECK(gstats.swaps == 0);
}

TEST_CASE("heapdown accumulates into the passed stats") {
  HeapArray h(std::vector<Key>{1, 2, 3});
  RunStats stats{10, 5};
  heapdown(h, 1, stats);
  CHECK(stats.comparisons == 12);
  CHECK(stats.swaps == 6);
}

TEST_CASE("heapdown rejects out-of-range nodes") {
  HeapArray h(std::vector<Key>{2, 1});
  RunStats stats;
  CHECK_THROWS_AS(heapdown(h, 0, stats), std::domain_error);
  CHECK_THROWS_AS(heapdown(h, 3, stats), std::domain_error);
  CHECK(stats == RunStats{});
}

TEST_CASE("heapdown_checked validates the almost-heap precondition") {
  // Node 2 violates against its child 4 and node 1 is not the exempt parent.
  HeapArray bad(std::vector<Key>{2, 1, 4, 3});
  RunStats stats;
  CHECK_THROWS_AS(heapdown_checked(bad, 1, stats), std::logic_error);
  CHECK(stats == RunStats{});

  HeapArray good(std::vector<Key>{1, 3, 2});
  heapdown_checked(good, 1, stats);
  CHECK(good == HeapArray(std::vector<Key>{3, 1, 2}));
  CHECK(stats.comparisons == 2);
  CHECK(stats.swaps == 1);
}

TEST_CASE("buildheap fixed values") {
  HeapArray one(std::vector<Key>{1});
  CHECK(buildheap(one) == RunStats{0, 0});
  CHECK(one == HeapArray(std::vector<Key>{1}));

  HeapArray two(std::vector<Key>{1, 2});
  CHECK(buildheap(two) == RunStats{1, 1});
  CHECK(two == HeapArray(std::vector<Key>{2, 1}));

  HeapArray empty;
  CHECK_THROWS_AS(buildheap(empty), std::domain_error);
}

TEST_CASE("buildheap on an array already a heap still pays for the tests") {
  HeapArray h(std::vector<Key>{5, 4, 3, 2, 1});
  const RunStats stats = buildheap(h);
  CHECK(h == HeapArray(std::vector<Key>{5, 4, 3, 2, 1}));
  // Both internal nodes enter one loop iteration and stop: two comparisons each.
  CHECK(stats.comparisons == 4);
  CHECK(stats.swaps == 0);
}

TEST_CASE("buildheap exhausts n=4 exactly to the bound") {
  std::vector<Key> perm{1, 2, 3, 4};
  std::uint64_t max_comparisons = 0;
  do {
    HeapArray h(perm);
    max_comparisons = std::max(max_comparisons, buildheap(h).comparisons);
  } while (std::next_permutation(perm.begin(), perm.end()));
  CHECK(max_comparisons == 4);
  CHECK(max_comparisons == worst_case_bound(4));
}

TEST_CASE("is_heap ranges") {
  CHECK(is_heap(HeapArray(std::vector<Key>{3, 2, 1})));
  CHECK_FALSE(is_heap(HeapArray(std::vector<Key>{1, 2, 3})));
  CHECK(is_heap(HeapArray(std::vector<Key>{1, 2, 3}), 2));  // parent of 3 is outside 2..3
  CHECK_THROWS_AS(is_heap(HeapArray(std::vector<Key>{1}), 2), std::domain_error);
}

TEST_CASE("is_almost_heap exempts only the top node") {
  CHECK(is_almost_heap(HeapArray(std::vector<Key>{1, 3, 2}), 1));
  CHECK(is_almost_heap(HeapArray(std::vector<Key>{3, 1, 2}), 1));
  CHECK_FALSE(is_almost_heap(HeapArray(std::vector<Key>{2, 1, 4, 3}), 1));
}

TEST_CASE("is_min_heap_subtree") {
  const HeapArray h(std::vector<Key>{9, 1, 8, 2, 3});
  CHECK(is_min_heap_subtree(h, 2));
  CHECK_FALSE(is_min_heap_subtree(h, 1));  // 9 > 1
  CHECK(is_min_heap_subtree(h, 5));        // leaf
}

TEST_CASE("is_permutation_1_to_n") {
  CHECK(is_permutation_1_to_n(HeapArray(std::vector<Key>{2, 1, 3})));
  CHECK_FALSE(is_permutation_1_to_n(HeapArray(std::vector<Key>{2, 2, 3})));
  CHECK_FALSE(is_permutation_1_to_n(HeapArray(std::vector<Key>{2, 1, 4})));
}

TEST_CASE("buildheap properties on random permutations") {
  std::mt19937_64 rng(20260816);
  for (std::uint64_t n = 1; n <= 200; n += (n < 32 ? 1 : 17)) {
    const std::uint64_t bound = worst_case_bound(n);
    const std::uint64_t swap_bound = height_sum_formula(n);
    for (int round = 0; round < 5; ++round) {
      const std::vector<Key> perm = random_permutation(n, rng);
      HeapArray h(perm);
      const RunStats stats = buildheap(h);
      CHECK(is_heap(h));
      CHECK(is_permutation_1_to_n(h));
      CHECK(stats.comparisons <= bound);
      CHECK(stats.swaps <= swap_bound);
      CHECK(stats.swaps <= stats.comparisons);

      // Same input, same count, same result.
      HeapArray again(perm);
      CHECK(buildheap(again) == stats);
      CHECK(again == h);
    }
  }
}

}  // TEST_SUITE("heap")
