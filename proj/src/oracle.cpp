#include "heapbound/oracle.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "heapbound/adversary.hpp"
#include "heapbound/numeric.hpp"
#include "heapbound/treegeom.hpp"

namespace heapbound {

namespace {

// Uniform draw from [0, bound) rejecting the partial block at the top of the
// 64-bit range.
std::uint64_t bounded_draw(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t rem = (max % bound + 1) % bound;  // 2^64 mod bound
  if (rem == 0) return rng() % bound;
  const std::uint64_t cutoff = max - rem;
  std::uint64_t x = rng();
  while (x > cutoff) x = rng();
  return x % bound;
}

}  // namespace

ExhaustiveResult exhaustive_max_comparisons(std::uint64_t n, std::uint64_t limit) {
  if (n == 0) throw std::domain_error("exhaustive_max_comparisons: n must be >= 1");
  if (n > limit)
    throw std::domain_error("exhaustive_max_comparisons: n exceeds the search limit");
  std::vector<Key> perm(n);
  std::iota(perm.begin(), perm.end(), Key{1});
  ExhaustiveResult best{0, perm};
  // std::next_permutation enumerates in lexicographic order, so updating only
  // on strict improvement keeps the smallest maximizing witness.
  do {
    HeapArray h(perm);
    const RunStats stats = buildheap(h);
    if (stats.comparisons > best.max_comparisons) {
      best.max_comparisons = stats.comparisons;
      best.witness = perm;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

std::vector<Key> random_permutation(std::uint64_t n, std::mt19937_64& rng) {
  std::vector<Key> perm(n);
  std::iota(perm.begin(), perm.end(), Key{1});
  for (std::uint64_t i = n; i > 1; --i)
    std::swap(perm[i - 1], perm[bounded_draw(rng, i)]);
  return perm;
}

RandomCheckResult random_bound_check(std::uint64_t n, std::uint64_t samples, std::uint64_t seed) {
  if (n == 0) throw std::domain_error("random_bound_check: n must be >= 1");
  if (samples == 0) throw std::domain_error("random_bound_check: samples must be >= 1");
  const std::uint64_t comparison_bound = worst_case_bound(n);
  const std::uint64_t swap_bound = height_sum_formula(n);
  std::mt19937_64 rng(seed);
  RandomCheckResult result{true, 0, 0};
  for (std::uint64_t s = 0; s < samples; ++s) {
    HeapArray h(random_permutation(n, rng));
    const RunStats stats = buildheap(h);
    result.max_comparisons = std::max(result.max_comparisons, stats.comparisons);
    result.max_swaps = std::max(result.max_swaps, stats.swaps);
    if (stats.comparisons > comparison_bound || stats.swaps > swap_bound) result.ok = false;
  }
  return result;
}

std::vector<VerifyRecord> verify_range(std::uint64_t lo, std::uint64_t hi,
                                       const VerifyOptions& opts) {
  if (lo < 1 || lo > hi) throw std::domain_error("verify_range: need 1 <= lo <= hi");
  std::vector<VerifyRecord> records;
  records.reserve(hi - lo + 1);
  for (std::uint64_t n = lo; n <= hi; ++n) {
    const BinaryProfile profile = binary_profile(n);
    VerifyRecord rec;
    rec.n = n;
    rec.mu = profile.mu;
    rec.sigma = profile.sigma;
    rec.lambda = profile.lambda;
    rec.bound = worst_case_bound(n);
    rec.t_formula = height_sum_formula(n);
    rec.t_direct = height_sum_direct(n);

    HeapArray witness = worst_case(n);
    const RunStats stats = buildheap(witness);
    rec.achieved = stats.comparisons;
    rec.witness_ok = stats.comparisons == rec.bound && stats.swaps <= rec.t_formula &&
                     is_heap(witness) && is_permutation_1_to_n(witness);
    rec.height_ok = rec.t_direct == rec.t_formula;
    rec.cover_ok = edge_cover_check(n);
    if (n <= opts.exhaustive_limit) {
      rec.exhaustive = exhaustive_max_comparisons(n, opts.exhaustive_limit).max_comparisons;
      rec.exhaustive_ok = *rec.exhaustive == rec.bound;
    } else {
      rec.exhaustive_ok = true;
    }
    rec.random_ok = opts.samples == 0 || random_bound_check(n, opts.samples, opts.seed).ok;
    rec.pass =
        rec.witness_ok && rec.height_ok && rec.cover_ok && rec.exhaustive_ok && rec.random_ok;
    records.push_back(std::move(rec));
  }
  return records;
}

}  // namespace heapbound
