#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "clfn/generators.hpp"

namespace clfn {

namespace {

// Uniform x-subset of {0..m-1} in O(x) expected time and space: a partial
// Fisher-Yates shuffle whose displaced entries live in a sparse map.
std::vector<std::uint32_t> uniform_subset(std::uint32_t m, std::uint32_t x,
                                          SubstreamRng& rng) {
  std::unordered_map<std::uint32_t, std::uint32_t> displaced;
  displaced.reserve(2 * x);
  auto value_at = [&](std::uint32_t pos) {
    const auto it = displaced.find(pos);
    return it == displaced.end() ? pos : it->second;
  };
  std::vector<std::uint32_t> out;
  out.reserve(x);
  for (std::uint32_t t = 0; t < x; ++t) {
    const auto j =
        t + static_cast<std::uint32_t>(rng.next_below(m - t));
    out.push_back(value_at(j));
    displaced[j] = value_at(t);
  }
  std::sort(out.begin(), out.end());
  return out;
}

constexpr std::uint64_t kSizeStreamTag = 0x5a;

}  // namespace

double log_choose(std::uint64_t n, std::uint64_t k) {
  if (k > n) return -std::numeric_limits<double>::infinity();
  return std::lgamma(static_cast<double>(n) + 1.0) -
         std::lgamma(static_cast<double>(k) + 1.0) -
         std::lgamma(static_cast<double>(n - k) + 1.0);
}

BipartiteIncidence sample_active(VertexId n, std::uint32_t m,
                                 const DiscretePmf& size_pmf,
                                 std::uint64_t seed) {
  if (!size_pmf.has_integer_support())
    throw std::invalid_argument("sample_active: size pmf must have integer support");
  if (size_pmf.max_value() > static_cast<double>(m))
    throw std::invalid_argument("sample_active: size support exceeds m=" +
                                std::to_string(m));
  const StreamKey root = StreamKey::root(seed);
  std::vector<std::vector<std::uint32_t>> sets(n);
  for (VertexId i = 0; i < n; ++i) {
    SubstreamRng rng(root.child(i));
    const auto x = static_cast<std::uint32_t>(size_pmf.sample(rng));
    sets[i] = uniform_subset(m, x, rng);
  }
  return BipartiteIncidence::from_sets(n, m, std::move(sets));
}

BipartiteIncidence memoryless_active(std::span<const std::uint32_t> sizes,
                                     std::uint32_t m_tilde,
                                     std::uint64_t seed) {
  for (std::uint32_t x : sizes)
    if (x > m_tilde)
      throw std::invalid_argument("memoryless_active: size " +
                                  std::to_string(x) + " exceeds ground set " +
                                  std::to_string(m_tilde));
  const StreamKey root = StreamKey::root(seed);
  std::vector<std::vector<std::uint32_t>> sets(sizes.size());
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    SubstreamRng rng(root.child(i));
    sets[i] = uniform_subset(m_tilde, sizes[i], rng);
  }
  return BipartiteIncidence::from_sets(static_cast<VertexId>(sizes.size()),
                                       m_tilde, std::move(sets));
}

double expected_mean_degree(std::span<const std::uint32_t> sizes,
                            std::uint64_t m_tilde) {
  const std::size_t n = sizes.size();
  std::unordered_map<std::uint32_t, double> group;  // size -> multiplicity
  std::uint32_t largest = 0;
  for (std::uint32_t x : sizes) {
    group[x] += 1.0;
    largest = std::max(largest, x);
  }
  if (largest > m_tilde)
    throw std::invalid_argument("expected_mean_degree: size exceeds ground set");
  if (n < 2) return 0.0;

  // P(two sets of sizes s, t intersect) = 1 - C(m̃-s, t)/C(m̃, t).
  auto hit = [&](std::uint64_t s, std::uint64_t t) {
    if (s == 0 || t == 0) return 0.0;
    if (s + t > m_tilde) return 1.0;
    return -std::expm1(log_choose(m_tilde - s, t) - log_choose(m_tilde, t));
  };

  double total = 0.0;
  for (const auto& [s, cs] : group)
    for (const auto& [t, ct] : group) {
      const double pairs = s == t ? cs * (ct - 1.0) : cs * ct;
      if (pairs > 0.0) total += pairs * hit(s, t);
    }
  return total / static_cast<double>(n);
}

std::uint64_t adjust_ground_set(std::span<const std::uint32_t> sizes,
                                double target_mean_degree) {
  std::uint32_t largest = 0;
  for (std::uint32_t x : sizes) largest = std::max(largest, x);
  if (largest == 0) {
    // All sets empty: the mean degree is 0 for every ground set size.
    if (target_mean_degree == 0.0) return 1;
    throw std::invalid_argument(
        "adjust_ground_set: all sizes are zero, only target 0 is achievable");
  }

  const std::uint64_t lo = largest;
  const double peak = expected_mean_degree(sizes, lo);
  if (peak == 0.0) {
    // At most one nonempty set: degenerate as above.
    if (target_mean_degree == 0.0) return lo;
    throw std::invalid_argument("adjust_ground_set: target not achievable");
  }
  if (target_mean_degree > peak || target_mean_degree <= 0.0)
    throw std::invalid_argument(
        "adjust_ground_set: target " + std::to_string(target_mean_degree) +
        " outside achievable range (0, " + std::to_string(peak) + "]");

  // Mean degree is non-increasing in m̃ and tends to 0, so the smallest
  // m̃ with f(m̃) <= target brackets the optimum together with m̃-1.
  std::uint64_t hi = lo;
  while (expected_mean_degree(sizes, hi) > target_mean_degree) {
    if (hi > (std::uint64_t{1} << 62))
      throw std::invalid_argument("adjust_ground_set: target too small");
    hi *= 2;
  }
  std::uint64_t low = lo;  // f(low) > target or low == lo
  while (low + 1 < hi) {
    const std::uint64_t mid = low + (hi - low) / 2;
    if (expected_mean_degree(sizes, mid) > target_mean_degree)
      low = mid;
    else
      hi = mid;
  }
  const std::uint64_t first_at_or_below =
      expected_mean_degree(sizes, low) <= target_mean_degree ? low : hi;

  std::uint64_t best = first_at_or_below;
  double best_gap = std::abs(expected_mean_degree(sizes, best) -
                             target_mean_degree);
  if (first_at_or_below > lo) {
    const double gap_left = std::abs(
        expected_mean_degree(sizes, first_at_or_below - 1) - target_mean_degree);
    if (gap_left <= best_gap) {  // ties go to the smaller ground set
      best = first_at_or_below - 1;
      best_gap = gap_left;
    }
  }
  return best;
}

}  // namespace clfn
