#ifndef CLFN_CLUSTERING_HPP
#define CLFN_CLUSTERING_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "clfn/graph.hpp"

namespace clfn {

// Per-r counts of unordered vertex pairs with exactly r common neighbors,
// split into all pairs and adjacent pairs. Exact 64-bit integers.
// total[0]/adjacent[0] are obtained by complement against n(n-1)/2 and |E|;
// pairs with no common neighbor are never materialized.
struct PairHistogram {
  VertexId n = 0;
  std::uint64_t edges = 0;
  std::vector<std::uint64_t> total;     // index r
  std::vector<std::uint64_t> adjacent;  // index r

  std::uint64_t pair_count() const {
    return static_cast<std::uint64_t>(n) * (n - 1) / 2;
  }
  std::uint32_t max_r() const {
    return total.empty() ? 0 : static_cast<std::uint32_t>(total.size() - 1);
  }
  // Σ_r r * total(r) = number of wedges, Σ_r r * adjacent(r) = 3 * triangles.
  std::uint64_t weighted_total() const;
  std::uint64_t weighted_adjacent() const;
};

enum class HistogramStrategy {
  wedge_map,  // per-source scatter over two-hop neighborhoods, cost Σ_v d(v)^2
  oracle,     // all-pairs sorted intersection, cost n^2 * avg degree
};

struct HistogramOptions {
  HistogramStrategy strategy = HistogramStrategy::wedge_map;
  unsigned threads = 1;
  // Cap on enumerated wedge endpoints (an upper bound on distinct pair
  // keys). Exceeding it aborts with a diagnostic naming the hub degree.
  std::uint64_t wedge_cap = 20'000'000'000ull;
};

// Exact histogram; n >= 2 required. Results are bit-identical for any
// thread count: each unordered pair is owned by exactly one source vertex
// and per-worker histograms merge by integer addition.
PairHistogram pair_histogram(const Graph& g, HistogramOptions opts = {});

// cl(r) = adjacent(r)/total(r) and the cumulative version
// Cl(r) = Σ_{s>=r} adjacent(s) / Σ_{s>=r} total(s). Ratios with a zero
// denominator are absent, not 0 and not NaN. Cl(0) equals the edge density.
struct ClusteringProfile {
  PairHistogram histogram;
  std::vector<std::optional<double>> cl;
  std::vector<std::optional<double>> cumulative_cl;
  std::optional<double> global_coefficient;  // C, absent when no wedges
  double edge_density = 0.0;                 // p_e = 2|E| / (n(n-1))
};

ClusteringProfile clustering_profile(const Graph& g, HistogramOptions opts = {});
ClusteringProfile profile_from_histogram(PairHistogram hist);

// C = 6T / Σ_v d(v)(d(v)-1), the probability that a uniform ordered triple
// with v1~v3 and v2~v3 also has v1~v2. Absent when the graph has no wedges.
std::optional<double> global_clustering_coefficient(const Graph& g);

}  // namespace clfn

#endif  // CLFN_CLUSTERING_HPP
