#ifndef CLFN_SAMPLING_HPP
#define CLFN_SAMPLING_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "clfn/graph.hpp"

namespace clfn {

// Induced subgraph with densely re-indexed vertices; original_ids[new] maps
// back to the source graph for traceability.
struct SampledSubgraph {
  Graph graph;
  std::vector<VertexId> original_ids;
};

// Induced subgraph on the vertices whose degree in g is <= max_degree.
SampledSubgraph degree_cap_subgraph(const Graph& g, std::uint32_t max_degree);

// Induced subgraph on n0 vertices drawn uniformly without replacement from
// the eligible vertices (those of degree <= degree_cap when a cap is given,
// all vertices otherwise). Throws when fewer than n0 are eligible.
SampledSubgraph uniform_subgraph(const Graph& g, VertexId n0,
                                 std::optional<std::uint32_t> degree_cap,
                                 std::uint64_t seed);

// Each vertex is retained independently with probability min{1, d(v)^-tau};
// vertices of degree 0 or 1 are always retained. tau must be >= 0.
SampledSubgraph degree_biased_subgraph(const Graph& g, double tau,
                                       std::uint64_t seed);

}  // namespace clfn

#endif  // CLFN_SAMPLING_HPP
