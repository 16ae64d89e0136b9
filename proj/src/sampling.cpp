#include "clfn/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "clfn/rng.hpp"

namespace clfn {

namespace {

// kept must be sorted and duplicate-free.
SampledSubgraph induce(const Graph& g, std::vector<VertexId> kept) {
  constexpr VertexId kAbsent = static_cast<VertexId>(-1);
  std::vector<VertexId> new_id(g.vertex_count(), kAbsent);
  for (std::size_t i = 0; i < kept.size(); ++i)
    new_id[kept[i]] = static_cast<VertexId>(i);

  std::vector<std::uint64_t> packed;
  for (VertexId u : kept)
    for (VertexId v : g.neighbors(u)) {
      if (u >= v || new_id[v] == kAbsent) continue;
      packed.push_back((static_cast<std::uint64_t>(new_id[u]) << 32) |
                       new_id[v]);
    }
  SampledSubgraph out;
  out.graph = Graph::from_packed_edges(static_cast<VertexId>(kept.size()),
                                       std::move(packed));
  out.original_ids = std::move(kept);
  return out;
}

}  // namespace

SampledSubgraph degree_cap_subgraph(const Graph& g, std::uint32_t max_degree) {
  std::vector<VertexId> kept;
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) <= max_degree) kept.push_back(v);
  return induce(g, std::move(kept));
}

SampledSubgraph uniform_subgraph(const Graph& g, VertexId n0,
                                 std::optional<std::uint32_t> degree_cap,
                                 std::uint64_t seed) {
  std::vector<VertexId> eligible;
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (!degree_cap || g.degree(v) <= *degree_cap) eligible.push_back(v);
  if (n0 > eligible.size())
    throw std::invalid_argument("uniform_subgraph: requested " +
                                std::to_string(n0) + " of " +
                                std::to_string(eligible.size()) +
                                " eligible vertices");
  // Partial Fisher-Yates over the eligible list.
  SubstreamRng rng(seed, 0);
  for (VertexId t = 0; t < n0; ++t) {
    const auto j = t + static_cast<std::size_t>(
                           rng.next_below(eligible.size() - t));
    std::swap(eligible[t], eligible[j]);
  }
  eligible.resize(n0);
  std::sort(eligible.begin(), eligible.end());
  return induce(g, std::move(eligible));
}

SampledSubgraph degree_biased_subgraph(const Graph& g, double tau,
                                       std::uint64_t seed) {
  if (!(tau >= 0.0))
    throw std::invalid_argument("degree_biased_subgraph: tau must be >= 0");
  const StreamKey root = StreamKey::root(seed);
  std::vector<VertexId> kept;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const std::uint32_t d = g.degree(v);
    if (d <= 1) {  // d^-tau >= 1 for d = 1, and degree 0 keeps by convention
      kept.push_back(v);
      continue;
    }
    SubstreamRng rng(root.child(v));
    if (rng.next_unit() < std::pow(static_cast<double>(d), -tau))
      kept.push_back(v);
  }
  return induce(g, std::move(kept));
}

}  // namespace clfn
