#ifndef CLFN_GRAPH_HPP
#define CLFN_GRAPH_HPP

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace clfn {

using VertexId = std::uint32_t;

// Immutable simple undirected graph in compressed sorted-adjacency form.
// Invariants: adjacency is symmetric, per-vertex lists strictly increasing,
// no self-loops. Safe to share across concurrent readers.
class Graph {
 public:
  Graph() = default;

  // Deduplicates edges and orders adjacency deterministically. Self-loops
  // are an error unless allow_self_loops is set, in which case they are
  // dropped (and counted in dropped_self_loops()).
  static Graph from_edges(VertexId n,
                          std::span<const std::pair<VertexId, VertexId>> edges,
                          bool allow_self_loops = false);

  // Same contract, edges packed as (u << 32) | v with u < v. Consumes the
  // buffer (sorts in place).
  static Graph from_packed_edges(VertexId n, std::vector<std::uint64_t>&& packed);

  VertexId vertex_count() const { return n_; }
  std::uint64_t edge_count() const { return edge_count_; }
  std::uint64_t dropped_self_loops() const { return dropped_self_loops_; }

  std::span<const VertexId> neighbors(VertexId v) const {
    return {adjacency_.data() + offsets_[v],
            adjacency_.data() + offsets_[v + 1]};
  }
  std::uint32_t degree(VertexId v) const {
    return static_cast<std::uint32_t>(offsets_[v + 1] - offsets_[v]);
  }
  bool adjacent(VertexId u, VertexId v) const;
  std::uint32_t max_degree() const;

  // n(n-1)/2
  std::uint64_t pair_count() const {
    return static_cast<std::uint64_t>(n_) * (n_ - 1) / 2;
  }

  std::vector<std::pair<VertexId, VertexId>> edges() const;

 private:
  VertexId n_ = 0;
  std::uint64_t edge_count_ = 0;
  std::uint64_t dropped_self_loops_ = 0;
  std::vector<std::uint64_t> offsets_;  // n+1 entries
  std::vector<VertexId> adjacency_;     // 2*edge_count entries
};

// |adj(u) ∩ adj(v)| by sorted-list intersection. u == v is an error.
std::uint64_t common_neighbors(const Graph& g, VertexId u, VertexId v);

// Vertex -> attribute incidence: the sets D_i over a ground set of size m.
// Lists are strictly increasing; ids are dense. Immutable once built.
class BipartiteIncidence {
 public:
  BipartiteIncidence() = default;

  // Sorts and deduplicates each set; attribute ids must be < m.
  static BipartiteIncidence from_sets(VertexId n, std::uint32_t m,
                                      std::vector<std::vector<std::uint32_t>> sets);

  VertexId vertex_count() const { return n_; }
  std::uint32_t ground_set_size() const { return m_; }

  std::span<const std::uint32_t> set_of(VertexId v) const {
    return {attributes_.data() + offsets_[v],
            attributes_.data() + offsets_[v + 1]};
  }
  std::uint32_t set_size(VertexId v) const {
    return static_cast<std::uint32_t>(offsets_[v + 1] - offsets_[v]);
  }

  // M = Σ a_i = Σ b_j
  std::uint64_t total_memberships() const { return attributes_.size(); }
  std::vector<std::uint32_t> set_sizes() const;            // a_i
  std::vector<std::uint32_t> attribute_frequencies() const;  // b_j

 private:
  VertexId n_ = 0;
  std::uint32_t m_ = 0;
  std::vector<std::uint64_t> offsets_;
  std::vector<std::uint32_t> attributes_;
};

// One-mode projection: u ~ v iff D_u ∩ D_v ≠ ∅ and u ≠ v. Works through
// per-attribute inverted lists, emitting clique edges per attribute and
// deduplicating, so the cost is Σ_j b_j^2. Throws if the pre-dedup edge
// buffer would exceed pair_buffer_cap entries.
Graph project_bipartite(const BipartiteIncidence& inc,
                        std::uint64_t pair_buffer_cap = 2'000'000'000ull);

}  // namespace clfn

#endif  // CLFN_GRAPH_HPP
