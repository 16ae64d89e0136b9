#include "clfn/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace clfn {

namespace {

constexpr std::uint64_t pack(VertexId u, VertexId v) {
  return (static_cast<std::uint64_t>(u) << 32) | v;
}

}  // namespace

Graph Graph::from_packed_edges(VertexId n, std::vector<std::uint64_t>&& packed) {
  std::sort(packed.begin(), packed.end());
  packed.erase(std::unique(packed.begin(), packed.end()), packed.end());

  Graph g;
  g.n_ = n;
  g.edge_count_ = packed.size();
  std::vector<std::uint32_t> deg(n, 0);
  for (std::uint64_t e : packed) {
    ++deg[static_cast<VertexId>(e >> 32)];
    ++deg[static_cast<VertexId>(e)];
  }
  g.offsets_.assign(n + 1, 0);
  for (VertexId v = 0; v < n; ++v) g.offsets_[v + 1] = g.offsets_[v] + deg[v];
  g.adjacency_.resize(2 * packed.size());
  std::vector<std::uint64_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  // packed is sorted by (u, v) with u < v, so every adjacency list fills in
  // increasing order: vertex w first receives its smaller neighbors y while
  // scanning (y, w) entries in increasing y, then its larger neighbors x
  // from (w, x) entries in increasing x. No per-list sort needed.
  for (std::uint64_t e : packed) {
    const auto u = static_cast<VertexId>(e >> 32);
    const auto v = static_cast<VertexId>(e);
    g.adjacency_[cursor[u]++] = v;
    g.adjacency_[cursor[v]++] = u;
  }
  return g;
}

Graph Graph::from_edges(VertexId n,
                        std::span<const std::pair<VertexId, VertexId>> edges,
                        bool allow_self_loops) {
  std::vector<std::uint64_t> packed;
  packed.reserve(edges.size());
  std::uint64_t dropped = 0;
  for (auto [u, v] : edges) {
    if (u >= n || v >= n)
      throw std::invalid_argument("graph: edge (" + std::to_string(u) + "," +
                                  std::to_string(v) + ") out of range, n=" +
                                  std::to_string(n));
    if (u == v) {
      if (!allow_self_loops)
        throw std::invalid_argument("graph: self-loop at vertex " +
                                    std::to_string(u));
      ++dropped;
      continue;
    }
    packed.push_back(u < v ? pack(u, v) : pack(v, u));
  }
  Graph g = from_packed_edges(n, std::move(packed));
  g.dropped_self_loops_ = dropped;
  return g;
}

bool Graph::adjacent(VertexId u, VertexId v) const {
  const auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::uint32_t Graph::max_degree() const {
  std::uint32_t d = 0;
  for (VertexId v = 0; v < n_; ++v) d = std::max(d, degree(v));
  return d;
}

std::vector<std::pair<VertexId, VertexId>> Graph::edges() const {
  std::vector<std::pair<VertexId, VertexId>> out;
  out.reserve(edge_count_);
  for (VertexId u = 0; u < n_; ++u)
    for (VertexId v : neighbors(u))
      if (u < v) out.emplace_back(u, v);
  return out;
}

std::uint64_t common_neighbors(const Graph& g, VertexId u, VertexId v) {
  if (u == v)
    throw std::invalid_argument("common_neighbors: u == v");
  const auto a = g.neighbors(u);
  const auto b = g.neighbors(v);
  std::uint64_t count = 0;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j]) ++i;
    else if (a[i] > b[j]) ++j;
    else { ++count; ++i; ++j; }
  }
  return count;
}

BipartiteIncidence BipartiteIncidence::from_sets(
    VertexId n, std::uint32_t m, std::vector<std::vector<std::uint32_t>> sets) {
  if (sets.size() != n)
    throw std::invalid_argument("incidence: expected " + std::to_string(n) +
                                " sets, got " + std::to_string(sets.size()));
  BipartiteIncidence inc;
  inc.n_ = n;
  inc.m_ = m;
  inc.offsets_.assign(n + 1, 0);
  for (VertexId v = 0; v < n; ++v) {
    auto& set = sets[v];
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
    if (!set.empty() && set.back() >= m)
      throw std::invalid_argument("incidence: attribute id " +
                                  std::to_string(set.back()) +
                                  " out of range, m=" + std::to_string(m));
    inc.offsets_[v + 1] = inc.offsets_[v] + set.size();
  }
  inc.attributes_.reserve(inc.offsets_[n]);
  for (const auto& set : sets)
    inc.attributes_.insert(inc.attributes_.end(), set.begin(), set.end());
  return inc;
}

std::vector<std::uint32_t> BipartiteIncidence::set_sizes() const {
  std::vector<std::uint32_t> out(n_);
  for (VertexId v = 0; v < n_; ++v) out[v] = set_size(v);
  return out;
}

std::vector<std::uint32_t> BipartiteIncidence::attribute_frequencies() const {
  std::vector<std::uint32_t> freq(m_, 0);
  for (std::uint32_t a : attributes_) ++freq[a];
  return freq;
}

Graph project_bipartite(const BipartiteIncidence& inc,
                        std::uint64_t pair_buffer_cap) {
  const VertexId n = inc.vertex_count();
  const std::uint32_t m = inc.ground_set_size();

  // Inverted lists: attribute -> owning vertices, by counting sort.
  std::vector<std::uint64_t> attr_offset(static_cast<std::size_t>(m) + 1, 0);
  for (VertexId v = 0; v < n; ++v)
    for (std::uint32_t a : inc.set_of(v)) ++attr_offset[a + 1];

  std::uint64_t pair_total = 0;
  std::uint32_t busiest = 0;
  for (std::uint32_t a = 0; a < m; ++a) {
    const std::uint64_t b = attr_offset[a + 1];
    pair_total += b * (b - (b > 0 ? 1 : 0)) / 2;
    busiest = std::max(busiest, static_cast<std::uint32_t>(b));
    attr_offset[a + 1] += attr_offset[a];
  }
  if (pair_total > pair_buffer_cap)
    throw std::runtime_error(
        "project_bipartite: pre-dedup edge buffer needs " +
        std::to_string(pair_total) + " entries (cap " +
        std::to_string(pair_buffer_cap) + "); busiest attribute has " +
        std::to_string(busiest) + " owners");

  std::vector<VertexId> owners(inc.total_memberships());
  {
    std::vector<std::uint64_t> cursor(attr_offset.begin(), attr_offset.end() - 1);
    for (VertexId v = 0; v < n; ++v)
      for (std::uint32_t a : inc.set_of(v)) owners[cursor[a]++] = v;
  }

  std::vector<std::uint64_t> packed;
  packed.reserve(pair_total);
  for (std::uint32_t a = 0; a < m; ++a) {
    const std::uint64_t lo = attr_offset[a], hi = attr_offset[a + 1];
    for (std::uint64_t i = lo; i < hi; ++i)
      for (std::uint64_t j = i + 1; j < hi; ++j)
        packed.push_back((static_cast<std::uint64_t>(owners[i]) << 32) |
                         owners[j]);
  }
  return Graph::from_packed_edges(n, std::move(packed));
}

}  // namespace clfn
