// Brute-force reference implementations used as independent test oracles.
// Everything here recomputes results from first principles, on purpose
// avoiding the library's algorithms.

#ifndef CLFN_TESTS_ORACLES_HPP
#define CLFN_TESTS_ORACLES_HPP

#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "clfn/graph.hpp"

namespace oracles {

// Dense bitmask graph, n <= 64.
struct MaskGraph {
  int n = 0;
  std::array<std::uint64_t, 64> adj{};

  void add_edge(int u, int v) {
    adj[u] |= std::uint64_t{1} << v;
    adj[v] |= std::uint64_t{1} << u;
  }
  bool has(int u, int v) const { return (adj[u] >> v) & 1; }
  int common(int u, int v) const { return std::popcount(adj[u] & adj[v]); }
  int degree(int v) const { return std::popcount(adj[v]); }
};

inline MaskGraph from_graph(const clfn::Graph& g) {
  MaskGraph mg;
  mg.n = static_cast<int>(g.vertex_count());
  for (clfn::VertexId u = 0; u < g.vertex_count(); ++u)
    for (clfn::VertexId v : g.neighbors(u))
      if (u < v) mg.add_edge(static_cast<int>(u), static_cast<int>(v));
  return mg;
}

inline clfn::Graph to_graph(const MaskGraph& mg) {
  std::vector<std::pair<clfn::VertexId, clfn::VertexId>> edges;
  for (int u = 0; u < mg.n; ++u)
    for (int v = u + 1; v < mg.n; ++v)
      if (mg.has(u, v))
        edges.emplace_back(static_cast<clfn::VertexId>(u),
                           static_cast<clfn::VertexId>(v));
  return clfn::Graph::from_edges(static_cast<clfn::VertexId>(mg.n), edges);
}

inline MaskGraph random_graph(std::mt19937_64& rng, int n, double p) {
  MaskGraph mg;
  mg.n = n;
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (unit(rng) < p) mg.add_edge(u, v);
  return mg;
}

// Pair histogram by direct enumeration (r = 0 counted directly, not by
// complement, so this is an independent route).
struct BruteHistogram {
  std::vector<std::uint64_t> total;
  std::vector<std::uint64_t> adjacent;
};

inline BruteHistogram brute_histogram(const MaskGraph& mg) {
  BruteHistogram h;
  h.total.assign(static_cast<std::size_t>(mg.n) + 1, 0);
  h.adjacent.assign(static_cast<std::size_t>(mg.n) + 1, 0);
  std::size_t top = 0;
  for (int u = 0; u < mg.n; ++u)
    for (int v = u + 1; v < mg.n; ++v) {
      const auto r = static_cast<std::size_t>(mg.common(u, v));
      ++h.total[r];
      if (mg.has(u, v)) ++h.adjacent[r];
      top = std::max(top, r);
    }
  h.total.resize(top + 1);
  h.adjacent.resize(top + 1);
  return h;
}

// Global clustering coefficient over ordered triples of distinct vertices:
// P(v1 ~ v2 | v1 ~ v3, v2 ~ v3).
inline std::optional<double> brute_global_coefficient(const MaskGraph& mg) {
  std::uint64_t wedges = 0, closed = 0;
  for (int i = 0; i < mg.n; ++i)
    for (int j = 0; j < mg.n; ++j)
      for (int k = 0; k < mg.n; ++k) {
        if (i == j || j == k || i == k) continue;
        if (!mg.has(i, k) || !mg.has(j, k)) continue;
        ++wedges;
        if (mg.has(i, j)) ++closed;
      }
  if (wedges == 0) return std::nullopt;
  return static_cast<double>(closed) / static_cast<double>(wedges);
}

inline __int128 binom128(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  __int128 result = 1;
  for (long long i = 1; i <= k; ++i) result = result * (n - k + i) / i;
  return result;
}

// Exact P(|D1 ∩ D2| = s) for independent uniform d1- and d2-subsets of
// {1..m}: C(d1,s) C(m-d1, d2-s) / C(m,d2).
inline double hypergeometric_exact(long long d1, long long d2, long long s,
                                   long long m) {
  const __int128 num = binom128(d1, s) * binom128(m - d1, d2 - s);
  const __int128 den = binom128(m, d2);
  return static_cast<double>(static_cast<long double>(num) /
                             static_cast<long double>(den));
}

// Named small graphs.
inline clfn::Graph path_graph(clfn::VertexId n) {
  std::vector<std::pair<clfn::VertexId, clfn::VertexId>> e;
  for (clfn::VertexId v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
  return clfn::Graph::from_edges(n, e);
}

inline clfn::Graph cycle_graph(clfn::VertexId n) {
  std::vector<std::pair<clfn::VertexId, clfn::VertexId>> e;
  for (clfn::VertexId v = 0; v < n; ++v) e.emplace_back(v, (v + 1) % n);
  return clfn::Graph::from_edges(n, e);
}

inline clfn::Graph complete_graph(clfn::VertexId n) {
  std::vector<std::pair<clfn::VertexId, clfn::VertexId>> e;
  for (clfn::VertexId u = 0; u < n; ++u)
    for (clfn::VertexId v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return clfn::Graph::from_edges(n, e);
}

inline clfn::Graph star_graph(clfn::VertexId leaves) {
  std::vector<std::pair<clfn::VertexId, clfn::VertexId>> e;
  for (clfn::VertexId v = 1; v <= leaves; ++v)
    e.emplace_back(static_cast<clfn::VertexId>(0), v);
  return clfn::Graph::from_edges(leaves + 1, e);
}

// K4 minus one edge; vertices 1,2 form the shared diagonal.
inline clfn::Graph diamond_graph() {
  const std::vector<std::pair<clfn::VertexId, clfn::VertexId>> e{
      {0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}};
  return clfn::Graph::from_edges(4, e);
}

}  // namespace oracles

#endif  // CLFN_TESTS_ORACLES_HPP
