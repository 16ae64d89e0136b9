#include <doctest.h>

#include <random>
#include <stdexcept>

#include "../common/oracles.hpp"
#include "clfn/graph.hpp"

using clfn::BipartiteIncidence;
using clfn::Graph;
using clfn::VertexId;

namespace {

void check_well_formed(const Graph& g) {
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const auto nb = g.neighbors(v);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      CHECK(nb[i] != v);                       // no self-loops
      if (i > 0) CHECK(nb[i - 1] < nb[i]);     // strictly increasing
      CHECK(g.adjacent(nb[i], v));             // symmetric
    }
  }
}

}  // namespace

TEST_CASE("build from edges") {
  const std::vector<std::pair<VertexId, VertexId>> path{{0, 1}, {1, 2}};
  const auto g = Graph::from_edges(3, path);
  CHECK(g.degree(0) == 1);
  CHECK(g.degree(1) == 2);
  CHECK(g.degree(2) == 1);
  CHECK(g.edge_count() == 2);
  check_well_formed(g);

  // duplicates (both orientations) collapse
  const std::vector<std::pair<VertexId, VertexId>> dup{{0, 1}, {1, 0}, {1, 2}};
  const auto g2 = Graph::from_edges(3, dup);
  CHECK(g2.edge_count() == 2);
  CHECK(g2.degree(1) == 2);

  const std::vector<std::pair<VertexId, VertexId>> loop{{0, 0}};
  CHECK_THROWS_AS(Graph::from_edges(2, loop), std::invalid_argument);
  const auto g3 = Graph::from_edges(2, loop, /*allow_self_loops=*/true);
  CHECK(g3.edge_count() == 0);
  CHECK(g3.dropped_self_loops() == 1);

  const std::vector<std::pair<VertexId, VertexId>> range{{0, 3}};
  CHECK_THROWS_AS(Graph::from_edges(3, range), std::invalid_argument);
}

TEST_CASE("well-formed for arbitrary edge multisets") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 20);
    std::vector<std::pair<VertexId, VertexId>> edges;
    const int count = static_cast<int>(rng() % 50);
    for (int i = 0; i < count; ++i) {
      VertexId u = static_cast<VertexId>(rng() % n);
      VertexId v = static_cast<VertexId>(rng() % n);
      if (u == v) continue;
      edges.emplace_back(u, v);
    }
    check_well_formed(Graph::from_edges(static_cast<VertexId>(n), edges));
  }
}

TEST_CASE("common neighbors on named graphs") {
  const auto k3 = oracles::complete_graph(3);
  CHECK(common_neighbors(k3, 0, 1) == 1);
  const auto p3 = oracles::path_graph(3);
  CHECK(common_neighbors(p3, 0, 2) == 1);
  const auto c4 = oracles::cycle_graph(4);
  CHECK(common_neighbors(c4, 0, 2) == 2);
  CHECK_THROWS_AS(common_neighbors(p3, 1, 1), std::invalid_argument);
}

TEST_CASE("common neighbors vs adjacency-matrix oracle") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 63);
    const auto mg = oracles::random_graph(rng, n, 0.15);
    const auto g = oracles::to_graph(mg);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        CHECK(common_neighbors(g, static_cast<VertexId>(u),
                               static_cast<VertexId>(v)) ==
              static_cast<std::uint64_t>(mg.common(u, v)));
  }
}

TEST_CASE("projection basics") {
  const auto single =
      BipartiteIncidence::from_sets(3, 2, {{0}, {0}, {1}});
  const auto g = project_bipartite(single);
  CHECK(g.edge_count() == 1);
  CHECK(g.adjacent(0, 1));
  CHECK(g.degree(2) == 0);

  const auto empty = BipartiteIncidence::from_sets(4, 3, {{}, {}, {}, {}});
  CHECK(project_bipartite(empty).edge_count() == 0);

  const auto full = BipartiteIncidence::from_sets(
      5, 2, {{0, 1}, {0, 1}, {0, 1}, {0, 1}, {0, 1}});
  const auto kn = project_bipartite(full);
  CHECK(kn.edge_count() == 10);  // K5
}

TEST_CASE("incidence identities and validation") {
  const auto inc =
      BipartiteIncidence::from_sets(3, 4, {{1, 3}, {3, 1, 1}, {}});
  CHECK(inc.set_size(1) == 2);  // deduplicated
  std::uint64_t sum_a = 0, sum_b = 0;
  for (auto a : inc.set_sizes()) sum_a += a;
  for (auto b : inc.attribute_frequencies()) sum_b += b;
  CHECK(sum_a == inc.total_memberships());
  CHECK(sum_b == inc.total_memberships());
  CHECK_THROWS_AS(BipartiteIncidence::from_sets(1, 2, {{2}}),
                  std::invalid_argument);
}

TEST_CASE("projection vs exhaustive bitset oracle") {
  // All incidences on small cells, random incidences up to 5x5.
  std::mt19937_64 rng(3);
  auto check = [&](int n, int m, std::uint32_t cells_mask) {
    std::vector<std::vector<std::uint32_t>> sets(n);
    std::vector<std::uint32_t> row_mask(n, 0);
    for (int v = 0; v < n; ++v)
      for (int a = 0; a < m; ++a)
        if ((cells_mask >> (v * m + a)) & 1) {
          sets[v].push_back(static_cast<std::uint32_t>(a));
          row_mask[v] |= 1u << a;
        }
    const auto g = project_bipartite(BipartiteIncidence::from_sets(
        static_cast<VertexId>(n), static_cast<std::uint32_t>(m), std::move(sets)));
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        CHECK(g.adjacent(static_cast<VertexId>(u), static_cast<VertexId>(v)) ==
              ((row_mask[u] & row_mask[v]) != 0));
  };
  for (int n = 1; n <= 3; ++n)
    for (int m = 1; m <= 3; ++m)
      for (std::uint32_t mask = 0; mask < (1u << (n * m)); ++mask)
        check(n, m, mask);
  for (int trial = 0; trial < 3000; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 4);
    const int m = 1 + static_cast<int>(rng() % 5);
    check(n, m, static_cast<std::uint32_t>(rng()) &
                    ((1u << (n * m)) - 1));
  }
}

TEST_CASE("projection buffer guard") {
  const auto full = BipartiteIncidence::from_sets(
      6, 1, {{0}, {0}, {0}, {0}, {0}, {0}});
  CHECK_THROWS_AS(project_bipartite(full, /*pair_buffer_cap=*/10),
                  std::runtime_error);
  CHECK_NOTHROW(project_bipartite(full, 15));
}
