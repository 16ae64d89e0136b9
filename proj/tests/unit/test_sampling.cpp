#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <random>

#include "../common/oracles.hpp"
#include "clfn/sampling.hpp"

using clfn::degree_biased_subgraph;
using clfn::degree_cap_subgraph;
using clfn::Graph;
using clfn::SampledSubgraph;
using clfn::uniform_subgraph;
using clfn::VertexId;

namespace {

// Every output edge joins retained vertices and exists in g, and every
// g-edge between retained vertices is present.
void check_induced(const Graph& g, const SampledSubgraph& sub) {
  const auto& ids = sub.original_ids;
  for (VertexId u = 0; u < sub.graph.vertex_count(); ++u)
    for (VertexId v : sub.graph.neighbors(u))
      CHECK(g.adjacent(ids[u], ids[v]));
  for (std::size_t i = 0; i < ids.size(); ++i)
    for (std::size_t j = i + 1; j < ids.size(); ++j)
      CHECK(sub.graph.adjacent(static_cast<VertexId>(i),
                               static_cast<VertexId>(j)) ==
            g.adjacent(ids[i], ids[j]));
}

}  // namespace

TEST_CASE("degree cap") {
  const auto path = oracles::path_graph(3);
  const auto capped = degree_cap_subgraph(path, 1);
  CHECK(capped.graph.vertex_count() == 2);
  CHECK(capped.graph.edge_count() == 0);
  CHECK(capped.original_ids == std::vector<VertexId>{0, 2});

  const auto noop = degree_cap_subgraph(path, 2);
  CHECK(noop.graph.vertex_count() == 3);
  CHECK(noop.graph.edge_count() == 2);

  const auto star = degree_cap_subgraph(oracles::star_graph(3), 1);
  CHECK(star.graph.vertex_count() == 3);
  CHECK(star.graph.edge_count() == 0);
}

TEST_CASE("uniform induced subgraph") {
  const auto k4 = oracles::complete_graph(4);
  const auto all = uniform_subgraph(k4, 4, std::nullopt, 1);
  CHECK(all.graph.edge_count() == 6);
  const auto none = uniform_subgraph(k4, 0, std::nullopt, 1);
  CHECK(none.graph.vertex_count() == 0);
  const auto pair = uniform_subgraph(k4, 2, std::nullopt, 5);
  CHECK(pair.graph.edge_count() == 1);

  CHECK_THROWS_AS(uniform_subgraph(k4, 5, std::nullopt, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(uniform_subgraph(k4, 1, 2, 1), std::invalid_argument);

  // cap restricts eligibility to low-degree vertices
  const auto star = oracles::star_graph(4);
  const auto leaves = uniform_subgraph(star, 4, 1, 3);
  for (VertexId id : leaves.original_ids) CHECK(id != 0);
}

TEST_CASE("degree-biased marking") {
  const auto path = oracles::path_graph(6);
  const auto identity = degree_biased_subgraph(path, 0.0, 9);
  CHECK(identity.graph.vertex_count() == 6);
  CHECK(identity.graph.edge_count() == 5);

  Graph isolated = Graph::from_edges(3, std::vector<std::pair<VertexId, VertexId>>{{0, 1}});
  for (int seed = 0; seed < 50; ++seed) {
    const auto sub = degree_biased_subgraph(isolated, 5.0, seed);
    bool kept2 = false;
    for (VertexId id : sub.original_ids) kept2 |= id == 2;
    CHECK(kept2);  // degree-0 vertices always survive
  }

  CHECK_THROWS_AS(degree_biased_subgraph(path, -0.5, 1),
                  std::invalid_argument);

  // star with 3 leaves, tau = 1: leaves certain, center with probability 1/3
  const auto star = oracles::star_graph(3);
  int center = 0;
  const int runs = 30000;
  for (int seed = 0; seed < runs; ++seed) {
    const auto sub = degree_biased_subgraph(star, 1.0, seed);
    CHECK(sub.graph.vertex_count() >= 3);
    for (VertexId id : sub.original_ids) center += id == 0;
  }
  const double freq = center / static_cast<double>(runs);
  const double se = std::sqrt((1.0 / 3) * (2.0 / 3) / runs);
  CHECK(std::abs(freq - 1.0 / 3) < 3 * se);
}

TEST_CASE("induced soundness against the brute oracle") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 4 + static_cast<int>(rng() % 29);
    const auto g = oracles::to_graph(oracles::random_graph(rng, n, 0.2));
    const auto capped =
        degree_cap_subgraph(g, static_cast<std::uint32_t>(rng() % 6));
    check_induced(g, capped);
    const auto uniform = uniform_subgraph(
        g, static_cast<VertexId>(rng() % (n + 1)), std::nullopt, rng());
    check_induced(g, uniform);
    const auto biased = degree_biased_subgraph(g, 0.7, rng());
    check_induced(g, biased);
  }
}

TEST_CASE("cap holds in the source graph") {
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 30; ++trial) {
    const auto g = oracles::to_graph(oracles::random_graph(rng, 24, 0.3));
    const std::uint32_t cap = 2 + static_cast<std::uint32_t>(rng() % 5);
    const auto sub = degree_cap_subgraph(g, cap);
    for (VertexId v : sub.original_ids) CHECK(g.degree(v) <= cap);
  }
}

TEST_CASE("per-vertex retention frequencies") {
  std::mt19937_64 rng(35);
  const auto g = oracles::to_graph(oracles::random_graph(rng, 20, 0.35));
  const double tau = 0.8;
  const int runs = 10000;
  std::vector<int> kept(20, 0);
  for (int seed = 0; seed < runs; ++seed) {
    const auto sub = degree_biased_subgraph(g, tau, seed);
    for (VertexId id : sub.original_ids) ++kept[id];
  }
  for (VertexId v = 0; v < 20; ++v) {
    const double d = g.degree(v);
    const double p = d <= 1.0 ? 1.0 : std::min(1.0, std::pow(d, -tau));
    const double freq = kept[v] / static_cast<double>(runs);
    if (p == 1.0) {
      CHECK(freq == 1.0);
    } else {
      const double se = std::sqrt(p * (1 - p) / runs);
      CHECK(std::abs(freq - p) < 3 * se);
    }
  }
}
