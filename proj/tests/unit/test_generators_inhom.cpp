#include <doctest.h>

#include <stdexcept>

#include <cmath>

#include "clfn/generators.hpp"

using clfn::DiscretePmf;
using clfn::InhomOptions;
using clfn::memoryless_inhomogeneous;
using clfn::sample_inhomogeneous;

TEST_CASE("degenerate weight laws") {
  const auto empty =
      sample_inhomogeneous(10, 8, DiscretePmf::parse("0:1"),
                           DiscretePmf::parse("3:1"), 5);
  CHECK(empty.incidence.total_memberships() == 0);
  CHECK(empty.clamped_cells == 0);

  // A B >= sqrt(nm) for every cell: all sets saturate to the full ground set.
  const auto full =
      sample_inhomogeneous(4, 4, DiscretePmf::parse("3:1"),
                           DiscretePmf::parse("3:1"), 5);
  for (clfn::VertexId v = 0; v < 4; ++v)
    CHECK(full.incidence.set_size(v) == 4);
  CHECK(full.clamped_cells == 16);  // 9/4 > 1 in every cell
}

TEST_CASE("cell inclusion frequencies match min{1, AB/sqrt(nm)}") {
  // Constant weights A=2, B=3 on a 100x100 grid: every cell has p = 0.06.
  const auto P1 = DiscretePmf::parse("2:1");
  const auto P2 = DiscretePmf::parse("3:1");
  const int runs = 10000;
  int hit00 = 0, hit57 = 0;
  long long memberships = 0;
  for (int s = 0; s < runs; ++s) {
    const auto out = sample_inhomogeneous(100, 100, P1, P2, 40000 + s);
    CHECK(out.clamped_cells == 0);
    const auto row0 = out.incidence.set_of(0);
    const auto row5 = out.incidence.set_of(5);
    hit00 += std::binary_search(row0.begin(), row0.end(), 0u);
    hit57 += std::binary_search(row5.begin(), row5.end(), 7u);
    memberships += static_cast<long long>(out.incidence.total_memberships());
  }
  const double p = 2.0 * 3.0 / std::sqrt(100.0 * 100.0);
  const double se = std::sqrt(p * (1 - p) / runs);
  CHECK(std::abs(hit00 / static_cast<double>(runs) - p) < 3 * se);
  CHECK(std::abs(hit57 / static_cast<double>(runs) - p) < 3 * se);
  // total memberships concentrate tightly around n m p
  const double mean_m = memberships / static_cast<double>(runs);
  const double se_m = std::sqrt(100.0 * 100.0 * p * (1 - p) / runs);
  CHECK(std::abs(mean_m - 10000.0 * p) < 3 * se_m);
}

TEST_CASE("memoryless marginals are reproduced in expectation") {
  const std::vector<std::uint32_t> a{3, 2, 1};
  const std::vector<std::uint32_t> b{2, 2, 2};
  const int runs = 20000;
  std::array<long long, 3> row_sum{};
  for (int s = 0; s < runs; ++s) {
    const auto out = memoryless_inhomogeneous(a, b, 7000 + s);
    CHECK(out.clamped_cells == 0);  // max a_i b_j / M = 6/6, not clamped
    for (int i = 0; i < 3; ++i)
      row_sum[i] += out.incidence.set_size(static_cast<clfn::VertexId>(i));
  }
  for (int i = 0; i < 3; ++i) {
    const double mean = row_sum[i] / static_cast<double>(runs);
    // Var |D_i| = Σ_j p(1-p), p = a_i b_j / M = a_i / 3
    const double p = a[i] / 3.0;
    const double se = std::sqrt(3.0 * p * (1 - p) / runs);
    CHECK(std::abs(mean - a[i]) < 3 * se + 1e-9);
  }
}

TEST_CASE("memoryless clamp reporting and validation") {
  const std::vector<std::uint32_t> a{2, 1};
  const std::vector<std::uint32_t> b{2, 1};
  const auto out = memoryless_inhomogeneous(a, b, 11);
  CHECK(out.clamped_cells == 1);  // the (2,2) cell has 4/3 > 1

  const std::vector<std::uint32_t> zeros{0, 0};
  CHECK_THROWS_AS(memoryless_inhomogeneous(zeros, zeros, 1),
                  std::invalid_argument);
  const std::vector<std::uint32_t> three{3};
  const std::vector<std::uint32_t> four{4};
  CHECK_THROWS_AS(memoryless_inhomogeneous(three, four, 1),
                  std::invalid_argument);
}

TEST_CASE("determinism and the fast path's distribution") {
  const auto P1 = DiscretePmf::parse("1:0.5,2:0.5");
  const auto P2 = DiscretePmf::parse("1:1");
  const auto x = sample_inhomogeneous(40, 40, P1, P2, 123);
  const auto y = sample_inhomogeneous(40, 40, P1, P2, 123);
  CHECK(x.incidence.total_memberships() == y.incidence.total_memberships());
  for (clfn::VertexId v = 0; v < 40; ++v) {
    const auto sx = x.incidence.set_of(v), sy = y.incidence.set_of(v);
    REQUIRE(std::equal(sx.begin(), sx.end(), sy.begin(), sy.end()));
  }

  InhomOptions fast;
  fast.fast = true;
  const auto f1 = sample_inhomogeneous(40, 40, P1, P2, 123, fast);
  const auto f2 = sample_inhomogeneous(40, 40, P1, P2, 123, fast);
  CHECK(f1.incidence.total_memberships() == f2.incidence.total_memberships());

  // Same law as the exact path: mean membership count over seeds.
  const int runs = 4000;
  long long exact_total = 0, fast_total = 0;
  for (int s = 0; s < runs; ++s) {
    exact_total += static_cast<long long>(
        sample_inhomogeneous(40, 40, P1, P2, s).incidence.total_memberships());
    fast_total += static_cast<long long>(
        sample_inhomogeneous(40, 40, P1, P2, s, fast)
            .incidence.total_memberships());
  }
  // each cell p = A/40 with A in {1,2}; E memberships = 40*40*1.5/40 = 60,
  // Var per run = 40 (E A(1-A/40) + Var A) = 67.5
  const double expected = 60.0;
  const double sd_run = std::sqrt(67.5);
  const double se = 3 * sd_run / std::sqrt(static_cast<double>(runs));
  CHECK(std::abs(exact_total / double(runs) - expected) < se);
  CHECK(std::abs(fast_total / double(runs) - expected) < se);
}
