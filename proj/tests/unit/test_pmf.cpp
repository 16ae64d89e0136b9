#include <doctest.h>

#include <stdexcept>

#include <cmath>

#include "clfn/pmf.hpp"
#include "clfn/rng.hpp"

using clfn::DiscretePmf;

TEST_CASE("pmf validation") {
  CHECK_THROWS_AS(DiscretePmf::from_pairs({}), std::invalid_argument);
  CHECK_THROWS_AS(DiscretePmf::from_pairs({{1, 0.5}, {1, 0.5}}),
                  std::invalid_argument);  // duplicate value
  CHECK_THROWS_AS(DiscretePmf::from_pairs({{1, -0.1}, {2, 1.1}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(DiscretePmf::from_pairs({{1, 0.5}, {2, 0.6}}),
                  std::invalid_argument);  // sums to 1.1
  CHECK_THROWS_AS(DiscretePmf::from_pairs({{-1, 1.0}}), std::invalid_argument);
  CHECK_NOTHROW(DiscretePmf::from_pairs({{3, 0.25}, {1, 0.75}}));
}

TEST_CASE("pmf parse syntax") {
  const auto pmf = DiscretePmf::parse("10:0.25,2:0.75");
  REQUIRE(pmf.size() == 2);
  CHECK(pmf.values()[0] == 2.0);  // sorted by value
  CHECK(pmf.probs()[0] == 0.75);
  CHECK(pmf.max_value() == 10.0);
  CHECK(pmf.has_integer_support());
  CHECK_FALSE(DiscretePmf::parse("0.5:1.0").has_integer_support());
  CHECK_THROWS_AS(DiscretePmf::parse("10"), std::invalid_argument);
  CHECK_THROWS_AS(DiscretePmf::parse("a:b"), std::invalid_argument);
  CHECK_THROWS_AS(DiscretePmf::parse("1:0.5,2:0.4"), std::invalid_argument);
}

TEST_CASE("pmf moments") {
  const auto uniform12 = DiscretePmf::parse("1:0.5,2:0.5");
  CHECK(uniform12.moment(1) == doctest::Approx(1.5).epsilon(1e-14));
  CHECK(uniform12.moment(2) == doctest::Approx(2.5).epsilon(1e-14));
  const auto point = DiscretePmf::parse("10:1");
  CHECK(point.moment(3) == doctest::Approx(1000.0).epsilon(1e-14));
}

TEST_CASE("pmf sampling matches probabilities") {
  const auto pmf = DiscretePmf::parse("0:0.2,1:0.5,4:0.3");
  const int draws = 200000;
  int counts[5] = {0, 0, 0, 0, 0};
  clfn::SubstreamRng rng(12345, 0);
  for (int i = 0; i < draws; ++i)
    ++counts[static_cast<int>(pmf.sample(rng))];
  const double expected[] = {0.2 * draws, 0.5 * draws, 0.0, 0.0, 0.3 * draws};
  double chi2 = 0.0;
  for (int v : {0, 1, 4})
    chi2 += (counts[v] - expected[v]) * (counts[v] - expected[v]) / expected[v];
  CHECK(chi2 < 13.8);  // chi-square, 2 df, far tail
  CHECK(counts[2] == 0);
  CHECK(counts[3] == 0);
}
