#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <cstdint>
#include <numeric>
#include <vector>

#include "majority/core.hpp"
#include "majority/rng.hpp"

using namespace majority;

TEST_SUITE("core") {

TEST_CASE("uniform_probabilities") {
  SUBCASE("n=4") {
    const auto p = uniform_probabilities(4);
    REQUIRE(p.size() == 4);
    for (std::size_t j = 0; j < 4; ++j) CHECK(p[j] == doctest::Approx(0.25));
  }
  SUBCASE("n=1 is degenerate") {
    const auto p = uniform_probabilities(1);
    CHECK(p[0] == 1.0);
  }
  SUBCASE("n=1000 stays normalized") {
    const auto p = uniform_probabilities(1000);
    CHECK(std::fabs(p.sum() - 1.0) <= 1e-12);
    CHECK(p.is_normalized());
  }
  SUBCASE("n=0 rejected") {
    CHECK_THROWS_AS(uniform_probabilities(0), std::invalid_argument);
  }
}

TEST_CASE("SimConfig enforces the square game and positive spans") {
  const SimConfig cfg = SimConfig::make(10, 100, 42);
  CHECK(cfg.n_restaurants == 10);
  CHECK_NOTHROW(cfg.validate());

  SimConfig bad = cfg;
  bad.n_restaurants = 9;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);

  CHECK_THROWS_AS(SimConfig::make(0, 100, 1), std::invalid_argument);
  CHECK_THROWS_AS(SimConfig::make(10, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(SimConfig::make(10, 100, 1, 0), std::invalid_argument);
}

TEST_CASE("renormalize clamps negatives and restores unit mass") {
  ProbabilityVector p;
  p.weights = {0.5, -1e-9, 0.5};
  p.renormalize();
  CHECK(p[1] == 0.0);
  CHECK(std::fabs(p.sum() - 1.0) <= 1e-12);

  ProbabilityVector zero;
  zero.weights = {0.0, 0.0};
  CHECK_THROWS_AS(zero.renormalize(), std::domain_error);
}

TEST_CASE("sample_restaurant on degenerate vectors") {
  Rng rng = make_rng(9, 0);
  ProbabilityVector first;
  first.weights = {1.0, 0.0, 0.0};
  ProbabilityVector last;
  last.weights = {0.0, 0.0, 1.0};
  for (int i = 0; i < 20; ++i) {
    CHECK(sample_restaurant(first, rng) == 0);
    CHECK(sample_restaurant(last, rng) == 2);
  }
}

TEST_CASE("sample_restaurant frequencies match the weights") {
  SUBCASE("coin flip within one percent") {
    ProbabilityVector p;
    p.weights = {0.5, 0.5};
    Rng rng = make_rng(123, 0);
    int zeros = 0;
    const int draws = 100000;
    for (int i = 0; i < draws; ++i)
      if (sample_restaurant(p, rng) == 0) ++zeros;
    const double freq = double(zeros) / draws;
    CHECK(freq > 0.49);
    CHECK(freq < 0.51);
  }
  SUBCASE("skewed vector within five sigma per index") {
    ProbabilityVector p;
    p.weights = {0.1, 0.2, 0.3, 0.4};
    Rng rng = make_rng(321, 0);
    std::vector<int> counts(4, 0);
    const int draws = 100000;
    for (int i = 0; i < draws; ++i) ++counts[sample_restaurant(p, rng)];
    for (std::size_t j = 0; j < 4; ++j) {
      const double w = p[j];
      const double sigma = std::sqrt(w * (1 - w) / draws);
      CHECK(std::fabs(double(counts[j]) / draws - w) < 5 * sigma);
    }
  }
}

TEST_CASE("sample_restaurant consumes exactly one draw") {
  Rng probe = make_rng(55, 2);
  probe.next_double();  // the draw the sampler will consume
  const double second = probe.next_double();

  Rng rng = make_rng(55, 2);
  ProbabilityVector p;
  p.weights = {0.25, 0.25, 0.25, 0.25};
  sample_restaurant(p, rng);
  CHECK(rng.next_double() == second);
}

TEST_CASE("occupancy summaries") {
  Occupancy occ;
  occ.counts = {5, 0, 3, 1};
  CHECK(occ.total() == 9);
  CHECK(occ.occupied_count() == 3);
  const auto top = occ.top3();
  CHECK(top[0] == 5);
  CHECK(top[1] == 3);
  CHECK(top[2] == 1);

  Occupancy two;
  two.counts = {0, 7, 0, 2};
  const auto padded = two.top3();
  CHECK(padded[0] == 7);
  CHECK(padded[1] == 2);
  CHECK(padded[2] == 0);
}

TEST_CASE("coordination predicate") {
  Occupancy occ;
  occ.counts = {5, 0, 0, 0, 0};
  CHECK(is_pure_nash(occ));
  occ.counts = {3, 2, 0, 0, 0};
  CHECK_FALSE(is_pure_nash(occ));
  occ.counts = {0, 0, 0, 0, 5};
  CHECK(is_pure_nash(occ));
}

// Independent oracle: a configuration is an equilibrium iff no agent can
// strictly raise the head count around her by moving (joining restaurant l
// puts counts[l] + 1 people there). Enumerates all placements of 5 agents.
TEST_CASE("coordination predicate agrees with brute-force deviation check") {
  const std::uint32_t n = 5;
  std::vector<std::uint32_t> counts(n, 0);

  auto no_profitable_deviation = [&]() {
    for (std::uint32_t j = 0; j < n; ++j) {
      if (counts[j] == 0) continue;
      for (std::uint32_t l = 0; l < n; ++l) {
        if (l == j) continue;
        if (counts[l] + 1 > counts[j]) return false;
      }
    }
    return true;
  };

  // Enumerate compositions of 5 into 5 parts.
  std::size_t checked = 0;
  auto recurse = [&](auto&& self, std::uint32_t slot, std::uint32_t left) -> void {
    if (slot == n - 1) {
      counts[slot] = left;
      Occupancy occ;
      occ.counts = counts;
      CHECK(is_pure_nash(occ) == no_profitable_deviation());
      ++checked;
      return;
    }
    for (std::uint32_t c = 0; c <= left; ++c) {
      counts[slot] = c;
      self(self, slot + 1, left - c);
    }
  };
  recurse(recurse, 0, n);
  CHECK(checked == 126);  // C(9,4) compositions
}

}  // TEST_SUITE
