#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "oracles.hpp"
#include "scenery/errors.hpp"
#include "scenery/walk.hpp"

using namespace scenery;

TEST_CASE("step distribution validation") {
  const FiniteGroup g = cyclic(3);
  CHECK_NOTHROW(StepDistribution(g, {0.5, 0.25, 0.25}));
  CHECK_THROWS_AS(StepDistribution(g, {0.5, 0.5}), ValidationError);
  CHECK_THROWS_AS(StepDistribution(g, {0.5, 0.6, -0.1}), ValidationError);
  CHECK_THROWS_AS(StepDistribution(g, {0.5, 0.25, 0.2}), ValidationError);
  CHECK_THROWS_AS(StepDistribution::point_mass(g, 3), ValidationError);
  const auto r1 = StepDistribution::random(g, 9), r2 = StepDistribution::random(g, 9);
  CHECK(std::equal(r1.probs().begin(), r1.probs().end(), r2.probs().begin()));
  CHECK(std::accumulate(r1.probs().begin(), r1.probs().end(), 0.0) == doctest::Approx(1.0));
}

TEST_CASE("seeded generator is reproducible and in range") {
  SeededRng a(5), b(5);
  for (int i = 0; i < 100; ++i) {
    const double u = a.uniform();
    CHECK(u == b.uniform());
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
  }
}

TEST_CASE("temporal autocorrelation: direct, spectral and path sums agree") {
  SeededRng rng(41);
  for (const char* name : {"Z3", "D3", "Q8", "Z2xZ2"}) {
    const FiniteGroup g = build_builtin(name);
    const IrrepSet set = irreducible_representations(g);
    for (int t = 0; t < 4; ++t) {
      const Scenery f = oracle::random_scenery(rng, g.order());
      const StepDistribution gamma = StepDistribution::random(g, rng.next());
      for (unsigned l = 1; l <= 3; ++l) {
        const double d = temporal_autocorrelation_direct(g, f, gamma, l);
        const double s = temporal_autocorrelation_spectral(g, set, f, gamma, l);
        const std::vector<int> times{1, 1 + static_cast<int>(l)};
        CHECK(std::abs(d - s) < 1e-12);
        CHECK(std::abs(d - oracle::all_ones_by_paths(g, f, gamma.probs(), times)) < 1e-12);
      }
    }
  }
}

TEST_CASE("temporal multispectrum: direct, spectral and path sums agree") {
  SeededRng rng(42);
  for (const char* name : {"Z4", "D3"}) {
    const FiniteGroup g = build_builtin(name);
    const IrrepSet set = irreducible_representations(g);
    for (int t = 0; t < 3; ++t) {
      const Scenery f = oracle::random_scenery(rng, g.order());
      const StepDistribution gamma = StepDistribution::random(g, rng.next());
      for (const std::vector<unsigned>& lags :
           {std::vector<unsigned>{1, 2}, {2, 1}, {1, 1, 1}, {3, 1}}) {
        const double d = temporal_multispectrum_direct(g, f, gamma, lags);
        const double s = temporal_multispectrum_spectral(g, set, f, gamma, lags);
        std::vector<int> times{1};
        for (auto l : lags) times.push_back(times.back() + static_cast<int>(l));
        CHECK(std::abs(d - s) < 1e-12);
        CHECK(std::abs(d - oracle::all_ones_by_paths(g, f, gamma.probs(), times)) < 1e-12);
        CHECK(std::abs(d - all_ones_probability(g, f, gamma, times)) < 1e-12);
      }
    }
  }
}

TEST_CASE("order-one temporal multispectrum is the autocorrelation") {
  const FiniteGroup g = dihedral(4);
  const Scenery f = Scenery::parse("10110010");
  const StepDistribution gamma = StepDistribution::random(g, 3);
  for (unsigned l = 1; l <= 4; ++l) {
    const std::vector<unsigned> lags{l};
    CHECK(temporal_multispectrum_direct(g, f, gamma, lags) ==
          doctest::Approx(temporal_autocorrelation_direct(g, f, gamma, l)).epsilon(1e-14));
  }
}

TEST_CASE("observation law matches path enumeration") {
  SeededRng rng(43);
  for (const char* name : {"Z3", "D3", "Z2xZ2"}) {
    const FiniteGroup g = build_builtin(name);
    const Scenery f = oracle::random_scenery(rng, g.order());
    const StepDistribution gamma = StepDistribution::random(g, rng.next());
    const ObservationDistribution law = observation_distribution(g, f, gamma, 4);
    const auto brute = oracle::pattern_law_by_paths(g, f, gamma.probs(), 4);
    REQUIRE(law.probs.size() == 16);
    for (std::size_t i = 0; i < 16; ++i) CHECK(std::abs(law.probs[i] - brute[i]) < 1e-14);
    CHECK(std::accumulate(law.probs.begin(), law.probs.end(), 0.0) == doctest::Approx(1.0));
    // truncation marginalizes the last observation
    const ObservationDistribution t3 = law.truncate(3);
    for (std::size_t i = 0; i < 8; ++i)
      CHECK(std::abs(t3.probs[i] - (law.probs[2 * i] + law.probs[2 * i + 1])) < 1e-15);
    CHECK(law.pattern("1111") == law.probs[15]);
    const std::vector<int> times{1, 3};
    CHECK(std::abs(law.all_ones(times) - oracle::all_ones_by_paths(g, f, gamma.probs(), times)) <
          1e-14);
  }
}

TEST_CASE("point-mass walk on a cycle is deterministic") {
  const FiniteGroup g = cyclic(4);
  const Scenery f = Scenery::parse("1000");
  const auto law = observation_distribution(g, f, StepDistribution::point_mass(g, 1), 4);
  // Starting at k, positions k, k+1, k+2, k+3; exactly one observation is 1.
  CHECK(law.pattern("1000") == doctest::Approx(0.25));
  CHECK(law.pattern("0100") == doctest::Approx(0.25));
  CHECK(law.pattern("0010") == doctest::Approx(0.25));
  CHECK(law.pattern("0001") == doctest::Approx(0.25));
  CHECK(law.pattern("1100") == 0.0);
}

TEST_CASE("distinguishability oracle basics") {
  const FiniteGroup g = cyclic(4);
  const StepDistribution uni = StepDistribution::uniform(g);
  SUBCASE("different support sizes") {
    const auto v = distinguishability_oracle(g, Scenery::parse("1000"), Scenery::parse("1100"),
                                             uni, 6, 2);
    CHECK(v.distinguished);
    CHECK(v.horizon == 1);
    CHECK_FALSE(v.moments_equal_by_order[0]);
  }
  SUBCASE("shifts are never distinguished") {
    const StepDistribution gamma = StepDistribution::random(g, 8);
    const auto v = distinguishability_oracle(g, Scenery::parse("1101"), Scenery::parse("1110"),
                                             gamma, 6, 3);
    CHECK_FALSE(v.distinguished);
    CHECK(v.moments_equal);
    CHECK(v.horizon == 6);
    CHECK(v.max_pattern_difference < 1e-14);
  }
  SUBCASE("uniform steps see only the density") {
    const auto v = distinguishability_oracle(g, Scenery::parse("1100"), Scenery::parse("1010"),
                                             uni, 8, 3);
    CHECK_FALSE(v.distinguished);
    CHECK(v.moments_equal);
  }
  SUBCASE("nearest-neighbour steps separate them") {
    const StepDistribution nn(g, {0.0, 0.5, 0.0, 0.5});
    const auto v = distinguishability_oracle(g, Scenery::parse("1100"), Scenery::parse("1010"),
                                             nn, 8, 2);
    CHECK(v.distinguished);
    CHECK(v.horizon == 2);
    CHECK_FALSE(v.moments_equal);
  }
}

TEST_CASE("sampled trajectories") {
  const FiniteGroup g = dihedral(3);
  const Scenery f = Scenery::parse("110100");
  const StepDistribution gamma = StepDistribution::random(g, 2);
  CHECK(sample_trajectory(g, f, gamma, 10, 77) == sample_trajectory(g, f, gamma, 10, 77));
  CHECK(sample_trajectory(g, f, gamma, 10, 77).size() == 10);
  const auto ones = sample_trajectory(g, Scenery::parse("111111"), gamma, 5, 1);
  CHECK(std::all_of(ones.begin(), ones.end(), [](auto b) { return b == 1; }));
}

TEST_CASE("caps and argument checks") {
  const FiniteGroup g = cyclic(2);
  const StepDistribution uni = StepDistribution::uniform(g);
  CHECK_THROWS_AS(observation_distribution(g, Scenery::parse("10"), uni, 30, 1 << 20), CapExceeded);
  CHECK_THROWS_AS(temporal_autocorrelation_direct(g, Scenery::parse("10"), uni, 0),
                  std::invalid_argument);
  CHECK_THROWS_AS(observation_distribution(g, Scenery::parse("101"), uni, 3), ValidationError);
}
