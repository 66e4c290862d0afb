#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "scenery/errors.hpp"
#include "scenery/fourier.hpp"
#include "scenery/scenery.hpp"

using namespace scenery;

TEST_CASE("parsing and formatting") {
  const Scenery f = Scenery::parse("1101");
  CHECK(f.order() == 4);
  CHECK(f(0) == 1);
  CHECK(f(2) == 0);
  CHECK(f.support_size() == 3);
  CHECK(f.str() == "1101");
  CHECK(f.mask() == 0b1011u);
  CHECK(f.as_real() == std::vector<double>{1, 1, 0, 1});
  CHECK_THROWS_AS(Scenery::parse("10a1"), ValidationError);
  CHECK_THROWS_AS(Scenery::parse("101", 4), ValidationError);
}

TEST_CASE("enumeration order") {
  const auto range = enumerate_sceneries(cyclic(3));
  std::vector<std::string> all;
  for (const Scenery& f : range) all.push_back(f.str());
  CHECK(all == std::vector<std::string>{"000", "001", "010", "011", "100", "101", "110", "111"});
  CHECK(scenery_from_counter(3, 4).str() == "100");
  CHECK_THROWS_AS(enumerate_sceneries(cyclic(21)), CapExceeded);
}

TEST_CASE("multispectrum matches brute force") {
  SeededRng rng(31);
  for (const char* name : {"Z4", "D3", "Q8", "Z2xZ2"}) {
    const FiniteGroup g = build_builtin(name);
    for (int t = 0; t < 5; ++t) {
      const Scenery f = oracle::random_scenery(rng, g.order());
      for (int n = 1; n <= 3; ++n) {
        const IntTensor a = multispectrum(g, f, n);
        CHECK(a.order == n);
        CHECK(a.values == oracle::multispectrum(g, f, n));
      }
    }
  }
}

TEST_CASE("autocorrelation is the order-one multispectrum and is symmetric") {
  const FiniteGroup g = dihedral(4);
  SeededRng rng(32);
  for (int t = 0; t < 10; ++t) {
    const Scenery f = oracle::random_scenery(rng, 8);
    const IntTensor a = spatial_autocorrelation(g, f);
    CHECK(a == multispectrum(g, f, 1));
    CHECK(a.values[0] == f.support_size());
    for (int x = 0; x < 8; ++x) CHECK(a.values[x] == a.values[g.inverse(x)]);
  }
}

TEST_CASE("autocorrelation transform factorizes") {
  SeededRng rng(33);
  for (const char* name : {"D3", "Q8", "D5", "D3xZ2"}) {
    const FiniteGroup g = build_builtin(name);
    const IrrepSet set = irreducible_representations(g);
    for (int t = 0; t < 10; ++t) {
      const Scenery f = oracle::random_scenery(rng, g.order());
      std::vector<double> fr = f.as_real(), flipped(g.order());
      for (int s = 0; s < g.order(); ++s) flipped[s] = fr[g.inverse(s)];
      std::vector<double> a;
      for (auto v : spatial_autocorrelation(g, f).values) a.push_back(static_cast<double>(v));
      for (const auto& rho : set.reps)
        CHECK(max_abs_diff(fourier_transform(a, rho), matmul(fourier_transform(fr, rho),
                                                             fourier_transform(flipped, rho))) <
              1e-9);
    }
  }
}

TEST_CASE("multispectrum is shift invariant") {
  SeededRng rng(34);
  for (const char* name : {"D3", "Q8", "Z6"}) {
    const FiniteGroup g = build_builtin(name);
    const Scenery f = oracle::random_scenery(rng, g.order());
    for (int h = 0; h < g.order(); ++h) CHECK(multispectrum(g, shift(g, f, h), 3) == multispectrum(g, f, 3));
  }
}

TEST_CASE("shift equivalence") {
  const FiniteGroup g = cyclic(4);
  const Scenery f = Scenery::parse("1100");
  CHECK(shift(g, f, 1).str() == "1001");
  CHECK(shift_equivalent(g, f, Scenery::parse("0110")).has_value());
  CHECK_FALSE(shift_equivalent(g, f, Scenery::parse("1010")).has_value());
  CHECK(shift_class_representative(g, Scenery::parse("0110")).str() == "0011");
  const auto w = shift_equivalent(g, f, Scenery::parse("0011"));
  REQUIRE(w.has_value());
  CHECK(shift(g, Scenery::parse("0011"), *w) == f);
}

TEST_CASE("assigned tuples") {
  const FiniteGroup g = cyclic(3);
  CHECK(element_number(g, 0) == 3);
  CHECK(element_number(g, 2) == 2);
  const std::vector<Element> x{1, 1, 1};
  // numbers of x_1, x_2 x_1, x_3 x_2 x_1 are 1, 2, 3; strictly increasing lifts.
  CHECK(assigned_tuple(g, x) == std::vector<int>{1, 2, 3});
  const std::vector<Element> y{2, 2, 2};
  CHECK(assigned_tuple(g, y) == std::vector<int>{2, 4, 6});
}

TEST_CASE("reconstruction returns a shift of the input") {
  SeededRng rng(35);
  for (const char* name : {"Z3", "Z4", "Z5", "Z2xZ2", "D3", "Z6"}) {
    const FiniteGroup g = build_builtin(name);
    for (int t = 0; t < 12; ++t) {
      const Scenery f = oracle::random_scenery(rng, g.order());
      const Reconstruction r = reconstruct_from_multispectrum(g, multispectrum(g, f, g.order()));
      CAPTURE(f.str());
      CHECK(shift_equivalent(g, r.scenery, f).has_value());
      CHECK(multispectrum(g, r.scenery, g.order()) == multispectrum(g, f, g.order()));
    }
  }
}

TEST_CASE("reconstruction edge cases") {
  const FiniteGroup g = cyclic(3);
  SUBCASE("zero scenery") {
    const Reconstruction r = reconstruct_from_multispectrum(g, multispectrum(g, Scenery::zeros(3), 3));
    CHECK(r.scenery.str() == "000");
    CHECK(r.minimal_tuple.empty());
  }
  SUBCASE("full scenery") {
    const Reconstruction r =
        reconstruct_from_multispectrum(g, multispectrum(g, Scenery::parse("111"), 3));
    CHECK(r.scenery.str() == "111");
  }
  SUBCASE("wrong order") {
    CHECK_THROWS_AS(reconstruct_from_multispectrum(g, multispectrum(g, Scenery::parse("110"), 2)),
                    ValidationError);
  }
  SUBCASE("inconsistent tensor") {
    IntTensor a = multispectrum(g, Scenery::parse("110"), 3);
    a.values[5] += 1;
    CHECK_THROWS_AS(reconstruct_from_multispectrum(g, a), ValidationError);
  }
}

TEST_CASE("flip_arguments is an involution") {
  const FiniteGroup g = quaternion8();
  const IntTensor a = multispectrum(g, Scenery::parse("11010010"), 2);
  CHECK(flip_arguments(g, flip_arguments(g, a)) == a);
}

TEST_CASE("multispectrum cap") {
  CHECK_THROWS_AS(multispectrum(cyclic(12), Scenery::zeros(12), 8, 1000), CapExceeded);
}
