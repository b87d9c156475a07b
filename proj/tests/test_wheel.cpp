#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "uttp/wheel.hpp"

using namespace uttp;
using namespace uttp::testing;

TEST_CASE("completion reproduces the published 7x7 matrix") {
  const WheelInstance w = build_wheel(small_base(), 0, 3);
  CHECK(w.m == 7);
  const CostMatrix expected = small_completed_true_units();
  REQUIRE(w.matrix.size == expected.size);
  CHECK(w.matrix.entries == expected.entries);
}

TEST_CASE("a single copy glued at vertex 0 is the base matrix") {
  const TspInstance base = gen_12_instance(5, 0.5, 4);
  const WheelInstance w = build_wheel(base, 0, 1);
  CHECK(w.m == 5);
  CHECK(w.matrix.entries == base.matrix.entries);
  for (int v = 0; v < w.m; ++v) CHECK(w.copy_of(v).base_vertex == v);
}

TEST_CASE("cross-copy entries follow the through-the-centre formula") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 10; ++trial) {
    const TspInstance base = gen_12_instance(4 + static_cast<int>(rng() % 3), 0.5, rng());
    const int central = static_cast<int>(rng() % base.n());
    const WheelInstance w = build_wheel(base, central, 2);
    for (int x = 0; x < w.m; ++x)
      for (int y = 0; y < w.m; ++y) {
        if (x == y) continue;
        const CopyRef rx = w.copy_of(x);
        const CopyRef ry = w.copy_of(y);
        if (rx.central || ry.central || rx.copy == ry.copy) continue;
        CHECK(w.matrix.at(x, y) == base.matrix.at(rx.base_vertex, central) +
                                       base.matrix.at(central, ry.base_vertex));
      }
  }
}

TEST_CASE("completion entries stay in {1,2,3,4} and metric") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 15; ++trial) {
    const TspInstance base = gen_12_instance(3 + static_cast<int>(rng() % 4), 0.3, rng());
    const WheelInstance w =
        build_wheel(base, static_cast<int>(rng() % base.n()), 1 + static_cast<int>(rng() % 3));
    CHECK(validate_metric(w.matrix));
    for (int x = 0; x < w.m; ++x)
      for (int y = 0; y < x; ++y) {
        CHECK(w.matrix.at(x, y) >= 2);
        CHECK(w.matrix.at(x, y) <= 8);
      }
  }
}

TEST_CASE("build_wheel validates arguments") {
  const TspInstance base = small_base();
  CHECK_THROWS_AS(build_wheel(base, 0, 0), std::invalid_argument);
  CHECK_THROWS_AS(build_wheel(base, 3, 2), std::invalid_argument);
}

TEST_CASE("copy bookkeeping on the published layout") {
  const WheelInstance w = build_wheel(small_base(), 0, 3);
  CHECK(w.copy_of(0).central);
  // vertex 2 is the second vertex of the first copy (x3 in the figure)
  CHECK_FALSE(w.copy_of(2).central);
  CHECK(w.copy_of(2).copy == 1);
  CHECK(w.copy_of(2).base_vertex == 2);
  // vertex 4 is the second vertex of the second copy (y3)
  CHECK(w.copy_of(4).copy == 2);
  CHECK(w.copy_of(4).base_vertex == 2);
  CHECK_THROWS_AS(w.copy_of(7), std::invalid_argument);
}

TEST_CASE("copy bookkeeping round-trips") {
  std::mt19937 rng(5);
  const TspInstance base = gen_12_instance(5, 0.5, 12);
  const WheelInstance w = build_wheel(base, 2, 3);
  for (int v = 1; v < w.m; ++v) {
    const CopyRef r = w.copy_of(v);
    CHECK(w.vertex_of(r.copy, r.base_vertex) == v);
  }
  CHECK(w.vertex_of(1, w.central) == 0);
  CHECK(w.vertex_of(3, w.central) == 0);
}

TEST_CASE("lifting a base tour costs exactly c times the base") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 10; ++trial) {
    const TspInstance base = gen_12_instance(4 + static_cast<int>(rng() % 3), 0.5, rng());
    const WheelInstance w =
        build_wheel(base, static_cast<int>(rng() % base.n()), 2 + static_cast<int>(rng() % 2));
    std::vector<int> order(base.n());
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    const Tour base_tour = make_tour(base.matrix, order);
    const Tour lifted = lift_tour(w, base_tour);
    CHECK(lifted.cost == static_cast<Half>(w.c) * base_tour.cost);
    CHECK(tour_cost(w.matrix, lifted.order) == lifted.cost);
  }
}

TEST_CASE("optimal completion cost is c times the base optimum (worked example)") {
  const Corollary1Report r = verify_corollary1(small_base(), 0, 3);
  CHECK(r.opt_base == 10);
  CHECK(r.opt_wheel == 30);
  CHECK(r.holds);
}

TEST_CASE("optimal completion cost on an all-ones base") {
  const Corollary1Report r = verify_corollary1(gen_12_instance(4, 1.0, 0), 0, 2);
  CHECK(r.opt_base == 8);
  CHECK(r.opt_wheel == 16);
  CHECK(r.holds);
}

TEST_CASE("optimal completion sweep over random instances") {
  std::mt19937 rng(47);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 4 + static_cast<int>(rng() % 2);
    const int c = 2 + static_cast<int>(rng() % 2);
    const TspInstance base = gen_12_instance(n, 0.2 + 0.6 * (trial % 4) / 3.0, rng());
    const Corollary1Report r = verify_corollary1(base, static_cast<int>(rng() % n), c);
    CHECK(r.holds);
  }
}
