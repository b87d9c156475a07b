#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <random>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "uttp/tsp.hpp"

using namespace uttp;
using namespace uttp::testing;

TEST_CASE("half-unit formatting") {
  CHECK(format_true_units(8) == "4");
  CHECK(format_true_units(15) == "7.5");
  CHECK(format_true_units(0) == "0");
}

TEST_CASE("validate_metric accepts the published completed matrix") {
  CHECK(validate_metric(small_completed_true_units()));
}

TEST_CASE("validate_metric accepts any uniform matrix") {
  CostMatrix m = CostMatrix::zeros(5);
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < i; ++j) m.set(i, j, 6);
  CHECK(validate_metric(m));
}

TEST_CASE("validate_metric rejects a broken triangle") {
  CostMatrix m = CostMatrix::zeros(3);
  m.set(0, 1, 2);  // true costs 1, 1, 3
  m.set(1, 2, 2);
  m.set(0, 2, 6);
  CHECK_FALSE(validate_metric(m));
}

TEST_CASE("tour_cost on the 3-vertex example") {
  const TspInstance g = small_base();
  CHECK(tour_cost(g.matrix, {0, 1, 2}) == 10);  // true cost 5
}

TEST_CASE("tour_cost is invariant under rotation and reversal") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 20; ++trial) {
    const TspInstance inst = gen_12_instance(7, 0.4, rng());
    std::vector<int> order(7);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    const Half cost = tour_cost(inst.matrix, order);

    std::vector<int> rotated(order.begin() + 3, order.end());
    rotated.insert(rotated.end(), order.begin(), order.begin() + 3);
    CHECK(tour_cost(inst.matrix, rotated) == cost);

    std::vector<int> reversed(order.rbegin(), order.rend());
    CHECK(tour_cost(inst.matrix, reversed) == cost);
  }
}

TEST_CASE("tour_cost matches an edge-by-edge recomputation") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 10; ++trial) {
    const TspInstance inst = gen_12_instance(6, 0.5, rng());
    std::vector<int> order(6);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    CHECK(tour_cost(inst.matrix, order) == naive_cycle_cost(inst.matrix, order));
  }
}

TEST_CASE("tour_cost rejects non-permutations") {
  const TspInstance g = small_base();
  CHECK_THROWS_AS(tour_cost(g.matrix, {0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(tour_cost(g.matrix, {0, 1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(tour_cost(g.matrix, {0, 1, 3}), std::invalid_argument);
}

TEST_CASE("shortcut_walk keeps a tour unchanged") {
  const TspInstance inst = gen_12_instance(6, 0.5, 3);
  std::vector<int> order{2, 0, 5, 1, 4, 3};
  std::vector<int> closed = order;
  closed.push_back(closed.front());
  const Tour t = shortcut_walk(inst.matrix, make_walk(inst.matrix, closed));
  CHECK(t.order == order);
  CHECK(t.cost == tour_cost(inst.matrix, order));
}

TEST_CASE("shortcut_walk drops revisits on a uniform metric") {
  CostMatrix m = CostMatrix::zeros(3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < i; ++j) m.set(i, j, 2);
  const ClosedWalk walk = make_walk(m, {0, 1, 0, 2, 0});
  CHECK(walk.cost == 8);
  const Tour t = shortcut_walk(m, walk);
  CHECK(t.order == std::vector<int>{0, 1, 2});
  CHECK(t.cost == 6);
}

TEST_CASE("shortcut_walk never increases cost") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const TspInstance inst = gen_12_instance(3 + static_cast<int>(rng() % 8), 0.5, rng());
    const auto seq = random_spanning_walk(inst.n(), 10, rng);
    const ClosedWalk walk = make_walk(inst.matrix, seq);
    const Tour t = shortcut_walk(inst.matrix, walk);
    CHECK(t.cost <= walk.cost);
  }
}

TEST_CASE("shortcut_walk rejects bad inputs") {
  const TspInstance inst = gen_12_instance(4, 0.5, 9);
  // walk missing vertex 3
  CHECK_THROWS_AS(shortcut_walk(inst.matrix, make_walk(inst.matrix, {0, 1, 2, 0})),
                  std::invalid_argument);
  CostMatrix broken = CostMatrix::zeros(3);
  broken.set(0, 1, 2);
  broken.set(1, 2, 2);
  broken.set(0, 2, 6);
  CHECK_THROWS_AS(shortcut_walk(broken, ClosedWalk{{0, 1, 2, 0}, 10}), std::invalid_argument);
}

TEST_CASE("exact solver handles the 3-vertex example") {
  CHECK(solve_tsp_exact(small_base().matrix).cost == 10);
}

TEST_CASE("exact solver matches brute force on the published completion") {
  const CostMatrix d = small_completed_true_units();
  CHECK(brute_force_tsp(d) == 30);  // 3 copies of the cost-5 base tour
  CHECK(solve_tsp_exact(d).cost == 30);
}

TEST_CASE("exact solver on an all-ones instance") {
  for (int k : {3, 5, 8}) {
    const TspInstance inst = gen_12_instance(k, 1.0, 0);
    CHECK(solve_tsp_exact(inst.matrix).cost == 2 * k);
  }
}

TEST_CASE("exact solver agrees with permutation enumeration") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 6);  // up to 8 vertices
    const TspInstance inst = gen_12_instance(n, 0.1 + 0.8 * (trial % 5) / 4.0, rng());
    const Tour t = solve_tsp_exact(inst.matrix);
    CHECK(t.cost == brute_force_tsp(inst.matrix));
    CHECK(tour_cost(inst.matrix, t.order) == t.cost);
  }
}

TEST_CASE("exact solver respects the size budget") {
  const TspInstance big = gen_12_instance(21, 0.5, 1);
  CHECK_THROWS_AS(solve_tsp_exact(big.matrix), std::invalid_argument);

  setenv("UTTP_ORACLE_SIZE_LIMIT", "5", 1);
  CHECK(oracle_size_limit() == 5);
  const TspInstance six = gen_12_instance(6, 0.5, 1);
  CHECK_THROWS_AS(solve_tsp_exact(six.matrix), std::invalid_argument);
  unsetenv("UTTP_ORACLE_SIZE_LIMIT");
  CHECK(oracle_size_limit() == 20);
  CHECK_NOTHROW(solve_tsp_exact(six.matrix));
}

TEST_CASE("instance generation respects density") {
  const TspInstance ones = gen_12_instance(6, 1.0, 42);
  const TspInstance twos = gen_12_instance(6, 0.0, 42);
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < i; ++j) {
      CHECK(ones.matrix.at(i, j) == 2);
      CHECK(twos.matrix.at(i, j) == 4);
    }
}

TEST_CASE("instance generation is deterministic") {
  const TspInstance a = gen_12_instance(6, 0.5, 7);
  const TspInstance b = gen_12_instance(6, 0.5, 7);
  CHECK(a.matrix.entries == b.matrix.entries);
  const TspInstance c = gen_12_instance(6, 0.5, 8);
  CHECK(a.matrix.entries != c.matrix.entries);
}

TEST_CASE("instance generation validates arguments") {
  CHECK_THROWS_AS(gen_12_instance(2, 0.5, 1), std::invalid_argument);
  CHECK_THROWS_AS(gen_12_instance(5, -0.1, 1), std::invalid_argument);
  CHECK_THROWS_AS(gen_12_instance(5, 1.1, 1), std::invalid_argument);
}
