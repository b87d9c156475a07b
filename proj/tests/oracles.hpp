// Test-only oracles, kept independent of the library's code paths they
// cross-check.
#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "uttp/tsp.hpp"

namespace uttp::testing {

// Plain edge-by-edge cyclic cost, written independently of tour_cost.
inline Half naive_cycle_cost(const CostMatrix& m, const std::vector<int>& order) {
  Half total = 0;
  const size_t k = order.size();
  for (size_t i = 0; i < k; ++i) {
    const int a = order[i];
    const int b = order[(i + 1) % k];
    total += m.entries[static_cast<size_t>(a) * m.size + b];
  }
  return total;
}

// Minimum tour cost by enumerating all permutations with vertex 0 pinned.
inline Half brute_force_tsp(const CostMatrix& m) {
  std::vector<int> order(m.size);
  std::iota(order.begin(), order.end(), 0);
  Half best = naive_cycle_cost(m, order);
  while (std::next_permutation(order.begin() + 1, order.end()))
    best = std::min(best, naive_cycle_cost(m, order));
  return best;
}

// Random closed walk that visits every vertex at least once.
inline std::vector<int> random_spanning_walk(int size, int extra_steps, std::mt19937& rng) {
  std::vector<int> seq(size);
  std::iota(seq.begin(), seq.end(), 0);
  std::shuffle(seq.begin(), seq.end(), rng);
  for (int i = 0; i < extra_steps; ++i)
    seq.insert(seq.begin() + static_cast<long>(rng() % (seq.size() + 1)),
               static_cast<int>(rng() % size));
  // A closed walk must not step in place after the closing element is added.
  seq.erase(std::unique(seq.begin(), seq.end()), seq.end());
  seq.push_back(seq.front());
  return seq;
}

}  // namespace uttp::testing
