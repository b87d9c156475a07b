// Shared fixtures: the worked 3-vertex example and its published 7x7
// completion (copy count 3, central vertex 0), stored in half-units.
#pragma once

#include "uttp/tsp.hpp"

namespace uttp::testing {

// True costs: d(0,1)=1, d(0,2)=2, d(1,2)=2.
inline TspInstance small_base() {
  CostMatrix m = CostMatrix::zeros(3);
  m.set(0, 1, 2);
  m.set(0, 2, 4);
  m.set(1, 2, 4);
  return as_12_instance(std::move(m));
}

// The published completed matrix for small_base() with c = 3, true units:
//      v  x2 x3 y2 y3 z2 z3
//  v   -  1  2  1  2  1  2
//  x2  1  -  2  2  3  2  3
//  x3  2  2  -  3  4  3  4
//  y2  1  2  3  -  2  2  3
//  y3  2  3  4  2  -  3  4
//  z2  1  2  3  2  3  -  2
//  z3  2  3  4  3  4  2  -
inline CostMatrix small_completed_true_units() {
  const int d[7][7] = {
      {0, 1, 2, 1, 2, 1, 2},
      {1, 0, 2, 2, 3, 2, 3},
      {2, 2, 0, 3, 4, 3, 4},
      {1, 2, 3, 0, 2, 2, 3},
      {2, 3, 4, 2, 0, 3, 4},
      {1, 2, 3, 2, 3, 0, 2},
      {2, 3, 4, 3, 4, 2, 0},
  };
  CostMatrix m = CostMatrix::zeros(7);
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j) m.entries[static_cast<size_t>(i) * 7 + j] = 2 * d[i][j];
  return m;
}

}  // namespace uttp::testing
