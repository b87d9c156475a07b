#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace uttp {

// All distances are stored in half-units: the stored value is twice the true
// distance. Hub weights of the form (2cn-1)/2 then stay integral and every
// cost computation is exact integer arithmetic.
using Half = std::int64_t;

/// Renders a half-unit value in true units ("15" -> "7.5", "8" -> "4").
std::string format_true_units(Half h);

/// Symmetric integer distance matrix with zero diagonal, in half-units.
struct CostMatrix {
  int size = 0;
  std::vector<Half> entries;  // row-major, size*size

  static CostMatrix zeros(int size);
  Half at(int i, int j) const { return entries[static_cast<size_t>(i) * size + j]; }
  void set(int i, int j, Half value);  // sets both (i,j) and (j,i)

  /// Throws std::invalid_argument unless square, symmetric, nonnegative and
  /// zero on the diagonal.
  void require_well_formed() const;
};

/// Complete instance whose off-diagonal true costs are all 1 or 2.
struct TspInstance {
  CostMatrix matrix;
  int n() const { return matrix.size; }
};

/// Checks the {1,2} cost restriction (4 half-units max) and wraps the matrix.
TspInstance as_12_instance(CostMatrix matrix);

/// Cyclic visiting order; the closing edge back to order.front() is implied.
struct Tour {
  std::vector<int> order;
  Half cost = 0;
};

/// Vertex sequence with sequence.front() == sequence.back().
struct ClosedWalk {
  std::vector<int> sequence;
  Half cost = 0;
};

/// True iff entries[i][k] <= entries[i][j] + entries[j][k] for all i, j, k.
bool validate_metric(const CostMatrix& matrix);

/// Cost of the cyclic tour, closing edge included. Rejects sequences that
/// are not permutations of 0..size-1.
Half tour_cost(const CostMatrix& matrix, const std::vector<int>& order);

/// Sum of consecutive-step distances; no implicit closing edge.
Half walk_cost(const CostMatrix& matrix, const std::vector<int>& sequence);

Tour make_tour(const CostMatrix& matrix, std::vector<int> order);
ClosedWalk make_walk(const CostMatrix& matrix, std::vector<int> sequence);

/// Shortcuts a spanning closed walk down to a Hamiltonian tour by removing
/// revisited vertices left to right (each kept vertex keeps its first
/// occurrence). On a metric matrix the result never costs more than the
/// walk. Rejects non-metric matrices and walks that miss a vertex.
Tour shortcut_walk(const CostMatrix& matrix, const ClosedWalk& walk);

/// Exact minimum-cost Hamiltonian tour via dynamic programming over vertex
/// subsets. Rejects matrices larger than oracle_size_limit().
Tour solve_tsp_exact(const CostMatrix& matrix);

/// Defaults to 20; override with the UTTP_ORACLE_SIZE_LIMIT environment
/// variable (memory grows as size * 2^size).
int oracle_size_limit();

/// Deterministic random instance with true costs in {1,2}; `density` is the
/// fraction of cost-1 edges. Identical arguments give identical instances.
TspInstance gen_12_instance(int n, double density, std::uint32_t seed);

}  // namespace uttp
