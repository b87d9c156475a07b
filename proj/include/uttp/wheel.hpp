#pragma once

#include "uttp/tsp.hpp"

namespace uttp {

/// Copy membership of a completed-graph vertex. The central vertex belongs
/// to every copy and reports central == true with copy == 0; every other
/// vertex reports its copy in 1..c.
struct CopyRef {
  bool central = false;
  int copy = 0;
  int base_vertex = 0;
};

/// Metric completion of c copies of a base instance glued at a central
/// vertex. Vertex 0 is the central vertex; the vertices of copy i occupy
/// the contiguous block [1+(i-1)(n-1), i(n-1)] listing the base vertices
/// other than the central one in increasing index order. Same-copy
/// distances equal base distances; cross-copy distances route through the
/// central vertex.
struct WheelInstance {
  TspInstance base;
  int central = 0;
  int c = 1;
  int m = 0;          // c(n-1)+1 vertices
  CostMatrix matrix;  // completed distances, half-units

  CopyRef copy_of(int vertex) const;
  /// Inverse of copy_of; the central base vertex maps to 0 for any copy.
  int vertex_of(int copy, int base_vertex) const;
};

WheelInstance build_wheel(const TspInstance& base, int central, int c);

/// Tour of the completed graph that walks every copy's image of `base_tour`
/// in copy order, passing through the central vertex between copies. Costs
/// exactly c times the base tour.
Tour lift_tour(const WheelInstance& wheel, const Tour& base_tour);

struct Corollary1Report {
  Half opt_base = 0;
  Half opt_wheel = 0;
  bool holds = false;
};

/// Solves the base and the completed instance exactly and checks that the
/// completed optimum is exactly c times the base optimum.
Corollary1Report verify_corollary1(const TspInstance& base, int central, int c);

}  // namespace uttp
