#include "uttp/wheel.hpp"

#include <stdexcept>
#include <string>

namespace uttp {

CopyRef WheelInstance::copy_of(int vertex) const {
  if (vertex < 0 || vertex >= m) throw std::invalid_argument("vertex out of range");
  if (vertex == 0) return CopyRef{true, 0, central};
  const int n1 = base.n() - 1;
  const int copy = (vertex - 1) / n1 + 1;
  const int offset = (vertex - 1) % n1;
  return CopyRef{false, copy, offset < central ? offset : offset + 1};
}

int WheelInstance::vertex_of(int copy, int base_vertex) const {
  if (base_vertex < 0 || base_vertex >= base.n())
    throw std::invalid_argument("base vertex out of range");
  if (base_vertex == central) return 0;
  if (copy < 1 || copy > c) throw std::invalid_argument("copy index out of range");
  const int offset = base_vertex < central ? base_vertex : base_vertex - 1;
  return 1 + (copy - 1) * (base.n() - 1) + offset;
}

WheelInstance build_wheel(const TspInstance& base, int central, int c) {
  base.matrix.require_well_formed();
  const int n = base.n();
  if (central < 0 || central >= n) throw std::invalid_argument("central vertex out of range");
  if (c < 1) throw std::invalid_argument("copy count must be at least 1");

  WheelInstance w;
  w.base = base;
  w.central = central;
  w.c = c;
  w.m = c * (n - 1) + 1;
  w.matrix = CostMatrix::zeros(w.m);
  for (int x = 1; x < w.m; ++x) {
    const CopyRef rx = w.copy_of(x);
    w.matrix.set(0, x, base.matrix.at(central, rx.base_vertex));
    for (int y = 1; y < x; ++y) {
      const CopyRef ry = w.copy_of(y);
      const Half d = rx.copy == ry.copy
                         ? base.matrix.at(rx.base_vertex, ry.base_vertex)
                         : base.matrix.at(rx.base_vertex, central) +
                               base.matrix.at(central, ry.base_vertex);
      w.matrix.set(x, y, d);
    }
  }

  for (int x = 0; x < w.m; ++x)
    for (int y = 0; y < x; ++y)
      if (w.matrix.at(x, y) < 2 || w.matrix.at(x, y) > 8)
        throw std::logic_error("completed true costs must lie in {1,2,3,4}");
  if (!validate_metric(w.matrix)) throw std::logic_error("completed matrix failed the metric check");
  return w;
}

Tour lift_tour(const WheelInstance& wheel, const Tour& base_tour) {
  const Half base_cost = tour_cost(wheel.base.matrix, base_tour.order);
  if (base_cost != base_tour.cost)
    throw std::invalid_argument("base tour cost does not match its order");
  const int n = wheel.base.n();
  // Rotate the base tour to start at the central vertex, then visit the
  // copies in order; cross-copy steps cost exactly the two tour edges they
  // replace, so the lifted tour costs c times the base tour.
  int start = 0;
  while (base_tour.order[start] != wheel.central) ++start;
  std::vector<int> order{0};
  order.reserve(wheel.m);
  for (int copy = 1; copy <= wheel.c; ++copy)
    for (int i = 1; i < n; ++i)
      order.push_back(wheel.vertex_of(copy, base_tour.order[(start + i) % n]));
  Tour lifted = make_tour(wheel.matrix, std::move(order));
  if (lifted.cost != static_cast<Half>(wheel.c) * base_cost)
    throw std::logic_error("lifted tour cost is not c times the base cost");
  return lifted;
}

Corollary1Report verify_corollary1(const TspInstance& base, int central, int c) {
  const WheelInstance w = build_wheel(base, central, c);
  const Tour opt_base = solve_tsp_exact(base.matrix);
  const Tour opt_wheel = solve_tsp_exact(w.matrix);
  return Corollary1Report{opt_base.cost, opt_wheel.cost,
                          opt_wheel.cost == static_cast<Half>(c) * opt_base.cost};
}

}  // namespace uttp
