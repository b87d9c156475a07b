#include "uttp/extraction.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace uttp {

std::pair<int, Half> cheapest_team(const TtpInstance& inst, const Schedule& s) {
  const CostBreakdown costs = evaluate_cost(inst, s);
  int best = 0;
  for (int t = 1; t < inst.team_count; ++t)
    if (costs.per_team[t] < costs.per_team[best]) best = t;
  return {best, costs.per_team[best]};
}

namespace {

void check(bool ok, const char* what) {
  if (!ok) throw std::logic_error(std::string("extraction invariant violated: ") + what);
}

}  // namespace

ExtractionResult extract_tour(const TtpInstance& inst, const Schedule& s) {
  const WheelInstance& wheel = inst.wheel;
  const CostBreakdown costs = evaluate_cost(inst, s);

  ExtractionCertificate cert;
  cert.schedule_cost = costs.total;
  cert.hub_weight = inst.hub_weight;
  cert.c = wheel.c;
  cert.m = wheel.m;
  cert.team_count = inst.team_count;
  cert.team = 0;
  for (int t = 1; t < inst.team_count; ++t)
    if (costs.per_team[t] < costs.per_team[cert.team]) cert.team = t;
  cert.min_team_cost = costs.per_team[cert.team];

  // The cheapest team's venue walk must span every venue; in a full double
  // round robin over a fully occupied instance it always does.
  const ClosedWalk walk = team_walk(inst, s, cert.team);
  const CostMatrix venues = inst.venue_matrix();
  {
    std::vector<char> seen(venues.size, 0);
    int distinct = 0;
    for (int v : walk.sequence)
      if (!seen[v]) {
        seen[v] = 1;
        ++distinct;
      }
    if (distinct != venues.size)
      throw std::invalid_argument("cheapest team's walk misses a venue; "
                                  "extraction needs every venue occupied");
  }
  const Tour venue_tour = shortcut_walk(venues, walk);
  cert.venue_tour_cost = venue_tour.cost;
  check(venue_tour.cost <= cert.min_team_cost, "shortcutting increased the walk cost");

  // Drop the hub and join its neighbours; the joining edge costs at most 4
  // true units, so the tour costs at most M - 2 w_u + 4.
  std::vector<int> wheel_order;
  wheel_order.reserve(wheel.m);
  for (int v : venue_tour.order)
    if (v != inst.hub()) wheel_order.push_back(v);
  const Tour wheel_tour = make_tour(wheel.matrix, std::move(wheel_order));
  cert.wheel_tour_cost = wheel_tour.cost;
  check(wheel_tour.cost <= cert.min_team_cost - 2 * cert.hub_weight + 8,
        "hub removal exceeded the M - 2w_u + 4 budget");

  // Route cross-copy edges through the central vertex. Equal cost by the
  // completion's construction; edges touching the centre never cross.
  std::vector<int> routed;
  routed.reserve(2 * static_cast<size_t>(wheel.m));
  const int mm = wheel.m;
  for (int i = 0; i < mm; ++i) {
    const int x = wheel_tour.order[i];
    const int y = wheel_tour.order[(i + 1) % mm];
    routed.push_back(x);
    if (x != 0 && y != 0 && wheel.copy_of(x).copy != wheel.copy_of(y).copy)
      routed.push_back(0);
  }
  routed.push_back(wheel_tour.order[0]);
  // Merge consecutive duplicates (cost-neutral: self-distance is zero).
  routed.erase(std::unique(routed.begin(), routed.end()), routed.end());
  Half routed_cost = walk_cost(wheel.matrix, routed);
  cert.routed_walk_cost = routed_cost;
  check(routed_cost == wheel_tour.cost, "routing through the centre changed the cost");

  // Split the routed walk at the centre; each segment lives in one copy.
  // Per copy, the segments glued at the centre form a closed walk through
  // all of that copy's vertices, which shortcuts to a tour of the base.
  int vpos = 0;
  while (routed[vpos] != 0) ++vpos;
  std::vector<std::vector<int>> copy_walks(wheel.c);
  const int base_n = wheel.base.n();
  for (auto& w : copy_walks) w.push_back(wheel.central);
  const size_t len = routed.size() - 1;  // closing duplicate dropped
  size_t i = static_cast<size_t>(vpos);
  size_t consumed = 0;
  while (consumed < len) {
    // segment start: position after a centre visit
    std::vector<int> segment;
    size_t j = (i + 1) % len;
    while (routed[j] != 0) {
      segment.push_back(routed[j]);
      j = (j + 1) % len;
    }
    consumed += segment.size() + 1;
    i = j;
    if (segment.empty()) continue;
    const int copy = wheel.copy_of(segment.front()).copy;
    auto& w = copy_walks[copy - 1];
    for (int v : segment) {
      const CopyRef ref = wheel.copy_of(v);
      check(ref.copy == copy, "a routed segment spans two copies");
      w.push_back(ref.base_vertex);
    }
    w.push_back(wheel.central);
  }

  Half copy_walk_total = 0;
  cert.copy_tour_costs.assign(wheel.c, 0);
  Tour best_tour;
  for (int copy = 0; copy < wheel.c; ++copy) {
    copy_walk_total += walk_cost(wheel.base.matrix, copy_walks[copy]);
    const Tour t = shortcut_walk(wheel.base.matrix, make_walk(wheel.base.matrix, copy_walks[copy]));
    cert.copy_tour_costs[copy] = t.cost;
    if (copy == 0 || t.cost < best_tour.cost) best_tour = t;
  }
  check(copy_walk_total == routed_cost, "copy walks do not add up to the routed walk");
  cert.extracted_cost = best_tour.cost;
  check(static_cast<Half>(wheel.c) * cert.extracted_cost <= cert.routed_walk_cost,
        "c copies of the cheapest tour exceed the routed walk");

  // M >= 2 w_u + cK - 4 and total >= N (2 w_u + cK - 4), in half-units.
  const Half per_team_floor = 2 * cert.hub_weight +
                              static_cast<Half>(cert.c) * cert.extracted_cost - 8;
  cert.team_bound_ok = cert.min_team_cost >= per_team_floor;
  cert.schedule_bound_ok =
      cert.schedule_cost >= static_cast<Half>(cert.team_count) * per_team_floor;
  return ExtractionResult{std::move(best_tour), std::move(cert)};
}

}  // namespace uttp
