#pragma once

#include <utility>

#include "uttp/schedule_builder.hpp"

namespace uttp {

/// Team with the least travel cost and that cost; ties go to the lowest
/// team index.
std::pair<int, Half> cheapest_team(const TtpInstance& inst, const Schedule& s);

/// Exact half-unit record of the schedule-to-tour pipeline. Every claimed
/// inequality can be rechecked from the recorded numbers alone.
struct ExtractionCertificate {
  int team = 0;
  Half min_team_cost = 0;    // M, the cheapest team's travel
  Half schedule_cost = 0;    // total travel of the whole schedule
  Half venue_tour_cost = 0;  // Hamiltonian venue tour after shortcutting
  Half wheel_tour_cost = 0;  // tour of the completed graph after dropping the hub
  Half routed_walk_cost = 0; // after routing cross-copy edges through the centre
  std::vector<Half> copy_tour_costs;  // per-copy tour costs, index = copy-1
  Half extracted_cost = 0;   // K, cost of the cheapest per-copy tour
  Half hub_weight = 0;
  int c = 0;
  int m = 0;
  int team_count = 0;
  bool team_bound_ok = false;      // M >= 2 w_u + cK - 4 (true units)
  bool schedule_bound_ok = false;  // total >= N (2 w_u + cK - 4)
};

struct ExtractionResult {
  Tour base_tour;  // Hamiltonian tour of the base instance
  ExtractionCertificate certificate;
};

/// Recovers a base-instance tour from any feasible schedule: shortcut the
/// cheapest team's venue walk to a tour of all venues, drop the hub and
/// join its neighbours, route cross-copy edges through the central vertex
/// at equal cost, shortcut the induced walk of each copy to a tour of that
/// copy, and return the cheapest one. Requires every venue to host at
/// least one team.
ExtractionResult extract_tour(const TtpInstance& inst, const Schedule& s);

}  // namespace uttp
