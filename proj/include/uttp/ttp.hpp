#pragma once

#include <string>

#include "uttp/wheel.hpp"

namespace uttp {

/// Tournament instance over the completed graph plus one hub venue that
/// sits at distance hub_weight from every other venue. Teams 0 and 1 share
/// venue 0 (the central vertex), team j for 2 <= j <= m sits alone at
/// vertex j-1, and all remaining teams share the hub.
struct TtpInstance {
  WheelInstance wheel;
  Half hub_weight = 0;  // half-units
  int team_count = 0;
  int window_lo = 1;       // L
  int window_hi = 0;       // U, team_count - 1
  std::vector<int> venue;  // team -> venue id; the hub venue id is wheel.m

  int hub() const { return wheel.m; }
  int venue_count() const { return wheel.m + 1; }
  Half venue_dist(int a, int b) const;
  CostMatrix venue_matrix() const;
};

/// Places the teams as described above. team_count must be even and at
/// least m+1; the hub weight must keep the venue matrix metric.
TtpInstance build_ttp_instance(WheelInstance wheel, Half hub_weight, int team_count);

struct Game {
  int home = 0;
  int away = 0;
};

struct Schedule {
  int team_count = 0;
  std::vector<std::vector<Game>> days;
};

struct RuleCheck {
  bool pass = true;
  std::string detail;  // empty when the rule passes
};

struct ValidationReport {
  RuleCheck day_count;            // 2(N-1) days
  RuleCheck games_per_day;        // N/2 well-formed games per day
  RuleCheck daily_participation;  // each team exactly once per day
  RuleCheck pairs_once;           // each ordered (home, away) pair exactly once
  RuleCheck windows;              // home stands and road trips within [L, U]
  RuleCheck no_repeaters;         // no pair meets on consecutive days
  bool no_repeaters_checked = false;

  bool all_pass() const;
};

/// Checks every tournament rule and reports pass/fail per rule. Malformed
/// schedules come back as rule failures, never as exceptions.
ValidationReport validate_schedule(const TtpInstance& inst, const Schedule& s,
                                   bool check_no_repeaters);

struct CostBreakdown {
  std::vector<Half> per_team;
  Half total = 0;
};

/// Total travel: each team starts at home, follows its games day by day
/// (home games at its own venue, away games at the opponent's) and returns
/// home after the last day. Consecutive days at one venue cost nothing.
/// Every day must be well formed (N/2 games, each team exactly once); the
/// round-robin completeness rules are validate_schedule's business, so
/// single phases of a schedule can be evaluated too.
CostBreakdown evaluate_cost(const TtpInstance& inst, const Schedule& s);

/// The venue walk behind one team's evaluate_cost entry: home venue, then
/// the venue of each game in day order, then home, with consecutive
/// repeats collapsed. Costs exactly the team's per_team entry.
ClosedWalk team_walk(const TtpInstance& inst, const Schedule& s, int team);

}  // namespace uttp
