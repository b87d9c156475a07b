#pragma once

#include "uttp/ttp.hpp"

namespace uttp {

/// Equal-size partition of the teams. Group 0 holds every team placed on
/// the completed graph, ordered along the tour the schedule is built from
/// (the two central-vertex teams sit at the first and last slot, which are
/// cyclically adjacent); all other groups hold hub teams in index order.
struct GroupLayout {
  int group_count = 0;  // 1, or even
  int group_size = 0;   // even
  std::vector<int> team_by_slot;  // group * group_size + pos -> team
  std::vector<int> group_of;      // team -> group
  std::vector<int> pos_of;        // team -> position within its group

  int teams() const { return group_count * group_size; }
  int team(int group, int pos) const {
    return team_by_slot[static_cast<size_t>(group) * group_size + pos];
  }
};

/// Slot-order layout (team == slot); handy for counting tests.
GroupLayout uniform_layout(int group_count, int group_size);

/// Layout for a built schedule: group size m+1, group count N/(m+1), group 0
/// ordered along `wheel_tour` (rotated to start at the central vertex).
GroupLayout make_group_layout(const TtpInstance& inst, const Tour& wheel_tour);

/// k-1 rounds of the circle method pairing each of the teams 0..k-1 with
/// every other exactly once. Team 0 is home on even rounds; in rotating
/// pairs the lower index is home.
std::vector<std::vector<Game>> single_round_robin(int k);

/// The single round robin followed by a copy of itself with home and away
/// swapped: every ordered pair occurs exactly once, and for k >= 4 no pair
/// meets on consecutive days.
std::vector<std::vector<Game>> mirrored_double_round_robin(int k);

/// 2(group_size-1) days running every group's mirrored double round robin
/// simultaneously.
Schedule build_phase1(const GroupLayout& layout);

/// 2(group_count-1)*group_size days of inter-group play. Stage one is a
/// single round robin over the groups treated as single teams, group 0
/// playing away against groups 1, 2, ... in that order; each group game
/// expands to group_size consecutive days on which slot k of the
/// higher-indexed group meets slots k, k+1, ... (cyclically) of the other,
/// with venues inherited from the group game. Stage two repeats stage one
/// with home and away swapped.
Schedule build_phase2(const GroupLayout& layout);

struct BuiltSchedule {
  Schedule schedule;
  GroupLayout layout;
  Tour wheel_tour;  // rotated to start at the central vertex
  int phase1_days = 0;
  int stage1_days = 0;
  int stage2_days = 0;
};

/// Phase 1 followed by phase 2 for the layout derived from `wheel_tour`.
/// Requires a Hamiltonian tour of the completed graph, m+1 even, and a team
/// count that splits into groups of m+1.
BuiltSchedule build_full_schedule(const TtpInstance& inst, const Tour& wheel_tour);

/// Travel charged phase by phase, each phase costed as a stand-alone trip
/// from home through that phase's venues and back. By the triangle
/// inequality the three charges can only overstate a team's true walk cost,
/// which is exactly the accounting behind the construction's cost bound.
struct PhaseCosts {
  std::vector<Half> phase1, stage1, stage2;  // per team
  Half phase1_total = 0, stage1_total = 0, stage2_total = 0;
};

PhaseCosts phase_costs(const TtpInstance& inst, const BuiltSchedule& built);

}  // namespace uttp
