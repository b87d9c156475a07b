#include "uttp/schedule_builder.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace uttp {

GroupLayout uniform_layout(int group_count, int group_size) {
  if (group_count < 1) throw std::invalid_argument("need at least one group");
  if (group_count != 1 && group_count % 2 != 0)
    throw std::invalid_argument("group count must be even");
  if (group_size < 2 || group_size % 2 != 0)
    throw std::invalid_argument("group size must be even and at least 2");
  GroupLayout layout;
  layout.group_count = group_count;
  layout.group_size = group_size;
  const int n = group_count * group_size;
  layout.team_by_slot.resize(n);
  layout.group_of.resize(n);
  layout.pos_of.resize(n);
  for (int t = 0; t < n; ++t) {
    layout.team_by_slot[t] = t;
    layout.group_of[t] = t / group_size;
    layout.pos_of[t] = t % group_size;
  }
  return layout;
}

GroupLayout make_group_layout(const TtpInstance& inst, const Tour& wheel_tour) {
  const int m = inst.wheel.m;
  if (tour_cost(inst.wheel.matrix, wheel_tour.order) != wheel_tour.cost)
    throw std::invalid_argument("wheel tour cost does not match its order");
  if (inst.team_count % (m + 1) != 0)
    throw std::invalid_argument("team count must split into groups of m+1");

  GroupLayout layout = uniform_layout(inst.team_count / (m + 1), m + 1);
  // Group 0 follows the tour: the first central-vertex team opens it, the
  // teams of the other vertices follow in tour order, and the second
  // central-vertex team closes it, cyclically adjacent to the first.
  int start = 0;
  while (wheel_tour.order[start] != 0) ++start;
  layout.team_by_slot[0] = 0;
  for (int k = 1; k < m; ++k)
    layout.team_by_slot[k] = wheel_tour.order[(start + k) % m] + 1;
  layout.team_by_slot[m] = 1;
  for (int pos = 0; pos <= m; ++pos) {
    layout.group_of[layout.team_by_slot[pos]] = 0;
    layout.pos_of[layout.team_by_slot[pos]] = pos;
  }
  return layout;
}

std::vector<std::vector<Game>> single_round_robin(int k) {
  if (k < 2 || k % 2 != 0) throw std::invalid_argument("round robin needs an even team count");
  // Circle method: team 0 fixed, teams 1..k-1 as rotating labels 0..k-2;
  // in round r label r meets team 0 and labels x, y pair up when
  // x + y = 2r (mod k-1).
  const int kk = k - 1;
  std::vector<std::vector<Game>> rounds(kk);
  for (int r = 0; r < kk; ++r) {
    auto& day = rounds[r];
    day.reserve(k / 2);
    if (r % 2 == 0)
      day.push_back(Game{0, r + 1});
    else
      day.push_back(Game{r + 1, 0});
    for (int x = 0; x < kk; ++x) {
      if (x == r) continue;
      const int y = ((2 * r - x) % kk + kk) % kk;
      if (y <= x || y == r) continue;
      day.push_back(Game{x + 1, y + 1});
    }
  }
  return rounds;
}

std::vector<std::vector<Game>> mirrored_double_round_robin(int k) {
  std::vector<std::vector<Game>> rounds = single_round_robin(k);
  const size_t half = rounds.size();
  rounds.resize(2 * half);
  for (size_t r = 0; r < half; ++r) {
    rounds[half + r].reserve(rounds[r].size());
    for (const Game& g : rounds[r]) rounds[half + r].push_back(Game{g.away, g.home});
  }
  return rounds;
}

Schedule build_phase1(const GroupLayout& layout) {
  const auto rounds = mirrored_double_round_robin(layout.group_size);
  Schedule s;
  s.team_count = layout.teams();
  s.days.resize(rounds.size());
  for (size_t d = 0; d < rounds.size(); ++d) {
    auto& day = s.days[d];
    day.reserve(static_cast<size_t>(s.team_count) / 2);
    for (int g = 0; g < layout.group_count; ++g)
      for (const Game& game : rounds[d])
        day.push_back(Game{layout.team(g, game.home), layout.team(g, game.away)});
  }
  return s;
}

namespace {

// Rounds of the group-level single round robin: group 0 fixed and away
// against group r+1 in round r; the remaining groups pair up by the circle
// rule with the lower group index at home.
std::vector<std::vector<Game>> group_rounds(int group_count) {
  const int kk = group_count - 1;
  std::vector<std::vector<Game>> rounds(kk);
  for (int r = 0; r < kk; ++r) {
    auto& round = rounds[r];
    round.reserve(group_count / 2);
    round.push_back(Game{r + 1, 0});
    for (int x = 0; x < kk; ++x) {
      if (x == r) continue;
      const int y = ((2 * r - x) % kk + kk) % kk;
      if (y <= x || y == r) continue;
      round.push_back(Game{x + 1, y + 1});
    }
  }
  return rounds;
}

}  // namespace

Schedule build_phase2(const GroupLayout& layout) {
  const int gc = layout.group_count;
  const int gs = layout.group_size;
  Schedule s;
  s.team_count = layout.teams();
  if (gc == 1) return s;  // single group: nothing to play across groups
  if (gc % 2 != 0) throw std::invalid_argument("group count must be even");

  const auto rounds = group_rounds(gc);
  s.days.resize(2 * rounds.size() * gs);
  size_t d = 0;
  for (int stage = 0; stage < 2; ++stage)
    for (const auto& round : rounds)
      for (int shift = 0; shift < gs; ++shift, ++d) {
        auto& day = s.days[d];
        day.reserve(static_cast<size_t>(s.team_count) / 2);
        for (const Game& gg : round) {
          const int home_group = stage == 0 ? gg.home : gg.away;
          const int hi = std::max(gg.home, gg.away);
          const int lo = std::min(gg.home, gg.away);
          for (int k = 0; k < gs; ++k) {
            const int t_hi = layout.team(hi, k);
            const int t_lo = layout.team(lo, (k + shift) % gs);
            if (hi == home_group)
              day.push_back(Game{t_hi, t_lo});
            else
              day.push_back(Game{t_lo, t_hi});
          }
        }
      }
  return s;
}

BuiltSchedule build_full_schedule(const TtpInstance& inst, const Tour& wheel_tour) {
  const int m = inst.wheel.m;
  if ((m + 1) % 2 != 0)
    throw std::invalid_argument("group size m+1 must be even to run bye-free round robins");
  GroupLayout layout = make_group_layout(inst, wheel_tour);

  BuiltSchedule built;
  built.layout = layout;
  // Store the tour rotated to the central vertex so outputs are canonical.
  int start = 0;
  while (wheel_tour.order[start] != 0) ++start;
  std::vector<int> rotated(m);
  for (int i = 0; i < m; ++i) rotated[i] = wheel_tour.order[(start + i) % m];
  built.wheel_tour = Tour{std::move(rotated), wheel_tour.cost};

  built.schedule = build_phase1(layout);
  Schedule phase2 = build_phase2(layout);
  built.phase1_days = static_cast<int>(built.schedule.days.size());
  built.stage1_days = static_cast<int>(phase2.days.size()) / 2;
  built.stage2_days = built.stage1_days;
  built.schedule.days.reserve(built.schedule.days.size() + phase2.days.size());
  for (auto& day : phase2.days) built.schedule.days.push_back(std::move(day));
  return built;
}

PhaseCosts phase_costs(const TtpInstance& inst, const BuiltSchedule& built) {
  const int n = inst.team_count;
  const Schedule& s = built.schedule;
  const CostMatrix venues = inst.venue_matrix();
  PhaseCosts out;
  out.phase1.assign(n, 0);
  out.stage1.assign(n, 0);
  out.stage2.assign(n, 0);

  const size_t cut1 = static_cast<size_t>(built.phase1_days);
  const size_t cut2 = cut1 + static_cast<size_t>(built.stage1_days);
  std::vector<int> at(n);
  std::vector<Half>* cost = nullptr;
  auto open_phase = [&](std::vector<Half>& phase) {
    for (int t = 0; t < n; ++t) at[t] = inst.venue[t];
    cost = &phase;
  };
  auto close_phase = [&] {
    for (int t = 0; t < n; ++t) (*cost)[t] += venues.at(at[t], inst.venue[t]);
  };
  for (size_t d = 0; d < s.days.size(); ++d) {
    if (d == 0) open_phase(out.phase1);
    if (d == cut1) {
      close_phase();
      open_phase(out.stage1);
    }
    if (d == cut2) {
      close_phase();
      open_phase(out.stage2);
    }
    for (const Game& g : s.days[d]) {
      const int v = inst.venue[g.home];
      (*cost)[g.home] += venues.at(at[g.home], v);
      at[g.home] = v;
      (*cost)[g.away] += venues.at(at[g.away], v);
      at[g.away] = v;
    }
  }
  close_phase();
  for (int t = 0; t < n; ++t) {
    out.phase1_total += out.phase1[t];
    out.stage1_total += out.stage1[t];
    out.stage2_total += out.stage2[t];
  }
  return out;
}

}  // namespace uttp
