#include "uttp/ttp.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>

namespace uttp {

Half TtpInstance::venue_dist(int a, int b) const {
  if (a == b) return 0;
  if (a == hub() || b == hub()) return hub_weight;
  return wheel.matrix.at(a, b);
}

CostMatrix TtpInstance::venue_matrix() const {
  CostMatrix m = CostMatrix::zeros(venue_count());
  for (int a = 0; a < venue_count(); ++a)
    for (int b = 0; b < a; ++b) m.set(a, b, venue_dist(a, b));
  return m;
}

TtpInstance build_ttp_instance(WheelInstance wheel, Half hub_weight, int team_count) {
  if (team_count % 2 != 0) throw std::invalid_argument("team count must be even");
  if (team_count < wheel.m + 1)
    throw std::invalid_argument("need at least m+1 teams to cover the venues");
  if (hub_weight < 0) throw std::invalid_argument("hub weight must be nonnegative");

  TtpInstance inst;
  inst.wheel = std::move(wheel);
  inst.hub_weight = hub_weight;
  inst.team_count = team_count;
  inst.window_lo = 1;
  inst.window_hi = team_count - 1;
  inst.venue.resize(team_count);
  inst.venue[0] = 0;
  inst.venue[1] = 0;
  for (int t = 2; t <= inst.wheel.m; ++t) inst.venue[t] = t - 1;
  for (int t = inst.wheel.m + 1; t < team_count; ++t) inst.venue[t] = inst.hub();

  if (!validate_metric(inst.venue_matrix()))
    throw std::invalid_argument("hub weight too small: venue distances are not metric");
  return inst;
}

bool ValidationReport::all_pass() const {
  return day_count.pass && games_per_day.pass && daily_participation.pass &&
         pairs_once.pass && windows.pass && (!no_repeaters_checked || no_repeaters.pass);
}

namespace {

RuleCheck fail(std::string detail) { return RuleCheck{false, std::move(detail)}; }

bool game_in_range(const Game& g, int n) {
  return g.home >= 0 && g.home < n && g.away >= 0 && g.away < n && g.home != g.away;
}

}  // namespace

ValidationReport validate_schedule(const TtpInstance& inst, const Schedule& s,
                                   bool check_no_repeaters) {
  ValidationReport report;
  report.no_repeaters_checked = check_no_repeaters;
  const int n = inst.team_count;

  if (s.team_count != n) {
    report.day_count = fail("schedule team count " + std::to_string(s.team_count) +
                            " does not match the instance's " + std::to_string(n));
    return report;
  }

  const std::int64_t expected_days = 2LL * (n - 1);
  if (static_cast<std::int64_t>(s.days.size()) != expected_days)
    report.day_count = fail("expected " + std::to_string(expected_days) + " days, got " +
                            std::to_string(s.days.size()));

  for (size_t d = 0; d < s.days.size() && report.games_per_day.pass; ++d) {
    if (static_cast<int>(s.days[d].size()) != n / 2)
      report.games_per_day = fail("day " + std::to_string(d) + " has " +
                                  std::to_string(s.days[d].size()) + " games, expected " +
                                  std::to_string(n / 2));
    else
      for (const Game& g : s.days[d])
        if (!game_in_range(g, n)) {
          report.games_per_day =
              fail("day " + std::to_string(d) + " has a malformed game " +
                   std::to_string(g.home) + ":" + std::to_string(g.away));
          break;
        }
  }

  // Each team exactly once per day. Day-stamps avoid clearing per day.
  {
    std::vector<std::int64_t> stamp(n, -1);
    for (size_t d = 0; d < s.days.size() && report.daily_participation.pass; ++d) {
      int covered = 0;
      for (const Game& g : s.days[d]) {
        if (!game_in_range(g, n)) continue;
        for (int t : {g.home, g.away}) {
          if (stamp[t] == static_cast<std::int64_t>(d)) {
            report.daily_participation =
                fail("team " + std::to_string(t) + " plays twice on day " + std::to_string(d));
            break;
          }
          stamp[t] = static_cast<std::int64_t>(d);
          ++covered;
        }
        if (!report.daily_participation.pass) break;
      }
      if (report.daily_participation.pass && covered != n)
        report.daily_participation =
            fail("day " + std::to_string(d) + " covers " + std::to_string(covered) +
                 " teams, expected " + std::to_string(n));
    }
  }

  // Each ordered (home, away) pair exactly once.
  {
    std::vector<std::uint8_t> seen(static_cast<size_t>(n) * n, 0);
    bool complete_scan = true;
    for (size_t d = 0; d < s.days.size() && report.pairs_once.pass; ++d)
      for (const Game& g : s.days[d]) {
        if (!game_in_range(g, n)) {
          complete_scan = false;
          continue;
        }
        std::uint8_t& slot = seen[static_cast<size_t>(g.home) * n + g.away];
        if (slot) {
          report.pairs_once = fail("pair " + std::to_string(g.home) + ":" +
                                   std::to_string(g.away) + " occurs more than once");
          break;
        }
        slot = 1;
      }
    if (report.pairs_once.pass && complete_scan)
      for (int h = 0; h < n && report.pairs_once.pass; ++h)
        for (int a = 0; a < n; ++a)
          if (h != a && !seen[static_cast<size_t>(h) * n + a]) {
            report.pairs_once = fail("pair " + std::to_string(h) + ":" + std::to_string(a) +
                                     " never occurs");
            break;
          }
  }

  // Maximal home stands and road trips must fit the [L, U] window. Lengths
  // count games, not distance.
  {
    std::vector<std::int32_t> run_len(n, 0);
    std::vector<std::int8_t> run_home(n, -1);
    auto close_run = [&](int t) -> bool {
      return run_len[t] >= inst.window_lo && run_len[t] <= inst.window_hi;
    };
    for (size_t d = 0; d < s.days.size() && report.windows.pass; ++d)
      for (const Game& g : s.days[d]) {
        if (!game_in_range(g, n)) continue;
        const int pair[2] = {g.home, g.away};
        for (int side = 0; side < 2; ++side) {
          const int t = pair[side];
          const std::int8_t at_home = side == 0 ? 1 : 0;
          if (run_home[t] == at_home) {
            ++run_len[t];
          } else {
            if (run_home[t] != -1 && !close_run(t)) {
              report.windows = fail("team " + std::to_string(t) + " has a " +
                                    (run_home[t] ? "home stand" : "road trip") + " of length " +
                                    std::to_string(run_len[t]));
              break;
            }
            run_home[t] = at_home;
            run_len[t] = 1;
          }
        }
        if (!report.windows.pass) break;
      }
    for (int t = 0; t < n && report.windows.pass; ++t)
      if (run_home[t] != -1 && !close_run(t))
        report.windows = fail("team " + std::to_string(t) + " ends with a " +
                              (run_home[t] ? "home stand" : "road trip") + " of length " +
                              std::to_string(run_len[t]));
  }

  if (check_no_repeaters) {
    // last_day[pair] stores 1 + the day of the last meeting; zero means never.
    std::vector<std::int32_t> last_day(static_cast<size_t>(n) * n, 0);
    for (size_t d = 0; d < s.days.size() && report.no_repeaters.pass; ++d)
      for (const Game& g : s.days[d]) {
        if (!game_in_range(g, n)) continue;
        const int lo = g.home < g.away ? g.home : g.away;
        const int hi = g.home < g.away ? g.away : g.home;
        std::int32_t& slot = last_day[static_cast<size_t>(lo) * n + hi];
        if (slot == static_cast<std::int32_t>(d)) {
          report.no_repeaters = fail("teams " + std::to_string(lo) + " and " +
                                     std::to_string(hi) + " meet on days " +
                                     std::to_string(d - 1) + " and " + std::to_string(d));
          break;
        }
        slot = static_cast<std::int32_t>(d) + 1;
      }
  }

  return report;
}

namespace {

// Throws unless every day fields N/2 well-formed games covering each team
// exactly once.
void require_days_well_formed(const TtpInstance& inst, const Schedule& s) {
  const int n = inst.team_count;
  if (s.team_count != n) throw std::invalid_argument("schedule team count mismatch");
  std::vector<std::int64_t> stamp(n, -1);
  for (size_t d = 0; d < s.days.size(); ++d) {
    if (static_cast<int>(s.days[d].size()) != n / 2)
      throw std::invalid_argument("day " + std::to_string(d) + " does not have N/2 games");
    for (const Game& g : s.days[d]) {
      if (!game_in_range(g, n))
        throw std::invalid_argument("day " + std::to_string(d) + " has a malformed game");
      for (int t : {g.home, g.away}) {
        if (stamp[t] == static_cast<std::int64_t>(d))
          throw std::invalid_argument("team " + std::to_string(t) + " plays twice on day " +
                                      std::to_string(d));
        stamp[t] = static_cast<std::int64_t>(d);
      }
    }
  }
}

}  // namespace

CostBreakdown evaluate_cost(const TtpInstance& inst, const Schedule& s) {
  require_days_well_formed(inst, s);
  const int n = inst.team_count;
  const CostMatrix venues = inst.venue_matrix();
  std::vector<int> at(n);
  for (int t = 0; t < n; ++t) at[t] = inst.venue[t];
  CostBreakdown out;
  out.per_team.assign(n, 0);
  for (const auto& day : s.days)
    for (const Game& g : day) {
      const int v = inst.venue[g.home];
      out.per_team[g.home] += venues.at(at[g.home], v);
      at[g.home] = v;
      out.per_team[g.away] += venues.at(at[g.away], v);
      at[g.away] = v;
    }
  for (int t = 0; t < n; ++t) {
    out.per_team[t] += venues.at(at[t], inst.venue[t]);
    out.total += out.per_team[t];
  }
  return out;
}

ClosedWalk team_walk(const TtpInstance& inst, const Schedule& s, int team) {
  if (team < 0 || team >= inst.team_count) throw std::invalid_argument("team out of range");
  require_days_well_formed(inst, s);
  std::vector<int> seq{inst.venue[team]};
  for (const auto& day : s.days)
    for (const Game& g : day) {
      if (g.home != team && g.away != team) continue;
      const int v = inst.venue[g.home];
      if (v != seq.back()) seq.push_back(v);
    }
  if (seq.back() != inst.venue[team]) seq.push_back(inst.venue[team]);
  Half cost = 0;
  for (size_t i = 0; i + 1 < seq.size(); ++i) cost += inst.venue_dist(seq[i], seq[i + 1]);
  return ClosedWalk{std::move(seq), cost};
}

}  // namespace uttp
