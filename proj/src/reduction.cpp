#include "uttp/reduction.hpp"

#include <stdexcept>
#include <string>

namespace uttp {

ForwardMap forward_map(const TspInstance& base, int c, bool allow_small_c) {
  const int n = base.n();
  if (c < 1) throw std::invalid_argument("copy count must be positive");
  if (!allow_small_c && (c < 6 || c % 2 != 0))
    throw std::invalid_argument(
        "the reduction uses even c >= 6; pass allow_small_c for desk-scale values");
  if ((static_cast<std::int64_t>(c) * (n - 1)) % 2 != 0)
    throw std::invalid_argument("c(n-1) must be even so that groups of m+1 have no byes");

  ForwardMap fm;
  fm.n = n;
  fm.c = c;
  WheelInstance wheel = build_wheel(base, 0, c);
  fm.m = wheel.m;
  fm.hub_weight = 2LL * c * n - 1;  // (2cn-1)/2 in true units
  fm.team_count = 10LL * fm.m * (fm.m + 1);
  fm.boosted = BoostedTspInstance{base, static_cast<std::int64_t>(fm.m) * (fm.m + 1)};
  fm.instance =
      build_ttp_instance(std::move(wheel), fm.hub_weight, static_cast<int>(fm.team_count));
  return fm;
}

Half schedule_cost_bound(int m, Half hub_weight, Half wheel_tour_cost) {
  const Half mm = static_cast<Half>(m);
  return 20 * hub_weight * mm * (mm + 1) + (10 * mm - 1) * mm * wheel_tour_cost +
         16 * mm * (mm + 1);
}

Half lemma2_bound(int m, Half hub_weight, int c, Half base_tour_cost) {
  return schedule_cost_bound(m, hub_weight, static_cast<Half>(c) * base_tour_cost);
}

Condition2Report verify_condition2(int n, int c, int m, Half hub_weight,
                                   Half base_opt_cost, Half opt_schedule_cost) {
  Condition2Report r;
  r.opt_schedule_cost = opt_schedule_cost;
  r.bound_at_opt = lemma2_bound(m, hub_weight, c, base_opt_cost);
  const Half mm = m, cc = c, nn = n;
  // 10(2cn-1)m(m+1) + (10m-1)m(2cn) + 8m(m+1) < 40 m(m+1) c n, doubled into
  // half-units.
  r.chain_left = 2 * (10 * (2 * cc * nn - 1) * mm * (mm + 1) +
                      (10 * mm - 1) * mm * (2 * cc * nn) + 8 * mm * (mm + 1));
  r.chain_right = 80 * mm * (mm + 1) * cc * nn;
  r.cost_ok = opt_schedule_cost <= r.bound_at_opt;
  r.bound_in_chain = r.bound_at_opt <= r.chain_left;
  r.chain_strict = r.chain_left < r.chain_right;
  r.pass = r.cost_ok && r.bound_in_chain && r.chain_strict;
  return r;
}

Condition3Report verify_condition3(const TtpInstance& inst, const Schedule& s,
                                   std::optional<Half> base_opt_cost) {
  Condition3Report r;
  ExtractionResult ex = extract_tour(inst, s);
  r.certificate = std::move(ex.certificate);
  r.base_opt_cost = base_opt_cost;
  if (base_opt_cost) r.at_least_opt = r.certificate.extracted_cost >= *base_opt_cost;
  r.pass = r.certificate.team_bound_ok && r.certificate.schedule_bound_ok && r.at_least_opt;
  return r;
}

bool ReductionReport::all_pass() const {
  if (!base_opt_range_ok) return false;
  if (schedule_days && !(schedule_valid && no_repeaters_ok)) return false;
  if (cost_bound && !cost_bound_ok) return false;
  if (group0_stage1_cost && !phase_accounting_ok) return false;
  if (extraction &&
      !(extraction->team_bound_ok && extraction->schedule_bound_ok && extraction_at_least_opt))
    return false;
  if (condition2 && !condition2->pass) return false;
  return true;
}

ReductionReport run_pipeline(const TspInstance& base, int c, const PipelineOptions& opts) {
  ReductionReport rep;
  ForwardMap fm = forward_map(base, c, opts.allow_small_c);
  rep.n = fm.n;
  rep.c = fm.c;
  rep.m = fm.m;
  rep.team_count = fm.team_count;
  rep.boost = fm.boosted.boost;
  rep.hub_weight = fm.hub_weight;
  rep.sub_paper_c = c < 6;
  rep.source = opts.source;

  Tour wheel_tour;
  if (opts.source == TourSource::Oracle) {
    const Tour opt = solve_tsp_exact(base.matrix);
    rep.base_opt_cost = opt.cost;
    rep.base_opt_range_ok = opt.cost >= 2LL * fm.n && opt.cost <= 4LL * fm.n;
    wheel_tour = lift_tour(fm.instance.wheel, opt);
  } else {
    wheel_tour = make_tour(fm.instance.wheel.matrix, opts.provided_wheel_tour.order);
    // The optimum is still worth knowing when the oracle can afford it.
    if (base.n() <= oracle_size_limit()) {
      const Tour opt = solve_tsp_exact(base.matrix);
      rep.base_opt_cost = opt.cost;
      rep.base_opt_range_ok = opt.cost >= 2LL * fm.n && opt.cost <= 4LL * fm.n;
    }
  }
  rep.wheel_tour_cost = wheel_tour.cost;

  if (opts.check_condition2 && opts.source != TourSource::Oracle)
    throw std::invalid_argument("condition-2 verification needs the oracle tour source");

  if (!opts.check_schedule) return rep;

  const BuiltSchedule built = build_full_schedule(fm.instance, wheel_tour);
  rep.schedule_days = static_cast<std::int64_t>(built.schedule.days.size());
  rep.schedule_games = *rep.schedule_days * (fm.team_count / 2);
  const ValidationReport validation = validate_schedule(fm.instance, built.schedule, true);
  rep.schedule_valid = validation.day_count.pass && validation.games_per_day.pass &&
                       validation.daily_participation.pass && validation.pairs_once.pass &&
                       validation.windows.pass;
  rep.no_repeaters_ok = validation.no_repeaters.pass;

  const CostBreakdown costs = evaluate_cost(fm.instance, built.schedule);
  rep.schedule_cost = costs.total;

  if (opts.check_lemma2) {
    rep.cost_bound = schedule_cost_bound(fm.m, fm.hub_weight, wheel_tour.cost);
    rep.cost_bound_ok = costs.total <= *rep.cost_bound;

    const PhaseCosts phases = phase_costs(fm.instance, built);
    Half group0_stage1 = 0, other_early = 0;
    for (int t = 0; t < fm.instance.team_count; ++t) {
      if (built.layout.group_of[t] == 0)
        group0_stage1 += phases.stage1[t];
      else
        other_early += phases.phase1[t] + phases.stage1[t];
    }
    rep.group0_stage1_cost = group0_stage1;
    rep.group0_stage1_expected = 2LL * (fm.m + 1) * fm.hub_weight;
    rep.other_phase1_stage1_cost = other_early;
    rep.phase_accounting_ok = group0_stage1 == *rep.group0_stage1_expected && other_early == 0;
  }

  if (opts.check_lemma3 || opts.check_condition3) {
    const Condition3Report c3 = verify_condition3(
        fm.instance, built.schedule,
        opts.check_condition3 ? rep.base_opt_cost : std::optional<Half>{});
    rep.extraction = c3.certificate;
    rep.extraction_at_least_opt = c3.at_least_opt;
  }

  if (opts.check_condition2)
    rep.condition2 =
        verify_condition2(fm.n, fm.c, fm.m, fm.hub_weight, *rep.base_opt_cost, costs.total);

  return rep;
}

namespace {

std::string pass_fail(bool b) { return b ? "pass" : "fail"; }

}  // namespace

std::vector<std::pair<std::string, std::string>> ReductionReport::rows() const {
  std::vector<std::pair<std::string, std::string>> rows;
  auto add = [&rows](const std::string& k, const std::string& v) { rows.emplace_back(k, v); };
  auto num = [](auto v) { return std::to_string(v); };
  add("n", num(n));
  add("c", num(c));
  add("m", num(m));
  add("teams", num(team_count));
  add("boost", num(boost));
  add("hub_weight_half", num(hub_weight));
  add("hub_weight", format_true_units(hub_weight));
  add("sub_paper_c", sub_paper_c ? "true" : "false");
  add("tour_source", source == TourSource::Oracle ? "oracle" : "provided");
  if (base_opt_cost) {
    add("base_opt_half", num(*base_opt_cost));
    add("base_opt", format_true_units(*base_opt_cost));
    add("flag.base_opt_range", pass_fail(base_opt_range_ok));
  }
  add("wheel_tour_cost_half", num(wheel_tour_cost));
  if (schedule_days) {
    add("days", num(*schedule_days));
    add("games", num(*schedule_games));
    add("flag.schedule_valid", pass_fail(schedule_valid));
    add("flag.no_repeaters", pass_fail(no_repeaters_ok));
  }
  if (schedule_cost) {
    add("schedule_cost_half", num(*schedule_cost));
    add("schedule_cost", format_true_units(*schedule_cost));
  }
  if (cost_bound) {
    add("cost_bound_half", num(*cost_bound));
    add("flag.cost_bound", pass_fail(cost_bound_ok));
  }
  if (group0_stage1_cost) {
    add("group0_stage1_half", num(*group0_stage1_cost));
    add("group0_stage1_expected_half", num(*group0_stage1_expected));
    add("other_phase1_stage1_half", num(*other_phase1_stage1_cost));
    add("flag.phase_accounting", pass_fail(phase_accounting_ok));
  }
  if (extraction) {
    add("min_team_cost_half", num(extraction->min_team_cost));
    add("extracted_cost_half", num(extraction->extracted_cost));
    add("certificate_floor_half",
        num(2 * extraction->hub_weight +
            static_cast<Half>(extraction->c) * extraction->extracted_cost - 8));
    add("flag.certificate_team", pass_fail(extraction->team_bound_ok));
    add("flag.certificate_schedule", pass_fail(extraction->schedule_bound_ok));
    if (base_opt_cost) add("flag.extraction_at_least_opt", pass_fail(extraction_at_least_opt));
  }
  if (condition2) {
    add("cond2_bound_at_opt_half", num(condition2->bound_at_opt));
    add("cond2_chain_left_half", num(condition2->chain_left));
    add("cond2_chain_right_half", num(condition2->chain_right));
    add("flag.cond2_cost", pass_fail(condition2->cost_ok));
    add("flag.cond2_bound_in_chain", pass_fail(condition2->bound_in_chain));
    add("flag.cond2_chain_strict", pass_fail(condition2->chain_strict));
  }
  add("flag.all", pass_fail(all_pass()));
  return rows;
}

}  // namespace uttp
