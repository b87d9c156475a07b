#pragma once

#include <optional>
#include <utility>

#include "uttp/extraction.hpp"

namespace uttp {

/// Instance whose objective is the plain tour cost scaled by m(m+1), where
/// m is the completed graph's vertex count. Scaling by a constant keeps
/// the argmin unchanged.
struct BoostedTspInstance {
  TspInstance base;
  std::int64_t boost = 0;  // m(m+1)
};

struct ForwardMap {
  TtpInstance instance;
  BoostedTspInstance boosted;
  int n = 0;
  int c = 0;
  int m = 0;
  std::int64_t team_count = 0;
  Half hub_weight = 0;  // half-units; true weight is (2cn-1)/2
};

/// Builds the tournament instance for a base instance: completion with c
/// copies glued at vertex 0, hub weight (2cn-1)/2, and 10m(m+1) teams.
/// c must be even and at least 6 unless allow_small_c permits desk-scale
/// values (still subject to the schedule parity rule: c(n-1) even).
ForwardMap forward_map(const TspInstance& base, int c, bool allow_small_c = false);

/// 20 w_u m(m+1) + (10m-1) m c K + 8 m(m+1), in half-units
/// (hub_weight is already doubled; the cK and 8m(m+1) terms get doubled here).
Half lemma2_bound(int m, Half hub_weight, int c, Half base_tour_cost);

/// Same bound written against the completed-graph tour cost actually used
/// by the builder: 20 w_u m(m+1) + (10m-1) m nu + 8 m(m+1).
Half schedule_cost_bound(int m, Half hub_weight, Half wheel_tour_cost);

/// The closed-form chain certifying that an optimally seeded schedule costs
/// less than 40 m(m+1) c n: schedule cost <= bound at the base optimum
/// <= 10(2cn-1)m(m+1) + (10m-1)m(2cn) + 8m(m+1) < 40 m(m+1) c n.
struct Condition2Report {
  Half opt_schedule_cost = 0;  // cost of the schedule built from the base optimum
  Half bound_at_opt = 0;       // lemma2_bound at K = base optimum
  Half chain_left = 0;         // half-units
  Half chain_right = 0;        // half-units
  bool cost_ok = false;        // opt_schedule_cost <= bound_at_opt
  bool bound_in_chain = false; // bound_at_opt <= chain_left
  bool chain_strict = false;   // chain_left < chain_right
  bool pass = false;
};

Condition2Report verify_condition2(int n, int c, int m, Half hub_weight,
                                   Half base_opt_cost, Half opt_schedule_cost);

/// Extraction certificate check, plus "extraction can never beat the base
/// optimum" when the optimum is known.
struct Condition3Report {
  ExtractionCertificate certificate;
  std::optional<Half> base_opt_cost;
  bool at_least_opt = true;
  bool pass = false;
};

Condition3Report verify_condition3(const TtpInstance& inst, const Schedule& s,
                                   std::optional<Half> base_opt_cost);

enum class TourSource { Oracle, Provided };

struct PipelineOptions {
  TourSource source = TourSource::Oracle;
  Tour provided_wheel_tour;  // used when source == Provided
  bool allow_small_c = false;
  bool check_schedule = true;    // build + validate + evaluate
  bool check_lemma2 = true;      // cost bound and phase accounting
  bool check_lemma3 = true;      // extraction certificate
  bool check_condition2 = true;  // requires the oracle tour source
  bool check_condition3 = true;  // extraction + comparison with the optimum
};

/// One end-to-end run: forward map, tour, schedule, evaluation, extraction
/// and the requested bound checks. Every flag in the report can be
/// recomputed from the report's own numbers.
struct ReductionReport {
  int n = 0, c = 0, m = 0;
  std::int64_t team_count = 0, boost = 0;
  Half hub_weight = 0;
  bool sub_paper_c = false;  // c below the default reduction parameter
  TourSource source = TourSource::Oracle;

  std::optional<Half> base_opt_cost;  // set when the oracle ran
  bool base_opt_range_ok = true;      // n <= optimum <= 2n (true units)
  Half wheel_tour_cost = 0;           // nu

  std::optional<std::int64_t> schedule_days, schedule_games;
  bool schedule_valid = false;
  bool no_repeaters_ok = false;
  std::optional<Half> schedule_cost;

  std::optional<Half> cost_bound;  // schedule_cost_bound at nu
  bool cost_bound_ok = false;
  std::optional<Half> group0_stage1_cost, group0_stage1_expected, other_phase1_stage1_cost;
  bool phase_accounting_ok = false;

  std::optional<ExtractionCertificate> extraction;
  bool extraction_at_least_opt = false;

  std::optional<Condition2Report> condition2;

  bool all_pass() const;
  /// Stable key/value rows for the text report.
  std::vector<std::pair<std::string, std::string>> rows() const;
};

ReductionReport run_pipeline(const TspInstance& base, int c, const PipelineOptions& opts);

}  // namespace uttp
