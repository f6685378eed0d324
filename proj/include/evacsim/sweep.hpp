#pragma once

#include <string>
#include <vector>

#include "evacsim/scenario.hpp"

namespace evacsim {

/// Executes every (scenario, seed) pair and renders the result table as CSV.
///
/// Dialect: comma separators, LF line endings, '.' decimal point. Columns:
///   scenario,n_exits,total_width_pu,seed,evac_time_ticks,mean_over_seeds,
///   capacity_lower_bound,travel_lower_bound,van_bogaert_tmax
/// One row per run, in scenario-then-seed order, followed by one aggregate
/// row per scenario. Run rows leave the mean and t-max cells empty; aggregate
/// rows leave the seed and per-run cells empty, carry the mean over seeds
/// (4 decimals), the worst travel bound, and the reference t-max for the
/// default coefficient set. A run that hits its tick limit reports "timeout"
/// in its evacuation cell and poisons its scenario's mean cell the same way.
/// Output is a pure function of the scenario list.
struct SweepOutcome {
    std::string csv;
    bool any_timeout = false;
};

SweepOutcome run_sweep(const std::vector<ScenarioConfig>& scenarios);

inline constexpr const char* kSweepCsvHeader =
    "scenario,n_exits,total_width_pu,seed,evac_time_ticks,mean_over_seeds,"
    "capacity_lower_bound,travel_lower_bound,van_bogaert_tmax";

void write_text_file(const std::string& path, const std::string& content);

} // namespace evacsim
