#pragma once

#include <string>

namespace simonsim::reports {

// JSON-in / JSON-out report builders. Every output is canonical: keys sorted
// (nlohmann object ordering), no timestamps, so identical configs produce
// byte-identical text.

// {"bb","flips","shots","seed","noise"?} ->
// {bb, period, flips, shots, seed, noise, counts, probabilities,
//  solved_period, expected_runs_estimate}
std::string run_report(const std::string& config_json);

// {"resource"?,"shots","seed","resamples"?,"noise"?} -> tomography report
std::string tomo_report(const std::string& config_json);

// {"seed"?,"trials"?} or {"monte_carlo":true,"n","queries","trials","seed"}
std::string baseline_report(const std::string& config_json);

// {"n","period"?,"flips"?,"shots","seed"} -> SP_nn run report
std::string spnn_run_report(const std::string& config_json);

std::string catalog_report();
std::string resource_counts(int n);
std::string resource_dot(const std::string& resource_name);
std::string pattern_json_for(const std::string& bb_id, int flips);

}  // namespace simonsim::reports
