#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "simonsim/graph_state.hpp"
#include "simonsim/rng.hpp"
#include "simonsim/statevector.hpp"

namespace simonsim {

// Local measurement setting: one of X/Y/Z per qubit.
using MeasurementSetting = std::string;

// The 17 settings covering every stabilizer term of the five-qubit linear
// cluster.
const std::vector<MeasurementSetting>& linear5_settings();

// A term is measurable under a setting iff every non-identity letter matches.
bool setting_covers(const PauliString& term, const MeasurementSetting& setting);

struct SettingsCover {
    std::map<std::string, std::string> assignment;  // term -> setting
    std::vector<std::string> uncovered;
    bool complete() const { return uncovered.empty(); }
};

SettingsCover settings_cover(const std::vector<PauliString>& terms,
                             const std::vector<MeasurementSetting>& settings);

// (1/2^n) sum of pauli_expectation over the stabilizer group of g; equals
// |<phi_G|state>|^2.
double stabilizer_fidelity(const StateVector& state, const Graph& g);

struct WitnessReport {
    double value = 0.0;
    double error = 0.0;
    bool detects_gme = false;
};

// W_2 = 3*I - 2*(P_odd + P_even) on 5 qubits, with P_odd/P_even the joint +1
// projectors of generators {K1,K3,K5} / {K2,K4} of the linear cluster;
// measurable with settings XZXZX and ZXZXZ only. Exact evaluation (error 0).
WitnessReport witness_two_setting(const StateVector& state);

// The Pauli terms (with 1/2^k weights folded in separately) of the witness
// expansion; every one is compatible with XZXZX or ZXZXZ.
std::vector<PauliString> witness_terms();

// Counts from measuring every qubit in the setting's local basis; keys are
// outcome bit strings of length num_qubits.
using SettingCounts = std::map<std::string, std::uint64_t>;

SettingCounts simulate_setting_counts(const StateVector& state,
                                      const MeasurementSetting& setting,
                                      std::uint64_t shots, Rng& rng);

// Parity estimator: mean of (-1)^{parity of outcome restricted to non-identity
// positions of term}. Counts may come from any setting covering the term.
double expectation_from_counts(const PauliString& term, const SettingCounts& counts);

struct TomoEstimate {
    double value = 0.0;
    double error = 0.0;      // std of the Poisson-resampled ensemble
    bool degenerate = false;  // some required setting had zero total counts
};

// Stabilizer-average fidelity from per-setting counts, error bars by Poisson
// resampling of every count cell.
TomoEstimate fidelity_from_counts(const Graph& g,
                                  const std::map<MeasurementSetting, SettingCounts>& counts,
                                  int resamples, Rng& rng);

// Witness estimate from the XZXZX / ZXZXZ counts.
TomoEstimate witness_from_counts(const std::map<MeasurementSetting, SettingCounts>& counts,
                                 int resamples, Rng& rng);

// Poisson(lambda) sample, exact for small lambda, normal approximation above.
std::uint64_t poisson_sample(double lambda, Rng& rng);

std::map<MeasurementSetting, SettingCounts> poisson_resample(
    const std::map<MeasurementSetting, SettingCounts>& counts, Rng& rng);

}  // namespace simonsim
