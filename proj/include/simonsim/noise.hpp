#pragma once

#include <cstdint>
#include <string>

#include "simonsim/graph_state.hpp"
#include "simonsim/rng.hpp"
#include "simonsim/statevector.hpp"

namespace simonsim {

// Stochastic Pauli noise applied to the prepared resource state, before
// pattern execution. Trajectory realization: each shot gets one sampled Pauli
// string; ensemble averages reproduce the mixed-state values.
struct NoiseSpec {
    enum class Kind { None, WhiteNoise, PerQubitDepolarizing };
    Kind kind = Kind::None;
    // WhiteNoise: probability of keeping the state intact (1-p mixes toward
    // maximally mixed). PerQubitDepolarizing: per-qubit error probability.
    double param = 1.0;

    static NoiseSpec none() { return {Kind::None, 1.0}; }
    static NoiseSpec white(double p) { return {Kind::WhiteNoise, p}; }
    static NoiseSpec depolarizing(double q) { return {Kind::PerQubitDepolarizing, q}; }

    std::string kind_name() const;
    static NoiseSpec from(const std::string& kind, double param);
};

void apply_noise_trajectory(StateVector& state, const NoiseSpec& spec, Rng& rng);

// Fits the noise parameter so the trajectory-ensemble fidelity to the ideal
// LinearCluster5 state hits target_f within +-0.005. WhiteNoise additionally
// has the closed form p = (f - 1/32)/(1 - 1/32), asserted against the fit.
double calibrate_to_fidelity(double target_f, NoiseSpec::Kind kind, std::uint64_t shots,
                             Rng& rng);

// Closed form for WhiteNoise on n qubits.
double white_noise_fidelity(double p, int n);
double white_noise_param_for_fidelity(double f, int n);

}  // namespace simonsim
