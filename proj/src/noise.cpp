#include "simonsim/noise.hpp"

#include <cmath>

namespace simonsim {

std::string NoiseSpec::kind_name() const {
    switch (kind) {
        case Kind::None: return "none";
        case Kind::WhiteNoise: return "white";
        case Kind::PerQubitDepolarizing: return "depolarizing";
    }
    return "?";
}

NoiseSpec NoiseSpec::from(const std::string& kind, double param) {
    if (param < 0.0 || param > 1.0) throw DomainError("noise parameter must be in [0, 1]");
    if (kind == "none") return none();
    if (kind == "white") return white(param);
    if (kind == "depolarizing") return depolarizing(param);
    throw DomainError("unknown noise kind '" + kind + "'");
}

namespace {

void apply_pauli(StateVector& state, int qubit, int which) {
    switch (which) {
        case 0: break;
        case 1: state.apply_x(qubit); break;
        case 2:  // Y up to global phase
            state.apply_z(qubit);
            state.apply_x(qubit);
            break;
        case 3: state.apply_z(qubit); break;
    }
}

}  // namespace

void apply_noise_trajectory(StateVector& state, const NoiseSpec& spec, Rng& rng) {
    if (spec.param < 0.0 || spec.param > 1.0) {
        throw DomainError("noise parameter must be in [0, 1]");
    }
    const int n = state.num_qubits();
    switch (spec.kind) {
        case NoiseSpec::Kind::None:
            return;
        case NoiseSpec::Kind::WhiteNoise:
            if (rng.next_double() < 1.0 - spec.param) {
                // Uniformly random Pauli string (identity included): the
                // Pauli twirl of any state is maximally mixed.
                for (int q = 0; q < n; ++q) {
                    apply_pauli(state, q, static_cast<int>(rng.next_below(4)));
                }
            }
            return;
        case NoiseSpec::Kind::PerQubitDepolarizing:
            for (int q = 0; q < n; ++q) {
                if (rng.next_double() < spec.param) {
                    apply_pauli(state, q, 1 + static_cast<int>(rng.next_below(3)));
                }
            }
            return;
    }
}

double white_noise_fidelity(double p, int n) {
    const double dim = std::pow(2.0, n);
    return p + (1.0 - p) / dim;
}

double white_noise_param_for_fidelity(double f, int n) {
    const double dim = std::pow(2.0, n);
    return (f - 1.0 / dim) / (1.0 - 1.0 / dim);
}

double calibrate_to_fidelity(double target_f, NoiseSpec::Kind kind, std::uint64_t shots,
                             Rng& rng) {
    if (kind == NoiseSpec::Kind::None) throw DomainError("cannot calibrate the no-noise model");
    const CanonicalResource res = canonical_resource(ResourceId::linear5());
    const int n = res.graph.num_vertices();
    if (target_f <= 1.0 / std::pow(2.0, n) || target_f > 1.0) {
        throw DomainError("target fidelity unreachable for this noise model");
    }
    if (shots == 0) throw DomainError("shots must be >= 1");
    auto ensemble_fidelity = [&](double param) {
        double sum = 0.0;
        for (std::uint64_t s = 0; s < shots; ++s) {
            StateVector st = res.state;
            NoiseSpec spec{kind, param};
            apply_noise_trajectory(st, spec, rng);
            sum += state_overlap(st, res.state);
        }
        return sum / static_cast<double>(shots);
    };
    if (kind == NoiseSpec::Kind::WhiteNoise) {
        const double p = white_noise_param_for_fidelity(target_f, n);
        const double mc = ensemble_fidelity(p);
        if (std::abs(mc - target_f) > 0.02) {
            throw DomainError("Monte Carlo fidelity disagrees with the closed form");
        }
        return p;
    }
    // Bisection: fidelity decreases monotonically in the depolarizing rate.
    double lo = 0.0, hi = 1.0;
    for (int iter = 0; iter < 40; ++iter) {
        const double mid = 0.5 * (lo + hi);
        const double f = ensemble_fidelity(mid);
        if (std::abs(f - target_f) <= 0.005) return mid;
        if (f > target_f) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    throw DomainError("calibration did not converge");
}

}  // namespace simonsim
