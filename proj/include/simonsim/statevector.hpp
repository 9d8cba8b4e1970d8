#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "simonsim/error.hpp"
#include "simonsim/pauli.hpp"
#include "simonsim/rng.hpp"

namespace simonsim {

using Complex = std::complex<double>;

inline constexpr int kMaxQubits = 24;
inline constexpr double kExactTol = 1e-10;

// Measurement basis for a single qubit: computational {|0>,|1>} or the
// equatorial family {|a+>,|a->} with |a+-> = (|0> +- e^{ia}|1>)/sqrt(2).
struct MeasurementBasis {
    enum class Kind { Computational, Equatorial };
    Kind kind = Kind::Computational;
    double alpha = 0.0;  // only meaningful for Equatorial

    static MeasurementBasis computational() { return {Kind::Computational, 0.0}; }
    static MeasurementBasis equatorial(double alpha) { return {Kind::Equatorial, alpha}; }
    bool operator==(const MeasurementBasis&) const = default;
};

enum class Gate : unsigned char { H, X, Z, Rz, CZ };

struct MeasurementResult {
    int outcome;    // 0 or 1
    double prob;    // Born probability of the returned outcome
};

// Dense pure state of n qubits. Qubit index k (0-based) occupies bit position
// (n-1-k) of the basis-state integer, so the printed ket |q0 q1 ... q{n-1}>
// reads left to right. All modules share this convention; 1-based paper
// vertex v maps to index v-1.
class StateVector {
public:
    static StateVector plus_state(int num_qubits);
    static StateVector basis_state(int num_qubits, std::uint64_t index);

    int num_qubits() const { return num_qubits_; }
    std::uint64_t dim() const { return std::uint64_t{1} << num_qubits_; }
    const std::vector<Complex>& amplitudes() const { return amps_; }
    std::vector<Complex>& amplitudes() { return amps_; }

    double norm_squared() const;

    void apply_h(int qubit);
    void apply_x(int qubit);
    void apply_z(int qubit);
    void apply_rz(int qubit, double alpha);  // exp(-i alpha Z / 2)
    void apply_cz(int a, int b);

    // Projective measurement. If rng is non-null the outcome is sampled from
    // the Born rule; otherwise `forced` (0/1) selects the branch and an
    // ImpossibleBranchError is thrown when its probability is below 1e-12.
    // The measured qubit is left in the post-measurement basis state.
    MeasurementResult measure(int qubit, const MeasurementBasis& basis, Rng* rng,
                              int forced = -1);

    // Probability of outcome 0 for the given basis, without collapsing.
    double outcome0_probability(int qubit, const MeasurementBasis& basis) const;

    // Removes a qubit known to be in the post-measurement state of `basis`
    // with the given outcome (i.e. right after measure()). Throws if the
    // discarded branch carries weight.
    void discard_measured_qubit(int qubit, const MeasurementBasis& basis, int outcome);

    double pauli_expectation(const PauliString& p) const;

private:
    StateVector(int num_qubits, std::vector<Complex> amps)
        : num_qubits_(num_qubits), amps_(std::move(amps)) {}

    void check_qubit(int qubit) const;

    int num_qubits_;
    std::vector<Complex> amps_;
};

StateVector new_plus_state(int num_qubits);

void apply_gate(StateVector& state, Gate gate, int target);
void apply_gate(StateVector& state, Gate gate, int target, double alpha);
void apply_gate_cz(StateVector& state, int a, int b);

// |<a|b>|^2, insensitive to global phase.
double state_overlap(const StateVector& a, const StateVector& b);

}  // namespace simonsim
