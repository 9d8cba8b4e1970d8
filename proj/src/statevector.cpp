#include "simonsim/statevector.hpp"

#include <bit>
#include <cmath>
#include <string>

namespace simonsim {

namespace {
constexpr double kForcedBranchTol = 1e-12;
const Complex kI(0.0, 1.0);
}  // namespace

StateVector StateVector::plus_state(int num_qubits) {
    if (num_qubits < 1 || num_qubits > kMaxQubits) {
        throw CapacityError("qubit count " + std::to_string(num_qubits) + " outside [1, " +
                            std::to_string(kMaxQubits) + "]");
    }
    std::uint64_t dim = std::uint64_t{1} << num_qubits;
    double amp = std::pow(2.0, -num_qubits / 2.0);
    return StateVector(num_qubits, std::vector<Complex>(dim, Complex(amp, 0.0)));
}

StateVector StateVector::basis_state(int num_qubits, std::uint64_t index) {
    if (num_qubits < 1 || num_qubits > kMaxQubits) {
        throw CapacityError("qubit count out of range");
    }
    std::uint64_t dim = std::uint64_t{1} << num_qubits;
    if (index >= dim) throw DomainError("basis index out of range");
    std::vector<Complex> amps(dim, Complex(0.0, 0.0));
    amps[index] = 1.0;
    return StateVector(num_qubits, std::move(amps));
}

StateVector new_plus_state(int num_qubits) { return StateVector::plus_state(num_qubits); }

void StateVector::check_qubit(int qubit) const {
    if (qubit < 0 || qubit >= num_qubits_) {
        throw DomainError("qubit index " + std::to_string(qubit) + " out of range");
    }
}

double StateVector::norm_squared() const {
    double s = 0.0;
    for (const Complex& a : amps_) s += std::norm(a);
    return s;
}

void StateVector::apply_h(int qubit) {
    check_qubit(qubit);
    const std::uint64_t stride = std::uint64_t{1} << (num_qubits_ - 1 - qubit);
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    for (std::uint64_t base = 0; base < dim(); base += 2 * stride) {
        for (std::uint64_t off = 0; off < stride; ++off) {
            Complex& a0 = amps_[base + off];
            Complex& a1 = amps_[base + off + stride];
            Complex u = (a0 + a1) * inv_sqrt2;
            Complex v = (a0 - a1) * inv_sqrt2;
            a0 = u;
            a1 = v;
        }
    }
}

void StateVector::apply_x(int qubit) {
    check_qubit(qubit);
    const std::uint64_t stride = std::uint64_t{1} << (num_qubits_ - 1 - qubit);
    for (std::uint64_t base = 0; base < dim(); base += 2 * stride) {
        for (std::uint64_t off = 0; off < stride; ++off) {
            std::swap(amps_[base + off], amps_[base + off + stride]);
        }
    }
}

void StateVector::apply_z(int qubit) {
    check_qubit(qubit);
    const std::uint64_t stride = std::uint64_t{1} << (num_qubits_ - 1 - qubit);
    for (std::uint64_t base = stride; base < dim(); base += 2 * stride) {
        for (std::uint64_t off = 0; off < stride; ++off) {
            amps_[base + off] = -amps_[base + off];
        }
    }
}

void StateVector::apply_rz(int qubit, double alpha) {
    check_qubit(qubit);
    const Complex p0 = std::exp(-kI * (alpha / 2.0));
    const Complex p1 = std::exp(kI * (alpha / 2.0));
    const std::uint64_t stride = std::uint64_t{1} << (num_qubits_ - 1 - qubit);
    for (std::uint64_t base = 0; base < dim(); base += 2 * stride) {
        for (std::uint64_t off = 0; off < stride; ++off) {
            amps_[base + off] *= p0;
            amps_[base + off + stride] *= p1;
        }
    }
}

void StateVector::apply_cz(int a, int b) {
    check_qubit(a);
    check_qubit(b);
    if (a == b) throw DomainError("CZ requires two distinct qubits");
    const std::uint64_t ma = std::uint64_t{1} << (num_qubits_ - 1 - a);
    const std::uint64_t mb = std::uint64_t{1} << (num_qubits_ - 1 - b);
    for (std::uint64_t idx = 0; idx < dim(); ++idx) {
        if ((idx & ma) && (idx & mb)) amps_[idx] = -amps_[idx];
    }
}

double StateVector::outcome0_probability(int qubit, const MeasurementBasis& basis) const {
    check_qubit(qubit);
    const std::uint64_t mask = std::uint64_t{1} << (num_qubits_ - 1 - qubit);
    if (basis.kind == MeasurementBasis::Kind::Computational) {
        double p0 = 0.0;
        for (std::uint64_t idx = 0; idx < dim(); ++idx) {
            if (!(idx & mask)) p0 += std::norm(amps_[idx]);
        }
        return p0;
    }
    // <a+|psi> pairs amplitude(bit=0) with e^{-ia} amplitude(bit=1).
    const Complex phase = std::exp(-kI * basis.alpha);
    double p0 = 0.0;
    for (std::uint64_t idx = 0; idx < dim(); ++idx) {
        if (!(idx & mask)) {
            Complex c = (amps_[idx] + phase * amps_[idx | mask]) / std::sqrt(2.0);
            p0 += std::norm(c);
        }
    }
    return p0;
}

MeasurementResult StateVector::measure(int qubit, const MeasurementBasis& basis, Rng* rng,
                                       int forced) {
    check_qubit(qubit);
    const double p0 = outcome0_probability(qubit, basis);
    int outcome;
    if (rng != nullptr) {
        outcome = rng->next_double() < p0 ? 0 : 1;
    } else {
        if (forced != 0 && forced != 1) throw DomainError("forced outcome must be 0 or 1");
        outcome = forced;
        double p = outcome == 0 ? p0 : 1.0 - p0;
        if (p < kForcedBranchTol) {
            throw ImpossibleBranchError("forced outcome " + std::to_string(outcome) +
                                        " on qubit " + std::to_string(qubit) +
                                        " has probability " + std::to_string(p));
        }
    }
    const double prob = outcome == 0 ? p0 : 1.0 - p0;
    const std::uint64_t mask = std::uint64_t{1} << (num_qubits_ - 1 - qubit);
    const double inv = 1.0 / std::sqrt(prob);

    if (basis.kind == MeasurementBasis::Kind::Computational) {
        for (std::uint64_t idx = 0; idx < dim(); ++idx) {
            bool bit = (idx & mask) != 0;
            if (bit != (outcome == 1)) {
                amps_[idx] = 0.0;
            } else {
                amps_[idx] *= inv;
            }
        }
        return {outcome, prob};
    }

    // Project onto |a_outcome> and leave the qubit in that state.
    const double sign = outcome == 0 ? 1.0 : -1.0;
    const Complex bra_phase = sign * std::exp(-kI * basis.alpha);  // conj coefficient of |1>
    const Complex ket_phase = sign * std::exp(kI * basis.alpha);
    for (std::uint64_t idx = 0; idx < dim(); ++idx) {
        if (!(idx & mask)) {
            Complex c = (amps_[idx] + bra_phase * amps_[idx | mask]) / std::sqrt(2.0);
            c *= inv;
            amps_[idx] = c / std::sqrt(2.0);
            amps_[idx | mask] = ket_phase * c / std::sqrt(2.0);
        }
    }
    return {outcome, prob};
}

void StateVector::discard_measured_qubit(int qubit, const MeasurementBasis& basis, int outcome) {
    check_qubit(qubit);
    if (num_qubits_ <= 1) throw DomainError("cannot discard the last qubit");
    if (outcome != 0 && outcome != 1) throw DomainError("outcome must be 0 or 1");
    // Rotate the known single-qubit state to |outcome>, then slice.
    if (basis.kind == MeasurementBasis::Kind::Equatorial) {
        apply_rz(qubit, -basis.alpha);
        apply_h(qubit);
    }
    const std::uint64_t mask = std::uint64_t{1} << (num_qubits_ - 1 - qubit);
    const std::uint64_t low = mask - 1;
    std::vector<Complex> reduced(dim() >> 1);
    double leaked = 0.0;
    for (std::uint64_t idx = 0; idx < dim(); ++idx) {
        bool bit = (idx & mask) != 0;
        if (bit == (outcome == 1)) {
            std::uint64_t compact = ((idx & ~((mask << 1) - 1)) >> 1) | (idx & low);
            reduced[compact] = amps_[idx];
        } else {
            leaked += std::norm(amps_[idx]);
        }
    }
    if (leaked > kExactTol) {
        throw DomainError("discard_measured_qubit: qubit is not in the stated basis state");
    }
    --num_qubits_;
    amps_ = std::move(reduced);
}

double StateVector::pauli_expectation(const PauliString& p) const {
    if (static_cast<int>(p.size()) != num_qubits_) {
        throw DomainError("Pauli length does not match qubit count");
    }
    std::uint64_t flip = 0;  // X or Y positions
    std::uint64_t phase_z = 0;  // Z or Y positions contribute (-1)^bit
    std::uint64_t y_mask = 0;
    for (int k = 0; k < num_qubits_; ++k) {
        const std::uint64_t mask = std::uint64_t{1} << (num_qubits_ - 1 - k);
        switch (p.letters[k]) {
            case PauliLetter::I: break;
            case PauliLetter::X: flip |= mask; break;
            case PauliLetter::Z: phase_z |= mask; break;
            case PauliLetter::Y:
                flip |= mask;
                phase_z |= mask;
                y_mask |= mask;
                break;
        }
    }
    // Y = i X Z, so each Y contributes a global i on top of the X flip and the
    // Z sign already folded into phase_z.
    const int y_count = static_cast<int>(std::popcount(y_mask));
    const Complex y_phase = std::pow(kI, y_count);
    Complex total(0.0, 0.0);
    for (std::uint64_t idx = 0; idx < dim(); ++idx) {
        const std::uint64_t src = idx ^ flip;
        Complex term = std::conj(amps_[idx]) * y_phase * amps_[src];
        if (std::popcount(src & phase_z) & 1) term = -term;
        total += term;
    }
    total *= static_cast<double>(p.sign);
    if (std::abs(total.imag()) > kExactTol) {
        throw DomainError("Pauli expectation has non-negligible imaginary part");
    }
    return total.real();
}

void apply_gate(StateVector& state, Gate gate, int target) {
    switch (gate) {
        case Gate::H: state.apply_h(target); return;
        case Gate::X: state.apply_x(target); return;
        case Gate::Z: state.apply_z(target); return;
        default: throw DomainError("gate requires extra arguments");
    }
}

void apply_gate(StateVector& state, Gate gate, int target, double alpha) {
    if (gate != Gate::Rz) throw DomainError("only Rz takes an angle");
    state.apply_rz(target, alpha);
}

void apply_gate_cz(StateVector& state, int a, int b) { state.apply_cz(a, b); }

double state_overlap(const StateVector& a, const StateVector& b) {
    if (a.num_qubits() != b.num_qubits()) throw DomainError("state size mismatch");
    Complex inner(0.0, 0.0);
    const auto& va = a.amplitudes();
    const auto& vb = b.amplitudes();
    for (std::uint64_t idx = 0; idx < a.dim(); ++idx) {
        inner += std::conj(va[idx]) * vb[idx];
    }
    return std::norm(inner);
}

}  // namespace simonsim
