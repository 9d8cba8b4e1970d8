#pragma once

#include <map>
#include <string>
#include <vector>

#include "simonsim/graph_state.hpp"
#include "simonsim/statevector.hpp"

namespace simonsim {

struct Step {
    int qubit = 0;  // 1-based vertex
    MeasurementBasis basis;
    bool operator==(const Step&) const = default;
};

enum class FFForm : unsigned char { Chi, ChiTilde, Zeta, Hadamard };

std::string ff_form_name(FFForm f);
FFForm ff_form_from_name(const std::string& name);

// target receives X^{xor of outcomes over sources} composed with the form's
// fixed part. Source 0 is the always-zero outcome s_0. Chi's rotation sign
// depends on the target's role in the resource graph (query: +pi/2,
// ancilla/other: -pi/2); see decisions ledger.
struct FeedForwardRule {
    int target = 0;
    FFForm form = FFForm::Hadamard;
    std::vector<int> sources;  // empty for Hadamard
    bool operator==(const FeedForwardRule&) const = default;
};

struct Pattern {
    ResourceId resource;
    std::vector<Step> steps;             // oracle measurements, in order
    std::vector<FeedForwardRule> rules;  // applied after all steps
    std::vector<int> output_qubits;      // y readout, in order
    bool operator==(const Pattern&) const = default;
};

struct OutcomeRecord {
    std::map<int, int> outcomes;  // qubit -> bit, for every measured qubit
    double branch_prob = 1.0;
    std::string y;
};

struct GateOp {
    Gate gate;
    double alpha = 0.0;  // Rz only
};

struct ResolvedCorrection {
    int target = 0;
    std::vector<GateOp> gates;  // application order
};

// Throws DomainError on double measurement, out-of-range vertices, or rules
// referencing outcomes no step produces.
void validate_pattern(const Pattern& p, const Graph& g);

std::vector<ResolvedCorrection> resolve_feedforward(
    const std::vector<FeedForwardRule>& rules, const std::map<int, int>& outcomes,
    const Graph& g);

void apply_correction(StateVector& state, const ResolvedCorrection& c);

// Executes steps (outcomes forced per `forced`, which must cover every step
// qubit), then feed-forward. Returns the pre-readout state; branch
// probability of the forced assignment goes to *prob if non-null.
StateVector prereadout_state(const CanonicalResource& res, const Pattern& p,
                             const std::map<int, int>& forced, double* prob = nullptr);

// Exact marginal over output_qubits (computational), keyed by bit string in
// output order.
std::map<std::string, double> readout_distribution(const StateVector& state,
                                                   const std::vector<int>& outputs);

// Full sampled execution: steps, feed-forward, then output qubits and any
// remaining rule targets measured computationally.
OutcomeRecord run_pattern(const CanonicalResource& res, const Pattern& p, Rng& rng);

struct Branch {
    std::map<int, int> forced;  // step qubit -> outcome
    double prob = 0.0;
    std::map<std::string, double> ydist;
};

// One entry per non-impossible forced assignment of the step outcomes.
std::vector<Branch> enumerate_branches(const CanonicalResource& res, const Pattern& p);

// Weighted average of branch y-distributions (the distribution a sampled run
// converges to).
std::map<std::string, double> pattern_distribution(const CanonicalResource& res,
                                                   const Pattern& p);

double total_variation(const std::map<std::string, double>& a,
                       const std::map<std::string, double>& b);

std::string pattern_to_json(const Pattern& p);
Pattern pattern_from_json(const std::string& text);

}  // namespace simonsim
