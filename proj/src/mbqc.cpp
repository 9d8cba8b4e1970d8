#include "simonsim/mbqc.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

#include <json.hpp>

namespace simonsim {

namespace {
constexpr double kHalfPi = std::numbers::pi / 2.0;
constexpr double kPi = std::numbers::pi;
}  // namespace

std::string ff_form_name(FFForm f) {
    switch (f) {
        case FFForm::Chi: return "chi";
        case FFForm::ChiTilde: return "chi_tilde";
        case FFForm::Zeta: return "zeta";
        case FFForm::Hadamard: return "hadamard";
    }
    return "?";
}

FFForm ff_form_from_name(const std::string& name) {
    if (name == "chi") return FFForm::Chi;
    if (name == "chi_tilde") return FFForm::ChiTilde;
    if (name == "zeta") return FFForm::Zeta;
    if (name == "hadamard") return FFForm::Hadamard;
    throw DomainError("unknown feed-forward form '" + name + "'");
}

void validate_pattern(const Pattern& p, const Graph& g) {
    std::set<int> measured;
    for (const Step& s : p.steps) {
        if (s.qubit < 1 || s.qubit > g.num_vertices()) {
            throw DomainError("step qubit out of range");
        }
        if (!measured.insert(s.qubit).second) {
            throw DomainError("qubit " + std::to_string(s.qubit) + " measured twice");
        }
    }
    std::set<int> late;  // qubits measured after feed-forward
    for (const FeedForwardRule& r : p.rules) {
        if (r.target < 1 || r.target > g.num_vertices()) {
            throw DomainError("rule target out of range");
        }
        if (measured.count(r.target)) {
            throw DomainError("rule targets an already-measured qubit");
        }
        if (!late.insert(r.target).second) {
            throw DomainError("two rules share target " + std::to_string(r.target));
        }
        for (int src : r.sources) {
            if (src != 0 && !measured.count(src)) {
                throw DomainError("rule references outcome of unmeasured qubit " +
                                  std::to_string(src));
            }
        }
    }
    std::set<int> outs;
    for (int q : p.output_qubits) {
        if (q < 1 || q > g.num_vertices()) throw DomainError("output qubit out of range");
        if (measured.count(q)) throw DomainError("output qubit already measured by a step");
        if (!outs.insert(q).second) throw DomainError("duplicate output qubit");
    }
}

std::vector<ResolvedCorrection> resolve_feedforward(
    const std::vector<FeedForwardRule>& rules, const std::map<int, int>& outcomes,
    const Graph& g) {
    std::vector<ResolvedCorrection> out;
    out.reserve(rules.size());
    for (const FeedForwardRule& r : rules) {
        int e = 0;
        for (int src : r.sources) {
            if (src == 0) continue;  // s_0 = 0
            auto it = outcomes.find(src);
            if (it == outcomes.end()) {
                throw DomainError("missing outcome for qubit " + std::to_string(src));
            }
            e ^= it->second;
        }
        ResolvedCorrection c;
        c.target = r.target;
        const bool query = g.role(r.target) == VertexRole::Query;
        switch (r.form) {
            case FFForm::Chi:
                c.gates.push_back({Gate::Rz, query ? kHalfPi : -kHalfPi});
                c.gates.push_back({Gate::H});
                break;
            case FFForm::ChiTilde:
                c.gates.push_back({Gate::Rz, -kPi});
                c.gates.push_back({Gate::H});
                break;
            case FFForm::Zeta:
                c.gates.push_back({Gate::H});
                break;
            case FFForm::Hadamard:
                c.gates.push_back({Gate::H});
                e = 0;
                break;
        }
        if (e) c.gates.push_back({Gate::X});
        out.push_back(std::move(c));
    }
    return out;
}

void apply_correction(StateVector& state, const ResolvedCorrection& c) {
    const int q = c.target - 1;
    for (const GateOp& op : c.gates) {
        if (op.gate == Gate::Rz) {
            state.apply_rz(q, op.alpha);
        } else {
            apply_gate(state, op.gate, q);
        }
    }
}

StateVector prereadout_state(const CanonicalResource& res, const Pattern& p,
                             const std::map<int, int>& forced, double* prob) {
    validate_pattern(p, res.graph);
    StateVector state = res.state;
    double branch_prob = 1.0;
    std::map<int, int> outcomes;
    for (const Step& s : p.steps) {
        auto it = forced.find(s.qubit);
        if (it == forced.end()) {
            throw DomainError("no forced outcome for step qubit " + std::to_string(s.qubit));
        }
        MeasurementResult r = state.measure(s.qubit - 1, s.basis, nullptr, it->second);
        branch_prob *= r.prob;
        outcomes[s.qubit] = r.outcome;
    }
    for (const ResolvedCorrection& c : resolve_feedforward(p.rules, outcomes, res.graph)) {
        apply_correction(state, c);
    }
    if (prob != nullptr) *prob = branch_prob;
    return state;
}

std::map<std::string, double> readout_distribution(const StateVector& state,
                                                   const std::vector<int>& outputs) {
    const int n = state.num_qubits();
    std::map<std::string, double> dist;
    const auto& amps = state.amplitudes();
    for (std::uint64_t idx = 0; idx < state.dim(); ++idx) {
        const double w = std::norm(amps[idx]);
        if (w == 0.0) continue;
        std::string y;
        y.reserve(outputs.size());
        for (int q : outputs) {
            y.push_back(((idx >> (n - q)) & 1) ? '1' : '0');
        }
        dist[y] += w;
    }
    return dist;
}

OutcomeRecord run_pattern(const CanonicalResource& res, const Pattern& p, Rng& rng) {
    validate_pattern(p, res.graph);
    StateVector state = res.state;
    OutcomeRecord rec;
    for (const Step& s : p.steps) {
        MeasurementResult r = state.measure(s.qubit - 1, s.basis, &rng);
        rec.branch_prob *= r.prob;
        rec.outcomes[s.qubit] = r.outcome;
    }
    for (const ResolvedCorrection& c : resolve_feedforward(p.rules, rec.outcomes, res.graph)) {
        apply_correction(state, c);
    }
    const MeasurementBasis comp = MeasurementBasis::computational();
    for (int q : p.output_qubits) {
        MeasurementResult r = state.measure(q - 1, comp, &rng);
        rec.branch_prob *= r.prob;
        rec.outcomes[q] = r.outcome;
        rec.y.push_back(r.outcome ? '1' : '0');
    }
    for (const FeedForwardRule& r : p.rules) {
        if (rec.outcomes.count(r.target)) continue;
        MeasurementResult m = state.measure(r.target - 1, comp, &rng);
        rec.branch_prob *= m.prob;
        rec.outcomes[r.target] = m.outcome;
    }
    return rec;
}

std::vector<Branch> enumerate_branches(const CanonicalResource& res, const Pattern& p) {
    validate_pattern(p, res.graph);
    const int k = static_cast<int>(p.steps.size());
    if (k > 12) throw CapacityError("too many oracle steps to enumerate");
    std::vector<Branch> out;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << k); ++bits) {
        std::map<int, int> forced;
        for (int i = 0; i < k; ++i) {
            forced[p.steps[i].qubit] = static_cast<int>((bits >> i) & 1);
        }
        double prob = 0.0;
        try {
            StateVector state = prereadout_state(res, p, forced, &prob);
            out.push_back({forced, prob, readout_distribution(state, p.output_qubits)});
        } catch (const ImpossibleBranchError&) {
            // zero-probability branch: skip
        }
    }
    return out;
}

std::map<std::string, double> pattern_distribution(const CanonicalResource& res,
                                                   const Pattern& p) {
    std::map<std::string, double> agg;
    for (const Branch& b : enumerate_branches(res, p)) {
        for (const auto& [y, w] : b.ydist) agg[y] += b.prob * w;
    }
    return agg;
}

double total_variation(const std::map<std::string, double>& a,
                       const std::map<std::string, double>& b) {
    std::map<std::string, double> diff = a;
    for (const auto& [k, v] : b) diff[k] -= v;
    double tv = 0.0;
    for (const auto& [k, v] : diff) tv += std::abs(v);
    return tv / 2.0;
}

std::string pattern_to_json(const Pattern& p) {
    nlohmann::json j;
    j["resource"] = p.resource.name();
    j["steps"] = nlohmann::json::array();
    for (const Step& s : p.steps) {
        nlohmann::json b;
        if (s.basis.kind == MeasurementBasis::Kind::Computational) {
            b = {{"kind", "computational"}};
        } else {
            b = {{"kind", "equatorial"}, {"alpha", s.basis.alpha}};
        }
        j["steps"].push_back({{"qubit", s.qubit}, {"basis", b}});
    }
    j["rules"] = nlohmann::json::array();
    for (const FeedForwardRule& r : p.rules) {
        nlohmann::json jr = {{"target", r.target}, {"form", ff_form_name(r.form)}};
        jr["i"] = r.sources.size() > 0 ? r.sources[0] : 0;
        jr["j"] = r.sources.size() > 1 ? r.sources[1] : 0;
        if (r.sources.size() > 2) {
            jr["extra"] = std::vector<int>(r.sources.begin() + 2, r.sources.end());
        }
        j["rules"].push_back(jr);
    }
    j["outputs"] = p.output_qubits;
    return j.dump(2);
}

Pattern pattern_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    Pattern p;
    p.resource = ResourceId::from_name(j.at("resource").get<std::string>());
    for (const auto& js : j.at("steps")) {
        Step s;
        s.qubit = js.at("qubit").get<int>();
        const auto& b = js.at("basis");
        const std::string kind = b.at("kind").get<std::string>();
        if (kind == "computational") {
            s.basis = MeasurementBasis::computational();
        } else if (kind == "equatorial") {
            s.basis = MeasurementBasis::equatorial(b.at("alpha").get<double>());
        } else {
            throw DomainError("unknown basis kind '" + kind + "'");
        }
        p.steps.push_back(s);
    }
    for (const auto& jr : j.at("rules")) {
        FeedForwardRule r;
        r.target = jr.at("target").get<int>();
        r.form = ff_form_from_name(jr.at("form").get<std::string>());
        if (r.form != FFForm::Hadamard) {
            r.sources.push_back(jr.at("i").get<int>());
            r.sources.push_back(jr.at("j").get<int>());
            if (jr.contains("extra")) {
                for (const auto& e : jr.at("extra")) r.sources.push_back(e.get<int>());
            }
        }
        p.rules.push_back(std::move(r));
    }
    p.output_qubits = j.at("outputs").get<std::vector<int>>();
    return p;
}

}  // namespace simonsim
