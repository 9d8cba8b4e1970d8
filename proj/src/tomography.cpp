#include "simonsim/tomography.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace simonsim {

const std::vector<MeasurementSetting>& linear5_settings() {
    static const std::vector<MeasurementSetting> kSettings = {
        "XZZXZ", "XZZYY", "YXXXY", "YXXYZ", "YYZZX", "ZXZZX", "ZYXXY", "ZYXYZ", "XZXZX",
        "XZYXY", "XZYYZ", "YXYZX", "YYIXZ", "YYIYY", "ZXIXZ", "ZXIYY", "ZYYZX",
    };
    return kSettings;
}

bool setting_covers(const PauliString& term, const MeasurementSetting& setting) {
    if (term.size() != setting.size()) {
        throw DomainError("term/setting length mismatch");
    }
    for (std::size_t k = 0; k < term.size(); ++k) {
        if (term.letters[k] == PauliLetter::I) continue;
        if (to_char(term.letters[k]) != setting[k]) return false;
    }
    return true;
}

SettingsCover settings_cover(const std::vector<PauliString>& terms,
                             const std::vector<MeasurementSetting>& settings) {
    SettingsCover cover;
    for (const PauliString& t : terms) {
        bool found = false;
        for (const MeasurementSetting& s : settings) {
            if (setting_covers(t, s)) {
                cover.assignment[t.str()] = s;
                found = true;
                break;
            }
        }
        if (!found) cover.uncovered.push_back(t.str());
    }
    return cover;
}

double stabilizer_fidelity(const StateVector& state, const Graph& g) {
    if (state.num_qubits() != g.num_vertices()) {
        throw DomainError("state dimension does not match graph");
    }
    double sum = 0.0;
    const auto group = stabilizer_group(g);
    for (const PauliString& s : group) sum += state.pauli_expectation(s);
    return sum / static_cast<double>(group.size());
}

namespace {

// Expand prod_{j in gens} (I + K_j)/2 over the linear-cluster generators.
std::vector<PauliString> projector_terms(const std::vector<int>& gens) {
    Graph g = canonical_graph(ResourceId::linear5());
    std::vector<PauliString> ks;
    for (int j : gens) ks.push_back(g.stabilizer_generator(j));
    std::vector<PauliString> terms;
    const std::size_t m = gens.size();
    for (std::uint64_t subset = 0; subset < (std::uint64_t{1} << m); ++subset) {
        PauliString p = PauliString::identity(5);
        for (std::size_t k = 0; k < m; ++k) {
            if (subset & (std::uint64_t{1} << k)) p = multiply(p, ks[k]);
        }
        terms.push_back(std::move(p));
    }
    return terms;  // projector = (1/2^m) * sum(terms)
}

double projector_expectation(const StateVector& state, const std::vector<int>& gens) {
    double sum = 0.0;
    auto terms = projector_terms(gens);
    for (const PauliString& t : terms) sum += state.pauli_expectation(t);
    return sum / static_cast<double>(terms.size());
}

}  // namespace

std::vector<PauliString> witness_terms() {
    std::vector<PauliString> out = projector_terms({1, 3, 5});
    auto even = projector_terms({2, 4});
    out.insert(out.end(), even.begin(), even.end());
    return out;
}

WitnessReport witness_two_setting(const StateVector& state) {
    if (state.num_qubits() != 5) throw DomainError("witness W_2 is defined on 5 qubits");
    const double p_odd = projector_expectation(state, {1, 3, 5});
    const double p_even = projector_expectation(state, {2, 4});
    WitnessReport r;
    r.value = 3.0 - 2.0 * (p_odd + p_even);
    r.error = 0.0;
    r.detects_gme = r.value < 0.0;
    return r;
}

SettingCounts simulate_setting_counts(const StateVector& state,
                                      const MeasurementSetting& setting,
                                      std::uint64_t shots, Rng& rng) {
    const int n = state.num_qubits();
    if (static_cast<int>(setting.size()) != n) throw DomainError("setting length mismatch");
    // Rotate each qubit so its local basis becomes computational, then read
    // the full outcome distribution once and sample from it.
    StateVector rotated = state;
    for (int q = 0; q < n; ++q) {
        switch (setting[q]) {
            case 'X': rotated.apply_h(q); break;
            case 'Y':
                rotated.apply_rz(q, -std::numbers::pi / 2.0);
                rotated.apply_h(q);
                break;
            case 'Z':
            case 'I': break;
            default: throw DomainError("setting letters must be X, Y, Z or I");
        }
    }
    std::vector<double> cdf(rotated.dim());
    double acc = 0.0;
    for (std::uint64_t i = 0; i < rotated.dim(); ++i) {
        acc += std::norm(rotated.amplitudes()[i]);
        cdf[i] = acc;
    }
    SettingCounts counts;
    for (std::uint64_t s = 0; s < shots; ++s) {
        const double u = rng.next_double() * acc;
        const std::uint64_t idx =
            std::lower_bound(cdf.begin(), cdf.end(), u) - cdf.begin();
        std::string key(n, '0');
        for (int q = 0; q < n; ++q) {
            if ((idx >> (n - 1 - q)) & 1) key[q] = '1';
        }
        ++counts[key];
    }
    return counts;
}

double expectation_from_counts(const PauliString& term, const SettingCounts& counts) {
    std::uint64_t total = 0;
    long long signed_sum = 0;
    for (const auto& [outcome, c] : counts) {
        int parity = 0;
        for (std::size_t k = 0; k < term.size(); ++k) {
            if (term.letters[k] != PauliLetter::I && outcome[k] == '1') parity ^= 1;
        }
        total += c;
        signed_sum += parity ? -static_cast<long long>(c) : static_cast<long long>(c);
    }
    if (total == 0) throw DomainError("expectation requires at least one count");
    return term.sign * static_cast<double>(signed_sum) / static_cast<double>(total);
}

std::uint64_t poisson_sample(double lambda, Rng& rng) {
    if (lambda < 0.0) throw DomainError("Poisson rate must be non-negative");
    if (lambda == 0.0) return 0;
    if (lambda < 30.0) {
        // Knuth's method.
        const double limit = std::exp(-lambda);
        double prod = 1.0;
        std::uint64_t k = 0;
        do {
            ++k;
            prod *= rng.next_double();
        } while (prod > limit);
        return k - 1;
    }
    // Normal approximation with continuity correction.
    const double u1 = std::max(rng.next_double(), 1e-300);
    const double u2 = rng.next_double();
    const double z = std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
    const double v = lambda + std::sqrt(lambda) * z + 0.5;
    return v < 0.0 ? 0 : static_cast<std::uint64_t>(v);
}

std::map<MeasurementSetting, SettingCounts> poisson_resample(
    const std::map<MeasurementSetting, SettingCounts>& counts, Rng& rng) {
    std::map<MeasurementSetting, SettingCounts> out;
    for (const auto& [setting, cells] : counts) {
        for (const auto& [outcome, c] : cells) {
            out[setting][outcome] = poisson_sample(static_cast<double>(c), rng);
        }
    }
    return out;
}

namespace {

struct TermAssignment {
    PauliString term;
    MeasurementSetting setting;
};

double estimate_from(const std::vector<TermAssignment>& assignments, double offset,
                     double scale,
                     const std::map<MeasurementSetting, SettingCounts>& counts,
                     bool* degenerate) {
    double sum = 0.0;
    for (const auto& a : assignments) {
        auto it = counts.find(a.setting);
        std::uint64_t total = 0;
        if (it != counts.end()) {
            for (const auto& [k, c] : it->second) total += c;
        }
        if (total == 0) {
            if (degenerate != nullptr) *degenerate = true;
            continue;  // contributes expectation 0
        }
        sum += expectation_from_counts(a.term, it->second);
    }
    return offset + scale * sum;
}

TomoEstimate resampled(const std::vector<TermAssignment>& assignments, double offset,
                       double scale,
                       const std::map<MeasurementSetting, SettingCounts>& counts,
                       int resamples, Rng& rng) {
    TomoEstimate est;
    est.value = estimate_from(assignments, offset, scale, counts, &est.degenerate);
    if (resamples < 1) return est;
    double mean = 0.0, m2 = 0.0;
    for (int r = 0; r < resamples; ++r) {
        auto re = poisson_resample(counts, rng);
        const double v = estimate_from(assignments, offset, scale, re, nullptr);
        const double d = v - mean;
        mean += d / (r + 1);
        m2 += d * (v - mean);
    }
    est.error = resamples > 1 ? std::sqrt(m2 / (resamples - 1)) : 0.0;
    return est;
}

}  // namespace

TomoEstimate fidelity_from_counts(const Graph& g,
                                  const std::map<MeasurementSetting, SettingCounts>& counts,
                                  int resamples, Rng& rng) {
    std::vector<PauliString> terms;
    for (const PauliString& s : stabilizer_group(g)) {
        if (!s.is_identity()) terms.push_back(s);
    }
    std::vector<MeasurementSetting> settings;
    for (const auto& [s, c] : counts) settings.push_back(s);
    SettingsCover cover = settings_cover(terms, settings);
    if (!cover.complete()) {
        throw DomainError("settings do not cover every stabilizer term");
    }
    std::vector<TermAssignment> assignments;
    for (const PauliString& t : terms) {
        assignments.push_back({t, cover.assignment.at(t.str())});
    }
    const double dim = static_cast<double>(std::size_t{1} << g.num_vertices());
    return resampled(assignments, 1.0 / dim, 1.0 / dim, counts, resamples, rng);
}

TomoEstimate witness_from_counts(const std::map<MeasurementSetting, SettingCounts>& counts,
                                 int resamples, Rng& rng) {
    // W_2 = 3 - 2*(P_odd + P_even)
    //     = 3 - 2*[ (1/8) sum odd terms + (1/4) sum even terms ].
    std::vector<TermAssignment> assignments;
    for (const PauliString& t : projector_terms({1, 3, 5})) {
        PauliString scaled = t;
        // fold the 1/8 weight relative to the common 1/4 scale below
        assignments.push_back({scaled, "XZXZX"});
    }
    // Use separate scales by duplicating even terms (weight 1/4 = 2/8).
    for (const PauliString& t : projector_terms({2, 4})) {
        assignments.push_back({t, "ZXZXZ"});
        assignments.push_back({t, "ZXZXZ"});
    }
    for (const auto& a : assignments) {
        if (!setting_covers(a.term, a.setting)) {
            throw DomainError("witness term not measurable in its two-setting basis");
        }
    }
    // value = 3 - 2 * (1/8) * sum(assignments)
    return resampled(assignments, 3.0, -0.25, counts, resamples, rng);
}

}  // namespace simonsim
