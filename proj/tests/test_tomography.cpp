#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numeric>

#include "paper_literals.hpp"
#include "simonsim/noise.hpp"
#include "simonsim/tomography.hpp"

using namespace simonsim;

namespace {

StateVector random_state(int n, Rng& rng) {
    StateVector st = StateVector::plus_state(n);
    auto& amps = st.amplitudes();
    double norm = 0.0;
    for (auto& a : amps) {
        a = Complex(rng.next_double() - 0.5, rng.next_double() - 0.5);
        norm += std::norm(a);
    }
    for (auto& a : amps) a /= std::sqrt(norm);
    return st;
}

std::map<MeasurementSetting, SettingCounts> collect_counts(const StateVector& state,
                                                           std::uint64_t shots,
                                                           Rng& rng,
                                                           bool with_witness_settings) {
    std::map<MeasurementSetting, SettingCounts> out;
    for (const auto& s : linear5_settings()) {
        out[s] = simulate_setting_counts(state, s, shots, rng);
    }
    if (with_witness_settings && !out.count("ZXZXZ")) {
        out["ZXZXZ"] = simulate_setting_counts(state, "ZXZXZ", shots, rng);
    }
    return out;
}

double stddev(const std::vector<double>& xs) {
    const double mean = std::accumulate(xs.begin(), xs.end(), 0.0) / xs.size();
    double acc = 0.0;
    for (double x : xs) acc += (x - mean) * (x - mean);
    return std::sqrt(acc / xs.size());
}

}  // namespace

TEST_CASE("the 17 settings cover every printed stabilizer term") {
    const auto& settings = linear5_settings();
    CHECK(settings.size() == 17);

    std::vector<PauliString> terms;
    for (const auto& t : literals::s1_terms()) terms.push_back(PauliString::parse(t));
    SettingsCover cover = settings_cover(terms, settings);
    CHECK(cover.complete());
    CHECK(cover.assignment.size() == 31);
    for (const auto& [term, setting] : cover.assignment) {
        CHECK(setting_covers(PauliString::parse(term), setting));
    }
}

TEST_CASE("setting_covers semantics") {
    CHECK(setting_covers(PauliString::parse("XZIII"), "XZXZX"));
    CHECK(setting_covers(PauliString::parse("IIIII"), "YYYYY"));
    CHECK(!setting_covers(PauliString::parse("XZIII"), "ZXZXZ"));
    CHECK(!setting_covers(PauliString::parse("-YYZII"), "YYXII"));
    CHECK(setting_covers(PauliString::parse("-YYZII"), "YYZZX"));
    CHECK_THROWS_AS(setting_covers(PauliString::parse("XX"), "XZXZX"), DomainError);

    // YYYYY is genuinely outside the 17-setting list
    SettingsCover c = settings_cover({PauliString::parse("YYYYY")}, linear5_settings());
    CHECK(!c.complete());
    CHECK(c.uncovered == std::vector<std::string>{"YYYYY"});
}

TEST_CASE("stabilizer fidelity equals state overlap") {
    CanonicalResource res = canonical_resource(ResourceId::linear5());
    CHECK(stabilizer_fidelity(res.state, res.graph) == doctest::Approx(1.0).epsilon(1e-10));

    StateVector zeros = StateVector::basis_state(5, 0);
    CHECK(stabilizer_fidelity(zeros, res.graph) ==
          doctest::Approx(state_overlap(zeros, res.state)).epsilon(1e-10));

    Rng rng(19);
    for (int t = 0; t < 200; ++t) {
        StateVector st = random_state(5, rng);
        CHECK(stabilizer_fidelity(st, res.graph) ==
              doctest::Approx(state_overlap(st, res.state)).epsilon(1e-8));
    }
}

TEST_CASE("witness values") {
    CanonicalResource res = canonical_resource(ResourceId::linear5());
    WitnessReport ideal = witness_two_setting(res.state);
    CHECK(ideal.value == doctest::Approx(-1.0).epsilon(1e-10));
    CHECK(ideal.error == 0.0);
    CHECK(ideal.detects_gme);

    // trajectory ensemble of fully white noise (p = 0) averages to the
    // maximally mixed value 3 - 2*(1/8 + 1/4) * ... = 2.25
    Rng rng(23);
    const int trials = 3000;
    double acc = 0.0;
    std::vector<double> vals;
    for (int t = 0; t < trials; ++t) {
        StateVector st = res.state;
        apply_noise_trajectory(st, NoiseSpec::white(0.0), rng);
        const double w = witness_two_setting(st).value;
        acc += w;
        vals.push_back(w);
    }
    const double mean = acc / trials;
    const double sem = stddev(vals) / std::sqrt(static_cast<double>(trials));
    CHECK(std::abs(mean - 2.25) < 5 * sem);

    // product (fully separable) states never go negative
    for (int t = 0; t < 50; ++t) {
        StateVector st = new_plus_state(5);
        for (int q = 0; q < 5; ++q) st.apply_rz(q, rng.next_double() * 6.283);
        CHECK(witness_two_setting(st).value >= -1e-9);
    }
}

TEST_CASE("witness terms fit in two settings") {
    auto terms = witness_terms();
    CHECK(!terms.empty());
    for (const auto& t : terms) {
        CHECK((setting_covers(t, "XZXZX") || setting_covers(t, "ZXZXZ")));
    }
}

TEST_CASE("poisson sampler") {
    Rng rng(29);
    CHECK(poisson_sample(0.0, rng) == 0);
    const int trials = 20000;
    for (double lambda : {0.7, 4.0, 200.0}) {
        double acc = 0.0;
        for (int t = 0; t < trials; ++t) acc += static_cast<double>(poisson_sample(lambda, rng));
        const double mean = acc / trials;
        const double sem = std::sqrt(lambda / trials);
        CHECK(std::abs(mean - lambda) < 5 * sem);
    }
    CHECK_THROWS_AS(poisson_sample(-1.0, rng), DomainError);
}

TEST_CASE("expectation_from_counts parity estimator") {
    SettingCounts counts{{"00000", 50}, {"10000", 50}};
    CHECK(expectation_from_counts(PauliString::parse("ZIIII"), counts) ==
          doctest::Approx(0.0));
    CHECK(expectation_from_counts(PauliString::parse("IZIII"), counts) ==
          doctest::Approx(1.0));
    CHECK(expectation_from_counts(PauliString::parse("-IZIII"), counts) ==
          doctest::Approx(-1.0));
    CHECK_THROWS_AS(expectation_from_counts(PauliString::parse("ZIIII"), SettingCounts{}),
                    DomainError);
}

TEST_CASE("fidelity from counts on the ideal state") {
    CanonicalResource res = canonical_resource(ResourceId::linear5());
    Rng rng(31);
    auto counts = collect_counts(res.state, 3000, rng, true);
    TomoEstimate est = fidelity_from_counts(res.graph, counts, 50, rng);
    // every covered term has deterministic parity on the ideal cluster, so
    // the estimate and its resampled spread are exact (see decisions ledger)
    CHECK(est.value == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(est.error == 0.0);
    CHECK(!est.degenerate);

    TomoEstimate w = witness_from_counts(counts, 50, rng);
    CHECK(w.value == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(w.error == 0.0);
}

TEST_CASE("degenerate counts are flagged") {
    CanonicalResource res = canonical_resource(ResourceId::linear5());
    Rng rng(37);
    auto counts = collect_counts(res.state, 500, rng, false);
    counts[linear5_settings().front()].clear();
    TomoEstimate est = fidelity_from_counts(res.graph, counts, 20, rng);
    CHECK(est.degenerate);
    // missing setting entirely is a domain error, not a degenerate estimate
    counts.erase(linear5_settings().front());
    CHECK_THROWS_AS(fidelity_from_counts(res.graph, counts, 20, rng), DomainError);
}

TEST_CASE("resampled error bars behave statistically on a noisy state") {
    CanonicalResource res = canonical_resource(ResourceId::linear5());
    Rng rng(41);
    const double p = white_noise_param_for_fidelity(0.70, 5);

    // fresh trajectory per shot; a single shared trajectory would keep every
    // parity deterministic and the resampled error at exactly zero
    auto run_once = [&](std::uint64_t shots) {
        std::map<MeasurementSetting, SettingCounts> counts;
        for (const auto& s : linear5_settings()) {
            SettingCounts cell;
            for (std::uint64_t k = 0; k < shots; ++k) {
                StateVector st = res.state;
                apply_noise_trajectory(st, NoiseSpec::white(p), rng);
                for (const auto& [outcome, c] : simulate_setting_counts(st, s, 1, rng)) {
                    cell[outcome] += c;
                }
            }
            counts[s] = std::move(cell);
        }
        return fidelity_from_counts(res.graph, counts, 120, rng);
    };

    TomoEstimate base = run_once(3000);
    CHECK(base.value < 0.95);
    CHECK(base.value > 0.4);
    CHECK(base.error > 1e-4);
    CHECK(base.error < 5e-2);

    // error shrinks roughly as 1/sqrt(shots): average over several repeats
    const int reps = 6;
    double e1 = 0.0, e4 = 0.0;
    for (int t = 0; t < reps; ++t) {
        e1 += run_once(2000).error;
        e4 += run_once(8000).error;
    }
    const double ratio = e4 / e1;
    CHECK(ratio > 0.3);
    CHECK(ratio < 0.75);
}

TEST_CASE("fidelity estimate tracks the white-noise grid") {
    CanonicalResource res = canonical_resource(ResourceId::linear5());
    Rng rng(43);
    const std::uint64_t shots = 2000;
    const int reps = 12;
    for (double p : {0.25, 0.55, 0.85}) {
        double acc = 0.0;
        std::vector<double> vals;
        for (int t = 0; t < reps; ++t) {
            std::map<MeasurementSetting, SettingCounts> counts;
            for (const auto& s : linear5_settings()) {
                SettingCounts cell;
                for (std::uint64_t k = 0; k < shots; ++k) {
                    StateVector st = res.state;
                    apply_noise_trajectory(st, NoiseSpec::white(p), rng);
                    for (const auto& [outcome, c] :
                         simulate_setting_counts(st, s, 1, rng)) {
                        cell[outcome] += c;
                    }
                }
                counts[s] = std::move(cell);
            }
            const double v = fidelity_from_counts(res.graph, counts, 1, rng).value;
            acc += v;
            vals.push_back(v);
        }
        const double mean = acc / reps;
        const double expect = white_noise_fidelity(p, 5);
        const double sem = stddev(vals) / std::sqrt(static_cast<double>(reps)) + 1e-6;
        CHECK(std::abs(mean - expect) < 5 * sem);
    }
}
