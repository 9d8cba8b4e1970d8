#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "paper_literals.hpp"
#include "simonsim/mbqc.hpp"
#include "simonsim/simon.hpp"

using namespace simonsim;

namespace {

double lit_overlap(const literals::Ket& lit, const StateVector& st) {
    return literals::overlap(lit, st.amplitudes());
}

}  // namespace

TEST_CASE("resolve_feedforward gate sequences") {
    Graph g = canonical_graph(ResourceId::six_qubit());

    // ancilla target: chi = X^e H Rz(-pi/2)
    FeedForwardRule chi3{3, FFForm::Chi, {2, 4}};
    auto r0 = resolve_feedforward({chi3}, {{2, 0}, {4, 0}}, g);
    REQUIRE(r0.size() == 1);
    REQUIRE(r0[0].gates.size() == 2);
    CHECK(r0[0].gates[0].gate == Gate::Rz);
    CHECK(r0[0].gates[0].alpha == doctest::Approx(-std::numbers::pi / 2));
    CHECK(r0[0].gates[1].gate == Gate::H);

    auto r1 = resolve_feedforward({chi3}, {{2, 1}, {4, 0}}, g);
    REQUIRE(r1[0].gates.size() == 3);
    CHECK(r1[0].gates[2].gate == Gate::X);

    // query target: rotation sign flips (see decisions ledger)
    FeedForwardRule chi1{1, FFForm::Chi, {2, 0}};
    auto rq = resolve_feedforward({chi1}, {{2, 0}}, g);
    CHECK(rq[0].gates[0].alpha == doctest::Approx(std::numbers::pi / 2));

    // zeta with s_4 = 1: H applied first, then X (operator X^e H)
    FeedForwardRule zeta5{5, FFForm::Zeta, {0, 4}};
    auto rz = resolve_feedforward({zeta5}, {{4, 1}}, g);
    REQUIRE(rz[0].gates.size() == 2);
    CHECK(rz[0].gates[0].gate == Gate::H);
    CHECK(rz[0].gates[1].gate == Gate::X);

    CHECK_THROWS_AS(resolve_feedforward({chi3}, {{2, 0}}, g), DomainError);
}

TEST_CASE("pattern validation") {
    Graph g = canonical_graph(ResourceId::six_qubit());
    Pattern p = bb_catalog("s01", 0).pattern;
    CHECK_NOTHROW(validate_pattern(p, g));

    Pattern dup = p;
    dup.steps.push_back(dup.steps[0]);
    CHECK_THROWS_AS(validate_pattern(dup, g), DomainError);

    Pattern bad_src = p;
    bad_src.rules[0].sources = {3, 0};  // qubit 3 is never a step
    CHECK_THROWS_AS(validate_pattern(bad_src, g), DomainError);

    Pattern bad_out = p;
    bad_out.output_qubits.push_back(2);  // already measured
    CHECK_THROWS_AS(validate_pattern(bad_out, g), DomainError);
}

TEST_CASE("forced branches reproduce Eq. 2, Eq. S6, Eq. S7") {
    CanonicalResource res = canonical_resource(ResourceId::six_qubit());
    const std::map<int, int> zeros = {{2, 0}, {4, 0}};

    double prob = 0.0;
    StateVector s01 = prereadout_state(res, bb_catalog("s01", 0).pattern, zeros, &prob);
    CHECK(lit_overlap(literals::eq2_state(), s01) == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(prob == doctest::Approx(0.25).epsilon(1e-10));
    auto d01 = readout_distribution(s01, {1, 5});
    CHECK(d01["00"] == doctest::Approx(0.5).epsilon(1e-10));
    CHECK(d01["10"] == doctest::Approx(0.5).epsilon(1e-10));

    StateVector s10 = prereadout_state(res, bb_catalog("s10", 0).pattern, zeros, nullptr);
    CHECK(lit_overlap(literals::eqS6_state(), s10) == doctest::Approx(1.0).epsilon(1e-10));
    auto d10 = readout_distribution(s10, {1, 5});
    CHECK(d10["00"] == doctest::Approx(0.5).epsilon(1e-10));
    CHECK(d10["01"] == doctest::Approx(0.5).epsilon(1e-10));

    StateVector s11 = prereadout_state(res, bb_catalog("s11", 0).pattern, zeros, nullptr);
    CHECK(lit_overlap(literals::eqS7_state(), s11) == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("branch enumeration: completeness and feed-forward invariance") {
    CanonicalResource res = canonical_resource(ResourceId::six_qubit());
    for (const char* id : {"s01", "s10", "s11"}) {
        auto branches = enumerate_branches(res, bb_catalog(id, 0).pattern);
        CHECK(branches.size() == 4);
        double total = 0.0;
        for (const auto& b : branches) total += b.prob;
        CHECK(total == doctest::Approx(1.0).epsilon(1e-10));
        for (const auto& b : branches) {
            CHECK(total_variation(b.ydist, branches[0].ydist) < 1e-10);
        }
    }
}

TEST_CASE("empty pattern is a single certain branch") {
    CanonicalResource res = canonical_resource(ResourceId::linear5());
    Pattern p;
    p.resource = ResourceId::linear5();
    p.output_qubits = {1};
    auto branches = enumerate_branches(res, p);
    REQUIRE(branches.size() == 1);
    CHECK(branches[0].prob == doctest::Approx(1.0));
}

TEST_CASE("forced mode is deterministic") {
    CanonicalResource res = canonical_resource(ResourceId::six_qubit());
    Pattern p = bb_catalog("s11", 0).pattern;
    const std::map<int, int> forced = {{2, 1}, {4, 0}};
    StateVector a = prereadout_state(res, p, forced, nullptr);
    StateVector b = prereadout_state(res, p, forced, nullptr);
    for (std::uint64_t i = 0; i < a.dim(); ++i) {
        CHECK(a.amplitudes()[i] == b.amplitudes()[i]);
    }
}

TEST_CASE("feed-forward as basis change") {
    // Measuring computationally after Rz(theta) then H equals measuring in
    // the equatorial basis B(-theta).
    Rng rng(17);
    for (int t = 0; t < 10; ++t) {
        StateVector st = new_plus_state(2);
        st.apply_rz(0, rng.next_double() * 3.0);
        st.apply_cz(0, 1);
        st.apply_rz(1, rng.next_double() * 2.0);
        const double theta = rng.next_double() * 6.0 - 3.0;
        const double direct = st.outcome0_probability(0, MeasurementBasis::equatorial(-theta));
        StateVector rotated = st;
        rotated.apply_rz(0, theta);
        rotated.apply_h(0);
        const double via_gates =
            rotated.outcome0_probability(0, MeasurementBasis::computational());
        CHECK(via_gates == doctest::Approx(direct).epsilon(1e-10));
    }
}

TEST_CASE("sampled runs match the ideal split") {
    CanonicalResource res = canonical_resource(ResourceId::six_qubit());
    Pattern p = bb_catalog("s01", 0).pattern;
    Rng rng(4);
    const int shots = 100000;
    std::map<std::string, int> counts;
    for (int i = 0; i < shots; ++i) ++counts[run_pattern(res, p, rng).y];
    const double sigma = std::sqrt(0.25 / shots);
    CHECK(std::abs(counts["00"] / static_cast<double>(shots) - 0.5) < 5 * sigma);
    CHECK(std::abs(counts["10"] / static_cast<double>(shots) - 0.5) < 5 * sigma);
    CHECK(counts.count("01") == 0);
    CHECK(counts.count("11") == 0);
}

TEST_CASE("outcome record covers feed-forward targets") {
    CanonicalResource res = canonical_resource(ResourceId::six_qubit());
    Rng rng(8);
    OutcomeRecord rec = run_pattern(res, bb_catalog("s01", 0).pattern, rng);
    for (int q : {1, 2, 3, 4, 5, 6}) CHECK(rec.outcomes.count(q) == 1);
    CHECK(rec.y.size() == 2);
    CHECK(rec.branch_prob > 0.0);
}

TEST_CASE("pattern JSON round trip") {
    for (const char* id : {"s01", "s11", "a8", "o8"}) {
        Pattern p = bb_catalog(id, 0).pattern;
        const std::string text = pattern_to_json(p);
        Pattern back = pattern_from_json(text);
        CHECK(back == p);
        CHECK(pattern_to_json(back) == text);  // bit-exact round trip
    }
    CHECK_THROWS_AS(pattern_from_json("{\"resource\":\"nope\"}"), DomainError);
}
