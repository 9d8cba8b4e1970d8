#include "simonsim/simon.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <numeric>
#include <set>

namespace simonsim {

namespace {

const MeasurementBasis kB = MeasurementBasis::equatorial(std::numbers::pi / 2.0);
const MeasurementBasis kZ = MeasurementBasis::computational();

struct SixProgram {
    const char* id;
    const char* period;
    std::array<int, 4> table;
    MeasurementBasis m2, m4;
    FFForm f1, f5;  // f3 varies with the program, f6 is always Hadamard
    FFForm f3;
};

const SixProgram kSixPrograms[] = {
    {"s01", "01", {0, 0, 2, 2}, kB, kZ, FFForm::Chi, FFForm::Zeta, FFForm::Chi},
    {"s10", "10", {0, 2, 0, 2}, kZ, kB, FFForm::Zeta, FFForm::Chi, FFForm::Chi},
    {"s11", "11", {0, 2, 2, 0}, kB, kB, FFForm::Chi, FFForm::Chi, FFForm::ChiTilde},
};

struct EightProgram {
    char letter;
    const char* period;  // nullptr = one-to-one
    std::array<int, 4> table;
    // bases for bridge qubits 2, 4, 7, 8 (true = B(pi/2), false = computational)
    std::array<bool, 4> bridge_b;
    std::array<FFForm, 4> forms;  // targets 1, 3, 5, 6
};

constexpr FFForm C = FFForm::Chi;
constexpr FFForm T = FFForm::ChiTilde;
constexpr FFForm ZE = FFForm::Zeta;

const EightProgram kEightPrograms[] = {
    {'a', nullptr, {0, 1, 2, 3}, {true, false, true, false}, {C, C, C, C}},
    {'b', nullptr, {0, 1, 3, 2}, {true, false, true, true}, {T, C, C, T}},
    {'c', nullptr, {0, 3, 2, 1}, {true, true, true, false}, {C, T, T, C}},
    {'d', nullptr, {0, 2, 1, 3}, {false, true, false, true}, {C, C, C, C}},
    {'e', nullptr, {0, 2, 3, 1}, {true, true, false, true}, {T, T, C, C}},
    {'f', nullptr, {0, 3, 1, 2}, {false, true, true, true}, {C, C, T, T}},
    {'g', "01", {0, 0, 1, 1}, {false, false, false, true}, {C, ZE, ZE, C}},
    {'h', "01", {0, 0, 2, 2}, {true, false, false, false}, {C, C, ZE, ZE}},
    {'i', "01", {0, 0, 3, 3}, {true, false, false, true}, {T, C, ZE, C}},
    {'j', "10", {0, 1, 0, 1}, {false, false, true, false}, {ZE, ZE, C, C}},
    {'k', "10", {0, 2, 0, 2}, {false, true, false, false}, {ZE, C, C, ZE}},
    {'l', "10", {0, 3, 0, 3}, {false, true, true, false}, {ZE, C, T, C}},
    {'m', "11", {0, 1, 1, 0}, {false, false, true, true}, {C, C, C, T}},
    {'n', "11", {0, 2, 2, 0}, {true, true, false, false}, {C, T, C, ZE}},
    {'o', "11", {0, 3, 3, 0}, {true, true, true, true}, {T, T, T, T}},
};

Pattern six_pattern(const SixProgram& p) {
    Pattern pat;
    pat.resource = ResourceId::six_qubit();
    pat.steps = {{2, p.m2}, {4, p.m4}};
    pat.rules = {
        {1, p.f1, {2, 0}},
        {3, p.f3, {2, 4}},
        {5, p.f5, {0, 4}},
        {6, FFForm::Hadamard, {}},
    };
    pat.output_qubits = {1, 5};
    return pat;
}

Pattern eight_pattern(const EightProgram& p) {
    Pattern pat;
    pat.resource = ResourceId::eight_qubit();
    const int bridges[4] = {2, 4, 7, 8};
    for (int i = 0; i < 4; ++i) {
        pat.steps.push_back({bridges[i], p.bridge_b[i] ? kB : kZ});
    }
    pat.rules = {
        {1, p.forms[0], {2, 8}},
        {3, p.forms[1], {2, 4}},
        {5, p.forms[2], {7, 4}},
        {6, p.forms[3], {8, 7}},
    };
    pat.output_qubits = {1, 5};
    return pat;
}

std::string canonical_id(const std::string& bb_id) {
    if (bb_id == "h") return "s01";
    if (bb_id == "k") return "s10";
    if (bb_id == "n") return "s11";
    if (bb_id.size() == 1 && bb_id[0] >= 'a' && bb_id[0] <= 'o') return bb_id + "8";
    return bb_id;
}

std::string bits2(int v) {
    std::string s(2, '0');
    if (v & 2) s[0] = '1';
    if (v & 1) s[1] = '1';
    return s;
}

}  // namespace

SimonInstance bb_catalog(const std::string& bb_id, int flips) {
    if (flips < 0 || flips > 3) throw DomainError("flip mask must be a 2-bit value");
    const std::string id = canonical_id(bb_id);
    SimonInstance inst;
    inst.bb_id = id;
    inst.flips = flips;
    for (const SixProgram& p : kSixPrograms) {
        if (id == p.id) {
            inst.period = p.period;
            inst.table = p.table;
            inst.pattern = six_pattern(p);
            for (int& v : inst.table) v ^= flips;
            return inst;
        }
    }
    if (id.size() == 2 && id[1] == '8' && id[0] >= 'a' && id[0] <= 'o') {
        const EightProgram& p = kEightPrograms[id[0] - 'a'];
        if (p.period != nullptr) inst.period = p.period;
        inst.table = p.table;
        inst.pattern = eight_pattern(p);
        for (int& v : inst.table) v ^= flips;
        return inst;
    }
    throw DomainError("unknown black box id '" + bb_id + "'");
}

std::vector<std::string> all_bb_ids() {
    std::vector<std::string> out = {"s01", "s10", "s11"};
    for (char c = 'a'; c <= 'o'; ++c) out.push_back(std::string(1, c) + "8");
    return out;
}

SampleSet run_simon_mbqc(const SimonInstance& inst, std::uint64_t shots, Rng& rng) {
    if (shots < 1) throw DomainError("shots must be >= 1");
    CanonicalResource res = canonical_resource(inst.pattern.resource);
    SampleSet out;
    out.n = static_cast<int>(inst.pattern.output_qubits.size());
    for (std::uint64_t i = 0; i < shots; ++i) {
        out.add(run_pattern(res, inst.pattern, rng).y);
    }
    return out;
}

std::map<std::string, double> circuit_model_reference(int n, const std::vector<int>& table) {
    if (static_cast<int>(table.size()) != (1 << n)) {
        throw DomainError("function table must have 2^n entries");
    }
    for (int v : table) {
        if (v < 0 || v >= (1 << n)) throw DomainError("function value out of range");
    }
    StateVector st = StateVector::basis_state(2 * n, 0);
    auto& amps = st.amplitudes();
    std::fill(amps.begin(), amps.end(), Complex(0.0, 0.0));
    const double w = std::pow(2.0, -n / 2.0);
    for (int x = 0; x < (1 << n); ++x) {
        amps[(static_cast<std::uint64_t>(x) << n) | table[x]] += w;
    }
    for (int q = 0; q < n; ++q) st.apply_h(q);
    std::vector<int> outputs(n);
    std::iota(outputs.begin(), outputs.end(), 1);  // query qubits 1..n
    return readout_distribution(st, outputs);
}

std::map<std::string, double> circuit_model_reference(const SimonInstance& inst) {
    return circuit_model_reference(2, {inst.table.begin(), inst.table.end()});
}

std::map<std::string, double> mbqc_branch_distribution(const SimonInstance& inst) {
    CanonicalResource res = canonical_resource(inst.pattern.resource);
    return pattern_distribution(res, inst.pattern);
}

std::string PeriodResult::str() const {
    switch (kind) {
        case Kind::Period: return s;
        case Kind::OneToOneSuspected: return "one-to-one suspected";
        case Kind::InsufficientRank: return "insufficient rank";
    }
    return "?";
}

namespace {

std::uint64_t parse_bits(const std::string& y, int n) {
    if (static_cast<int>(y.size()) != n) throw DomainError("sample length mismatch");
    std::uint64_t v = 0;
    for (char c : y) {
        if (c != '0' && c != '1') throw DomainError("sample is not a bit string");
        v = (v << 1) | (c == '1');
    }
    return v;
}

std::string format_bits(std::uint64_t v, int n) {
    std::string s(n, '0');
    for (int i = 0; i < n; ++i) {
        if ((v >> (n - 1 - i)) & 1) s[i] = '1';
    }
    return s;
}

}  // namespace

PeriodResult solve_period(const std::vector<std::string>& samples, int n) {
    if (n < 1 || n > 63) throw DomainError("n out of range");
    std::vector<std::uint64_t> rows;
    for (const std::string& y : samples) {
        std::uint64_t v = parse_bits(y, n);
        if (v != 0) rows.push_back(v);
    }
    // Row echelon form over GF(2); column 0 is the leftmost bit.
    std::vector<std::uint64_t> basis;   // pivot rows
    std::vector<int> pivot_cols;
    for (std::uint64_t row : rows) {
        for (std::size_t k = 0; k < basis.size(); ++k) {
            if ((row >> (n - 1 - pivot_cols[k])) & 1) row ^= basis[k];
        }
        if (row == 0) continue;
        int col = 0;
        while (!((row >> (n - 1 - col)) & 1)) ++col;
        basis.push_back(row);
        pivot_cols.push_back(col);
    }
    const int rank = static_cast<int>(basis.size());
    if (rank == n) {
        throw PromiseViolationError("samples span the full space: no nonzero period exists");
    }
    if (rank < n - 1) return {PeriodResult::Kind::InsufficientRank, ""};
    // Back-substitute to reduced form so each pivot row has zeros in all other
    // pivot columns, then read the null vector off the single free column.
    for (std::size_t k = 0; k < basis.size(); ++k) {
        for (std::size_t m = 0; m < basis.size(); ++m) {
            if (m != k && ((basis[m] >> (n - 1 - pivot_cols[k])) & 1)) basis[m] ^= basis[k];
        }
    }
    std::set<int> pivots(pivot_cols.begin(), pivot_cols.end());
    int free_col = 0;
    while (pivots.count(free_col)) ++free_col;
    std::uint64_t s = std::uint64_t{1} << (n - 1 - free_col);
    for (std::size_t k = 0; k < basis.size(); ++k) {
        if ((basis[k] >> (n - 1 - free_col)) & 1) {
            s |= std::uint64_t{1} << (n - 1 - pivot_cols[k]);
        }
    }
    return {PeriodResult::Kind::Period, format_bits(s, n)};
}

PeriodResult classify_period(const std::vector<std::string>& samples, int n,
                             std::size_t budget) {
    try {
        PeriodResult r = solve_period(samples, n);
        if (r.kind == PeriodResult::Kind::InsufficientRank && samples.size() >= budget) {
            return {PeriodResult::Kind::OneToOneSuspected, ""};
        }
        return r;
    } catch (const PromiseViolationError&) {
        return {PeriodResult::Kind::OneToOneSuspected, ""};
    }
}

double expected_runs_to_nonzero(const SimonInstance& inst, std::uint64_t trials, Rng& rng) {
    if (inst.one_to_one()) throw DomainError("expected_runs_to_nonzero needs a 2-1 instance");
    if (trials == 0) throw DomainError("mean over zero trials is undefined");
    CanonicalResource res = canonical_resource(inst.pattern.resource);
    const std::string zero(inst.pattern.output_qubits.size(), '0');
    std::uint64_t total_runs = 0;
    for (std::uint64_t t = 0; t < trials; ++t) {
        for (;;) {
            ++total_runs;
            if (run_pattern(res, inst.pattern, rng).y != zero) break;
        }
    }
    return static_cast<double>(total_runs) / static_cast<double>(trials);
}

namespace {

struct ClassicalInstance {
    int period;  // 2-bit value, 0 never occurs
    std::array<int, 4> table;
};

std::vector<ClassicalInstance> full_catalog() {
    const std::array<std::array<int, 4>, 3> bases = {{{0, 0, 2, 2}, {0, 2, 0, 2}, {0, 2, 2, 0}}};
    const int periods[3] = {1, 2, 3};
    std::vector<ClassicalInstance> out;
    for (int p = 0; p < 3; ++p) {
        for (int c = 0; c < 4; ++c) {
            ClassicalInstance inst{periods[p], bases[p]};
            for (int& v : inst.table) v ^= c;
            out.push_back(inst);
        }
    }
    return out;
}

Rational rat_add(Rational a, Rational b) {
    Rational r{a.num * b.den + b.num * a.den, a.den * b.den};
    long long g = std::gcd(r.num < 0 ? -r.num : r.num, r.den);
    if (g > 1) {
        r.num /= g;
        r.den /= g;
    }
    return r;
}

Rational rat_scale(Rational a, long long num, long long den) {
    Rational r{a.num * num, a.den * den};
    long long g = std::gcd(r.num < 0 ? -r.num : r.num, r.den);
    if (g > 1) {
        r.num /= g;
        r.den /= g;
    }
    return r;
}

bool rat_less(Rational a, Rational b) { return a.num * b.den < b.num * a.den; }

using Obs = std::vector<std::pair<int, int>>;  // (x, f(x)) pairs

bool period_determined(const Obs& obs, const std::vector<ClassicalInstance>& catalog) {
    std::set<int> periods;
    for (const ClassicalInstance& inst : catalog) {
        bool ok = true;
        for (auto [x, v] : obs) {
            if (inst.table[x] != v) {
                ok = false;
                break;
            }
        }
        if (ok) periods.insert(inst.period);
    }
    return periods.size() == 1;
}

Rational best_expectation(const Obs& obs, const std::vector<ClassicalInstance>& actives,
                          const std::vector<ClassicalInstance>& catalog) {
    if (actives.empty()) return {0, 1};
    if (period_determined(obs, catalog)) return {0, 1};
    std::set<int> queried;
    for (auto [x, v] : obs) queried.insert(x);
    Rational best{1000000, 1};
    for (int x = 0; x < 4; ++x) {
        if (queried.count(x)) continue;
        std::map<int, std::vector<ClassicalInstance>> groups;
        for (const ClassicalInstance& inst : actives) groups[inst.table[x]].push_back(inst);
        Rational e{1, 1};
        for (const auto& [v, g] : groups) {
            Obs next = obs;
            next.emplace_back(x, v);
            Rational sub = best_expectation(next, g, catalog);
            e = rat_add(e, rat_scale(sub, static_cast<long long>(g.size()),
                                     static_cast<long long>(actives.size())));
        }
        if (rat_less(e, best)) best = e;
    }
    return best;
}

}  // namespace

Rational classical_baseline_sp22() {
    auto catalog = full_catalog();
    return best_expectation({}, catalog, catalog);
}

Rational classical_baseline_restricted(const std::vector<int>& catalog_indices) {
    if (catalog_indices.empty()) throw DomainError("catalog subset must be non-empty");
    auto catalog = full_catalog();
    std::vector<ClassicalInstance> subset;
    for (int i : catalog_indices) {
        if (i < 0 || i >= static_cast<int>(catalog.size())) {
            throw DomainError("catalog index out of range");
        }
        subset.push_back(catalog[i]);
    }
    return best_expectation({}, subset, catalog);
}

double classical_success_bound(int n, int queries, std::uint64_t trials, Rng& rng) {
    if (n < 2 || n > 12) throw DomainError("n out of range for desk-scale Monte Carlo");
    if (queries < 1 || queries > (1 << n)) throw DomainError("query count out of range");
    if (trials == 0) throw DomainError("trials must be >= 1");
    const int size = 1 << n;
    std::uint64_t successes = 0;
    std::vector<int> f(size), outputs(size), xs(size);
    for (std::uint64_t t = 0; t < trials; ++t) {
        const int s = 1 + static_cast<int>(rng.next_below(size - 1));
        // Random 2-1 table with period s: one fresh output per {x, x^s} class.
        std::iota(outputs.begin(), outputs.end(), 0);
        for (int i = size - 1; i > 0; --i) {
            std::swap(outputs[i], outputs[rng.next_below(i + 1)]);
        }
        int next = 0;
        for (int x = 0; x < size; ++x) {
            if (x < (x ^ s)) {
                f[x] = f[x ^ s] = outputs[next++];
            }
        }
        // Random distinct queries.
        std::iota(xs.begin(), xs.end(), 0);
        for (int i = size - 1; i > 0; --i) {
            std::swap(xs[i], xs[rng.next_below(i + 1)]);
        }
        // Candidate periods consistent with the observed collision structure.
        std::vector<int> consistent;
        for (int cand = 1; cand < size; ++cand) {
            bool ok = true;
            for (int i = 0; i < queries && ok; ++i) {
                for (int j = i + 1; j < queries; ++j) {
                    const bool collide = f[xs[i]] == f[xs[j]];
                    if (collide != ((xs[i] ^ xs[j]) == cand)) {
                        ok = false;
                        break;
                    }
                }
            }
            if (ok) consistent.push_back(cand);
        }
        if (!consistent.empty() &&
            consistent[rng.next_below(consistent.size())] == s) {
            ++successes;
        }
    }
    return static_cast<double>(successes) / static_cast<double>(trials);
}

}  // namespace simonsim
