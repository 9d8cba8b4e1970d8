#include "simonsim/spnn.hpp"

#include <algorithm>
#include <numbers>
#include <set>

namespace simonsim {

SpnnResource build_spnn_resource(int n) {
    if (n < 2) throw DomainError("SP_nn needs n >= 2");
    if (n > 64) throw CapacityError("SP_nn graph construction limited to n <= 64");
    const int num_vertices = n * n + n + 1;
    SpnnResource r;
    r.n = n;
    r.graph = Graph(num_vertices);
    for (int q = 1; q <= n; ++q) {
        r.graph.set_role(q, VertexRole::Query);
        r.query_vertices.push_back(q);
    }
    for (int a = n + 1; a <= 2 * n; ++a) {
        r.graph.set_role(a, VertexRole::Ancilla);
        r.ancilla_vertices.push_back(a);
    }
    int v = 2 * n;
    auto add_bridge = [&](int i, int j) {
        ++v;
        r.graph.set_role(v, VertexRole::Bridge);
        r.graph.add_edge(i, v);
        r.graph.add_edge(v, n + j);
        r.bridge_map[{i, j}] = v;
    };
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n - 1; ++j) add_bridge(i, j);
    }
    add_bridge(n, n);
    return r;
}

namespace {

void check_selection(int n, const SpnnSelection& sel) {
    if (static_cast<int>(sel.flips.size()) != n) throw DomainError("flip mask length mismatch");
    if (!sel.period) return;
    if (static_cast<int>(sel.period->size()) != n) throw DomainError("period length mismatch");
    bool nonzero = false;
    for (int b : *sel.period) {
        if (b != 0 && b != 1) throw DomainError("period bits must be 0/1");
        nonzero = nonzero || b;
    }
    if (!nonzero) throw DomainError("2-1 selection needs a nonzero period");
}

}  // namespace

std::vector<std::pair<int, int>> selection_cnots(int n, const SpnnSelection& sel) {
    check_selection(n, sel);
    std::vector<std::pair<int, int>> cnots;
    if (!sel.period) {
        for (int l = 1; l <= n; ++l) cnots.emplace_back(l, l == n ? n : l);
        return cnots;
    }
    std::vector<int> ones;
    for (int i = 0; i < n; ++i) {
        if ((*sel.period)[i]) ones.push_back(i + 1);
    }
    // Pairwise checks chained through the 1-positions: check t compares
    // queries ones[t], ones[t+1] into ancilla ones[t].
    for (std::size_t t = 0; t + 1 < ones.size(); ++t) {
        cnots.emplace_back(ones[t], ones[t]);
        cnots.emplace_back(ones[t + 1], ones[t]);
    }
    // Direct copies for the 0-positions.
    for (int l = 1; l <= n; ++l) {
        if (!(*sel.period)[l - 1]) cnots.emplace_back(l, l);
    }
    return cnots;
}

std::vector<int> selection_function_table(int n, const SpnnSelection& sel) {
    check_selection(n, sel);
    auto cnots = selection_cnots(n, sel);
    int flips = 0;
    for (int b : sel.flips) flips = (flips << 1) | (b ? 1 : 0);
    std::vector<int> table(std::size_t{1} << n);
    for (int x = 0; x < (1 << n); ++x) {
        int z = 0;
        for (auto [i, j] : cnots) {
            const int xi = (x >> (n - i)) & 1;
            z ^= xi << (n - j);
        }
        table[x] = z ^ flips;
    }
    return table;
}

Pattern compile_selection(const SpnnResource& r, const SpnnSelection& sel) {
    const int n = r.n;
    check_selection(n, sel);
    std::set<int> active;
    for (auto [i, j] : selection_cnots(n, sel)) {
        auto it = r.bridge_map.find({i, j});
        if (it == r.bridge_map.end()) throw DomainError("selection uses a missing bridge");
        if (!active.insert(it->second).second) {
            throw DomainError("selection activates a bridge twice");
        }
    }

    Pattern p;
    p.resource = ResourceId::spnn(n);
    const MeasurementBasis b = MeasurementBasis::equatorial(std::numbers::pi / 2.0);
    const MeasurementBasis z = MeasurementBasis::computational();
    for (const auto& [pair, v] : r.bridge_map) {
        p.steps.push_back({v, active.count(v) ? b : z});
    }
    std::sort(p.steps.begin(), p.steps.end(),
              [](const Step& a, const Step& c) { return a.qubit < c.qubit; });

    // Feed-forward per wire vertex: X exponent is the XOR of all adjacent
    // bridge outcomes; the rotation depends only on the number of adjacent
    // *active* bridges (0 -> zeta, 1 -> chi, 2 -> chi_tilde; queries pick up
    // the +pi shift through chi's role-dependent sign).
    for (int w = 1; w <= 2 * n; ++w) {
        FeedForwardRule rule;
        rule.target = w;
        std::size_t n_active = 0;
        for (int u : r.graph.neighbors(w)) {
            rule.sources.push_back(u);
            if (active.count(u)) ++n_active;
        }
        switch (n_active) {
            case 0: rule.form = FFForm::Zeta; break;
            case 1: rule.form = FFForm::Chi; break;
            case 2: rule.form = FFForm::ChiTilde; break;
            default:
                throw DomainError("wire vertex with more than two active bridges");
        }
        if (rule.sources.empty()) rule.form = FFForm::Hadamard;
        p.rules.push_back(std::move(rule));
    }
    for (int q = 1; q <= n; ++q) p.output_qubits.push_back(q);
    return p;
}

SampleSet run_spnn(const SpnnResource& r, const SpnnSelection& sel, std::uint64_t shots,
                   Rng& rng) {
    if (r.graph.num_vertices() > kMaxQubits) {
        throw CapacityError("SP_nn statevector simulation limited to n <= 4");
    }
    if (shots < 1) throw DomainError("shots must be >= 1");
    Pattern p = compile_selection(r, sel);
    CanonicalResource res{r.graph, build_cluster(r.graph)};
    SampleSet out;
    out.n = r.n;
    for (std::uint64_t i = 0; i < shots; ++i) {
        out.add(run_pattern(res, p, rng).y);
    }
    return out;
}

}  // namespace simonsim
