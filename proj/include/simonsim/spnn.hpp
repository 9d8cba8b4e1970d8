#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "simonsim/graph_state.hpp"
#include "simonsim/mbqc.hpp"
#include "simonsim/simon.hpp"

namespace simonsim {

// Minimal SP_nn resource: queries 1..n, ancillas n+1..2n, one degree-2 bridge
// vertex per controllable CNOT (query i -> ancilla j) for every j < n plus the
// final (n, n) bridge. n^2+n+1 vertices, 2n^2-2n+2 edges.
struct SpnnResource {
    int n = 0;
    Graph graph{1};
    std::map<std::pair<int, int>, int> bridge_map;  // (query i, ancilla j) -> vertex
    std::vector<int> query_vertices;
    std::vector<int> ancilla_vertices;
};

// Selection of a black box: an n-bit period (2-1) or one-to-one, plus an
// n-bit ancilla flip mask.
struct SpnnSelection {
    std::optional<std::vector<int>> period;  // bits, MSB first; nullopt = 1-1
    std::vector<int> flips;

    static SpnnSelection one_to_one(int n) { return {std::nullopt, std::vector<int>(n, 0)}; }
    static SpnnSelection with_period(std::vector<int> bits) {
        std::vector<int> flips(bits.size(), 0);
        return {std::move(bits), std::move(flips)};
    }
};

SpnnResource build_spnn_resource(int n);

// The CNOT set (active bridges) realizing the selection: pairwise checks
// chained through the 1-positions of s, direct copies elsewhere; all n copies
// for 1-1.
std::vector<std::pair<int, int>> selection_cnots(int n, const SpnnSelection& sel);

// f(x) as a table of n-bit values indexed by x (2^n entries).
std::vector<int> selection_function_table(int n, const SpnnSelection& sel);

// Active bridges measured in B(pi/2), the rest computationally; feed-forward
// rules generated from byproduct propagation (see decisions ledger).
Pattern compile_selection(const SpnnResource& r, const SpnnSelection& sel);

SampleSet run_spnn(const SpnnResource& r, const SpnnSelection& sel, std::uint64_t shots,
                   Rng& rng);

}  // namespace simonsim
