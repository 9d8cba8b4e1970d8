#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "simonsim/pauli.hpp"
#include "simonsim/statevector.hpp"

namespace simonsim {

enum class VertexRole : unsigned char { Query, Ancilla, Bridge, Detached };

std::string role_name(VertexRole r);

// Cluster-state resource graph. Vertices are 1-based to match the qubit
// numbering used throughout; vertex v lives on statevector qubit v-1.
class Graph {
public:
    explicit Graph(int num_vertices);

    int num_vertices() const { return num_vertices_; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    void add_edge(int a, int b);
    bool has_edge(int a, int b) const;
    std::vector<int> neighbors(int v) const;

    void set_role(int v, VertexRole role);
    std::optional<VertexRole> role(int v) const;
    const std::map<int, VertexRole>& roles() const { return roles_; }

    // K_v = X_v prod_{u in N(v)} Z_u.
    PauliString stabilizer_generator(int v) const;

private:
    void check_vertex(int v) const;

    int num_vertices_;
    std::vector<std::pair<int, int>> edges_;  // normalized a < b, insertion order
    std::map<int, VertexRole> roles_;
};

// prod_{(a,b) in edges} CZ_{a,b} |+>^n; detached vertices stay |+> factors.
StateVector build_cluster(const Graph& g);

// All 2^n signed products of the generators K_v. Requires n <= 12.
std::vector<PauliString> stabilizer_group(const Graph& g);

struct ResourceId {
    enum class Kind { LinearCluster5, SixQubitSP22, EightQubitSP22, Spnn };
    Kind kind = Kind::SixQubitSP22;
    int n = 0;  // Spnn register size

    static ResourceId linear5() { return {Kind::LinearCluster5, 0}; }
    static ResourceId six_qubit() { return {Kind::SixQubitSP22, 0}; }
    static ResourceId eight_qubit() { return {Kind::EightQubitSP22, 0}; }
    static ResourceId spnn(int n) { return {Kind::Spnn, n}; }

    std::string name() const;
    static ResourceId from_name(const std::string& name);
    bool operator==(const ResourceId&) const = default;
};

Graph canonical_graph(const ResourceId& id);

struct CanonicalResource {
    Graph graph;
    StateVector state;
};

CanonicalResource canonical_resource(const ResourceId& id);

// Graphviz export with role-coloured nodes.
std::string to_dot(const Graph& g, const std::string& name);

}  // namespace simonsim
