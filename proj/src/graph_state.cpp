#include "simonsim/graph_state.hpp"

#include <algorithm>
#include <sstream>

#include "simonsim/spnn.hpp"

namespace simonsim {

std::string role_name(VertexRole r) {
    switch (r) {
        case VertexRole::Query: return "query";
        case VertexRole::Ancilla: return "ancilla";
        case VertexRole::Bridge: return "bridge";
        case VertexRole::Detached: return "detached";
    }
    return "?";
}

Graph::Graph(int num_vertices) : num_vertices_(num_vertices) {
    if (num_vertices < 1) throw DomainError("graph needs at least one vertex");
}

void Graph::check_vertex(int v) const {
    if (v < 1 || v > num_vertices_) {
        throw DomainError("vertex " + std::to_string(v) + " out of range [1, " +
                          std::to_string(num_vertices_) + "]");
    }
}

void Graph::add_edge(int a, int b) {
    check_vertex(a);
    check_vertex(b);
    if (a == b) throw DomainError("self-loops are not allowed");
    if (a > b) std::swap(a, b);
    if (has_edge(a, b)) throw DomainError("duplicate edge");
    edges_.emplace_back(a, b);
}

bool Graph::has_edge(int a, int b) const {
    if (a > b) std::swap(a, b);
    return std::find(edges_.begin(), edges_.end(), std::make_pair(a, b)) != edges_.end();
}

std::vector<int> Graph::neighbors(int v) const {
    check_vertex(v);
    std::vector<int> out;
    for (auto [a, b] : edges_) {
        if (a == v) out.push_back(b);
        if (b == v) out.push_back(a);
    }
    std::sort(out.begin(), out.end());
    return out;
}

void Graph::set_role(int v, VertexRole role) {
    check_vertex(v);
    roles_[v] = role;
}

std::optional<VertexRole> Graph::role(int v) const {
    auto it = roles_.find(v);
    if (it == roles_.end()) return std::nullopt;
    return it->second;
}

PauliString Graph::stabilizer_generator(int v) const {
    check_vertex(v);
    PauliString p = PauliString::identity(static_cast<std::size_t>(num_vertices_));
    p.letters[v - 1] = PauliLetter::X;
    for (int u : neighbors(v)) p.letters[u - 1] = PauliLetter::Z;
    return p;
}

StateVector build_cluster(const Graph& g) {
    if (g.num_vertices() > kMaxQubits) throw CapacityError("cluster too large for statevector");
    StateVector state = StateVector::plus_state(g.num_vertices());
    for (auto [a, b] : g.edges()) state.apply_cz(a - 1, b - 1);
    return state;
}

std::vector<PauliString> stabilizer_group(const Graph& g) {
    const int n = g.num_vertices();
    if (n > 12) throw CapacityError("stabilizer group enumeration limited to 12 vertices");
    std::vector<PauliString> gens;
    gens.reserve(n);
    for (int v = 1; v <= n; ++v) gens.push_back(g.stabilizer_generator(v));
    std::vector<PauliString> group;
    group.reserve(std::size_t{1} << n);
    for (std::uint64_t subset = 0; subset < (std::uint64_t{1} << n); ++subset) {
        PauliString p = PauliString::identity(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) {
            if (subset & (std::uint64_t{1} << v)) p = multiply(p, gens[v]);
        }
        group.push_back(std::move(p));
    }
    return group;
}

std::string ResourceId::name() const {
    switch (kind) {
        case Kind::LinearCluster5: return "linear5";
        case Kind::SixQubitSP22: return "sp22-6";
        case Kind::EightQubitSP22: return "sp22-8";
        case Kind::Spnn: return "spnn:" + std::to_string(n);
    }
    return "?";
}

ResourceId ResourceId::from_name(const std::string& name) {
    if (name == "linear5") return linear5();
    if (name == "sp22-6") return six_qubit();
    if (name == "sp22-8") return eight_qubit();
    if (name.rfind("spnn:", 0) == 0) {
        int n = std::stoi(name.substr(5));
        return spnn(n);
    }
    throw DomainError("unknown resource id '" + name + "'");
}

Graph canonical_graph(const ResourceId& id) {
    switch (id.kind) {
        case ResourceId::Kind::LinearCluster5: {
            Graph g(5);
            for (int v = 1; v < 5; ++v) g.add_edge(v, v + 1);
            g.set_role(1, VertexRole::Query);
            g.set_role(3, VertexRole::Ancilla);
            g.set_role(5, VertexRole::Query);
            g.set_role(2, VertexRole::Bridge);
            g.set_role(4, VertexRole::Bridge);
            return g;
        }
        case ResourceId::Kind::SixQubitSP22: {
            Graph g(6);
            for (int v = 1; v < 5; ++v) g.add_edge(v, v + 1);
            g.set_role(1, VertexRole::Query);
            g.set_role(5, VertexRole::Query);
            g.set_role(3, VertexRole::Ancilla);
            g.set_role(6, VertexRole::Ancilla);  // also detached; ancilla wins for FF roles
            g.set_role(2, VertexRole::Bridge);
            g.set_role(4, VertexRole::Bridge);
            return g;
        }
        case ResourceId::Kind::EightQubitSP22: {
            Graph g(8);
            g.add_edge(1, 2);
            g.add_edge(2, 3);
            g.add_edge(3, 4);
            g.add_edge(4, 5);
            g.add_edge(5, 7);
            g.add_edge(7, 6);
            g.add_edge(6, 8);
            g.add_edge(8, 1);
            g.set_role(1, VertexRole::Query);
            g.set_role(5, VertexRole::Query);
            g.set_role(3, VertexRole::Ancilla);
            g.set_role(6, VertexRole::Ancilla);
            for (int b : {2, 4, 7, 8}) g.set_role(b, VertexRole::Bridge);
            return g;
        }
        case ResourceId::Kind::Spnn:
            return build_spnn_resource(id.n).graph;
    }
    throw DomainError("unknown resource kind");
}

CanonicalResource canonical_resource(const ResourceId& id) {
    Graph g = canonical_graph(id);
    if (g.num_vertices() > kMaxQubits) {
        throw CapacityError("resource too large to simulate");
    }
    StateVector state = build_cluster(g);
    return CanonicalResource{std::move(g), std::move(state)};
}

std::string to_dot(const Graph& g, const std::string& name) {
    std::ostringstream out;
    out << "graph " << name << " {\n";
    for (int v = 1; v <= g.num_vertices(); ++v) {
        out << "  q" << v;
        auto r = g.role(v);
        if (r) {
            const char* color = "gray";
            switch (*r) {
                case VertexRole::Query: color = "lightblue"; break;
                case VertexRole::Ancilla: color = "lightgreen"; break;
                case VertexRole::Bridge: color = "orange"; break;
                case VertexRole::Detached: color = "gray"; break;
            }
            out << " [role=" << role_name(*r) << ", style=filled, fillcolor=" << color << "]";
        }
        out << ";\n";
    }
    for (auto [a, b] : g.edges()) {
        out << "  q" << a << " -- q" << b << ";\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace simonsim
