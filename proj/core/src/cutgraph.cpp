#include "qcut/cutgraph.hpp"

#include "qcut/error.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace qcut {

int CutGraph::total_weight() const {
    int w = 0;
    for (const Edge& e : edges) w += e.weight;
    return w;
}

std::vector<std::vector<std::pair<int, int>>> CutGraph::adjacency() const {
    std::vector<std::vector<std::pair<int, int>>> adj(static_cast<std::size_t>(n_nodes));
    for (const Edge& e : edges) {
        adj[static_cast<std::size_t>(e.a)].push_back({e.b, e.weight});
        adj[static_cast<std::size_t>(e.b)].push_back({e.a, e.weight});
    }
    return adj;
}

namespace {

std::vector<int> topo_two_qubit_ids(const CircuitDag& dag) {
    // Node ids from to_dag are already a topological order.
    std::vector<int> ids;
    for (const Gate& g : dag.nodes) {
        if (is_two_qubit(g.kind)) ids.push_back(g.id);
    }
    std::sort(ids.begin(), ids.end());
    return ids;
}

} // namespace

CutGraph build_cut_graph(const CircuitDag& dag, GraphMode mode) {
    CutGraph g;
    g.mode = mode;

    if (mode == GraphMode::Gate) {
        g.n_nodes = dag.n_qubits;
        g.node_element.resize(static_cast<std::size_t>(dag.n_qubits));
        for (int q = 0; q < dag.n_qubits; ++q) g.node_element[static_cast<std::size_t>(q)] = q;

        std::map<std::pair<int, int>, int> weight;
        for (const Gate& gate : dag.nodes) {
            if (!is_two_qubit(gate.kind)) continue;
            const int a = std::min(gate.qubits[0], gate.qubits[1]);
            const int b = std::max(gate.qubits[0], gate.qubits[1]);
            ++weight[{a, b}];
        }
        for (const auto& [pair, w] : weight) {
            g.edges.push_back({pair.first, pair.second, w});
        }
        return g;
    }

    const std::vector<int> two_qubit = topo_two_qubit_ids(dag);
    if (two_qubit.empty()) {
        throw ConfigError("wire-cut graph needs at least one two-qubit gate");
    }
    g.n_nodes = static_cast<int>(two_qubit.size());
    g.node_element = two_qubit;
    std::map<int, int> node_of;
    for (int i = 0; i < g.n_nodes; ++i) node_of[two_qubit[static_cast<std::size_t>(i)]] = i;

    // Per qubit, consecutive two-qubit gates share a wire.
    std::map<std::pair<int, int>, std::vector<int>> link_qubits;
    for (int q = 0; q < dag.n_qubits; ++q) {
        int prev = -1;
        for (int id : two_qubit) {
            const Gate& gate = dag.nodes[static_cast<std::size_t>(id)];
            if (gate.qubits[0] != q && gate.qubits[1] != q) continue;
            if (prev >= 0) {
                const int a = std::min(node_of[prev], node_of[id]);
                const int b = std::max(node_of[prev], node_of[id]);
                link_qubits[{a, b}].push_back(q);
            }
            prev = id;
        }
    }
    for (auto& [pair, qubits] : link_qubits) {
        g.edges.push_back({pair.first, pair.second, static_cast<int>(qubits.size())});
        g.edge_qubits.push_back(std::move(qubits));
    }
    return g;
}

std::vector<CutPoint> cuts_for_partition(const CircuitDag& dag, const CutGraph& g,
                                         const std::vector<int>& assignment) {
    if (static_cast<int>(assignment.size()) != g.n_nodes) {
        throw Error("partition assignment size does not match graph");
    }
    std::vector<CutPoint> cuts;

    if (g.mode == GraphMode::Gate) {
        for (const Gate& gate : dag.nodes) {
            if (!is_two_qubit(gate.kind)) continue;
            const int ca = assignment[static_cast<std::size_t>(gate.qubits[0])];
            const int cb = assignment[static_cast<std::size_t>(gate.qubits[1])];
            if (ca != cb) cuts.push_back(CutPoint::gate(gate.id));
        }
        return cuts;
    }

    // Wire mode: sever every shared wire behind a crossing edge. The cut sits
    // on the dag edge leaving the upstream gate on that qubit (any
    // single-qubit gates in between ride with the downstream side).
    auto next_on_qubit = [&dag](int from, int qubit) {
        for (const DagEdge& e : dag.edges) {
            if (e.from == from && e.qubit == qubit) return e.to;
        }
        throw Error("no successor on qubit " + std::to_string(qubit));
    };
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
        const CutGraph::Edge& e = g.edges[i];
        if (assignment[static_cast<std::size_t>(e.a)] == assignment[static_cast<std::size_t>(e.b)]) {
            continue;
        }
        // node_element ids are topologically ordered, so the smaller-index
        // node of the pair is upstream.
        const int g_up = std::min(g.node_element[static_cast<std::size_t>(e.a)],
                                  g.node_element[static_cast<std::size_t>(e.b)]);
        for (int q : g.edge_qubits[i]) {
            cuts.push_back(CutPoint::wire(g_up, next_on_qubit(g_up, q), q));
        }
    }
    return cuts;
}

} // namespace qcut
