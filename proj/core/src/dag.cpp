#include "qcut/dag.hpp"

#include "qcut/error.hpp"

#include <algorithm>
#include <queue>

namespace qcut {

std::vector<DagEdge> CircuitDag::out_edges(int id) const {
    std::vector<DagEdge> out;
    for (const DagEdge& e : edges) {
        if (e.from == id) out.push_back(e);
    }
    return out;
}

std::vector<DagEdge> CircuitDag::in_edges(int id) const {
    std::vector<DagEdge> in;
    for (const DagEdge& e : edges) {
        if (e.to == id) in.push_back(e);
    }
    return in;
}

bool CircuitDag::has_edge(int from, int to, int qubit) const {
    return std::any_of(edges.begin(), edges.end(), [&](const DagEdge& e) {
        return e.from == from && e.to == to && e.qubit == qubit;
    });
}

CircuitDag to_dag(const Circuit& c) {
    CircuitDag d;
    d.n_qubits = c.n_qubits();
    d.name = c.name();
    d.nodes = c.gates();

    std::vector<int> last_on_qubit(static_cast<std::size_t>(c.n_qubits()), -1);
    for (const Gate& g : c.gates()) {
        for (int q : g.qubits) {
            const int prev = last_on_qubit[static_cast<std::size_t>(q)];
            if (prev >= 0) d.edges.push_back({prev, g.id, q});
            last_on_qubit[static_cast<std::size_t>(q)] = g.id;
        }
    }
    return d;
}

Circuit from_dag(const CircuitDag& d) {
    const int n = static_cast<int>(d.nodes.size());
    std::vector<int> indegree(static_cast<std::size_t>(n), 0);
    std::vector<std::vector<int>> succ(static_cast<std::size_t>(n));
    for (const DagEdge& e : d.edges) {
        if (e.from < 0 || e.from >= n || e.to < 0 || e.to >= n) {
            throw Error("dag edge references unknown node");
        }
        ++indegree[static_cast<std::size_t>(e.to)];
        succ[static_cast<std::size_t>(e.from)].push_back(e.to);
    }

    // Kahn with a min-heap on gate id: deterministic, keeps per-qubit order.
    std::priority_queue<int, std::vector<int>, std::greater<>> ready;
    for (int id = 0; id < n; ++id) {
        if (indegree[static_cast<std::size_t>(id)] == 0) ready.push(id);
    }

    Circuit c(d.n_qubits, d.name);
    int emitted = 0;
    while (!ready.empty()) {
        const int id = ready.top();
        ready.pop();
        Gate g = d.nodes[static_cast<std::size_t>(id)];
        g.id = -1;  // re-assigned densely by add()
        c.add(std::move(g));
        ++emitted;
        for (int next : succ[static_cast<std::size_t>(id)]) {
            if (--indegree[static_cast<std::size_t>(next)] == 0) ready.push(next);
        }
    }
    if (emitted != n) {
        throw Error("cycle detected in circuit dag");
    }
    return c;
}

} // namespace qcut
