#pragma once

#include "qcut/circuit.hpp"

#include <vector>

namespace qcut {

/// Directed edge: `to` is the next gate touching `qubit` after `from`.
struct DagEdge {
    int from = -1;
    int to = -1;
    int qubit = -1;

    bool operator==(const DagEdge&) const = default;
};

/// Graph view of a circuit: one node per gate, per-qubit successor edges.
/// Nodes are indexed by gate id (dense by construction).
struct CircuitDag {
    int n_qubits = 0;
    std::string name;
    std::vector<Gate> nodes;
    std::vector<DagEdge> edges;

    /// Edges leaving / entering a node, in insertion order.
    std::vector<DagEdge> out_edges(int id) const;
    std::vector<DagEdge> in_edges(int id) const;

    bool has_edge(int from, int to, int qubit) const;
};

CircuitDag to_dag(const Circuit& c);

/// Topological linearization with per-qubit gate order preserved; ties broken
/// by original gate id so the result is deterministic. Throws Error if the
/// graph contains a cycle (corrupted input).
Circuit from_dag(const CircuitDag& d);

} // namespace qcut
