#pragma once

#include "qcut/cutting.hpp"
#include "qcut/dag.hpp"

#include <vector>

namespace qcut {

enum class GraphMode { Gate, Wire };

/// Weighted undirected search graph for the cut finder.
///
/// Gate mode: one node per qubit; an edge per interacting qubit pair,
/// weighted by the number of two-qubit gates between them.
///
/// Wire mode: one node per two-qubit gate (single-qubit gates removed); an
/// edge whenever two such gates are consecutive on some qubit, weighted by
/// the number of shared wires on which they are consecutive.
struct CutGraph {
    struct Edge {
        int a = 0;
        int b = 0;
        int weight = 1;
    };

    GraphMode mode = GraphMode::Gate;
    int n_nodes = 0;
    std::vector<Edge> edges;

    /// Gate mode: node -> qubit (identity). Wire mode: node -> gate id.
    std::vector<int> node_element;
    /// Wire mode only: per edge, the shared qubits behind its weight.
    std::vector<std::vector<int>> edge_qubits;

    int total_weight() const;
    std::vector<std::vector<std::pair<int, int>>> adjacency() const;  // (neighbor, weight)
};

/// Builds the partitioning graph for `mode`. Wire mode requires at least one
/// two-qubit gate.
CutGraph build_cut_graph(const CircuitDag& dag, GraphMode mode);

/// Converts a node-to-component assignment over `g` into concrete cut
/// points: every two-qubit gate whose qubits land in different components
/// (gate mode) or a wire cut on every shared wire between gates in different
/// components (wire mode).
std::vector<CutPoint> cuts_for_partition(const CircuitDag& dag, const CutGraph& g,
                                         const std::vector<int>& assignment);

} // namespace qcut
