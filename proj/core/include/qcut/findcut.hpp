#pragma once

#include "qcut/cutgraph.hpp"
#include "qcut/cutting.hpp"
#include "qcut/partition.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace qcut {

struct LossWeights {
    double alpha = 1.0;   // cut count
    double beta = 0.1;    // component count (entered negated: more is better)
    double gamma = 0.5;   // largest fragment width
};

struct Constraints {
    std::optional<int> max_qubits;
    std::optional<int> max_components;
    std::optional<int> max_cuts;
    bool wire_cut = true;
    bool gate_cut = true;
    LossWeights weights;
};

struct CandidateStats {
    int cut_weight = 0;
    int components = 0;
    int max_fragment_qubits = 0;
};

/// Loss = alpha * cuts + beta * (-components) + gamma * max fragment qubits.
/// Lower is better.
double loss(const CandidateStats& stats, const LossWeights& w);

/// Greedy single-node moves between blocks while the loss improves, keeping
/// every block non-empty (component count fixed). Balanced bisections miss
/// optima that peel off weakly attached nodes; this closes that gap before
/// candidates are scored. Deterministic.
void refine_partition_by_loss(const CutGraph& g, std::vector<int>& assignment,
                              const LossWeights& w);

/// One evaluated (mode, method, component-count) candidate.
struct Candidate {
    GraphMode mode = GraphMode::Gate;
    PartitionMethod method = PartitionMethod::KernighanLin;
    int target_components = 2;
    std::vector<int> assignment;
    std::vector<CutPoint> cuts;
    CandidateStats stats;       // graph-level, feeds the loss
    int plan_fragments = 0;     // realized by apply_cuts
    int plan_max_qubits = 0;
    double loss_value = 0.0;
    bool feasible = false;
    std::string reject_reason;  // populated when infeasible
    std::int64_t wall_us = 0;
};

struct FindCutResult {
    CutPlan plan;               // winning candidate applied to the circuit
    Candidate winner;
    std::vector<Candidate> candidates;  // the whole search table
    std::int64_t search_wall_us = 0;
};

/// Searches gate and/or wire cut graphs with all four partitioning methods
/// over candidate component counts 2..max_components (default 4), evaluating
/// candidates concurrently, and returns the feasible candidate with the
/// lowest loss. Ties break on fewer cuts, then smaller max fragment, then
/// method order kl < gn < spectral < multilevel, then enumeration order.
/// Throws InfeasibleError naming the binding constraint when nothing passes
/// the hard filters.
FindCutResult find_cut(const Circuit& c, const Constraints& constraints,
                       std::uint64_t seed = 0);

} // namespace qcut
