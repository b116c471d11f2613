#pragma once

#include "qcut/cutgraph.hpp"

#include <cstdint>
#include <string_view>
#include <vector>

namespace qcut {

enum class PartitionMethod { KernighanLin, GirvanNewman, Spectral, Multilevel };

/// Accepts "kl", "gn", "spectral", "multilevel"; throws ConfigError otherwise.
PartitionMethod parse_partition_method(std::string_view name);
const char* partition_method_name(PartitionMethod m);

struct Partition {
    PartitionMethod method = PartitionMethod::KernighanLin;
    std::vector<int> assignment;  // node -> dense component id

    int component_count() const;
};

/// Partitions `g` into `target_components` node groups.
///
///   KL          gain-driven pair swaps on a balanced bisection, applied
///               recursively for more than two components
///   GN          repeated removal of the highest-betweenness edge until the
///               component count is reached
///   SPECTRAL    recursive Fiedler-vector sign split; the eigenpair comes
///               from deflated power iteration on the graph Laplacian
///   MULTILEVEL  heavy-edge-matching coarsening, greedy initial partition,
///               KL refinement while uncoarsening
///
/// Deterministic for a fixed seed. Disconnected graphs are handled by
/// grouping or splitting whole natural components as needed.
Partition partition(const CutGraph& g, PartitionMethod method, int target_components,
                    std::uint64_t seed);

/// Total weight of edges whose endpoints sit in different components.
int crossing_weight(const CutGraph& g, const std::vector<int>& assignment);

/// Size of the largest component, in nodes.
int max_block_size(const std::vector<int>& assignment);

/// Natural connected components of the graph, as a dense assignment.
std::vector<int> connected_components(const CutGraph& g);

} // namespace qcut
