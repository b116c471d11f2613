#include "qcut/findcut.hpp"

#include "qcut/error.hpp"
#include "qcut/rng.hpp"

#include <algorithm>
#include <chrono>
#include <future>
#include <map>
#include <set>

namespace qcut {

double loss(const CandidateStats& stats, const LossWeights& w) {
    return w.alpha * stats.cut_weight - w.beta * stats.components +
           w.gamma * stats.max_fragment_qubits;
}

namespace {

void greedy_loss_descent(const CutGraph& g, std::vector<int>& assignment,
                         const LossWeights& w) {
    const int n = g.n_nodes;
    const int k = *std::max_element(assignment.begin(), assignment.end()) + 1;
    if (k < 2) return;
    const auto adj = g.adjacency();

    std::vector<int> block_size(static_cast<std::size_t>(k), 0);
    for (int c : assignment) ++block_size[static_cast<std::size_t>(c)];
    int cut = crossing_weight(g, assignment);

    auto current_loss = [&] {
        CandidateStats stats{cut, k,
                             *std::max_element(block_size.begin(), block_size.end())};
        return loss(stats, w);
    };

    const int max_moves = 4 * n * k;
    for (int move = 0; move < max_moves; ++move) {
        const double before = current_loss();
        double best_after = before;
        int best_node = -1;
        int best_block = -1;
        for (int v = 0; v < n; ++v) {
            const int from = assignment[static_cast<std::size_t>(v)];
            if (block_size[static_cast<std::size_t>(from)] == 1) continue;
            std::vector<int> w_to(static_cast<std::size_t>(k), 0);
            for (const auto& [u, weight] : adj[static_cast<std::size_t>(v)]) {
                w_to[static_cast<std::size_t>(assignment[static_cast<std::size_t>(u)])] += weight;
            }
            for (int to = 0; to < k; ++to) {
                if (to == from) continue;
                const int new_cut = cut + w_to[static_cast<std::size_t>(from)] -
                                    w_to[static_cast<std::size_t>(to)];
                --block_size[static_cast<std::size_t>(from)];
                ++block_size[static_cast<std::size_t>(to)];
                const CandidateStats stats{
                    new_cut, k, *std::max_element(block_size.begin(), block_size.end())};
                const double after = loss(stats, w);
                ++block_size[static_cast<std::size_t>(from)];
                --block_size[static_cast<std::size_t>(to)];
                if (after < best_after - 1e-12) {
                    best_after = after;
                    best_node = v;
                    best_block = to;
                }
            }
        }
        if (best_node < 0) break;
        const int from = assignment[static_cast<std::size_t>(best_node)];
        int w_from = 0;
        int w_to = 0;
        for (const auto& [u, weight] : adj[static_cast<std::size_t>(best_node)]) {
            const int b = assignment[static_cast<std::size_t>(u)];
            if (b == from) w_from += weight;
            if (b == best_block) w_to += weight;
        }
        cut += w_from - w_to;
        --block_size[static_cast<std::size_t>(from)];
        ++block_size[static_cast<std::size_t>(best_block)];
        assignment[static_cast<std::size_t>(best_node)] = best_block;
    }
}

double assignment_loss(const CutGraph& g, const std::vector<int>& assignment,
                       const LossWeights& w) {
    const CandidateStats stats{crossing_weight(g, assignment),
                               *std::max_element(assignment.begin(), assignment.end()) + 1,
                               max_block_size(assignment)};
    return loss(stats, w);
}

} // namespace

void refine_partition_by_loss(const CutGraph& g, std::vector<int>& assignment,
                              const LossWeights& w) {
    const int k = *std::max_element(assignment.begin(), assignment.end()) + 1;
    greedy_loss_descent(g, assignment, w);

    // For bisections, gradient descent from a balanced start can miss the
    // one-node peel family entirely; check it outright.
    if (k == 2 && g.n_nodes >= 2) {
        std::vector<int> best = assignment;
        double best_loss = assignment_loss(g, assignment, w);
        for (int v = 0; v < g.n_nodes; ++v) {
            std::vector<int> peel(static_cast<std::size_t>(g.n_nodes), 0);
            peel[static_cast<std::size_t>(v)] = 1;
            greedy_loss_descent(g, peel, w);
            const double l = assignment_loss(g, peel, w);
            if (l < best_loss - 1e-12) {
                best_loss = l;
                best = std::move(peel);
            }
        }
        assignment = std::move(best);
    }
}

namespace {

/// Graph-level stat derivation. Gate mode: a block's qubit count is its node
/// count. Wire mode: the distinct qubits touched by the block's gates.
CandidateStats stats_for(const CutGraph& g, const CircuitDag& dag,
                         const std::vector<int>& assignment) {
    CandidateStats s;
    s.cut_weight = crossing_weight(g, assignment);
    s.components = *std::max_element(assignment.begin(), assignment.end()) + 1;
    if (g.mode == GraphMode::Gate) {
        s.max_fragment_qubits = max_block_size(assignment);
        return s;
    }
    std::map<int, std::set<int>> qubits_per_block;
    for (int v = 0; v < g.n_nodes; ++v) {
        const Gate& gate = dag.nodes[static_cast<std::size_t>(g.node_element[static_cast<std::size_t>(v)])];
        auto& block = qubits_per_block[assignment[static_cast<std::size_t>(v)]];
        block.insert(gate.qubits.begin(), gate.qubits.end());
    }
    for (const auto& [block, qubits] : qubits_per_block) {
        s.max_fragment_qubits =
            std::max(s.max_fragment_qubits, static_cast<int>(qubits.size()));
    }
    return s;
}

Candidate evaluate_candidate(const CircuitDag& dag, const CutGraph& graph, GraphMode mode,
                             PartitionMethod method, int k, const Constraints& cons,
                             std::uint64_t seed) {
    const auto start = std::chrono::steady_clock::now();
    Candidate cand;
    cand.mode = mode;
    cand.method = method;
    cand.target_components = k;
    try {
        Partition part = partition(graph, method, k, seed);
        refine_partition_by_loss(graph, part.assignment, cons.weights);
        cand.assignment = part.assignment;
        cand.stats = stats_for(graph, dag, part.assignment);
        cand.cuts = cuts_for_partition(dag, graph, part.assignment);
        const CutPlan plan = apply_cuts(dag, cand.cuts);
        cand.plan_fragments = plan.fragment_count();
        cand.plan_max_qubits = plan.max_fragment_qubits();
        cand.loss_value = loss(cand.stats, cons.weights);

        if (cons.max_cuts && static_cast<int>(cand.cuts.size()) > *cons.max_cuts) {
            cand.reject_reason = "max_cuts";
        } else if (cons.max_qubits && cand.plan_max_qubits > *cons.max_qubits) {
            cand.reject_reason = "max_qubits";
        } else if (cons.max_components && cand.plan_fragments > *cons.max_components) {
            cand.reject_reason = "max_components";
        } else {
            cand.feasible = true;
        }
    } catch (const std::exception& e) {
        cand.feasible = false;
        cand.reject_reason = e.what();
    }
    cand.wall_us = std::chrono::duration_cast<std::chrono::microseconds>(
                       std::chrono::steady_clock::now() - start)
                       .count();
    return cand;
}

bool better_than(const Candidate& a, const Candidate& b) {
    if (a.loss_value != b.loss_value) return a.loss_value < b.loss_value;
    if (a.cuts.size() != b.cuts.size()) return a.cuts.size() < b.cuts.size();
    if (a.plan_max_qubits != b.plan_max_qubits) return a.plan_max_qubits < b.plan_max_qubits;
    return static_cast<int>(a.method) < static_cast<int>(b.method);
}

} // namespace

FindCutResult find_cut(const Circuit& c, const Constraints& cons, std::uint64_t seed) {
    if (!cons.wire_cut && !cons.gate_cut) {
        throw ConfigError("find_cut needs at least one of wire_cut / gate_cut enabled");
    }
    const auto search_start = std::chrono::steady_clock::now();
    const CircuitDag dag = to_dag(c);

    struct Task {
        GraphMode mode;
        const CutGraph* graph;
        PartitionMethod method;
        int k;
    };

    std::vector<std::pair<GraphMode, CutGraph>> graphs;
    if (cons.gate_cut) {
        graphs.emplace_back(GraphMode::Gate, build_cut_graph(dag, GraphMode::Gate));
    }
    if (cons.wire_cut) {
        try {
            graphs.emplace_back(GraphMode::Wire, build_cut_graph(dag, GraphMode::Wire));
        } catch (const ConfigError&) {
            if (!cons.gate_cut) throw;  // wire-only search on a 1-qubit-gate circuit
        }
    }

    const int max_k = cons.max_components.value_or(4);
    static constexpr PartitionMethod kMethods[] = {
        PartitionMethod::KernighanLin, PartitionMethod::GirvanNewman,
        PartitionMethod::Spectral, PartitionMethod::Multilevel};

    std::vector<Task> tasks;
    for (const auto& [mode, graph] : graphs) {
        for (PartitionMethod method : kMethods) {
            for (int k = 2; k <= std::min(max_k, graph.n_nodes); ++k) {
                tasks.push_back({mode, &graph, method, k});
            }
        }
    }
    if (tasks.empty()) {
        throw InfeasibleError("no partition candidates: graphs too small to split");
    }

    // Candidates are independent; evaluate them concurrently.
    std::vector<std::future<Candidate>> futures;
    futures.reserve(tasks.size());
    for (std::size_t i = 0; i < tasks.size(); ++i) {
        const Task& t = tasks[i];
        futures.push_back(std::async(std::launch::async, [&, i] {
            return evaluate_candidate(dag, *tasks[i].graph, tasks[i].mode, tasks[i].method,
                                      tasks[i].k, cons, splitmix64(seed ^ (i * 0x9e37ULL)));
        }));
        (void)t;
    }

    FindCutResult result;
    int best = -1;
    for (std::size_t i = 0; i < futures.size(); ++i) {
        result.candidates.push_back(futures[i].get());
        const Candidate& cand = result.candidates.back();
        if (!cand.feasible) continue;
        if (best < 0 || better_than(cand, result.candidates[static_cast<std::size_t>(best)])) {
            best = static_cast<int>(i);
        }
    }

    if (best < 0) {
        std::map<std::string, int> reasons;
        for (const Candidate& cand : result.candidates) ++reasons[cand.reject_reason];
        std::string binding;
        int top = 0;
        for (const auto& [reason, count] : reasons) {
            if (count > top) {
                top = count;
                binding = reason;
            }
        }
        throw InfeasibleError("no feasible cut candidate; binding constraint: " + binding);
    }

    result.winner = result.candidates[static_cast<std::size_t>(best)];
    result.plan = apply_cuts(dag, result.winner.cuts);
    result.search_wall_us = std::chrono::duration_cast<std::chrono::microseconds>(
                                std::chrono::steady_clock::now() - search_start)
                                .count();
    return result;
}

} // namespace qcut
