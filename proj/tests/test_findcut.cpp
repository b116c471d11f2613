#include "qcut/findcut.hpp"

#include "qcut/error.hpp"
#include "qcut/generators.hpp"
#include "qcut/rng.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace qcut;

namespace {

/// Brute-force optimum of the loss over all assignments into at most
/// `max_blocks` components (restricted growth strings), honoring max_qubits
/// as a hard filter. Returns +inf when nothing is feasible.
double brute_force_best_loss(const CutGraph& g, int max_blocks,
                             std::optional<int> max_qubits, const LossWeights& w) {
    const int n = g.n_nodes;
    std::vector<int> assignment(static_cast<std::size_t>(n), 0);
    double best = std::numeric_limits<double>::infinity();

    auto evaluate = [&]() {
        const int blocks = *std::max_element(assignment.begin(), assignment.end()) + 1;
        if (blocks < 2) return;
        CandidateStats stats;
        stats.cut_weight = crossing_weight(g, assignment);
        stats.components = blocks;
        stats.max_fragment_qubits = max_block_size(assignment);
        if (max_qubits && stats.max_fragment_qubits > *max_qubits) return;
        best = std::min(best, loss(stats, w));
    };

    // Restricted growth string enumeration.
    std::vector<int> rgs(static_cast<std::size_t>(n), 0);
    while (true) {
        assignment = rgs;
        evaluate();
        int i = n - 1;
        for (; i > 0; --i) {
            const int cap = std::min(
                max_blocks - 1,
                *std::max_element(rgs.begin(), rgs.begin() + i) + 1);
            if (rgs[static_cast<std::size_t>(i)] < cap) break;
        }
        if (i == 0) break;
        ++rgs[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < n; ++j) rgs[static_cast<std::size_t>(j)] = 0;
    }
    return best;
}

CutGraph random_connected_graph(int n, Rng& rng) {
    CutGraph g;
    g.mode = GraphMode::Gate;
    g.n_nodes = n;
    g.node_element.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) g.node_element[static_cast<std::size_t>(i)] = i;
    for (int v = 1; v < n; ++v) {
        g.edges.push_back({static_cast<int>(rng.next_below(static_cast<std::uint64_t>(v))), v,
                           1 + static_cast<int>(rng.next_below(2))});
    }
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            if (rng.next_double() < 0.15) g.edges.push_back({a, b, 1});
        }
    }
    return g;
}

} // namespace

TEST_CASE("loss arithmetic follows the stated convention") {
    LossWeights w{1.0, 1.0, 1.0};
    CHECK(loss({1, 2, 4}, w) == doctest::Approx(1.0 - 2.0 + 4.0));
    // Positive rescaling leaves the ordering unchanged.
    const CandidateStats a{2, 2, 4};
    const CandidateStats b{3, 3, 3};
    LossWeights scaled{2.5, 2.5, 2.5};
    CHECK((loss(a, w) < loss(b, w)) == (loss(a, scaled) < loss(b, scaled)));
}

TEST_CASE("find_cut: HEA(8,1) under max_qubits=4 takes two gate cuts") {
    Constraints cons;
    cons.max_qubits = 4;
    cons.gate_cut = true;
    cons.wire_cut = false;
    const FindCutResult r = find_cut(generate_hea(8, 1, 5), cons, 1);
    CHECK(r.winner.cuts.size() == 2);  // ring topology forces 2 edge cuts
    CHECK(r.plan.fragment_count() == 2);
    CHECK(r.plan.max_fragment_qubits() == 4);
    CHECK(r.plan.fragments[0].n_qubits == 4);
    CHECK(r.plan.fragments[1].n_qubits == 4);
}

TEST_CASE("find_cut: fragments respect max_qubits on RC grids") {
    const Circuit c = generate_rc(4, 5, 22, 7);
    REQUIRE(c.n_qubits() == 20);
    Constraints cons;
    cons.max_qubits = 15;
    const FindCutResult r = find_cut(c, cons, 3);
    CHECK(r.plan.max_fragment_qubits() <= 15);
    CHECK(r.winner.cuts.size() >= 1);
    // Report covers every (mode, method, k) candidate.
    CHECK(r.candidates.size() >= 4u);
}

TEST_CASE("find_cut: max_cuts=0 on a connected circuit is infeasible") {
    Constraints cons;
    cons.max_cuts = 0;
    CHECK_THROWS_WITH_AS(find_cut(generate_hea(4, 1, 2), cons, 0),
                         doctest::Contains("max_cuts"), InfeasibleError);
}

TEST_CASE("find_cut: constraint soundness across knobs") {
    const Circuit c = generate_rc(3, 4, 8, 13);
    Constraints cons;
    cons.max_qubits = 8;
    cons.max_components = 3;
    cons.max_cuts = 30;
    const FindCutResult r = find_cut(c, cons, 9);
    CHECK(r.plan.max_fragment_qubits() <= 8);
    CHECK(r.plan.fragment_count() <= 3);
    CHECK(static_cast<int>(r.winner.cuts.size()) <= 30);
    for (const Candidate& cand : r.candidates) {
        if (!cand.feasible) continue;
        CHECK(cand.plan_max_qubits <= 8);
        CHECK(cand.plan_fragments <= 3);
    }
}

TEST_CASE("find_cut: determinism for identical inputs and seed") {
    Constraints cons;
    cons.max_qubits = 6;
    const Circuit c = generate_rc(3, 3, 6, 2);
    const FindCutResult a = find_cut(c, cons, 17);
    const FindCutResult b = find_cut(c, cons, 17);
    CHECK(a.winner.cuts == b.winner.cuts);
    CHECK(a.winner.loss_value == b.winner.loss_value);
    CHECK(a.plan.fragment_count() == b.plan.fragment_count());
}

TEST_CASE("find_cut: weight-scaling invariance of the argmin") {
    const Circuit c = generate_rc(3, 3, 6, 21);
    Constraints cons;
    const FindCutResult base = find_cut(c, cons, 4);
    Constraints scaled = cons;
    scaled.weights.alpha *= 3.7;
    scaled.weights.beta *= 3.7;
    scaled.weights.gamma *= 3.7;
    const FindCutResult r = find_cut(c, scaled, 4);
    CHECK(r.winner.cuts == base.winner.cuts);
}

TEST_CASE("find_cut: alpha dominance minimizes the cut count") {
    const Circuit c = generate_hea(8, 1, 5);
    Constraints cons;
    cons.gate_cut = true;
    cons.wire_cut = false;
    cons.weights.alpha = 1e6;
    const FindCutResult r = find_cut(c, cons, 1);
    // On the 8-ring no partition crosses fewer than 2 edges.
    CHECK(r.winner.cuts.size() == 2);
}

TEST_CASE("find_cut: cut count equals the crossing weight of the partition") {
    const Circuit c = generate_rc(3, 4, 10, 5);
    Constraints cons;
    cons.max_qubits = 9;
    const FindCutResult r = find_cut(c, cons, 6);
    const CutGraph g = build_cut_graph(to_dag(c),
                                       r.winner.mode);
    CHECK(static_cast<int>(r.winner.cuts.size()) ==
          crossing_weight(g, r.winner.assignment));
}

TEST_CASE("find_cut needs at least one cut family enabled") {
    Constraints cons;
    cons.wire_cut = false;
    cons.gate_cut = false;
    CHECK_THROWS_AS(find_cut(generate_hea(4, 1, 1), cons, 0), ConfigError);
}

TEST_CASE("near-optimality within 1.25x of brute force on small graphs") {
    // find_cut's selection is graph-level; compare the same loss against an
    // exhaustive search over partitions into <= 4 blocks.
    Rng rng(909);
    const LossWeights w;
    int violations = 0;
    const int trials = 40;
    for (int t = 0; t < trials; ++t) {
        const int n = 5 + static_cast<int>(rng.next_below(6));  // 5..10 nodes
        const CutGraph g = random_connected_graph(n, rng);

        double best_heuristic = std::numeric_limits<double>::infinity();
        for (PartitionMethod m :
             {PartitionMethod::KernighanLin, PartitionMethod::GirvanNewman,
              PartitionMethod::Spectral, PartitionMethod::Multilevel}) {
            for (int k = 2; k <= std::min(4, g.n_nodes); ++k) {
                Partition p = partition(g, m, k, 31 + t);
                refine_partition_by_loss(g, p.assignment, w);
                CandidateStats stats;
                stats.cut_weight = crossing_weight(g, p.assignment);
                stats.components = p.component_count();
                stats.max_fragment_qubits = max_block_size(p.assignment);
                best_heuristic = std::min(best_heuristic, loss(stats, w));
            }
        }
        const double optimal = brute_force_best_loss(g, 4, std::nullopt, w);
        REQUIRE(std::isfinite(optimal));
        // Losses can be negative only if beta dominates; with the defaults
        // they stay positive on connected graphs (cuts >= 1, qubits >= 1).
        REQUIRE(optimal > 0.0);
        if (best_heuristic > 1.25 * optimal) ++violations;
    }
    CHECK(violations == 0);
}
