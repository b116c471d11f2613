#include "qcut/partition.hpp"

#include "qcut/error.hpp"
#include "qcut/rng.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <map>
#include <numeric>
#include <set>

namespace qcut {

PartitionMethod parse_partition_method(std::string_view name) {
    if (name == "kl") return PartitionMethod::KernighanLin;
    if (name == "gn") return PartitionMethod::GirvanNewman;
    if (name == "spectral") return PartitionMethod::Spectral;
    if (name == "multilevel") return PartitionMethod::Multilevel;
    throw ConfigError("unknown partition method '" + std::string(name) +
                      "' (expected kl, gn, spectral or multilevel)");
}

const char* partition_method_name(PartitionMethod m) {
    switch (m) {
        case PartitionMethod::KernighanLin: return "kl";
        case PartitionMethod::GirvanNewman: return "gn";
        case PartitionMethod::Spectral: return "spectral";
        case PartitionMethod::Multilevel: return "multilevel";
    }
    return "?";
}

int Partition::component_count() const {
    int m = -1;
    for (int c : assignment) m = std::max(m, c);
    return m + 1;
}

int crossing_weight(const CutGraph& g, const std::vector<int>& assignment) {
    int w = 0;
    for (const CutGraph::Edge& e : g.edges) {
        if (assignment[static_cast<std::size_t>(e.a)] != assignment[static_cast<std::size_t>(e.b)]) {
            w += e.weight;
        }
    }
    return w;
}

int max_block_size(const std::vector<int>& assignment) {
    std::map<int, int> sizes;
    for (int c : assignment) ++sizes[c];
    int m = 0;
    for (const auto& [c, s] : sizes) m = std::max(m, s);
    return m;
}

std::vector<int> connected_components(const CutGraph& g) {
    const auto adj = g.adjacency();
    std::vector<int> comp(static_cast<std::size_t>(g.n_nodes), -1);
    int next = 0;
    for (int start = 0; start < g.n_nodes; ++start) {
        if (comp[static_cast<std::size_t>(start)] >= 0) continue;
        std::deque<int> queue{start};
        comp[static_cast<std::size_t>(start)] = next;
        while (!queue.empty()) {
            const int v = queue.front();
            queue.pop_front();
            for (const auto& [u, w] : adj[static_cast<std::size_t>(v)]) {
                if (comp[static_cast<std::size_t>(u)] < 0) {
                    comp[static_cast<std::size_t>(u)] = next;
                    queue.push_back(u);
                }
            }
        }
        ++next;
    }
    return comp;
}

namespace {

/// Induced subgraph with local indices and node weights.
struct LocalGraph {
    int n = 0;
    std::vector<std::vector<std::pair<int, int>>> adj;  // (neighbor, weight)
    std::vector<int> node_weight;

    int total_node_weight() const {
        return std::accumulate(node_weight.begin(), node_weight.end(), 0);
    }
};

LocalGraph induced(const CutGraph& g, const std::vector<int>& nodes) {
    LocalGraph lg;
    lg.n = static_cast<int>(nodes.size());
    lg.adj.resize(nodes.size());
    lg.node_weight.assign(nodes.size(), 1);
    std::map<int, int> local;
    for (int i = 0; i < lg.n; ++i) local[nodes[static_cast<std::size_t>(i)]] = i;
    for (const CutGraph::Edge& e : g.edges) {
        const auto ia = local.find(e.a);
        const auto ib = local.find(e.b);
        if (ia == local.end() || ib == local.end()) continue;
        lg.adj[static_cast<std::size_t>(ia->second)].push_back({ib->second, e.weight});
        lg.adj[static_cast<std::size_t>(ib->second)].push_back({ia->second, e.weight});
    }
    return lg;
}

int weight_between(const LocalGraph& g, int a, int b) {
    int w = 0;
    for (const auto& [u, wt] : g.adj[static_cast<std::size_t>(a)]) {
        if (u == b) w += wt;
    }
    return w;
}

/// One Kernighan-Lin refinement: gain-driven pair swaps, best-prefix commit,
/// repeated until a pass yields no improvement. `side` is modified in place.
void kl_refine(const LocalGraph& g, std::vector<char>& side) {
    const int n = g.n;
    if (n < 2) return;
    const int max_node_weight =
        *std::max_element(g.node_weight.begin(), g.node_weight.end());

    for (int pass = 0; pass < 12; ++pass) {
        std::vector<int> gain(static_cast<std::size_t>(n), 0);
        auto recompute_gain = [&](int v) {
            int external = 0;
            int internal = 0;
            for (const auto& [u, w] : g.adj[static_cast<std::size_t>(v)]) {
                if (side[static_cast<std::size_t>(u)] == side[static_cast<std::size_t>(v)]) {
                    internal += w;
                } else {
                    external += w;
                }
            }
            gain[static_cast<std::size_t>(v)] = external - internal;
        };
        for (int v = 0; v < n; ++v) recompute_gain(v);

        std::vector<char> locked(static_cast<std::size_t>(n), 0);
        std::vector<std::pair<int, int>> swaps;
        std::vector<int> cumulative;
        int running = 0;

        int balance = 0;  // weight(A) - weight(B)
        for (int v = 0; v < n; ++v) {
            balance += side[static_cast<std::size_t>(v)] ? -g.node_weight[static_cast<std::size_t>(v)]
                                                         : g.node_weight[static_cast<std::size_t>(v)];
        }

        while (true) {
            int best_a = -1;
            int best_b = -1;
            int best_gain = std::numeric_limits<int>::min();
            for (int a = 0; a < n; ++a) {
                if (locked[static_cast<std::size_t>(a)] || side[static_cast<std::size_t>(a)] != 0) continue;
                for (int b = 0; b < n; ++b) {
                    if (locked[static_cast<std::size_t>(b)] || side[static_cast<std::size_t>(b)] != 1) continue;
                    const int new_balance = balance -
                                            2 * g.node_weight[static_cast<std::size_t>(a)] +
                                            2 * g.node_weight[static_cast<std::size_t>(b)];
                    if (std::abs(new_balance) > max_node_weight) continue;
                    const int pair_gain = gain[static_cast<std::size_t>(a)] +
                                          gain[static_cast<std::size_t>(b)] -
                                          2 * weight_between(g, a, b);
                    if (pair_gain > best_gain) {
                        best_gain = pair_gain;
                        best_a = a;
                        best_b = b;
                    }
                }
            }
            if (best_a < 0) break;
            swaps.push_back({best_a, best_b});
            running += best_gain;
            cumulative.push_back(running);
            locked[static_cast<std::size_t>(best_a)] = 1;
            locked[static_cast<std::size_t>(best_b)] = 1;
            side[static_cast<std::size_t>(best_a)] = 1;
            side[static_cast<std::size_t>(best_b)] = 0;
            balance += -2 * g.node_weight[static_cast<std::size_t>(best_a)] +
                       2 * g.node_weight[static_cast<std::size_t>(best_b)];
            for (int v = 0; v < n; ++v) {
                if (!locked[static_cast<std::size_t>(v)]) recompute_gain(v);
            }
        }

        // Keep the best prefix of tentative swaps; undo the rest.
        int best_prefix = 0;
        int best_value = 0;
        for (std::size_t i = 0; i < cumulative.size(); ++i) {
            if (cumulative[i] > best_value) {
                best_value = cumulative[i];
                best_prefix = static_cast<int>(i) + 1;
            }
        }
        for (std::size_t i = cumulative.size(); i-- > static_cast<std::size_t>(best_prefix);) {
            side[static_cast<std::size_t>(swaps[i].first)] = 0;
            side[static_cast<std::size_t>(swaps[i].second)] = 1;
        }
        if (best_value <= 0) break;
    }
}

std::vector<char> balanced_seed_split(const LocalGraph& g, Rng& rng) {
    std::vector<int> order(static_cast<std::size_t>(g.n));
    std::iota(order.begin(), order.end(), 0);
    for (int i = g.n - 1; i > 0; --i) {
        std::swap(order[static_cast<std::size_t>(i)],
                  order[static_cast<std::size_t>(rng.next_below(static_cast<std::uint64_t>(i + 1)))]);
    }
    const int total = g.total_node_weight();
    std::vector<char> side(static_cast<std::size_t>(g.n), 1);
    int acc = 0;
    for (int v : order) {
        if (2 * acc < total) {
            side[static_cast<std::size_t>(v)] = 0;
            acc += g.node_weight[static_cast<std::size_t>(v)];
        }
    }
    return side;
}

std::vector<char> kl_bisect(const LocalGraph& g, Rng& rng) {
    std::vector<char> side = balanced_seed_split(g, rng);
    kl_refine(g, side);
    return side;
}

/// Deflated power iteration for the Laplacian's second-smallest eigenpair.
std::vector<double> fiedler_vector(const LocalGraph& g, Rng& rng) {
    const int n = g.n;
    std::vector<double> degree(static_cast<std::size_t>(n), 0.0);
    for (int v = 0; v < n; ++v) {
        for (const auto& [u, w] : g.adj[static_cast<std::size_t>(v)]) {
            degree[static_cast<std::size_t>(v)] += w;
        }
    }
    const double shift = 2.0 * *std::max_element(degree.begin(), degree.end()) + 1.0;

    const double uniform = 1.0 / std::sqrt(static_cast<double>(n));
    auto project_out_ones = [&](std::vector<double>& x) {
        double dot = 0.0;
        for (double v : x) dot += v * uniform;
        for (double& v : x) v -= dot * uniform;
    };
    auto normalize = [](std::vector<double>& x) {
        double norm = 0.0;
        for (double v : x) norm += v * v;
        norm = std::sqrt(norm);
        if (norm > 0) {
            for (double& v : x) v /= norm;
        }
        return norm;
    };

    std::vector<double> x(static_cast<std::size_t>(n));
    for (double& v : x) v = rng.next_double() * 2.0 - 1.0;
    project_out_ones(x);
    if (normalize(x) < 1e-12) {
        for (int v = 0; v < n; ++v) x[static_cast<std::size_t>(v)] = v;  // deterministic fallback
        project_out_ones(x);
        normalize(x);
    }

    std::vector<double> next(static_cast<std::size_t>(n));
    constexpr double kTol = 1e-8;
    constexpr int kMaxIters = 10000;
    for (int iter = 0; iter < kMaxIters; ++iter) {
        // next = (shift I - L) x
        for (int v = 0; v < n; ++v) {
            double acc = (shift - degree[static_cast<std::size_t>(v)]) * x[static_cast<std::size_t>(v)];
            for (const auto& [u, w] : g.adj[static_cast<std::size_t>(v)]) {
                acc += w * x[static_cast<std::size_t>(u)];
            }
            next[static_cast<std::size_t>(v)] = acc;
        }
        project_out_ones(next);
        normalize(next);
        double delta = 0.0;
        double sign = 0.0;
        for (int v = 0; v < n; ++v) sign += next[static_cast<std::size_t>(v)] * x[static_cast<std::size_t>(v)];
        const double flip = sign < 0 ? -1.0 : 1.0;
        for (int v = 0; v < n; ++v) {
            delta = std::max(delta, std::abs(flip * next[static_cast<std::size_t>(v)] -
                                             x[static_cast<std::size_t>(v)]));
            x[static_cast<std::size_t>(v)] = flip * next[static_cast<std::size_t>(v)];
        }
        if (delta < kTol) break;
    }
    return x;
}

std::vector<char> spectral_bisect(const LocalGraph& g, Rng& rng) {
    const std::vector<double> fiedler = fiedler_vector(g, rng);
    std::vector<char> side(static_cast<std::size_t>(g.n), 0);
    int ones = 0;
    for (int v = 0; v < g.n; ++v) {
        if (fiedler[static_cast<std::size_t>(v)] < 0.0) {
            side[static_cast<std::size_t>(v)] = 1;
            ++ones;
        }
    }
    if (ones == 0 || ones == g.n) {
        // Degenerate sign pattern: fall back to a median split.
        std::vector<int> order(static_cast<std::size_t>(g.n));
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
            return fiedler[static_cast<std::size_t>(a)] < fiedler[static_cast<std::size_t>(b)];
        });
        for (int i = 0; i < g.n / 2; ++i) side[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = 1;
        for (int i = g.n / 2; i < g.n; ++i) side[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = 0;
    }
    return side;
}

// --- multilevel (METIS stand-in) ---

struct CoarseLevel {
    LocalGraph graph;
    std::vector<int> coarse_of;  // finer node -> coarse node
};

LocalGraph contract(const LocalGraph& g, const std::vector<int>& coarse_of, int n_coarse) {
    LocalGraph cg;
    cg.n = n_coarse;
    cg.adj.resize(static_cast<std::size_t>(n_coarse));
    cg.node_weight.assign(static_cast<std::size_t>(n_coarse), 0);
    for (int v = 0; v < g.n; ++v) {
        cg.node_weight[static_cast<std::size_t>(coarse_of[static_cast<std::size_t>(v)])] +=
            g.node_weight[static_cast<std::size_t>(v)];
    }
    std::map<std::pair<int, int>, int> merged;
    for (int v = 0; v < g.n; ++v) {
        for (const auto& [u, w] : g.adj[static_cast<std::size_t>(v)]) {
            if (u <= v) continue;  // undirected edges stored both ways
            const int cv = coarse_of[static_cast<std::size_t>(v)];
            const int cu = coarse_of[static_cast<std::size_t>(u)];
            if (cv == cu) continue;
            merged[{std::min(cv, cu), std::max(cv, cu)}] += w;
        }
    }
    for (const auto& [pair, w] : merged) {
        cg.adj[static_cast<std::size_t>(pair.first)].push_back({pair.second, w});
        cg.adj[static_cast<std::size_t>(pair.second)].push_back({pair.first, w});
    }
    return cg;
}

std::vector<char> multilevel_bisect(const LocalGraph& g, Rng& rng) {
    std::vector<CoarseLevel> levels;
    LocalGraph current = g;

    while (current.n > 8) {
        // Heavy-edge matching, heaviest adjacent edge first.
        std::vector<int> order(static_cast<std::size_t>(current.n));
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
            int da = 0;
            int db = 0;
            for (const auto& [u, w] : current.adj[static_cast<std::size_t>(a)]) da += w;
            for (const auto& [u, w] : current.adj[static_cast<std::size_t>(b)]) db += w;
            return da > db;
        });
        std::vector<int> match(static_cast<std::size_t>(current.n), -1);
        for (int v : order) {
            if (match[static_cast<std::size_t>(v)] >= 0) continue;
            int best = -1;
            int best_w = -1;
            for (const auto& [u, w] : current.adj[static_cast<std::size_t>(v)]) {
                if (match[static_cast<std::size_t>(u)] >= 0 || u == v) continue;
                if (w > best_w || (w == best_w && u < best)) {
                    best = u;
                    best_w = w;
                }
            }
            if (best >= 0) {
                match[static_cast<std::size_t>(v)] = best;
                match[static_cast<std::size_t>(best)] = v;
            } else {
                match[static_cast<std::size_t>(v)] = v;
            }
        }
        std::vector<int> coarse_of(static_cast<std::size_t>(current.n), -1);
        int n_coarse = 0;
        for (int v = 0; v < current.n; ++v) {
            if (coarse_of[static_cast<std::size_t>(v)] >= 0) continue;
            const int m = match[static_cast<std::size_t>(v)];
            coarse_of[static_cast<std::size_t>(v)] = n_coarse;
            if (m != v) coarse_of[static_cast<std::size_t>(m)] = n_coarse;
            ++n_coarse;
        }
        if (n_coarse == current.n) break;  // nothing matched, stop coarsening
        levels.push_back({current, coarse_of});
        current = contract(current, coarse_of, n_coarse);
    }

    // Initial partition on the coarsest graph: heaviest nodes first onto the
    // lighter side, then KL.
    std::vector<int> order(static_cast<std::size_t>(current.n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return current.node_weight[static_cast<std::size_t>(a)] >
               current.node_weight[static_cast<std::size_t>(b)];
    });
    std::vector<char> side(static_cast<std::size_t>(current.n), 0);
    int wa = 0;
    int wb = 0;
    for (int v : order) {
        if (wa <= wb) {
            side[static_cast<std::size_t>(v)] = 0;
            wa += current.node_weight[static_cast<std::size_t>(v)];
        } else {
            side[static_cast<std::size_t>(v)] = 1;
            wb += current.node_weight[static_cast<std::size_t>(v)];
        }
    }
    kl_refine(current, side);
    (void)rng;

    // Uncoarsen with KL refinement at every level.
    for (std::size_t li = levels.size(); li-- > 0;) {
        const CoarseLevel& level = levels[li];
        std::vector<char> fine(static_cast<std::size_t>(level.graph.n));
        for (int v = 0; v < level.graph.n; ++v) {
            fine[static_cast<std::size_t>(v)] =
                side[static_cast<std::size_t>(level.coarse_of[static_cast<std::size_t>(v)])];
        }
        kl_refine(level.graph, fine);
        side = std::move(fine);
    }
    return side;
}

// --- Girvan-Newman ---

/// Brandes edge-betweenness accumulation over unweighted shortest paths.
std::map<std::pair<int, int>, double> edge_betweenness(
    int n, const std::vector<std::vector<int>>& adj) {
    std::map<std::pair<int, int>, double> between;
    for (int s = 0; s < n; ++s) {
        std::vector<int> dist(static_cast<std::size_t>(n), -1);
        std::vector<double> sigma(static_cast<std::size_t>(n), 0.0);
        std::vector<std::vector<int>> preds(static_cast<std::size_t>(n));
        std::vector<int> stack;
        std::deque<int> queue{s};
        dist[static_cast<std::size_t>(s)] = 0;
        sigma[static_cast<std::size_t>(s)] = 1.0;
        while (!queue.empty()) {
            const int v = queue.front();
            queue.pop_front();
            stack.push_back(v);
            for (int u : adj[static_cast<std::size_t>(v)]) {
                if (dist[static_cast<std::size_t>(u)] < 0) {
                    dist[static_cast<std::size_t>(u)] = dist[static_cast<std::size_t>(v)] + 1;
                    queue.push_back(u);
                }
                if (dist[static_cast<std::size_t>(u)] == dist[static_cast<std::size_t>(v)] + 1) {
                    sigma[static_cast<std::size_t>(u)] += sigma[static_cast<std::size_t>(v)];
                    preds[static_cast<std::size_t>(u)].push_back(v);
                }
            }
        }
        std::vector<double> delta(static_cast<std::size_t>(n), 0.0);
        for (std::size_t i = stack.size(); i-- > 0;) {
            const int w = stack[i];
            for (int v : preds[static_cast<std::size_t>(w)]) {
                const double share = sigma[static_cast<std::size_t>(v)] /
                                     sigma[static_cast<std::size_t>(w)] *
                                     (1.0 + delta[static_cast<std::size_t>(w)]);
                delta[static_cast<std::size_t>(v)] += share;
                between[{std::min(v, w), std::max(v, w)}] += share;
            }
        }
    }
    return between;
}

std::vector<int> components_of_adj(int n, const std::vector<std::vector<int>>& adj) {
    std::vector<int> comp(static_cast<std::size_t>(n), -1);
    int next = 0;
    for (int s = 0; s < n; ++s) {
        if (comp[static_cast<std::size_t>(s)] >= 0) continue;
        std::deque<int> queue{s};
        comp[static_cast<std::size_t>(s)] = next;
        while (!queue.empty()) {
            const int v = queue.front();
            queue.pop_front();
            for (int u : adj[static_cast<std::size_t>(v)]) {
                if (comp[static_cast<std::size_t>(u)] < 0) {
                    comp[static_cast<std::size_t>(u)] = next;
                    queue.push_back(u);
                }
            }
        }
        ++next;
    }
    return comp;
}

std::vector<int> girvan_newman(const CutGraph& g, int target) {
    constexpr int kMaxNodes = 200;  // exact betweenness recompute is cubic-ish
    if (g.n_nodes > kMaxNodes) {
        throw ConfigError("girvan-newman is capped at 200 nodes");
    }
    std::set<std::pair<int, int>> edges;
    for (const CutGraph::Edge& e : g.edges) {
        edges.insert({std::min(e.a, e.b), std::max(e.a, e.b)});
    }
    auto make_adj = [&]() {
        std::vector<std::vector<int>> adj(static_cast<std::size_t>(g.n_nodes));
        for (const auto& [a, b] : edges) {
            adj[static_cast<std::size_t>(a)].push_back(b);
            adj[static_cast<std::size_t>(b)].push_back(a);
        }
        return adj;
    };

    auto adj = make_adj();
    std::vector<int> comp = components_of_adj(g.n_nodes, adj);
    int n_comp = *std::max_element(comp.begin(), comp.end()) + 1;
    while (n_comp < target && !edges.empty()) {
        const auto between = edge_betweenness(g.n_nodes, adj);
        std::pair<int, int> victim = *edges.begin();
        double best = -1.0;
        for (const auto& e : edges) {
            const auto it = between.find(e);
            const double b = it == between.end() ? 0.0 : it->second;
            if (b > best) {
                best = b;
                victim = e;
            }
        }
        edges.erase(victim);
        adj = make_adj();
        comp = components_of_adj(g.n_nodes, adj);
        n_comp = *std::max_element(comp.begin(), comp.end()) + 1;
    }
    return comp;
}

std::vector<int> normalize_assignment(const std::vector<int>& raw) {
    std::map<int, int> remap;
    std::vector<int> dense(raw.size());
    for (std::size_t i = 0; i < raw.size(); ++i) {
        const auto [it, fresh] = remap.emplace(raw[i], static_cast<int>(remap.size()));
        dense[i] = it->second;
    }
    return dense;
}

/// Groups natural components down to `target` blocks by repeatedly merging
/// the two smallest.
std::vector<int> merge_components(std::vector<int> comp, int target) {
    while (true) {
        std::map<int, int> sizes;
        for (int c : comp) ++sizes[c];
        if (static_cast<int>(sizes.size()) <= target) break;
        std::vector<std::pair<int, int>> by_size;  // (size, id)
        for (const auto& [id, size] : sizes) by_size.push_back({size, id});
        std::sort(by_size.begin(), by_size.end());
        const int keep = by_size[0].second;
        const int absorb = by_size[1].second;
        for (int& c : comp) {
            if (c == absorb) c = keep;
        }
    }
    return normalize_assignment(comp);
}

using BisectFn = std::vector<char> (*)(const LocalGraph&, Rng&);

std::vector<int> recursive_bisection(const CutGraph& g, int target, BisectFn bisect,
                                     Rng& rng) {
    // Blocks as explicit node lists; split the largest splittable block until
    // the target count is reached.
    std::vector<std::vector<int>> blocks;
    {
        const std::vector<int> comp = connected_components(g);
        const int n_comp = *std::max_element(comp.begin(), comp.end()) + 1;
        blocks.resize(static_cast<std::size_t>(n_comp));
        for (int v = 0; v < g.n_nodes; ++v) {
            blocks[static_cast<std::size_t>(comp[static_cast<std::size_t>(v)])].push_back(v);
        }
    }
    if (static_cast<int>(blocks.size()) > target) {
        std::vector<int> comp(static_cast<std::size_t>(g.n_nodes));
        for (std::size_t b = 0; b < blocks.size(); ++b) {
            for (int v : blocks[b]) comp[static_cast<std::size_t>(v)] = static_cast<int>(b);
        }
        return merge_components(comp, target);
    }
    while (static_cast<int>(blocks.size()) < target) {
        int pick = -1;
        for (std::size_t b = 0; b < blocks.size(); ++b) {
            if (blocks[b].size() < 2) continue;
            if (pick < 0 || blocks[b].size() > blocks[static_cast<std::size_t>(pick)].size()) {
                pick = static_cast<int>(b);
            }
        }
        if (pick < 0) throw Error("not enough splittable nodes to reach the target");
        const std::vector<int> nodes = blocks[static_cast<std::size_t>(pick)];
        const LocalGraph lg = induced(g, nodes);
        const std::vector<char> side = bisect(lg, rng);
        std::vector<int> left;
        std::vector<int> right;
        for (int i = 0; i < lg.n; ++i) {
            (side[static_cast<std::size_t>(i)] == 0 ? left : right)
                .push_back(nodes[static_cast<std::size_t>(i)]);
        }
        if (left.empty() || right.empty()) {
            // Refinement collapsed one side; force a deterministic split.
            left.clear();
            right.clear();
            for (std::size_t i = 0; i < nodes.size(); ++i) {
                (i < nodes.size() / 2 ? left : right).push_back(nodes[i]);
            }
        }
        blocks[static_cast<std::size_t>(pick)] = std::move(left);
        blocks.insert(blocks.begin() + pick + 1, std::move(right));
    }
    std::vector<int> assignment(static_cast<std::size_t>(g.n_nodes), 0);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        for (int v : blocks[b]) assignment[static_cast<std::size_t>(v)] = static_cast<int>(b);
    }
    return normalize_assignment(assignment);
}

} // namespace

Partition partition(const CutGraph& g, PartitionMethod method, int target_components,
                    std::uint64_t seed) {
    if (g.n_nodes < 1) throw ConfigError("cannot partition an empty graph");
    if (target_components < 2 || target_components > g.n_nodes) {
        throw ConfigError("target component count " + std::to_string(target_components) +
                          " out of range [2, " + std::to_string(g.n_nodes) + "]");
    }

    Partition p;
    p.method = method;
    Rng rng(splitmix64(seed ^ 0x71c72e1dULL));

    switch (method) {
        case PartitionMethod::KernighanLin:
            p.assignment = recursive_bisection(g, target_components, kl_bisect, rng);
            break;
        case PartitionMethod::Spectral:
            p.assignment = recursive_bisection(g, target_components, spectral_bisect, rng);
            break;
        case PartitionMethod::Multilevel:
            p.assignment = recursive_bisection(g, target_components, multilevel_bisect, rng);
            break;
        case PartitionMethod::GirvanNewman: {
            const std::vector<int> natural = connected_components(g);
            const int n_comp = *std::max_element(natural.begin(), natural.end()) + 1;
            if (n_comp >= target_components) {
                p.assignment = merge_components(natural, target_components);
            } else {
                p.assignment = normalize_assignment(girvan_newman(g, target_components));
            }
            break;
        }
    }
    return p;
}

} // namespace qcut
