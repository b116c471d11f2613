#include "qcut/cutting.hpp"

#include "qcut/circuit_io.hpp"
#include "qcut/error.hpp"
#include "qcut/rng.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <queue>
#include <set>

namespace qcut {

CutPoint CutPoint::wire(int upstream, int downstream, int qubit) {
    CutPoint c;
    c.kind = Kind::Wire;
    c.upstream_gate = upstream;
    c.downstream_gate = downstream;
    c.qubit = qubit;
    return c;
}

CutPoint CutPoint::gate(int gate_id) {
    CutPoint c;
    c.kind = Kind::Gate;
    c.gate_id = gate_id;
    return c;
}

namespace {

std::vector<int> topo_ids(const CircuitDag& d) {
    const int n = static_cast<int>(d.nodes.size());
    std::vector<int> indegree(static_cast<std::size_t>(n), 0);
    std::vector<std::vector<int>> succ(static_cast<std::size_t>(n));
    for (const DagEdge& e : d.edges) {
        ++indegree[static_cast<std::size_t>(e.to)];
        succ[static_cast<std::size_t>(e.from)].push_back(e.to);
    }
    std::priority_queue<int, std::vector<int>, std::greater<>> ready;
    for (int id = 0; id < n; ++id) {
        if (indegree[static_cast<std::size_t>(id)] == 0) ready.push(id);
    }
    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(n));
    while (!ready.empty()) {
        const int id = ready.top();
        ready.pop();
        order.push_back(id);
        for (int next : succ[static_cast<std::size_t>(id)]) {
            if (--indegree[static_cast<std::size_t>(next)] == 0) ready.push(next);
        }
    }
    if (static_cast<int>(order.size()) != n) throw Error("cycle detected in circuit dag");
    return order;
}

struct Dsu {
    std::vector<int> parent;
    explicit Dsu(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
    }
};

CutPlan trivial_plan(const CircuitDag& dag) {
    CutPlan plan;
    plan.original = from_dag(dag);
    FragmentTemplate ft;
    ft.n_qubits = plan.original.n_qubits();
    ft.qubit_map.resize(static_cast<std::size_t>(ft.n_qubits));
    std::iota(ft.qubit_map.begin(), ft.qubit_map.end(), 0);
    ft.carries_observable.assign(static_cast<std::size_t>(ft.n_qubits), true);
    for (const Gate& g : plan.original.gates()) {
        TemplateEntry e;
        e.gate = g;
        e.gate.id = -1;
        ft.entries.push_back(std::move(e));
    }
    plan.fragments.push_back(std::move(ft));
    return plan;
}

} // namespace

int CutPlan::max_fragment_qubits() const {
    int m = 0;
    for (const FragmentTemplate& f : fragments) m = std::max(m, f.n_qubits);
    return m;
}

std::vector<int> CutPlan::term_counts() const {
    std::vector<int> counts;
    counts.reserve(cuts.size());
    for (const CutPoint& c : cuts) {
        counts.push_back(qpd_term_count(c.kind == CutPoint::Kind::Wire));
    }
    return counts;
}

std::uint64_t CutPlan::assignment_count() const {
    std::uint64_t n = 1;
    for (int c : term_counts()) {
        if (n > (std::uint64_t{1} << 62) / static_cast<std::uint64_t>(c)) {
            throw Error("variant assignment count does not fit in 62 bits");
        }
        n *= static_cast<std::uint64_t>(c);
    }
    return n;
}

double CutPlan::assignment_count_estimate() const {
    double n = 1.0;
    for (int c : term_counts()) n *= c;
    return n;
}

CutPlan apply_cuts(const CircuitDag& dag, const std::vector<CutPoint>& cuts) {
    if (cuts.empty()) return trivial_plan(dag);

    const int n_nodes = static_cast<int>(dag.nodes.size());
    auto check_id = [&](int id) {
        if (id < 0 || id >= n_nodes) {
            throw ConfigError("cut references unknown gate id " + std::to_string(id));
        }
    };

    std::map<int, int> gate_cut_of;              // gate id -> cut index
    std::map<std::pair<int, int>, int> wire_after;  // (upstream id, qubit) -> cut index

    for (std::size_t ci = 0; ci < cuts.size(); ++ci) {
        const CutPoint& cut = cuts[ci];
        if (cut.kind == CutPoint::Kind::Gate) {
            check_id(cut.gate_id);
            const Gate& g = dag.nodes[static_cast<std::size_t>(cut.gate_id)];
            if (!is_two_qubit(g.kind)) {
                throw ConfigError("gate cut target " + std::to_string(cut.gate_id) +
                                  " is not a two-qubit gate");
            }
            if (!gate_cut_of.emplace(cut.gate_id, static_cast<int>(ci)).second) {
                throw ConfigError("duplicate gate cut on gate " + std::to_string(cut.gate_id));
            }
        } else {
            check_id(cut.upstream_gate);
            check_id(cut.downstream_gate);
            if (!dag.has_edge(cut.upstream_gate, cut.downstream_gate, cut.qubit)) {
                throw ConfigError("wire cut endpoints " + std::to_string(cut.upstream_gate) +
                                  " -> " + std::to_string(cut.downstream_gate) +
                                  " are not adjacent on qubit " + std::to_string(cut.qubit));
            }
            if (!wire_after.emplace(std::make_pair(cut.upstream_gate, cut.qubit),
                                    static_cast<int>(ci))
                     .second) {
                throw ConfigError("duplicate wire cut after gate " +
                                  std::to_string(cut.upstream_gate) + " on qubit " +
                                  std::to_string(cut.qubit));
            }
        }
    }
    for (const CutPoint& cut : cuts) {
        if (cut.kind == CutPoint::Kind::Wire &&
            (gate_cut_of.count(cut.upstream_gate) || gate_cut_of.count(cut.downstream_gate))) {
            throw ConfigError("wire cut endpoint is itself gate-cut");
        }
    }

    const std::vector<int> order = topo_ids(dag);

    // Wire segments: each qubit timeline starts one segment and every wire
    // cut on it starts another.
    std::vector<int> seg_qubit;  // segment -> original qubit
    std::vector<int> cur_seg(static_cast<std::size_t>(dag.n_qubits));
    for (int q = 0; q < dag.n_qubits; ++q) {
        cur_seg[static_cast<std::size_t>(q)] = static_cast<int>(seg_qubit.size());
        seg_qubit.push_back(q);
    }

    std::vector<std::vector<int>> gate_segs(static_cast<std::size_t>(n_nodes));
    std::vector<int> wire_up_seg(cuts.size(), -1);
    std::vector<int> wire_dn_seg(cuts.size(), -1);

    for (int id : order) {
        const Gate& g = dag.nodes[static_cast<std::size_t>(id)];
        for (int q : g.qubits) {
            gate_segs[static_cast<std::size_t>(id)].push_back(cur_seg[static_cast<std::size_t>(q)]);
        }
        for (int q : g.qubits) {
            const auto it = wire_after.find({id, q});
            if (it == wire_after.end()) continue;
            wire_up_seg[static_cast<std::size_t>(it->second)] = cur_seg[static_cast<std::size_t>(q)];
            const int fresh = static_cast<int>(seg_qubit.size());
            seg_qubit.push_back(q);
            cur_seg[static_cast<std::size_t>(q)] = fresh;
            wire_dn_seg[static_cast<std::size_t>(it->second)] = fresh;
        }
    }

    // Connected components over segments; cut gates do not join their sides.
    Dsu dsu(seg_qubit.size());
    for (int id : order) {
        if (gate_cut_of.count(id)) continue;
        const auto& segs = gate_segs[static_cast<std::size_t>(id)];
        for (std::size_t i = 1; i < segs.size(); ++i) dsu.unite(segs[0], segs[i]);
    }

    const int n_segs = static_cast<int>(seg_qubit.size());
    std::vector<int> frag_of_root(static_cast<std::size_t>(n_segs), -1);
    std::vector<int> frag_of_seg(static_cast<std::size_t>(n_segs), -1);
    std::vector<int> local_of_seg(static_cast<std::size_t>(n_segs), -1);

    CutPlan plan;
    plan.original = from_dag(dag);
    plan.cuts = cuts;
    plan.cut_gate_kinds.assign(cuts.size(), GateKind::CZ);
    for (std::size_t ci = 0; ci < cuts.size(); ++ci) {
        if (cuts[ci].kind == CutPoint::Kind::Gate) {
            plan.cut_gate_kinds[ci] = dag.nodes[static_cast<std::size_t>(cuts[ci].gate_id)].kind;
        }
    }

    for (int s = 0; s < n_segs; ++s) {
        const int root = dsu.find(s);
        if (frag_of_root[static_cast<std::size_t>(root)] < 0) {
            frag_of_root[static_cast<std::size_t>(root)] = plan.fragment_count();
            plan.fragments.emplace_back();
        }
        FragmentTemplate& ft =
            plan.fragments[static_cast<std::size_t>(frag_of_root[static_cast<std::size_t>(root)])];
        frag_of_seg[static_cast<std::size_t>(s)] = frag_of_root[static_cast<std::size_t>(root)];
        local_of_seg[static_cast<std::size_t>(s)] = ft.n_qubits++;
        ft.qubit_map.push_back(seg_qubit[static_cast<std::size_t>(s)]);
        ft.carries_observable.push_back(false);
    }
    // The final segment of each original qubit reads the original observable.
    for (int q = 0; q < dag.n_qubits; ++q) {
        const int s = cur_seg[static_cast<std::size_t>(q)];
        plan.fragments[static_cast<std::size_t>(frag_of_seg[static_cast<std::size_t>(s)])]
            .carries_observable[static_cast<std::size_t>(local_of_seg[static_cast<std::size_t>(s)])] =
            true;
    }

    for (int id : order) {
        const Gate& g = dag.nodes[static_cast<std::size_t>(id)];
        const auto& segs = gate_segs[static_cast<std::size_t>(id)];
        const auto gate_cut = gate_cut_of.find(id);
        if (gate_cut != gate_cut_of.end()) {
            for (int side = 0; side < 2; ++side) {
                const int s = segs[static_cast<std::size_t>(side)];
                TemplateEntry e;
                e.is_slot = true;
                e.cut_index = gate_cut->second;
                e.side = side;
                e.local_qubit = local_of_seg[static_cast<std::size_t>(s)];
                plan.fragments[static_cast<std::size_t>(frag_of_seg[static_cast<std::size_t>(s)])]
                    .entries.push_back(e);
            }
            continue;
        }
        TemplateEntry e;
        e.gate = g;
        e.gate.id = -1;
        for (std::size_t i = 0; i < segs.size(); ++i) {
            e.gate.qubits[i] = local_of_seg[static_cast<std::size_t>(segs[i])];
        }
        plan.fragments[static_cast<std::size_t>(frag_of_seg[static_cast<std::size_t>(segs[0])])]
            .entries.push_back(std::move(e));
    }

    for (std::size_t ci = 0; ci < cuts.size(); ++ci) {
        if (cuts[ci].kind != CutPoint::Kind::Wire) continue;
        const int up = wire_up_seg[ci];
        const int dn = wire_dn_seg[ci];
        plan.fragments[static_cast<std::size_t>(frag_of_seg[static_cast<std::size_t>(up)])]
            .meas_slots.push_back({static_cast<int>(ci), local_of_seg[static_cast<std::size_t>(up)]});
        plan.fragments[static_cast<std::size_t>(frag_of_seg[static_cast<std::size_t>(dn)])]
            .prep_slots.push_back({static_cast<int>(ci), local_of_seg[static_cast<std::size_t>(dn)]});
    }
    return plan;
}

VariantEnumerator::VariantEnumerator(const CutPlan& plan, PauliString observable, int shots,
                                     std::uint64_t master_seed)
    : plan_(plan),
      observable_(std::move(observable)),
      shots_(shots),
      master_seed_(master_seed),
      term_counts_(plan.term_counts()) {
    if (observable_.size() != plan_.original.n_qubits()) {
        throw Error("observable width does not match the original circuit");
    }
    assignments_ = plan_.assignment_count();
    strides_.assign(term_counts_.size(), 1);
    for (int i = static_cast<int>(term_counts_.size()) - 2; i >= 0; --i) {
        strides_[static_cast<std::size_t>(i)] =
            strides_[static_cast<std::size_t>(i + 1)] *
            static_cast<std::uint64_t>(term_counts_[static_cast<std::size_t>(i + 1)]);
    }
}

std::uint64_t VariantEnumerator::job_count() const {
    return assignments_ * static_cast<std::uint64_t>(plan_.fragment_count());
}

int VariantEnumerator::term_index(std::uint64_t assignment, int cut) const {
    return static_cast<int>((assignment / strides_[static_cast<std::size_t>(cut)]) %
                            static_cast<std::uint64_t>(term_counts_[static_cast<std::size_t>(cut)]));
}

const QpdTerm& VariantEnumerator::term_for(std::uint64_t assignment, int cut) const {
    const int ti = term_index(assignment, cut);
    const CutPoint& c = plan_.cuts[static_cast<std::size_t>(cut)];
    const auto& table = c.kind == CutPoint::Kind::Wire
                            ? wire_cut_decomposition()
                            : gate_cut_decomposition(plan_.cut_gate_kinds[static_cast<std::size_t>(cut)]);
    return table[static_cast<std::size_t>(ti)];
}

double VariantEnumerator::assignment_coefficient(std::uint64_t assignment) const {
    double c = 1.0;
    for (int cut = 0; cut < static_cast<int>(plan_.cuts.size()); ++cut) {
        c *= term_for(assignment, cut).coefficient;
    }
    return c;
}

std::string VariantEnumerator::job_id_for(std::uint64_t assignment, int fragment) {
    return "a" + std::to_string(assignment) + "_f" + std::to_string(fragment);
}

VariantJob VariantEnumerator::job_at(std::uint64_t job_index) const {
    const int n_frags = plan_.fragment_count();
    const std::uint64_t ai = job_index / static_cast<std::uint64_t>(n_frags);
    const int fi = static_cast<int>(job_index % static_cast<std::uint64_t>(n_frags));
    if (ai >= assignments_) throw Error("variant job index out of range");

    const FragmentTemplate& ft = plan_.fragments[static_cast<std::size_t>(fi)];
    VariantJob job;
    job.assignment = ai;
    job.fragment = fi;
    job.job_id = job_id_for(ai, fi);
    job.shots = shots_;
    job.seed = derive_job_seed(master_seed_, job.job_id);

    Circuit c(ft.n_qubits, plan_.original.name().empty()
                               ? job.job_id
                               : plan_.original.name() + "#" + job.job_id);
    auto add_bound = [&c](const Gate& templ, int qubit) {
        Gate g = templ;
        g.id = -1;
        g.qubits = {qubit};
        c.add(std::move(g));
    };

    // Downstream wire-cut ends start on fresh qubits: PREP goes first.
    for (const WireSlot& slot : ft.prep_slots) {
        const QpdTerm& term = term_for(ai, slot.cut_index);
        for (const Gate& g : term.downstream_ops) add_bound(g, slot.local_qubit);
    }
    for (const TemplateEntry& e : ft.entries) {
        if (!e.is_slot) {
            Gate g = e.gate;
            c.add(std::move(g));
            continue;
        }
        const QpdTerm& term = term_for(ai, e.cut_index);
        const auto& ops = e.side == 0 ? term.upstream_ops : term.downstream_ops;
        for (const Gate& g : ops) add_bound(g, e.local_qubit);
    }
    job.circuit = std::move(c);

    PauliString obs(ft.n_qubits);
    for (int lq = 0; lq < ft.n_qubits; ++lq) {
        if (ft.carries_observable[static_cast<std::size_t>(lq)]) {
            obs.ops[static_cast<std::size_t>(lq)] =
                observable_.ops[static_cast<std::size_t>(ft.qubit_map[static_cast<std::size_t>(lq)])];
        }
    }
    for (const WireSlot& slot : ft.meas_slots) {
        // Internal cut-wire ends never carry the user observable.
        if (obs.ops[static_cast<std::size_t>(slot.local_qubit)] != PauliOp::I) {
            throw Error("observable collides with a cut wire measurement slot");
        }
        obs.ops[static_cast<std::size_t>(slot.local_qubit)] =
            term_for(ai, slot.cut_index).measure_basis;
    }
    job.observable = std::move(obs);
    return job;
}

std::vector<VariantJob> VariantEnumerator::all() const {
    const std::uint64_t n = job_count();
    std::vector<VariantJob> jobs;
    jobs.reserve(static_cast<std::size_t>(n));
    for (std::uint64_t i = 0; i < n; ++i) jobs.push_back(job_at(i));
    return jobs;
}

double reconstruct(const CutPlan& plan, const std::map<std::string, VariantResult>& results) {
    const std::uint64_t assignments = plan.assignment_count();
    const int n_frags = plan.fragment_count();
    const std::vector<int> counts = plan.term_counts();
    std::vector<std::uint64_t> strides(counts.size(), 1);
    for (int i = static_cast<int>(counts.size()) - 2; i >= 0; --i) {
        strides[static_cast<std::size_t>(i)] =
            strides[static_cast<std::size_t>(i + 1)] *
            static_cast<std::uint64_t>(counts[static_cast<std::size_t>(i + 1)]);
    }

    double total = 0.0;
    for (std::uint64_t ai = 0; ai < assignments; ++ai) {
        double coeff = 1.0;
        for (std::size_t cut = 0; cut < plan.cuts.size(); ++cut) {
            const int ti = static_cast<int>((ai / strides[cut]) %
                                            static_cast<std::uint64_t>(counts[cut]));
            const auto& table = plan.cuts[cut].kind == CutPoint::Kind::Wire
                                    ? wire_cut_decomposition()
                                    : gate_cut_decomposition(plan.cut_gate_kinds[cut]);
            coeff *= table[static_cast<std::size_t>(ti)].coefficient;
        }
        double prod = 1.0;
        for (int fi = 0; fi < n_frags; ++fi) {
            const std::string id = VariantEnumerator::job_id_for(ai, fi);
            const auto it = results.find(id);
            if (it == results.end()) {
                throw ExecutionError("missing result for job " + id);
            }
            if (std::isnan(it->second.value)) {
                throw Error("NaN estimate for job " + id);
            }
            prod *= it->second.value;
        }
        total += coeff * prod;
    }
    return total;
}

namespace {

using nlohmann::json;

json cut_to_json(const CutPoint& c) {
    json j;
    if (c.kind == CutPoint::Kind::Wire) {
        j["kind"] = "wire";
        j["upstream"] = c.upstream_gate;
        j["downstream"] = c.downstream_gate;
        j["qubit"] = c.qubit;
    } else {
        j["kind"] = "gate";
        j["gate"] = c.gate_id;
    }
    return j;
}

CutPoint cut_from_json(const json& j) {
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) {
        throw ConfigError("cut entry must be an object with a 'kind'");
    }
    const std::string kind = j["kind"].get<std::string>();
    auto field = [&j](const char* name) {
        if (!j.contains(name) || !j[name].is_number_integer()) {
            throw ConfigError(std::string("cut entry missing integer field '") + name + "'");
        }
        return j[name].get<int>();
    };
    if (kind == "wire") {
        return CutPoint::wire(field("upstream"), field("downstream"), field("qubit"));
    }
    if (kind == "gate") {
        return CutPoint::gate(field("gate"));
    }
    throw ConfigError("unknown cut kind '" + kind + "'");
}

} // namespace

std::string cut_list_to_json(const std::vector<CutPoint>& cuts, int indent) {
    json arr = json::array();
    for (const CutPoint& c : cuts) arr.push_back(cut_to_json(c));
    return arr.dump(indent);
}

std::vector<CutPoint> parse_cut_list(std::string_view text) {
    json arr;
    try {
        arr = json::parse(text);
    } catch (const json::exception& e) {
        throw ConfigError(std::string("malformed cut list: ") + e.what());
    }
    if (!arr.is_array()) throw ConfigError("cut list must be a JSON array");
    std::vector<CutPoint> cuts;
    for (const json& j : arr) cuts.push_back(cut_from_json(j));
    return cuts;
}

std::string plan_to_json(const CutPlan& plan, int indent) {
    json j;
    j["circuit"] = json::parse(serialize_circuit(plan.original));
    json cuts = json::array();
    for (const CutPoint& c : plan.cuts) cuts.push_back(cut_to_json(c));
    j["cuts"] = std::move(cuts);
    j["assignments"] = plan.assignment_count_estimate();

    json frags = json::array();
    for (const FragmentTemplate& ft : plan.fragments) {
        json f;
        f["qubits"] = ft.n_qubits;
        f["qubit_map"] = ft.qubit_map;
        json entries = json::array();
        for (const TemplateEntry& e : ft.entries) {
            if (e.is_slot) {
                entries.push_back(json{{"slot", e.cut_index},
                                       {"side", e.side},
                                       {"qubit", e.local_qubit}});
            } else {
                json g = json::array();
                g.push_back(e.gate.kind == GateKind::PREP
                                ? std::string("prep") + prep_state_name(e.gate.prep)
                                : gate_kind_name(e.gate.kind));
                g.push_back(e.gate.qubits);
                if (!e.gate.params.empty()) g.push_back(e.gate.params);
                entries.push_back(std::move(g));
            }
        }
        f["template"] = std::move(entries);
        json meas = json::array();
        for (const WireSlot& s : ft.meas_slots) {
            meas.push_back(json{{"cut", s.cut_index}, {"qubit", s.local_qubit}});
        }
        f["meas_slots"] = std::move(meas);
        json preps = json::array();
        for (const WireSlot& s : ft.prep_slots) {
            preps.push_back(json{{"cut", s.cut_index}, {"qubit", s.local_qubit}});
        }
        f["prep_slots"] = std::move(preps);
        frags.push_back(std::move(f));
    }
    j["fragments"] = std::move(frags);
    return j.dump(indent);
}

} // namespace qcut
