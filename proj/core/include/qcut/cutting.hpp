#pragma once

#include "qcut/circuit.hpp"
#include "qcut/dag.hpp"
#include "qcut/qpd.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace qcut {

/// A cut location. Wire cuts name the dag edge they sever (two gates that
/// are consecutive on one qubit); gate cuts name a CZ/CX node.
struct CutPoint {
    enum class Kind { Wire, Gate };
    Kind kind = Kind::Wire;
    int upstream_gate = -1;    // wire cuts
    int downstream_gate = -1;  // wire cuts
    int qubit = -1;            // wire cuts
    int gate_id = -1;          // gate cuts

    static CutPoint wire(int upstream, int downstream, int qubit);
    static CutPoint gate(int gate_id);

    bool operator==(const CutPoint&) const = default;
};

/// Fragment-template entry: a concrete gate on fragment-local qubits, or a
/// placeholder filled by one side of a gate-cut term.
struct TemplateEntry {
    bool is_slot = false;
    Gate gate;           // valid when !is_slot
    int cut_index = -1;  // valid when is_slot
    int side = 0;        // 0 = first qubit of the cut gate, 1 = second
    int local_qubit = -1;
};

/// Wire-cut attachment point inside one fragment.
struct WireSlot {
    int cut_index = -1;
    int local_qubit = -1;
};

struct FragmentTemplate {
    int n_qubits = 0;
    std::vector<TemplateEntry> entries;
    std::vector<int> qubit_map;             // local qubit -> original qubit
    std::vector<bool> carries_observable;   // local qubit holds the original
                                            // qubit's terminal wire segment
    std::vector<WireSlot> meas_slots;       // upstream cut ends: observable
                                            // letter comes from the term
    std::vector<WireSlot> prep_slots;       // downstream cut starts: PREP gate
                                            // comes from the term
};

struct CutPlan {
    Circuit original;
    std::vector<CutPoint> cuts;
    std::vector<GateKind> cut_gate_kinds;   // per cut; CZ/CX for gate cuts
    std::vector<FragmentTemplate> fragments;

    int fragment_count() const { return static_cast<int>(fragments.size()); }
    int max_fragment_qubits() const;

    /// Per-cut term-table sizes (8 for wire, 6 for gate).
    std::vector<int> term_counts() const;
    /// Product of term counts; throws if it does not fit in 62 bits.
    std::uint64_t assignment_count() const;
    /// Same product without overflow concerns, for reporting.
    double assignment_count_estimate() const;
};

/// Splits the circuit at the given cut points. Fragments are the connected
/// components of the dag once cut gates are removed and cut wires severed;
/// each severed wire continues on a fresh fragment qubit. An empty cut list
/// yields a single fragment equal to the original. A cut set that fails to
/// disconnect the graph is valid and simply yields fewer fragments.
CutPlan apply_cuts(const CircuitDag& dag, const std::vector<CutPoint>& cuts);

/// One executable subcircuit: a fragment instantiated with a term choice for
/// every cut.
struct VariantJob {
    std::string job_id;
    std::uint64_t assignment = 0;
    int fragment = 0;
    Circuit circuit;
    PauliString observable;
    int shots = 0;
    std::uint64_t seed = 0;
};

struct VariantResult {
    std::string job_id;
    double value = 0.0;
    std::string backend_id;
    std::int64_t wall_ms = 0;
};

/// Lazy Cartesian enumeration of variant jobs: assignments iterate
/// lexicographically over the cuts (first cut slowest), fragments in index
/// order inside each assignment. Deterministic.
class VariantEnumerator {
public:
    VariantEnumerator(const CutPlan& plan, PauliString observable, int shots,
                      std::uint64_t master_seed);

    std::uint64_t assignment_count() const { return assignments_; }
    std::uint64_t job_count() const;

    int term_index(std::uint64_t assignment, int cut) const;
    double assignment_coefficient(std::uint64_t assignment) const;

    VariantJob job_at(std::uint64_t job_index) const;
    std::vector<VariantJob> all() const;

    static std::string job_id_for(std::uint64_t assignment, int fragment);

private:
    const CutPlan& plan_;
    PauliString observable_;
    int shots_;
    std::uint64_t master_seed_;
    std::vector<int> term_counts_;
    std::vector<std::uint64_t> strides_;
    std::uint64_t assignments_ = 1;

    const QpdTerm& term_for(std::uint64_t assignment, int cut) const;
};

/// Signed sum over assignments of (product of per-cut coefficients) times
/// (product of per-fragment signed expectations). Outcome signs are already
/// inside each fragment value, so only the static coefficient enters here.
/// Throws ExecutionError on a missing job result and Error on NaN estimates.
double reconstruct(const CutPlan& plan,
                   const std::map<std::string, VariantResult>& results);

// --- serialization (CLI and remote protocol surfaces) ---

std::string cut_list_to_json(const std::vector<CutPoint>& cuts, int indent = -1);
std::vector<CutPoint> parse_cut_list(std::string_view text);

/// Full plan document: original circuit, cuts, fragment templates and qubit
/// maps. Informational; a plan is reconstructed from (circuit, cuts).
std::string plan_to_json(const CutPlan& plan, int indent = -1);

} // namespace qcut
