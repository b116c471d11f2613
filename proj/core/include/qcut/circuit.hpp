#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace qcut {

/// Maximum statevector width the simulator accepts (2^26 amplitudes = 1 GiB).
inline constexpr int kMaxSimQubits = 26;

enum class GateKind : std::uint8_t {
    H, X, Y, Z, S, SDG,
    RX, RY, RZ,
    CZ, CX,
    MEAS_Z, MEAS_X, MEAS_Y,
    PREP,
};

/// The six Pauli eigenstates a PREP gate can load onto a fresh qubit.
enum class PrepState : std::uint8_t {
    Zero,       // |0>
    One,        // |1>
    Plus,       // |+>
    Minus,      // |->
    PlusI,      // |+i>
    MinusI,     // |-i>
};

const char* gate_kind_name(GateKind k);
const char* prep_state_name(PrepState s);

bool is_two_qubit(GateKind k);
bool is_rotation(GateKind k);
bool is_measurement(GateKind k);

/// One circuit element. Measurement and state-preparation pseudo-gates are
/// ordinary elements so cut fragments stay plain circuits.
struct Gate {
    GateKind kind = GateKind::H;
    std::vector<int> qubits;     // 2 entries iff kind is CZ/CX, else 1
    std::vector<double> params;  // one angle (radians) iff kind is RX/RY/RZ
    PrepState prep = PrepState::Zero;  // meaningful only when kind == PREP
    int id = -1;                 // unique within a circuit, assigned on add

    bool operator==(const Gate&) const = default;
};

// Unbound constructors (qubit filled in later by the cut instantiation).
Gate make_gate(GateKind kind, std::vector<int> qubits, std::vector<double> params = {});
Gate make_prep(PrepState state, int qubit);

class Circuit {
public:
    Circuit() = default;
    explicit Circuit(int n_qubits, std::string name = {});

    int n_qubits() const { return n_qubits_; }
    const std::string& name() const { return name_; }
    void set_name(std::string name) { name_ = std::move(name); }

    const std::vector<Gate>& gates() const { return gates_; }
    int gate_count() const { return static_cast<int>(gates_.size()); }
    bool empty() const { return gates_.empty(); }

    /// Appends a gate, validating qubit bounds and arity; assigns the next
    /// dense id. Returns the assigned id.
    int add(Gate g);

    int add(GateKind kind, std::vector<int> qubits, std::vector<double> params = {}) {
        return add(make_gate(kind, std::move(qubits), std::move(params)));
    }
    int add_prep(PrepState state, int qubit) { return add(make_prep(state, qubit)); }

    const Gate& gate_by_id(int id) const;
    bool has_gate(int id) const;

    /// Critical-path length: the maximum number of gates any qubit timeline
    /// passes through, counting multi-qubit gates on every qubit they touch.
    int depth() const;

    int two_qubit_gate_count() const;

    bool operator==(const Circuit&) const = default;

private:
    int n_qubits_ = 0;
    std::string name_;
    std::vector<Gate> gates_;
};

enum class PauliOp : std::uint8_t { I, X, Y, Z };

/// Tensor product of single-qubit Paulis; ops[q] acts on qubit q.
struct PauliString {
    std::vector<PauliOp> ops;

    PauliString() = default;
    explicit PauliString(int n_qubits) : ops(n_qubits, PauliOp::I) {}

    static PauliString parse(std::string_view text);
    static PauliString all_z(int n_qubits);

    int size() const { return static_cast<int>(ops.size()); }
    bool is_identity() const;
    std::string str() const;

    bool operator==(const PauliString&) const = default;
};

} // namespace qcut
