#include "qcut/circuit.hpp"

#include "qcut/error.hpp"

#include <algorithm>

namespace qcut {

const char* gate_kind_name(GateKind k) {
    switch (k) {
        case GateKind::H: return "h";
        case GateKind::X: return "x";
        case GateKind::Y: return "y";
        case GateKind::Z: return "z";
        case GateKind::S: return "s";
        case GateKind::SDG: return "sdg";
        case GateKind::RX: return "rx";
        case GateKind::RY: return "ry";
        case GateKind::RZ: return "rz";
        case GateKind::CZ: return "cz";
        case GateKind::CX: return "cx";
        case GateKind::MEAS_Z: return "mz";
        case GateKind::MEAS_X: return "mx";
        case GateKind::MEAS_Y: return "my";
        case GateKind::PREP: return "prep";
    }
    return "?";
}

const char* prep_state_name(PrepState s) {
    switch (s) {
        case PrepState::Zero: return "0";
        case PrepState::One: return "1";
        case PrepState::Plus: return "+";
        case PrepState::Minus: return "-";
        case PrepState::PlusI: return "+i";
        case PrepState::MinusI: return "-i";
    }
    return "?";
}

bool is_two_qubit(GateKind k) { return k == GateKind::CZ || k == GateKind::CX; }

bool is_rotation(GateKind k) {
    return k == GateKind::RX || k == GateKind::RY || k == GateKind::RZ;
}

bool is_measurement(GateKind k) {
    return k == GateKind::MEAS_Z || k == GateKind::MEAS_X || k == GateKind::MEAS_Y;
}

Gate make_gate(GateKind kind, std::vector<int> qubits, std::vector<double> params) {
    Gate g;
    g.kind = kind;
    g.qubits = std::move(qubits);
    g.params = std::move(params);
    return g;
}

Gate make_prep(PrepState state, int qubit) {
    Gate g;
    g.kind = GateKind::PREP;
    g.qubits = {qubit};
    g.prep = state;
    return g;
}

Circuit::Circuit(int n_qubits, std::string name)
    : n_qubits_(n_qubits), name_(std::move(name)) {
    if (n_qubits < 1) {
        throw ConfigError("circuit must have at least one qubit");
    }
}

int Circuit::add(Gate g) {
    const std::size_t want_qubits = is_two_qubit(g.kind) ? 2 : 1;
    if (g.qubits.size() != want_qubits) {
        throw ConfigError(std::string("gate '") + gate_kind_name(g.kind) +
                          "' takes " + std::to_string(want_qubits) + " qubit(s), got " +
                          std::to_string(g.qubits.size()));
    }
    const std::size_t want_params = is_rotation(g.kind) ? 1 : 0;
    if (g.params.size() != want_params) {
        throw ConfigError(std::string("gate '") + gate_kind_name(g.kind) +
                          "' takes " + std::to_string(want_params) + " parameter(s), got " +
                          std::to_string(g.params.size()));
    }
    for (int q : g.qubits) {
        if (q < 0 || q >= n_qubits_) {
            throw ConfigError("qubit index out of range: " + std::to_string(q) +
                              " on a " + std::to_string(n_qubits_) + "-qubit circuit");
        }
    }
    if (g.qubits.size() == 2 && g.qubits[0] == g.qubits[1]) {
        throw ConfigError("two-qubit gate with identical qubits: " +
                          std::to_string(g.qubits[0]));
    }
    g.id = static_cast<int>(gates_.size());
    gates_.push_back(std::move(g));
    return gates_.back().id;
}

const Gate& Circuit::gate_by_id(int id) const {
    if (!has_gate(id)) {
        throw ConfigError("no gate with id " + std::to_string(id));
    }
    return gates_[static_cast<std::size_t>(id)];
}

bool Circuit::has_gate(int id) const {
    return id >= 0 && id < static_cast<int>(gates_.size());
}

int Circuit::depth() const {
    std::vector<int> level(static_cast<std::size_t>(n_qubits_), 0);
    for (const Gate& g : gates_) {
        int at = 0;
        for (int q : g.qubits) at = std::max(at, level[static_cast<std::size_t>(q)]);
        for (int q : g.qubits) level[static_cast<std::size_t>(q)] = at + 1;
    }
    return *std::max_element(level.begin(), level.end());
}

int Circuit::two_qubit_gate_count() const {
    return static_cast<int>(std::count_if(gates_.begin(), gates_.end(), [](const Gate& g) {
        return is_two_qubit(g.kind);
    }));
}

PauliString PauliString::parse(std::string_view text) {
    PauliString p;
    p.ops.reserve(text.size());
    for (char c : text) {
        switch (c) {
            case 'I': case 'i': p.ops.push_back(PauliOp::I); break;
            case 'X': case 'x': p.ops.push_back(PauliOp::X); break;
            case 'Y': case 'y': p.ops.push_back(PauliOp::Y); break;
            case 'Z': case 'z': p.ops.push_back(PauliOp::Z); break;
            default:
                throw ConfigError(std::string("invalid Pauli letter '") + c + "'");
        }
    }
    if (p.ops.empty()) {
        throw ConfigError("empty Pauli string");
    }
    return p;
}

PauliString PauliString::all_z(int n_qubits) {
    PauliString p(n_qubits);
    for (auto& op : p.ops) op = PauliOp::Z;
    return p;
}

bool PauliString::is_identity() const {
    return std::all_of(ops.begin(), ops.end(), [](PauliOp o) { return o == PauliOp::I; });
}

std::string PauliString::str() const {
    std::string s;
    s.reserve(ops.size());
    for (PauliOp o : ops) {
        switch (o) {
            case PauliOp::I: s += 'I'; break;
            case PauliOp::X: s += 'X'; break;
            case PauliOp::Y: s += 'Y'; break;
            case PauliOp::Z: s += 'Z'; break;
        }
    }
    return s;
}

} // namespace qcut
