#include "qcut/circuit_io.hpp"

#include "qcut/error.hpp"

#include <json.hpp>

#include <utility>

namespace qcut {

namespace {

using nlohmann::json;

std::pair<GateKind, PrepState> kind_from_token(const std::string& token) {
    static const struct { const char* name; GateKind kind; } plain[] = {
        {"h", GateKind::H},     {"x", GateKind::X},     {"y", GateKind::Y},
        {"z", GateKind::Z},     {"s", GateKind::S},     {"sdg", GateKind::SDG},
        {"rx", GateKind::RX},   {"ry", GateKind::RY},   {"rz", GateKind::RZ},
        {"cz", GateKind::CZ},   {"cx", GateKind::CX},   {"mz", GateKind::MEAS_Z},
        {"mx", GateKind::MEAS_X}, {"my", GateKind::MEAS_Y},
    };
    for (const auto& e : plain) {
        if (token == e.name) return {e.kind, PrepState::Zero};
    }
    static const struct { const char* name; PrepState state; } preps[] = {
        {"prep0", PrepState::Zero},   {"prep1", PrepState::One},
        {"prep+", PrepState::Plus},   {"prep-", PrepState::Minus},
        {"prep+i", PrepState::PlusI}, {"prep-i", PrepState::MinusI},
    };
    for (const auto& e : preps) {
        if (token == e.name) return {GateKind::PREP, e.state};
    }
    throw ConfigError("unknown gate kind '" + token + "'");
}

std::string token_from_gate(const Gate& g) {
    if (g.kind == GateKind::PREP) {
        return std::string("prep") + prep_state_name(g.prep);
    }
    return gate_kind_name(g.kind);
}

} // namespace

Circuit parse_circuit(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw ConfigError(std::string("malformed circuit document: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("qubits") || !doc["qubits"].is_number_integer()) {
        throw ConfigError("circuit document needs an integer 'qubits' field");
    }
    const int n = doc["qubits"].get<int>();
    if (n < 1) {
        throw ConfigError("circuit document: 'qubits' must be positive");
    }
    std::string name;
    if (doc.contains("name")) {
        if (!doc["name"].is_string()) throw ConfigError("circuit 'name' must be a string");
        name = doc["name"].get<std::string>();
    }
    Circuit c(n, std::move(name));
    if (!doc.contains("gates")) return c;
    if (!doc["gates"].is_array()) throw ConfigError("circuit 'gates' must be an array");

    for (const json& item : doc["gates"]) {
        if (!item.is_array() || item.size() < 2 || item.size() > 3 ||
            !item[0].is_string() || !item[1].is_array()) {
            throw ConfigError("gate entry must be [kind, [qubits...], [params...]?]");
        }
        auto [kind, prep] = kind_from_token(item[0].get<std::string>());
        Gate g;
        g.kind = kind;
        g.prep = prep;
        for (const json& q : item[1]) {
            if (!q.is_number_integer()) throw ConfigError("qubit indices must be integers");
            g.qubits.push_back(q.get<int>());
        }
        if (item.size() == 3) {
            if (!item[2].is_array()) throw ConfigError("gate params must be an array");
            for (const json& p : item[2]) {
                if (!p.is_number()) throw ConfigError("gate params must be numbers");
                g.params.push_back(p.get<double>());
            }
        }
        c.add(std::move(g));  // bounds and arity checked here
    }
    return c;
}

std::string serialize_circuit(const Circuit& c, int indent) {
    json doc;
    doc["qubits"] = c.n_qubits();
    if (!c.name().empty()) doc["name"] = c.name();
    json gates = json::array();
    for (const Gate& g : c.gates()) {
        json entry = json::array();
        entry.push_back(token_from_gate(g));
        entry.push_back(g.qubits);
        if (!g.params.empty()) entry.push_back(g.params);
        gates.push_back(std::move(entry));
    }
    doc["gates"] = std::move(gates);
    return doc.dump(indent);
}

} // namespace qcut
