#include "qcut/backend.hpp"

#include "qcut/error.hpp"

#include <json.hpp>

namespace qcut {

void BackendDescriptor::validate() const {
    if (id.empty()) throw ConfigError("backend needs a non-empty id");
    if (parallelism < 1) {
        throw ConfigError("backend '" + id + "': parallelism must be at least 1");
    }
    if (max_qubits < 1) {
        throw ConfigError("backend '" + id + "': max_qubits must be at least 1");
    }
    if (kind == BackendKind::RemoteSim && endpoint.empty()) {
        throw ConfigError("backend '" + id + "': remote backends need an endpoint");
    }
    if (latency_ms < 0) {
        throw ConfigError("backend '" + id + "': latency_ms must be non-negative");
    }
}

BackendDescriptor local_backend(std::string id, int parallelism, int max_qubits) {
    BackendDescriptor b;
    b.id = std::move(id);
    b.kind = BackendKind::LocalSim;
    b.max_qubits = max_qubits;
    b.parallelism = parallelism;
    b.validate();
    return b;
}

namespace {

using nlohmann::json;

BackendDescriptor backend_from_json(const json& j) {
    if (!j.is_object()) throw ConfigError("backend entry must be an object");
    BackendDescriptor b;
    if (j.contains("id")) b.id = j["id"].get<std::string>();
    if (j.contains("kind")) {
        const std::string kind = j["kind"].get<std::string>();
        if (kind == "local_sim") {
            b.kind = BackendKind::LocalSim;
        } else if (kind == "remote_sim") {
            b.kind = BackendKind::RemoteSim;
        } else {
            throw ConfigError("unknown backend kind '" + kind + "'");
        }
    }
    if (j.contains("max_qubits")) b.max_qubits = j["max_qubits"].get<int>();
    if (j.contains("supports_midmeas")) b.supports_midmeas = j["supports_midmeas"].get<bool>();
    if (j.contains("parallelism")) b.parallelism = j["parallelism"].get<int>();
    if (j.contains("endpoint")) b.endpoint = j["endpoint"].get<std::string>();
    if (j.contains("latency_ms")) b.latency_ms = j["latency_ms"].get<int>();
    b.validate();
    return b;
}

} // namespace

std::vector<BackendDescriptor> parse_backends(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw ConfigError(std::string("malformed backend config: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("backends") || !doc["backends"].is_array()) {
        throw ConfigError("backend config needs a 'backends' array");
    }
    std::vector<BackendDescriptor> backends;
    for (const json& j : doc["backends"]) backends.push_back(backend_from_json(j));
    if (backends.empty()) throw ConfigError("backend config lists no backends");
    return backends;
}

std::string backends_to_json(const std::vector<BackendDescriptor>& backends, int indent) {
    json arr = json::array();
    for (const BackendDescriptor& b : backends) {
        json j;
        j["id"] = b.id;
        j["kind"] = b.kind == BackendKind::LocalSim ? "local_sim" : "remote_sim";
        j["max_qubits"] = b.max_qubits;
        j["supports_midmeas"] = b.supports_midmeas;
        j["parallelism"] = b.parallelism;
        if (!b.endpoint.empty()) j["endpoint"] = b.endpoint;
        if (b.latency_ms > 0) j["latency_ms"] = b.latency_ms;
        arr.push_back(std::move(j));
    }
    json doc;
    doc["backends"] = std::move(arr);
    return doc.dump(indent);
}

} // namespace qcut
