#include "qcut/protocol.hpp"

#include "qcut/circuit_io.hpp"
#include "qcut/error.hpp"

#include <json.hpp>

namespace qcut {

namespace {
using nlohmann::json;
}

std::string encode_hello() { return R"({"type":"hello"})"; }

std::string encode_job(const JobFrame& f) {
    json j;
    j["type"] = "job";
    j["id"] = f.id;
    j["circuit"] = json::parse(serialize_circuit(f.circuit));
    j["observable"] = f.observable.str();
    j["shots"] = f.shots;
    j["seed"] = f.seed;
    return j.dump();
}

std::string encode_capabilities(const CapabilitiesFrame& f) {
    json j;
    j["type"] = "capabilities";
    j["max_qubits"] = f.max_qubits;
    j["supports_midmeas"] = f.supports_midmeas;
    j["worker_id"] = f.worker_id;
    return j.dump();
}

std::string encode_result(const ResultFrame& f) {
    json j;
    j["type"] = "result";
    j["id"] = f.id;
    j["value"] = f.value;
    j["wall_ms"] = f.wall_ms;
    return j.dump();
}

std::string encode_error(const ErrorFrame& f) {
    json j;
    j["type"] = "error";
    j["id"] = f.id;
    j["code"] = f.code;
    j["message"] = f.message;
    return j.dump();
}

Frame decode_frame(std::string_view line) {
    json j;
    try {
        j = json::parse(line);
    } catch (const json::exception& e) {
        throw ConfigError(std::string("malformed frame: ") + e.what());
    }
    if (!j.is_object() || !j.contains("type") || !j["type"].is_string()) {
        throw ConfigError("frame needs a string 'type'");
    }
    const std::string type = j["type"].get<std::string>();
    Frame f;
    try {
        if (type == "hello") {
            f.type = Frame::Type::Hello;
        } else if (type == "job") {
            f.type = Frame::Type::Job;
            f.job.id = j.at("id").get<std::string>();
            f.job.circuit = parse_circuit(j.at("circuit").dump());
            f.job.observable = PauliString::parse(j.at("observable").get<std::string>());
            f.job.shots = j.at("shots").get<int>();
            f.job.seed = j.at("seed").get<std::uint64_t>();
        } else if (type == "capabilities") {
            f.type = Frame::Type::Capabilities;
            f.capabilities.max_qubits = j.at("max_qubits").get<int>();
            f.capabilities.supports_midmeas = j.at("supports_midmeas").get<bool>();
            if (j.contains("worker_id")) {
                f.capabilities.worker_id = j["worker_id"].get<std::string>();
            }
        } else if (type == "result") {
            f.type = Frame::Type::Result;
            f.result.id = j.at("id").get<std::string>();
            f.result.value = j.at("value").get<double>();
            f.result.wall_ms = j.at("wall_ms").get<std::int64_t>();
        } else if (type == "error") {
            f.type = Frame::Type::Error;
            f.error.id = j.value("id", std::string{});
            f.error.code = j.value("code", std::string{"unknown"});
            f.error.message = j.value("message", std::string{});
        } else {
            throw ConfigError("unknown frame type '" + type + "'");
        }
    } catch (const json::exception& e) {
        throw ConfigError(std::string("malformed '") + type + "' frame: " + e.what());
    }
    return f;
}

} // namespace qcut
