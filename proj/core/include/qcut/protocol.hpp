#pragma once

#include "qcut/circuit.hpp"

#include <cstdint>
#include <string>
#include <string_view>

namespace qcut {

/// Newline-delimited JSON frames over TCP.
///
///   client -> worker   {"type":"hello"}
///                      {"type":"job","id":...,"circuit":{...},
///                       "observable":"ZZ..","shots":n,"seed":n}
///   worker -> client   {"type":"capabilities","max_qubits":n,
///                       "supports_midmeas":b,"worker_id":"..."}
///                      {"type":"result","id":...,"value":x,"wall_ms":n}
///                      {"type":"error","id":...,"code":"...","message":"..."}

struct JobFrame {
    std::string id;
    Circuit circuit;
    PauliString observable;
    int shots = 0;
    std::uint64_t seed = 0;
};

struct CapabilitiesFrame {
    int max_qubits = kMaxSimQubits;
    bool supports_midmeas = true;
    std::string worker_id;
};

struct ResultFrame {
    std::string id;
    double value = 0.0;
    std::int64_t wall_ms = 0;
};

struct ErrorFrame {
    std::string id;       // empty when the request id could not be parsed
    std::string code;     // "bad_request", "capacity_exceeded", ...
    std::string message;
};

struct Frame {
    enum class Type { Hello, Job, Capabilities, Result, Error };
    Type type = Type::Hello;
    JobFrame job;
    CapabilitiesFrame capabilities;
    ResultFrame result;
    ErrorFrame error;
};

std::string encode_hello();
std::string encode_job(const JobFrame& f);
std::string encode_capabilities(const CapabilitiesFrame& f);
std::string encode_result(const ResultFrame& f);
std::string encode_error(const ErrorFrame& f);

/// Decodes one frame line (without the trailing newline). Throws ConfigError
/// on malformed input.
Frame decode_frame(std::string_view line);

} // namespace qcut
