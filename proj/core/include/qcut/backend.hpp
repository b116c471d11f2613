#pragma once

#include "qcut/circuit.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace qcut {

enum class BackendKind { LocalSim, RemoteSim };

/// Capability record used for routing: a job may only run on a backend whose
/// limits it respects.
struct BackendDescriptor {
    std::string id;
    BackendKind kind = BackendKind::LocalSim;
    int max_qubits = kMaxSimQubits;
    bool supports_midmeas = true;
    int parallelism = 1;          // concurrent worker slots
    std::string endpoint;         // host:port, remote only
    int latency_ms = 0;           // artificial per-job dispatch latency

    void validate() const;
};

BackendDescriptor local_backend(std::string id, int parallelism,
                                int max_qubits = kMaxSimQubits);

/// Backend config document: {"backends":[{...}, ...]}. Fields: id, kind
/// ("local_sim" | "remote_sim"), max_qubits, supports_midmeas, parallelism,
/// endpoint, latency_ms.
std::vector<BackendDescriptor> parse_backends(std::string_view text);
std::string backends_to_json(const std::vector<BackendDescriptor>& backends,
                             int indent = -1);

} // namespace qcut
