#pragma once

#include "qcut/circuit.hpp"

#include <string>
#include <string_view>

namespace qcut {

/// Parses a circuit document:
///   {"qubits": n, "name": "...", "gates": [["h",[0]], ["rz",[1],[0.5]], ...]}
/// Gate kinds are lowercase; measurements are "mz"/"mx"/"my" and preparations
/// "prep0", "prep1", "prep+", "prep-", "prep+i", "prep-i".
/// Throws ConfigError on malformed documents, unknown kinds, bad arity, or
/// out-of-range qubit indices.
Circuit parse_circuit(std::string_view text);

/// Emits the document form of `c`, gates in execution order. Parsing the
/// result reproduces `c` exactly (ids are positional).
std::string serialize_circuit(const Circuit& c, int indent = -1);

} // namespace qcut
