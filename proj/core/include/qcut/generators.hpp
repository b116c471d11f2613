#pragma once

#include "qcut/circuit.hpp"

#include <cstdint>

namespace qcut {

/// Hardware-efficient ansatz: per layer, an RY rotation on every qubit, an RZ
/// rotation on every qubit, then a closed ring of CZ entanglers
/// CZ(0,1), CZ(1,2), ..., CZ(n-1,0). Angles are uniform in [0, 2pi) from
/// `seed`. Depth is exactly (2+n)*layers.
Circuit generate_hea(int n_qubits, int layers, std::uint64_t seed);

/// Random circuit on a rows x cols grid. Each cycle applies one random
/// rotation (RX/RY/RZ, random angle) to every qubit, then CZ gates on one of
/// four alternating grid-coupler patterns (horizontal even/odd column,
/// vertical even/odd row). All two-qubit gates are CZ between grid-adjacent
/// qubits.
Circuit generate_rc(int rows, int cols, int depth, std::uint64_t seed);

} // namespace qcut
