#pragma once

#include "qcut/circuit.hpp"

#include <vector>

namespace qcut {

/// One term of a quasi-probability decomposition.
///
/// Wire-cut terms pair a measurement basis on the upstream end of the cut
/// wire with a state preparation on the downstream end. The basis is folded
/// into the upstream fragment's observable (the cut wire is terminal there),
/// so `measure_basis` is the whole upstream action and `downstream_ops`
/// holds the single PREP gate.
///
/// Gate-cut terms replace a two-qubit gate with local operations on each
/// qubit; `upstream_ops` acts on the first qubit, `downstream_ops` on the
/// second. Terms containing a MEAS_Z are outcome-signed: the measurement
/// outcome bit m multiplies the term by (-1)^m at estimation time.
///
/// Ops are templates: every gate inside them targets qubit 0 and is re-bound
/// to the fragment-local qubit when a variant is instantiated.
struct QpdTerm {
    int index = 0;                   // 1-based position in its table
    PauliOp measure_basis = PauliOp::I;
    std::vector<Gate> upstream_ops;
    std::vector<Gate> downstream_ops;
    double coefficient = 0.0;
    bool outcome_signed = false;
};

/// The 8-term identity-channel resolution replacing a cut wire:
/// rho = sum_i c_i Tr(O_i rho) rho_i over O in {I, Z, X, Y} paired with the
/// corresponding eigenstate preparations, all coefficients +-1/2.
const std::vector<QpdTerm>& wire_cut_decomposition();

/// The 6-term quasi-probability decomposition of a CZ (or CX) channel into
/// local operations and mid-circuit measurements. Coefficients are +-1/2;
/// the sum of magnitudes is 3. CX is the CZ table with the target-qubit side
/// conjugated by H.
const std::vector<QpdTerm>& gate_cut_decomposition(GateKind kind);

/// Term-table size for a cut of the given family: 8 for wire, 6 for gate.
int qpd_term_count(bool is_wire);

} // namespace qcut
