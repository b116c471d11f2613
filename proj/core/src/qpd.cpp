#include "qcut/qpd.hpp"

#include "qcut/error.hpp"

#include <numbers>

namespace qcut {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;

Gate op(GateKind k, std::vector<double> params = {}) {
    return make_gate(k, {0}, std::move(params));
}

std::vector<QpdTerm> build_wire_table() {
    auto term = [](int index, PauliOp basis, PrepState prep, double c) {
        QpdTerm t;
        t.index = index;
        t.measure_basis = basis;
        t.downstream_ops = {make_prep(prep, 0)};
        t.coefficient = c;
        return t;
    };
    // rho = 1/2 [ Tr(rho) I + Tr(Z rho) Z + Tr(X rho) X + Tr(Y rho) Y ]
    // with each Pauli written as a difference of its eigenstate projectors.
    return {
        term(1, PauliOp::I, PrepState::Zero, +0.5),
        term(2, PauliOp::I, PrepState::One, +0.5),
        term(3, PauliOp::Z, PrepState::Zero, +0.5),
        term(4, PauliOp::Z, PrepState::One, -0.5),
        term(5, PauliOp::X, PrepState::Plus, +0.5),
        term(6, PauliOp::X, PrepState::Minus, -0.5),
        term(7, PauliOp::Y, PrepState::PlusI, +0.5),
        term(8, PauliOp::Y, PrepState::MinusI, -0.5),
    };
}

// CZ = e^{-i pi/4} (RZ(-pi/2) x RZ(-pi/2)) e^{-i pi/4 Z x Z}, and the
// channel of e^{i theta Z x Z} splits into six local pieces:
//   cos^2                 : identity
//   sin^2                 : Z x Z
//   +-sin cos             : signed Z measurement on one side paired with
//                           e^{+-i pi/4 Z} on the other, both orientations.
// At theta = -pi/4 every coefficient has magnitude 1/2. Folding the RZ
// corrections through the measurement terms leaves plain Z / identity on the
// unmeasured side; the correction on a measured wire only rephases a
// dephased state and is dropped.
std::vector<QpdTerm> build_cz_table() {
    auto term = [](int index, std::vector<Gate> a, std::vector<Gate> b, double c,
                   bool outcome_signed) {
        QpdTerm t;
        t.index = index;
        t.upstream_ops = std::move(a);
        t.downstream_ops = std::move(b);
        t.coefficient = c;
        t.outcome_signed = outcome_signed;
        return t;
    };
    return {
        term(1, {op(GateKind::RZ, {-kHalfPi})}, {op(GateKind::RZ, {-kHalfPi})}, +0.5, false),
        term(2, {op(GateKind::Z), op(GateKind::RZ, {-kHalfPi})},
             {op(GateKind::Z), op(GateKind::RZ, {-kHalfPi})}, +0.5, false),
        term(3, {op(GateKind::MEAS_Z)}, {op(GateKind::Z)}, -0.5, true),
        term(4, {op(GateKind::MEAS_Z)}, {}, +0.5, true),
        term(5, {op(GateKind::Z)}, {op(GateKind::MEAS_Z)}, -0.5, true),
        term(6, {}, {op(GateKind::MEAS_Z)}, +0.5, true),
    };
}

// CX(control, target) = (I x H) CZ (I x H): conjugate the target side.
std::vector<QpdTerm> build_cx_table() {
    std::vector<QpdTerm> table = build_cz_table();
    for (QpdTerm& t : table) {
        std::vector<Gate> wrapped;
        wrapped.push_back(op(GateKind::H));
        for (Gate& g : t.downstream_ops) wrapped.push_back(std::move(g));
        wrapped.push_back(op(GateKind::H));
        t.downstream_ops = std::move(wrapped);
    }
    return table;
}

} // namespace

const std::vector<QpdTerm>& wire_cut_decomposition() {
    static const std::vector<QpdTerm> table = build_wire_table();
    return table;
}

const std::vector<QpdTerm>& gate_cut_decomposition(GateKind kind) {
    static const std::vector<QpdTerm> cz = build_cz_table();
    static const std::vector<QpdTerm> cx = build_cx_table();
    switch (kind) {
        case GateKind::CZ: return cz;
        case GateKind::CX: return cx;
        default:
            throw ConfigError(std::string("no gate-cut decomposition for '") +
                              gate_kind_name(kind) + "'");
    }
}

int qpd_term_count(bool is_wire) { return is_wire ? 8 : 6; }

} // namespace qcut
