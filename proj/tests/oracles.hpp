#pragma once

// Test-only reference implementations, kept independent of the library's
// simulation and decomposition paths so they can act as oracles:
//   - dense 2^n x 2^n matrix-product simulation
//   - single-qubit density-matrix algebra for the wire-cut identity
//   - two-qubit channel application for the gate-cut decomposition

#include "qcut/circuit.hpp"
#include "qcut/qpd.hpp"
#include "qcut/rng.hpp"

#include <complex>
#include <stdexcept>
#include <vector>

namespace oracle {

using qcut::Gate;
using qcut::GateKind;
using qcut::PauliOp;
using qcut::PrepState;
using C = std::complex<double>;

inline constexpr C kI{0.0, 1.0};

/// Dense column-major-free matrix: m[row * dim + col].
struct Mat {
    int dim = 0;
    std::vector<C> m;

    explicit Mat(int d) : dim(d), m(static_cast<std::size_t>(d) * static_cast<std::size_t>(d)) {}

    static Mat identity(int d) {
        Mat r(d);
        for (int i = 0; i < d; ++i) r.at(i, i) = 1.0;
        return r;
    }

    C& at(int row, int col) { return m[static_cast<std::size_t>(row) * dim + col]; }
    const C& at(int row, int col) const {
        return m[static_cast<std::size_t>(row) * dim + col];
    }

    Mat mul(const Mat& other) const {
        Mat r(dim);
        for (int i = 0; i < dim; ++i) {
            for (int k = 0; k < dim; ++k) {
                const C a = at(i, k);
                if (a == C{}) continue;
                for (int j = 0; j < dim; ++j) r.at(i, j) += a * other.at(k, j);
            }
        }
        return r;
    }

    Mat dagger() const {
        Mat r(dim);
        for (int i = 0; i < dim; ++i) {
            for (int j = 0; j < dim; ++j) r.at(i, j) = std::conj(at(j, i));
        }
        return r;
    }

    Mat add(const Mat& other, C scale = 1.0) const {
        Mat r(dim);
        for (std::size_t i = 0; i < m.size(); ++i) r.m[i] = m[i] + scale * other.m[i];
        return r;
    }

    double max_abs_diff(const Mat& other) const {
        double d = 0.0;
        for (std::size_t i = 0; i < m.size(); ++i) d = std::max(d, std::abs(m[i] - other.m[i]));
        return d;
    }

    C trace() const {
        C t{};
        for (int i = 0; i < dim; ++i) t += at(i, i);
        return t;
    }
};

inline Mat kron(const Mat& a, const Mat& b) {
    Mat r(a.dim * b.dim);
    for (int i = 0; i < a.dim; ++i) {
        for (int j = 0; j < a.dim; ++j) {
            for (int k = 0; k < b.dim; ++k) {
                for (int l = 0; l < b.dim; ++l) {
                    r.at(i * b.dim + k, j * b.dim + l) = a.at(i, j) * b.at(k, l);
                }
            }
        }
    }
    return r;
}

inline Mat gate_matrix_2x2(GateKind kind, double angle = 0.0) {
    Mat g(2);
    const double inv_sqrt2 = 0.70710678118654752440;
    switch (kind) {
        case GateKind::H:
            g.at(0, 0) = inv_sqrt2; g.at(0, 1) = inv_sqrt2;
            g.at(1, 0) = inv_sqrt2; g.at(1, 1) = -inv_sqrt2;
            break;
        case GateKind::X: g.at(0, 1) = 1.0; g.at(1, 0) = 1.0; break;
        case GateKind::Y: g.at(0, 1) = -kI; g.at(1, 0) = kI; break;
        case GateKind::Z: g.at(0, 0) = 1.0; g.at(1, 1) = -1.0; break;
        case GateKind::S: g.at(0, 0) = 1.0; g.at(1, 1) = kI; break;
        case GateKind::SDG: g.at(0, 0) = 1.0; g.at(1, 1) = -kI; break;
        case GateKind::RX:
            g.at(0, 0) = std::cos(angle / 2); g.at(0, 1) = -kI * std::sin(angle / 2);
            g.at(1, 0) = -kI * std::sin(angle / 2); g.at(1, 1) = std::cos(angle / 2);
            break;
        case GateKind::RY:
            g.at(0, 0) = std::cos(angle / 2); g.at(0, 1) = -std::sin(angle / 2);
            g.at(1, 0) = std::sin(angle / 2); g.at(1, 1) = std::cos(angle / 2);
            break;
        case GateKind::RZ:
            g.at(0, 0) = std::exp(-kI * (angle / 2));
            g.at(1, 1) = std::exp(kI * (angle / 2));
            break;
        default:
            throw std::runtime_error("oracle: not a 1-qubit unitary");
    }
    return g;
}

inline Mat pauli_matrix(PauliOp p) {
    switch (p) {
        case PauliOp::I: return Mat::identity(2);
        case PauliOp::X: return gate_matrix_2x2(GateKind::X);
        case PauliOp::Y: return gate_matrix_2x2(GateKind::Y);
        case PauliOp::Z: return gate_matrix_2x2(GateKind::Z);
    }
    throw std::runtime_error("oracle: bad pauli");
}

/// |s><s| for the six Pauli eigenstates.
inline Mat prep_density(PrepState s) {
    C a;
    C b;
    const double r = 0.70710678118654752440;
    switch (s) {
        case PrepState::Zero: a = 1.0; b = 0.0; break;
        case PrepState::One: a = 0.0; b = 1.0; break;
        case PrepState::Plus: a = r; b = r; break;
        case PrepState::Minus: a = r; b = -r; break;
        case PrepState::PlusI: a = r; b = r * kI; break;
        case PrepState::MinusI: a = r; b = -r * kI; break;
    }
    Mat rho(2);
    rho.at(0, 0) = a * std::conj(a);
    rho.at(0, 1) = a * std::conj(b);
    rho.at(1, 0) = b * std::conj(a);
    rho.at(1, 1) = b * std::conj(b);
    return rho;
}

/// Embeds a single-qubit unitary on `qubit` of an n-qubit register, index
/// bit q = qubit q (matching the statevector convention: qubit 0 is the
/// least significant index bit).
inline Mat embed_single(const Mat& u, int qubit, int n_qubits) {
    const int dim = 1 << n_qubits;
    const int bit = 1 << qubit;
    Mat out(dim);
    for (int col = 0; col < dim; ++col) {
        const int col_q = (col & bit) ? 1 : 0;
        for (int row_q = 0; row_q < 2; ++row_q) {
            const int row = (col & ~bit) | (row_q ? bit : 0);
            out.at(row, col) = u.at(row_q, col_q);
        }
    }
    return out;
}

inline Mat cz_matrix(int qa, int qb, int n_qubits) {
    const int dim = 1 << n_qubits;
    Mat m(dim);
    for (int i = 0; i < dim; ++i) {
        const bool both = (i >> qa & 1) && (i >> qb & 1);
        m.at(i, i) = both ? -1.0 : 1.0;
    }
    return m;
}

inline Mat cx_matrix(int control, int target, int n_qubits) {
    const int dim = 1 << n_qubits;
    Mat m(dim);
    for (int i = 0; i < dim; ++i) {
        const int j = (i >> control & 1) ? i ^ (1 << target) : i;
        m.at(j, i) = 1.0;
    }
    return m;
}

/// Full-matrix circuit unitary; PREP gates are embedded as the unitary
/// mapping |0> to the prepared state (valid because oracles only use them
/// qubit-first, as the library does).
inline Mat circuit_unitary(const qcut::Circuit& c) {
    const int n = c.n_qubits();
    Mat u = Mat::identity(1 << n);
    for (const Gate& g : c.gates()) {
        Mat step = Mat::identity(1 << n);
        switch (g.kind) {
            case GateKind::CZ: step = cz_matrix(g.qubits[0], g.qubits[1], n); break;
            case GateKind::CX: step = cx_matrix(g.qubits[0], g.qubits[1], n); break;
            case GateKind::PREP: {
                Mat p(2);
                switch (g.prep) {
                    case PrepState::Zero: p = Mat::identity(2); break;
                    case PrepState::One: p = gate_matrix_2x2(GateKind::X); break;
                    case PrepState::Plus: p = gate_matrix_2x2(GateKind::H); break;
                    case PrepState::Minus:
                        p = gate_matrix_2x2(GateKind::H).mul(gate_matrix_2x2(GateKind::X));
                        break;
                    case PrepState::PlusI:
                        p = gate_matrix_2x2(GateKind::S).mul(gate_matrix_2x2(GateKind::H));
                        break;
                    case PrepState::MinusI:
                        p = gate_matrix_2x2(GateKind::SDG).mul(gate_matrix_2x2(GateKind::H));
                        break;
                }
                step = embed_single(p, g.qubits[0], n);
                break;
            }
            default:
                step = embed_single(
                    gate_matrix_2x2(g.kind, g.params.empty() ? 0.0 : g.params[0]),
                    g.qubits[0], n);
        }
        u = step.mul(u);
    }
    return u;
}

/// <psi| P |psi> with |psi> the dense-simulated final state of `c`.
inline double dense_expectation(const qcut::Circuit& c, const qcut::PauliString& p) {
    const int n = c.n_qubits();
    const Mat u = circuit_unitary(c);
    std::vector<C> psi(static_cast<std::size_t>(1) << n);
    for (int i = 0; i < (1 << n); ++i) psi[static_cast<std::size_t>(i)] = u.at(i, 0);

    Mat obs = Mat::identity(1);
    for (int q = n - 1; q >= 0; --q) {
        obs = kron(obs, pauli_matrix(p.ops[static_cast<std::size_t>(q)]));
    }
    // obs built with qubit 0 as the least significant factor.
    C acc{};
    for (int i = 0; i < (1 << n); ++i) {
        C row{};
        for (int j = 0; j < (1 << n); ++j) row += obs.at(i, j) * psi[static_cast<std::size_t>(j)];
        acc += std::conj(psi[static_cast<std::size_t>(i)]) * row;
    }
    return acc.real();
}

/// Random single-qubit pure density matrix.
inline Mat random_pure_density(qcut::Rng& rng) {
    const double theta = rng.next_double() * 3.14159265358979323846;
    const double phi = rng.next_double() * 2 * 3.14159265358979323846;
    const C a = std::cos(theta / 2);
    const C b = std::sin(theta / 2) * std::exp(kI * phi);
    Mat rho(2);
    rho.at(0, 0) = a * std::conj(a);
    rho.at(0, 1) = a * std::conj(b);
    rho.at(1, 0) = b * std::conj(a);
    rho.at(1, 1) = b * std::conj(b);
    return rho;
}

/// Random single-qubit density matrix: convex mix of two random pure states.
inline Mat random_density(qcut::Rng& rng) {
    const Mat p1 = random_pure_density(rng);
    const Mat p2 = random_pure_density(rng);
    const double w = rng.next_double();
    Mat rho(2);
    for (std::size_t i = 0; i < rho.m.size(); ++i) rho.m[i] = w * p1.m[i] + (1 - w) * p2.m[i];
    return rho;
}

} // namespace oracle
