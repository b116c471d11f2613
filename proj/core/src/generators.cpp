#include "qcut/generators.hpp"

#include "qcut/error.hpp"
#include "qcut/rng.hpp"

#include <numbers>
#include <string>

namespace qcut {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

Circuit generate_hea(int n_qubits, int layers, std::uint64_t seed) {
    if (n_qubits < 2) {
        throw ConfigError("hea: need at least 2 qubits, got " + std::to_string(n_qubits));
    }
    if (layers < 1) {
        throw ConfigError("hea: need at least 1 layer, got " + std::to_string(layers));
    }
    Circuit c(n_qubits, "hea" + std::to_string(n_qubits) + "x" + std::to_string(layers));
    Rng rng(seed);
    for (int l = 0; l < layers; ++l) {
        for (int q = 0; q < n_qubits; ++q) c.add(GateKind::RY, {q}, {rng.next_double(kTwoPi)});
        for (int q = 0; q < n_qubits; ++q) c.add(GateKind::RZ, {q}, {rng.next_double(kTwoPi)});
        for (int q = 0; q < n_qubits; ++q) c.add(GateKind::CZ, {q, (q + 1) % n_qubits});
    }
    return c;
}

Circuit generate_rc(int rows, int cols, int depth, std::uint64_t seed) {
    if (rows < 1 || cols < 1 || rows * cols < 2) {
        throw ConfigError("rc: grid too small (" + std::to_string(rows) + "x" +
                          std::to_string(cols) + ")");
    }
    if (depth < 1) {
        throw ConfigError("rc: depth must be at least 1");
    }
    const int n = rows * cols;
    Circuit c(n, "rc" + std::to_string(rows) + "x" + std::to_string(cols) + "d" +
                     std::to_string(depth));
    Rng rng(seed);
    auto qubit_at = [cols](int r, int col) { return r * cols + col; };

    for (int cycle = 0; cycle < depth; ++cycle) {
        for (int q = 0; q < n; ++q) {
            static constexpr GateKind rots[] = {GateKind::RX, GateKind::RY, GateKind::RZ};
            c.add(rots[rng.next_below(3)], {q}, {rng.next_double(kTwoPi)});
        }
        // ABCD coupler pattern: horizontal pairs starting at even then odd
        // columns, vertical pairs starting at even then odd rows.
        switch (cycle % 4) {
            case 0:
                for (int r = 0; r < rows; ++r)
                    for (int col = 0; col + 1 < cols; col += 2)
                        c.add(GateKind::CZ, {qubit_at(r, col), qubit_at(r, col + 1)});
                break;
            case 1:
                for (int r = 0; r < rows; ++r)
                    for (int col = 1; col + 1 < cols; col += 2)
                        c.add(GateKind::CZ, {qubit_at(r, col), qubit_at(r, col + 1)});
                break;
            case 2:
                for (int r = 0; r + 1 < rows; r += 2)
                    for (int col = 0; col < cols; ++col)
                        c.add(GateKind::CZ, {qubit_at(r, col), qubit_at(r + 1, col)});
                break;
            default:
                for (int r = 1; r + 1 < rows; r += 2)
                    for (int col = 0; col < cols; ++col)
                        c.add(GateKind::CZ, {qubit_at(r, col), qubit_at(r + 1, col)});
                break;
        }
    }
    return c;
}

} // namespace qcut
