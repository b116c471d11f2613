#include "qcut/circuit.hpp"
#include "qcut/circuit_io.hpp"
#include "qcut/error.hpp"
#include "qcut/generators.hpp"

#include <doctest.h>
#include <json.hpp>

using namespace qcut;

TEST_CASE("parse: single-gate document") {
    const Circuit c = parse_circuit(R"({"qubits":1,"gates":[["h",[0]]]})");
    CHECK(c.n_qubits() == 1);
    REQUIRE(c.gate_count() == 1);
    CHECK(c.gates()[0].kind == GateKind::H);
    CHECK(c.gates()[0].qubits == std::vector<int>{0});
    CHECK(c.gates()[0].id == 0);
}

TEST_CASE("parse: qubit index out of range") {
    CHECK_THROWS_WITH_AS(parse_circuit(R"({"qubits":2,"gates":[["cz",[0,2]]]})"),
                         doctest::Contains("out of range"), ConfigError);
}

TEST_CASE("parse: unknown gate kind and bad arity") {
    CHECK_THROWS_AS(parse_circuit(R"({"qubits":1,"gates":[["foo",[0]]]})"), ConfigError);
    CHECK_THROWS_AS(parse_circuit(R"({"qubits":2,"gates":[["cz",[0]]]})"), ConfigError);
    CHECK_THROWS_AS(parse_circuit(R"({"qubits":1,"gates":[["rx",[0]]]})"), ConfigError);
    CHECK_THROWS_AS(parse_circuit(R"({"qubits":1,"gates":[["h",[0],[0.5]]]})"), ConfigError);
    CHECK_THROWS_AS(parse_circuit("not json"), ConfigError);
    CHECK_THROWS_AS(parse_circuit(R"({"gates":[]})"), ConfigError);
}

TEST_CASE("parse: prep and measurement tokens round-trip") {
    const char* doc =
        R"({"qubits":3,"gates":[["prep+",[0]],["prep-i",[1]],["mx",[2]],["mz",[0]]]})";
    const Circuit c = parse_circuit(doc);
    CHECK(c.gates()[0].kind == GateKind::PREP);
    CHECK(c.gates()[0].prep == PrepState::Plus);
    CHECK(c.gates()[1].prep == PrepState::MinusI);
    CHECK(c.gates()[2].kind == GateKind::MEAS_X);
    CHECK(nlohmann::json::parse(serialize_circuit(c)) == nlohmann::json::parse(doc));
}

TEST_CASE("serialize/parse round-trip on generator output") {
    const Circuit hea = generate_hea(4, 1, 7);
    const std::string doc = serialize_circuit(hea);
    const Circuit back = parse_circuit(doc);
    CHECK(back == hea);
    // Document-level stability up to whitespace.
    CHECK(nlohmann::json::parse(serialize_circuit(back)) == nlohmann::json::parse(doc));
}

TEST_CASE("hea: depth follows (2+n)L") {
    CHECK(generate_hea(4, 2, 1).depth() == 12);
    for (int n : {2, 4, 6, 8, 10, 12}) {
        for (int layers = 1; layers <= 4; ++layers) {
            CHECK(generate_hea(n, layers, 3).depth() == (2 + n) * layers);
        }
    }
}

TEST_CASE("hea: gate count and layer structure") {
    const Circuit c = generate_hea(4, 1, 5);
    CHECK(c.gate_count() == 2 * 4 + 4);
    int ry = 0;
    int rz = 0;
    int cz = 0;
    for (const Gate& g : c.gates()) {
        if (g.kind == GateKind::RY) ++ry;
        if (g.kind == GateKind::RZ) ++rz;
        if (g.kind == GateKind::CZ) ++cz;
    }
    CHECK(ry == 4);
    CHECK(rz == 4);
    CHECK(cz == 4);
}

TEST_CASE("hea: seed determinism") {
    CHECK(generate_hea(5, 2, 42) == generate_hea(5, 2, 42));
    CHECK(generate_hea(5, 2, 42) != generate_hea(5, 2, 43));
    CHECK_THROWS_AS(generate_hea(1, 1, 0), ConfigError);
}

TEST_CASE("rc: only CZ two-qubit gates, all grid-adjacent") {
    const int rows = 3;
    const int cols = 4;
    const Circuit c = generate_rc(rows, cols, 6, 11);
    for (const Gate& g : c.gates()) {
        if (!is_two_qubit(g.kind)) continue;
        CHECK(g.kind == GateKind::CZ);
        const int a = g.qubits[0];
        const int b = g.qubits[1];
        const int ra = a / cols;
        const int ca = a % cols;
        const int rb = b / cols;
        const int cb = b % cols;
        CHECK(std::abs(ra - rb) + std::abs(ca - cb) == 1);
    }
}

TEST_CASE("rc: qubit count and cycle structure") {
    const Circuit c = generate_rc(4, 5, 22, 9);
    CHECK(c.n_qubits() == 20);
    int single = 0;
    for (const Gate& g : c.gates()) {
        if (!is_two_qubit(g.kind)) ++single;
    }
    CHECK(single == 22 * 20);  // one rotation per qubit per cycle
    CHECK_THROWS_AS(generate_rc(1, 1, 1, 0), ConfigError);
    CHECK_THROWS_AS(generate_rc(2, 2, 0, 0), ConfigError);
}

TEST_CASE("rc 2x2 depth 1 has CZ gates") {
    const Circuit c = generate_rc(2, 2, 1, 3);
    CHECK(c.two_qubit_gate_count() == 2);  // pattern A: both rows
}

TEST_CASE("pauli string parse and format") {
    const PauliString p = PauliString::parse("IZXY");
    CHECK(p.size() == 4);
    CHECK(p.ops[0] == PauliOp::I);
    CHECK(p.ops[3] == PauliOp::Y);
    CHECK(p.str() == "IZXY");
    CHECK(PauliString::all_z(3).str() == "ZZZ");
    CHECK_THROWS_AS(PauliString::parse("ZQ"), ConfigError);
    CHECK_THROWS_AS(PauliString::parse(""), ConfigError);
}

TEST_CASE("circuit invariants: duplicate qubits and bounds") {
    Circuit c(2);
    CHECK_THROWS_AS(c.add(GateKind::CZ, {1, 1}), ConfigError);
    CHECK_THROWS_AS(c.add(GateKind::H, {2}), ConfigError);
    CHECK_THROWS_AS(c.add(GateKind::H, {-1}), ConfigError);
}
