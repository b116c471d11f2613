#include "qcut/statevector.hpp"

#include "qcut/error.hpp"
#include "qcut/generators.hpp"
#include "qcut/qpd.hpp"
#include "qcut/rng.hpp"

#include "oracles.hpp"
#include "test_helpers.hpp"

#include <doctest.h>

#include <cmath>

using namespace qcut;

TEST_CASE("empty circuit puts all weight on |0...0>") {
    const State psi = simulate_statevector(Circuit(3));
    CHECK(psi.amplitudes()[0] == Amplitude{1.0, 0.0});
    for (std::size_t i = 1; i < psi.amplitudes().size(); ++i) {
        CHECK(psi.amplitudes()[i] == Amplitude{0.0, 0.0});
    }
}

TEST_CASE("H creates the uniform superposition") {
    Circuit c(1);
    c.add(GateKind::H, {0});
    const State psi = simulate_statevector(c);
    const double r = 1.0 / std::sqrt(2.0);
    CHECK(std::abs(psi.amplitudes()[0] - Amplitude{r, 0}) < 1e-12);
    CHECK(std::abs(psi.amplitudes()[1] - Amplitude{r, 0}) < 1e-12);
}

TEST_CASE("H,H,CZ yields (|00>+|01>+|10>-|11>)/2") {
    Circuit c(2);
    c.add(GateKind::H, {0});
    c.add(GateKind::H, {1});
    c.add(GateKind::CZ, {0, 1});
    const State psi = simulate_statevector(c);
    CHECK(std::abs(psi.amplitudes()[0] - Amplitude{0.5, 0}) < 1e-12);
    CHECK(std::abs(psi.amplitudes()[1] - Amplitude{0.5, 0}) < 1e-12);
    CHECK(std::abs(psi.amplitudes()[2] - Amplitude{0.5, 0}) < 1e-12);
    CHECK(std::abs(psi.amplitudes()[3] - Amplitude{-0.5, 0}) < 1e-12);
}

TEST_CASE("expectation basics") {
    CHECK(expectation(Circuit(3), PauliString::all_z(3)) == doctest::Approx(1.0));

    Circuit x(1);
    x.add(GateKind::X, {0});
    CHECK(expectation(x, PauliString::parse("Z")) == doctest::Approx(-1.0));

    // <ZZ> on (|00>+|01>+|10>-|11>)/2: the |11> term has eigenvalue +1, so
    // the populations cancel exactly (oracle-checked below).
    Circuit hhcz(2);
    hhcz.add(GateKind::H, {0});
    hhcz.add(GateKind::H, {1});
    hhcz.add(GateKind::CZ, {0, 1});
    const PauliString zz = PauliString::parse("ZZ");
    const double val = expectation(hhcz, zz);
    CHECK(val == doctest::Approx(oracle::dense_expectation(hhcz, zz)).epsilon(1e-12));
    CHECK(val == doctest::Approx(0.0));
    CHECK_THROWS_AS(expectation(hhcz, PauliString::parse("Z")), Error);
}

TEST_CASE("gate application agrees with the dense matrix oracle") {
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
        const int n = 2 + static_cast<int>(seed % 4);  // up to 5 qubits
        const Circuit c = testutil::random_circuit(n, 18, seed * 131 + 7);
        const oracle::Mat u = oracle::circuit_unitary(c);
        const State psi = simulate_statevector(c);
        for (int i = 0; i < (1 << n); ++i) {
            CHECK(std::abs(psi.amplitudes()[static_cast<std::size_t>(i)] - u.at(i, 0)) < 1e-10);
        }
    }
}

TEST_CASE("norm is preserved after every gate") {
    const Circuit c = testutil::random_circuit(4, 40, 99);
    State psi(4);
    for (const Gate& g : c.gates()) {
        psi.apply(g);
        CHECK(std::abs(psi.norm() - 1.0) < 1e-10);
    }
}

TEST_CASE("prep gates load Pauli eigenstates") {
    struct Case {
        PrepState s;
        PauliOp basis;
        double want;
    };
    for (const auto& [s, basis, want] : {Case{PrepState::Zero, PauliOp::Z, 1.0},
                                         Case{PrepState::One, PauliOp::Z, -1.0},
                                         Case{PrepState::Plus, PauliOp::X, 1.0},
                                         Case{PrepState::Minus, PauliOp::X, -1.0},
                                         Case{PrepState::PlusI, PauliOp::Y, 1.0},
                                         Case{PrepState::MinusI, PauliOp::Y, -1.0}}) {
        Circuit c(1);
        c.add_prep(s, 0);
        PauliString p(1);
        p.ops[0] = basis;
        CHECK(expectation(c, p) == doctest::Approx(want));
    }
}

TEST_CASE("exact path rejects measurements, late preps and overwide circuits") {
    Circuit meas(1);
    meas.add(GateKind::MEAS_Z, {0});
    CHECK_THROWS_AS(simulate_statevector(meas), Error);

    Circuit late(1);
    late.add(GateKind::H, {0});
    late.add_prep(PrepState::Zero, 0);
    CHECK_THROWS_AS(simulate_statevector(late), Error);

    CHECK_THROWS_WITH_AS(simulate_statevector(Circuit(kMaxSimQubits + 1)),
                         doctest::Contains("cap"), Error);
}

TEST_CASE("sample: deterministic circuit gives a single outcome") {
    Circuit c(1);
    c.add(GateKind::X, {0});
    const Counts counts = sample(c, 100, 5);
    const auto hist = counts.histogram();
    REQUIRE(hist.size() == 1);
    CHECK(hist.at("1") == 100);
}

TEST_CASE("sample: H is a fair coin within 5 sigma") {
    Circuit c(1);
    c.add(GateKind::H, {0});
    const int shots = 10000;
    const Counts counts = sample(c, shots, 17);
    const double frac_one = counts.histogram()["1"] / static_cast<double>(shots);
    CHECK(std::abs(frac_one - 0.5) < 5 * 0.005);
}

TEST_CASE("sample: fixed seed replays identical counts") {
    Circuit c(2);
    c.add(GateKind::H, {0});
    c.add(GateKind::CX, {0, 1});
    c.add(GateKind::MEAS_Z, {0});
    const Counts a = sample(c, 200, 31);
    const Counts b = sample(c, 200, 31);
    REQUIRE(a.shots.size() == b.shots.size());
    for (std::size_t i = 0; i < a.shots.size(); ++i) {
        CHECK(a.shots[i].terminal_bits == b.shots[i].terminal_bits);
        CHECK(a.shots[i].mid_outcomes == b.shots[i].mid_outcomes);
    }
    CHECK_THROWS_AS(sample(c, 0, 1), Error);
}

TEST_CASE("signed expectation reduces to expectation without measurements") {
    Circuit c(1);
    c.add(GateKind::X, {0});
    CHECK(estimate_signed_expectation({c, PauliString::parse("Z"), 0, 0}) ==
          doctest::Approx(-1.0));
}

TEST_CASE("signed expectation: deterministic mid-measurement sign") {
    // X then MEAS_Z on qubit 0 always reads 1: the sign is -1, the observable
    // acts on the untouched qubit 1 with value +1.
    Circuit c(2);
    c.add(GateKind::X, {0});
    c.add(GateKind::MEAS_Z, {0});
    CHECK(estimate_signed_expectation({c, PauliString::parse("IZ"), 0, 0}) ==
          doctest::Approx(-1.0));
}

TEST_CASE("signed expectation: balanced measurement averages to zero") {
    Circuit c(1);
    c.add(GateKind::H, {0});
    c.add(GateKind::MEAS_Z, {0});
    CHECK(estimate_signed_expectation({c, PauliString::parse("I"), 0, 0}) ==
          doctest::Approx(0.0));
}

TEST_CASE("shot estimator converges to the exact expectation") {
    const Circuit c = generate_hea(4, 1, 12);
    const PauliString obs = PauliString::all_z(4);
    const double exact = expectation(c, obs);
    for (int shots : {1024, 4096, 16384}) {
        const double est = estimate_signed_expectation({c, obs, shots, 77});
        CHECK(std::abs(est - exact) < 5.0 / std::sqrt(static_cast<double>(shots)));
    }
}

TEST_CASE("branching exact mode matches the shot estimator on gate-cut fragments") {
    // Random 4-qubit fragments shaped like gate-cut variants: a mid-circuit
    // MEAS_Z inside otherwise unitary circuits.
    Rng pick(2024);
    int checked = 0;
    for (std::uint64_t seed = 0; checked < 20; ++seed) {
        Circuit c = testutil::random_circuit(4, 12, seed + 500);
        Circuit with_meas(4, c.name());
        const int meas_pos = 3 + static_cast<int>(pick.next_below(6));
        for (const Gate& g : c.gates()) {
            if (g.id == meas_pos) {
                with_meas.add(GateKind::MEAS_Z,
                              {static_cast<int>(pick.next_below(4))});
            }
            Gate copy = g;
            copy.id = -1;
            with_meas.add(std::move(copy));
        }
        const PauliString obs = PauliString::all_z(4);
        const double exact = estimate_signed_expectation({with_meas, obs, 0, 0});
        const int shots = 16384;
        const double est = estimate_signed_expectation({with_meas, obs, shots, seed});
        // Signed per-shot values are in [-1, 1]; 5 sigma with sigma <= 1/sqrt(shots).
        CHECK(std::abs(est - exact) < 5.0 / std::sqrt(static_cast<double>(shots)));
        ++checked;
    }
}

TEST_CASE("signed expectation handles observables on measured-but-live wires") {
    // A gate-cut fragment keeps its measured wire; sign and terminal
    // eigenvalue cancel to +1 regardless of the outcome distribution.
    Circuit c(1);
    c.add(GateKind::H, {0});
    c.add(GateKind::MEAS_Z, {0});
    CHECK(estimate_signed_expectation({c, PauliString::parse("Z"), 0, 0}) ==
          doctest::Approx(1.0));
}
