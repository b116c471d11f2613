#pragma once

#include "qcut/circuit.hpp"

#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace qcut {

using Amplitude = std::complex<double>;

/// Full statevector of n qubits; index bit q holds qubit q's basis bit.
class State {
public:
    explicit State(int n_qubits);

    int n_qubits() const { return n_qubits_; }
    const std::vector<Amplitude>& amplitudes() const { return amps_; }
    std::vector<Amplitude>& amplitudes() { return amps_; }

    double norm() const;

    /// Applies a unitary or PREP gate in place. Measurement gates are not
    /// unitary and are rejected here; collapse lives in the sampling paths.
    void apply(const Gate& g);

    /// Probability that qubit q reads 1 in the Z basis.
    double prob_one(int qubit) const;

    /// Projects qubit q onto `outcome` and renormalizes. The outcome's
    /// probability must be nonzero.
    void collapse(int qubit, int outcome);

    /// <psi| P |psi> via masked phase accumulation; no observable matrix is
    /// ever materialized.
    double expectation(const PauliString& p) const;

private:
    int n_qubits_ = 0;
    std::vector<Amplitude> amps_;
};

/// One simulation request. shots == 0 selects the exact path (statevector,
/// branching over mid-circuit measurements).
struct RunSpec {
    Circuit circuit;
    PauliString observable;
    int shots = 0;
    std::uint64_t seed = 0;
};

/// Exact evolution of a measurement-free circuit from |0...0>. PREP gates are
/// legal only as a qubit's first gate. Throws on MEAS_* gates, misplaced
/// PREP, or width over kMaxSimQubits.
State simulate_statevector(const Circuit& c);

/// <E> on the final state of a measurement-free circuit; real, in [-1, 1]
/// for Pauli observables.
double expectation(const Circuit& c, const PauliString& e);

/// Per-shot record: terminal Z-basis bits plus any mid-circuit measurement
/// outcomes in gate order.
struct ShotRecord {
    std::uint64_t terminal_bits = 0;
    std::vector<int> mid_outcomes;
};

struct Counts {
    int n_qubits = 0;
    std::vector<ShotRecord> shots;

    /// Terminal bitstring histogram, qubit 0 leftmost.
    std::map<std::string, int> histogram() const;
};

/// Z-basis sampling with `shots` repetitions. MEAS_X / MEAS_Y rotate into the
/// Z basis (H, resp. SDG then H) before collapsing; the wire continues in the
/// collapsed state. Deterministic for a fixed seed.
Counts sample(const Circuit& c, int shots, std::uint64_t seed);

/// Signed expectation estimate used by cut fragments: each mid-circuit
/// measurement outcome bit m contributes a factor (-1)^m.
///
/// shots > 0: mean over shots of that sign times the observable eigenvalue
/// on the terminal outcome. shots == 0: the exact value, branching the
/// statevector on every mid-circuit measurement.
double estimate_signed_expectation(const RunSpec& r);

} // namespace qcut
