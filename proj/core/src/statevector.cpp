#include "qcut/statevector.hpp"

#include "qcut/error.hpp"
#include "qcut/rng.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>

namespace qcut {

namespace {

using Mat2 = std::array<Amplitude, 4>;  // row-major [m00, m01, m10, m11]

constexpr Amplitude kI{0.0, 1.0};

Mat2 single_qubit_matrix(const Gate& g) {
    constexpr double inv_sqrt2 = 0.70710678118654752440;
    switch (g.kind) {
        case GateKind::H: return {inv_sqrt2, inv_sqrt2, inv_sqrt2, -inv_sqrt2};
        case GateKind::X: return {0.0, 1.0, 1.0, 0.0};
        case GateKind::Y: return {0.0, -kI, kI, 0.0};
        case GateKind::Z: return {1.0, 0.0, 0.0, -1.0};
        case GateKind::S: return {1.0, 0.0, 0.0, kI};
        case GateKind::SDG: return {1.0, 0.0, 0.0, -kI};
        case GateKind::RX: {
            const double h = g.params[0] / 2.0;
            return {std::cos(h), -kI * std::sin(h), -kI * std::sin(h), std::cos(h)};
        }
        case GateKind::RY: {
            const double h = g.params[0] / 2.0;
            return {std::cos(h), -std::sin(h), std::sin(h), std::cos(h)};
        }
        case GateKind::RZ: {
            const double h = g.params[0] / 2.0;
            return {std::exp(-kI * h), 0.0, 0.0, std::exp(kI * h)};
        }
        default:
            throw Error(std::string("not a single-qubit unitary: ") + gate_kind_name(g.kind));
    }
}

/// Gate sequence mapping |0> onto each Pauli eigenstate.
std::vector<GateKind> prep_sequence(PrepState s) {
    switch (s) {
        case PrepState::Zero: return {};
        case PrepState::One: return {GateKind::X};
        case PrepState::Plus: return {GateKind::H};
        case PrepState::Minus: return {GateKind::X, GateKind::H};
        case PrepState::PlusI: return {GateKind::H, GateKind::S};
        case PrepState::MinusI: return {GateKind::H, GateKind::SDG};
    }
    return {};
}

void check_width(int n_qubits) {
    if (n_qubits > kMaxSimQubits) {
        throw Error("circuit width " + std::to_string(n_qubits) +
                    " exceeds the simulator cap of " + std::to_string(kMaxSimQubits));
    }
}

/// PREP is only legal as the first gate on its qubit (it loads a fresh wire).
void check_prep_placement(const Circuit& c) {
    std::vector<bool> touched(static_cast<std::size_t>(c.n_qubits()), false);
    for (const Gate& g : c.gates()) {
        if (g.kind == GateKind::PREP && touched[static_cast<std::size_t>(g.qubits[0])]) {
            throw Error("prep gate after another gate on qubit " +
                        std::to_string(g.qubits[0]));
        }
        for (int q : g.qubits) touched[static_cast<std::size_t>(q)] = true;
    }
}

} // namespace

State::State(int n_qubits) : n_qubits_(n_qubits) {
    check_width(n_qubits);
    if (n_qubits < 1) throw Error("state needs at least one qubit");
    amps_.assign(std::size_t{1} << n_qubits, Amplitude{0.0, 0.0});
    amps_[0] = 1.0;
}

double State::norm() const {
    double s = 0.0;
    for (const Amplitude& a : amps_) s += std::norm(a);
    return std::sqrt(s);
}

void State::apply(const Gate& g) {
    const std::size_t size = amps_.size();
    switch (g.kind) {
        case GateKind::CZ: {
            const std::uint64_t mask = (std::uint64_t{1} << g.qubits[0]) |
                                       (std::uint64_t{1} << g.qubits[1]);
            for (std::size_t i = 0; i < size; ++i) {
                if ((i & mask) == mask) amps_[i] = -amps_[i];
            }
            return;
        }
        case GateKind::CX: {
            const std::uint64_t cbit = std::uint64_t{1} << g.qubits[0];
            const std::uint64_t tbit = std::uint64_t{1} << g.qubits[1];
            for (std::size_t i = 0; i < size; ++i) {
                if ((i & cbit) && !(i & tbit)) std::swap(amps_[i], amps_[i | tbit]);
            }
            return;
        }
        case GateKind::PREP: {
            for (GateKind k : prep_sequence(g.prep)) {
                apply(make_gate(k, {g.qubits[0]}));
            }
            return;
        }
        case GateKind::MEAS_Z:
        case GateKind::MEAS_X:
        case GateKind::MEAS_Y:
            throw Error("measurement gate reached the unitary path");
        default:
            break;
    }

    const Mat2 m = single_qubit_matrix(g);
    const std::size_t bit = std::size_t{1} << g.qubits[0];
    if (m[1] == Amplitude{0.0, 0.0} && m[2] == Amplitude{0.0, 0.0}) {
        // Diagonal gate: one multiply per amplitude.
        for (std::size_t base = 0; base < size; base += 2 * bit) {
            for (std::size_t j = base; j < base + bit; ++j) {
                amps_[j] *= m[0];
                amps_[j | bit] *= m[3];
            }
        }
        return;
    }
    for (std::size_t base = 0; base < size; base += 2 * bit) {
        for (std::size_t j = base; j < base + bit; ++j) {
            const Amplitude a = amps_[j];
            const Amplitude b = amps_[j | bit];
            amps_[j] = m[0] * a + m[1] * b;
            amps_[j | bit] = m[2] * a + m[3] * b;
        }
    }
}

double State::prob_one(int qubit) const {
    const std::uint64_t bit = std::uint64_t{1} << qubit;
    double p = 0.0;
    for (std::size_t i = 0; i < amps_.size(); ++i) {
        if (i & bit) p += std::norm(amps_[i]);
    }
    return p;
}

void State::collapse(int qubit, int outcome) {
    const std::uint64_t bit = std::uint64_t{1} << qubit;
    double p = 0.0;
    for (std::size_t i = 0; i < amps_.size(); ++i) {
        const bool one = (i & bit) != 0;
        if (one == (outcome != 0)) {
            p += std::norm(amps_[i]);
        } else {
            amps_[i] = 0.0;
        }
    }
    if (p <= 0.0) throw Error("collapse onto a zero-probability outcome");
    const double scale = 1.0 / std::sqrt(p);
    for (Amplitude& a : amps_) a *= scale;
}

double State::expectation(const PauliString& p) const {
    if (p.size() != n_qubits_) {
        throw Error("observable width " + std::to_string(p.size()) +
                    " does not match state width " + std::to_string(n_qubits_));
    }
    std::uint64_t xmask = 0;
    std::uint64_t phasemask = 0;  // qubits contributing (-1)^bit: Z and Y
    int y_count = 0;
    for (int q = 0; q < p.size(); ++q) {
        switch (p.ops[static_cast<std::size_t>(q)]) {
            case PauliOp::I: break;
            case PauliOp::X: xmask |= std::uint64_t{1} << q; break;
            case PauliOp::Y:
                xmask |= std::uint64_t{1} << q;
                phasemask |= std::uint64_t{1} << q;
                ++y_count;
                break;
            case PauliOp::Z: phasemask |= std::uint64_t{1} << q; break;
        }
    }
    static constexpr Amplitude ipow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    const Amplitude yphase = ipow[y_count % 4];
    Amplitude acc{0.0, 0.0};
    for (std::size_t i = 0; i < amps_.size(); ++i) {
        const double sign = (std::popcount(i & phasemask) & 1) ? -1.0 : 1.0;
        acc += std::conj(amps_[i ^ xmask]) * (yphase * sign) * amps_[i];
    }
    return acc.real();
}

State simulate_statevector(const Circuit& c) {
    check_width(c.n_qubits());
    check_prep_placement(c);
    for (const Gate& g : c.gates()) {
        if (is_measurement(g.kind)) {
            throw Error("exact statevector path cannot simulate measurement gates");
        }
    }
    State psi(c.n_qubits());
    for (const Gate& g : c.gates()) psi.apply(g);
    return psi;
}

double expectation(const Circuit& c, const PauliString& e) {
    if (e.size() != c.n_qubits()) {
        throw Error("observable width does not match circuit width");
    }
    return simulate_statevector(c).expectation(e);
}

std::map<std::string, int> Counts::histogram() const {
    std::map<std::string, int> hist;
    for (const ShotRecord& s : shots) {
        std::string key(static_cast<std::size_t>(n_qubits), '0');
        for (int q = 0; q < n_qubits; ++q) {
            if (s.terminal_bits >> q & 1) key[static_cast<std::size_t>(q)] = '1';
        }
        ++hist[key];
    }
    return hist;
}

namespace {

/// Gates rotating a MEAS_X / MEAS_Y into a Z-basis readout.
void rotate_for_basis(State& psi, GateKind meas_kind, int qubit) {
    if (meas_kind == GateKind::MEAS_X) {
        psi.apply(make_gate(GateKind::H, {qubit}));
    } else if (meas_kind == GateKind::MEAS_Y) {
        psi.apply(make_gate(GateKind::SDG, {qubit}));
        psi.apply(make_gate(GateKind::H, {qubit}));
    }
}

std::uint64_t draw_terminal(const State& psi, Rng& rng) {
    double r = rng.next_double();
    const auto& amps = psi.amplitudes();
    for (std::size_t i = 0; i + 1 < amps.size(); ++i) {
        r -= std::norm(amps[i]);
        if (r < 0.0) return i;
    }
    return amps.size() - 1;
}

/// Cumulative-distribution sampler for repeated draws from one final state.
class TerminalSampler {
public:
    explicit TerminalSampler(const State& psi) {
        const auto& amps = psi.amplitudes();
        cum_.resize(amps.size());
        double run = 0.0;
        for (std::size_t i = 0; i < amps.size(); ++i) {
            run += std::norm(amps[i]);
            cum_[i] = run;
        }
    }

    std::uint64_t draw(Rng& rng) const {
        const double r = rng.next_double() * cum_.back();
        const auto it = std::upper_bound(cum_.begin(), cum_.end(), r);
        return static_cast<std::uint64_t>(std::min<std::ptrdiff_t>(
            it - cum_.begin(), static_cast<std::ptrdiff_t>(cum_.size()) - 1));
    }

private:
    std::vector<double> cum_;
};

int draw_collapse(State& psi, int qubit, Rng& rng) {
    const double p1 = psi.prob_one(qubit);
    const int outcome = rng.next_double() < p1 ? 1 : 0;
    psi.collapse(qubit, outcome);
    return outcome;
}

bool has_measurement(const Circuit& c) {
    return std::any_of(c.gates().begin(), c.gates().end(),
                       [](const Gate& g) { return is_measurement(g.kind); });
}

} // namespace

Counts sample(const Circuit& c, int shots, std::uint64_t seed) {
    if (shots < 1) throw Error("sampling needs at least one shot");
    check_width(c.n_qubits());
    check_prep_placement(c);

    Counts counts;
    counts.n_qubits = c.n_qubits();
    counts.shots.reserve(static_cast<std::size_t>(shots));
    Rng rng(seed);

    if (!has_measurement(c)) {
        const TerminalSampler sampler(simulate_statevector(c));
        for (int s = 0; s < shots; ++s) {
            counts.shots.push_back({sampler.draw(rng), {}});
        }
        return counts;
    }

    for (int s = 0; s < shots; ++s) {
        State psi(c.n_qubits());
        ShotRecord rec;
        for (const Gate& g : c.gates()) {
            if (is_measurement(g.kind)) {
                rotate_for_basis(psi, g.kind, g.qubits[0]);
                rec.mid_outcomes.push_back(draw_collapse(psi, g.qubits[0], rng));
            } else {
                psi.apply(g);
            }
        }
        rec.terminal_bits = draw_terminal(psi, rng);
        counts.shots.push_back(std::move(rec));
    }
    return counts;
}

namespace {

/// Exact signed value: sum over measurement branches of
/// weight * (-1)^(outcome bits) * <E> on the branch's final state.
double exact_signed(State psi, const std::vector<Gate>& gates, std::size_t index,
                    const PauliString& obs) {
    for (std::size_t i = index; i < gates.size(); ++i) {
        const Gate& g = gates[i];
        if (!is_measurement(g.kind)) {
            psi.apply(g);
            continue;
        }
        rotate_for_basis(psi, g.kind, g.qubits[0]);
        const double p1 = psi.prob_one(g.qubits[0]);
        double value = 0.0;
        constexpr double kBranchEps = 1e-14;
        if (1.0 - p1 > kBranchEps) {
            State branch = psi;
            branch.collapse(g.qubits[0], 0);
            value += (1.0 - p1) * exact_signed(std::move(branch), gates, i + 1, obs);
        }
        if (p1 > kBranchEps) {
            psi.collapse(g.qubits[0], 1);
            value -= p1 * exact_signed(std::move(psi), gates, i + 1, obs);
        }
        return value;
    }
    return psi.expectation(obs);
}

std::uint64_t support_mask(const PauliString& obs) {
    std::uint64_t mask = 0;
    for (int q = 0; q < obs.size(); ++q) {
        if (obs.ops[static_cast<std::size_t>(q)] != PauliOp::I) mask |= std::uint64_t{1} << q;
    }
    return mask;
}

/// Appends the basis rotations that turn `obs` into a Z-string readout.
void append_observable_rotations(Circuit& c, const PauliString& obs) {
    for (int q = 0; q < obs.size(); ++q) {
        switch (obs.ops[static_cast<std::size_t>(q)]) {
            case PauliOp::X:
                c.add(GateKind::H, {q});
                break;
            case PauliOp::Y:
                c.add(GateKind::SDG, {q});
                c.add(GateKind::H, {q});
                break;
            default:
                break;
        }
    }
}

} // namespace

double estimate_signed_expectation(const RunSpec& r) {
    if (r.observable.size() != r.circuit.n_qubits()) {
        throw Error("observable width does not match circuit width");
    }
    check_width(r.circuit.n_qubits());
    check_prep_placement(r.circuit);
    if (r.shots < 0) throw Error("negative shot count");

    if (r.shots == 0) {
        return exact_signed(State(r.circuit.n_qubits()), r.circuit.gates(), 0, r.observable);
    }

    // Shot path: run the circuit with collapse, then read the observable by
    // rotating its X/Y factors into the Z basis before the terminal draw.
    Circuit measured = r.circuit;
    append_observable_rotations(measured, r.observable);
    const std::uint64_t mask = support_mask(r.observable);

    Rng rng(r.seed);
    double acc = 0.0;

    if (!has_measurement(measured)) {
        const TerminalSampler sampler(simulate_statevector(measured));
        for (int s = 0; s < r.shots; ++s) {
            const std::uint64_t bits = sampler.draw(rng);
            acc += (std::popcount(bits & mask) & 1) ? -1.0 : 1.0;
        }
        return acc / r.shots;
    }

    for (int s = 0; s < r.shots; ++s) {
        State psi(measured.n_qubits());
        double sign = 1.0;
        for (const Gate& g : measured.gates()) {
            if (is_measurement(g.kind)) {
                rotate_for_basis(psi, g.kind, g.qubits[0]);
                if (draw_collapse(psi, g.qubits[0], rng) == 1) sign = -sign;
            } else {
                psi.apply(g);
            }
        }
        const std::uint64_t bits = draw_terminal(psi, rng);
        const double eig = (std::popcount(bits & mask) & 1) ? -1.0 : 1.0;
        acc += sign * eig;
    }
    return acc / r.shots;
}

} // namespace qcut
