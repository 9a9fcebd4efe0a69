// Copyright 2026 The qrf Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qrf/statevector.hpp"

#include <bit>
#include <cmath>
#include <sstream>

#include "qrf/errors.hpp"
#include "qrf/tolerances.hpp"

namespace qrf {

namespace {

void check_width(int num_qubits) {
    if (num_qubits < 0 || num_qubits > tol::kMaxQubits) {
        throw ResourceError("state vector of " + std::to_string(num_qubits) +
                            " qubits exceeds the " + std::to_string(tol::kMaxQubits) + "-qubit limit");
    }
}

struct Pattern {
    std::size_t mask = 0;
    std::size_t value = 0;

    bool fires(std::size_t index) const { return (index & mask) == value; }
};

Pattern control_pattern(std::span<const Control> controls, int num_qubits) {
    Pattern p;
    for (const auto& c : controls) {
        const std::size_t bit = std::size_t{1} << (num_qubits - 1 - c.qubit);
        p.mask |= bit;
        if (c.value) p.value |= bit;
    }
    return p;
}

// Inserts a zero at bit position `pos` of `k`.
inline std::size_t insert_zero(std::size_t k, std::size_t pos_bit) {
    const std::size_t low = k & (pos_bit - 1);
    return ((k - low) << 1) | low;
}

void apply_single_target(std::span<Complex> a, int n, const Gate& gate) {
    const int t = gate.targets[0];
    const std::size_t tbit = std::size_t{1} << (n - 1 - t);
    const Pattern ctrl = control_pattern(gate.controls, n);

    std::vector<std::size_t> sel_bits;
    sel_bits.reserve(gate.selectors.size());
    for (int q : gate.selectors) sel_bits.push_back(std::size_t{1} << (n - 1 - q));

    std::vector<Mat2> blocks(std::size_t{1} << gate.selectors.size());
    for (std::size_t k = 0; k < blocks.size(); ++k) blocks[k] = target_block(gate, k);

    const std::size_t half = a.size() >> 1;
    for (std::size_t k = 0; k < half; ++k) {
        const std::size_t i0 = insert_zero(k, tbit);
        if (!ctrl.fires(i0)) continue;
        std::size_t s = 0;
        for (auto b : sel_bits) s = (s << 1) | ((i0 & b) ? 1 : 0);
        const Mat2& m = blocks[s];
        const std::size_t i1 = i0 | tbit;
        const Complex v0 = a[i0];
        const Complex v1 = a[i1];
        a[i0] = m[0] * v0 + m[1] * v1;
        a[i1] = m[2] * v0 + m[3] * v1;
    }
}

void apply_swap(std::span<Complex> a, int n, const Gate& gate) {
    const std::size_t abit = std::size_t{1} << (n - 1 - gate.targets[0]);
    const std::size_t bbit = std::size_t{1} << (n - 1 - gate.targets[1]);
    const Pattern ctrl = control_pattern(gate.controls, n);
    for (std::size_t i = 0; i < a.size(); ++i) {
        // Visit each (a=1, b=0) index once and exchange it with its partner.
        if ((i & abit) && !(i & bbit) && ctrl.fires(i)) {
            std::swap(a[i], a[(i & ~abit) | bbit]);
        }
    }
}

void apply_phase(std::span<Complex> a, int n, const Gate& gate) {
    const Complex f = std::polar(1.0, gate.phase);
    const Pattern ctrl = control_pattern(gate.controls, n);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (ctrl.fires(i)) a[i] *= f;
    }
}

}  // namespace

StateVector::StateVector(int num_qubits) : num_qubits_(num_qubits) {
    check_width(num_qubits);
    amps_.assign(std::size_t{1} << num_qubits, Complex{});
    amps_[0] = 1.0;
}

StateVector StateVector::basis(int num_qubits, std::uint64_t index) {
    StateVector s(num_qubits);
    if (index >= s.dim()) {
        throw InvalidInput("basis index " + std::to_string(index) + " out of range");
    }
    s.amps_[0] = 0.0;
    s.amps_[index] = 1.0;
    return s;
}

StateVector StateVector::from_amplitudes(std::vector<Complex> amplitudes) {
    if (amplitudes.empty() || !std::has_single_bit(amplitudes.size())) {
        throw InvalidInput("amplitude count must be a power of two");
    }
    const int n = std::bit_width(amplitudes.size()) - 1;
    StateVector s(n);
    s.amps_ = std::move(amplitudes);
    return s;
}

void StateVector::apply(const Gate& gate) { apply_gate(amps_, num_qubits_, gate); }

void StateVector::apply(std::span<const Gate> sequence) { apply_gates(amps_, num_qubits_, sequence); }

double StateVector::norm() const {
    double sum = 0.0;
    for (const auto& v : amps_) sum += std::norm(v);
    return std::sqrt(sum);
}

std::string StateVector::dump() const {
    std::ostringstream out;
    out.precision(17);
    for (std::size_t i = 0; i < amps_.size(); ++i) {
        out << i << ' ' << amps_[i].real() << ' ' << amps_[i].imag() << '\n';
    }
    return out.str();
}

void apply_gate(std::span<Complex> amplitudes, int num_qubits, const Gate& gate) {
    if (amplitudes.size() != (std::size_t{1} << num_qubits)) {
        throw InvalidInput("amplitude block does not match qubit count");
    }
    validate(gate, num_qubits);
    switch (gate.kind) {
        case GateKind::SWAP: apply_swap(amplitudes, num_qubits, gate); break;
        case GateKind::GlobalPhase: apply_phase(amplitudes, num_qubits, gate); break;
        default: apply_single_target(amplitudes, num_qubits, gate); break;
    }
}

void apply_gates(std::span<Complex> amplitudes, int num_qubits, std::span<const Gate> sequence) {
    for (const auto& g : sequence) apply_gate(amplitudes, num_qubits, g);
}

StateVector apply_gate(StateVector state, const Gate& gate) {
    state.apply(gate);
    return state;
}

double measure_probability(const StateVector& state, std::span<const int> qubits, std::uint64_t value) {
    const int n = state.num_qubits();
    std::size_t mask = 0;
    std::size_t want = 0;
    for (std::size_t k = 0; k < qubits.size(); ++k) {
        const int q = qubits[k];
        if (q < 0 || q >= n) {
            throw InvalidInput("qubit " + std::to_string(q) + " out of range");
        }
        const std::size_t bit = std::size_t{1} << (n - 1 - q);
        mask |= bit;
        if ((value >> (qubits.size() - 1 - k)) & 1U) want |= bit;
    }
    if (qubits.size() < 64 && (value >> qubits.size()) != 0) {
        return 0.0;
    }
    double p = 0.0;
    const auto amps = state.amplitudes();
    for (std::size_t i = 0; i < amps.size(); ++i) {
        if ((i & mask) == want) p += std::norm(amps[i]);
    }
    return p;
}

double measure_probability(const StateVector& state, const Register& reg, std::uint64_t value) {
    std::vector<int> qubits(static_cast<std::size_t>(reg.width));
    for (int k = 0; k < reg.width; ++k) qubits[static_cast<std::size_t>(k)] = reg.qubit(k);
    return measure_probability(state, qubits, value);
}

double measure_probability(const StateVector& state, int qubit, int value) {
    const int q[] = {qubit};
    return measure_probability(state, q, static_cast<std::uint64_t>(value));
}

std::size_t sample_index(std::span<const double> probabilities, Rng& rng) {
    const double u = uniform01(rng);
    double acc = 0.0;
    std::size_t last_nonzero = 0;
    for (std::size_t i = 0; i < probabilities.size(); ++i) {
        if (probabilities[i] > 0.0) last_nonzero = i;
        acc += probabilities[i];
        if (u < acc) return i;
    }
    // Rounding left the cumulative sum a hair below u.
    return last_nonzero;
}

std::uint64_t sample(const StateVector& state, Rng& rng) {
    const double n = state.norm();
    if (std::abs(n * n - 1.0) > tol::kState * static_cast<double>(state.dim())) {
        throw InvalidInput("cannot sample an unnormalized state (norm^2 = " + std::to_string(n * n) + ")");
    }
    std::vector<double> probs(state.dim());
    const auto amps = state.amplitudes();
    for (std::size_t i = 0; i < probs.size(); ++i) probs[i] = std::norm(amps[i]);
    return sample_index(probs, rng);
}

std::uint64_t sample(const StateVector& state, std::uint64_t seed) {
    Rng rng(seed);
    return sample(state, rng);
}

}  // namespace qrf
