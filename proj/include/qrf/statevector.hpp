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

#pragma once

/**
 * @file
 * Dense state vector over N qubits with in-place gate kernels.
 *
 * Qubit 0 is the most significant bit of the basis index (see gate.hpp).
 * Kernels walk amplitude pairs by stride and never build a full matrix;
 * gate_matrix() is kept only as an oracle for them.
 */

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "qrf/gate.hpp"
#include "qrf/rng.hpp"

namespace qrf {

/// Contiguous range of qubits with a role in a circuit.
struct Register {
    std::string name;
    int first = 0;
    int width = 0;

    int qubit(int k) const { return first + k; }
    /// Least significant qubit of the register's value.
    int lsb() const { return first + width - 1; }
    bool contains(int q) const { return q >= first && q < first + width; }

    bool operator==(const Register&) const = default;
};

class StateVector {
  public:
    /// |0...0> on `num_qubits` qubits. Throws ResourceError above
    /// tol::kMaxQubits.
    explicit StateVector(int num_qubits);

    static StateVector basis(int num_qubits, std::uint64_t index);
    /// Takes the amplitudes as given; the length must be a power of two.
    static StateVector from_amplitudes(std::vector<Complex> amplitudes);

    int num_qubits() const noexcept { return num_qubits_; }
    std::size_t dim() const noexcept { return amps_.size(); }
    std::span<const Complex> amplitudes() const noexcept { return amps_; }
    std::span<Complex> amplitudes() noexcept { return amps_; }
    Complex operator[](std::size_t i) const { return amps_[i]; }

    void apply(const Gate& gate);
    void apply(std::span<const Gate> sequence);

    double norm() const;

    /// Lines of "index real imag".
    std::string dump() const;

  private:
    int num_qubits_;
    std::vector<Complex> amps_;
};

/// In-place application on a raw 2^N amplitude block. Lets callers run a
/// gate on a slice of a larger register without copying it out.
void apply_gate(std::span<Complex> amplitudes, int num_qubits, const Gate& gate);
void apply_gates(std::span<Complex> amplitudes, int num_qubits, std::span<const Gate> sequence);

/// Value-returning form.
StateVector apply_gate(StateVector state, const Gate& gate);

/// Probability that `qubits` (first = most significant) read `value`.
/// The state is not changed.
double measure_probability(const StateVector& state, std::span<const int> qubits, std::uint64_t value);
double measure_probability(const StateVector& state, const Register& reg, std::uint64_t value);
double measure_probability(const StateVector& state, int qubit, int value);

/// Basis index drawn from |a_j|^2 using one uniform01() draw from `rng`
/// and an inverse-CDF scan. Throws InvalidInput if the state is not
/// normalized within tol::kState * dim.
std::uint64_t sample(const StateVector& state, Rng& rng);
std::uint64_t sample(const StateVector& state, std::uint64_t seed);

/// Inverse-CDF draw from an explicit distribution. Shared with the
/// amplitude estimator's readout.
std::size_t sample_index(std::span<const double> probabilities, Rng& rng);

}  // namespace qrf
