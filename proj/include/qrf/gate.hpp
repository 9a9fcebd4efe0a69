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

// Gate vocabulary of the simulator.
//
// Qubit 0 is the most significant bit of a basis index: in an N-qubit state
// the amplitude of |b_0 b_1 ... b_{N-1}> sits at index sum_q b_q 2^(N-1-q).
//
// Every gate may carry pattern controls. A pattern control fires when its
// qubit holds `value`; the gate acts only on the subspace where all of its
// controls fire and as the identity elsewhere. UCG and UCR additionally
// multiplex over `selectors`: block k of the gate is applied to the target
// when the selector qubits read k, selectors[0] being the most significant
// bit of k.

#include <array>
#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace qrf {

using Complex = std::complex<double>;

/// Row-major 2x2 matrix {m00, m01, m10, m11}.
using Mat2 = std::array<Complex, 4>;

namespace mat2 {
Mat2 identity();
Mat2 hadamard();
Mat2 pauli_x();
Mat2 pauli_z();
Mat2 ry(double xi);
Mat2 phase(double theta);  // diag(1, e^{i theta})
Mat2 adjoint(const Mat2& m);
Mat2 multiply(const Mat2& a, const Mat2& b);
}  // namespace mat2

enum class GateKind { H, X, Ry, CNOT, SWAP, ControlledU, UCG, UCR, GlobalPhase };

struct Control {
    int qubit;
    bool value = true;

    bool operator==(const Control&) const = default;
};

struct Gate {
    GateKind kind = GateKind::H;
    std::vector<int> targets{};
    std::vector<Control> controls{};
    std::vector<int> selectors{};
    std::vector<Mat2> blocks{};     // ControlledU: one, UCG: 2^|selectors|
    std::vector<double> angles{};   // Ry: one, UCR: 2^|selectors|
    double phase = 0.0;           // GlobalPhase: multiplies by e^{i phase}

    /// Copy with `extra` prepended to the pattern controls.
    Gate with_controls(std::span<const Control> extra) const;

    bool operator==(const Gate&) const = default;
};

namespace gates {
Gate h(int q);
Gate x(int q);
Gate ry(int q, double xi);
Gate cnot(int control, int target);
Gate swap(int a, int b);
Gate controlled_u(std::vector<Control> controls, int target, const Mat2& u);
Gate ucg(std::vector<int> selectors, int target, std::vector<Mat2> blocks);
Gate ucr(std::vector<int> selectors, int target, std::vector<double> angles);
Gate global_phase(double theta);
}  // namespace gates

/// Throws InvalidInput if the gate is malformed or touches a qubit outside
/// [0, num_qubits).
void validate(const Gate& gate, int num_qubits);

/// The one-qubit block applied to the target for selector value `k`. Only
/// meaningful for single-target kinds.
Mat2 target_block(const Gate& gate, std::size_t k);

Gate inverse(const Gate& gate);
std::vector<Gate> inverse(std::span<const Gate> sequence);

/// CNOT(a, b), CNOT(b, a), CNOT(a, b). Throws InvalidInput when a == b.
std::vector<Gate> swap_as_cnots(int a, int b);

/// One line: name, qubits, then parameters.
std::string to_text(const Gate& gate);
std::string to_text(std::span<const Gate> sequence);

/// Square complex matrix, row-major.
class DenseMatrix {
  public:
    explicit DenseMatrix(std::size_t dim);
    static DenseMatrix identity(std::size_t dim);

    std::size_t dim() const noexcept { return dim_; }
    Complex& operator()(std::size_t r, std::size_t c) { return data_[r * dim_ + c]; }
    const Complex& operator()(std::size_t r, std::size_t c) const { return data_[r * dim_ + c]; }

    DenseMatrix operator*(const DenseMatrix& rhs) const;
    std::vector<Complex> operator*(std::span<const Complex> v) const;
    DenseMatrix adjoint() const;

    /// max |a_ij - b_ij|
    double max_abs_diff(const DenseMatrix& other) const;

  private:
    std::size_t dim_;
    std::vector<Complex> data_;
};

/// Explicit 2^N x 2^N unitary of one gate, built column by column from the
/// gate definition. A test oracle; refuses N above tol::kMaxDenseQubits.
DenseMatrix gate_matrix(const Gate& gate, int num_qubits);
DenseMatrix circuit_matrix(std::span<const Gate> sequence, int num_qubits);

}  // namespace qrf
