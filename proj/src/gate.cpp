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

#include "qrf/gate.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <sstream>

#include "qrf/errors.hpp"
#include "qrf/tolerances.hpp"

namespace qrf {

namespace mat2 {

Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }

Mat2 hadamard() {
    const double s = 1.0 / std::numbers::sqrt2;
    return {s, s, s, -s};
}

Mat2 pauli_x() { return {0.0, 1.0, 1.0, 0.0}; }

Mat2 pauli_z() { return {1.0, 0.0, 0.0, -1.0}; }

Mat2 ry(double xi) {
    const double c = std::cos(xi / 2.0);
    const double s = std::sin(xi / 2.0);
    return {c, -s, s, c};
}

Mat2 phase(double theta) { return {1.0, 0.0, 0.0, std::polar(1.0, theta)}; }

Mat2 adjoint(const Mat2& m) {
    return {std::conj(m[0]), std::conj(m[2]), std::conj(m[1]), std::conj(m[3])};
}

Mat2 multiply(const Mat2& a, const Mat2& b) {
    return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
            a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

}  // namespace mat2

Gate Gate::with_controls(std::span<const Control> extra) const {
    Gate g = *this;
    g.controls.insert(g.controls.begin(), extra.begin(), extra.end());
    return g;
}

namespace gates {

Gate h(int q) { return {.kind = GateKind::H, .targets = {q}}; }

Gate x(int q) { return {.kind = GateKind::X, .targets = {q}}; }

Gate ry(int q, double xi) { return {.kind = GateKind::Ry, .targets = {q}, .angles = {xi}}; }

Gate cnot(int control, int target) {
    return {.kind = GateKind::CNOT, .targets = {target}, .controls = {{control, true}}};
}

Gate swap(int a, int b) { return {.kind = GateKind::SWAP, .targets = {a, b}}; }

Gate controlled_u(std::vector<Control> controls, int target, const Mat2& u) {
    return {.kind = GateKind::ControlledU,
            .targets = {target},
            .controls = std::move(controls),
            .blocks = {u}};
}

Gate ucg(std::vector<int> selectors, int target, std::vector<Mat2> blocks) {
    return {.kind = GateKind::UCG,
            .targets = {target},
            .selectors = std::move(selectors),
            .blocks = std::move(blocks)};
}

Gate ucr(std::vector<int> selectors, int target, std::vector<double> angles) {
    return {.kind = GateKind::UCR,
            .targets = {target},
            .selectors = std::move(selectors),
            .angles = std::move(angles)};
}

Gate global_phase(double theta) { return {.kind = GateKind::GlobalPhase, .phase = theta}; }

}  // namespace gates

namespace {

const char* kind_name(GateKind kind) {
    switch (kind) {
        case GateKind::H: return "h";
        case GateKind::X: return "x";
        case GateKind::Ry: return "ry";
        case GateKind::CNOT: return "cnot";
        case GateKind::SWAP: return "swap";
        case GateKind::ControlledU: return "cu";
        case GateKind::UCG: return "ucg";
        case GateKind::UCR: return "ucr";
        case GateKind::GlobalPhase: return "gphase";
    }
    return "?";
}

void expect(bool ok, const Gate& gate, const std::string& what) {
    if (!ok) {
        throw InvalidInput(std::string(kind_name(gate.kind)) + " gate: " + what);
    }
}

std::size_t selector_value(std::size_t index, std::span<const int> selectors, int num_qubits) {
    std::size_t k = 0;
    for (int q : selectors) {
        k = (k << 1) | ((index >> (num_qubits - 1 - q)) & 1U);
    }
    return k;
}

bool controls_fire(std::size_t index, std::span<const Control> controls, int num_qubits) {
    return std::all_of(controls.begin(), controls.end(), [&](const Control& c) {
        return (((index >> (num_qubits - 1 - c.qubit)) & 1U) != 0) == c.value;
    });
}

}  // namespace

void validate(const Gate& gate, int num_qubits) {
    const std::size_t width = gate.selectors.size();
    expect(width <= 20, gate, "too many selector qubits");
    const std::size_t mux = std::size_t{1} << width;

    switch (gate.kind) {
        case GateKind::H:
        case GateKind::X:
            expect(gate.targets.size() == 1, gate, "needs one target");
            expect(gate.selectors.empty() && gate.blocks.empty() && gate.angles.empty(), gate,
                   "takes no parameters");
            break;
        case GateKind::Ry:
            expect(gate.targets.size() == 1, gate, "needs one target");
            expect(gate.selectors.empty() && gate.angles.size() == 1, gate, "needs one angle");
            break;
        case GateKind::CNOT:
            expect(gate.targets.size() == 1, gate, "needs one target");
            expect(!gate.controls.empty() && gate.selectors.empty(), gate, "needs a control");
            break;
        case GateKind::SWAP:
            expect(gate.targets.size() == 2, gate, "needs two targets");
            expect(gate.selectors.empty(), gate, "takes no selectors");
            break;
        case GateKind::ControlledU:
            expect(gate.targets.size() == 1, gate, "needs one target");
            expect(gate.selectors.empty() && gate.blocks.size() == 1, gate, "needs one block");
            break;
        case GateKind::UCG:
            expect(gate.targets.size() == 1, gate, "needs one target");
            expect(gate.blocks.size() == mux, gate,
                   "needs " + std::to_string(mux) + " blocks, got " + std::to_string(gate.blocks.size()));
            break;
        case GateKind::UCR:
            expect(gate.targets.size() == 1, gate, "needs one target");
            expect(gate.angles.size() == mux, gate,
                   "needs " + std::to_string(mux) + " angles, got " + std::to_string(gate.angles.size()));
            break;
        case GateKind::GlobalPhase:
            expect(gate.targets.empty() && gate.selectors.empty(), gate, "acts on no qubits");
            break;
    }

    std::set<int> seen;
    auto touch = [&](int q) {
        expect(q >= 0 && q < num_qubits, gate,
               "qubit " + std::to_string(q) + " outside [0, " + std::to_string(num_qubits) + ")");
        expect(seen.insert(q).second, gate, "qubit " + std::to_string(q) + " used twice");
    };
    for (int q : gate.targets) touch(q);
    for (const auto& c : gate.controls) touch(c.qubit);
    for (int q : gate.selectors) touch(q);
}

Mat2 target_block(const Gate& gate, std::size_t k) {
    switch (gate.kind) {
        case GateKind::H: return mat2::hadamard();
        case GateKind::X:
        case GateKind::CNOT: return mat2::pauli_x();
        case GateKind::Ry: return mat2::ry(gate.angles.at(0));
        case GateKind::ControlledU: return gate.blocks.at(0);
        case GateKind::UCG: return gate.blocks.at(k);
        case GateKind::UCR: return mat2::ry(gate.angles.at(k));
        case GateKind::SWAP:
        case GateKind::GlobalPhase: break;
    }
    throw InvalidInput(std::string(kind_name(gate.kind)) + " gate has no one-qubit block");
}

Gate inverse(const Gate& gate) {
    Gate g = gate;
    switch (gate.kind) {
        case GateKind::H:
        case GateKind::X:
        case GateKind::CNOT:
        case GateKind::SWAP:
            break;
        case GateKind::Ry:
        case GateKind::UCR:
            for (auto& a : g.angles) a = -a;
            break;
        case GateKind::ControlledU:
        case GateKind::UCG:
            for (auto& b : g.blocks) b = mat2::adjoint(b);
            break;
        case GateKind::GlobalPhase:
            g.phase = -g.phase;
            break;
    }
    return g;
}

std::vector<Gate> inverse(std::span<const Gate> sequence) {
    std::vector<Gate> out;
    out.reserve(sequence.size());
    for (auto it = sequence.rbegin(); it != sequence.rend(); ++it) {
        out.push_back(inverse(*it));
    }
    return out;
}

std::vector<Gate> swap_as_cnots(int a, int b) {
    if (a == b) {
        throw InvalidInput("swap_as_cnots needs two distinct qubits");
    }
    return {gates::cnot(a, b), gates::cnot(b, a), gates::cnot(a, b)};
}

std::string to_text(const Gate& gate) {
    std::ostringstream out;
    out.precision(17);
    out << kind_name(gate.kind);
    if (!gate.controls.empty()) {
        out << " ctrl=";
        for (std::size_t i = 0; i < gate.controls.size(); ++i) {
            out << (i ? "," : "") << gate.controls[i].qubit << ':' << (gate.controls[i].value ? 1 : 0);
        }
    }
    if (!gate.selectors.empty()) {
        out << " sel=";
        for (std::size_t i = 0; i < gate.selectors.size(); ++i) {
            out << (i ? "," : "") << gate.selectors[i];
        }
    }
    if (!gate.targets.empty()) {
        out << " q=";
        for (std::size_t i = 0; i < gate.targets.size(); ++i) {
            out << (i ? "," : "") << gate.targets[i];
        }
    }
    if (!gate.angles.empty()) {
        out << " angles=";
        for (std::size_t i = 0; i < gate.angles.size(); ++i) {
            out << (i ? "," : "") << gate.angles[i];
        }
    }
    if (!gate.blocks.empty()) {
        // UCG blocks in this code base are I or X; anything else prints entries.
        out << " blocks=";
        for (std::size_t i = 0; i < gate.blocks.size(); ++i) {
            const auto& b = gate.blocks[i];
            out << (i ? "," : "");
            if (b == mat2::identity()) {
                out << 'I';
            } else if (b == mat2::pauli_x()) {
                out << 'X';
            } else {
                out << '[';
                for (std::size_t e = 0; e < 4; ++e) {
                    out << (e ? " " : "") << b[e].real() << (b[e].imag() < 0 ? "" : "+")
                        << b[e].imag() << 'i';
                }
                out << ']';
            }
        }
    }
    if (gate.kind == GateKind::GlobalPhase) {
        out << " phase=" << gate.phase;
    }
    return out.str();
}

std::string to_text(std::span<const Gate> sequence) {
    std::string out;
    for (const auto& g : sequence) {
        out += to_text(g);
        out += '\n';
    }
    return out;
}

DenseMatrix::DenseMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}

DenseMatrix DenseMatrix::identity(std::size_t dim) {
    DenseMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
}

DenseMatrix DenseMatrix::operator*(const DenseMatrix& rhs) const {
    if (rhs.dim_ != dim_) {
        throw InvalidInput("matrix dimension mismatch");
    }
    DenseMatrix out(dim_);
    for (std::size_t r = 0; r < dim_; ++r) {
        for (std::size_t k = 0; k < dim_; ++k) {
            const Complex a = (*this)(r, k);
            if (a == Complex{}) continue;
            for (std::size_t c = 0; c < dim_; ++c) {
                out(r, c) += a * rhs(k, c);
            }
        }
    }
    return out;
}

std::vector<Complex> DenseMatrix::operator*(std::span<const Complex> v) const {
    if (v.size() != dim_) {
        throw InvalidInput("vector dimension mismatch");
    }
    std::vector<Complex> out(dim_);
    for (std::size_t r = 0; r < dim_; ++r) {
        Complex acc{};
        for (std::size_t c = 0; c < dim_; ++c) acc += (*this)(r, c) * v[c];
        out[r] = acc;
    }
    return out;
}

DenseMatrix DenseMatrix::adjoint() const {
    DenseMatrix out(dim_);
    for (std::size_t r = 0; r < dim_; ++r) {
        for (std::size_t c = 0; c < dim_; ++c) out(c, r) = std::conj((*this)(r, c));
    }
    return out;
}

double DenseMatrix::max_abs_diff(const DenseMatrix& other) const {
    if (other.dim_ != dim_) {
        throw InvalidInput("matrix dimension mismatch");
    }
    double worst = 0.0;
    for (std::size_t i = 0; i < data_.size(); ++i) {
        worst = std::max(worst, std::abs(data_[i] - other.data_[i]));
    }
    return worst;
}

DenseMatrix gate_matrix(const Gate& gate, int num_qubits) {
    if (num_qubits < 1 || num_qubits > tol::kMaxDenseQubits) {
        throw ResourceError("gate_matrix supports 1 to " + std::to_string(tol::kMaxDenseQubits) +
                            " qubits, got " + std::to_string(num_qubits));
    }
    validate(gate, num_qubits);
    const std::size_t dim = std::size_t{1} << num_qubits;
    auto bit = [&](int q) { return std::size_t{1} << (num_qubits - 1 - q); };

    DenseMatrix m(dim);
    for (std::size_t col = 0; col < dim; ++col) {
        if (!controls_fire(col, gate.controls, num_qubits)) {
            m(col, col) = 1.0;
            continue;
        }
        switch (gate.kind) {
            case GateKind::GlobalPhase:
                m(col, col) = std::polar(1.0, gate.phase);
                break;
            case GateKind::SWAP: {
                const auto a = bit(gate.targets[0]);
                const auto b = bit(gate.targets[1]);
                std::size_t row = col & ~(a | b);
                if (col & a) row |= b;
                if (col & b) row |= a;
                m(row, col) = 1.0;
                break;
            }
            default: {
                const auto t = bit(gate.targets[0]);
                const std::size_t in = (col & t) ? 1 : 0;
                const Mat2 block = target_block(gate, selector_value(col, gate.selectors, num_qubits));
                m(col & ~t, col) = block[0 * 2 + in];
                m(col | t, col) = block[1 * 2 + in];
                break;
            }
        }
    }
    return m;
}

DenseMatrix circuit_matrix(std::span<const Gate> sequence, int num_qubits) {
    auto m = DenseMatrix::identity(std::size_t{1} << num_qubits);
    for (const auto& g : sequence) {
        m = gate_matrix(g, num_qubits) * m;
    }
    return m;
}

}  // namespace qrf
