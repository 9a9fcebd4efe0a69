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

// Reference computations for the tests. None of these call into the code
// path they are used to check.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <memory>
#include <numbers>
#include <vector>

#include "qrf/forest.hpp"
#include "qrf/gate.hpp"
#include "qrf/rng.hpp"

namespace qrf::oracle {

// Pointer-linked copy of a heap tree, evaluated by plain recursion.
struct LinkedNode {
    bool is_leaf = false;
    Predicate predicate;
    double label = 0.0;
    std::int64_t heap_index = 0;
    std::unique_ptr<LinkedNode> on_false;
    std::unique_ptr<LinkedNode> on_true;
};

inline std::unique_ptr<LinkedNode> link(const DecisionTree& tree, std::int64_t index) {
    auto node = std::make_unique<LinkedNode>();
    node->heap_index = index;
    if (index >= (std::int64_t{1} << tree.height())) {
        node->is_leaf = true;
        node->label = tree.leaves()[static_cast<std::size_t>(index - (std::int64_t{1} << tree.height()))];
        return node;
    }
    node->predicate = tree.nodes()[static_cast<std::size_t>(index - 1)];
    node->on_false = link(tree, index * 2);
    node->on_true = link(tree, index * 2 + 1);
    return node;
}

inline const LinkedNode& descend(const LinkedNode& node, const InputObject& x) {
    if (node.is_leaf) return node;
    const double v = x.values.at(static_cast<std::size_t>(node.predicate.attribute - 1));
    const bool holds = node.predicate.kind == PredicateKind::Greater ? v > node.predicate.threshold
                                                                      : v == node.predicate.threshold;
    return descend(holds ? *node.on_true : *node.on_false, x);
}

inline std::vector<double> leaf_labels_by_enumeration(const RandomForest& forest, const InputObject& x) {
    std::vector<double> out;
    for (const auto& tree : forest.trees()) {
        const auto root = link(tree, 1);
        out.push_back(descend(*root, x).label);
    }
    return out;
}

inline std::vector<Complex> random_state(int num_qubits, Rng& rng) {
    std::vector<Complex> v(std::size_t{1} << num_qubits);
    double norm = 0.0;
    for (auto& a : v) {
        // Box-Muller pairs give an isotropic direction.
        const double u1 = 1.0 - uniform01(rng);
        const double u2 = uniform01(rng);
        const double r = std::sqrt(-2.0 * std::log(u1));
        a = {r * std::cos(2 * std::numbers::pi * u2), r * std::sin(2 * std::numbers::pi * u2)};
        norm += std::norm(a);
    }
    for (auto& a : v) a /= std::sqrt(norm);
    return v;
}

inline double max_abs_diff(std::span<const Complex> a, std::span<const Complex> b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
    return worst;
}

// Random gate of any kind on `num_qubits` >= 3 qubits, with random pattern
// controls and selectors.
inline Gate random_gate(int num_qubits, Rng& rng) {
    std::vector<int> pool(static_cast<std::size_t>(num_qubits));
    for (int q = 0; q < num_qubits; ++q) pool[static_cast<std::size_t>(q)] = q;
    for (std::size_t i = pool.size(); i > 1; --i) std::swap(pool[i - 1], pool[uniform_index(rng, i)]);
    std::size_t next = 0;
    auto take = [&] { return pool[next++]; };
    auto random_u = [&] {
        // Ry . phase . Ry with random angles, times a global phase.
        Mat2 m = mat2::multiply(mat2::ry(uniform_real(rng, -4, 4)), mat2::phase(uniform_real(rng, -4, 4)));
        m = mat2::multiply(m, mat2::ry(uniform_real(rng, -4, 4)));
        const Complex g = std::polar(1.0, uniform_real(rng, -4, 4));
        for (auto& e : m) e *= g;
        return m;
    };

    const auto kind = static_cast<GateKind>(uniform_index(rng, 9));
    Gate g;
    switch (kind) {
        case GateKind::H: g = gates::h(take()); break;
        case GateKind::X: g = gates::x(take()); break;
        case GateKind::Ry: g = gates::ry(take(), uniform_real(rng, -7, 7)); break;
        case GateKind::CNOT: {
            const int c = take();
            g = gates::cnot(c, take());
            break;
        }
        case GateKind::SWAP: {
            const int a = take();
            g = gates::swap(a, take());
            break;
        }
        case GateKind::ControlledU: g = gates::controlled_u({}, take(), random_u()); break;
        case GateKind::UCG:
        case GateKind::UCR: {
            const int target = take();
            std::vector<int> sel;
            const auto width = uniform_index(rng, std::min<std::size_t>(3, pool.size() - next) + 1);
            for (std::size_t k = 0; k < width; ++k) sel.push_back(take());
            const std::size_t blocks = std::size_t{1} << sel.size();
            if (kind == GateKind::UCG) {
                std::vector<Mat2> b;
                for (std::size_t k = 0; k < blocks; ++k) b.push_back(random_u());
                g = gates::ucg(sel, target, b);
            } else {
                std::vector<double> a;
                for (std::size_t k = 0; k < blocks; ++k) a.push_back(uniform_real(rng, -7, 7));
                g = gates::ucr(sel, target, a);
            }
            break;
        }
        case GateKind::GlobalPhase: g = gates::global_phase(uniform_real(rng, -4, 4)); break;
    }
    // Up to two extra pattern controls on unused qubits.
    const auto extra = uniform_index(rng, std::min<std::size_t>(2, pool.size() - next) + 1);
    for (std::size_t k = 0; k < extra; ++k) {
        g.controls.push_back({take(), uniform01(rng) < 0.5});
    }
    return g;
}

// Unitary DFT, F[j][k] = t^-1/2 e^{2 pi i j k / t}.
inline DenseMatrix dft_matrix(std::size_t t) {
    DenseMatrix m(t);
    const double s = 1.0 / std::sqrt(static_cast<double>(t));
    for (std::size_t j = 0; j < t; ++j) {
        for (std::size_t k = 0; k < t; ++k) {
            const double angle = 2.0 * std::numbers::pi * static_cast<double>(j * k % t) / static_cast<double>(t);
            m(j, k) = std::polar(s, angle);
        }
    }
    return m;
}

// Closed-form readout distribution of phase estimation on the Grover
// iterate: |Psi> splits evenly over eigenvectors with phases +-theta/pi,
// sin^2(theta) = beta, and each contributes the Fejer-kernel weights
// |t^-1 sum_j e^{2 pi i j (w - k/t)}|^2.
inline std::vector<double> qae_distribution_closed_form(double beta, int t) {
    const double theta = std::asin(std::sqrt(beta));
    auto kernel = [t](double w, int k) {
        std::complex<double> acc{};
        for (int j = 0; j < t; ++j) {
            acc += std::polar(1.0, 2.0 * std::numbers::pi * j * (w - static_cast<double>(k) / t));
        }
        return std::norm(acc) / (static_cast<double>(t) * t);
    };
    std::vector<double> p(static_cast<std::size_t>(t));
    for (int k = 0; k < t; ++k) {
        p[static_cast<std::size_t>(k)] =
            0.5 * (kernel(theta / std::numbers::pi, k) + kernel(-theta / std::numbers::pi, k));
    }
    return p;
}

// Two trees of height 2 over three binary attributes, labels in [10, 20].
// For the input (1, 0, 1) tree 0 reaches a leaf labelled 13.192 and tree 1
// one labelled 10, so beta = (0.3192 + 0) / 2 = 0.1596 and R = 11.596.
inline RandomForest reference_forest() {
    const Schema schema{AttributeSpec::binary(), AttributeSpec::binary(), AttributeSpec::binary()};
    // x1 == 1 -> node 3; x3 == 1 -> leaf 7.
    DecisionTree t0(2,
                    {{PredicateKind::Equals, 1, 1.0}, {PredicateKind::Equals, 2, 1.0},
                     {PredicateKind::Equals, 3, 1.0}},
                    {11.0, 20.0, 15.5, 13.192});
    // x2 == 1 is false -> node 2; x1 > 0.5 holds -> leaf 5.
    DecisionTree t1(2,
                    {{PredicateKind::Equals, 2, 1.0}, {PredicateKind::Greater, 1, 0.5},
                     {PredicateKind::Equals, 3, 0.0}},
                    {12.0, 10.0, 18.0, 16.0});
    return RandomForest({t0, t1}, schema);
}

inline InputObject reference_input() { return {{1.0, 0.0, 1.0}}; }

}  // namespace qrf::oracle
