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

// Compiles a forest and one input object into the forecasting circuit.
//
// Register layout (qubit 0 first):
//
//   tree index   log2(n) qubits   uniform superposition over trees
//   node         h + 1 qubits     heap index of the current node
//   result       1 qubit          rotated by the reached leaf's angle
//
// Node predicates are evaluated classically against the input at compile
// time (BranchOutcomeTable). The circuit then walks the tree by node index
// only: each level doubles the node register with a SWAP cascade and adds
// one with a UCG whose X blocks sit at the nodes whose predicate holds.
// After h levels a UCR over the node register rotates the result qubit.
//
// Acting on |0...0>, the forest operator prepares
//
//   (1/sqrt(n)) sum_i |i>|j_i>(cos a_i|0> + sin a_i|1>),
//   sin^2 a_i = (y_i - y_min) / (y_max - y_min),
//
// so the probability of result = 1 is the normalized forest mean beta.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "qrf/forest.hpp"
#include "qrf/gate.hpp"
#include "qrf/statevector.hpp"

namespace qrf {

struct CircuitLayout {
    Register tree_index;
    Register node;
    Register result;

    /// n must be a power of two; throws InvalidInput otherwise.
    static CircuitLayout for_forest(std::size_t num_trees, int height);

    int width() const { return tree_index.width + node.width + result.width; }
    int height() const { return node.width - 1; }

    /// Pattern controls selecting tree `i` on the tree-index register.
    std::vector<Control> tree_controls(std::size_t i) const;
};

/// Predicate outcome of every internal node of every tree for one input.
/// Each lookup through outcome() stands for one query of the input.
class BranchOutcomeTable {
  public:
    static BranchOutcomeTable evaluate(const RandomForest& forest, const InputObject& x);

    BranchOutcomeTable(int height, std::vector<std::vector<bool>> outcomes);

    int height() const noexcept { return height_; }
    std::size_t num_trees() const noexcept { return outcomes_.size(); }

    /// Throws InvalidInput for a tree or node outside the table.
    bool outcome(std::size_t tree, std::int64_t node) const;

  private:
    int height_;
    std::vector<std::vector<bool>> outcomes_;  // [tree][node - 1]
};

/// Leaf angles a = arcsin sqrt((y - y_min) / (y_max - y_min)) in [0, pi/2].
class LeafAngleTable {
  public:
    /// Throws DegenerateRange when y_max == y_min.
    static LeafAngleTable from_forest(const RandomForest& forest);

    double angle(std::size_t tree, std::int64_t leaf) const;
    int height() const noexcept { return height_; }

  private:
    int height_ = 0;
    std::vector<std::vector<double>> angles_;  // [tree][leaf - 2^h]
};

struct CompiledCircuit {
    CircuitLayout layout;
    std::vector<Gate> gates;
    std::size_t num_trees = 0;
    int height = 0;
    std::uint64_t forest_hash = 0;
    std::uint64_t input_hash = 0;
    /// Per tree, the tree levels whose outcomes the circuit consulted.
    std::vector<int> levels_queried;

    int num_qubits() const { return layout.width(); }

    /// Input queries made by one application of the circuit: one per tree
    /// level, the level's node outcomes being read in superposition over
    /// trees and nodes.
    std::int64_t queries_per_application() const { return height; }
};

/// |j> -> |2j> on the node register for j < 2^h: SWAP(q0,q1), SWAP(q1,q2),
/// ..., SWAP(q_{h-1},q_h), i.e. a cyclic left shift of its qubits.
std::vector<Gate> compile_times2(const CircuitLayout& layout);

/// The "+1" of one walk level: a UCG on the node register's least
/// significant qubit, selected by the other node qubits (which hold the
/// parent index after the doubling), with an X block exactly at the parents
/// on `level` whose predicate holds for `tree`.
std::vector<Gate> compile_plus1(const CircuitLayout& layout, std::size_t tree, int level,
                                const BranchOutcomeTable& outcomes);

/// Single-tree operator, controlled on the tree-index register holding
/// `tree` (no controls when the forest has one tree). Maps
/// |tree>|1>|0> -> |tree>|j>(cos a|0> + sin a|1>).
std::vector<Gate> compile_tree_op(const DecisionTree& tree_model, std::size_t tree,
                                  const CircuitLayout& layout, const BranchOutcomeTable& outcomes,
                                  const LeafAngleTable& angles);

/// Full preparation circuit. Throws InvalidInput for a non power-of-two
/// forest and DegenerateRange for a constant forest.
CompiledCircuit compile_forest_op(const RandomForest& forest, const InputObject& x);

/// Reversed order, each gate inverted.
CompiledCircuit compile_inverse(const CompiledCircuit& circuit);

/// 2|Psi><Psi| - I as U . (2|0><0| - I) . U^-1. The middle reflection is a
/// phase flip on |0...0> followed by a global phase of pi.
std::vector<Gate> build_D(const CompiledCircuit& circuit);
std::vector<Gate> build_D(const RandomForest& forest, const InputObject& x);

/// I - 2P with P projecting onto result = 1.
std::vector<Gate> build_V(const CircuitLayout& layout);

/// Grover iterate Q = D . V, listed in application order (V first).
std::vector<Gate> grover_iterate(const CompiledCircuit& circuit);

/// Runs the preparation circuit on |0...0>.
StateVector prepare_state(const CompiledCircuit& circuit);

/// Header lines plus one line per gate.
std::string dump_circuit(const CompiledCircuit& circuit);

}  // namespace qrf
