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

#include "qrf/circuit.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <sstream>

#include "qrf/errors.hpp"
#include "qrf/forest_io.hpp"

namespace qrf {

namespace {

std::uint64_t fnv1a(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::uint64_t hash_input(const InputObject& x) {
    std::ostringstream out;
    out.precision(17);
    for (double v : x.values) out << v << ',';
    return fnv1a(out.str());
}

}  // namespace

CircuitLayout CircuitLayout::for_forest(std::size_t num_trees, int height) {
    if (num_trees == 0 || !std::has_single_bit(num_trees)) {
        throw InvalidInput("the circuit needs a power-of-two number of trees, got " +
                           std::to_string(num_trees));
    }
    if (height < 1) {
        throw InvalidInput("tree height must be at least 1");
    }
    const int index_width = std::bit_width(num_trees) - 1;
    CircuitLayout layout;
    layout.tree_index = {"lambda", 0, index_width};
    layout.node = {"psi", index_width, height + 1};
    layout.result = {"phi", index_width + height + 1, 1};
    return layout;
}

std::vector<Control> CircuitLayout::tree_controls(std::size_t i) const {
    std::vector<Control> controls;
    for (int k = 0; k < tree_index.width; ++k) {
        const bool bit = ((i >> (tree_index.width - 1 - k)) & 1U) != 0;
        controls.push_back({tree_index.qubit(k), bit});
    }
    return controls;
}

BranchOutcomeTable::BranchOutcomeTable(int height, std::vector<std::vector<bool>> outcomes)
    : height_(height), outcomes_(std::move(outcomes)) {
    const auto internal = (std::size_t{1} << height_) - 1;
    for (const auto& row : outcomes_) {
        if (row.size() != internal) {
            throw InvalidInput("outcome table row must hold " + std::to_string(internal) + " nodes");
        }
    }
}

BranchOutcomeTable BranchOutcomeTable::evaluate(const RandomForest& forest, const InputObject& x) {
    x.validate(forest.schema());
    std::vector<std::vector<bool>> rows;
    rows.reserve(forest.size());
    for (const auto& tree : forest.trees()) {
        std::vector<bool> row;
        row.reserve(tree.nodes().size());
        for (const auto& p : tree.nodes()) row.push_back(p.evaluate(x));
        rows.push_back(std::move(row));
    }
    return BranchOutcomeTable(forest.height(), std::move(rows));
}

bool BranchOutcomeTable::outcome(std::size_t tree, std::int64_t node) const {
    if (tree >= outcomes_.size()) {
        throw InvalidInput("outcome table has no tree " + std::to_string(tree));
    }
    if (node < 1 || node >= (std::int64_t{1} << height_)) {
        throw InvalidInput("outcome table has no node " + std::to_string(node) + " for tree " +
                           std::to_string(tree));
    }
    return outcomes_[tree][static_cast<std::size_t>(node - 1)];
}

LeafAngleTable LeafAngleTable::from_forest(const RandomForest& forest) {
    const double lo = forest.y_min();
    const double span = forest.y_max() - lo;
    if (!(span > 0.0)) {
        throw DegenerateRange("all leaf labels are equal; leaf angles are undefined");
    }
    LeafAngleTable table;
    table.height_ = forest.height();
    for (const auto& tree : forest.trees()) {
        std::vector<double> row;
        row.reserve(tree.leaves().size());
        for (double y : tree.leaves()) {
            const double ratio = std::clamp((y - lo) / span, 0.0, 1.0);
            row.push_back(std::asin(std::sqrt(ratio)));
        }
        table.angles_.push_back(std::move(row));
    }
    return table;
}

double LeafAngleTable::angle(std::size_t tree, std::int64_t leaf) const {
    const std::int64_t first = std::int64_t{1} << height_;
    if (tree >= angles_.size() || leaf < first || leaf >= 2 * first) {
        throw InvalidInput("angle table has no leaf " + std::to_string(leaf) + " for tree " +
                           std::to_string(tree));
    }
    return angles_[tree][static_cast<std::size_t>(leaf - first)];
}

std::vector<Gate> compile_times2(const CircuitLayout& layout) {
    std::vector<Gate> out;
    for (int k = 0; k + 1 < layout.node.width; ++k) {
        out.push_back(gates::swap(layout.node.qubit(k), layout.node.qubit(k + 1)));
    }
    return out;
}

std::vector<Gate> compile_plus1(const CircuitLayout& layout, std::size_t tree, int level,
                                const BranchOutcomeTable& outcomes) {
    const int h = layout.height();
    if (level < 0 || level >= h) {
        throw InvalidInput("walk level " + std::to_string(level) + " outside [0, " +
                           std::to_string(h) + ")");
    }
    std::vector<int> selectors;
    for (int k = 0; k < h; ++k) selectors.push_back(layout.node.qubit(k));

    std::vector<Mat2> blocks(std::size_t{1} << h, mat2::identity());
    const std::int64_t first = std::int64_t{1} << level;
    for (std::int64_t parent = first; parent < 2 * first; ++parent) {
        if (outcomes.outcome(tree, parent)) {
            blocks[static_cast<std::size_t>(parent)] = mat2::pauli_x();
        }
    }
    return {gates::ucg(std::move(selectors), layout.node.lsb(), std::move(blocks))};
}

std::vector<Gate> compile_tree_op(const DecisionTree& tree_model, std::size_t tree,
                                  const CircuitLayout& layout, const BranchOutcomeTable& outcomes,
                                  const LeafAngleTable& angles) {
    const int h = layout.height();
    if (tree_model.height() != h || outcomes.height() != h || angles.height() != h) {
        throw InvalidInput("tree, tables and layout disagree on the height");
    }
    std::vector<Gate> body;
    for (int level = 0; level < h; ++level) {
        auto doubling = compile_times2(layout);
        body.insert(body.end(), doubling.begin(), doubling.end());
        auto plus1 = compile_plus1(layout, tree, level, outcomes);
        body.insert(body.end(), plus1.begin(), plus1.end());
    }

    std::vector<int> selectors;
    for (int k = 0; k < layout.node.width; ++k) selectors.push_back(layout.node.qubit(k));
    std::vector<double> rotation(std::size_t{1} << layout.node.width, 0.0);
    for (std::int64_t leaf = tree_model.first_leaf(); leaf < tree_model.end_index(); ++leaf) {
        rotation[static_cast<std::size_t>(leaf)] = 2.0 * angles.angle(tree, leaf);
    }
    body.push_back(gates::ucr(std::move(selectors), layout.result.qubit(0), std::move(rotation)));

    const auto controls = layout.tree_controls(tree);
    if (controls.empty()) {
        return body;
    }
    std::vector<Gate> out;
    out.reserve(body.size());
    for (const auto& g : body) out.push_back(g.with_controls(controls));
    return out;
}

CompiledCircuit compile_forest_op(const RandomForest& forest, const InputObject& x) {
    CompiledCircuit c;
    c.layout = CircuitLayout::for_forest(forest.size(), forest.height());
    c.num_trees = forest.size();
    c.height = forest.height();
    c.forest_hash = fnv1a(save_forest(forest));
    c.input_hash = hash_input(x);

    const auto outcomes = BranchOutcomeTable::evaluate(forest, x);
    const auto angles = LeafAngleTable::from_forest(forest);

    for (int k = 0; k < c.layout.tree_index.width; ++k) {
        c.gates.push_back(gates::h(c.layout.tree_index.qubit(k)));
    }
    c.gates.push_back(gates::x(c.layout.node.lsb()));
    for (std::size_t i = 0; i < forest.size(); ++i) {
        auto op = compile_tree_op(forest.tree(i), i, c.layout, outcomes, angles);
        c.gates.insert(c.gates.end(), op.begin(), op.end());
        c.levels_queried.push_back(forest.height());
    }
    return c;
}

CompiledCircuit compile_inverse(const CompiledCircuit& circuit) {
    CompiledCircuit inv = circuit;
    inv.gates = inverse(circuit.gates);
    return inv;
}

std::vector<Gate> build_D(const CompiledCircuit& circuit) {
    const int n = circuit.num_qubits();
    std::vector<Gate> out = inverse(circuit.gates);

    std::vector<Control> zeros;
    for (int q = 0; q + 1 < n; ++q) zeros.push_back({q, false});
    out.push_back(gates::controlled_u(std::move(zeros), n - 1, {-1.0, 0.0, 0.0, 1.0}));
    out.push_back(gates::global_phase(std::numbers::pi));

    out.insert(out.end(), circuit.gates.begin(), circuit.gates.end());
    return out;
}

std::vector<Gate> build_D(const RandomForest& forest, const InputObject& x) {
    return build_D(compile_forest_op(forest, x));
}

std::vector<Gate> build_V(const CircuitLayout& layout) {
    return {gates::controlled_u({}, layout.result.qubit(0), mat2::pauli_z())};
}

std::vector<Gate> grover_iterate(const CompiledCircuit& circuit) {
    auto q = build_V(circuit.layout);
    auto d = build_D(circuit);
    q.insert(q.end(), d.begin(), d.end());
    return q;
}

StateVector prepare_state(const CompiledCircuit& circuit) {
    StateVector s(circuit.num_qubits());
    s.apply(circuit.gates);
    return s;
}

std::string dump_circuit(const CompiledCircuit& circuit) {
    std::ostringstream out;
    const auto& l = circuit.layout;
    out << "# trees " << circuit.num_trees << " height " << circuit.height << " qubits "
        << circuit.num_qubits() << '\n';
    out << "# forest " << std::hex << circuit.forest_hash << " input " << circuit.input_hash
        << std::dec << '\n';
    for (const auto* r : {&l.tree_index, &l.node, &l.result}) {
        out << "# register " << r->name << ' ' << r->first << ' ' << r->width << '\n';
    }
    out << to_text(circuit.gates);
    return out.str();
}

}  // namespace qrf
