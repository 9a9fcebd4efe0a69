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

#include "qrf/qae.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>

#include "qrf/errors.hpp"
#include "qrf/statevector.hpp"
#include "qrf/tolerances.hpp"

namespace qrf {

namespace {

void check_t(int t) {
    if (t < 2 || !std::has_single_bit(static_cast<unsigned>(t))) {
        throw InvalidInput("t must be a power of two >= 2, got " + std::to_string(t));
    }
}

}  // namespace

int repetitions_for_delta(double delta) {
    if (!(delta > 0.0 && delta < 0.5)) {
        throw InvalidInput("delta must lie in (0, 0.5)");
    }
    int r = static_cast<int>(std::ceil(kPoweringConstant * std::log(1.0 / delta)));
    if (r % 2 == 0) ++r;
    return std::max(r, 1);
}

void QaeConfig::validate() const {
    check_t(t);
    if (delta) {
        repetitions_for_delta(*delta);
    } else if (repetitions < 1 || repetitions % 2 == 0) {
        throw InvalidInput("repetitions must be odd and positive, got " + std::to_string(repetitions));
    }
}

int QaeConfig::effective_repetitions() const {
    return delta ? repetitions_for_delta(*delta) : repetitions;
}

std::vector<Gate> fourier_transform(int num_qubits) {
    std::vector<Gate> out;
    for (int j = 0; j < num_qubits; ++j) {
        out.push_back(gates::h(j));
        for (int m = j + 1; m < num_qubits; ++m) {
            const double theta = 2.0 * std::numbers::pi / static_cast<double>(1 << (m - j + 1));
            out.push_back(gates::controlled_u({{m, true}}, j, mat2::phase(theta)));
        }
    }
    for (int j = 0; j < num_qubits / 2; ++j) {
        out.push_back(gates::swap(j, num_qubits - 1 - j));
    }
    return out;
}

AmplitudeEstimator::AmplitudeEstimator(const CompiledCircuit& circuit, int t) : t_(t) {
    check_t(t);
    phase_qubits_ = std::bit_width(static_cast<unsigned>(t)) - 1;
    const int width = circuit.num_qubits();
    total_qubits_ = phase_qubits_ + width;
    if (total_qubits_ > tol::kMaxQubits) {
        throw ResourceError("amplitude estimation needs " + std::to_string(total_qubits_) +
                            " qubits, limit is " + std::to_string(tol::kMaxQubits));
    }

    const auto psi = prepare_state(circuit);
    const auto grover = grover_iterate(circuit);
    const std::size_t slice = psi.dim();

    // Phase register on the leading qubits: slice k of the full state is the
    // system block for phase value k. After the Hadamards every slice holds
    // |Psi> / sqrt(t).
    std::vector<Complex> full(slice * static_cast<std::size_t>(t));
    const double scale = 1.0 / std::sqrt(static_cast<double>(t));
    for (std::size_t k = 0; k < static_cast<std::size_t>(t); ++k) {
        for (std::size_t s = 0; s < slice; ++s) full[k * slice + s] = psi[s] * scale;
    }

    // Phase qubit m controls Q^(2^(p-1-m)).
    for (int m = 0; m < phase_qubits_; ++m) {
        const std::size_t weight = std::size_t{1} << (phase_qubits_ - 1 - m);
        for (std::size_t k = 0; k < static_cast<std::size_t>(t); ++k) {
            if ((k & weight) == 0) continue;
            std::span<Complex> block(full.data() + k * slice, slice);
            for (std::size_t rep = 0; rep < weight; ++rep) apply_gates(block, width, grover);
        }
    }

    const auto qft = fourier_transform(phase_qubits_);
    apply_gates(full, total_qubits_, inverse(qft));

    distribution_.assign(static_cast<std::size_t>(t), 0.0);
    for (std::size_t k = 0; k < static_cast<std::size_t>(t); ++k) {
        double p = 0.0;
        for (std::size_t s = 0; s < slice; ++s) p += std::norm(full[k * slice + s]);
        distribution_[k] = p;
    }
}

std::vector<double> AmplitudeEstimator::estimate_distribution() const {
    std::vector<double> folded(static_cast<std::size_t>(t_ / 2 + 1), 0.0);
    for (int k = 0; k < t_; ++k) {
        const int j = k <= t_ / 2 ? k : t_ - k;
        folded[static_cast<std::size_t>(j)] += distribution_[static_cast<std::size_t>(k)];
    }
    return folded;
}

double AmplitudeEstimator::sample_once(Rng& rng) const {
    const auto k = sample_index(distribution_, rng);
    return beta_for_outcome(static_cast<std::int64_t>(k), t_);
}

double beta_for_outcome(std::int64_t k, int t) {
    // Fold first so k and t - k give bit-identical values.
    const std::int64_t folded = k <= t / 2 ? k : t - k;
    const double s = std::sin(std::numbers::pi * static_cast<double>(folded) / t);
    return s * s;
}

double estimate_amplitude_once(const CompiledCircuit& circuit, const QaeConfig& config) {
    config.validate();
    const AmplitudeEstimator estimator(circuit, config.t);
    Rng rng(derive_seed(config.seed, 0));
    return estimator.sample_once(rng);
}

EstimationResult estimate_with_boosting(const CompiledCircuit& circuit, const QaeConfig& config) {
    config.validate();
    const AmplitudeEstimator estimator(circuit, config.t);
    const int r = config.effective_repetitions();

    EstimationResult result;
    result.t = config.t;
    result.repetitions = r;
    result.raw_estimates.reserve(static_cast<std::size_t>(r));
    for (int k = 0; k < r; ++k) {
        Rng rng(derive_seed(config.seed, static_cast<std::uint64_t>(k)));
        result.raw_estimates.push_back(estimator.sample_once(rng));
    }
    result.beta_estimate = median(result.raw_estimates);
    result.error_bound = error_bound(result.beta_estimate, config.t);
    result.grover_calls = static_cast<std::int64_t>(r) * (config.t - 1);
    result.unitary_calls = static_cast<std::int64_t>(r) * (2 * static_cast<std::int64_t>(config.t) - 1);
    result.queries_per_unitary = circuit.queries_per_application();
    return result;
}

EstimationResult estimate_forest(const RandomForest& forest, const InputObject& x,
                                 const QaeConfig& config) {
    const auto circuit = compile_forest_op(forest, x);
    auto result = estimate_with_boosting(circuit, config);
    if (config.target == Target::R) {
        result.R_estimate = reconstruct_R(result.beta_estimate, forest.y_min(), forest.y_max());
        result.R_error_bound = (forest.y_max() - forest.y_min()) * result.error_bound;
    }
    return result;
}

double reconstruct_R(double beta_estimate, double y_min, double y_max) {
    return beta_to_R(beta_estimate, y_min, y_max);
}

double error_bound(double beta, int t) {
    const double b = std::clamp(beta, 0.0, 1.0);
    const double td = static_cast<double>(t);
    return 2.0 * std::numbers::pi * std::sqrt(b * (1.0 - b)) / td +
           std::numbers::pi * std::numbers::pi / (td * td);
}

double relaxed_error_bound(int t) {
    const double td = static_cast<double>(t);
    return 2.0 * std::numbers::pi / td + std::numbers::pi * std::numbers::pi / (td * td);
}

double error_bound_minus_form(double beta, int t) {
    const double b = std::clamp(beta, 0.0, 1.0);
    const double td = static_cast<double>(t);
    return 2.0 * std::numbers::pi * std::sqrt(b * (1.0 - b)) / td -
           std::numbers::pi * std::numbers::pi / (td * td);
}

std::int64_t query_count(const EstimationResult& result) {
    return result.unitary_calls * result.queries_per_unitary;
}

double median(std::span<const double> values) {
    if (values.empty() || values.size() % 2 == 0) {
        throw InvalidInput("median needs an odd number of values");
    }
    std::vector<double> v(values.begin(), values.end());
    const auto mid = v.begin() + static_cast<std::ptrdiff_t>(v.size() / 2);
    std::nth_element(v.begin(), mid, v.end());
    return *mid;
}

}  // namespace qrf
