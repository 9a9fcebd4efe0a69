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

// Amplitude estimation of beta = <Psi|P|Psi> for a compiled forest circuit.
//
// One run is textbook phase estimation of the Grover iterate Q = D . V:
// log2(t) phase qubits in uniform superposition, phase qubit m controlling
// Q^(2^(p-1-m)), an inverse Fourier transform on the phase register, and a
// single sampled readout k. The estimate is sin^2(pi k / t).
//
// Counting convention for one run: Q is applied t - 1 times through the
// controlled powers, so D and V are each used t - 1 times, plus one
// preparation U. Every D costs one U and one U^-1, hence 2t - 1 calls to
// U or U^-1 per run, each making h input queries.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "qrf/circuit.hpp"
#include "qrf/forest.hpp"
#include "qrf/rng.hpp"

namespace qrf {

enum class Target { Beta, R };

/// r = smallest odd integer >= kPoweringConstant * ln(1/delta).
inline constexpr double kPoweringConstant = 12.0;

int repetitions_for_delta(double delta);

struct QaeConfig {
    int t = 32;
    /// Used when `delta` is unset. Must be odd.
    int repetitions = 1;
    std::optional<double> delta;
    Target target = Target::Beta;
    std::uint64_t seed = 0;

    /// Throws InvalidInput on a bad t, even repetition count or delta
    /// outside (0, 0.5).
    void validate() const;
    int effective_repetitions() const;
};

struct EstimationResult {
    double beta_estimate = 0.0;
    std::optional<double> R_estimate;
    double error_bound = 0.0;             // on beta, evaluated at beta_estimate
    std::optional<double> R_error_bound;  // (y_max - y_min) * error_bound
    std::vector<double> raw_estimates;
    int t = 0;
    int repetitions = 0;
    std::int64_t grover_calls = 0;        // applications of Q (each one D and one V)
    std::int64_t unitary_calls = 0;       // applications of U or U^-1
    std::int64_t queries_per_unitary = 0;
};

/// Gate list of the quantum Fourier transform on qubits [0, num_qubits),
/// qubit 0 most significant: |x> -> t^-1/2 sum_k e^{2 pi i x k / t} |k>.
std::vector<Gate> fourier_transform(int num_qubits);

/// Simulates the unitary part of one amplitude-estimation run once and
/// keeps the readout distribution; each sample_once() is then one
/// independent run.
class AmplitudeEstimator {
  public:
    /// Throws InvalidInput for t not a power of two >= 2 and ResourceError
    /// if the phase and circuit registers together exceed tol::kMaxQubits.
    AmplitudeEstimator(const CompiledCircuit& circuit, int t);

    int t() const noexcept { return t_; }
    int phase_qubits() const noexcept { return phase_qubits_; }
    int total_qubits() const noexcept { return total_qubits_; }
    std::span<const double> outcome_distribution() const noexcept { return distribution_; }

    /// Distribution folded onto the estimates sin^2(pi k / t), k in [0, t/2].
    std::vector<double> estimate_distribution() const;

    double sample_once(Rng& rng) const;

  private:
    int t_;
    int phase_qubits_;
    int total_qubits_;
    std::vector<double> distribution_;
};

/// sin^2(pi k / t)
double beta_for_outcome(std::int64_t k, int t);

/// Runs the full simulation and samples once with `config.seed`.
double estimate_amplitude_once(const CompiledCircuit& circuit, const QaeConfig& config);

/// Median of the configured number of runs; run k is seeded with
/// derive_seed(config.seed, k). R fields stay empty.
EstimationResult estimate_with_boosting(const CompiledCircuit& circuit, const QaeConfig& config);

/// Compiles, estimates and, for Target::R, maps the estimate back to R.
EstimationResult estimate_forest(const RandomForest& forest, const InputObject& x,
                                 const QaeConfig& config);

/// beta * (y_max - y_min) + y_min. Throws DegenerateRange.
double reconstruct_R(double beta_estimate, double y_min, double y_max);

/// 2 pi sqrt(b (1 - b)) / t + pi^2 / t^2.
double error_bound(double beta, int t);
/// 2 pi / t + pi^2 / t^2, valid for every beta in [0, 1].
double relaxed_error_bound(int t);
/// 2 pi sqrt(b (1 - b)) / t - pi^2 / t^2: the amplitude-estimation bound
/// with the minus sign it is sometimes quoted with. Tighter than
/// error_bound(); kept to check published numbers, not used for decisions.
double error_bound_minus_form(double beta, int t);

/// Input queries consumed: unitary_calls * queries_per_unitary.
std::int64_t query_count(const EstimationResult& result);

/// Median of an odd-length list.
double median(std::span<const double> values);

}  // namespace qrf
