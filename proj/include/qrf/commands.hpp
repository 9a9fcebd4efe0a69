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

// Library side of the `qrf` command-line tool. Each command returns a plain
// report struct; the executable only parses flags, calls these and prints.

#include <cstdint>
#include <exception>
#include <optional>
#include <string>
#include <vector>

#include "qrf/forest.hpp"
#include "qrf/metrics.hpp"
#include "qrf/qae.hpp"

namespace qrf::cli {

inline constexpr int kSchemaVersion = 1;

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitIo = 1;
inline constexpr int kExitParse = 2;
inline constexpr int kExitValidation = 3;
inline constexpr int kExitResource = 4;

int exit_code_for(const std::exception& e);

enum class Mode { Classical, Quantum, Both };

struct GenerateOptions {
    ForestShape shape;
    std::uint64_t seed = 0;
};

/// Canonical forest document for the generated forest.
std::string cmd_generate(const GenerateOptions& options);

/// A CSV string, or a path to a file holding one.
InputObject resolve_input(const std::string& csv_or_path);

struct ForecastOptions {
    Mode mode = Mode::Both;
    Target target = Target::Beta;
    int t = 32;
    std::optional<int> repetitions;
    std::optional<double> delta;
    std::uint64_t seed = 0;
};

struct MetricValue {
    Metric metric;
    std::optional<double> value;
    std::string error;  // set when the metric is undefined for the pairs
};

struct RunReport {
    std::size_t n = 0;
    int h = 0;
    double y_min = 0.0;
    double y_max = 0.0;
    InputObject input;
    Mode mode = Mode::Both;
    Target target = Target::Beta;
    std::uint64_t seed = 0;

    std::optional<double> classical_R;
    std::optional<double> classical_beta;

    std::optional<EstimationResult> quantum;
    std::optional<double> quantum_R;
    std::optional<std::int64_t> queries;
    std::optional<bool> within_bound;  // mode Both: target error within its bound

    std::vector<MetricValue> comparison;  // (classical R, quantum R) under each metric
    std::vector<std::string> warnings;
    double wall_seconds = 0.0;
};

RunReport cmd_forecast(const RandomForest& forest, const InputObject& x, const ForecastOptions& options);

struct ReproduceOptions {
    std::uint64_t seed = 2026;
    int experiments = 10;
    int trials = 100;
    int t = 32;
};

struct ReproduceRow {
    int experiment = 0;
    std::uint64_t forest_seed = 0;
    InputObject input;
    double beta = 0.0;
    double beta_estimate = 0.0;  // first trial
    double bound = 0.0;          // plus-form bound at the true beta
    double R = 0.0;
    double R_estimate = 0.0;
    double relative_R_error = 0.0;
    double success_rate = 0.0;   // over this experiment's trials
};

struct ReproduceReport {
    ReproduceOptions options;
    int phase_qubits = 0;
    int circuit_qubits = 0;
    std::vector<ReproduceRow> rows;
    std::int64_t total_trials = 0;
    std::int64_t successes = 0;
    double success_rate = 0.0;
    double success_floor = 0.0;  // 8 / pi^2
    double mean_abs_beta_error = 0.0;
    double median_relative_R_error = 0.0;
    double wall_seconds = 0.0;
};

/// Two trees of height 2 over three binary attributes, t = 32 by default;
/// `experiments` independent seeded forests and inputs, `trials` single
/// amplitude-estimation runs on each.
ReproduceReport cmd_reproduce_paper(const ReproduceOptions& options);

std::vector<MetricValue> cmd_metrics(const std::vector<PredictionPair>& pairs,
                                     const std::vector<Metric>& metrics);

// Rendering. Structured output is deterministic for a fixed seed: wall
// time appears only in the text form.
std::string to_json(const RunReport& report);
std::string to_text(const RunReport& report);
std::string to_json(const ReproduceReport& report);
std::string to_text(const ReproduceReport& report);
std::string to_json(const std::vector<MetricValue>& table);
std::string to_text(const std::vector<MetricValue>& table);

}  // namespace qrf::cli
