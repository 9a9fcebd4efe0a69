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

#include "qrf/commands.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <iomanip>
#include <numbers>
#include <sstream>

#include <json.hpp>

#include "qrf/circuit.hpp"
#include "qrf/errors.hpp"
#include "qrf/forest_io.hpp"

namespace qrf::cli {

namespace {

using json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

const char* mode_name(Mode m) {
    switch (m) {
        case Mode::Classical: return "classical";
        case Mode::Quantum: return "quantum";
        case Mode::Both: return "both";
    }
    return "?";
}

const char* target_name(Target t) { return t == Target::Beta ? "beta" : "r"; }

json optional_number(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

std::string num(double v, int precision = 6) {
    std::ostringstream out;
    out << std::setprecision(precision) << v;
    return out.str();
}

std::string csv(const InputObject& x) {
    std::ostringstream out;
    out.precision(17);
    for (std::size_t i = 0; i < x.values.size(); ++i) out << (i ? "," : "") << x.values[i];
    return out.str();
}

double median_of(std::vector<double> v) {
    if (v.empty()) return 0.0;
    std::sort(v.begin(), v.end());
    const auto mid = v.size() / 2;
    return v.size() % 2 ? v[mid] : 0.5 * (v[mid - 1] + v[mid]);
}

void row(std::ostringstream& out, const std::string& label, const std::string& value) {
    out << "  " << std::left << std::setw(22) << label << value << '\n';
}

}  // namespace

int exit_code_for(const std::exception& e) {
    if (dynamic_cast<const ParseError*>(&e)) return kExitParse;
    if (dynamic_cast<const ResourceError*>(&e)) return kExitResource;
    if (dynamic_cast<const InvalidInput*>(&e) || dynamic_cast<const DegenerateRange*>(&e) ||
        dynamic_cast<const DegenerateDenominator*>(&e)) {
        return kExitValidation;
    }
    return kExitIo;
}

std::string cmd_generate(const GenerateOptions& options) {
    return save_forest(generate_random_forest(options.shape, options.seed));
}

InputObject resolve_input(const std::string& csv_or_path) {
    std::error_code ec;
    if (std::filesystem::is_regular_file(csv_or_path, ec)) {
        auto text = read_text_file(csv_or_path);
        while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.pop_back();
        return parse_input_csv(text);
    }
    return parse_input_csv(csv_or_path);
}

RunReport cmd_forecast(const RandomForest& forest, const InputObject& x, const ForecastOptions& options) {
    const auto start = Clock::now();
    x.validate(forest.schema());

    RunReport report;
    report.n = forest.size();
    report.h = forest.height();
    report.y_min = forest.y_min();
    report.y_max = forest.y_max();
    report.input = x;
    report.mode = options.mode;
    report.target = options.target;
    report.seed = options.seed;

    const bool degenerate = !(forest.y_max() > forest.y_min());
    const bool want_classical = options.mode != Mode::Quantum;
    const bool want_quantum = options.mode != Mode::Classical;

    if (want_classical) {
        report.classical_R = forecast_classical(forest, x);
        if (!degenerate) report.classical_beta = beta_classical(forest, x);
    }

    if (want_quantum) {
        QaeConfig config;
        config.t = options.t;
        config.target = options.target;
        config.seed = options.seed;
        config.delta = options.delta;
        if (options.repetitions) config.repetitions = *options.repetitions;
        config.validate();

        if (degenerate) {
            report.warnings.push_back(
                "all leaf labels are equal; returning the constant forecast without estimation");
            report.quantum_R = forest.y_min();
        } else {
            auto result = estimate_forest(forest, x, config);
            report.quantum_R = reconstruct_R(result.beta_estimate, forest.y_min(), forest.y_max());
            report.queries = query_count(result);
            report.quantum = std::move(result);
        }
    }

    if (want_classical && want_quantum) {
        if (report.quantum) {
            const auto& q = *report.quantum;
            if (options.target == Target::Beta) {
                report.within_bound = std::abs(q.beta_estimate - *report.classical_beta) <= q.error_bound;
            } else {
                report.within_bound = std::abs(*q.R_estimate - *report.classical_R) <= *q.R_error_bound;
            }
        }
        const PredictionPair pair{*report.classical_R, *report.quantum_R};
        report.comparison = cmd_metrics({pair}, {kAllMetrics.begin(), kAllMetrics.end()});
    }

    report.wall_seconds = seconds_since(start);
    return report;
}

ReproduceReport cmd_reproduce_paper(const ReproduceOptions& options) {
    if (options.experiments < 1 || options.trials < 1) {
        throw InvalidInput("experiments and trials must be positive");
    }
    const auto start = Clock::now();

    ReproduceReport report;
    report.options = options;
    report.success_floor = 8.0 / (std::numbers::pi * std::numbers::pi);

    ForestShape shape;
    shape.trees = 2;
    shape.height = 2;
    shape.schema = {AttributeSpec::binary(), AttributeSpec::binary(), AttributeSpec::binary()};
    shape.label_min = 1.0;
    shape.label_max = 10.0;

    double abs_error_sum = 0.0;
    std::vector<double> relative_errors;
    for (int e = 0; e < options.experiments; ++e) {
        ReproduceRow r;
        r.experiment = e;
        r.forest_seed = derive_seed(options.seed, static_cast<std::uint64_t>(e));
        const auto forest = generate_random_forest(shape, r.forest_seed);
        Rng input_rng(derive_seed(r.forest_seed, 0));
        r.input = random_input(forest.schema(), input_rng);

        r.beta = beta_classical(forest, r.input);
        r.R = forecast_classical(forest, r.input);
        r.bound = error_bound(r.beta, options.t);

        const auto circuit = compile_forest_op(forest, r.input);
        const AmplitudeEstimator estimator(circuit, options.t);
        report.phase_qubits = estimator.phase_qubits();
        report.circuit_qubits = circuit.num_qubits();

        int hits = 0;
        for (int k = 0; k < options.trials; ++k) {
            Rng rng(derive_seed(r.forest_seed, static_cast<std::uint64_t>(k) + 1));
            const double estimate = estimator.sample_once(rng);
            const double R_est = reconstruct_R(estimate, forest.y_min(), forest.y_max());
            if (k == 0) {
                r.beta_estimate = estimate;
                r.R_estimate = R_est;
                r.relative_R_error = std::abs(R_est - r.R) / std::abs(r.R);
            }
            if (std::abs(estimate - r.beta) <= r.bound) ++hits;
            abs_error_sum += std::abs(estimate - r.beta);
            relative_errors.push_back(std::abs(R_est - r.R) / std::abs(r.R));
        }
        r.success_rate = static_cast<double>(hits) / options.trials;
        report.successes += hits;
        report.total_trials += options.trials;
        report.rows.push_back(std::move(r));
    }
    report.success_rate = static_cast<double>(report.successes) / static_cast<double>(report.total_trials);
    report.mean_abs_beta_error = abs_error_sum / static_cast<double>(report.total_trials);
    report.median_relative_R_error = median_of(std::move(relative_errors));
    report.wall_seconds = seconds_since(start);
    return report;
}

std::vector<MetricValue> cmd_metrics(const std::vector<PredictionPair>& pairs,
                                     const std::vector<Metric>& metrics) {
    std::vector<MetricValue> table;
    for (auto m : metrics) {
        MetricValue v{m, std::nullopt, {}};
        try {
            v.value = error_metric(pairs, m);
        } catch (const DegenerateDenominator& e) {
            v.error = e.what();
        }
        table.push_back(std::move(v));
    }
    return table;
}

std::string to_json(const std::vector<MetricValue>& table) {
    json out = json::array();
    for (const auto& v : table) {
        json row;
        row["metric"] = metric_name(v.metric);
        row["value"] = optional_number(v.value);
        if (!v.error.empty()) row["error"] = v.error;
        out.push_back(std::move(row));
    }
    return out.dump(2) + "\n";
}

std::string to_text(const std::vector<MetricValue>& table) {
    std::ostringstream out;
    for (const auto& v : table) {
        out << std::left << std::setw(8) << metric_name(v.metric)
            << (v.value ? num(*v.value, 10) : "undefined (" + v.error + ")") << '\n';
    }
    return out.str();
}

std::string to_json(const RunReport& r) {
    json out;
    out["schema_version"] = kSchemaVersion;
    out["command"] = "forecast";
    out["mode"] = mode_name(r.mode);
    out["target"] = target_name(r.target);
    out["seed"] = r.seed;
    out["forest"] = {{"n", r.n}, {"h", r.h}, {"y_min", r.y_min}, {"y_max", r.y_max}};
    out["input"] = r.input.values;
    out["classical"] = {{"R", optional_number(r.classical_R)},
                        {"beta", optional_number(r.classical_beta)}};
    json q = nullptr;
    if (r.quantum_R) {
        q = json::object();
        q["R"] = *r.quantum_R;
        if (r.quantum) {
            const auto& e = *r.quantum;
            q["beta"] = e.beta_estimate;
            q["error_bound"] = e.error_bound;
            q["R_error_bound"] = optional_number(e.R_error_bound);
            q["t"] = e.t;
            q["repetitions"] = e.repetitions;
            q["raw_estimates"] = e.raw_estimates;
            q["grover_calls"] = e.grover_calls;
            q["unitary_calls"] = e.unitary_calls;
            q["queries"] = query_count(e);
        }
    }
    out["quantum"] = q;
    out["within_bound"] = r.within_bound ? json(*r.within_bound) : json(nullptr);
    json metrics = json::object();
    for (const auto& v : r.comparison) metrics[std::string(metric_name(v.metric))] = optional_number(v.value);
    out["comparison"] = metrics;
    out["warnings"] = r.warnings;
    return out.dump(2) + "\n";
}

std::string to_text(const RunReport& r) {
    std::ostringstream out;
    out << "forest\n";
    row(out, "trees", std::to_string(r.n));
    row(out, "height", std::to_string(r.h));
    row(out, "y range", "[" + num(r.y_min) + ", " + num(r.y_max) + "]");
    row(out, "input", csv(r.input));
    if (r.classical_R) {
        out << "classical\n";
        row(out, "R", num(*r.classical_R, 10));
        if (r.classical_beta) row(out, "beta", num(*r.classical_beta, 10));
    }
    if (r.quantum_R) {
        out << "quantum (target " << target_name(r.target) << ", seed " << r.seed << ")\n";
        if (r.quantum) {
            const auto& e = *r.quantum;
            row(out, "beta estimate", num(e.beta_estimate, 10));
            row(out, "beta bound", num(e.error_bound, 6));
            row(out, "R estimate", num(*r.quantum_R, 10));
            if (e.R_error_bound) row(out, "R bound", num(*e.R_error_bound, 6));
            row(out, "t", std::to_string(e.t));
            row(out, "repetitions", std::to_string(e.repetitions));
            row(out, "grover calls", std::to_string(e.grover_calls));
            row(out, "queries", std::to_string(query_count(e)));
        } else {
            row(out, "R", num(*r.quantum_R, 10));
        }
    }
    if (r.within_bound) {
        row(out, "within bound", *r.within_bound ? "yes" : "no");
    }
    if (!r.comparison.empty()) {
        out << "classical vs quantum R\n";
        for (const auto& v : r.comparison) {
            row(out, std::string(metric_name(v.metric)), v.value ? num(*v.value, 6) : "undefined");
        }
    }
    for (const auto& w : r.warnings) out << "warning: " << w << '\n';
    row(out, "wall time", num(r.wall_seconds, 3) + " s");
    return out.str();
}

std::string to_json(const ReproduceReport& r) {
    json out;
    out["schema_version"] = kSchemaVersion;
    out["command"] = "reproduce";
    out["seed"] = r.options.seed;
    out["experiments"] = r.options.experiments;
    out["trials"] = r.options.trials;
    out["t"] = r.options.t;
    out["phase_qubits"] = r.phase_qubits;
    out["circuit_qubits"] = r.circuit_qubits;
    json rows = json::array();
    for (const auto& row : r.rows) {
        json j;
        j["experiment"] = row.experiment;
        j["forest_seed"] = row.forest_seed;
        j["input"] = row.input.values;
        j["beta"] = row.beta;
        j["beta_estimate"] = row.beta_estimate;
        j["bound"] = row.bound;
        j["R"] = row.R;
        j["R_estimate"] = row.R_estimate;
        j["relative_R_error"] = row.relative_R_error;
        j["success_rate"] = row.success_rate;
        rows.push_back(std::move(j));
    }
    out["rows"] = rows;
    out["total_trials"] = r.total_trials;
    out["successes"] = r.successes;
    out["success_rate"] = r.success_rate;
    out["success_floor"] = r.success_floor;
    out["mean_abs_beta_error"] = r.mean_abs_beta_error;
    out["median_relative_R_error"] = r.median_relative_R_error;
    return out.dump(2) + "\n";
}

std::string to_text(const ReproduceReport& r) {
    std::ostringstream out;
    out << "2 trees, height 2, 3 binary attributes, t = " << r.options.t << " (" << r.phase_qubits
        << " phase qubits + " << r.circuit_qubits << " circuit qubits)\n\n";
    out << std::left << std::setw(4) << "exp" << std::setw(8) << "input" << std::setw(12) << "beta"
        << std::setw(12) << "estimate" << std::setw(10) << "bound" << std::setw(11) << "R"
        << std::setw(11) << "R est" << std::setw(10) << "rel err" << "success\n";
    for (const auto& row : r.rows) {
        out << std::left << std::setw(4) << row.experiment << std::setw(8) << csv(row.input)
            << std::setw(12) << num(row.beta, 6) << std::setw(12) << num(row.beta_estimate, 6)
            << std::setw(10) << num(row.bound, 4) << std::setw(11) << num(row.R, 6) << std::setw(11)
            << num(row.R_estimate, 6) << std::setw(10) << num(row.relative_R_error, 3)
            << num(row.success_rate, 3) << '\n';
    }
    out << '\n';
    row(out, "success rate", num(r.success_rate, 4) + " over " + std::to_string(r.total_trials) +
                                 " runs (floor 8/pi^2 = " + num(r.success_floor, 4) + ")");
    row(out, "mean |beta err|", num(r.mean_abs_beta_error, 4));
    row(out, "median rel R err", num(r.median_relative_R_error, 4));
    row(out, "wall time", num(r.wall_seconds, 3) + " s");
    return out.str();
}

}  // namespace qrf::cli
