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

// qrf: forest generation, classical and simulated-quantum forecasting,
// the two-tree reproduction experiment and error metrics.

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qrf/circuit.hpp"
#include "qrf/commands.hpp"
#include "qrf/errors.hpp"
#include "qrf/forest_io.hpp"

namespace {

using namespace qrf;

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
    } else {
        write_text_file(out_path, text);
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Quantum random forest forecasting simulator"};
    app.require_subcommand(1);

    // generate
    auto* gen = app.add_subcommand("generate", "Write a random forest document");
    int gen_trees = 2;
    int gen_height = 2;
    int gen_attrs = 3;
    int gen_categories = 2;
    std::vector<double> gen_range{0.0, 10.0};
    std::uint64_t gen_seed = 0;
    std::string gen_out;
    gen->add_option("--trees,-n", gen_trees, "Number of trees")->capture_default_str();
    gen->add_option("--height,-H", gen_height, "Tree height")->capture_default_str();
    gen->add_option("--attrs,-d", gen_attrs, "Number of attributes")->capture_default_str();
    gen->add_option("--categories", gen_categories,
                    "Categories per discrete attribute (0 = real attributes)")
        ->capture_default_str();
    gen->add_option("--range", gen_range, "Leaf label range LO HI")->expected(2)->capture_default_str();
    gen->add_option("--seed", gen_seed, "RNG seed")->capture_default_str();
    gen->add_option("--out", gen_out, "Output path (default stdout)");

    // forecast
    auto* fc = app.add_subcommand("forecast", "Forecast one input classically and/or by simulated QAE");
    std::string fc_forest;
    std::string fc_input;
    std::string fc_mode = "both";
    std::string fc_target = "beta";
    int fc_t = 32;
    int fc_reps = 1;
    double fc_delta = 0.0;
    std::uint64_t fc_seed = 0;
    std::string fc_out;
    std::string fc_format = "text";
    fc->add_option("--forest", fc_forest, "Forest document")->required();
    fc->add_option("--input", fc_input, "Comma-separated attribute values or a file holding them")
        ->required();
    fc->add_option("--mode", fc_mode, "classical | quantum | both")
        ->check(CLI::IsMember({"classical", "quantum", "both"}))
        ->capture_default_str();
    fc->add_option("--target", fc_target, "beta | r")->check(CLI::IsMember({"beta", "r"}))->capture_default_str();
    fc->add_option("--t", fc_t, "Precision parameter (power of two)")->capture_default_str();
    auto* reps_opt = fc->add_option("--reps", fc_reps, "Odd number of repetitions (median)");
    auto* delta_opt = fc->add_option("--delta", fc_delta, "Failure probability; derives --reps");
    reps_opt->excludes(delta_opt);
    fc->add_option("--seed", fc_seed, "RNG seed")->capture_default_str();
    fc->add_option("--out", fc_out, "Output path (default stdout)");
    fc->add_option("--format", fc_format, "text | structured")
        ->check(CLI::IsMember({"text", "structured"}))
        ->capture_default_str();

    // reproduce
    auto* rp = app.add_subcommand("reproduce", "Two trees of height 2, t = 32, seeded experiments");
    cli::ReproduceOptions rp_opts;
    std::string rp_out;
    std::string rp_format = "text";
    rp->add_option("--seed", rp_opts.seed, "Base seed")->capture_default_str();
    rp->add_option("--experiments", rp_opts.experiments, "Independent forests/inputs")->capture_default_str();
    rp->add_option("--trials", rp_opts.trials, "Single QAE runs per experiment")->capture_default_str();
    rp->add_option("--t", rp_opts.t, "Precision parameter")->capture_default_str();
    rp->add_option("--out", rp_out, "Output path (default stdout)");
    rp->add_option("--format", rp_format, "text | structured")
        ->check(CLI::IsMember({"text", "structured"}))
        ->capture_default_str();

    // metrics
    auto* mt = app.add_subcommand("metrics", "Error metrics over (truth, forecast) pairs");
    std::string mt_pairs;
    std::vector<std::string> mt_names{"MAE", "MSE", "RMSE", "MAPE", "wMAPE", "sMAPE"};
    std::string mt_out;
    std::string mt_format = "text";
    mt->add_option("--pairs", mt_pairs, "Two-column pairs file")->required();
    mt->add_option("--metrics", mt_names, "Metrics to compute")->delimiter(',')->capture_default_str();
    mt->add_option("--out", mt_out, "Output path (default stdout)");
    mt->add_option("--format", mt_format, "text | structured")
        ->check(CLI::IsMember({"text", "structured"}))
        ->capture_default_str();

    // circuit
    auto* dc = app.add_subcommand("circuit", "Print the compiled preparation circuit, one gate per line");
    std::string dc_forest;
    std::string dc_input;
    std::string dc_out;
    dc->add_option("--forest", dc_forest, "Forest document")->required();
    dc->add_option("--input", dc_input, "Attribute values or a file holding them")->required();
    dc->add_option("--out", dc_out, "Output path (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed()) {
            cli::GenerateOptions opts;
            opts.shape.trees = gen_trees;
            opts.shape.height = gen_height;
            if (gen_attrs < 1) throw InvalidInput("--attrs must be positive");
            if (gen_categories < 0) throw InvalidInput("--categories must be >= 0");
            AttributeSpec spec = AttributeSpec::real();
            if (gen_categories > 0) {
                std::vector<double> cats;
                for (int c = 0; c < gen_categories; ++c) cats.push_back(c);
                spec = AttributeSpec::discrete(cats);
            }
            opts.shape.schema.assign(static_cast<std::size_t>(gen_attrs), spec);
            opts.shape.label_min = gen_range[0];
            opts.shape.label_max = gen_range[1];
            opts.seed = gen_seed;
            emit(cli::cmd_generate(opts), gen_out);
        } else if (fc->parsed()) {
            const auto forest = load_forest_file(fc_forest);
            const auto x = cli::resolve_input(fc_input);
            cli::ForecastOptions opts;
            opts.mode = fc_mode == "classical" ? cli::Mode::Classical
                        : fc_mode == "quantum" ? cli::Mode::Quantum
                                               : cli::Mode::Both;
            opts.target = fc_target == "r" ? Target::R : Target::Beta;
            opts.t = fc_t;
            if (reps_opt->count() > 0) opts.repetitions = fc_reps;
            if (delta_opt->count() > 0) opts.delta = fc_delta;
            opts.seed = fc_seed;
            const auto report = cli::cmd_forecast(forest, x, opts);
            emit(fc_format == "structured" ? cli::to_json(report) : cli::to_text(report), fc_out);
        } else if (rp->parsed()) {
            const auto report = cli::cmd_reproduce_paper(rp_opts);
            emit(rp_format == "structured" ? cli::to_json(report) : cli::to_text(report), rp_out);
        } else if (mt->parsed()) {
            std::vector<Metric> metrics;
            for (const auto& name : mt_names) {
                const auto m = parse_metric(name);
                if (!m) throw InvalidInput("unknown metric '" + name + "'");
                metrics.push_back(*m);
            }
            const auto pairs = parse_pairs(read_text_file(mt_pairs));
            if (pairs.empty()) throw InvalidInput("pairs file holds no pairs");
            const auto table = cli::cmd_metrics(pairs, metrics);
            emit(mt_format == "structured" ? cli::to_json(table) : cli::to_text(table), mt_out);
        } else if (dc->parsed()) {
            const auto forest = load_forest_file(dc_forest);
            const auto x = cli::resolve_input(dc_input);
            emit(dump_circuit(compile_forest_op(forest, x)), dc_out);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return cli::exit_code_for(e);
    }
    return cli::kExitOk;
}
