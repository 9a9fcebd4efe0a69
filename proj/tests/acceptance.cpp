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

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "qrf/circuit.hpp"
#include "qrf/errors.hpp"
#include "qrf/forest.hpp"
#include "qrf/qae.hpp"
#include "qrf/statevector.hpp"
#include "qrf/tolerances.hpp"

using namespace qrf;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

std::string fmt(const char* f, auto... args) {
    char buf[256];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

double elapsed(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// Single seeded runs on the reference instance, shared by criteria 2 and 5.
struct ReferenceRuns {
    double beta = 0.0;
    double R = 0.0;
    double y_min = 0.0;
    double y_max = 0.0;
    std::vector<EstimationResult> runs;
};

const ReferenceRuns& reference_runs() {
    static const ReferenceRuns runs = [] {
        ReferenceRuns p;
        const auto forest = oracle::reference_forest();
        const auto x = oracle::reference_input();
        p.beta = beta_classical(forest, x);
        p.R = forecast_classical(forest, x);
        p.y_min = forest.y_min();
        p.y_max = forest.y_max();
        for (std::uint64_t seed = 0; seed < 1000; ++seed) {
            QaeConfig cfg;
            cfg.t = 32;
            cfg.target = Target::R;
            cfg.seed = seed;
            p.runs.push_back(estimate_forest(forest, x, cfg));
        }
        return p;
    }();
    return runs;
}

Outcome exact_amplitude() {
    const auto start = std::chrono::steady_clock::now();
    Rng rng(20260101);
    double worst = 0.0;
    int forests = 0;
    for (std::uint64_t seed = 0; forests < 200; ++seed) {
        const int n = 1 << uniform_index(rng, 4);
        const int h = 1 + static_cast<int>(uniform_index(rng, 3));
        Schema schema;
        const auto d = 1 + uniform_index(rng, 4);
        for (std::size_t a = 0; a < d; ++a) {
            switch (uniform_index(rng, 3)) {
                case 0: schema.push_back(AttributeSpec::binary()); break;
                case 1: schema.push_back(AttributeSpec::discrete({0, 1, 2, 3})); break;
                default: schema.push_back(AttributeSpec::real()); break;
            }
        }
        const auto forest = generate_random_forest({n, h, schema, -5.0, 5.0}, derive_seed(seed, 1));
        const auto x = random_input(schema, rng);
        if (!(forest.y_max() > forest.y_min())) continue;
        const auto c = compile_forest_op(forest, x);
        const double p = measure_probability(prepare_state(c), c.layout.result, 1);
        worst = std::max(worst, std::abs(p - beta_classical(forest, x)));
        ++forests;
    }
    const double secs = elapsed(start);
    return {worst <= tol::kProbability && secs < 60.0,
            fmt("%d forests, max |P(phi=1) - beta| = %.3g (tol 1e-9), %.2f s (limit 60 s)", forests, worst, secs)};
}

Outcome single_run_bound() {
    const auto& p = reference_runs();
    const double bound = 2.0 * std::numbers::pi * std::sqrt(p.beta * (1.0 - p.beta)) / 32.0 +
                         std::numbers::pi * std::numbers::pi / 1024.0;
    int ok = 0;
    for (const auto& r : p.runs) ok += std::abs(r.beta_estimate - p.beta) <= bound;
    const double rate = static_cast<double>(ok) / static_cast<double>(p.runs.size());
    return {p.runs.size() >= 500 && rate >= 0.76,
            fmt("beta = %.4f, %zu runs at t = 32, success %.3f (floor 0.76, bound %.5f)", p.beta, p.runs.size(),
                rate, bound)};
}

Outcome reported_pair() {
    const double beta = 0.1596;
    const double estimate = 0.14645;
    const double gap = std::abs(beta - estimate);
    const double at_estimate = error_bound(estimate, 32);
    const bool reported = gap <= 0.0623;
    return {gap <= at_estimate && reported,
            fmt("|0.1596 - 0.14645| = %.5f <= bound(0.14645, 32) = %.5f; <= reported 0.0623: %s", gap,
                at_estimate, reported ? "yes" : "no")};
}

Outcome boosted_failure_rate() {
    const int r = repetitions_for_delta(0.1);
    struct Instance {
        std::string name;
        RandomForest forest;
        InputObject x;
    };
    const Predicate p{PredicateKind::Greater, 1, 0.5};
    std::vector<Instance> instances;
    instances.push_back({"reference", oracle::reference_forest(), oracle::reference_input()});
    instances.push_back({"beta=0.3",
                         RandomForest({DecisionTree(1, {p}, {10.0, 0.0}), DecisionTree(1, {p}, {10.0, 6.0})},
                                      {AttributeSpec::real()}),
                         {{0.9}}});
    {
        const Schema schema{AttributeSpec::real(), AttributeSpec::binary()};
        instances.push_back({"n=4 h=3", generate_random_forest({4, 3, schema, 0.0, 100.0}, 404), {{0.37, 1.0}}});
    }

    Outcome out;
    out.detail = fmt("r = %d;", r);
    for (const auto& inst : instances) {
        const double beta = beta_classical(inst.forest, inst.x);
        const auto c = compile_forest_op(inst.forest, inst.x);
        int failures = 0;
        for (std::uint64_t seed = 0; seed < 300; ++seed) {
            QaeConfig cfg;
            cfg.t = 32;
            cfg.delta = 0.1;
            cfg.seed = seed;
            const auto e = estimate_with_boosting(c, cfg);
            failures += std::abs(e.beta_estimate - beta) > error_bound(beta, 32);
        }
        const double rate = failures / 300.0;
        out.pass = out.pass && rate <= 0.1;
        out.detail += fmt(" %s (beta %.4f) failure %.3f;", inst.name.c_str(), beta, rate);
    }
    out.pass = out.pass && r == 29;
    out.detail += " limit 0.1";
    return out;
}

Outcome r_reconstruction() {
    const auto& p = reference_runs();
    const double bound = error_bound(p.beta, 32);
    int checked = 0;
    int violations = 0;
    std::vector<double> relative;
    for (const auto& r : p.runs) {
        relative.push_back(std::abs(*r.R_estimate - p.R) / std::abs(p.R));
        if (std::abs(r.beta_estimate - p.beta) <= bound) {
            ++checked;
            violations += std::abs(*r.R_estimate - p.R) > (p.y_max - p.y_min) * bound + tol::kRelative * p.y_max;
        }
    }
    std::sort(relative.begin(), relative.end());
    const std::size_t mid = relative.size() / 2;
    const double med = relative.size() % 2 ? relative[mid] : 0.5 * (relative[mid - 1] + relative[mid]);
    return {violations == 0 && med <= 0.05,
            fmt("%d successful runs, %d R bound violations; median relative R error %.4f (limit 0.05)", checked,
                violations, med)};
}

Outcome simulator_suite() {
    Rng rng(6);
    double dense = 0.0;
    for (int n = 3; n <= 6; ++n) {
        for (int trial = 0; trial < 200; ++trial) {
            const auto g = oracle::random_gate(n, rng);
            const auto v = oracle::random_state(n, rng);
            auto s = StateVector::from_amplitudes(v);
            s.apply(g);
            dense = std::max(dense, oracle::max_abs_diff(s.amplitudes(), gate_matrix(g, n) * std::span<const Complex>(v)));
        }
    }
    for (int n = 2; n <= 6; ++n) {
        for (int a = 0; a < n; ++a) {
            for (int b = 0; b < n; ++b) {
                if (a == b) continue;
                for (const auto& g : {gates::cnot(a, b), gates::swap(a, b), gates::h(a), gates::x(b)}) {
                    const auto v = oracle::random_state(n, rng);
                    auto s = StateVector::from_amplitudes(v);
                    s.apply(g);
                    dense = std::max(dense,
                                     oracle::max_abs_diff(s.amplitudes(), gate_matrix(g, n) * std::span<const Complex>(v)));
                }
            }
        }
    }

    bool swap_exact = true;
    for (int n = 2; n <= 5; ++n) {
        for (int a = 0; a < n; ++a) {
            for (int b = a + 1; b < n; ++b) {
                swap_exact = swap_exact &&
                             circuit_matrix(swap_as_cnots(a, b), n).max_abs_diff(gate_matrix(gates::swap(a, b), n)) == 0.0;
            }
        }
    }

    double roundtrip = 0.0;
    double reflections = 0.0;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const Schema schema{AttributeSpec::real(), AttributeSpec::binary()};
        const auto forest = generate_random_forest({1 << (seed % 3), 1 + static_cast<int>(seed % 3), schema, 0.0, 1.0}, seed);
        const auto c = compile_forest_op(forest, random_input(schema, rng));
        const auto v = oracle::random_state(c.num_qubits(), rng);
        auto s = StateVector::from_amplitudes(v);
        s.apply(c.gates);
        s.apply(compile_inverse(c).gates);
        roundtrip = std::max(roundtrip, oracle::max_abs_diff(s.amplitudes(), v));
        for (const auto& ops : {build_D(c), build_V(c.layout)}) {
            auto t = StateVector::from_amplitudes(v);
            t.apply(ops);
            t.apply(ops);
            reflections = std::max(reflections, oracle::max_abs_diff(t.amplitudes(), v));
        }
    }

    auto s = StateVector::from_amplitudes(oracle::random_state(6, rng));
    for (int k = 0; k < 10000; ++k) s.apply(oracle::random_gate(6, rng));
    const double drift = std::abs(s.norm() - 1.0);

    const double limit = tol::kState;
    return {dense <= limit && swap_exact && roundtrip <= limit && reflections <= limit && drift <= limit,
            fmt("dense %.2g, SWAP=3 CNOT %s, U^-1 U %.2g, D^2/V^2 %.2g, norm drift %.2g (tol 1e-10)", dense,
                swap_exact ? "exact" : "inexact", roundtrip, reflections, drift)};
}

Outcome query_scaling() {
    const Schema schema{AttributeSpec::real()};
    auto queries = [&](int h, int t) {
        const auto forest = generate_random_forest({2, h, schema, 0.0, 1.0}, 7);
        QaeConfig cfg;
        cfg.t = t;
        return static_cast<double>(query_count(estimate_forest(forest, {{0.5}}, cfg)));
    };
    Outcome out;
    for (int t : {8, 16, 32}) {
        const double ratio = queries(2, 2 * t) / queries(2, t);
        out.pass = out.pass && ratio >= 1.8 && ratio <= 2.2;
        out.detail += fmt("t %d->%d ratio %.3f; ", t, 2 * t, ratio);
    }
    const double per_level = queries(1, 32);
    for (int h = 2; h <= 4; ++h) {
        const double ratio = queries(h, 32) / per_level;
        out.pass = out.pass && std::abs(ratio - h) < 1e-12;
        out.detail += fmt("h=%d/h=1 %.3f; ", h, ratio);
    }
    out.detail += "window [1.8, 2.2]";
    return out;
}

}  // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
        {"exact amplitude oracle", exact_amplitude},
        {"single-run error bound", single_run_bound},
        {"reported estimate pair", reported_pair},
        {"boosted failure rate", boosted_failure_rate},
        {"R reconstruction", r_reconstruction},
        {"simulator correctness", simulator_suite},
        {"query scaling", query_scaling},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failed += !o.pass;
        std::printf("[%s] criterion %zu %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first,
                    o.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%zu/%zu criteria passed\n", criteria.size() - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
