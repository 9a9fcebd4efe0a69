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

#include "qrf/metrics.hpp"

#include <gtest/gtest.h>

#include <cmath>

#include "qrf/errors.hpp"
#include "qrf/rng.hpp"

using namespace qrf;

TEST(ErrorMetric, PerfectForecastsScoreZero) {
    const std::vector<PredictionPair> pairs{{1.0, 1.0}, {-2.5, -2.5}, {7.0, 7.0}};
    for (auto m : kAllMetrics) EXPECT_EQ(error_metric(pairs, m), 0.0) << metric_name(m);
}

TEST(ErrorMetric, SinglePairByHand) {
    const std::vector<PredictionPair> pairs{{2.0, 1.0}};
    EXPECT_DOUBLE_EQ(error_metric(pairs, Metric::MAE), 1.0);
    EXPECT_DOUBLE_EQ(error_metric(pairs, Metric::MSE), 1.0);
    EXPECT_DOUBLE_EQ(error_metric(pairs, Metric::RMSE), 1.0);
    EXPECT_DOUBLE_EQ(error_metric(pairs, Metric::MAPE), 0.5);
    EXPECT_DOUBLE_EQ(error_metric(pairs, Metric::wMAPE), 0.5);
    EXPECT_DOUBLE_EQ(error_metric(pairs, Metric::sMAPE), 1.0 / 3.0);
}

TEST(ErrorMetric, WeightedDiffersFromPlainMape) {
    // MAPE = (1/2)(1/1 + 1/4) = 0.625, wMAPE = 2/5.
    const std::vector<PredictionPair> pairs{{1.0, 2.0}, {4.0, 3.0}};
    EXPECT_DOUBLE_EQ(error_metric(pairs, Metric::MAPE), 0.625);
    EXPECT_DOUBLE_EQ(error_metric(pairs, Metric::wMAPE), 0.4);
}

TEST(ErrorMetric, DegenerateDenominators) {
    const std::vector<PredictionPair> zero_truth{{0.0, 1.0}, {2.0, 2.0}};
    EXPECT_THROW(error_metric(zero_truth, Metric::MAPE), DegenerateDenominator);
    EXPECT_NO_THROW(error_metric(zero_truth, Metric::wMAPE));
    const std::vector<PredictionPair> all_zero{{0.0, 1.0}, {0.0, 0.0}};
    EXPECT_THROW(error_metric(all_zero, Metric::wMAPE), DegenerateDenominator);
    EXPECT_THROW(error_metric(all_zero, Metric::sMAPE), DegenerateDenominator);
    EXPECT_THROW(error_metric({}, Metric::MAE), InvalidInput);
}

TEST(ErrorMetric, RandomizedProperties) {
    Rng rng(99);
    for (int trial = 0; trial < 500; ++trial) {
        std::vector<PredictionPair> pairs(1 + uniform_index(rng, 20));
        for (auto& p : pairs) {
            p.truth = uniform_real(rng, 0.1, 100.0) * (uniform01(rng) < 0.5 ? -1 : 1);
            p.forecast = uniform_real(rng, -100.0, 100.0);
        }
        const double mae = error_metric(pairs, Metric::MAE);
        const double mse = error_metric(pairs, Metric::MSE);
        const double rmse = error_metric(pairs, Metric::RMSE);
        ASSERT_LE(mae, rmse * (1 + 1e-12));
        ASSERT_NEAR(mse, rmse * rmse, 1e-9 * std::max(1.0, mse));
        for (auto m : kAllMetrics) ASSERT_GE(error_metric(pairs, m), 0.0);
        ASSERT_LE(error_metric(pairs, Metric::sMAPE), 1.0);
    }
}

TEST(ParseMetric, CaseInsensitive) {
    EXPECT_EQ(parse_metric("wmape"), Metric::wMAPE);
    EXPECT_EQ(parse_metric("RMSE"), Metric::RMSE);
    EXPECT_FALSE(parse_metric("r2").has_value());
}

TEST(ParsePairs, ColumnsCommentsAndErrors) {
    const auto pairs = parse_pairs("# truth forecast\n2 1\n\n3.5,4\n  -1\t-2\n");
    ASSERT_EQ(pairs.size(), 3u);
    EXPECT_EQ(pairs[1].truth, 3.5);
    EXPECT_EQ(pairs[2].forecast, -2.0);
    EXPECT_THROW(parse_pairs("1 2\n3\n"), ParseError);
    EXPECT_THROW(parse_pairs("1 2 3\n"), ParseError);
    try {
        parse_pairs("1 2\nx y\n");
    } catch (const ParseError& e) {
        EXPECT_EQ(e.where(), "line 2");
    }
}
