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

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qrf {

struct PredictionPair {
    double truth;
    double forecast;
};

enum class Metric { MAE, MSE, RMSE, MAPE, wMAPE, sMAPE };

inline constexpr std::array<Metric, 6> kAllMetrics = {Metric::MAE,  Metric::MSE,   Metric::RMSE,
                                                      Metric::MAPE, Metric::wMAPE, Metric::sMAPE};

std::string_view metric_name(Metric metric);
/// Case-insensitive. Returns nullopt for unknown names.
std::optional<Metric> parse_metric(std::string_view name);

/// Throws InvalidInput on an empty list and DegenerateDenominator when the
/// metric divides by zero (MAPE: some truth is 0; wMAPE: every truth is 0;
/// sMAPE: some |truth| + |forecast| is 0).
double error_metric(std::span<const PredictionPair> pairs, Metric metric);

/// Two numeric columns (truth, forecast) per line, separated by whitespace
/// or a comma. Blank lines and lines starting with '#' are skipped.
std::vector<PredictionPair> parse_pairs(std::string_view text);

}  // namespace qrf
