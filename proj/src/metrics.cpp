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

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>

#include "qrf/errors.hpp"

namespace qrf {

std::string_view metric_name(Metric metric) {
    switch (metric) {
        case Metric::MAE: return "MAE";
        case Metric::MSE: return "MSE";
        case Metric::RMSE: return "RMSE";
        case Metric::MAPE: return "MAPE";
        case Metric::wMAPE: return "wMAPE";
        case Metric::sMAPE: return "sMAPE";
    }
    return "?";
}

std::optional<Metric> parse_metric(std::string_view name) {
    auto lower = [](std::string_view s) {
        std::string out(s);
        std::transform(out.begin(), out.end(), out.begin(),
                       [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
        return out;
    };
    const auto wanted = lower(name);
    for (auto m : kAllMetrics) {
        if (lower(metric_name(m)) == wanted) {
            return m;
        }
    }
    return std::nullopt;
}

double error_metric(std::span<const PredictionPair> pairs, Metric metric) {
    if (pairs.empty()) {
        throw InvalidInput("error metrics need at least one pair");
    }
    const auto m = static_cast<double>(pairs.size());
    double sum = 0.0;
    switch (metric) {
        case Metric::MAE:
            for (const auto& p : pairs) sum += std::abs(p.truth - p.forecast);
            return sum / m;
        case Metric::MSE:
        case Metric::RMSE:
            for (const auto& p : pairs) sum += (p.truth - p.forecast) * (p.truth - p.forecast);
            return metric == Metric::MSE ? sum / m : std::sqrt(sum / m);
        case Metric::MAPE:
            for (const auto& p : pairs) {
                if (p.truth == 0.0) {
                    throw DegenerateDenominator("MAPE is undefined when a true value is 0");
                }
                sum += std::abs(p.truth - p.forecast) / std::abs(p.truth);
            }
            return sum / m;
        case Metric::wMAPE: {
            double denom = 0.0;
            for (const auto& p : pairs) {
                sum += std::abs(p.truth - p.forecast);
                denom += std::abs(p.truth);
            }
            if (denom == 0.0) {
                throw DegenerateDenominator("wMAPE is undefined when every true value is 0");
            }
            return sum / denom;
        }
        case Metric::sMAPE:
            for (const auto& p : pairs) {
                const double denom = std::abs(p.truth) + std::abs(p.forecast);
                if (denom == 0.0) {
                    throw DegenerateDenominator("sMAPE is undefined for a (0, 0) pair");
                }
                sum += std::abs(p.truth - p.forecast) / denom;
            }
            return sum / m;
    }
    throw InvalidInput("unknown metric");
}

std::vector<PredictionPair> parse_pairs(std::string_view text) {
    std::vector<PredictionPair> pairs;
    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::replace(line.begin(), line.end(), ',', ' ');
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') {
            continue;
        }
        std::istringstream fields(line);
        PredictionPair p{};
        std::string extra;
        if (!(fields >> p.truth >> p.forecast) || (fields >> extra)) {
            throw ParseError("line " + std::to_string(line_no), "expected two numbers");
        }
        if (!std::isfinite(p.truth) || !std::isfinite(p.forecast)) {
            throw ParseError("line " + std::to_string(line_no), "values must be finite");
        }
        pairs.push_back(p);
    }
    return pairs;
}

}  // namespace qrf
