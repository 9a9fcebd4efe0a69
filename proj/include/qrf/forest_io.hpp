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

// Forest documents are JSON:
//
//   {
//     "n": 2,
//     "h": 2,
//     "schema": [ {"kind": "discrete", "categories": [0.0, 1.0]}, {"kind": "real"} ],
//     "trees": [
//       { "nodes":  { "1": {"kind": "greater", "attr": 2, "threshold": 0.5}, ... },
//         "leaves": { "4": 3.0, ... } },
//       ...
//     ]
//   }
//
// Map keys are decimal heap indices. `attr` is 1-based. Predicate kinds are
// "greater" (x > threshold) and "equals" (x == threshold). Trees may be
// ragged; shorter branches are padded to height h on load. Unknown fields
// are rejected. save_forest() always writes the padded form with keys in
// the order above and indices ascending, so its output is canonical.

#include <string>
#include <string_view>
#include <vector>

#include "qrf/forest.hpp"

namespace qrf {

/// Throws ParseError with a JSON-path style location.
RandomForest load_forest(std::string_view text);
std::string save_forest(const RandomForest& forest);

RandomForest load_forest_file(const std::string& path);
void save_forest_file(const RandomForest& forest, const std::string& path);

/// Comma-separated attribute values, e.g. "0,1,0.25".
InputObject parse_input_csv(std::string_view text);

/// Reads a whole file. Throws std::runtime_error on I/O failure.
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view text);

}  // namespace qrf
