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

namespace qrf::tol {

// Float slack for exact-arithmetic statements.
inline constexpr double kState = 1e-10;        // amplitudes, norms, unitarity
inline constexpr double kProbability = 1e-9;   // marginal probabilities
inline constexpr double kRelative = 1e-12;     // beta -> R round trips

// Dense state vectors above this width are refused.
inline constexpr int kMaxQubits = 24;
// gate_matrix() oracle limit.
inline constexpr int kMaxDenseQubits = 10;

}  // namespace qrf::tol
