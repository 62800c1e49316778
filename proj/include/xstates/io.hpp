// Copyright 2026 The xstates authors
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

#include <optional>
#include <string>
#include <string_view>

#include "xstates/channels.hpp"
#include "xstates/entanglement.hpp"
#include "xstates/xstate.hpp"

namespace xstates {

// State JSON: {"basis": "std", "rho": 4x4 array of [re, im] pairs
// (row-major), optional "g": {"center": "<pauli text>", "values": [g1..g7]}}.
// Either block may be omitted (at least one must be present); when both are
// given they must agree within 1e-9 or loading fails. A bare g object
// {"center", "values"} is also accepted and reconstructed via rho_from_g.

inline constexpr double kStateAgreementTol = 1e-9;

struct LoadedState {
  DensityMatrix4 rho;
  std::optional<GVector> g;
};

std::string write_state_json(const DensityMatrix4& rho,
                             const std::optional<GVector>& g = std::nullopt);
LoadedState read_state_json(std::string_view text);

std::string write_gvector_json(const GVector& g);
GVector read_gvector_json(std::string_view text);

// Channel JSON: {"center": "<pauli text>", "kraus": [[c0..c7 as [re, im]
// pairs], ...]} where c0 multiplies the identity and c1..c7 multiply X1..X7.
std::string write_channel_json(const KrausChannel& ch);
KrausChannel read_channel_json(std::string_view text);

/// Method-comparison report with per-method spectra, concurrences and
/// deviations.
std::string comparison_to_json(const MethodComparison& cmp);

/// Validation report as a JSON object (ok flag plus measured violations).
std::string validation_to_json(const ValidationReport& rep);

/// Numeric cell for CSV output: 17 significant digits, lowercase scientific,
/// locale independent.
std::string csv_number(double v);

/// Header + rows for an evolution trace: step, g1..g7, concurrence.
std::string trace_to_csv(const std::vector<TraceRow>& rows);

}  // namespace xstates
