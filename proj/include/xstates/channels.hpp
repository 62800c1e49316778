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

#include <array>
#include <cstdint>
#include <vector>

#include "xstates/entanglement.hpp"
#include "xstates/xstate.hpp"

namespace xstates {

/// Coefficients of one Kraus operator in the subalgebra span:
/// K = c[0] I + c[1] X1 + ... + c[7] X7.
using KrausCoefficients = std::array<cplx, 8>;

/// A channel whose Kraus operators live in the span of {I, X1..X7} of a
/// named subalgebra. Keeping the coefficient form makes "expressible in
/// terms of the set" a structural property instead of a numerical check.
struct KrausChannel {
  PhasedPauli center;                        // names the subalgebra
  std::vector<KrausCoefficients> kraus;
};

inline constexpr double kCompletenessTol = 1e-10;

/// Matrix realization of a coefficient vector over subalgebra s.
ComplexMatrix4 kraus_matrix(const Subalgebra& s, const KrausCoefficients& c);

/// Project a matrix onto the subalgebra span: c0 = tr(K)/4, ci = tr(K Xi)/4.
/// Exact for matrices in the span (the basis is trace orthogonal).
KrausCoefficients coefficients_of(const Subalgebra& s, const ComplexMatrix4& k);

/// max |sum K†K - I|.
double completeness_residual(const KrausChannel& ch);

/// sum_K K rho K†. Throws IncompleteChannelError carrying the residual when
/// the Kraus set misses completeness by more than kCompletenessTol. X-states
/// of the channel's subalgebra stay X-states.
DensityMatrix4 apply_channel(const DensityMatrix4& rho, const KrausChannel& ch);

/// exp(-i theta X_i) = cos(theta) I - i sin(theta) X_i, exact since
/// X_i^2 = I. Unitary for every theta.
ComplexMatrix4 member_unitary(const Subalgebra& s, int i, double theta);

/// The map conjugation by exp(-i theta X_i) induces on g: the commuting-line
/// coefficients {1, i, pair(i)} are fixed and each coupled plane (a, b) with
/// X_i X_a = +i X_b rotates by 2 theta: (g_a, g_b) -> R(2 theta) (g_a, g_b).
struct RotationAction {
  int member = 0;
  double theta = 0.0;
  double rotation_angle = 0.0;         // 2 theta
  std::vector<int> fixed;              // ascending subalgebra indices
  struct Plane {
    int a = 0, b = 0;                  // oriented: X_i X_a = +i X_b
  };
  std::vector<Plane> planes;           // empty for i = 1
};

RotationAction rotation_action(const Subalgebra& s, int i, double theta);

/// One recorded step of a channel evolution.
struct TraceRow {
  int step = 0;
  GVector g;
  double concurrence = 0.0;  // Wootters oracle value
};

/// Applies the channel `steps` times, recording the g-vector and oracle
/// concurrence before the first application and after each one
/// (steps + 1 rows).
std::vector<TraceRow> evolve_trace(const DensityMatrix4& rho0,
                                   const KrausChannel& ch, int steps);

/// Two-operator random channel in the subalgebra span: coefficients from a
/// seeded normal sampler, then completeness enforced by right-multiplying
/// with (sum K†K)^(-1/2).
KrausChannel make_random_channel(const Subalgebra& s, std::uint64_t seed,
                                 int n_kraus = 2);

}  // namespace xstates
