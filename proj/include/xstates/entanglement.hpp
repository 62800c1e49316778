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
#include <utility>

#include "xstates/xstate.hpp"

namespace xstates {

/// The four nonnegative square roots of the eigenvalues of rho * rho~,
/// sorted descending.
struct ConcurrenceSpectrum {
  std::array<double, 4> values{};

  double operator[](int i) const { return values[i]; }
};

/// Closed-form spectrum for a standard-set X-state (center ZZ):
///   (1/4) [ sqrt((1 ± g1)^2 - (g3 ± g6)^2) ± sqrt((g2 ± g5)^2 + (g4 ± g7)^2) ]
/// with the inner signs correlated per branch. The radicands equal
/// 16 rho11 rho44 and 16 rho22 rho33; values in [-1e-10, 0) are clamped to 0
/// and anything lower throws InvalidStateError.
ConcurrenceSpectrum spectrum_closed_form(const GVector& g);

/// max(0, s1 - s2 - s3 - s4) of a descending spectrum.
double concurrence_from_spectrum(const ConcurrenceSpectrum& sp);

/// Entrywise closed form for standard X-pattern matrices:
///   C = 2 max(0, |rho14| - sqrt(rho22 rho33), |rho23| - sqrt(rho11 rho44)).
/// Throws PatternError when rho is not in the eight-zero pattern.
double concurrence_entrywise(const DensityMatrix4& rho);

/// Wootters construction for any valid state: rho~ = spin_flip(rho), take
/// the Hermitian eigenvalues of sqrt(rho) rho~ sqrt(rho) (they equal those
/// of rho rho~), return the descending square-root spectrum and the clamped
/// concurrence.
std::pair<double, ConcurrenceSpectrum> concurrence_oracle(
    const DensityMatrix4& rho);

/// All three methods side by side on a standard-set X-state.
struct MethodComparison {
  ConcurrenceSpectrum closed_spectrum;
  ConcurrenceSpectrum oracle_spectrum;
  double closed = 0.0;
  double entrywise = 0.0;
  double oracle = 0.0;
  double max_spectrum_deviation = 0.0;
  double max_concurrence_deviation = 0.0;
};

/// Validates the state, requires the X pattern of s, and runs the three
/// methods. The closed forms are statements about the paper's standard
/// labeling, so s must be the center-ZZ subalgebra.
MethodComparison compare_methods(const DensityMatrix4& rho, const Subalgebra& s);

}  // namespace xstates
