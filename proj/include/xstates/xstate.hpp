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
#include <optional>
#include <string>
#include <vector>

#include "xstates/subalgebra.hpp"

namespace xstates {

/// A two-qubit state container. Construction does not validate; validate()
/// checks Hermiticity, unit trace and positivity.
struct DensityMatrix4 {
  ComplexMatrix4 rho;
};

/// Seven real coefficients g1..g7 of a state relative to a subalgebra,
/// g_i = tr(rho X_i). rho = (I + sum_i g_i X_i)/4 recovers the state when
/// the state is an X-state of that subalgebra.
struct GVector {
  std::array<double, 7> g{};   // g[0] = g1 ... g[6] = g7
  PhasedPauli center;          // names the subalgebra

  double operator[](int i) const { return g[i - 1]; }  // 1-based, like X_i
};

/// Trace coefficient map g_i = tr(rho X_i). Each trace must be real to
/// 1e-8 (Hermitian rho makes it so); the imaginary residue is checked and
/// discarded. Throws InvalidStateError past that tolerance.
GVector g_from_rho(const DensityMatrix4& rho, const Subalgebra& s);

/// rho = (I + sum_i g_i X_i)/4. Hermitian with unit trace by construction;
/// positivity is the caller's concern (see validate).
DensityMatrix4 rho_from_g(const GVector& g, const Subalgebra& s);

/// True iff max |rho - X1 rho X1†| <= tol: rho commutes with the center.
/// For center ZZ this is exactly the eight-zero X pattern; for center ZI it
/// is block diagonality.
bool is_x_pattern(const DensityMatrix4& rho, const Subalgebra& s,
                  double tol = kPatternTol);

/// (rho + X1 rho X1†)/2: idempotent, trace preserving, PSD preserving, and
/// the identity on inputs already in the pattern.
DensityMatrix4 project_to_x(const DensityMatrix4& rho, const Subalgebra& s);

/// X_i rho X_i† for i in 1..7. On X-states of s this fixes g_1, g_i and
/// g_pair(i) and negates the other four coefficients.
DensityMatrix4 conjugate_by_member(const DensityMatrix4& rho,
                                   const Subalgebra& s, int i);

/// Wootters spin flip: (sigma_y tau_y) rho* (sigma_y tau_y). On standard-set
/// X-states this negates exactly g3 and g6.
DensityMatrix4 spin_flip(const DensityMatrix4& rho);

struct ValidationReport {
  double hermiticity_deviation = 0.0;
  double trace_deviation = 0.0;
  bool psd_evaluated = false;
  double min_eigenvalue = 0.0;
  bool x_pattern = false;                   // standard eight-zero pattern
  std::optional<std::string> failing_block; // "1-4" or "2-3" when named
  std::vector<std::string> failures;        // one line per failed check

  bool ok() const { return failures.empty(); }
  std::string summary() const;
};

/// Checks Hermiticity (1e-12), unit trace (1e-12) and PSD (eigenvalues >=
/// -1e-10). For matrices in the standard X pattern the 2x2 block conditions
/// rho11 rho44 >= |rho14|^2 and rho22 rho33 >= |rho23|^2 are reported with
/// the failing block named.
ValidationReport validate(const DensityMatrix4& rho);

/// Throws InvalidStateError with the report summary when validation fails.
void ensure_valid(const DensityMatrix4& rho, const char* context);

enum class BellState { PhiPlus, PhiMinus, PsiPlus, PsiMinus };

/// Bell projectors in the standard basis.
DensityMatrix4 make_bell(BellState k);

/// p |Psi-><Psi-| + (1-p) I/4 for p in [0, 1].
DensityMatrix4 make_werner(double p);

/// Random X-state of the subalgebra, valid by construction: the diagonal of
/// the two center-eigenspace blocks comes from a flat simplex sample and
/// each block coherence magnitude is uniform in [0, sqrt of the diagonal
/// product] with a uniform phase.
DensityMatrix4 make_random_x(const Subalgebra& s, std::uint64_t seed);

}  // namespace xstates
