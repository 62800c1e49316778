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
#include <complex>

#include "xstates/errors.hpp"

namespace xstates {

using cplx = std::complex<double>;

// Tolerances shared across the library. Declared once here so every PSD and
// Hermiticity check agrees on the same windows.
inline constexpr double kHermitianTol = 1e-12;   // max |m - m†| entry
inline constexpr double kTraceTol = 1e-12;       // |tr(rho) - 1|
inline constexpr double kPsdClampWindow = 1e-10; // eigenvalues in [-window, 0] -> 0
inline constexpr double kPatternTol = 1e-12;     // default X-pattern tolerance

/// Dense 4x4 complex matrix, row-major.
struct ComplexMatrix4 {
  std::array<cplx, 16> e{};

  cplx& operator()(int r, int c) { return e[4 * r + c]; }
  const cplx& operator()(int r, int c) const { return e[4 * r + c]; }

  static ComplexMatrix4 zero() { return ComplexMatrix4{}; }
  static ComplexMatrix4 identity();
  static ComplexMatrix4 diagonal(cplx d0, cplx d1, cplx d2, cplx d3);

  bool operator==(const ComplexMatrix4&) const = default;
};

ComplexMatrix4 mul(const ComplexMatrix4& a, const ComplexMatrix4& b);
ComplexMatrix4 add(const ComplexMatrix4& a, const ComplexMatrix4& b);
ComplexMatrix4 sub(const ComplexMatrix4& a, const ComplexMatrix4& b);
ComplexMatrix4 scale(cplx s, const ComplexMatrix4& m);
ComplexMatrix4 adjoint(const ComplexMatrix4& m);
cplx trace(const ComplexMatrix4& m);

inline ComplexMatrix4 operator*(const ComplexMatrix4& a, const ComplexMatrix4& b) { return mul(a, b); }
inline ComplexMatrix4 operator+(const ComplexMatrix4& a, const ComplexMatrix4& b) { return add(a, b); }
inline ComplexMatrix4 operator-(const ComplexMatrix4& a, const ComplexMatrix4& b) { return sub(a, b); }
inline ComplexMatrix4 operator*(cplx s, const ComplexMatrix4& m) { return scale(s, m); }

/// Largest entry magnitude.
double max_abs(const ComplexMatrix4& m);
/// Largest entrywise deviation between two matrices.
double max_abs_diff(const ComplexMatrix4& a, const ComplexMatrix4& b);
/// Largest entry of |m - m†|.
double hermitian_deviation(const ComplexMatrix4& m);
/// True when no entry is NaN or infinite.
bool all_finite(const ComplexMatrix4& m);

struct EigenSystem {
  std::array<double, 4> values;  // ascending
  ComplexMatrix4 vectors;        // columns are the matching eigenvectors
};

/// Eigendecomposition of a Hermitian matrix by cyclic Jacobi with complex
/// rotations. Sweeps until the largest off-diagonal magnitude drops below
/// 1e-14 (at most 50 sweeps).
///
/// Throws NotHermitianError when max |m - m†| exceeds kHermitianTol.
EigenSystem hermitian_eigs(const ComplexMatrix4& m);

/// Hermitian PSD square root via eigendecomposition. Eigenvalues inside
/// [-kPsdClampWindow, 0] are clamped to zero; anything below the window
/// throws NotPsdError carrying the offending eigenvalue.
ComplexMatrix4 psd_sqrt(const ComplexMatrix4& m);

}  // namespace xstates
