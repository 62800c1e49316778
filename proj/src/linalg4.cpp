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

#include "xstates/linalg4.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

namespace xstates {

ComplexMatrix4 ComplexMatrix4::identity() {
  ComplexMatrix4 m;
  for (int i = 0; i < 4; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix4 ComplexMatrix4::diagonal(cplx d0, cplx d1, cplx d2, cplx d3) {
  ComplexMatrix4 m;
  m(0, 0) = d0;
  m(1, 1) = d1;
  m(2, 2) = d2;
  m(3, 3) = d3;
  return m;
}

ComplexMatrix4 mul(const ComplexMatrix4& a, const ComplexMatrix4& b) {
  ComplexMatrix4 r;
  for (int i = 0; i < 4; ++i) {
    for (int k = 0; k < 4; ++k) {
      const cplx aik = a(i, k);
      if (aik == cplx{}) continue;
      for (int j = 0; j < 4; ++j) r(i, j) += aik * b(k, j);
    }
  }
  return r;
}

ComplexMatrix4 add(const ComplexMatrix4& a, const ComplexMatrix4& b) {
  ComplexMatrix4 r;
  for (int i = 0; i < 16; ++i) r.e[i] = a.e[i] + b.e[i];
  return r;
}

ComplexMatrix4 sub(const ComplexMatrix4& a, const ComplexMatrix4& b) {
  ComplexMatrix4 r;
  for (int i = 0; i < 16; ++i) r.e[i] = a.e[i] - b.e[i];
  return r;
}

ComplexMatrix4 scale(cplx s, const ComplexMatrix4& m) {
  ComplexMatrix4 r;
  for (int i = 0; i < 16; ++i) r.e[i] = s * m.e[i];
  return r;
}

ComplexMatrix4 adjoint(const ComplexMatrix4& m) {
  ComplexMatrix4 r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r(i, j) = std::conj(m(j, i));
  return r;
}

cplx trace(const ComplexMatrix4& m) {
  return m(0, 0) + m(1, 1) + m(2, 2) + m(3, 3);
}

double max_abs(const ComplexMatrix4& m) {
  double r = 0.0;
  for (const cplx& v : m.e) r = std::max(r, std::abs(v));
  return r;
}

double max_abs_diff(const ComplexMatrix4& a, const ComplexMatrix4& b) {
  double r = 0.0;
  for (int i = 0; i < 16; ++i) r = std::max(r, std::abs(a.e[i] - b.e[i]));
  return r;
}

double hermitian_deviation(const ComplexMatrix4& m) {
  double r = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      r = std::max(r, std::abs(m(i, j) - std::conj(m(j, i))));
  return r;
}

bool all_finite(const ComplexMatrix4& m) {
  for (const cplx& v : m.e)
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
  return true;
}

namespace {

constexpr double kOffDiagonalTarget = 1e-14;
constexpr int kMaxSweeps = 50;

double max_off_diagonal(const ComplexMatrix4& m) {
  double r = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (i != j) r = std::max(r, std::abs(m(i, j)));
  return r;
}

// One complex Jacobi rotation annihilating a(p, q). The unitary is the
// identity outside rows/columns p, q with
//   U(p,p) = c, U(p,q) = s, U(q,p) = -conj(s), U(q,q) = c,
// c real, |c|^2 + |s|^2 = 1. Applies a <- U† a U and v <- v U in place.
void rotate(ComplexMatrix4& a, ComplexMatrix4& v, int p, int q) {
  const cplx apq = a(p, q);
  const double r = std::abs(apq);
  if (r < 1e-300) return;

  const double delta = (a(p, p).real() - a(q, q).real()) / (2.0 * r);
  // Smaller root of t^2 - 2 delta t - 1 = 0, for stability.
  double t;
  if (std::abs(delta) > 1e10) {
    t = -1.0 / (2.0 * delta);
  } else {
    t = (delta >= 0.0 ? -1.0 : 1.0) / (std::abs(delta) + std::hypot(delta, 1.0));
  }
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const cplx s = (t * c) * (apq / r);

  for (int i = 0; i < 4; ++i) {  // columns: b = a U
    const cplx aip = a(i, p), aiq = a(i, q);
    a(i, p) = c * aip - std::conj(s) * aiq;
    a(i, q) = s * aip + c * aiq;
  }
  for (int j = 0; j < 4; ++j) {  // rows: a = U† b
    const cplx apj = a(p, j), aqj = a(q, j);
    a(p, j) = c * apj - s * aqj;
    a(q, j) = std::conj(s) * apj + c * aqj;
  }
  for (int i = 0; i < 4; ++i) {
    const cplx vip = v(i, p), viq = v(i, q);
    v(i, p) = c * vip - std::conj(s) * viq;
    v(i, q) = s * vip + c * viq;
  }
}

}  // namespace

EigenSystem hermitian_eigs(const ComplexMatrix4& m) {
  const double dev = hermitian_deviation(m);
  if (dev > kHermitianTol) {
    throw NotHermitianError(
        fmt::format("hermitian_eigs: input deviates from Hermiticity by {:.3e} "
                    "(tolerance {:.1e})",
                    dev, kHermitianTol),
        dev);
  }

  ComplexMatrix4 a;  // exact Hermitian part of the input
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      a(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));

  ComplexMatrix4 v = ComplexMatrix4::identity();
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    if (max_off_diagonal(a) < kOffDiagonalTarget) break;
    for (int p = 0; p < 4; ++p)
      for (int q = p + 1; q < 4; ++q) rotate(a, v, p, q);
  }

  std::array<int, 4> order{0, 1, 2, 3};
  std::sort(order.begin(), order.end(),
            [&](int i, int j) { return a(i, i).real() < a(j, j).real(); });

  EigenSystem es;
  for (int k = 0; k < 4; ++k) {
    es.values[k] = a(order[k], order[k]).real();
    for (int i = 0; i < 4; ++i) es.vectors(i, k) = v(i, order[k]);
  }
  return es;
}

ComplexMatrix4 psd_sqrt(const ComplexMatrix4& m) {
  const EigenSystem es = hermitian_eigs(m);
  std::array<double, 4> roots;
  for (int k = 0; k < 4; ++k) {
    double lambda = es.values[k];
    if (lambda < -kPsdClampWindow) {
      throw NotPsdError(
          fmt::format("psd_sqrt: eigenvalue {:.6e} below the PSD clamp window "
                      "-{:.1e}",
                      lambda, kPsdClampWindow),
          lambda);
    }
    roots[k] = std::sqrt(std::max(lambda, 0.0));
  }

  // V sqrt(D) V†, then re-symmetrize to kill rounding noise.
  ComplexMatrix4 r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      cplx sum = 0.0;
      for (int k = 0; k < 4; ++k)
        sum += es.vectors(i, k) * roots[k] * std::conj(es.vectors(j, k));
      r(i, j) = sum;
    }
  for (int i = 0; i < 4; ++i)
    for (int j = i; j < 4; ++j) {
      const cplx h = 0.5 * (r(i, j) + std::conj(r(j, i)));
      r(i, j) = h;
      r(j, i) = std::conj(h);
    }
  return r;
}

}  // namespace xstates
