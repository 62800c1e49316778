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

#include "xstates/xstate.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "xstates/rng.hpp"

namespace xstates {

namespace {

constexpr double kGImagTol = 1e-8;

cplx trace_product(const ComplexMatrix4& a, const ComplexMatrix4& b) {
  cplx t = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) t += a(i, j) * b(j, i);
  return t;
}

ComplexMatrix4 conjugate_by(const ComplexMatrix4& rho, const ComplexMatrix4& u) {
  return mul(u, mul(rho, adjoint(u)));
}

}  // namespace

GVector g_from_rho(const DensityMatrix4& rho, const Subalgebra& s) {
  GVector g;
  g.center = s.center;
  for (int i = 1; i <= 7; ++i) {
    const cplx t = trace_product(rho.rho, to_matrix(s.element(i)));
    if (std::abs(t.imag()) > kGImagTol) {
      throw InvalidStateError(fmt::format(
          "g_from_rho: tr(rho X{}) has imaginary part {:.3e} for center {}",
          i, t.imag(), format_pauli(s.center)));
    }
    g.g[i - 1] = t.real();
  }
  return g;
}

DensityMatrix4 rho_from_g(const GVector& g, const Subalgebra& s) {
  if (!(g.center == s.center)) {
    throw Error(fmt::format(
        "rho_from_g: g-vector is relative to center {} but subalgebra has {}",
        format_pauli(g.center), format_pauli(s.center)));
  }
  ComplexMatrix4 m = scale(0.25, ComplexMatrix4::identity());
  for (int i = 1; i <= 7; ++i)
    m = add(m, scale(0.25 * g.g[i - 1], to_matrix(s.element(i))));
  return {m};
}

bool is_x_pattern(const DensityMatrix4& rho, const Subalgebra& s, double tol) {
  const ComplexMatrix4 x1 = to_matrix(s.center);
  return max_abs_diff(rho.rho, conjugate_by(rho.rho, x1)) <= tol;
}

DensityMatrix4 project_to_x(const DensityMatrix4& rho, const Subalgebra& s) {
  const ComplexMatrix4 x1 = to_matrix(s.center);
  return {scale(0.5, add(rho.rho, conjugate_by(rho.rho, x1)))};
}

DensityMatrix4 conjugate_by_member(const DensityMatrix4& rho,
                                   const Subalgebra& s, int i) {
  return {conjugate_by(rho.rho, to_matrix(s.element(i)))};
}

DensityMatrix4 spin_flip(const DensityMatrix4& rho) {
  ComplexMatrix4 conj;
  for (int i = 0; i < 16; ++i) conj.e[i] = std::conj(rho.rho.e[i]);
  const ComplexMatrix4 yy = to_matrix({0, Axis::Y, Axis::Y});
  return {conjugate_by(conj, yy)};
}

std::string ValidationReport::summary() const {
  if (failures.empty()) return "valid density matrix";
  std::string out = "invalid density matrix:";
  for (const std::string& f : failures) out += " " + f + ";";
  out.pop_back();
  return out;
}

ValidationReport validate(const DensityMatrix4& rho) {
  ValidationReport rep;
  const ComplexMatrix4& m = rho.rho;

  if (!all_finite(m)) {
    rep.failures.push_back("non-finite entries");
    return rep;
  }

  rep.hermiticity_deviation = hermitian_deviation(m);
  if (rep.hermiticity_deviation > kHermitianTol)
    rep.failures.push_back(fmt::format("Hermiticity deviation {:.3e} > {:.1e}",
                                       rep.hermiticity_deviation, kHermitianTol));

  rep.trace_deviation = std::abs(trace(m) - cplx{1.0, 0.0});
  if (rep.trace_deviation > kTraceTol)
    rep.failures.push_back(fmt::format("trace deviation {:.3e} > {:.1e}",
                                       rep.trace_deviation, kTraceTol));

  if (rep.hermiticity_deviation <= kHermitianTol) {
    const EigenSystem es = hermitian_eigs(m);
    rep.psd_evaluated = true;
    rep.min_eigenvalue = es.values[0];
    if (rep.min_eigenvalue < -kPsdClampWindow)
      rep.failures.push_back(fmt::format("eigenvalue {:.3e} < -{:.1e}",
                                         rep.min_eigenvalue, kPsdClampWindow));
  }

  // Extra diagnostics for matrices in the standard eight-zero pattern: PSD
  // is equivalent to the two 2x2 block conditions, so a violated block can
  // be named.
  double off_pattern = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (i != j && i + j != 3) off_pattern = std::max(off_pattern, std::abs(m(i, j)));
  rep.x_pattern = off_pattern <= kPatternTol;
  if (rep.x_pattern) {
    const double b14 = m(0, 0).real() * m(3, 3).real() - std::norm(m(0, 3));
    const double b23 = m(1, 1).real() * m(2, 2).real() - std::norm(m(1, 2));
    if (b14 < -kPsdClampWindow) {
      rep.failing_block = "1-4";
      rep.failures.push_back(fmt::format(
          "X block 1-4 violates rho11*rho44 >= |rho14|^2 by {:.3e}", -b14));
    } else if (b23 < -kPsdClampWindow) {
      rep.failing_block = "2-3";
      rep.failures.push_back(fmt::format(
          "X block 2-3 violates rho22*rho33 >= |rho23|^2 by {:.3e}", -b23));
    }
  }
  return rep;
}

void ensure_valid(const DensityMatrix4& rho, const char* context) {
  const ValidationReport rep = validate(rho);
  if (!rep.ok())
    throw InvalidStateError(fmt::format("{}: {}", context, rep.summary()));
}

DensityMatrix4 make_bell(BellState k) {
  // Projector entries: Phi± live on the 1-4 subspace, Psi± on 2-3.
  DensityMatrix4 rho;
  const bool phi = k == BellState::PhiPlus || k == BellState::PhiMinus;
  const double sign =
      (k == BellState::PhiPlus || k == BellState::PsiPlus) ? 0.5 : -0.5;
  const int a = phi ? 0 : 1;
  const int b = phi ? 3 : 2;
  rho.rho(a, a) = 0.5;
  rho.rho(b, b) = 0.5;
  rho.rho(a, b) = sign;
  rho.rho(b, a) = sign;
  return rho;
}

DensityMatrix4 make_werner(double p) {
  if (!(p >= 0.0 && p <= 1.0))
    throw Error(fmt::format("make_werner: p = {} outside [0, 1]", p));
  const DensityMatrix4 singlet = make_bell(BellState::PsiMinus);
  ComplexMatrix4 m = scale(p, singlet.rho);
  for (int i = 0; i < 4; ++i) m(i, i) += (1.0 - p) / 4.0;
  return {m};
}

namespace {

// Exact eigenbasis of a bare Pauli string: the matrix is a signed/phased
// permutation with involutive permutation part, so each orbit is a fixed
// point (eigenvector e_j) or a 2-cycle {j, k} with eigenvectors
// (e_j ± a e_k)/sqrt(2), a = M(k, j). Columns: the two +1 eigenvectors in
// index order, then the two -1 eigenvectors.
ComplexMatrix4 center_eigenbasis(const PhasedPauli& center) {
  const ComplexMatrix4 m = to_matrix(center);
  std::vector<std::array<cplx, 4>> plus, minus;
  std::array<bool, 4> done{};
  for (int j = 0; j < 4; ++j) {
    if (done[j]) continue;
    int k = 0;
    while (m(k, j) == cplx{}) ++k;
    if (k == j) {
      std::array<cplx, 4> v{};
      v[j] = 1.0;
      (m(j, j).real() > 0 ? plus : minus).push_back(v);
      done[j] = true;
      continue;
    }
    const cplx a = m(k, j);
    const double inv_sqrt2 = 0.70710678118654752440;
    std::array<cplx, 4> vp{}, vm{};
    vp[j] = inv_sqrt2;
    vp[k] = a * inv_sqrt2;
    vm[j] = inv_sqrt2;
    vm[k] = -a * inv_sqrt2;
    plus.push_back(vp);
    minus.push_back(vm);
    done[j] = done[k] = true;
  }
  ComplexMatrix4 v;
  for (int c = 0; c < 2; ++c)
    for (int i = 0; i < 4; ++i) {
      v(i, c) = plus[c][i];
      v(i, c + 2) = minus[c][i];
    }
  return v;
}

}  // namespace

DensityMatrix4 make_random_x(const Subalgebra& s, std::uint64_t seed) {
  SeededRng rng(seed);

  // Flat simplex sample for the four diagonal weights: sorted uniforms, gaps.
  std::array<double, 3> u{rng.uniform01(), rng.uniform01(), rng.uniform01()};
  std::sort(u.begin(), u.end());
  const std::array<double, 4> d{u[0], u[1] - u[0], u[2] - u[1], 1.0 - u[2]};

  // One 2x2 block per center eigenspace; coherence bounded by the block's
  // PSD condition, so the sample is a valid state by construction.
  ComplexMatrix4 b;
  for (int blk = 0; blk < 2; ++blk) {
    const int r0 = 2 * blk;
    const double d0 = d[r0], d1 = d[r0 + 1];
    const double mag = rng.uniform01() * std::sqrt(d0 * d1);
    const double phase = rng.uniform(0.0, 6.283185307179586476925286766559);
    const cplx z = mag * cplx{std::cos(phase), std::sin(phase)};
    b(r0, r0) = d0;
    b(r0 + 1, r0 + 1) = d1;
    b(r0, r0 + 1) = z;
    b(r0 + 1, r0) = std::conj(z);
  }

  const ComplexMatrix4 v = center_eigenbasis(s.center);
  return {mul(v, mul(b, adjoint(v)))};
}

}  // namespace xstates
