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

#include "xstates/entanglement.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

namespace xstates {

namespace {

double clamp_radicand(double r, const char* what) {
  if (r < -kPsdClampWindow)
    throw InvalidStateError(
        fmt::format("spectrum_closed_form: radicand {} = {:.6e} is negative "
                    "beyond the clamp window; g does not describe a valid "
                    "X-state",
                    what, r));
  return std::max(r, 0.0);
}

ConcurrenceSpectrum sorted_descending(std::array<double, 4> v) {
  std::sort(v.begin(), v.end(), std::greater<>());
  return {v};
}

bool is_standard_center(const PhasedPauli& c) {
  return c == PhasedPauli{0, Axis::Z, Axis::Z};
}

}  // namespace

ConcurrenceSpectrum spectrum_closed_form(const GVector& g) {
  if (!is_standard_center(g.center))
    throw Error(fmt::format(
        "spectrum_closed_form: the closed form is stated for the standard "
        "center ZZ; got {} (use concurrence_oracle for other subalgebras)",
        format_pauli(g.center)));

  std::array<double, 4> v;
  for (int branch = 0; branch < 2; ++branch) {
    const double sg = branch == 0 ? 1.0 : -1.0;
    const double block = clamp_radicand(
        (1.0 + sg * g[1]) * (1.0 + sg * g[1]) -
            (g[3] + sg * g[6]) * (g[3] + sg * g[6]),
        branch == 0 ? "(1+g1)^2-(g3+g6)^2" : "(1-g1)^2-(g3-g6)^2");
    const double coh = std::hypot(g[2] + sg * g[5], g[4] + sg * g[7]);
    const double a = std::sqrt(block);
    v[2 * branch] = 0.25 * std::abs(a + coh);
    v[2 * branch + 1] = 0.25 * std::abs(a - coh);
  }
  return sorted_descending(v);
}

double concurrence_from_spectrum(const ConcurrenceSpectrum& sp) {
  return std::max(0.0, sp[0] - sp[1] - sp[2] - sp[3]);
}

double concurrence_entrywise(const DensityMatrix4& rho) {
  const ComplexMatrix4& m = rho.rho;
  double off_pattern = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (i != j && i + j != 3)
        off_pattern = std::max(off_pattern, std::abs(m(i, j)));
  if (off_pattern > kPatternTol)
    throw PatternError(
        fmt::format("concurrence_entrywise: entry outside the X pattern has "
                    "magnitude {:.3e} (tolerance {:.1e})",
                    off_pattern, kPatternTol),
        off_pattern);

  const double r11 = m(0, 0).real(), r22 = m(1, 1).real();
  const double r33 = m(2, 2).real(), r44 = m(3, 3).real();
  const double c14 = std::abs(m(0, 3)) - std::sqrt(std::max(0.0, r22 * r33));
  const double c23 = std::abs(m(1, 2)) - std::sqrt(std::max(0.0, r11 * r44));
  return 2.0 * std::max({0.0, c14, c23});
}

std::pair<double, ConcurrenceSpectrum> concurrence_oracle(
    const DensityMatrix4& rho) {
  const DensityMatrix4 flipped = spin_flip(rho);
  const ComplexMatrix4 root = psd_sqrt(rho.rho);
  ComplexMatrix4 r = mul(root, mul(flipped.rho, root));
  // r is Hermitian PSD up to rounding; restore exact Hermiticity for the
  // eigensolver.
  for (int i = 0; i < 4; ++i)
    for (int j = i; j < 4; ++j) {
      const cplx h = 0.5 * (r(i, j) + std::conj(r(j, i)));
      r(i, j) = h;
      r(j, i) = std::conj(h);
    }

  const EigenSystem es = hermitian_eigs(r);
  std::array<double, 4> v;
  for (int k = 0; k < 4; ++k) {
    const double mu = es.values[k];
    if (mu < -kPsdClampWindow)
      throw NotPsdError(
          fmt::format("concurrence_oracle: eigenvalue {:.6e} of "
                      "sqrt(rho) rho~ sqrt(rho) below -{:.1e}",
                      mu, kPsdClampWindow),
          mu);
    v[k] = std::sqrt(std::max(mu, 0.0));
  }
  const ConcurrenceSpectrum sp = sorted_descending(v);
  return {concurrence_from_spectrum(sp), sp};
}

MethodComparison compare_methods(const DensityMatrix4& rho, const Subalgebra& s) {
  ensure_valid(rho, "compare_methods");
  if (!is_x_pattern(rho, s))
    throw PatternError(
        fmt::format("compare_methods: state is not an X-state of center {}",
                    format_pauli(s.center)),
        max_abs_diff(rho.rho,
                     mul(to_matrix(s.center),
                         mul(rho.rho, adjoint(to_matrix(s.center))))));
  if (!is_standard_center(s.center))
    throw Error(
        "compare_methods: the closed and entrywise forms apply to the "
        "standard center ZZ; use concurrence_oracle for other subalgebras");

  MethodComparison cmp;
  cmp.closed_spectrum = spectrum_closed_form(g_from_rho(rho, s));
  cmp.closed = concurrence_from_spectrum(cmp.closed_spectrum);
  cmp.entrywise = concurrence_entrywise(rho);
  std::tie(cmp.oracle, cmp.oracle_spectrum) = concurrence_oracle(rho);

  for (int k = 0; k < 4; ++k)
    cmp.max_spectrum_deviation =
        std::max(cmp.max_spectrum_deviation,
                 std::abs(cmp.closed_spectrum[k] - cmp.oracle_spectrum[k]));
  cmp.max_concurrence_deviation =
      std::max({std::abs(cmp.closed - cmp.entrywise),
                std::abs(cmp.closed - cmp.oracle),
                std::abs(cmp.entrywise - cmp.oracle)});
  return cmp;
}

}  // namespace xstates
