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

#include "xstates/channels.hpp"

#include <cmath>

#include <fmt/format.h>

#include "xstates/rng.hpp"

namespace xstates {

ComplexMatrix4 kraus_matrix(const Subalgebra& s, const KrausCoefficients& c) {
  ComplexMatrix4 k = scale(c[0], ComplexMatrix4::identity());
  for (int i = 1; i <= 7; ++i)
    k = add(k, scale(c[i], to_matrix(s.element(i))));
  return k;
}

KrausCoefficients coefficients_of(const Subalgebra& s, const ComplexMatrix4& k) {
  auto trace_with = [&](const ComplexMatrix4& x) {
    cplx t = 0.0;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) t += k(i, j) * x(j, i);
    return 0.25 * t;
  };
  KrausCoefficients c;
  c[0] = 0.25 * trace(k);
  for (int i = 1; i <= 7; ++i) c[i] = trace_with(to_matrix(s.element(i)));
  return c;
}

namespace {

std::vector<ComplexMatrix4> realize(const KrausChannel& ch, Subalgebra* s_out) {
  const Subalgebra s = canonicalize(ch.center);
  if (s_out) *s_out = s;
  std::vector<ComplexMatrix4> ks;
  ks.reserve(ch.kraus.size());
  for (const KrausCoefficients& c : ch.kraus) ks.push_back(kraus_matrix(s, c));
  return ks;
}

double residual_of(const std::vector<ComplexMatrix4>& ks) {
  ComplexMatrix4 sum;
  for (const ComplexMatrix4& k : ks) sum = add(sum, mul(adjoint(k), k));
  return max_abs_diff(sum, ComplexMatrix4::identity());
}

}  // namespace

double completeness_residual(const KrausChannel& ch) {
  return residual_of(realize(ch, nullptr));
}

DensityMatrix4 apply_channel(const DensityMatrix4& rho, const KrausChannel& ch) {
  const std::vector<ComplexMatrix4> ks = realize(ch, nullptr);
  const double residual = residual_of(ks);
  if (residual > kCompletenessTol)
    throw IncompleteChannelError(
        fmt::format("apply_channel: sum K†K deviates from identity by {:.3e} "
                    "(tolerance {:.1e})",
                    residual, kCompletenessTol),
        residual);

  ComplexMatrix4 out;
  for (const ComplexMatrix4& k : ks)
    out = add(out, mul(k, mul(rho.rho, adjoint(k))));
  return {out};
}

ComplexMatrix4 member_unitary(const Subalgebra& s, int i, double theta) {
  const ComplexMatrix4 xi = to_matrix(s.element(i));  // range-checks i
  return add(scale(std::cos(theta), ComplexMatrix4::identity()),
             scale(cplx{0.0, -std::sin(theta)}, xi));
}

RotationAction rotation_action(const Subalgebra& s, int i, double theta) {
  if (i < 1 || i > 7)
    throw Error(fmt::format("rotation_action: index {} out of range 1..7", i));

  RotationAction act;
  act.member = i;
  act.theta = theta;
  act.rotation_angle = 2.0 * theta;

  if (i == 1) {
    act.fixed = {1, 2, 3, 4, 5, 6, 7};
    return act;
  }
  act.fixed = {1, i, Subalgebra::pair_of(i)};
  std::sort(act.fixed.begin(), act.fixed.end());

  // The two anticommuting lines through i couple the remaining four members
  // into rotation planes, oriented by X_i X_a = +i X_b.
  const FanoStructure f = fano(s);
  for (const FanoLine& line : f.lines) {
    if (!line.anticommuting) continue;
    const auto& m = line.members;
    int pos = -1;
    for (int k = 0; k < 3; ++k)
      if (m[k] == i) pos = k;
    if (pos < 0) continue;
    // Cyclic triple (m0, m1, m2) means X_m0 X_m1 = +i X_m2 and rotations
    // thereof; with i at position pos the plane is (next, previous).
    RotationAction::Plane p;
    p.a = m[(pos + 1) % 3];
    p.b = m[(pos + 2) % 3];
    act.planes.push_back(p);
  }
  if (act.planes.size() != 2)
    throw Error(fmt::format(
        "rotation_action: expected 2 anticommuting lines through {}, found {}",
        i, act.planes.size()));
  return act;
}

std::vector<TraceRow> evolve_trace(const DensityMatrix4& rho0,
                                   const KrausChannel& ch, int steps) {
  if (steps < 1)
    throw Error(fmt::format("evolve_trace: steps = {} must be >= 1", steps));
  Subalgebra s;
  realize(ch, &s);

  std::vector<TraceRow> rows;
  rows.reserve(steps + 1);
  DensityMatrix4 rho = rho0;
  for (int step = 0; step <= steps; ++step) {
    if (step > 0) rho = apply_channel(rho, ch);
    TraceRow row;
    row.step = step;
    row.g = g_from_rho(rho, s);
    row.concurrence = concurrence_oracle(rho).first;
    rows.push_back(row);
  }
  return rows;
}

KrausChannel make_random_channel(const Subalgebra& s, std::uint64_t seed,
                                 int n_kraus) {
  if (n_kraus < 1)
    throw Error(fmt::format("make_random_channel: n_kraus = {} must be >= 1",
                            n_kraus));
  SeededRng rng(seed);

  std::vector<ComplexMatrix4> ks;
  ComplexMatrix4 sum;
  ks.reserve(n_kraus);
  for (int k = 0; k < n_kraus; ++k) {
    KrausCoefficients c;
    for (int i = 0; i < 8; ++i) c[i] = cplx{rng.normal(), rng.normal()};
    const ComplexMatrix4 m = kraus_matrix(s, c);
    ks.push_back(m);
    sum = add(sum, mul(adjoint(m), m));
  }

  // sum is positive definite for generic draws; its inverse square root
  // stays inside the (multiplicatively closed) subalgebra span, so the
  // normalized operators still have exact coefficient form.
  const EigenSystem es = hermitian_eigs(sum);
  if (es.values[0] < 1e-8)
    return make_random_channel(s, seed + 0x9e3779b97f4a7c15ull, n_kraus);
  ComplexMatrix4 inv_root;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      cplx acc = 0.0;
      for (int k = 0; k < 4; ++k)
        acc += es.vectors(i, k) * (1.0 / std::sqrt(es.values[k])) *
               std::conj(es.vectors(j, k));
      inv_root(i, j) = acc;
    }

  KrausChannel ch;
  ch.center = s.center;
  for (const ComplexMatrix4& k : ks)
    ch.kraus.push_back(coefficients_of(s, mul(k, inv_root)));
  return ch;
}

}  // namespace xstates
