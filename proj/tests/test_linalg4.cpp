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

#include <catch2/catch_amalgamated.hpp>

#include "xstates/rng.hpp"

using namespace xstates;

namespace {

ComplexMatrix4 random_matrix(SeededRng& rng) {
  ComplexMatrix4 m;
  for (cplx& v : m.e) v = {rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
  return m;
}

ComplexMatrix4 random_hermitian(SeededRng& rng) {
  const ComplexMatrix4 m = random_matrix(rng);
  return scale(0.5, add(m, adjoint(m)));
}

ComplexMatrix4 random_psd(SeededRng& rng) {
  const ComplexMatrix4 m = random_matrix(rng);
  return mul(m, adjoint(m));
}

double reconstruction_residual(const ComplexMatrix4& m, const EigenSystem& es) {
  ComplexMatrix4 rebuilt;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      cplx acc = 0.0;
      for (int k = 0; k < 4; ++k)
        acc += es.vectors(i, k) * es.values[k] * std::conj(es.vectors(j, k));
      rebuilt(i, j) = acc;
    }
  return max_abs_diff(m, rebuilt);
}

}  // namespace

TEST_CASE("arithmetic basics") {
  CHECK(trace(ComplexMatrix4::identity()) == cplx{4.0, 0.0});

  SeededRng rng(1);
  for (int k = 0; k < 100; ++k) {
    const ComplexMatrix4 m = random_matrix(rng);
    CHECK(max_abs_diff(adjoint(adjoint(m)), m) == 0.0);
  }

  const ComplexMatrix4 a = random_matrix(rng), b = random_matrix(rng);
  CHECK(max_abs_diff(add(a, b), add(b, a)) == 0.0);
  CHECK(max_abs_diff(sub(a, a), ComplexMatrix4::zero()) == 0.0);
  CHECK(max_abs_diff(scale(2.0, a), add(a, a)) < 1e-15);
  CHECK(max_abs_diff(mul(a, ComplexMatrix4::identity()), a) == 0.0);

  // tr(AB) = tr(BA)
  CHECK(std::abs(trace(mul(a, b)) - trace(mul(b, a))) < 1e-12);
}

TEST_CASE("eigendecomposition of simple diagonals") {
  const EigenSystem es = hermitian_eigs(ComplexMatrix4::diagonal(1, -1, -1, 1));
  CHECK(es.values[0] == Catch::Approx(-1.0).margin(1e-14));
  CHECK(es.values[1] == Catch::Approx(-1.0).margin(1e-14));
  CHECK(es.values[2] == Catch::Approx(1.0).margin(1e-14));
  CHECK(es.values[3] == Catch::Approx(1.0).margin(1e-14));
}

TEST_CASE("eigendecomposition of random Hermitian matrices") {
  SeededRng rng(42);
  double worst_residual = 0.0, worst_unitarity = 0.0, worst_trace = 0.0;
  for (int k = 0; k < 10000; ++k) {
    const ComplexMatrix4 m = random_hermitian(rng);
    const EigenSystem es = hermitian_eigs(m);

    CHECK(es.values[0] <= es.values[1]);
    CHECK(es.values[1] <= es.values[2]);
    CHECK(es.values[2] <= es.values[3]);

    worst_residual = std::max(worst_residual, reconstruction_residual(m, es));
    worst_unitarity = std::max(
        worst_unitarity, max_abs_diff(mul(adjoint(es.vectors), es.vectors),
                                      ComplexMatrix4::identity()));
    const double tr_sum =
        es.values[0] + es.values[1] + es.values[2] + es.values[3];
    worst_trace = std::max(worst_trace, std::abs(tr_sum - trace(m).real()));
  }
  CHECK(worst_residual <= 1e-10);
  CHECK(worst_unitarity <= 1e-10);
  CHECK(worst_trace <= 1e-10);
}

TEST_CASE("eigendecomposition rejects non-Hermitian input") {
  ComplexMatrix4 m = ComplexMatrix4::identity();
  m(0, 1) = {0.5, 0.0};
  try {
    hermitian_eigs(m);
    FAIL("expected NotHermitianError");
  } catch (const NotHermitianError& e) {
    CHECK(e.deviation() == Catch::Approx(0.5));
  }
}

TEST_CASE("psd_sqrt on fixed matrices") {
  CHECK(max_abs_diff(psd_sqrt(ComplexMatrix4::identity()),
                     ComplexMatrix4::identity()) < 1e-12);
  CHECK(max_abs_diff(psd_sqrt(ComplexMatrix4::diagonal(4, 1, 0, 0)),
                     ComplexMatrix4::diagonal(2, 1, 0, 0)) < 1e-12);
}

TEST_CASE("psd_sqrt squares back on random PSD matrices") {
  SeededRng rng(7);
  for (int k = 0; k < 2000; ++k) {
    const ComplexMatrix4 m = random_psd(rng);
    const ComplexMatrix4 r = psd_sqrt(m);
    CHECK(hermitian_deviation(r) == 0.0);
    REQUIRE(max_abs_diff(mul(r, r), m) <= 1e-9);
  }
}

TEST_CASE("psd_sqrt rejects matrices with a negative eigenvalue") {
  try {
    psd_sqrt(ComplexMatrix4::diagonal(1, 1, 1, -0.25));
    FAIL("expected NotPsdError");
  } catch (const NotPsdError& e) {
    CHECK(e.eigenvalue() == Catch::Approx(-0.25).margin(1e-12));
  }

  // Values inside the clamp window are forgiven.
  const ComplexMatrix4 r = psd_sqrt(ComplexMatrix4::diagonal(1, 1, 1, -5e-11));
  CHECK(max_abs_diff(mul(r, r), ComplexMatrix4::diagonal(1, 1, 1, 0)) <= 1e-9);
}
