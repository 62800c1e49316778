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
#include <set>

#include <catch2/catch_amalgamated.hpp>

#include "xstates/io.hpp"
#include "xstates/rng.hpp"

using namespace xstates;

namespace {

const Subalgebra& standard() {
  static const Subalgebra s = canonicalize(parse_pauli("ZZ"));
  return s;
}

KrausChannel identity_channel() {
  KrausChannel ch;
  ch.center = standard().center;
  KrausCoefficients c{};
  c[0] = 1.0;
  ch.kraus.push_back(c);
  return ch;
}

KrausChannel dephasing_channel(double p) {
  KrausChannel ch;
  ch.center = standard().center;
  KrausCoefficients k0{}, k1{};
  k0[0] = std::sqrt(1.0 - p);
  k1[1] = std::sqrt(p);  // X1 component
  ch.kraus = {k0, k1};
  return ch;
}

}  // namespace

TEST_CASE("member unitaries") {
  const ComplexMatrix4 u0 = member_unitary(standard(), 3, 0.0);
  CHECK(max_abs_diff(u0, ComplexMatrix4::identity()) == 0.0);

  // theta = pi/2 collapses to -i X_i.
  for (int i = 1; i <= 7; ++i) {
    const ComplexMatrix4 u = member_unitary(standard(), i, M_PI / 2);
    CHECK(max_abs_diff(u, scale(cplx{0, -1}, to_matrix(standard().element(i)))) <=
          1e-15);
  }

  SeededRng rng(41);
  for (int k = 0; k < 200; ++k) {
    const int i = 1 + static_cast<int>(rng.next_word() % 7);
    const double theta = rng.uniform(-10.0, 10.0);
    const ComplexMatrix4 u = member_unitary(standard(), i, theta);
    REQUIRE(max_abs_diff(mul(u, adjoint(u)), ComplexMatrix4::identity()) <=
            1e-12);
  }

  CHECK_THROWS_AS(member_unitary(standard(), 0, 1.0), Error);
  CHECK_THROWS_AS(member_unitary(standard(), 8, 1.0), Error);
}

TEST_CASE("identity channel leaves states alone") {
  const DensityMatrix4 rho = make_random_x(standard(), 404);
  const DensityMatrix4 out = apply_channel(rho, identity_channel());
  CHECK(max_abs_diff(out.rho, rho.rho) <= 1e-15);
  CHECK(completeness_residual(identity_channel()) <= 1e-15);
}

TEST_CASE("incomplete channels are rejected with the residual") {
  KrausChannel ch = identity_channel();
  ch.kraus[0][0] = 0.9;
  try {
    apply_channel(make_werner(0.5), ch);
    FAIL("expected IncompleteChannelError");
  } catch (const IncompleteChannelError& e) {
    CHECK(e.residual() == Catch::Approx(1.0 - 0.81).margin(1e-12));
  }
}

TEST_CASE("dephasing along X1 fixes standard X-states") {
  SeededRng rng(42);
  for (double p : {0.1, 0.5, 0.9}) {
    const KrausChannel ch = dephasing_channel(p);
    CHECK(completeness_residual(ch) <= 1e-15);
    const DensityMatrix4 rho = make_random_x(standard(), rng.next_word());
    const DensityMatrix4 out = apply_channel(rho, ch);
    CHECK(max_abs_diff(out.rho, rho.rho) <= 1e-14);
  }
}

TEST_CASE("member rotation rotates the coupled planes by twice the angle") {
  // i = 6 on the standard set: fixed {1, 3, 6}, planes {2,7} and {4,5}.
  const RotationAction act = rotation_action(standard(), 6, 0.3);
  CHECK(act.fixed == std::vector<int>{1, 3, 6});
  CHECK(act.rotation_angle == Catch::Approx(0.6));
  REQUIRE(act.planes.size() == 2);
  std::set<std::set<int>> planes;
  for (const auto& p : act.planes) planes.insert({p.a, p.b});
  CHECK(planes == std::set<std::set<int>>{{2, 7}, {4, 5}});

  // X6 X4 = +i X5 fixes the (4, 5) orientation.
  CHECK(multiply(standard().element(6), standard().element(4)) ==
        standard().element(5).with_extra_phase(1));

  const RotationAction center_act = rotation_action(standard(), 1, 0.3);
  CHECK(center_act.fixed.size() == 7);
  CHECK(center_act.planes.empty());
}

TEST_CASE("rotation action predicts the conjugated g exactly") {
  SeededRng rng(43);
  for (const Subalgebra& s : enumerate_centers()) {
    for (int i = 1; i <= 7; ++i) {
      const RotationAction act = rotation_action(s, i, 0.0);
      for (int trial = 0; trial < 5; ++trial) {
        const double theta = rng.uniform(-3.0, 3.0);
        const DensityMatrix4 rho = make_random_x(s, rng.next_word());
        const GVector g = g_from_rho(rho, s);

        const ComplexMatrix4 u = member_unitary(s, i, theta);
        const DensityMatrix4 rotated{mul(u, mul(rho.rho, adjoint(u)))};
        const GVector gr = g_from_rho(rotated, s);

        GVector predicted = g;
        const double c = std::cos(2 * theta), sn = std::sin(2 * theta);
        for (const auto& p : act.planes) {
          predicted.g[p.a - 1] = c * g[p.a] - sn * g[p.b];
          predicted.g[p.b - 1] = sn * g[p.a] + c * g[p.b];
        }
        for (int j = 1; j <= 7; ++j)
          REQUIRE(gr[j] == Catch::Approx(predicted[j]).margin(1e-12));

        // Plane norms are preserved.
        for (const auto& p : act.planes) {
          const double before = g[p.a] * g[p.a] + g[p.b] * g[p.b];
          const double after = gr[p.a] * gr[p.a] + gr[p.b] * gr[p.b];
          REQUIRE(std::abs(before - after) <= 1e-10);
        }
      }
    }
  }
}

TEST_CASE("random channels are complete and preserve the X pattern") {
  SeededRng rng(44);
  for (const Subalgebra& s : enumerate_centers()) {
    for (int trial = 0; trial < 10; ++trial) {
      const KrausChannel ch = make_random_channel(s, rng.next_word());
      REQUIRE(completeness_residual(ch) <= 1e-10);

      const DensityMatrix4 rho = make_random_x(s, rng.next_word());
      const DensityMatrix4 out = apply_channel(rho, ch);
      REQUIRE(is_x_pattern(out, s, 1e-10));
      REQUIRE(validate(out).ok());
    }
  }
}

TEST_CASE("coefficient and matrix representations agree for random channels") {
  SeededRng rng(45);
  for (int trial = 0; trial < 50; ++trial) {
    const KrausChannel ch = make_random_channel(standard(), rng.next_word());
    for (const KrausCoefficients& c : ch.kraus) {
      const ComplexMatrix4 k = kraus_matrix(standard(), c);
      const KrausCoefficients back = coefficients_of(standard(), k);
      for (int i = 0; i < 8; ++i)
        REQUIRE(std::abs(back[i] - c[i]) <= 1e-12);
    }
  }
}

TEST_CASE("evolution traces") {
  const DensityMatrix4 rho = make_werner(0.8);

  // Identity channel: constant rows.
  const auto rows = evolve_trace(rho, identity_channel(), 5);
  REQUIRE(rows.size() == 6);
  for (const TraceRow& row : rows) {
    CHECK(row.concurrence == Catch::Approx(0.7).margin(1e-10));
    for (int i = 1; i <= 7; ++i) CHECK(row.g[i] == rows[0].g[i]);
  }

  // Determinism.
  const auto again = evolve_trace(rho, identity_channel(), 5);
  for (std::size_t k = 0; k < rows.size(); ++k)
    CHECK(rows[k].concurrence == again[k].concurrence);

  CHECK_THROWS_AS(evolve_trace(rho, identity_channel(), 0), Error);
}

TEST_CASE("dephasing built on the ZI subalgebra keeps its pattern step by step") {
  const Subalgebra s = canonicalize(parse_pauli("ZI"));
  KrausChannel ch;
  ch.center = s.center;
  KrausCoefficients k0{}, k1{};
  k0[0] = std::sqrt(0.7);
  k1[1] = std::sqrt(0.3);
  ch.kraus = {k0, k1};

  DensityMatrix4 rho = project_to_x(make_bell(BellState::PhiPlus), s);
  const auto rows = evolve_trace(rho, ch, 8);
  DensityMatrix4 state = rho;
  for (int step = 1; step <= 8; ++step) {
    state = apply_channel(state, ch);
    REQUIRE(is_x_pattern(state, s, 1e-12));
    REQUIRE(validate(state).ok());  // trace and PSD preserved every step
  }
  REQUIRE(rows.size() == 9);
}

TEST_CASE("member-6 rotation on Werner states") {
  // Werner g-support is {1, 4, 7}; exp(-i theta X6) fixes {1, 3, 6} and
  // rotates g4 within the (4,5) plane and g7 within the (7,2) plane.
  const double p = 0.73;
  const DensityMatrix4 rho = make_werner(p);
  for (double theta : {0.2, 1.1, -0.8}) {
    const ComplexMatrix4 u = member_unitary(standard(), 6, theta);
    const GVector g = g_from_rho({mul(u, mul(rho.rho, adjoint(u)))}, standard());
    const double c = std::cos(2 * theta), sn = std::sin(2 * theta);
    CHECK(g[1] == Catch::Approx(-p).margin(1e-13));
    CHECK(g[3] == Catch::Approx(0.0).margin(1e-13));
    CHECK(g[6] == Catch::Approx(0.0).margin(1e-13));
    CHECK(g[4] == Catch::Approx(c * p).margin(1e-13));
    CHECK(g[5] == Catch::Approx(sn * p).margin(1e-13));
    CHECK(g[7] == Catch::Approx(c * -p).margin(1e-13));
    CHECK(g[2] == Catch::Approx(sn * -p).margin(1e-13));
    // Plane norms are conserved, so the concurrence-relevant combinations
    // stay on circles of radius p.
    CHECK(std::hypot(g[4], g[5]) == Catch::Approx(p).margin(1e-13));
    CHECK(std::hypot(g[7], g[2]) == Catch::Approx(p).margin(1e-13));
  }
}

TEST_CASE("concurrence is invariant under a local member rotation") {
  // exp(-i theta X6) acts on one qubit only (X6 = ZI): Werner(1) keeps C = 1.
  const DensityMatrix4 singlet = make_werner(1.0);
  for (double theta : {0.1, 0.7, 2.0}) {
    KrausChannel ch;
    ch.center = standard().center;
    KrausCoefficients c{};
    c[0] = std::cos(theta);
    c[6] = cplx{0.0, -std::sin(theta)};
    ch.kraus = {c};
    const auto rows = evolve_trace(singlet, ch, 3);
    for (const TraceRow& row : rows)
      REQUIRE(row.concurrence == Catch::Approx(1.0).margin(1e-10));
  }
}

TEST_CASE("channel JSON round trip") {
  SeededRng rng(46);
  const KrausChannel ch = make_random_channel(standard(), rng.next_word());
  const KrausChannel back = read_channel_json(write_channel_json(ch));
  CHECK(back.center == ch.center);
  REQUIRE(back.kraus.size() == ch.kraus.size());
  for (std::size_t k = 0; k < ch.kraus.size(); ++k)
    for (int i = 0; i < 8; ++i)
      CHECK(std::abs(back.kraus[k][i] - ch.kraus[k][i]) <= 1e-15);

  CHECK_THROWS_AS(read_channel_json("{\"center\": \"ZZ\"}"), Error);
  CHECK_THROWS_AS(read_channel_json("{\"center\": \"QQ\", \"kraus\": []}"),
                  ParseError);
}
