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

#include "xstates/pauli.hpp"

#include <fmt/format.h>

namespace xstates {

namespace {

struct SlotProduct {
  int phase_exp;  // i^phase_exp
  Axis axis;
};

// sigma_a sigma_b = i^p sigma_c on one slot. Identity absorbs, equal axes
// square to I, and the cyclic products pick up i (+1 exponent) forward and
// -i (+3) backward: XY = iZ, YZ = iX, ZX = iY.
SlotProduct slot_multiply(Axis a, Axis b) {
  if (a == Axis::I) return {0, b};
  if (b == Axis::I) return {0, a};
  if (a == b) return {0, Axis::I};
  const int ia = static_cast<int>(a), ib = static_cast<int>(b);
  // Forward cyclic (X,Y), (Y,Z), (Z,X) <=> b - a == 1 mod 3 on values 1..3.
  const bool forward = (ib - ia + 3) % 3 == 1;
  const Axis c = static_cast<Axis>(6 - ia - ib);  // the remaining axis
  return {forward ? 1 : 3, c};
}

bool slot_anticommutes(Axis a, Axis b) {
  return a != Axis::I && b != Axis::I && a != b;
}

// Single-qubit Pauli matrices, row-major 2x2.
constexpr cplx kI{0.0, 1.0};
const cplx kSingle[4][2][2] = {
    {{1, 0}, {0, 1}},      // I
    {{0, 1}, {1, 0}},      // X
    {{0, -kI}, {kI, 0}},   // Y
    {{1, 0}, {0, -1}},     // Z
};

cplx phase_value(int exp) {
  switch (exp & 3) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

}  // namespace

char axis_char(Axis a) {
  switch (a) {
    case Axis::I: return 'I';
    case Axis::X: return 'X';
    case Axis::Y: return 'Y';
    case Axis::Z: return 'Z';
  }
  return '?';
}

PhasedPauli multiply(const PhasedPauli& a, const PhasedPauli& b) {
  const SlotProduct s = slot_multiply(a.sigma, b.sigma);
  const SlotProduct t = slot_multiply(a.tau, b.tau);
  return {static_cast<std::uint8_t>((a.phase_exp + b.phase_exp + s.phase_exp +
                                     t.phase_exp) %
                                    4),
          s.axis, t.axis};
}

bool commutes(const PhasedPauli& a, const PhasedPauli& b) {
  const int parity = (slot_anticommutes(a.sigma, b.sigma) ? 1 : 0) +
                     (slot_anticommutes(a.tau, b.tau) ? 1 : 0);
  return parity % 2 == 0;
}

ComplexMatrix4 to_matrix(const PhasedPauli& a) {
  const auto& s = kSingle[static_cast<int>(a.sigma)];
  const auto& t = kSingle[static_cast<int>(a.tau)];
  const cplx phase = phase_value(a.phase_exp);
  ComplexMatrix4 m;
  for (int s1 = 0; s1 < 2; ++s1)
    for (int t1 = 0; t1 < 2; ++t1)
      for (int s2 = 0; s2 < 2; ++s2)
        for (int t2 = 0; t2 < 2; ++t2)
          m(2 * s1 + t1, 2 * s2 + t2) = phase * s[s1][s2] * t[t1][t2];
  return m;
}

PhasedPauli parse_pauli(std::string_view text) {
  int phase_exp = 0;
  std::string_view rest = text;
  // Prefix is whatever makes the remainder exactly two axis letters.
  if (text.size() == 4 && text.substr(0, 2) == "-i") {
    phase_exp = 3;
    rest = text.substr(2);
  } else if (text.size() == 3 && text.front() == '-') {
    phase_exp = 2;
    rest = text.substr(1);
  } else if (text.size() == 3 && text.front() == 'i') {
    phase_exp = 1;
    rest = text.substr(1);
  } else if (text.size() != 2) {
    const char offending = text.empty() ? '\0' : text.front();
    throw ParseError(
        fmt::format("cannot parse Pauli string \"{}\": expected an optional "
                    "prefix (\"-\", \"i\", \"-i\") followed by two axis "
                    "letters from {{I,X,Y,Z}}",
                    text),
        offending);
  }

  Axis axes[2];
  for (int k = 0; k < 2; ++k) {
    switch (rest[k]) {
      case 'I': axes[k] = Axis::I; break;
      case 'X': axes[k] = Axis::X; break;
      case 'Y': axes[k] = Axis::Y; break;
      case 'Z': axes[k] = Axis::Z; break;
      default:
        throw ParseError(
            fmt::format("cannot parse Pauli string \"{}\": invalid axis "
                        "character '{}'",
                        text, rest[k]),
            rest[k]);
    }
  }
  return {static_cast<std::uint8_t>(phase_exp), axes[0], axes[1]};
}

std::string format_pauli(const PhasedPauli& a) {
  static const char* kPrefix[4] = {"", "i", "-", "-i"};
  return fmt::format("{}{}{}", kPrefix[a.phase_exp & 3], axis_char(a.sigma),
                     axis_char(a.tau));
}

std::vector<PhasedPauli> nontrivial_bare_strings() {
  std::vector<PhasedPauli> out;
  out.reserve(15);
  for (int s = 0; s < 4; ++s)
    for (int t = 0; t < 4; ++t) {
      if (s == 0 && t == 0) continue;
      out.push_back({0, static_cast<Axis>(s), static_cast<Axis>(t)});
    }
  return out;
}

}  // namespace xstates
