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

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "xstates/linalg4.hpp"

namespace xstates {

/// Per-qubit Pauli axis. I is the identity.
enum class Axis : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

char axis_char(Axis a);

/// A two-qubit Pauli string i^p * (sigma_a ⊗ tau_b), phase tracked exactly
/// as the integer exponent p mod 4. sigma acts on the first qubit (the slow
/// 2x2 block index of the matrix realization), tau on the second.
struct PhasedPauli {
  std::uint8_t phase_exp = 0;  // i^phase_exp, always reduced mod 4
  Axis sigma = Axis::I;
  Axis tau = Axis::I;

  bool operator==(const PhasedPauli&) const = default;

  /// Same string with phase +1.
  PhasedPauli bare() const { return {0, sigma, tau}; }
  bool is_bare() const { return phase_exp == 0; }
  /// True for i^p * (I ⊗ I), any phase.
  bool is_identity_string() const { return sigma == Axis::I && tau == Axis::I; }
  /// Number of non-identity slots (0, 1 or 2).
  int weight() const {
    return (sigma != Axis::I ? 1 : 0) + (tau != Axis::I ? 1 : 0);
  }
  /// This string multiplied by i^k.
  PhasedPauli with_extra_phase(int k) const {
    return {static_cast<std::uint8_t>((phase_exp + k) % 4), sigma, tau};
  }
};

/// Exact product. Phases multiply; each slot follows
/// sigma_i sigma_j = delta_ij + i eps_ijk sigma_k.
PhasedPauli multiply(const PhasedPauli& a, const PhasedPauli& b);
inline PhasedPauli operator*(const PhasedPauli& a, const PhasedPauli& b) {
  return multiply(a, b);
}

/// True iff ab = ba, i.e. the per-slot anticommutation parities cancel.
bool commutes(const PhasedPauli& a, const PhasedPauli& b);

/// Matrix realization in the basis |↑↑>, |↑↓>, |↓↑>, |↓↓>: the Kronecker
/// product of single-qubit Pauli matrices times i^p, sigma on the block index.
ComplexMatrix4 to_matrix(const PhasedPauli& a);

/// Text form: optional prefix "", "-", "i", "-i", then one axis letter per
/// slot (sigma first), e.g. "ZZ", "-YY", "iXI". Throws ParseError naming the
/// offending character on malformed input.
PhasedPauli parse_pauli(std::string_view text);
std::string format_pauli(const PhasedPauli& a);

/// The 15 non-identity bare strings in lexicographic order
/// (axis order I < X < Y < Z, sigma slot first).
std::vector<PhasedPauli> nontrivial_bare_strings();

/// Lexicographic key of the bare string: sigma*4 + tau (phase ignored).
inline int bare_lex_key(const PhasedPauli& a) {
  return static_cast<int>(a.sigma) * 4 + static_cast<int>(a.tau);
}

}  // namespace xstates
