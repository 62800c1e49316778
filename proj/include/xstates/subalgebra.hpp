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
#include <string>
#include <utility>
#include <vector>

#include "xstates/pauli.hpp"

namespace xstates {

/// One su(2) x su(2) x u(1) subalgebra of the two-qubit Pauli algebra:
/// the u(1) center X1 plus six ordered members X2..X7 (signs included).
/// Conjugate pairs sit in slots (2,5), (3,6), (4,7) and each pair multiplies
/// to exactly +center.
struct Subalgebra {
  PhasedPauli center;                      // X1, bare
  std::array<PhasedPauli, 6> members;      // X2..X7, phase_exp 0 or 2

  /// Element by subalgebra index 1..7 (1 is the center).
  const PhasedPauli& element(int i) const;

  /// Conjugate-pair partner: pair(1) = 1, pair(2) = 5, pair(5) = 2, ...
  static int pair_of(int i);

  /// The three conjugate pairs as index pairs.
  static std::array<std::pair<int, int>, 3> pairs() {
    return {{{2, 5}, {3, 6}, {4, 7}}};
  }
};

/// One subalgebra per nontrivial bare Pauli string as center, in
/// lexicographic center order. Each member list is the full commutant of the
/// center among the nontrivial bare strings.
std::vector<Subalgebra> enumerate_centers();

/// Deterministic ordering and signs for the subalgebra of the given center:
///  - each conjugate pair multiplies to +center;
///  - within a pair the lexicographically smaller bare string carries +1;
///  - for center ZZ the result is the standard ordered set
///    (YX, IZ, -YY, XY, ZI, XX); other centers order pairs into slots
///    (2,5),(3,6),(4,7) by the lexicographic rank of each pair's smaller
///    element, smaller element in the lower slot.
/// Throws Error if the center is phased or the identity string.
Subalgebra canonicalize(const PhasedPauli& center);

/// One line of the subalgebra's Fano plane. Commuting lines hold sorted
/// indices; anticommuting lines are oriented so that
/// X[members[0]] * X[members[1]] = +i * X[members[2]] cyclically.
struct FanoLine {
  std::array<int, 3> members;
  bool anticommuting = false;
};

/// The seven-point incidence structure of a subalgebra: three commuting
/// lines through index 1 and four oriented anticommuting lines.
struct FanoStructure {
  std::array<FanoLine, 7> lines;            // commuting first, then anticommuting
  std::array<std::string, 7> node_labels;   // pauli text of X1..X7
};

/// Derive the Fano structure from exhaustive pair products.
FanoStructure fano(const Subalgebra& s);

/// Deterministic line-oriented text: a node list followed by a typed line
/// list, suitable for graph tooling.
std::string export_fano_graph(const FanoStructure& f);

}  // namespace xstates
