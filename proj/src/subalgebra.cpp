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

#include "xstates/subalgebra.hpp"

#include <algorithm>

#include <fmt/format.h>

namespace xstates {

const PhasedPauli& Subalgebra::element(int i) const {
  if (i < 1 || i > 7)
    throw Error(fmt::format("subalgebra index {} out of range 1..7", i));
  return i == 1 ? center : members[i - 2];
}

int Subalgebra::pair_of(int i) {
  if (i < 1 || i > 7)
    throw Error(fmt::format("subalgebra index {} out of range 1..7", i));
  if (i == 1) return 1;
  return i <= 4 ? i + 3 : i - 3;
}

namespace {

// The paper's ordering for the standard center ZZ: X2..X7 as bare strings.
const std::array<const char*, 6> kStandardOrder = {"YX", "IZ", "YY",
                                                   "XY", "ZI", "XX"};

struct SignedPair {
  PhasedPauli low;   // lexicographically smaller, sign +1
  PhasedPauli high;  // partner, sign fixed so low * high = +center
};

std::vector<SignedPair> commutant_pairs(const PhasedPauli& center) {
  std::vector<PhasedPauli> commutant;
  for (const PhasedPauli& p : nontrivial_bare_strings())
    if (!(p == center) && commutes(p, center)) commutant.push_back(p);

  std::vector<SignedPair> pairs;
  std::vector<bool> used(commutant.size(), false);
  for (std::size_t i = 0; i < commutant.size(); ++i) {
    if (used[i]) continue;
    for (std::size_t j = i + 1; j < commutant.size(); ++j) {
      if (used[j]) continue;
      const PhasedPauli prod = multiply(commutant[i], commutant[j]);
      if (prod.bare() == center) {
        used[i] = used[j] = true;
        // Commuting Hermitian strings multiply to a Hermitian result, so the
        // phase here is +1 or -1; a -1 puts the sign on the larger element.
        SignedPair sp;
        sp.low = commutant[i];
        sp.high = prod.phase_exp == 0 ? commutant[j]
                                      : commutant[j].with_extra_phase(2);
        pairs.push_back(sp);
        break;
      }
    }
  }
  return pairs;
}

}  // namespace

Subalgebra canonicalize(const PhasedPauli& center) {
  if (!center.is_bare())
    throw Error(fmt::format("canonicalize: center must be a bare string, got {}",
                            format_pauli(center)));
  if (center.is_identity_string())
    throw Error("canonicalize: the identity string has no subalgebra");

  std::vector<SignedPair> pairs = commutant_pairs(center);
  std::sort(pairs.begin(), pairs.end(), [](const SignedPair& a, const SignedPair& b) {
    return bare_lex_key(a.low) < bare_lex_key(b.low);
  });

  Subalgebra s;
  s.center = center;

  if (format_pauli(center) == "ZZ") {
    // Standard set: the paper's slot order, signs from the pair rule.
    for (int slot = 0; slot < 6; ++slot) {
      const PhasedPauli want = parse_pauli(kStandardOrder[slot]);
      for (const SignedPair& sp : pairs) {
        if (sp.low.bare() == want.bare()) s.members[slot] = sp.low;
        if (sp.high.bare() == want.bare()) s.members[slot] = sp.high;
      }
    }
    return s;
  }

  for (int k = 0; k < 3; ++k) {
    s.members[k] = pairs[k].low;       // slots 2, 3, 4
    s.members[k + 3] = pairs[k].high;  // slots 5, 6, 7
  }
  return s;
}

std::vector<Subalgebra> enumerate_centers() {
  std::vector<Subalgebra> out;
  out.reserve(15);
  for (const PhasedPauli& c : nontrivial_bare_strings())
    out.push_back(canonicalize(c));
  return out;
}

FanoStructure fano(const Subalgebra& s) {
  std::vector<FanoLine> commuting, anticommuting;

  std::array<std::array<bool, 8>, 8> seen{};  // pair (i, j) already on a line
  for (int i = 1; i <= 7; ++i) {
    for (int j = i + 1; j <= 7; ++j) {
      if (seen[i][j]) continue;
      const PhasedPauli prod = multiply(s.element(i), s.element(j));
      int k = 0;
      for (int c = 1; c <= 7; ++c)
        if (s.element(c).bare() == prod.bare()) k = c;
      if (k == 0)
        throw Error(fmt::format(
            "fano: product X{}*X{} left the subalgebra of center {}", i, j,
            format_pauli(s.center)));
      seen[i][j] = seen[std::min(i, k)][std::max(i, k)] =
          seen[std::min(j, k)][std::max(j, k)] = true;

      const bool anti = !commutes(s.element(i), s.element(j));
      FanoLine line;
      line.anticommuting = anti;
      if (!anti) {
        line.members = {i, j, k};
        std::sort(line.members.begin(), line.members.end());
        commuting.push_back(line);
        continue;
      }
      // Orient so that X[a] * X[b] = +i X[c]; the product above already
      // tells us the direction for (i, j).
      const PhasedPauli kc = s.element(k);
      const int rel = (prod.phase_exp - kc.phase_exp + 4) % 4;
      if (rel == 1)
        line.members = {i, j, k};
      else
        line.members = {j, i, k};
      // Rotate the cycle so the smallest index leads.
      while (line.members[0] != *std::min_element(line.members.begin(),
                                                  line.members.end()))
        line.members = {line.members[1], line.members[2], line.members[0]};
      anticommuting.push_back(line);
    }
  }

  auto by_members = [](const FanoLine& a, const FanoLine& b) {
    return a.members < b.members;
  };
  std::sort(commuting.begin(), commuting.end(), by_members);
  std::sort(anticommuting.begin(), anticommuting.end(), by_members);

  if (commuting.size() != 3 || anticommuting.size() != 4)
    throw Error(fmt::format(
        "fano: expected 3 commuting and 4 anticommuting lines, found {} and {}",
        commuting.size(), anticommuting.size()));

  FanoStructure f;
  for (int k = 0; k < 3; ++k) f.lines[k] = commuting[k];
  for (int k = 0; k < 4; ++k) f.lines[3 + k] = anticommuting[k];
  for (int i = 1; i <= 7; ++i) f.node_labels[i - 1] = format_pauli(s.element(i));
  return f;
}

std::string export_fano_graph(const FanoStructure& f) {
  std::string out = "nodes 7\n";
  for (int i = 0; i < 7; ++i)
    out += fmt::format("node {} {}\n", i + 1, f.node_labels[i]);
  out += "lines 7\n";
  for (const FanoLine& line : f.lines) {
    out += fmt::format("line {} {} {} {}\n",
                       line.anticommuting ? "anticommuting" : "commuting",
                       line.members[0], line.members[1], line.members[2]);
  }
  return out;
}

}  // namespace xstates
