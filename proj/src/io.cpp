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

#include "xstates/io.hpp"

#include <fmt/format.h>
#include <nlohmann/json.hpp>

namespace xstates {

using nlohmann::json;

namespace {

json complex_to_json(const cplx& z) { return json::array({z.real(), z.imag()}); }

cplx complex_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw Error("expected a complex value as a [re, im] pair");
  return {j[0].get<double>(), j[1].get<double>()};
}

json matrix_to_json(const ComplexMatrix4& m) {
  json rows = json::array();
  for (int i = 0; i < 4; ++i) {
    json row = json::array();
    for (int j = 0; j < 4; ++j) row.push_back(complex_to_json(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

ComplexMatrix4 matrix_from_json(const json& j) {
  if (!j.is_array() || j.size() != 4)
    throw Error("expected \"rho\" to be a 4x4 array of [re, im] pairs");
  ComplexMatrix4 m;
  for (int i = 0; i < 4; ++i) {
    if (!j[i].is_array() || j[i].size() != 4)
      throw Error("expected \"rho\" to be a 4x4 array of [re, im] pairs");
    for (int k = 0; k < 4; ++k) m(i, k) = complex_from_json(j[i][k]);
  }
  return m;
}

json gvector_to_json(const GVector& g) {
  return json{{"center", format_pauli(g.center)},
              {"values", g.g}};
}

GVector gvector_from_json(const json& j) {
  if (!j.is_object() || !j.contains("center") || !j.contains("values"))
    throw Error("expected a g-vector object with \"center\" and \"values\"");
  GVector g;
  g.center = parse_pauli(j.at("center").get<std::string>());
  const json& vals = j.at("values");
  if (!vals.is_array() || vals.size() != 7)
    throw Error("expected \"values\" to hold exactly seven reals");
  for (int i = 0; i < 7; ++i) {
    if (!vals[i].is_number()) throw Error("g values must be numbers");
    g.g[i] = vals[i].get<double>();
  }
  return g;
}

json parse_text(std::string_view text, const char* what) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded())
    throw Error(fmt::format("malformed {} JSON", what));
  return j;
}

json spectrum_to_json(const ConcurrenceSpectrum& sp) {
  return json(sp.values);
}

}  // namespace

std::string write_state_json(const DensityMatrix4& rho,
                             const std::optional<GVector>& g) {
  json j{{"basis", "std"}, {"rho", matrix_to_json(rho.rho)}};
  if (g) j["g"] = gvector_to_json(*g);
  return j.dump();
}

LoadedState read_state_json(std::string_view text) {
  json j = parse_text(text, "state");

  // A bare g object is accepted as shorthand for {"g": ...}.
  if (j.is_object() && j.contains("center") && j.contains("values") &&
      !j.contains("rho"))
    j = json{{"g", j}};

  if (!j.is_object() || (!j.contains("rho") && !j.contains("g")))
    throw Error("state JSON needs a \"rho\" matrix, a \"g\" block, or both");

  if (j.contains("basis") && j.at("basis") != "std")
    throw Error(fmt::format("unsupported basis \"{}\" (only \"std\")",
                            j.at("basis").get<std::string>()));

  LoadedState st;
  if (j.contains("g")) st.g = gvector_from_json(j.at("g"));

  if (j.contains("rho")) {
    st.rho.rho = matrix_from_json(j.at("rho"));
    if (!all_finite(st.rho.rho)) throw Error("state JSON has non-finite entries");
    if (st.g) {
      const DensityMatrix4 from_g = rho_from_g(*st.g, canonicalize(st.g->center));
      const double dev = max_abs_diff(st.rho.rho, from_g.rho);
      if (dev > kStateAgreementTol)
        throw Error(fmt::format(
            "state JSON \"rho\" and \"g\" disagree by {:.3e} (tolerance {:.1e})",
            dev, kStateAgreementTol));
    }
  } else {
    st.rho = rho_from_g(*st.g, canonicalize(st.g->center));
  }
  return st;
}

std::string write_gvector_json(const GVector& g) {
  return gvector_to_json(g).dump();
}

GVector read_gvector_json(std::string_view text) {
  return gvector_from_json(parse_text(text, "g-vector"));
}

std::string write_channel_json(const KrausChannel& ch) {
  json ops = json::array();
  for (const KrausCoefficients& c : ch.kraus) {
    json coeffs = json::array();
    for (const cplx& z : c) coeffs.push_back(complex_to_json(z));
    ops.push_back(coeffs);
  }
  return json{{"center", format_pauli(ch.center)}, {"kraus", ops}}.dump();
}

KrausChannel read_channel_json(std::string_view text) {
  const json j = parse_text(text, "channel");
  if (!j.is_object() || !j.contains("center") || !j.contains("kraus"))
    throw Error("channel JSON needs \"center\" and \"kraus\"");
  KrausChannel ch;
  ch.center = parse_pauli(j.at("center").get<std::string>());
  const json& ops = j.at("kraus");
  if (!ops.is_array() || ops.empty())
    throw Error("channel JSON needs at least one Kraus operator");
  for (const json& op : ops) {
    if (!op.is_array() || op.size() != 8)
      throw Error("each Kraus operator needs eight [re, im] coefficients");
    KrausCoefficients c;
    for (int i = 0; i < 8; ++i) c[i] = complex_from_json(op[i]);
    ch.kraus.push_back(c);
  }
  return ch;
}

std::string comparison_to_json(const MethodComparison& cmp) {
  return json{{"closed",
               {{"concurrence", cmp.closed},
                {"spectrum", spectrum_to_json(cmp.closed_spectrum)}}},
              {"entrywise", {{"concurrence", cmp.entrywise}}},
              {"oracle",
               {{"concurrence", cmp.oracle},
                {"spectrum", spectrum_to_json(cmp.oracle_spectrum)}}},
              {"max_spectrum_deviation", cmp.max_spectrum_deviation},
              {"max_concurrence_deviation", cmp.max_concurrence_deviation}}
      .dump();
}

std::string validation_to_json(const ValidationReport& rep) {
  json j{{"ok", rep.ok()},
         {"hermiticity_deviation", rep.hermiticity_deviation},
         {"trace_deviation", rep.trace_deviation},
         {"failures", rep.failures}};
  if (rep.psd_evaluated) j["min_eigenvalue"] = rep.min_eigenvalue;
  if (rep.failing_block) j["failing_block"] = *rep.failing_block;
  return j.dump();
}

std::string csv_number(double v) { return fmt::format("{:.16e}", v); }

std::string trace_to_csv(const std::vector<TraceRow>& rows) {
  std::string out = "step,g1,g2,g3,g4,g5,g6,g7,concurrence\n";
  for (const TraceRow& row : rows) {
    out += fmt::format("{}", row.step);
    for (double v : row.g.g) out += "," + csv_number(v);
    out += "," + csv_number(row.concurrence) + "\n";
  }
  return out;
}

}  // namespace xstates
