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

// Command-line frontend: subalgebra enumeration, X-state construction and
// parametrization, concurrence, sweeps and channel evolution. Commands are
// pure filters: state JSON on stdin, JSON/CSV on stdout, single-line JSON
// error records on stderr, exit 0 iff no error was emitted.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "xstates/channels.hpp"
#include "xstates/entanglement.hpp"
#include "xstates/io.hpp"
#include "xstates/subalgebra.hpp"
#include "xstates/xstate.hpp"

namespace {

using namespace xstates;

std::string read_input(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin),
                       std::istreambuf_iterator<char>());
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(fmt::format("cannot open input file \"{}\"", path));
  return std::string(std::istreambuf_iterator<char>(in),
                     std::istreambuf_iterator<char>());
}

void write_output(const std::string& path, const std::string& content) {
  if (path == "-") {
    std::cout << content;
    if (!content.empty() && content.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(fmt::format("cannot open output file \"{}\"", path));
  out << content;
  if (!content.empty() && content.back() != '\n') out << '\n';
}

LoadedState load_valid_state(const std::string& input_path) {
  const LoadedState st = read_state_json(read_input(input_path));
  const ValidationReport rep = validate(st.rho);
  if (!rep.ok()) throw InvalidStateError(rep.summary());
  return st;
}

std::string cmd_subalgebras_list() {
  std::string out;
  for (const Subalgebra& s : enumerate_centers()) {
    out += fmt::format("center {} members", format_pauli(s.center));
    for (const PhasedPauli& m : s.members) out += " " + format_pauli(m);
    out += " pairs (2,5) (3,6) (4,7)\n";
  }
  return out;
}

std::string cmd_subalgebras_fano(const std::string& center, bool graph) {
  const Subalgebra s = canonicalize(parse_pauli(center));
  const FanoStructure f = fano(s);
  if (graph) return export_fano_graph(f);

  std::string out = fmt::format("center {}\nnodes:", format_pauli(s.center));
  for (int i = 0; i < 7; ++i)
    out += fmt::format(" {}={}", i + 1, f.node_labels[i]);
  out += "\n";
  for (const FanoLine& line : f.lines) {
    if (line.anticommuting)
      out += fmt::format("line anticommuting {} {} {}  X{}*X{} = +i*X{}\n",
                         line.members[0], line.members[1], line.members[2],
                         line.members[0], line.members[1], line.members[2]);
    else
      out += fmt::format("line commuting {} {} {}\n", line.members[0],
                         line.members[1], line.members[2]);
  }
  return out;
}

struct MakeOptions {
  std::optional<std::string> bell;
  std::optional<double> werner;
  std::optional<std::int64_t> random_seed;
  std::string center = "ZZ";
};

std::string cmd_xstate_make(const MakeOptions& opt) {
  const int given = (opt.bell ? 1 : 0) + (opt.werner ? 1 : 0) +
                    (opt.random_seed ? 1 : 0);
  if (given != 1)
    throw Error("xstate make needs exactly one of --bell, --werner, --random");

  DensityMatrix4 rho;
  const Subalgebra s = canonicalize(parse_pauli(opt.center));
  if (opt.bell) {
    BellState k;
    if (*opt.bell == "phi+") k = BellState::PhiPlus;
    else if (*opt.bell == "phi-") k = BellState::PhiMinus;
    else if (*opt.bell == "psi+") k = BellState::PsiPlus;
    else if (*opt.bell == "psi-") k = BellState::PsiMinus;
    else
      throw Error(fmt::format(
          "unknown Bell state \"{}\" (use phi+, phi-, psi+, psi-)", *opt.bell));
    rho = make_bell(k);
  } else if (opt.werner) {
    rho = make_werner(*opt.werner);
  } else {
    rho = make_random_x(s, static_cast<std::uint64_t>(*opt.random_seed));
  }
  return write_state_json(rho, g_from_rho(rho, s));
}

std::string cmd_xstate_params(const std::string& center,
                              const std::string& input) {
  const LoadedState st = load_valid_state(input);
  const Subalgebra s = canonicalize(parse_pauli(center));
  return write_gvector_json(g_from_rho(st.rho, s));
}

std::string cmd_xstate_project(const std::string& center,
                               const std::string& input) {
  const LoadedState st = load_valid_state(input);
  const Subalgebra s = canonicalize(parse_pauli(center));
  const DensityMatrix4 projected = project_to_x(st.rho, s);
  return write_state_json(projected, g_from_rho(projected, s));
}

std::string cmd_concurrence(const std::string& method, const std::string& center,
                            bool verbose, const std::string& input) {
  const LoadedState st = load_valid_state(input);
  const Subalgebra s = canonicalize(parse_pauli(center));

  auto render = [&](double c, const ConcurrenceSpectrum* sp) {
    std::string out = fmt::format("concurrence {}\n", csv_number(c));
    if (verbose && sp)
      out += fmt::format("spectrum {} {} {} {}\n", csv_number((*sp)[0]),
                         csv_number((*sp)[1]), csv_number((*sp)[2]),
                         csv_number((*sp)[3]));
    return out;
  };

  auto require_pattern = [&] {
    if (!is_x_pattern(st.rho, s))
      throw PatternError(fmt::format("state is not an X-state of center {}",
                                     format_pauli(s.center)),
                         max_abs_diff(st.rho.rho,
                                      project_to_x(st.rho, s).rho));
  };

  try {
    if (method == "closed") {
      require_pattern();
      const ConcurrenceSpectrum sp = spectrum_closed_form(g_from_rho(st.rho, s));
      return render(concurrence_from_spectrum(sp), &sp);
    }
    if (method == "entrywise") {
      require_pattern();
      return render(concurrence_entrywise(st.rho), nullptr);
    }
    if (method == "oracle") {
      const auto [c, sp] = concurrence_oracle(st.rho);
      return render(c, &sp);
    }
    if (method == "all") return comparison_to_json(compare_methods(st.rho, s));
  } catch (const PatternError& e) {
    throw PatternError(
        fmt::format("{} (project the state first: xstate project --center {})",
                    e.what(), center),
        e.deviation());
  }
  throw Error(fmt::format(
      "unknown method \"{}\" (use closed, entrywise, oracle, all)", method));
}

std::string sweep_csv_row(double p, const DensityMatrix4& rho,
                          const Subalgebra& s) {
  const MethodComparison cmp = compare_methods(rho, s);
  return fmt::format("{},{},{},{},{}\n", csv_number(p), csv_number(cmp.closed),
                     csv_number(cmp.entrywise), csv_number(cmp.oracle),
                     csv_number(cmp.max_concurrence_deviation));
}

std::string cmd_sweep_werner(int steps) {
  if (steps < 2) throw Error("sweep werner needs --steps >= 2");
  const Subalgebra s = canonicalize(parse_pauli("ZZ"));
  std::string out = "p,C_closed,C_entrywise,C_oracle,max_dev\n";
  for (int k = 0; k < steps; ++k) {
    const double p = static_cast<double>(k) / (steps - 1);
    out += sweep_csv_row(p, make_werner(p), s);
  }
  return out;
}

std::string cmd_sweep_custom(const std::string& g_path,
                             const std::string& center) {
  const Subalgebra s = canonicalize(parse_pauli(center));
  const nlohmann::json j = nlohmann::json::parse(read_input(g_path), nullptr, false);
  if (j.is_discarded() || !j.is_array())
    throw Error("custom sweep file must be a JSON array of g rows");

  std::string out = "p,C_closed,C_entrywise,C_oracle,max_dev\n";
  int row = 0;
  for (const nlohmann::json& entry : j) {
    GVector g;
    g.center = s.center;
    if (entry.is_array() && entry.size() == 7) {
      for (int i = 0; i < 7; ++i) g.g[i] = entry[i].get<double>();
    } else if (entry.is_object()) {
      g = read_gvector_json(entry.dump());
    } else {
      throw Error("each g row must be a 7-number array or a g-vector object");
    }
    const DensityMatrix4 rho = rho_from_g(g, s);
    const ValidationReport rep = validate(rho);
    if (!rep.ok())
      throw InvalidStateError(
          fmt::format("sweep row {}: {}", row, rep.summary()));
    out += sweep_csv_row(row, rho, s);
    ++row;
  }
  return out;
}

std::string cmd_evolve(const std::string& channel_path, int steps,
                       const std::string& input) {
  const LoadedState st = load_valid_state(input);
  const KrausChannel ch = read_channel_json(read_input(channel_path));
  return trace_to_csv(evolve_trace(st.rho, ch, steps));
}

const char* error_category(const std::exception& e) {
  if (dynamic_cast<const ParseError*>(&e)) return "parse";
  if (dynamic_cast<const NotHermitianError*>(&e)) return "not_hermitian";
  if (dynamic_cast<const NotPsdError*>(&e)) return "not_psd";
  if (dynamic_cast<const PatternError*>(&e)) return "pattern";
  if (dynamic_cast<const InvalidStateError*>(&e)) return "invalid_state";
  if (dynamic_cast<const IncompleteChannelError*>(&e)) return "incomplete_channel";
  if (dynamic_cast<const Error*>(&e)) return "error";
  return "internal";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two-qubit X-state algebra toolkit"};
  app.require_subcommand(1);
  app.fallthrough();  // so --output may follow a subcommand

  std::string center = "ZZ";
  std::string input = "-";
  std::string output = "-";

  // subalgebras
  CLI::App* subalgebras = app.add_subcommand(
      "subalgebras", "Enumerate su(2)xsu(2)xu(1) subalgebras");
  subalgebras->require_subcommand(1);
  subalgebras->add_subcommand("list", "All 15 centers with members and pairs");
  CLI::App* fano_cmd =
      subalgebras->add_subcommand("fano", "Fano lines of one subalgebra");
  bool graph = false;
  fano_cmd->add_option("--center", center, "Center Pauli string")
      ->capture_default_str();
  fano_cmd->add_flag("--graph", graph, "Emit graph-description text");

  // xstate
  CLI::App* xstate = app.add_subcommand("xstate", "Construct and transform states");
  xstate->require_subcommand(1);
  CLI::App* make = xstate->add_subcommand("make", "Emit a named state as JSON");
  MakeOptions mk;
  make->add_option("--bell", mk.bell, "Bell state: phi+, phi-, psi+, psi-");
  make->add_option("--werner", mk.werner, "Werner mixing parameter in [0,1]");
  make->add_option("--random", mk.random_seed, "Random X-state seed");
  make->add_option("--center", mk.center, "Subalgebra for --random and the g block")
      ->capture_default_str();
  CLI::App* params = xstate->add_subcommand("params", "g-vector of a state");
  params->add_option("--center", center, "Center Pauli string")
      ->capture_default_str();
  params->add_option("--input", input, "State JSON path or - for stdin")
      ->capture_default_str();
  CLI::App* project = xstate->add_subcommand("project", "Project onto the X pattern");
  project->add_option("--center", center, "Center Pauli string")
      ->capture_default_str();
  project->add_option("--input", input, "State JSON path or - for stdin")
      ->capture_default_str();

  // concurrence
  CLI::App* conc = app.add_subcommand("concurrence", "Concurrence of a state");
  std::string method = "all";
  bool verbose = false;
  conc->add_option("--method", method, "closed | entrywise | oracle | all")
      ->capture_default_str();
  conc->add_option("--center", center, "Center Pauli string")
      ->capture_default_str();
  conc->add_flag("--verbose", verbose, "Print the spectrum too");
  conc->add_option("--input", input, "State JSON path or - for stdin")
      ->capture_default_str();

  // sweep
  CLI::App* sweep = app.add_subcommand("sweep", "Concurrence sweeps as CSV");
  sweep->require_subcommand(1);
  CLI::App* sweep_werner = sweep->add_subcommand("werner", "Werner p grid");
  int steps = 101;
  sweep_werner->add_option("--steps", steps, "Grid points (>= 2)")
      ->capture_default_str();
  CLI::App* sweep_custom = sweep->add_subcommand("custom", "g rows from a file");
  std::string g_path;
  sweep_custom->add_option("--g-path", g_path, "JSON array of g rows")
      ->required();
  sweep_custom->add_option("--center", center, "Center Pauli string")
      ->capture_default_str();

  // evolve
  CLI::App* evolve = app.add_subcommand("evolve", "Iterate a Kraus channel");
  std::string channel_path;
  int evolve_steps = 1;
  evolve->add_option("--channel", channel_path, "Channel JSON path")->required();
  evolve->add_option("--steps", evolve_steps, "Number of applications (>= 1)")
      ->capture_default_str();
  evolve->add_option("--input", input, "State JSON path or - for stdin")
      ->capture_default_str();

  app.add_option("--output", output, "Output path or - for stdout")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    const nlohmann::json err{{"error", "usage"}, {"message", e.what()}};
    std::cerr << err.dump() << '\n';
    return 1;
  }

  try {
    std::string result;
    if (subalgebras->parsed()) {
      if (subalgebras->get_subcommand("list")->parsed())
        result = cmd_subalgebras_list();
      else
        result = cmd_subalgebras_fano(center, graph);
    } else if (xstate->parsed()) {
      if (make->parsed()) result = cmd_xstate_make(mk);
      else if (params->parsed()) result = cmd_xstate_params(center, input);
      else result = cmd_xstate_project(center, input);
    } else if (conc->parsed()) {
      result = cmd_concurrence(method, center, verbose, input);
    } else if (sweep->parsed()) {
      if (sweep_werner->parsed()) result = cmd_sweep_werner(steps);
      else result = cmd_sweep_custom(g_path, center);
    } else if (evolve->parsed()) {
      result = cmd_evolve(channel_path, evolve_steps, input);
    }
    write_output(output, result);
  } catch (const std::exception& e) {
    const nlohmann::json err{{"error", error_category(e)}, {"message", e.what()}};
    std::cerr << err.dump() << '\n';
    return 1;
  }
  return 0;
}
