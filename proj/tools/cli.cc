// Copyright 2026 The qwgate Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.h"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "qwgate/evolve.h"
#include "qwgate/gates.h"
#include "qwgate/optimize.h"
#include "qwgate/spec_io.h"
#include "qwgate/tomography.h"

namespace qwgate::cli {
namespace {

using nlohmann::json;

// Options shared by every command that needs a lattice.
struct LatticeSource {
  std::string gate = "cnot";
  std::string spec_path;
  bool published = false;
  std::string units = "raw";
};

void add_lattice_options(CLI::App* cmd, LatticeSource& src) {
  cmd->add_option("--gate", src.gate, "Target gate")->capture_default_str();
  cmd->add_option("--spec", src.spec_path, "Lattice spec JSON file");
  cmd->add_flag("--paper-lattice", src.published, "Use the published lattice for --gate");
  cmd->add_option("--units", src.units, "Units of the spec file values")
      ->check(CLI::IsMember({"raw", "pi"}))
      ->capture_default_str();
}

// Text after the first ':' of a gate name, parsed as a pi-aware scalar.
double gate_angle(const std::string& gate) {
  const auto colon = gate.find(':');
  require(colon != std::string::npos, "gate '" + gate + "' needs an angle");
  return parse_scalar(std::string_view(gate).substr(colon + 1));
}

LatticeSpec published_lattice(const std::string& gate) {
  const std::string head = gate.substr(0, gate.find(':'));
  if (head == "cnot") return published_cnot_lattice();
  if (head == "double-cnot-3q") return published_3q_lattice();
  if (head == "hadamard") return analytic_gate_lattice(AnalyticGate::hadamard());
  if (head == "phase") return analytic_gate_lattice(AnalyticGate::phase(gate_angle(gate)));
  if (head == "rz") return analytic_gate_lattice(AnalyticGate::rz(gate_angle(gate)));
  if (head == "rx") return analytic_gate_lattice(AnalyticGate::rx(gate_angle(gate)));
  if (gate == "identity" || gate == "identity:1") {
    return analytic_gate_lattice(AnalyticGate::global_phase(0.0));
  }
  throw DomainError("no published lattice for gate '" + gate + "'");
}

LatticeSpec resolve_lattice(const LatticeSource& src) {
  require(src.spec_path.empty() || !src.published,
          "--spec and --paper-lattice are mutually exclusive");
  if (!src.spec_path.empty()) {
    return load_lattice(src.spec_path, src.units == "pi" ? Units::kPi : Units::kRaw);
  }
  require(src.published, "one of --spec or --paper-lattice is required");
  return published_lattice(src.gate);
}

json parse_json(const std::string& text) { return json::parse(text); }

void emit(std::ostream& out, const std::string& text, const std::string& path) {
  out << text;
  if (!path.empty()) write_text_file(path, text);
}

std::filesystem::path prepare_dir(const std::string& dir) {
  std::filesystem::path p(dir);
  std::filesystem::create_directories(p);
  return p;
}

// Full pipeline: build, exponentiate, extract, score.
GateScore pipeline_score(const GateTarget& target, const LatticeSpec& spec,
                         ComplexMatrix* logical_out) {
  const FockBasis basis(spec.sites(), target.n_qubits);
  const UnitaryMatrix u = unitary_at(build_hamiltonian(spec, basis), spec.evolution_time);
  const ComplexMatrix logical = extract_logical(u, logical_indices(target.n_qubits, basis));
  if (logical_out != nullptr) *logical_out = logical;
  return score_logical(target.matrix, logical);
}

struct VerifyArgs {
  LatticeSource src;
  double threshold = 0.99;
  std::string out_path;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  const GateTarget target = parse_gate(a.src.gate);
  const LatticeSpec spec = resolve_lattice(a.src);
  require(static_cast<int>(spec.sites()) == 2 * target.n_qubits,
          "spec has " + std::to_string(spec.sites()) + " sites but gate '" + target.name +
              "' needs " + std::to_string(2 * target.n_qubits));
  ComplexMatrix logical;
  const GateScore s = pipeline_score(target, spec, &logical);
  const json m = parse_json(matrix_to_json(logical));

  json doc;
  doc["gate"] = target.name;
  doc["sites"] = spec.sites();
  doc["fidelity"] = s.fidelity;
  doc["cost"] = s.cost;
  doc["leakage"] = s.leakage;
  doc["logical"] = {{"real", m["real"]}, {"imag", m["imag"]}};
  doc["threshold"] = a.threshold;
  doc["pass"] = s.fidelity >= a.threshold;
  if (target.n_qubits == 3 && a.src.gate.rfind("double-cnot-3q", 0) == 0) {
    json orderings = json::object();
    for (int q = 1; q <= 3; ++q) {
      orderings[std::to_string(q)] = score_logical(target_double_cnot_3q(q).matrix, logical).fidelity;
    }
    doc["target_qubit_fidelity"] = std::move(orderings);
  }
  emit(out, doc.dump(2) + "\n", a.out_path);
  return s.fidelity >= a.threshold ? kExitOk : kExitThreshold;
}

struct OptimizeArgs {
  std::string gate = "cnot";
  std::string jmax = "4pi";
  std::string gammamax;  // default depends on the command
  int starts = 64;
  std::uint64_t seed = 42;
  int max_evals = 5000;
  std::string time = "1";
  int threads = 0;
};

void add_optimize_options(CLI::App* cmd, OptimizeArgs& a) {
  cmd->add_option("--gate", a.gate, "Target gate")->capture_default_str();
  cmd->add_option("--jmax", a.jmax, "Hopping and on-site bound (accepts a pi suffix)")
      ->capture_default_str();
  cmd->add_option("--gammamax", a.gammamax, "Interaction bound (accepts a pi suffix)");
  cmd->add_option("--starts", a.starts, "Number of random starts")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--seed", a.seed, "RNG seed")->capture_default_str();
  cmd->add_option("--max-evals", a.max_evals, "Cost evaluations per start")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--time", a.time, "Evolution time")->capture_default_str();
  cmd->add_option("--threads", a.threads, "Worker threads (0: environment or hardware)")
      ->capture_default_str();
}

OptimizationConfig make_config(const OptimizeArgs& a, const std::string& default_gammamax) {
  OptimizationConfig c;
  c.j_max = parse_scalar(a.jmax);
  c.gamma_max = parse_scalar(a.gammamax.empty() ? default_gammamax : a.gammamax);
  c.n_starts = a.starts;
  c.rng_seed = a.seed;
  c.max_local_evals = a.max_evals;
  c.evolution_time = parse_scalar(a.time);
  c.threads = a.threads;
  c.check();
  return c;
}

struct SynthesizeArgs {
  OptimizeArgs opt;
  std::string out_dir;
};

int cmd_synthesize(const SynthesizeArgs& a, std::ostream& out) {
  const GateTarget target = parse_gate(a.opt.gate);
  const OptimizationConfig config = make_config(a.opt, "40pi");
  const OptimizationResult r = multistart(target, config);

  out << std::setprecision(10);
  out << "gate " << r.target_name << " starts " << config.n_starts << " seed " << config.rng_seed
      << "\n";
  out << "best fidelity " << r.best_score.fidelity << " cost " << r.best_score.cost
      << " leakage " << r.best_score.leakage << " run " << r.best_run << "\n";
  if (!r.mean_fidelity.empty()) {
    out << "final mean fidelity " << r.mean_fidelity.back() << " std " << r.std_fidelity.back()
        << " over " << r.mean_fidelity.size() << " evaluations\n";
  }
  if (!a.out_dir.empty()) {
    const auto dir = prepare_dir(a.out_dir);
    write_text_file((dir / "result.json").string(), result_to_json(r));
    save_lattice((dir / "spec.json").string(), r.best_spec);
    std::ostringstream csv;
    write_trajectory_csv(csv, r);
    write_text_file((dir / "trajectory.csv").string(), csv.str());
    out << "wrote " << (dir / "result.json").string() << ", " << (dir / "spec.json").string()
        << ", " << (dir / "trajectory.csv").string() << "\n";
  }
  return kExitOk;
}

struct SweepArgs {
  OptimizeArgs opt;
  std::string axis;
  std::string grid;
  std::string out_path;
};

std::vector<double> parse_grid(const std::string& text) {
  std::vector<double> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    require(!item.empty(), "empty grid entry in '" + text + "'");
    values.push_back(parse_scalar(item));
  }
  require(!values.empty(), "empty grid");
  return values;
}

int cmd_sweep(const SweepArgs& a, std::ostream& out) {
  const GateTarget target = parse_gate(a.opt.gate);
  SweepResult result;
  if (a.axis == "gamma") {
    const OptimizationConfig config = make_config(a.opt, "40pi");
    std::vector<double> grid;
    if (a.grid.empty()) {
      for (double ratio : default_gamma_ratios()) grid.push_back(ratio * config.j_max);
    } else {
      grid = parse_grid(a.grid);
    }
    result = sweep_gamma(target, config, grid);
  } else {
    const OptimizationConfig config = make_config(a.opt, "20pi");
    result = sweep_jmax(target, config, a.grid.empty() ? default_jmax_grid() : parse_grid(a.grid));
  }
  std::ostringstream csv;
  write_sweep_csv(csv, result);
  emit(out, csv.str(), a.out_path);
  return kExitOk;
}

struct EvolveArgs {
  LatticeSource src;
  std::string input;
  int points = 401;
  std::string out_path;
};

int cmd_evolve(const EvolveArgs& a, std::ostream& out) {
  const LatticeSpec spec = resolve_lattice(a.src);
  require(spec.sites() % 2 == 0, "spec must have an even number of sites");
  const int n_qubits = static_cast<int>(spec.sites()) / 2;
  require(static_cast<int>(a.input.size()) == n_qubits,
          "input '" + a.input + "' must have " + std::to_string(n_qubits) + " bits");
  unsigned bits = 0;
  for (char c : a.input) {
    require(c == '0' || c == '1', "input '" + a.input + "' must contain only 0 and 1");
    bits = (bits << 1) | static_cast<unsigned>(c - '0');
  }
  const FockBasis basis(spec.sites(), n_qubits);
  const auto times = uniform_times(spec.evolution_time, a.points);
  const DensityTrace trace =
      density_trace(build_hamiltonian(spec, basis), dual_rail_state(n_qubits, bits), basis, times);
  std::ostringstream csv;
  write_density_csv(csv, trace);
  emit(out, csv.str(), a.out_path);
  return kExitOk;
}

struct TomoArgs {
  LatticeSource src;
  bool ideal = false;
  int shots = 0;
  std::uint64_t seed = 42;
  std::string out_dir;
};

int cmd_tomo(const TomoArgs& a, std::ostream& out) {
  const GateTarget target = parse_gate(a.src.gate);
  require(target.n_qubits == 2, "tomography needs a two-qubit gate");
  const tomo::GateUnderTest gate =
      a.ideal ? tomo::GateUnderTest::logical(target.matrix)
              : tomo::GateUnderTest::lattice(resolve_lattice(a.src));
  std::vector<tomo::Record> records = tomo::simulate_all(gate);
  if (a.shots > 0) records = tomo::sample_shots(records, a.shots, a.seed);
  const tomo::ProcessMatrix chi = tomo::reconstruct_chi(records);
  const double fidelity = tomo::process_fidelity(chi.chi, tomo::chi_of_unitary(target.matrix));

  json doc;
  doc["gate"] = target.name;
  doc["mode"] = a.ideal ? "ideal" : "lattice";
  doc["settings"] = records.size();
  doc["shots"] = a.shots;
  doc["process_fidelity"] = fidelity;
  doc["mean_leakage"] = chi.mean_leakage;
  doc["trace_preservation_residual"] = tomo::trace_preservation_residual(chi.chi);
  out << doc.dump(2) << "\n";

  if (!a.out_dir.empty()) {
    const auto dir = prepare_dir(a.out_dir);
    std::ostringstream csv;
    tomo::write_records_csv(csv, records);
    write_text_file((dir / "records.csv").string(), csv.str());
    write_text_file((dir / "chi.json").string(), tomo::chi_to_json(chi));
  }
  return kExitOk;
}

struct DecomposeArgs {
  std::string matrix_path;
  std::string gate;
};

int cmd_decompose(const DecomposeArgs& a, std::ostream& out) {
  require(a.matrix_path.empty() != a.gate.empty(), "exactly one of --matrix or --gate is required");
  ComplexMatrix u;
  if (!a.matrix_path.empty()) {
    u = matrix_from_json(read_text_file(a.matrix_path));
  } else {
    const GateTarget target = parse_gate(a.gate);
    require(target.n_qubits == 1, "decompose needs a single-qubit gate");
    u = target.matrix;
  }
  const ZxzAngles angles = decompose_single_qubit(u);
  json doc;
  doc["alpha"] = angles.alpha;
  doc["beta"] = angles.beta;
  doc["gamma"] = angles.gamma;
  doc["delta"] = angles.delta;
  doc["reconstruction_error"] = (u - reconstruct_zxz(angles)).norm();
  out << doc.dump(2) << "\n";
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"qwgate: quantum gates from Bose-Hubbard lattices"};
  app.require_subcommand(1);

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Score a lattice against a target gate");
  add_lattice_options(verify_cmd, verify.src);
  verify_cmd->add_option("--threshold", verify.threshold, "Pass threshold on fidelity")
      ->capture_default_str();
  verify_cmd->add_option("--out", verify.out_path, "Also write the JSON report here");

  SynthesizeArgs synth;
  auto* synth_cmd = app.add_subcommand("synthesize", "Multistart search for a lattice");
  add_optimize_options(synth_cmd, synth.opt);
  synth_cmd->add_option("--out-dir", synth.out_dir,
                        "Directory for result.json, spec.json, trajectory.csv");

  SweepArgs sweep;
  auto* sweep_cmd = app.add_subcommand("sweep", "Best fidelity versus one bound");
  add_optimize_options(sweep_cmd, sweep.opt);
  sweep_cmd->add_option("--axis", sweep.axis, "Bound to sweep")
      ->required()
      ->check(CLI::IsMember({"gamma", "jmax"}));
  sweep_cmd->add_option("--grid", sweep.grid, "Comma-separated bound values (pi suffix ok)");
  sweep_cmd->add_option("--out", sweep.out_path, "Also write the CSV here");

  EvolveArgs evolve;
  auto* evolve_cmd = app.add_subcommand("evolve", "Site densities over [0, T]");
  add_lattice_options(evolve_cmd, evolve.src);
  evolve_cmd->add_option("--input", evolve.input, "Logical input bits, qubit 1 first")
      ->required();
  evolve_cmd->add_option("--points", evolve.points, "Number of time points")
      ->check(CLI::Range(2, 1000000))
      ->capture_default_str();
  evolve_cmd->add_option("--out", evolve.out_path, "Also write the CSV here");

  TomoArgs tomo_args;
  auto* tomo_cmd = app.add_subcommand("tomo", "Process tomography of a two-qubit lattice");
  add_lattice_options(tomo_cmd, tomo_args.src);
  tomo_cmd->add_flag("--ideal", tomo_args.ideal, "Use the ideal gate instead of a lattice");
  tomo_cmd->add_option("--shots", tomo_args.shots, "Shots per setting (0: exact)")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  tomo_cmd->add_option("--seed", tomo_args.seed, "Shot sampling seed")->capture_default_str();
  tomo_cmd->add_option("--out-dir", tomo_args.out_dir, "Directory for records.csv and chi.json");

  DecomposeArgs decompose;
  auto* decompose_cmd = app.add_subcommand("decompose", "ZXZ angles of a single-qubit unitary");
  decompose_cmd->add_option("--matrix", decompose.matrix_path, "Matrix JSON file");
  decompose_cmd->add_option("--gate", decompose.gate, "Named single-qubit gate");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (verify_cmd->parsed()) return cmd_verify(verify, out);
    if (synth_cmd->parsed()) return cmd_synthesize(synth, out);
    if (sweep_cmd->parsed()) return cmd_sweep(sweep, out);
    if (evolve_cmd->parsed()) return cmd_evolve(evolve, out);
    if (tomo_cmd->parsed()) return cmd_tomo(tomo_args, out);
    if (decompose_cmd->parsed()) return cmd_decompose(decompose, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace qwgate::cli
