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

#ifndef QWGATE_OPTIMIZE_H
#define QWGATE_OPTIMIZE_H

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "qwgate/gates.h"
#include "qwgate/local_search.h"
#include "qwgate/logical.h"

namespace qwgate {

struct OptimizationConfig {
  double j_max = 4.0 * kPi;
  double gamma_max = 40.0 * kPi;
  int n_starts = 64;
  int max_local_evals = 5000;
  std::uint64_t rng_seed = 42;
  double local_tolerance = 1e-10;
  double evolution_time = 1.0;
  /// Worker threads; 0 means QWGATE_THREADS or the hardware concurrency.
  int threads = 0;

  /// Throws DomainError unless j_max, gamma_max > 0, n_starts >= 1 and
  /// max_local_evals >= 1.
  void check() const;
};

/// Flat parameter vector for a lattice with m sites:
/// [E_1..E_m, J_1..J_{m-1}, interaction], 2m entries.
Eigen::VectorXd encode_params(const LatticeSpec& spec);
/// Inverse of encode_params. Hoppings are clamped to <= 0.
LatticeSpec decode_params(const Eigen::VectorXd& params, int sites,
                          double evolution_time = 1.0);

/// Box |E| <= j_max, -j_max <= J <= 0, 0 <= interaction <= gamma_max in the
/// encode_params layout.
Box parameter_box(int sites, double j_max, double gamma_max);

/// Everything needed to score a parameter vector against one target gate.
/// Immutable and safe to share between threads.
class GateProblem {
 public:
  GateProblem(GateTarget target, double evolution_time = 1.0);

  const GateTarget& target() const { return target_; }
  int sites() const { return 2 * target_.n_qubits; }
  Eigen::Index parameter_count() const { return 2 * sites(); }
  const FockBasis& basis() const { return basis_; }
  const DualRailEncoding& encoding() const { return encoding_; }
  double evolution_time() const { return evolution_time_; }

  /// Logical submatrix of exp(-i H T) for the decoded parameters.
  ComplexMatrix logical_unitary(const LatticeSpec& spec) const;
  GateScore score(const LatticeSpec& spec) const;
  GateScore score(const Eigen::VectorXd& params) const;
  /// (1 - F^2) + sin^2(arg u11). Throws DomainError on non-finite input.
  double cost(const Eigen::VectorXd& params) const;

 private:
  GateTarget target_;
  double evolution_time_;
  FockBasis basis_;
  HamiltonianStencil stencil_;
  DualRailEncoding encoding_;
};

struct OptimizationRun {
  int run_index = 0;
  /// Best cost so far after each evaluation (non-increasing).
  std::vector<double> cost_trajectory;
  /// Fidelity of the incumbent after each evaluation.
  std::vector<double> fidelity_trajectory;
  Eigen::VectorXd final_params;
  GateScore final_score;
  int evaluations = 0;
};

struct OptimizationResult {
  OptimizationConfig config;
  std::string target_name;
  LatticeSpec best_spec;
  GateScore best_score;
  int best_run = 0;
  std::vector<OptimizationRun> runs;
  /// Mean and standard deviation of the incumbent fidelity across runs,
  /// one entry per evaluation. Runs that stopped early hold their final
  /// value.
  std::vector<double> mean_fidelity;
  std::vector<double> std_fidelity;
};

/// Start point of run `run_index`, uniform in the box. Depends only on
/// (seed, run_index).
Eigen::VectorXd start_point(const Box& box, std::uint64_t seed, int run_index);

/// One local descent from start_point(box, seed, run_index).
OptimizationRun optimize_run(const GateProblem& problem, const OptimizationConfig& config,
                             int run_index);

/// n_starts independent runs; best fidelity is the max over runs (ties go
/// to the lower cost, then the lower run index). Bit-identical for a fixed
/// config regardless of thread count.
OptimizationResult multistart(const GateTarget& target, const OptimizationConfig& config);

struct SweepPoint {
  double bound_value = 0.0;
  double best_fidelity = 0.0;
  int n_starts = 0;
  LatticeSpec best_spec;
};

struct SweepResult {
  std::string axis;  // "gamma" or "jmax"
  std::vector<SweepPoint> points;
};

/// Multistart at each gamma_max in `gamma_values` (positive, ascending),
/// holding config.j_max fixed.
SweepResult sweep_gamma(const GateTarget& target, const OptimizationConfig& config,
                        const std::vector<double>& gamma_values);
/// Multistart at each j_max in `jmax_values` (positive, ascending), holding
/// config.gamma_max fixed.
SweepResult sweep_jmax(const GateTarget& target, const OptimizationConfig& config,
                       const std::vector<double>& jmax_values);

/// Default grids: gamma_max / j_max in {0.25, 0.5, 1, 2, 3, 5, 10} and
/// j_max in {1, 2, 3, 4, 6} pi.
std::vector<double> default_gamma_ratios();
std::vector<double> default_jmax_grid();

/// Result JSON: config echo, best spec, best score, per-run final
/// fidelities, mean/std fidelity trajectories.
std::string result_to_json(const OptimizationResult& result);
/// `evaluation,mean_fidelity,std_fidelity`.
void write_trajectory_csv(std::ostream& os, const OptimizationResult& result);
/// `bound_value,best_fidelity,n_starts`.
void write_sweep_csv(std::ostream& os, const SweepResult& sweep);

/// Thread count used when OptimizationConfig::threads is 0.
int default_thread_count();

}  // namespace qwgate

#endif  // QWGATE_OPTIMIZE_H
