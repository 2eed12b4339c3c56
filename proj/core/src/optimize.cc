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

#include "qwgate/optimize.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <iomanip>
#include <limits>
#include <mutex>
#include <random>
#include <thread>

#include "json.hpp"
#include "qwgate/spec_io.h"

namespace qwgate {

using cplx = std::complex<double>;

void OptimizationConfig::check() const {
  require(std::isfinite(j_max) && j_max > 0.0, "OptimizationConfig: j_max must be > 0");
  require(std::isfinite(gamma_max) && gamma_max > 0.0,
          "OptimizationConfig: gamma_max must be > 0");
  require(n_starts >= 1, "OptimizationConfig: n_starts must be >= 1");
  require(max_local_evals >= 1, "OptimizationConfig: max_local_evals must be >= 1");
  require(local_tolerance >= 0.0, "OptimizationConfig: local_tolerance must be >= 0");
  require(evolution_time > 0.0, "OptimizationConfig: evolution_time must be > 0");
  require(threads >= 0, "OptimizationConfig: threads must be >= 0");
}

Eigen::VectorXd encode_params(const LatticeSpec& spec) {
  const auto m = static_cast<Eigen::Index>(spec.sites());
  require(m >= 1 && static_cast<Eigen::Index>(spec.hoppings.size()) == m - 1,
          "encode_params: hoppings must have length sites - 1");
  Eigen::VectorXd x(2 * m);
  for (Eigen::Index i = 0; i < m; ++i) x(i) = spec.onsite[static_cast<std::size_t>(i)];
  for (Eigen::Index i = 0; i + 1 < m; ++i) x(m + i) = spec.hoppings[static_cast<std::size_t>(i)];
  x(2 * m - 1) = spec.interaction;
  return x;
}

LatticeSpec decode_params(const Eigen::VectorXd& params, int sites, double evolution_time) {
  require(sites >= 1, "decode_params: sites must be >= 1");
  require(params.size() == 2 * sites, "decode_params: vector length must be 2 * sites");
  const Eigen::Index m = sites;
  LatticeSpec spec;
  spec.onsite.resize(static_cast<std::size_t>(m));
  spec.hoppings.resize(static_cast<std::size_t>(m - 1));
  for (Eigen::Index i = 0; i < m; ++i) spec.onsite[static_cast<std::size_t>(i)] = params(i);
  for (Eigen::Index i = 0; i + 1 < m; ++i) {
    spec.hoppings[static_cast<std::size_t>(i)] = std::min(params(m + i), 0.0);
  }
  spec.interaction = params(2 * m - 1);
  spec.evolution_time = evolution_time;
  return spec;
}

Box parameter_box(int sites, double j_max, double gamma_max) {
  require(sites >= 1, "parameter_box: sites must be >= 1");
  const Eigen::Index m = sites;
  Box box{Eigen::VectorXd(2 * m), Eigen::VectorXd(2 * m)};
  for (Eigen::Index i = 0; i < m; ++i) {
    box.lower(i) = -j_max;
    box.upper(i) = j_max;
  }
  for (Eigen::Index i = 0; i + 1 < m; ++i) {
    box.lower(m + i) = -j_max;
    box.upper(m + i) = 0.0;
  }
  box.lower(2 * m - 1) = 0.0;
  box.upper(2 * m - 1) = gamma_max;
  return box;
}

GateProblem::GateProblem(GateTarget target, double evolution_time)
    : target_(std::move(target)),
      evolution_time_(evolution_time),
      basis_(2 * target_.n_qubits, target_.n_qubits),
      stencil_(basis_),
      encoding_(logical_indices(target_.n_qubits, basis_)) {
  require(evolution_time > 0.0, "GateProblem: evolution_time must be > 0");
  require(target_.matrix.rows() == encoding_.dimension() &&
              target_.matrix.cols() == encoding_.dimension(),
          "GateProblem: target dimension must be 2^n_qubits");
}

ComplexMatrix GateProblem::logical_unitary(const LatticeSpec& spec) const {
  RealMatrix h;
  stencil_.assemble(spec, h);
  Eigen::SelfAdjointEigenSolver<RealMatrix> solver(h);
  require(solver.info() == Eigen::Success, "GateProblem: eigensolver failed");
  const RealMatrix& v = solver.eigenvectors();
  const Eigen::VectorXd& w = solver.eigenvalues();
  const Eigen::Index n = encoding_.dimension();
  // Only the logical rows of V are needed: U_L = V_L diag(e^{-i w T}) V_L^T.
  RealMatrix vl(n, v.cols());
  for (Eigen::Index r = 0; r < n; ++r) vl.row(r) = v.row(encoding_.indices[static_cast<std::size_t>(r)]);
  Eigen::VectorXcd phases(w.size());
  for (Eigen::Index k = 0; k < w.size(); ++k) phases(k) = std::polar(1.0, -w(k) * spec.evolution_time);
  const ComplexMatrix left = vl.cast<cplx>() * phases.asDiagonal();
  return left * vl.transpose().cast<cplx>();
}

GateScore GateProblem::score(const LatticeSpec& spec) const {
  return score_logical(target_.matrix, logical_unitary(spec));
}

GateScore GateProblem::score(const Eigen::VectorXd& params) const {
  require(params.allFinite(), "cost: parameters must be finite");
  return score(decode_params(params, sites(), evolution_time_));
}

double GateProblem::cost(const Eigen::VectorXd& params) const { return score(params).cost; }

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

Eigen::VectorXd start_point(const Box& box, std::uint64_t seed, int run_index) {
  // mt19937_64 output is fixed by the standard; the conversion to [0, 1) is
  // done by hand because std::uniform_real_distribution is not portable.
  std::mt19937_64 rng(splitmix64(seed ^ splitmix64(static_cast<std::uint64_t>(run_index))));
  Eigen::VectorXd x(box.size());
  for (Eigen::Index i = 0; i < box.size(); ++i) {
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    x(i) = box.lower(i) + u * (box.upper(i) - box.lower(i));
  }
  return box.clamp(x);
}

OptimizationRun optimize_run(const GateProblem& problem, const OptimizationConfig& config,
                             int run_index) {
  config.check();
  const Box box = parameter_box(problem.sites(), config.j_max, config.gamma_max);
  const Eigen::VectorXd x0 = start_point(box, config.rng_seed, run_index);

  OptimizationRun run;
  run.run_index = run_index;
  run.fidelity_trajectory.reserve(static_cast<std::size_t>(config.max_local_evals));
  double incumbent = std::numeric_limits<double>::infinity();
  double incumbent_fidelity = 0.0;
  const Objective objective = [&](const Eigen::VectorXd& x) {
    const GateScore s = problem.score(x);
    // Same strict-improvement rule local_minimize uses for its incumbent.
    if (s.cost < incumbent) {
      incumbent = s.cost;
      incumbent_fidelity = s.fidelity;
    }
    run.fidelity_trajectory.push_back(incumbent_fidelity);
    return s.cost;
  };

  LocalSearchOptions options;
  options.max_evals = config.max_local_evals;
  options.tolerance = config.local_tolerance;
  LocalSearchResult local = local_minimize(objective, x0, box, options);

  run.cost_trajectory = std::move(local.trajectory);
  run.final_params = local.x;
  run.final_score = problem.score(local.x);
  run.evaluations = local.evaluations;
  return run;
}

int default_thread_count() {
  if (const char* env = std::getenv("QWGATE_THREADS")) {
    char* end = nullptr;
    const long n = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && n >= 1 && n <= 1024) return static_cast<int>(n);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

namespace {

void aggregate(OptimizationResult& result) {
  std::size_t length = 0;
  for (const auto& run : result.runs) length = std::max(length, run.fidelity_trajectory.size());
  result.mean_fidelity.assign(length, 0.0);
  result.std_fidelity.assign(length, 0.0);
  const double count = static_cast<double>(result.runs.size());
  for (std::size_t k = 0; k < length; ++k) {
    double sum = 0.0;
    double sum_sq = 0.0;
    for (const auto& run : result.runs) {
      const auto& t = run.fidelity_trajectory;
      const double f = t.empty() ? 0.0 : t[std::min(k, t.size() - 1)];
      sum += f;
      sum_sq += f * f;
    }
    const double mean = sum / count;
    result.mean_fidelity[k] = mean;
    result.std_fidelity[k] = std::sqrt(std::max(0.0, sum_sq / count - mean * mean));
  }
}

}  // namespace

OptimizationResult multistart(const GateTarget& target, const OptimizationConfig& config) {
  config.check();
  const GateProblem problem(target, config.evolution_time);

  OptimizationResult result;
  result.config = config;
  result.target_name = target.name;
  result.runs.resize(static_cast<std::size_t>(config.n_starts));

  const int threads =
      std::min(config.threads > 0 ? config.threads : default_thread_count(), config.n_starts);
  std::atomic<int> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (int i = next++; i < config.n_starts; i = next++) {
      try {
        result.runs[static_cast<std::size_t>(i)] = optimize_run(problem, config, i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  std::size_t best = 0;
  for (std::size_t i = 1; i < result.runs.size(); ++i) {
    const GateScore& a = result.runs[i].final_score;
    const GateScore& b = result.runs[best].final_score;
    if (a.fidelity > b.fidelity || (a.fidelity == b.fidelity && a.cost < b.cost)) best = i;
  }
  result.best_run = static_cast<int>(best);
  result.best_score = result.runs[best].final_score;
  result.best_spec =
      decode_params(result.runs[best].final_params, problem.sites(), config.evolution_time);
  aggregate(result);
  return result;
}

namespace {

void check_grid(const std::vector<double>& values, const char* what) {
  require(!values.empty(), std::string(what) + ": grid is empty");
  for (std::size_t i = 0; i < values.size(); ++i) {
    require(std::isfinite(values[i]) && values[i] > 0.0,
            std::string(what) + ": grid values must be positive");
    require(i == 0 || values[i] > values[i - 1],
            std::string(what) + ": grid must be strictly ascending");
  }
}

SweepPoint sweep_point(const GateTarget& target, const OptimizationConfig& config,
                       double bound) {
  const OptimizationResult r = multistart(target, config);
  return {bound, r.best_score.fidelity, config.n_starts, r.best_spec};
}

}  // namespace

SweepResult sweep_gamma(const GateTarget& target, const OptimizationConfig& config,
                        const std::vector<double>& gamma_values) {
  check_grid(gamma_values, "sweep_gamma");
  SweepResult sweep{"gamma", {}};
  for (double g : gamma_values) {
    OptimizationConfig c = config;
    c.gamma_max = g;
    sweep.points.push_back(sweep_point(target, c, g));
  }
  return sweep;
}

SweepResult sweep_jmax(const GateTarget& target, const OptimizationConfig& config,
                       const std::vector<double>& jmax_values) {
  check_grid(jmax_values, "sweep_jmax");
  SweepResult sweep{"jmax", {}};
  for (double j : jmax_values) {
    OptimizationConfig c = config;
    c.j_max = j;
    sweep.points.push_back(sweep_point(target, c, j));
  }
  return sweep;
}

std::vector<double> default_gamma_ratios() { return {0.25, 0.5, 1.0, 2.0, 3.0, 5.0, 10.0}; }

std::vector<double> default_jmax_grid() {
  return {1.0 * kPi, 2.0 * kPi, 3.0 * kPi, 4.0 * kPi, 6.0 * kPi};
}

std::string result_to_json(const OptimizationResult& result) {
  using nlohmann::json;
  const OptimizationConfig& c = result.config;
  json doc;
  doc["target"] = result.target_name;
  doc["config"] = {{"j_max", c.j_max},
                   {"gamma_max", c.gamma_max},
                   {"n_starts", c.n_starts},
                   {"max_local_evals", c.max_local_evals},
                   {"rng_seed", c.rng_seed},
                   {"local_tolerance", c.local_tolerance},
                   {"evolution_time", c.evolution_time}};
  doc["best_spec"] = json::parse(lattice_to_json(result.best_spec));
  doc["best_score"] = {{"fidelity", result.best_score.fidelity},
                       {"cost", result.best_score.cost},
                       {"leakage", result.best_score.leakage}};
  doc["best_run"] = result.best_run;
  json runs = json::array();
  for (std::size_t k = 0; k < result.runs.size(); ++k) {
    const OptimizationRun& run = result.runs[k];
    runs.push_back({{"run", k},
                    {"fidelity", run.final_score.fidelity},
                    {"cost", run.final_score.cost},
                    {"evaluations", run.evaluations},
                    {"params", std::vector<double>(run.final_params.begin(), run.final_params.end())}});
  }
  doc["runs"] = runs;
  doc["mean_fidelity"] = result.mean_fidelity;
  doc["std_fidelity"] = result.std_fidelity;
  return doc.dump(2) + "\n";
}

void write_trajectory_csv(std::ostream& os, const OptimizationResult& result) {
  const auto saved = os.precision();
  os << "evaluation,mean_fidelity,std_fidelity\n" << std::setprecision(12);
  for (std::size_t k = 0; k < result.mean_fidelity.size(); ++k) {
    os << (k + 1) << "," << result.mean_fidelity[k] << "," << result.std_fidelity[k] << "\n";
  }
  os.precision(saved);
}

void write_sweep_csv(std::ostream& os, const SweepResult& sweep) {
  const auto saved = os.precision();
  os << "bound_value,best_fidelity,n_starts\n" << std::setprecision(12);
  for (const auto& p : sweep.points) {
    os << p.bound_value << "," << p.best_fidelity << "," << p.n_starts << "\n";
  }
  os.precision(saved);
}

}  // namespace qwgate
