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

#include "qwgate/local_search.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "qwgate/error.h"

namespace qwgate {

bool Box::contains(const Eigen::VectorXd& x) const {
  return x.size() == lower.size() && (x.array() >= lower.array()).all() &&
         (x.array() <= upper.array()).all();
}

Eigen::VectorXd Box::clamp(const Eigen::VectorXd& x) const {
  return x.cwiseMax(lower).cwiseMin(upper);
}

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Objective wrapper in unit-cube coordinates over the free (non-degenerate)
// axes. Tracks the incumbent and the best-so-far trajectory.
class ScaledProblem {
 public:
  ScaledProblem(const Objective& objective, const Box& box, const Eigen::VectorXd& x0,
                int max_evals, std::vector<double>& trajectory)
      : objective_(objective), box_(box), base_(x0), max_evals_(max_evals),
        trajectory_(trajectory) {
    for (Eigen::Index i = 0; i < box.size(); ++i) {
      if (box.upper(i) > box.lower(i)) free_.push_back(i);
    }
  }

  Eigen::Index dims() const { return static_cast<Eigen::Index>(free_.size()); }
  bool exhausted() const { return evals_ >= max_evals_; }
  int evaluations() const { return evals_; }
  const Eigen::VectorXd& best_x() const { return best_x_; }
  double best_value() const { return best_value_; }

  Eigen::VectorXd to_unit(const Eigen::VectorXd& x) const {
    Eigen::VectorXd y(dims());
    for (Eigen::Index k = 0; k < dims(); ++k) {
      const Eigen::Index i = free_[static_cast<std::size_t>(k)];
      y(k) = (x(i) - box_.lower(i)) / (box_.upper(i) - box_.lower(i));
    }
    return y;
  }

  Eigen::VectorXd to_box(const Eigen::VectorXd& y) const {
    Eigen::VectorXd x = base_;
    for (Eigen::Index k = 0; k < dims(); ++k) {
      const Eigen::Index i = free_[static_cast<std::size_t>(k)];
      const double t = std::clamp(y(k), 0.0, 1.0);
      x(i) = box_.lower(i) + t * (box_.upper(i) - box_.lower(i));
    }
    return box_.clamp(x);
  }

  double operator()(const Eigen::VectorXd& y) {
    const Eigen::VectorXd x = to_box(y);
    double f = objective_(x);
    if (!std::isfinite(f)) f = kInf;
    ++evals_;
    if (f < best_value_) {
      best_value_ = f;
      best_x_ = x;
    }
    trajectory_.push_back(best_value_);
    return f;
  }

 private:
  const Objective& objective_;
  const Box& box_;
  Eigen::VectorXd base_;
  int max_evals_;
  std::vector<double>& trajectory_;
  std::vector<Eigen::Index> free_;
  int evals_ = 0;
  Eigen::VectorXd best_x_;
  double best_value_ = kInf;
};

Eigen::VectorXd project_unit(Eigen::VectorXd y) { return y.cwiseMax(0.0).cwiseMin(1.0); }

// One Nelder-Mead descent from `start`. Returns when both the value spread and
// the diameter of the simplex are within tolerance, or the budget runs out.
void nelder_mead(ScaledProblem& problem, const Eigen::VectorXd& start, double start_value,
                 double step, double tolerance, double x_tolerance, double target) {
  const Eigen::Index n = problem.dims();
  const double dn = static_cast<double>(n);
  const double expand = 1.0 + 2.0 / dn;
  const double contract = 0.75 - 1.0 / (2.0 * dn);
  const double shrink = 1.0 - 1.0 / dn;

  std::vector<Eigen::VectorXd> simplex;
  std::vector<double> values;
  simplex.reserve(static_cast<std::size_t>(n + 1));
  simplex.push_back(start);
  values.push_back(start_value);
  for (Eigen::Index i = 0; i < n && !problem.exhausted(); ++i) {
    Eigen::VectorXd v = start;
    v(i) += (v(i) + step <= 1.0) ? step : -step;
    simplex.push_back(v);
    values.push_back(problem(v));
  }
  if (static_cast<Eigen::Index>(simplex.size()) < n + 1) return;

  std::vector<std::size_t> order(simplex.size());
  while (!problem.exhausted()) {
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    const std::size_t best = order.front();
    const std::size_t worst = order.back();
    const std::size_t second_worst = order[order.size() - 2];

    if (values[best] <= target) return;
    double diameter = 0.0;
    for (const auto& v : simplex) {
      diameter = std::max(diameter, (v - simplex[best]).lpNorm<Eigen::Infinity>());
    }
    if (values[worst] - values[best] <= tolerance && diameter <= x_tolerance) return;
    if (diameter < 1e-13) return;

    Eigen::VectorXd centroid = Eigen::VectorXd::Zero(n);
    for (std::size_t k = 0; k < simplex.size(); ++k) {
      if (k != worst) centroid += simplex[k];
    }
    centroid /= dn;

    const Eigen::VectorXd reflected = project_unit(centroid + (centroid - simplex[worst]));
    const double f_reflected = problem(reflected);

    if (f_reflected < values[best]) {
      if (problem.exhausted()) {
        simplex[worst] = reflected;
        values[worst] = f_reflected;
        return;
      }
      const Eigen::VectorXd expanded =
          project_unit(centroid + expand * (reflected - centroid));
      const double f_expanded = problem(expanded);
      if (f_expanded < f_reflected) {
        simplex[worst] = expanded;
        values[worst] = f_expanded;
      } else {
        simplex[worst] = reflected;
        values[worst] = f_reflected;
      }
      continue;
    }
    if (f_reflected < values[second_worst]) {
      simplex[worst] = reflected;
      values[worst] = f_reflected;
      continue;
    }

    // Contraction: outside when the reflection beat the worst vertex.
    const bool outside = f_reflected < values[worst];
    const Eigen::VectorXd toward = outside ? reflected : simplex[worst];
    const Eigen::VectorXd contracted = centroid + contract * (toward - centroid);
    if (problem.exhausted()) return;
    const double f_contracted = problem(contracted);
    if (f_contracted < (outside ? f_reflected : values[worst])) {
      simplex[worst] = contracted;
      values[worst] = f_contracted;
      continue;
    }

    for (std::size_t k = 0; k < simplex.size() && !problem.exhausted(); ++k) {
      if (k == best) continue;
      simplex[k] = simplex[best] + shrink * (simplex[k] - simplex[best]);
      values[k] = problem(simplex[k]);
    }
  }
}

}  // namespace

LocalSearchResult local_minimize(const Objective& objective, const Eigen::VectorXd& x0,
                                 const Box& box, const LocalSearchOptions& options) {
  require(box.lower.size() == box.upper.size() && (box.lower.array() <= box.upper.array()).all(),
          "local_minimize: malformed box");
  require(box.contains(x0), "local_minimize: x0 lies outside the bounds");
  require(options.max_evals >= 1, "local_minimize: max_evals must be >= 1");
  require(options.initial_step > 0.0 && options.initial_step <= 1.0,
          "local_minimize: initial_step must lie in (0, 1]");

  LocalSearchResult result;
  ScaledProblem problem(objective, box, x0, options.max_evals, result.trajectory);
  const double f0 = problem(problem.to_unit(x0));
  require(std::isfinite(f0), "local_minimize: objective is not finite at x0");

  if (f0 > options.target_value && problem.dims() > 0) {
    double restart_value = f0;
    while (!problem.exhausted()) {
      nelder_mead(problem, problem.to_unit(problem.best_x()), problem.best_value(),
                  options.initial_step, options.tolerance, options.x_tolerance,
                  options.target_value);
      if (problem.best_value() <= options.target_value) break;
      if (restart_value - problem.best_value() <= options.tolerance) break;
      restart_value = problem.best_value();
    }
  }

  result.x = problem.best_x();
  result.value = problem.best_value();
  result.evaluations = problem.evaluations();
  return result;
}

}  // namespace qwgate
