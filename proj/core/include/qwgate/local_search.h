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

#ifndef QWGATE_LOCAL_SEARCH_H
#define QWGATE_LOCAL_SEARCH_H

#include <Eigen/Dense>
#include <functional>
#include <vector>

namespace qwgate {

/// Axis-aligned box lower <= x <= upper.
struct Box {
  Eigen::VectorXd lower;
  Eigen::VectorXd upper;

  Eigen::Index size() const { return lower.size(); }
  bool contains(const Eigen::VectorXd& x) const;
  Eigen::VectorXd clamp(const Eigen::VectorXd& x) const;
};

using Objective = std::function<double(const Eigen::VectorXd&)>;

struct LocalSearchOptions {
  int max_evals = 5000;
  /// Stop once the spread of objective values across the working simplex
  /// falls below this...
  double tolerance = 1e-10;
  /// ...and the simplex diameter, in unit-cube coordinates, below this.
  double x_tolerance = 1e-9;
  /// Initial simplex edge as a fraction of each box side.
  double initial_step = 0.1;
  /// Stop as soon as the objective drops to this value or below.
  double target_value = 0.0;
};

struct LocalSearchResult {
  Eigen::VectorXd x;
  double value = 0.0;
  int evaluations = 0;
  /// Best value seen after each evaluation; non-increasing.
  std::vector<double> trajectory;
};

/// Derivative-free minimization inside a box.
///
/// Nelder-Mead (dimension-adaptive coefficients) runs in coordinates scaled
/// to the unit cube; trial points are projected onto the box. Whenever the
/// simplex collapses the search restarts around the incumbent with a fresh
/// simplex, and stops when a restart no longer improves by `tolerance`.
///
/// Throws DomainError if x0 lies outside the box or the objective is not
/// finite at x0. The returned value never exceeds objective(x0).
LocalSearchResult local_minimize(const Objective& objective, const Eigen::VectorXd& x0,
                                 const Box& box, const LocalSearchOptions& options = {});

}  // namespace qwgate

#endif  // QWGATE_LOCAL_SEARCH_H
