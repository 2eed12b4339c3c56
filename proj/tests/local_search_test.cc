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

#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "qwgate/error.h"

using namespace qwgate;
using Eigen::VectorXd;

namespace {

Box unit_box(int n, double lo, double hi) {
  return {VectorXd::Constant(n, lo), VectorXd::Constant(n, hi)};
}

}  // namespace

TEST(local_search, quadratic_bowl) {
  VectorXd c(3);
  c << 0.3, -1.2, 2.0;
  const Objective f = [&](const VectorXd& x) { return (x - c).squaredNorm(); };
  const auto r = local_minimize(f, VectorXd::Zero(3), unit_box(3, -3, 3));
  EXPECT_LE((r.x - c).norm(), 1e-6);
  EXPECT_LE(r.value, f(VectorXd::Zero(3)));
}

TEST(local_search, minimum_on_the_boundary) {
  const Objective f = [](const VectorXd& x) { return (x.array() - 5.0).square().sum(); };
  const auto r = local_minimize(f, VectorXd::Zero(2), unit_box(2, -1, 1));
  EXPECT_NEAR(r.x(0), 1.0, 1e-6);
  EXPECT_NEAR(r.x(1), 1.0, 1e-6);
}

TEST(local_search, stays_in_the_box) {
  const Box box = unit_box(4, -0.5, 0.25);
  int outside = 0;
  const Objective f = [&](const VectorXd& x) {
    if (!box.contains(x)) ++outside;
    return std::sin(7 * x.sum()) + x.squaredNorm();
  };
  const auto r = local_minimize(f, VectorXd::Constant(4, 0.1), box);
  EXPECT_EQ(outside, 0);
  EXPECT_TRUE(box.contains(r.x));
}

TEST(local_search, zero_cost_start_returns_immediately) {
  const Objective f = [](const VectorXd& x) { return x.squaredNorm(); };
  const auto r = local_minimize(f, VectorXd::Zero(3), unit_box(3, -1, 1));
  EXPECT_EQ(r.evaluations, 1);
  EXPECT_EQ(r.value, 0.0);
  EXPECT_EQ(r.x, VectorXd::Zero(3));
}

TEST(local_search, trajectory_is_monotone_and_budgeted) {
  const Objective f = [](const VectorXd& x) {
    double s = 0;
    for (Eigen::Index i = 0; i + 1 < x.size(); ++i) {
      s += 100 * std::pow(x(i + 1) - x(i) * x(i), 2) + std::pow(1 - x(i), 2);
    }
    return s;
  };
  LocalSearchOptions opt;
  opt.max_evals = 700;
  const auto r = local_minimize(f, VectorXd::Constant(5, -1.5), unit_box(5, -2, 2), opt);
  EXPECT_LE(r.evaluations, 700);
  ASSERT_EQ(static_cast<int>(r.trajectory.size()), r.evaluations);
  for (std::size_t k = 1; k < r.trajectory.size(); ++k) EXPECT_LE(r.trajectory[k], r.trajectory[k - 1]);
  EXPECT_EQ(r.trajectory.back(), r.value);
  EXPECT_EQ(f(r.x), r.value);
}

TEST(local_search, errors) {
  const Objective f = [](const VectorXd& x) { return x.squaredNorm(); };
  EXPECT_THROW(local_minimize(f, VectorXd::Constant(2, 3.0), unit_box(2, -1, 1)), DomainError);
  const Objective nan = [](const VectorXd&) { return std::numeric_limits<double>::quiet_NaN(); };
  EXPECT_THROW(local_minimize(nan, VectorXd::Zero(2), unit_box(2, -1, 1)), DomainError);
}

TEST(local_search, non_finite_values_are_rejected_as_moves) {
  const Objective f = [](const VectorXd& x) {
    if (x(0) > 0.5) return std::numeric_limits<double>::infinity();
    return (x(0) - 1.0) * (x(0) - 1.0) + x(1) * x(1);
  };
  const auto r = local_minimize(f, VectorXd::Zero(2), unit_box(2, -1, 1));
  EXPECT_TRUE(std::isfinite(r.value));
  EXPECT_LE(r.x(0), 0.5);
}

TEST(local_search, fixed_axes) {
  Box box{VectorXd::Zero(2), VectorXd::Zero(2)};
  box.upper(1) = 1.0;
  const Objective f = [](const VectorXd& x) { return (x(1) - 0.4) * (x(1) - 0.4) + x(0); };
  const auto r = local_minimize(f, VectorXd::Zero(2), box);
  EXPECT_EQ(r.x(0), 0.0);
  EXPECT_NEAR(r.x(1), 0.4, 1e-6);
}
