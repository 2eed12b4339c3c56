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

#include "qwgate/evolve.h"

#include <gtest/gtest.h>

#include <sstream>

#include "oracles.h"
#include "qwgate/error.h"
#include "qwgate/gates.h"
#include "qwgate/logical.h"
#include "test_util.h"

using namespace qwgate;
using cplx = std::complex<double>;

TEST(evolve, zero_hamiltonian_is_identity) {
  const HermitianOperator h(RealMatrix(RealMatrix::Zero(10, 10)));
  for (double t : {0.0, 0.3, 7.0}) {
    EXPECT_LE(test::max_abs(unitary_at(h, t).entries() - ComplexMatrix::Identity(10, 10)), 0.0);
  }
}

TEST(evolve, two_level_rabi_swap) {
  RealMatrix m(2, 2);
  m << 0, -1, -1, 0;
  const UnitaryMatrix u = unitary_at(HermitianOperator(m), kPi / 2);
  ComplexMatrix expected(2, 2);
  expected << 0, cplx(0, 1), cplx(0, 1), 0;
  EXPECT_LE(test::max_abs(u.entries() - expected), 1e-12);
}

TEST(evolve, agrees_with_taylor_series) {
  std::mt19937_64 rng(99);
  const FockBasis basis(4, 2);
  for (int trial = 0; trial < 20; ++trial) {
    const LatticeSpec spec = test::random_spec(4, 4 * kPi, rng);
    const RealMatrix h = build_hamiltonian_real(spec, basis);
    const ComplexMatrix ref = oracle::expm_taylor(h, 1.0);
    EXPECT_LE(test::max_abs(unitary_at(HermitianOperator(h), 1.0).entries() - ref), 1e-9);
  }
}

TEST(evolve, unitarity_for_large_parameters) {
  std::mt19937_64 rng(3);
  for (auto [sites, particles] : {std::pair{4, 2}, std::pair{6, 3}}) {
    const FockBasis basis(sites, particles);
    for (int trial = 0; trial < 20; ++trial) {
      const LatticeSpec spec = test::random_spec(sites, 200 * kPi, rng);
      const ComplexMatrix u = Propagator(build_hamiltonian_real(spec, basis)).unitary(1.0);
      EXPECT_LE(unitarity_residual(u), 1e-10);
    }
  }
}

TEST(evolve, composition) {
  std::mt19937_64 rng(5);
  const FockBasis basis(4, 2);
  for (int trial = 0; trial < 10; ++trial) {
    const LatticeSpec spec = test::random_spec(4, 40 * kPi, rng);
    const HermitianOperator h = build_hamiltonian(spec, basis);
    const double t1 = 0.37, t2 = 0.81;
    const ComplexMatrix lhs = unitary_at(h, t1 + t2).entries();
    const ComplexMatrix rhs = unitary_at(h, t1).entries() * unitary_at(h, t2).entries();
    EXPECT_LE(test::max_abs(lhs - rhs), 1e-9);
  }
}

TEST(evolve, eigenvector_picks_up_phase) {
  const FockBasis basis(4, 2);
  const HermitianOperator h = build_hamiltonian(published_cnot_lattice(), basis);
  const Propagator p(h);
  for (Eigen::Index k = 0; k < p.dimension(); ++k) {
    const ComplexVector v = p.eigenvectors().col(k);
    const ComplexVector out = evolve_state(h, v, 0.7);
    EXPECT_LE((out - std::polar(1.0, -p.eigenvalues()(k) * 0.7) * v).cwiseAbs().maxCoeff(), 1e-10);
  }
}

TEST(evolve, norm_preserved_and_dimension_checked) {
  const FockBasis basis(4, 2);
  const HermitianOperator h = build_hamiltonian(published_cnot_lattice(), basis);
  std::mt19937_64 rng(11);
  std::normal_distribution<double> g;
  ComplexVector psi(10);
  for (auto& x : psi) x = cplx(g(rng), g(rng));
  psi.normalize();
  EXPECT_NEAR(evolve_state(h, psi, 1.3).norm(), 1.0, 1e-10);
  EXPECT_THROW(evolve_state(h, ComplexVector::Ones(3), 1.0), DomainError);
  EXPECT_LE((evolve_state(HermitianOperator(RealMatrix(RealMatrix::Zero(10, 10))), psi, 2.0) - psi).norm(), 0.0);
}

TEST(evolve, cnot_input_stays_logical) {
  const FockBasis basis(4, 2);
  const HermitianOperator h = build_hamiltonian(published_cnot_lattice(), basis);
  ComplexVector psi = ComplexVector::Zero(10);
  psi(static_cast<Eigen::Index>(basis.index(FockState({1, 0, 1, 0})))) = 1.0;
  const ComplexVector out = evolve_state(h, psi, 1.0);
  double logical = 0.0;
  for (auto idx : logical_indices(2, basis).indices) logical += std::norm(out(idx));
  EXPECT_GE(logical, 0.99);
}

TEST(evolve, density_trace_properties) {
  const LatticeSpec spec = published_cnot_lattice();
  const FockBasis basis(4, 2);
  const HermitianOperator h = build_hamiltonian(spec, basis);
  const auto times = uniform_times(1.0, 401);
  ASSERT_EQ(times.size(), 401u);
  EXPECT_DOUBLE_EQ(times.front(), 0.0);
  EXPECT_DOUBLE_EQ(times.back(), 1.0);

  const FockState initial({0, 1, 0, 1});
  const DensityTrace tr = density_trace(h, initial, basis, times);
  ASSERT_EQ(tr.densities.rows(), 401);
  ASSERT_EQ(tr.densities.cols(), 4);
  for (int s = 0; s < 4; ++s) EXPECT_NEAR(tr.densities(0, s), initial[static_cast<std::size_t>(s)], 1e-12);
  for (Eigen::Index r = 0; r < tr.densities.rows(); ++r) {
    EXPECT_NEAR(tr.densities.row(r).sum(), 2.0, 1e-10);
    EXPECT_GE(tr.densities.row(r).minCoeff(), -1e-12);
    EXPECT_LE(tr.densities.row(r).maxCoeff(), 2.0 + 1e-12);
  }
  // |11> -> |10>: the target boson ends on site 3.
  EXPECT_GT(tr.densities(400, 2), 0.95);
  EXPECT_GT(tr.densities(400, 1), 0.95);

  // Energy is conserved along the trace.
  const Propagator p(h);
  ComplexVector psi0 = ComplexVector::Zero(10);
  psi0(static_cast<Eigen::Index>(basis.index(initial))) = 1.0;
  const double e0 = (psi0.adjoint() * h.entries() * psi0)(0).real();
  for (double t : {0.1, 0.5, 0.9}) {
    const ComplexVector psi = p.apply(psi0, t);
    EXPECT_NEAR((psi.adjoint() * h.entries() * psi)(0).real(), e0, 1e-9 * std::max(1.0, std::abs(e0)));
  }
}

TEST(evolve, density_trace_rejects_unsorted_times) {
  const FockBasis basis(2, 1);
  const HermitianOperator h(RealMatrix(RealMatrix::Zero(2, 2)));
  const std::vector<double> bad{0.0, 0.5, 0.2};
  EXPECT_THROW(density_trace(h, FockState({1, 0}), basis, bad), DomainError);
}

TEST(evolve, density_csv_layout) {
  const FockBasis basis(2, 1);
  RealMatrix m(2, 2);
  m << 0, -1, -1, 0;
  const auto times = uniform_times(1.0, 3);
  std::ostringstream os;
  write_density_csv(os, density_trace(HermitianOperator(m), FockState({1, 0}), basis, times));
  const std::string csv = os.str();
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "t,site_1,site_2");
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 4);
}

TEST(evolve, unitary_matrix_checks_unitarity) {
  ComplexMatrix m = ComplexMatrix::Identity(2, 2);
  m(0, 0) = 1.1;
  EXPECT_THROW(UnitaryMatrix{m}, DomainError);
}
