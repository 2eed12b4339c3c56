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

#include "qwgate/tomography.h"

#include <gtest/gtest.h>

#include <sstream>

#include "json.hpp"
#include "oracles.h"
#include "qwgate/error.h"
#include "qwgate/evolve.h"
#include "test_util.h"

using namespace qwgate;
using namespace qwgate::tomo;
using cplx = std::complex<double>;

namespace {

ComplexMatrix kron2(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(4, 4);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) out.block(2 * i, 2 * j, 2, 2) = a(i, j) * b;
  }
  return out;
}

ComplexMatrix lattice_matrix(const LatticeSpec& spec) {
  return Propagator(build_hamiltonian_real(spec, FockBasis(2, 1))).unitary(spec.evolution_time);
}

}  // namespace

TEST(tomography, basis_rotations) {
  const BasisRotations b = basis_rotations();
  EXPECT_LE(test::max_abs(b.u_x * b.u_x - ComplexMatrix::Identity(2, 2)), 1e-15);
  ComplexMatrix y(2, 2);
  y << 0, cplx(0, -1), cplx(0, 1), 0;
  const ComplexMatrix d = b.u_y.adjoint() * y * b.u_y;
  EXPECT_LE(std::abs(d(0, 1)) + std::abs(d(1, 0)), 1e-15);
  EXPECT_LE(test::max_abs(lattice_matrix(b.u_x_lattice) - b.u_x), 1e-10);
  EXPECT_LE(test::max_abs(lattice_matrix(b.u_y_lattice) - b.u_y), 1e-10);
  EXPECT_LE(test::max_abs(lattice_matrix(b.u_y_dagger_lattice) - b.u_y_dagger), 1e-10);
}

TEST(tomography, input_states) {
  const auto s = input_states();
  const double r = 1 / std::sqrt(2.0);
  EXPECT_LE((s[2] - ComplexVector{{r, r}}).cwiseAbs().maxCoeff(), 1e-15);
  EXPECT_LE((s[3] - ComplexVector{{cplx(r, 0), cplx(0, r)}}).cwiseAbs().maxCoeff(), 1e-15);
  for (const auto& v : s) EXPECT_NEAR(v.norm(), 1.0, 1e-12);
}

TEST(tomography, labels_and_settings) {
  const auto settings = all_settings();
  ASSERT_EQ(settings.size(), 144u);
  EXPECT_EQ(settings[0].prep[0], Prep::kZero);
  EXPECT_EQ(settings[0].rotation[1], Rotation::kNone);
  EXPECT_EQ(settings[143].prep[0], Prep::kMinus);
  EXPECT_EQ(settings[143].rotation[1], Rotation::kY);
  for (Prep p : kAllPreps) EXPECT_EQ(parse_prep(to_string(p)), p);
  for (Rotation q : kAllRotations) EXPECT_EQ(parse_rotation(to_string(q)), q);
  EXPECT_THROW(parse_prep("x"), DomainError);
  const auto labels = pauli_labels();
  ASSERT_EQ(labels.size(), 16u);
  EXPECT_EQ(labels[0], "II");
  EXPECT_EQ(labels[1], "IX");
  EXPECT_EQ(labels[15], "ZZ");
}

TEST(tomography, ideal_cnot_setting) {
  const auto g = GateUnderTest::logical(target_cnot().matrix);
  const Record r = simulate_setting(g, {{Prep::kOne, Prep::kZero}, {Rotation::kNone, Rotation::kNone}});
  EXPECT_NEAR(r.probabilities[3], 1.0, 1e-15);
  EXPECT_NEAR(r.leakage, 0.0, 1e-15);
}

TEST(tomography, lattice_cnot_setting) {
  const auto g = GateUnderTest::lattice(published_cnot_lattice());
  const Record r = simulate_setting(g, {{Prep::kZero, Prep::kZero}, {Rotation::kNone, Rotation::kNone}});
  EXPECT_GE(r.probabilities[0], 0.99);
  for (const Record& rec : simulate_all(g)) {
    double total = rec.leakage;
    for (double p : rec.probabilities) total += p;
    EXPECT_NEAR(total, 1.0, 1e-10);
  }
}

TEST(tomography, lattice_mode_agrees_with_logical_mode_for_leak_free_gates) {
  // A lattice with decoupled pairs acts as a product of single-qubit gates
  // and never leaves the logical space.
  LatticeSpec spec{{0.3, -0.8, 1.1, 0.2}, {-0.7, 0.0, -1.9}, 2.0, 1.0};
  const auto lattice = GateUnderTest::lattice(spec);
  const FockBasis basis(4, 2);
  const ComplexMatrix l =
      extract_logical(unitary_at(build_hamiltonian(spec, basis), 1.0), logical_indices(2, basis));
  const auto logical = GateUnderTest::logical(l);
  const auto a = simulate_all(lattice);
  const auto b = simulate_all(logical);
  for (std::size_t k = 0; k < a.size(); ++k) {
    for (std::size_t o = 0; o < 4; ++o) EXPECT_NEAR(a[k].probabilities[o], b[k].probabilities[o], 1e-10);
    EXPECT_NEAR(a[k].leakage, 0.0, 1e-10);
  }
}

TEST(tomography, identity_and_cnot_chi) {
  const ProcessMatrix id = reconstruct_chi(simulate_all(GateUnderTest::logical(ComplexMatrix::Identity(4, 4))));
  ComplexMatrix e1 = ComplexMatrix::Zero(16, 16);
  e1(0, 0) = 1.0;
  EXPECT_LE(test::max_abs(id.chi - e1), 1e-8);

  const ComplexMatrix cnot = target_cnot().matrix;
  const ProcessMatrix c = reconstruct_chi(simulate_all(GateUnderTest::logical(cnot)));
  EXPECT_NEAR(process_fidelity(c.chi, chi_of_unitary(cnot)), 1.0, 1e-8);
  EXPECT_LE(trace_preservation_residual(c.chi), 1e-8);
}

TEST(tomography, process_fidelity_examples) {
  const ComplexMatrix cnot = chi_of_unitary(target_cnot().matrix);
  const ComplexMatrix id = chi_of_unitary(ComplexMatrix::Identity(4, 4));
  EXPECT_NEAR(process_fidelity(cnot, cnot), 1.0, 1e-14);
  EXPECT_NEAR(process_fidelity(cnot, id), 0.25, 1e-14);
  EXPECT_NEAR(process_fidelity(0.3 * cnot + 0.7 * id, cnot),
              0.3 * process_fidelity(cnot, cnot) + 0.7 * process_fidelity(id, cnot), 1e-14);
  EXPECT_THROW(process_fidelity(cnot, ComplexMatrix::Identity(4, 4)), DomainError);
}

TEST(tomography, round_trip_random_unitaries) {
  std::mt19937_64 rng(123);
  for (int trial = 0; trial < 20; ++trial) {
    ComplexMatrix u;
    if (trial % 2 == 0) {
      u = oracle::random_unitary(4, rng);
    } else {
      u = kron2(oracle::random_unitary(2, rng), ComplexMatrix::Identity(2, 2));
    }
    const ProcessMatrix chi = reconstruct_chi(simulate_all(GateUnderTest::logical(u)));
    const ComplexMatrix expected = chi_of_unitary(u);
    EXPECT_LE(test::max_abs(chi.chi - expected), 1e-8) << "trial " << trial;
    EXPECT_LE(test::max_abs(chi.chi - chi.chi.adjoint()), 1e-8);
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(0.5 * (chi.chi + chi.chi.adjoint()));
    EXPECT_GE(es.eigenvalues().minCoeff(), -1e-8);
    EXPECT_LE(trace_preservation_residual(chi.chi), 1e-8);
  }
}

TEST(tomography, incomplete_records) {
  auto records = simulate_all(GateUnderTest::logical(ComplexMatrix::Identity(4, 4)));
  records.erase(records.begin() + 5);
  try {
    reconstruct_chi(records);
    FAIL() << "expected DomainError";
  } catch (const DomainError& e) {
    EXPECT_NE(std::string(e.what()).find("missing 1"), std::string::npos);
  }
}

TEST(tomography, lattice_gate_checks) {
  EXPECT_THROW(GateUnderTest::lattice(published_3q_lattice()), DomainError);
  EXPECT_THROW(GateUnderTest::logical(ComplexMatrix::Identity(2, 2)), DomainError);
}

TEST(tomography, shot_sampling_is_seeded) {
  const auto exact = simulate_all(GateUnderTest::lattice(published_cnot_lattice()));
  const auto a = sample_shots(exact, 2000, 5);
  const auto b = sample_shots(exact, 2000, 5);
  const auto c = sample_shots(exact, 2000, 6);
  bool differs = false;
  for (std::size_t k = 0; k < a.size(); ++k) {
    EXPECT_EQ(a[k].probabilities, b[k].probabilities);
    differs = differs || a[k].probabilities != c[k].probabilities;
    double total = a[k].leakage;
    for (double p : a[k].probabilities) total += p;
    EXPECT_NEAR(total, 1.0, 1e-12);
  }
  EXPECT_TRUE(differs);
  const ProcessMatrix chi = reconstruct_chi(a);
  EXPECT_GT(process_fidelity(chi.chi, chi_of_unitary(target_cnot().matrix)), 0.9);
}

TEST(tomography, output_formats) {
  const auto records = simulate_all(GateUnderTest::logical(target_cnot().matrix));
  std::ostringstream os;
  write_records_csv(os, records);
  const std::string csv = os.str();
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "prep_q1,prep_q2,rot_q1,rot_q2,p00,p01,p10,p11,leak");
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 145);

  const auto doc = nlohmann::json::parse(chi_to_json(reconstruct_chi(records)));
  EXPECT_EQ(doc["labels"].size(), 16u);
  EXPECT_EQ(doc["real"].size(), 16u);
  EXPECT_EQ(doc["imag"][0].size(), 16u);
}
