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

#ifndef QWGATE_TOMOGRAPHY_H
#define QWGATE_TOMOGRAPHY_H

#include <array>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "qwgate/gates.h"
#include "qwgate/logical.h"

// Two-qubit process tomography built only from lattice operations: each
// setting prepares a product input with one single-qubit lattice per qubit,
// applies the gate under test, rotates each qubit with one more single-qubit
// lattice and reads out in the computational basis.

namespace qwgate::tomo {

/// Single-qubit input preparations.
///   kZero  |0>
///   kOne   |1>, the boson placed in the right well
///   kPlus  U_X |0> = (1, 1)/sqrt2
///   kMinus U_Y^dagger |0> = (1, i)/sqrt2
enum class Prep : std::uint8_t { kZero, kOne, kPlus, kMinus };

/// Pre-measurement rotation: none (Z / I), U_X (X basis), U_Y (Y basis).
enum class Rotation : std::uint8_t { kNone, kX, kY };

inline constexpr std::array<Prep, 4> kAllPreps{Prep::kZero, Prep::kOne, Prep::kPlus,
                                               Prep::kMinus};
inline constexpr std::array<Rotation, 3> kAllRotations{Rotation::kNone, Rotation::kX,
                                                       Rotation::kY};

std::string to_string(Prep p);
std::string to_string(Rotation r);
Prep parse_prep(const std::string& s);
Rotation parse_rotation(const std::string& s);

/// U_X = (1/sqrt2)[[1, 1], [1, -1]] (the Hadamard) and
/// U_Y = (1/sqrt2)[[1, -i], [-i, 1]] = Rx(pi/2).
struct BasisRotations {
  ComplexMatrix u_x;
  ComplexMatrix u_y;
  ComplexMatrix u_y_dagger;
  /// Two-site lattices realizing each: Hadamard, Rx(pi/2), Rx(7pi/2).
  LatticeSpec u_x_lattice;
  LatticeSpec u_y_lattice;
  LatticeSpec u_y_dagger_lattice;
};

BasisRotations basis_rotations();

/// Input state vector for one qubit.
ComplexVector input_state(Prep p);
std::array<ComplexVector, 4> input_states();

/// Single-qubit unitary that takes |0> or |1> to the input (identity for
/// kZero / kOne) and the computational bit it acts on.
struct Preparation {
  unsigned bit;  // 0 or 1
  ComplexMatrix unitary;
};
Preparation preparation(Prep p);

struct Setting {
  std::array<Prep, 2> prep;
  std::array<Rotation, 2> rotation;

  /// Computational input bitstring (qubit 1 most significant).
  unsigned input_bits() const;
};

/// The 16 x 9 = 144 settings, preparations outermost, qubit 1 slowest.
std::vector<Setting> all_settings();

/// Outcome probabilities p00, p01, p10, p11 plus weight outside the
/// logical space after the final rotations.
struct Record {
  Setting setting;
  std::array<double, 4> probabilities{};
  double leakage = 0.0;
};

/// How the gate under test acts. `unitary` is either a 4x4 logical matrix
/// (bypass mode: ideal gates, random test processes) or a 10x10 unitary on
/// the two-boson four-site Fock space.
class GateUnderTest {
 public:
  static GateUnderTest logical(ComplexMatrix u);
  static GateUnderTest lattice(const LatticeSpec& spec);

  bool is_lattice() const { return lattice_; }
  const ComplexMatrix& unitary() const { return unitary_; }

 private:
  ComplexMatrix unitary_;
  bool lattice_ = false;
};

/// Exact probabilities for one setting. In lattice mode the preparation
/// and rotation gates are themselves evolved from their two-site lattices
/// and embedded on each qubit's site pair; the final state is read out in
/// the full Fock basis.
Record simulate_setting(const GateUnderTest& gate, const Setting& setting);

/// Every setting in all_settings() order.
std::vector<Record> simulate_all(const GateUnderTest& gate);

/// Replaces the probabilities with multinomial frequencies from `shots`
/// draws (leakage is the fifth outcome). Deterministic in `seed`.
std::vector<Record> sample_shots(const std::vector<Record>& exact, int shots,
                                 std::uint64_t seed);

/// 16 x 16 process matrix over the Pauli basis {I, X, Y, Z}^{x2}, index
/// 4 * a + b for P_a (x) P_b.
struct ProcessMatrix {
  ComplexMatrix chi;
  /// Mean leakage over all records, removed before reconstruction.
  double mean_leakage = 0.0;
};

/// Labels "II", "IX", ..., "ZZ" in chi index order.
std::vector<std::string> pauli_labels();

/// Linear inversion. Logical probabilities are renormalized to drop
/// leakage. Throws DomainError naming the missing settings when the record
/// set does not cover every setting of all_settings().
ProcessMatrix reconstruct_chi(const std::vector<Record>& records);

/// chi of the unitary channel rho -> U rho U^dagger.
ComplexMatrix chi_of_unitary(const ComplexMatrix& u);

/// Re Tr(chi_ideal chi).
double process_fidelity(const ComplexMatrix& chi, const ComplexMatrix& chi_ideal);

/// max |sum_mn chi_mn P_n^dagger P_m - I|.
double trace_preservation_residual(const ComplexMatrix& chi);

/// `prep_q1,prep_q2,rot_q1,rot_q2,p00,p01,p10,p11,leak`.
void write_records_csv(std::ostream& os, const std::vector<Record>& records);
/// {"labels": [...], "real": [[...]], "imag": [[...]], "mean_leakage": x}
std::string chi_to_json(const ProcessMatrix& chi);

}  // namespace qwgate::tomo

#endif  // QWGATE_TOMOGRAPHY_H
