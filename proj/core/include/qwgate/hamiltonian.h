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

#ifndef QWGATE_HAMILTONIAN_H
#define QWGATE_HAMILTONIAN_H

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "qwgate/fock.h"

namespace qwgate {

using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;

/// A 1D Bose-Hubbard lattice: the full recipe for one gate.
///
/// Only nearest-neighbour hoppings are representable; hoppings[m] couples
/// sites m and m+1. Units have hbar = 1.
struct LatticeSpec {
  std::vector<double> onsite;
  std::vector<double> hoppings;
  double interaction = 0.0;
  double evolution_time = 1.0;

  std::size_t sites() const { return onsite.size(); }

  /// Checks structural invariants: hoppings length = sites - 1, all values
  /// finite, hoppings <= 0, interaction >= 0, evolution_time > 0. Throws
  /// DomainError on the first failure.
  void check() const;

  friend bool operator==(const LatticeSpec&, const LatticeSpec&) = default;
};

/// Dense Hermitian matrix. Construction verifies hermiticity.
class HermitianOperator {
 public:
  static constexpr double kTolerance = 1e-12;

  /// Throws DomainError when `entries` is not square or deviates from its
  /// adjoint by more than kTolerance in any entry.
  explicit HermitianOperator(ComplexMatrix entries);
  /// Real-symmetric shortcut.
  explicit HermitianOperator(const RealMatrix& entries);

  Eigen::Index dimension() const { return entries_.rows(); }
  const ComplexMatrix& entries() const { return entries_; }
  /// True when every entry has zero imaginary part.
  bool is_real() const { return real_; }

 private:
  ComplexMatrix entries_;
  bool real_ = false;
};

/// Precomputed sparsity pattern of the Bose-Hubbard operator over one basis.
/// Assembling H for a new parameter set touches only the stored terms, which
/// is what the optimizer's inner loop needs.
class HamiltonianStencil {
 public:
  explicit HamiltonianStencil(const FockBasis& basis);

  int sites() const { return sites_; }
  Eigen::Index dimension() const { return dim_; }

  /// Writes H into `out` (resized on demand). Throws DomainError on a
  /// site-count mismatch.
  void assemble(const LatticeSpec& spec, RealMatrix& out) const;

 private:
  struct Hop {
    Eigen::Index row;  // state after moving a boson from `bond` to `bond + 1`
    Eigen::Index col;
    std::size_t bond;
    double amplitude;
  };
  int sites_;
  Eigen::Index dim_;
  RealMatrix occupations_;     // dim x sites
  Eigen::VectorXd pair_count_;  // Sum_m n_m (n_m - 1) / 2 per state
  std::vector<Hop> hops_;
};

/// Dense H over `basis`. Diagonal from number_diagonal, off-diagonal
/// J_m * sqrt((n_dest + 1) n_src) for each single nearest-neighbour hop.
/// Bounds are not validated here.
HermitianOperator build_hamiltonian(const LatticeSpec& spec,
                                    const FockBasis& basis);

/// Same matrix as build_hamiltonian, returned as a real-symmetric matrix.
RealMatrix build_hamiltonian_real(const LatticeSpec& spec,
                                  const FockBasis& basis);

struct BoundViolation {
  enum class Kind { kOnsite, kHopping, kInteraction };
  Kind kind;
  std::size_t index;  // site or bond index; 0 for the interaction
  double value;
  std::string bound;  // human readable, e.g. "J <= 0"
};

/// Reports every parameter outside the box
///   |E_m| <= j_max,  -j_max <= J_m <= 0,  0 <= interaction <= gamma_max.
/// The on-site box is the symmetric reading of the published constraint.
std::vector<BoundViolation> validate_bounds(const LatticeSpec& spec,
                                            double j_max, double gamma_max);

std::string describe(const BoundViolation& violation);

}  // namespace qwgate

#endif  // QWGATE_HAMILTONIAN_H
