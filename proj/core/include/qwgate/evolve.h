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

#ifndef QWGATE_EVOLVE_H
#define QWGATE_EVOLVE_H

#include <ostream>
#include <span>
#include <vector>

#include "qwgate/hamiltonian.h"

namespace qwgate {

/// Dense unitary. Construction verifies U^dagger U = I to kTolerance.
class UnitaryMatrix {
 public:
  static constexpr double kTolerance = 1e-10;

  explicit UnitaryMatrix(ComplexMatrix entries);

  static UnitaryMatrix identity(Eigen::Index dimension);

  Eigen::Index dimension() const { return entries_.rows(); }
  const ComplexMatrix& entries() const { return entries_; }

 private:
  ComplexMatrix entries_;
};

/// Max-norm of U^dagger U - I.
double unitarity_residual(const ComplexMatrix& u);

/// Eigendecomposition H = V diag(lambda) V^dagger, reusable for any number
/// of evolution times.
class Propagator {
 public:
  explicit Propagator(const HermitianOperator& h);
  /// Real-symmetric fast path; the caller guarantees symmetry.
  explicit Propagator(const RealMatrix& h);

  Eigen::Index dimension() const { return eigenvalues_.size(); }
  const Eigen::VectorXd& eigenvalues() const { return eigenvalues_; }
  const ComplexMatrix& eigenvectors() const { return eigenvectors_; }

  /// e^{-iHt}; t may be zero or negative.
  ComplexMatrix unitary(double t) const;
  ComplexVector apply(const ComplexVector& psi, double t) const;

 private:
  Eigen::VectorXd eigenvalues_;
  ComplexMatrix eigenvectors_;
};

/// U = e^{-iHT}. HermitianOperator has already rejected non-Hermitian input.
UnitaryMatrix unitary_at(const HermitianOperator& h, double t);

/// e^{-iHT} psi. Throws DomainError on a dimension mismatch.
ComplexVector evolve_state(const HermitianOperator& h, const ComplexVector& initial,
                           double t);

/// Expected site occupations <n_m>(t), one row per requested time.
struct DensityTrace {
  std::vector<double> times;
  RealMatrix densities;  // times.size() x sites
};

/// Evaluates <n_m>(t) for `initial` at each of `times` (ascending, >= 0).
DensityTrace density_trace(const HermitianOperator& h, const FockState& initial,
                           const FockBasis& basis, std::span<const double> times);

/// `points` uniform samples on [0, t_final], endpoints included.
std::vector<double> uniform_times(double t_final, int points = 401);

/// CSV with header `t,site_1,...,site_m` and 12 significant digits.
void write_density_csv(std::ostream& os, const DensityTrace& trace);

}  // namespace qwgate

#endif  // QWGATE_EVOLVE_H
