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

#ifndef QWGATE_LOGICAL_H
#define QWGATE_LOGICAL_H

#include <complex>
#include <vector>

#include "qwgate/evolve.h"

namespace qwgate {

/// Dual-rail qubits: qubit k (zero-based) lives on sites 2k and 2k+1 with
/// |0> = boson on the left site and |1> = boson on the right site.
///
/// indices[b] is the Fock-basis position of logical state b, where b is
/// read as a bitstring with qubit 0 the most significant bit.
struct DualRailEncoding {
  int n_qubits = 0;
  std::vector<Eigen::Index> indices;

  Eigen::Index dimension() const { return static_cast<Eigen::Index>(indices.size()); }
};

/// Occupation vector of logical state `bits` on 2 * n_qubits sites.
FockState dual_rail_state(int n_qubits, unsigned bits);

/// Throws DomainError unless the basis has 2n sites and n particles.
DualRailEncoding logical_indices(int n_qubits, const FockBasis& basis);

/// U restricted to the logical states, in logical order. Not unitary in
/// general.
ComplexMatrix extract_logical(const ComplexMatrix& u, const DualRailEncoding& enc);
ComplexMatrix extract_logical(const UnitaryMatrix& u, const DualRailEncoding& enc);

/// |Tr(target^dagger candidate)| / N.
double fidelity(const ComplexMatrix& target, const ComplexMatrix& candidate);

/// sin^2(arg(u11)), taken as 0 when |u11| < 1e-12.
double phase_penalty(std::complex<double> u11);

struct GateScore {
  double fidelity = 0.0;
  /// (1 - F^2) + sin^2(arg u11).
  double cost = 0.0;
  /// 1 - mean squared column norm of the logical submatrix.
  double leakage = 0.0;
};

/// Scores a logical submatrix against a target unitary.
GateScore score_logical(const ComplexMatrix& target, const ComplexMatrix& logical);

}  // namespace qwgate

#endif  // QWGATE_LOGICAL_H
