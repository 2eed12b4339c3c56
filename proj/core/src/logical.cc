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

#include "qwgate/logical.h"

#include <algorithm>
#include <cmath>

namespace qwgate {

FockState dual_rail_state(int n_qubits, unsigned bits) {
  require(n_qubits >= 1 && n_qubits < 16, "dual_rail_state: bad qubit count");
  require(bits < (1u << n_qubits), "dual_rail_state: bitstring out of range");
  Occupations occ(static_cast<std::size_t>(2 * n_qubits), 0);
  for (int k = 0; k < n_qubits; ++k) {
    const unsigned bit = (bits >> (n_qubits - 1 - k)) & 1u;
    occ[static_cast<std::size_t>(2 * k + static_cast<int>(bit))] = 1;
  }
  return FockState(std::move(occ));
}

DualRailEncoding logical_indices(int n_qubits, const FockBasis& basis) {
  require(n_qubits >= 1, "logical_indices: need at least one qubit");
  require(basis.sites() == 2 * n_qubits && basis.particles() == n_qubits,
          "logical_indices: basis must have 2n sites and n particles");
  DualRailEncoding enc;
  enc.n_qubits = n_qubits;
  const unsigned count = 1u << n_qubits;
  enc.indices.reserve(count);
  for (unsigned b = 0; b < count; ++b) {
    enc.indices.push_back(static_cast<Eigen::Index>(basis.index(dual_rail_state(n_qubits, b))));
  }
  return enc;
}

ComplexMatrix extract_logical(const ComplexMatrix& u, const DualRailEncoding& enc) {
  const Eigen::Index n = enc.dimension();
  for (Eigen::Index k : enc.indices) {
    require(k >= 0 && k < u.rows() && k < u.cols(),
            "extract_logical: index outside matrix");
  }
  ComplexMatrix sub(n, n);
  for (Eigen::Index c = 0; c < n; ++c) {
    for (Eigen::Index r = 0; r < n; ++r) {
      sub(r, c) = u(enc.indices[static_cast<std::size_t>(r)],
                    enc.indices[static_cast<std::size_t>(c)]);
    }
  }
  return sub;
}

ComplexMatrix extract_logical(const UnitaryMatrix& u, const DualRailEncoding& enc) {
  return extract_logical(u.entries(), enc);
}

double fidelity(const ComplexMatrix& target, const ComplexMatrix& candidate) {
  require(target.rows() == target.cols() && target.rows() > 0,
          "fidelity: target must be square");
  require(candidate.rows() == target.rows() && candidate.cols() == target.cols(),
          "fidelity: dimension mismatch");
  // Tr(A^dagger B) = sum_ij conj(A_ij) B_ij
  const std::complex<double> overlap = target.conjugate().cwiseProduct(candidate).sum();
  return std::abs(overlap) / static_cast<double>(target.rows());
}

double phase_penalty(std::complex<double> u11) {
  if (std::abs(u11) < 1e-12) return 0.0;
  const double s = std::sin(std::arg(u11));
  return s * s;
}

GateScore score_logical(const ComplexMatrix& target, const ComplexMatrix& logical) {
  GateScore score;
  score.fidelity = fidelity(target, logical);
  score.cost = (1.0 - score.fidelity * score.fidelity) + phase_penalty(logical(0, 0));
  const double mean_norm = logical.colwise().squaredNorm().mean();
  score.leakage = std::max(0.0, 1.0 - mean_norm);
  return score;
}

}  // namespace qwgate
