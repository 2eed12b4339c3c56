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

#include "qwgate/hamiltonian.h"

#include <cmath>
#include <sstream>

namespace qwgate {

void LatticeSpec::check() const {
  require(!onsite.empty(), "LatticeSpec: at least one site is required");
  require(hoppings.size() + 1 == onsite.size(),
          "LatticeSpec: hoppings must have length sites - 1");
  for (double e : onsite) {
    require(std::isfinite(e), "LatticeSpec: non-finite on-site energy");
  }
  for (double j : hoppings) {
    require(std::isfinite(j), "LatticeSpec: non-finite hopping");
    require(j <= 0.0, "LatticeSpec: hoppings must be <= 0");
  }
  require(std::isfinite(interaction) && interaction >= 0.0,
          "LatticeSpec: interaction must be finite and >= 0");
  require(std::isfinite(evolution_time) && evolution_time > 0.0,
          "LatticeSpec: evolution_time must be > 0");
}

HermitianOperator::HermitianOperator(ComplexMatrix entries)
    : entries_(std::move(entries)) {
  require(entries_.rows() == entries_.cols() && entries_.rows() > 0,
          "HermitianOperator: matrix must be square and non-empty");
  const double deviation = (entries_ - entries_.adjoint()).cwiseAbs().maxCoeff();
  require(deviation <= kTolerance, "HermitianOperator: matrix is not Hermitian");
  real_ = entries_.imag().cwiseAbs().maxCoeff() == 0.0;
}

HermitianOperator::HermitianOperator(const RealMatrix& entries)
    : HermitianOperator(ComplexMatrix(entries.cast<std::complex<double>>())) {}

HamiltonianStencil::HamiltonianStencil(const FockBasis& basis)
    : sites_(basis.sites()),
      dim_(static_cast<Eigen::Index>(basis.dimension())),
      occupations_(dim_, basis.sites()),
      pair_count_(dim_) {
  const auto sites = static_cast<std::size_t>(sites_);
  for (Eigen::Index col = 0; col < dim_; ++col) {
    const Occupations& occ = basis.state(static_cast<std::size_t>(col)).occupations();
    double pairs = 0.0;
    for (std::size_t m = 0; m < sites; ++m) {
      const double n = occ[m];
      occupations_(col, static_cast<Eigen::Index>(m)) = n;
      pairs += 0.5 * n * (n - 1.0);
    }
    pair_count_(col) = pairs;
    // Hops to the right neighbour always land on a later basis position;
    // the mirrored entry covers the leftward hop.
    Occupations scratch = occ;
    for (std::size_t m = 0; m + 1 < sites; ++m) {
      if (occ[m] == 0) continue;
      scratch[m] = static_cast<std::uint8_t>(occ[m] - 1);
      scratch[m + 1] = static_cast<std::uint8_t>(occ[m + 1] + 1);
      const auto row = static_cast<Eigen::Index>(basis.index(FockState(scratch)));
      scratch[m] = occ[m];
      scratch[m + 1] = occ[m + 1];
      hops_.push_back({row, col, m,
                       std::sqrt(static_cast<double>((occ[m + 1] + 1) * occ[m]))});
    }
  }
}

void HamiltonianStencil::assemble(const LatticeSpec& spec, RealMatrix& out) const {
  require(spec.sites() == static_cast<std::size_t>(sites_),
          "build_hamiltonian: spec and basis site counts differ");
  require(spec.hoppings.size() + 1 == spec.sites(),
          "build_hamiltonian: hoppings must have length sites - 1");
  out.setZero(dim_, dim_);
  const Eigen::Map<const Eigen::VectorXd> onsite(spec.onsite.data(), sites_);
  out.diagonal() = occupations_ * onsite + spec.interaction * pair_count_;
  for (const Hop& hop : hops_) {
    const double value = spec.hoppings[hop.bond] * hop.amplitude;
    out(hop.row, hop.col) = value;
    out(hop.col, hop.row) = value;
  }
}

RealMatrix build_hamiltonian_real(const LatticeSpec& spec,
                                  const FockBasis& basis) {
  require(spec.sites() == static_cast<std::size_t>(basis.sites()),
          "build_hamiltonian: spec and basis site counts differ");
  RealMatrix h;
  HamiltonianStencil(basis).assemble(spec, h);
  return h;
}

HermitianOperator build_hamiltonian(const LatticeSpec& spec,
                                    const FockBasis& basis) {
  return HermitianOperator(build_hamiltonian_real(spec, basis));
}

std::vector<BoundViolation> validate_bounds(const LatticeSpec& spec,
                                            double j_max, double gamma_max) {
  require(j_max > 0.0 && gamma_max > 0.0,
          "validate_bounds: j_max and gamma_max must be positive");
  std::vector<BoundViolation> out;
  using Kind = BoundViolation::Kind;
  for (std::size_t m = 0; m < spec.onsite.size(); ++m) {
    const double e = spec.onsite[m];
    if (!(std::abs(e) <= j_max)) out.push_back({Kind::kOnsite, m, e, "|E| <= j_max"});
  }
  for (std::size_t m = 0; m < spec.hoppings.size(); ++m) {
    const double j = spec.hoppings[m];
    if (!(j <= 0.0)) {
      out.push_back({Kind::kHopping, m, j, "J <= 0"});
    } else if (!(j >= -j_max)) {
      out.push_back({Kind::kHopping, m, j, "J >= -j_max"});
    }
  }
  const double g = spec.interaction;
  if (!(g >= 0.0)) {
    out.push_back({Kind::kInteraction, 0, g, "interaction >= 0"});
  } else if (!(g <= gamma_max)) {
    out.push_back({Kind::kInteraction, 0, g, "interaction <= gamma_max"});
  }
  return out;
}

std::string describe(const BoundViolation& v) {
  std::ostringstream os;
  switch (v.kind) {
    case BoundViolation::Kind::kOnsite:
      os << "onsite[" << v.index << "]";
      break;
    case BoundViolation::Kind::kHopping:
      os << "hoppings[" << v.index << "]";
      break;
    case BoundViolation::Kind::kInteraction:
      os << "interaction";
      break;
  }
  os << " = " << v.value << " violates " << v.bound;
  return os.str();
}

}  // namespace qwgate
