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

#include <algorithm>
#include <cmath>
#include <complex>
#include <iomanip>

namespace qwgate {

using cplx = std::complex<double>;

UnitaryMatrix::UnitaryMatrix(ComplexMatrix entries) : entries_(std::move(entries)) {
  require(entries_.rows() == entries_.cols() && entries_.rows() > 0,
          "UnitaryMatrix: matrix must be square and non-empty");
  require(unitarity_residual(entries_) <= kTolerance,
          "UnitaryMatrix: matrix is not unitary");
}

UnitaryMatrix UnitaryMatrix::identity(Eigen::Index dimension) {
  return UnitaryMatrix(ComplexMatrix::Identity(dimension, dimension));
}

double unitarity_residual(const ComplexMatrix& u) {
  const ComplexMatrix gram = u.adjoint() * u;
  return (gram - ComplexMatrix::Identity(u.cols(), u.cols())).cwiseAbs().maxCoeff();
}

Propagator::Propagator(const HermitianOperator& h) {
  if (h.is_real()) {
    *this = Propagator(RealMatrix(h.entries().real()));
    return;
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h.entries());
  require(solver.info() == Eigen::Success, "Propagator: eigensolver failed");
  eigenvalues_ = solver.eigenvalues();
  eigenvectors_ = solver.eigenvectors();
}

Propagator::Propagator(const RealMatrix& h) {
  Eigen::SelfAdjointEigenSolver<RealMatrix> solver(h);
  require(solver.info() == Eigen::Success, "Propagator: eigensolver failed");
  eigenvalues_ = solver.eigenvalues();
  eigenvectors_ = solver.eigenvectors().cast<cplx>();
}

ComplexMatrix Propagator::unitary(double t) const {
  const Eigen::Index n = dimension();
  Eigen::VectorXcd phases(n);
  for (Eigen::Index k = 0; k < n; ++k) {
    phases(k) = std::polar(1.0, -eigenvalues_(k) * t);
  }
  return eigenvectors_ * phases.asDiagonal() * eigenvectors_.adjoint();
}

ComplexVector Propagator::apply(const ComplexVector& psi, double t) const {
  require(psi.size() == dimension(), "evolve_state: state dimension mismatch");
  ComplexVector coeffs = eigenvectors_.adjoint() * psi;
  for (Eigen::Index k = 0; k < coeffs.size(); ++k) {
    coeffs(k) *= std::polar(1.0, -eigenvalues_(k) * t);
  }
  return eigenvectors_ * coeffs;
}

UnitaryMatrix unitary_at(const HermitianOperator& h, double t) {
  require(std::isfinite(t), "unitary_at: time must be finite");
  return UnitaryMatrix(Propagator(h).unitary(t));
}

ComplexVector evolve_state(const HermitianOperator& h, const ComplexVector& initial,
                           double t) {
  require(initial.size() == h.dimension(), "evolve_state: state dimension mismatch");
  return Propagator(h).apply(initial, t);
}

DensityTrace density_trace(const HermitianOperator& h, const FockState& initial,
                           const FockBasis& basis, std::span<const double> times) {
  require(h.dimension() == static_cast<Eigen::Index>(basis.dimension()),
          "density_trace: operator and basis dimensions differ");
  require(std::is_sorted(times.begin(), times.end()),
          "density_trace: times must be sorted ascending");
  require(times.empty() || times.front() >= 0.0,
          "density_trace: times must be non-negative");

  const Propagator propagator(h);
  const auto dim = static_cast<Eigen::Index>(basis.dimension());
  const auto sites = static_cast<Eigen::Index>(basis.sites());
  RealMatrix occupations(dim, sites);
  for (Eigen::Index k = 0; k < dim; ++k) {
    for (Eigen::Index m = 0; m < sites; ++m) {
      occupations(k, m) = basis.state(static_cast<std::size_t>(k))[static_cast<std::size_t>(m)];
    }
  }
  ComplexVector psi0 = ComplexVector::Zero(dim);
  psi0(static_cast<Eigen::Index>(basis.index(initial))) = 1.0;

  DensityTrace trace;
  trace.times.assign(times.begin(), times.end());
  trace.densities.resize(static_cast<Eigen::Index>(times.size()), sites);
  for (std::size_t i = 0; i < times.size(); ++i) {
    const Eigen::VectorXd probs = propagator.apply(psi0, times[i]).cwiseAbs2();
    trace.densities.row(static_cast<Eigen::Index>(i)) = probs.transpose() * occupations;
  }
  return trace;
}

std::vector<double> uniform_times(double t_final, int points) {
  require(points >= 2, "uniform_times: need at least two points");
  require(t_final > 0.0, "uniform_times: t_final must be positive");
  std::vector<double> out(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i) {
    out[static_cast<std::size_t>(i)] = t_final * i / (points - 1);
  }
  out.back() = t_final;
  return out;
}

void write_density_csv(std::ostream& os, const DensityTrace& trace) {
  os << "t";
  for (Eigen::Index m = 0; m < trace.densities.cols(); ++m) os << ",site_" << (m + 1);
  os << "\n";
  const auto saved = os.precision();
  os << std::setprecision(12);
  for (std::size_t i = 0; i < trace.times.size(); ++i) {
    os << trace.times[i];
    for (Eigen::Index m = 0; m < trace.densities.cols(); ++m) {
      os << "," << trace.densities(static_cast<Eigen::Index>(i), m);
    }
    os << "\n";
  }
  os.precision(saved);
}

}  // namespace qwgate
