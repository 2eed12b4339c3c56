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

// Reference implementations used only by tests. None of them call into the
// library code they check.

#ifndef QWGATE_TESTS_ORACLES_H
#define QWGATE_TESTS_ORACLES_H

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <random>
#include <vector>

namespace qwgate::oracle {

using cplx = std::complex<double>;
using Occ = std::vector<int>;

/// Every occupation vector of `sites` modes holding `particles` bosons,
/// found by scanning all tuples in [0, particles]^sites, then sorted in
/// descending lexicographic order.
inline std::vector<Occ> brute_force_basis(int sites, int particles) {
  std::vector<Occ> out;
  Occ digits(static_cast<std::size_t>(sites), 0);
  const int base = particles + 1;
  long total = 1;
  for (int s = 0; s < sites; ++s) total *= base;
  for (long code = 0; code < total; ++code) {
    long c = code;
    int sum = 0;
    for (int s = sites - 1; s >= 0; --s) {
      digits[static_cast<std::size_t>(s)] = static_cast<int>(c % base);
      sum += digits[static_cast<std::size_t>(s)];
      c /= base;
    }
    if (sum == particles) out.push_back(digits);
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

// Single-mode matrix elements <n| op |m>.
inline double annihilate(int n, int m) { return n == m - 1 ? std::sqrt(static_cast<double>(m)) : 0.0; }
inline double create(int n, int m) { return n == m + 1 ? std::sqrt(static_cast<double>(n)) : 0.0; }
inline double number(int n, int m) { return n == m ? static_cast<double>(m) : 0.0; }
inline double identity(int n, int m) { return n == m ? 1.0 : 0.0; }

/// <bra| H |ket> with every term of
///   H = sum_i E_i n_i + sum_i J_i (a_i^dag a_{i+1} + a_{i+1}^dag a_i)
///       + (G / 2) sum_i n_i (n_i - 1)
/// written as a product of single-mode factors.
inline double hamiltonian_element(const Occ& bra, const Occ& ket, const std::vector<double>& e,
                                  const std::vector<double>& j, double gamma) {
  const std::size_t m = bra.size();
  auto product = [&](const std::function<double(std::size_t, int, int)>& factor) {
    double p = 1.0;
    for (std::size_t s = 0; s < m; ++s) p *= factor(s, bra[s], ket[s]);
    return p;
  };
  double h = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    h += e[i] * product([&](std::size_t s, int n, int k) { return s == i ? number(n, k) : identity(n, k); });
    h += 0.5 * gamma * product([&](std::size_t s, int n, int k) {
           return s == i ? number(n, k) * (number(n, k) - identity(n, k)) : identity(n, k);
         });
  }
  for (std::size_t i = 0; i + 1 < m; ++i) {
    h += j[i] * product([&](std::size_t s, int n, int k) {
           if (s == i) return create(n, k);
           if (s == i + 1) return annihilate(n, k);
           return identity(n, k);
         });
    h += j[i] * product([&](std::size_t s, int n, int k) {
           if (s == i) return annihilate(n, k);
           if (s == i + 1) return create(n, k);
           return identity(n, k);
         });
  }
  return h;
}

inline Eigen::MatrixXd hamiltonian(int sites, int particles, const std::vector<double>& e,
                                   const std::vector<double>& j, double gamma) {
  const auto basis = brute_force_basis(sites, particles);
  const auto d = static_cast<Eigen::Index>(basis.size());
  Eigen::MatrixXd h(d, d);
  for (Eigen::Index r = 0; r < d; ++r) {
    for (Eigen::Index c = 0; c < d; ++c) {
      h(r, c) = hamiltonian_element(basis[static_cast<std::size_t>(r)],
                                    basis[static_cast<std::size_t>(c)], e, j, gamma);
    }
  }
  return h;
}

/// exp(-i H t) by scaling and squaring of a truncated Taylor series.
inline Eigen::MatrixXcd expm_taylor(const Eigen::MatrixXd& h, double t) {
  const Eigen::MatrixXcd a = cplx(0.0, -t) * h.cast<cplx>();
  const double norm = a.cwiseAbs().rowwise().sum().maxCoeff();
  int squarings = 0;
  while (norm / std::pow(2.0, squarings) > 0.25) ++squarings;
  const Eigen::MatrixXcd b = a / std::pow(2.0, squarings);
  Eigen::MatrixXcd term = Eigen::MatrixXcd::Identity(h.rows(), h.cols());
  Eigen::MatrixXcd sum = term;
  for (int k = 1; k <= 30; ++k) {
    term = term * b / static_cast<double>(k);
    sum += term;
  }
  for (int s = 0; s < squarings; ++s) sum = sum * sum;
  return sum;
}

/// |sum_ij conj(T_ij) C_ij| / N by explicit loops.
inline double trace_fidelity(const Eigen::MatrixXcd& target, const Eigen::MatrixXcd& candidate) {
  cplx acc = 0.0;
  for (Eigen::Index r = 0; r < target.rows(); ++r) {
    for (Eigen::Index c = 0; c < target.cols(); ++c) acc += std::conj(target(r, c)) * candidate(r, c);
  }
  return std::abs(acc) / static_cast<double>(target.rows());
}

/// Haar-ish random unitary from the QR of a complex Gaussian matrix.
inline Eigen::MatrixXcd random_unitary(int dim, std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  Eigen::MatrixXcd z(dim, dim);
  for (int r = 0; r < dim; ++r) {
    for (int c = 0; c < dim; ++c) z(r, c) = cplx(g(rng), g(rng));
  }
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(z);
  Eigen::MatrixXcd q = qr.householderQ();
  const Eigen::MatrixXcd rmat = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int c = 0; c < dim; ++c) q.col(c) *= rmat(c, c) / std::abs(rmat(c, c));
  return q;
}

}  // namespace qwgate::oracle

#endif  // QWGATE_TESTS_ORACLES_H
