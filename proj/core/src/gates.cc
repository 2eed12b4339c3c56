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

#include "qwgate/gates.h"

#include <bit>
#include <cmath>
#include <complex>

#include "qwgate/evolve.h"
#include "qwgate/spec_io.h"

namespace qwgate {

using cplx = std::complex<double>;
using namespace std::complex_literals;

namespace {

double wrap(double x, double period) {
  double r = std::fmod(x, period);
  if (r < 0.0) r += period;
  // fmod can return `period` itself after the shift for tiny negatives
  if (r >= period) r -= period;
  return r;
}

ComplexMatrix rz_matrix(double theta) {
  ComplexMatrix m = ComplexMatrix::Zero(2, 2);
  m(0, 0) = std::polar(1.0, -theta / 2.0);
  m(1, 1) = std::polar(1.0, theta / 2.0);
  return m;
}

ComplexMatrix rx_matrix(double theta) {
  const double c = std::cos(theta / 2.0);
  const double s = std::sin(theta / 2.0);
  ComplexMatrix m(2, 2);
  m << c, -1i * s, -1i * s, c;
  return m;
}

}  // namespace

GateTarget target_identity(int n_qubits) {
  require(n_qubits >= 1 && n_qubits <= 10, "target_identity: bad qubit count");
  const Eigen::Index n = Eigen::Index{1} << n_qubits;
  return {"identity:" + std::to_string(n_qubits), n_qubits, ComplexMatrix::Identity(n, n)};
}

GateTarget target_cnot() {
  ComplexMatrix m = ComplexMatrix::Zero(4, 4);
  m(0, 0) = 1.0;
  m(1, 1) = 1.0;
  m(3, 2) = 1.0;
  m(2, 3) = 1.0;
  return {"cnot", 2, m};
}

GateTarget target_hadamard() {
  ComplexMatrix m(2, 2);
  m << 1.0, 1.0, 1.0, -1.0;
  m /= std::sqrt(2.0);
  return {"hadamard", 1, m};
}

GateTarget target_phase(double theta) {
  ComplexMatrix m = ComplexMatrix::Identity(2, 2);
  m(1, 1) = std::polar(1.0, theta);
  return {"phase:" + std::to_string(theta), 1, m};
}

GateTarget target_rz(double theta) { return {"rz:" + std::to_string(theta), 1, rz_matrix(theta)}; }

GateTarget target_rx(double theta) { return {"rx:" + std::to_string(theta), 1, rx_matrix(theta)}; }

GateTarget target_double_cnot_3q(int target_qubit) {
  require(target_qubit >= 1 && target_qubit <= 3,
          "target_double_cnot_3q: target qubit must be 1, 2 or 3");
  ComplexMatrix m = ComplexMatrix::Zero(8, 8);
  const unsigned target_bit = 1u << (3 - target_qubit);
  for (unsigned b = 0; b < 8; ++b) {
    // parity of the two non-target qubits
    const unsigned others = b & ~target_bit;
    const unsigned parity = static_cast<unsigned>(std::popcount(others)) & 1u;
    const unsigned out = parity ? (b ^ target_bit) : b;
    m(out, b) = 1.0;
  }
  std::string name = "double-cnot-3q";
  if (target_qubit != kPublished3qTargetQubit) name += ":" + std::to_string(target_qubit);
  return {name, 3, m};
}

GateTarget parse_gate(std::string_view name) {
  const auto colon = name.find(':');
  const std::string_view head = name.substr(0, colon);
  const bool has_arg = colon != std::string_view::npos;
  const std::string_view arg = has_arg ? name.substr(colon + 1) : std::string_view{};
  auto need_arg = [&] {
    require(has_arg && !arg.empty(),
            "gate '" + std::string(head) + "' needs an argument, e.g. " +
                std::string(head) + ":pi/2");
  };
  if (head == "cnot" && !has_arg) return target_cnot();
  if (head == "hadamard" && !has_arg) return target_hadamard();
  if (head == "identity") return target_identity(has_arg ? std::stoi(std::string(arg)) : 1);
  if (head == "phase") {
    need_arg();
    auto g = target_phase(parse_scalar(arg));
    g.name = std::string(name);
    return g;
  }
  if (head == "rz") {
    need_arg();
    auto g = target_rz(parse_scalar(arg));
    g.name = std::string(name);
    return g;
  }
  if (head == "rx") {
    need_arg();
    auto g = target_rx(parse_scalar(arg));
    g.name = std::string(name);
    return g;
  }
  if (head == "double-cnot-3q") {
    if (!has_arg) return target_double_cnot_3q(kPublished3qTargetQubit);
    require(arg == "1" || arg == "2" || arg == "3",
            "double-cnot-3q target qubit must be 1, 2 or 3");
    return target_double_cnot_3q(arg[0] - '0');
  }
  throw DomainError("unknown gate '" + std::string(name) + "'");
}

LatticeSpec published_cnot_lattice() {
  LatticeSpec spec;
  spec.onsite = {0.40 * kPi, 1.82 * kPi, -0.37 * kPi, -0.66 * kPi};
  spec.hoppings = {0.0, -1.03 * kPi, -3.80 * kPi};
  spec.interaction = 21.68 * kPi;
  spec.evolution_time = 1.0;
  return spec;
}

LatticeSpec published_3q_lattice() {
  LatticeSpec spec;
  spec.onsite = {5.98 * kPi, 7.13 * kPi, 0.14 * kPi, 0.18 * kPi, 11.69 * kPi, -8.03 * kPi};
  spec.hoppings = {0.0, -1.21 * kPi, -12.04 * kPi, -1.37 * kPi, 0.0};
  spec.interaction = 108.24 * kPi;
  spec.evolution_time = 1.0;
  return spec;
}

ComplexMatrix analytic_gate_matrix(const AnalyticGate& gate) {
  using Kind = AnalyticGate::Kind;
  switch (gate.kind) {
    case Kind::kPhase:
      return target_phase(gate.angle).matrix;
    case Kind::kHadamard:
      return target_hadamard().matrix;
    case Kind::kRz:
      return rz_matrix(gate.angle);
    case Kind::kRx:
      return rx_matrix(gate.angle);
    case Kind::kGlobalPhase:
      return std::polar(1.0, gate.angle) * ComplexMatrix::Identity(2, 2);
  }
  throw DomainError("analytic_gate_matrix: unknown gate kind");
}

LatticeSpec analytic_gate_lattice(const AnalyticGate& gate) {
  using Kind = AnalyticGate::Kind;
  const double theta = gate.angle;
  require(std::isfinite(theta), "analytic_gate_lattice: angle must be finite");
  LatticeSpec spec;
  spec.hoppings = {0.0};
  spec.interaction = 0.0;
  switch (gate.kind) {
    case Kind::kPhase:
      spec.onsite = {0.0, -theta};
      spec.evolution_time = 1.0;
      break;
    case Kind::kHadamard: {
      const double r2 = std::sqrt(2.0);
      spec.onsite = {r2 - 1.0, r2 + 1.0};
      spec.hoppings = {-1.0};
      spec.evolution_time = kPi / (2.0 * r2);
      break;
    }
    case Kind::kRz:
      require(theta >= 0.0, "analytic_gate_lattice: rz angle must be >= 0");
      if (theta == 0.0) return analytic_gate_lattice(AnalyticGate::global_phase(0.0));
      spec.onsite = {1.0, -1.0};
      spec.evolution_time = theta / 2.0;
      break;
    case Kind::kRx:
      require(theta >= 0.0 && theta < 4.0 * kPi,
              "analytic_gate_lattice: rx angle must lie in [0, 4pi)");
      spec.onsite = {0.0, 0.0};
      spec.hoppings = {-1.0};
      spec.evolution_time = (4.0 * kPi - theta) / 2.0;
      break;
    case Kind::kGlobalPhase:
      spec.onsite = {-theta, -theta};
      spec.evolution_time = 1.0;
      break;
  }
  return spec;
}

ZxzAngles decompose_single_qubit(const ComplexMatrix& u) {
  require(u.rows() == 2 && u.cols() == 2, "decompose_single_qubit: need a 2x2 matrix");
  require(unitarity_residual(u) <= 1e-10, "decompose_single_qubit: matrix is not unitary");

  ZxzAngles a;
  a.alpha = wrap(std::arg(u.determinant()) / 2.0, 2.0 * kPi);
  const ComplexMatrix v = std::polar(1.0, -a.alpha) * u;  // in SU(2)

  // v = [[c e^{-i s/2}, -i s' e^{-i d/2}], [-i s' e^{i d/2}, c e^{i s/2}]]
  // with s = beta + delta, d = beta - delta, c = cos(gamma/2), s' = sin(gamma/2).
  const double c = std::abs(v(0, 0));
  const double s = std::abs(v(1, 0));
  a.gamma = 2.0 * std::atan2(s, c);

  constexpr double kTiny = 1e-14;
  double sum = 0.0;
  double diff = 0.0;
  const bool have_sum = c > kTiny;
  const bool have_diff = s > kTiny;
  if (have_sum) sum = 2.0 * std::arg(v(1, 1));
  if (have_diff) diff = 2.0 * std::arg(1i * v(1, 0));
  if (!have_sum) sum = diff;   // delta = 0
  if (!have_diff) diff = sum;  // delta = 0

  a.beta = wrap((sum + diff) / 2.0, 4.0 * kPi);
  a.delta = wrap((sum - diff) / 2.0, 4.0 * kPi);

  // The halved sum/difference fixes beta and delta only up to a shared 2pi,
  // which flips the overall sign; repair it against the input.
  if ((reconstruct_zxz(a) - u).cwiseAbs().maxCoeff() > 1e-6) {
    a.beta = wrap(a.beta + 2.0 * kPi, 4.0 * kPi);
  }
  return a;
}

ComplexMatrix reconstruct_zxz(const ZxzAngles& a) {
  return std::polar(1.0, a.alpha) * rz_matrix(a.beta) * rx_matrix(a.gamma) *
         rz_matrix(a.delta);
}

}  // namespace qwgate
