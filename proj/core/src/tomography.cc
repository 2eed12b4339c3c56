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

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <map>
#include <random>
#include <sstream>

#include "json.hpp"
#include "qwgate/evolve.h"

namespace qwgate::tomo {

using cplx = std::complex<double>;
using namespace std::complex_literals;

std::string to_string(Prep p) {
  switch (p) {
    case Prep::kZero: return "0";
    case Prep::kOne: return "1";
    case Prep::kPlus: return "+";
    case Prep::kMinus: return "-";
  }
  return "?";
}

std::string to_string(Rotation r) {
  switch (r) {
    case Rotation::kNone: return "none";
    case Rotation::kX: return "X";
    case Rotation::kY: return "Y";
  }
  return "?";
}

Prep parse_prep(const std::string& s) {
  for (Prep p : kAllPreps) {
    if (to_string(p) == s) return p;
  }
  throw DomainError("unknown preparation '" + s + "'");
}

Rotation parse_rotation(const std::string& s) {
  for (Rotation r : kAllRotations) {
    if (to_string(r) == s) return r;
  }
  throw DomainError("unknown rotation '" + s + "'");
}

BasisRotations basis_rotations() {
  BasisRotations b;
  const double r = 1.0 / std::sqrt(2.0);
  b.u_x.resize(2, 2);
  b.u_x << r, r, r, -r;
  b.u_y.resize(2, 2);
  b.u_y << r, -1i * r, -1i * r, r;
  b.u_y_dagger = b.u_y.adjoint();
  b.u_x_lattice = analytic_gate_lattice(AnalyticGate::hadamard());
  b.u_y_lattice = analytic_gate_lattice(AnalyticGate::rx(kPi / 2.0));
  b.u_y_dagger_lattice = analytic_gate_lattice(AnalyticGate::rx(7.0 * kPi / 2.0));
  return b;
}

namespace {

const BasisRotations& rotations() {
  static const BasisRotations r = basis_rotations();
  return r;
}

ComplexMatrix rotation_matrix(Rotation r) {
  switch (r) {
    case Rotation::kNone: return ComplexMatrix::Identity(2, 2);
    case Rotation::kX: return rotations().u_x;
    case Rotation::kY: return rotations().u_y;
  }
  throw DomainError("bad rotation");
}

std::optional<LatticeSpec> rotation_lattice(Rotation r) {
  switch (r) {
    case Rotation::kNone: return std::nullopt;
    case Rotation::kX: return rotations().u_x_lattice;
    case Rotation::kY: return rotations().u_y_lattice;
  }
  return std::nullopt;
}

std::optional<LatticeSpec> preparation_lattice(Prep p) {
  switch (p) {
    case Prep::kZero:
    case Prep::kOne: return std::nullopt;
    case Prep::kPlus: return rotations().u_x_lattice;
    case Prep::kMinus: return rotations().u_y_dagger_lattice;
  }
  return std::nullopt;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

ComplexVector kron(const ComplexVector& a, const ComplexVector& b) {
  ComplexVector out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i) out.segment(i * b.size(), b.size()) = a(i) * b;
  return out;
}

const std::array<ComplexMatrix, 4>& paulis() {
  static const std::array<ComplexMatrix, 4> p = [] {
    std::array<ComplexMatrix, 4> m;
    m[0] = ComplexMatrix::Identity(2, 2);
    m[1].resize(2, 2);
    m[1] << 0.0, 1.0, 1.0, 0.0;
    m[2].resize(2, 2);
    m[2] << 0.0, -1i, 1i, 0.0;
    m[3].resize(2, 2);
    m[3] << 1.0, 0.0, 0.0, -1.0;
    return m;
  }();
  return p;
}

const std::array<ComplexMatrix, 16>& two_qubit_paulis() {
  static const std::array<ComplexMatrix, 16> p = [] {
    std::array<ComplexMatrix, 16> m;
    for (int a = 0; a < 4; ++a) {
      for (int b = 0; b < 4; ++b) m[static_cast<std::size_t>(4 * a + b)] = kron(paulis()[a], paulis()[b]);
    }
    return m;
  }();
  return p;
}

// Single-qubit lattice embedded on qubit `qubit`'s site pair of the
// four-site lattice; the other pair is left idle and the pairs decoupled.
ComplexMatrix embedded_lattice_unitary(const LatticeSpec& single, int qubit,
                                       const FockBasis& basis) {
  LatticeSpec spec;
  spec.onsite.assign(4, 0.0);
  spec.hoppings.assign(3, 0.0);
  spec.interaction = single.interaction;
  const std::size_t offset = static_cast<std::size_t>(2 * qubit);
  spec.onsite[offset] = single.onsite[0];
  spec.onsite[offset + 1] = single.onsite[1];
  spec.hoppings[offset] = single.hoppings[0];
  return Propagator(build_hamiltonian_real(spec, basis)).unitary(single.evolution_time);
}

const FockBasis& two_qubit_basis() {
  static const FockBasis basis(4, 2);
  return basis;
}

const DualRailEncoding& two_qubit_encoding() {
  static const DualRailEncoding enc = logical_indices(2, two_qubit_basis());
  return enc;
}

}  // namespace

ComplexVector input_state(Prep p) {
  const Preparation prep = preparation(p);
  ComplexVector basis_state = ComplexVector::Zero(2);
  basis_state(prep.bit) = 1.0;
  return prep.unitary * basis_state;
}

std::array<ComplexVector, 4> input_states() {
  return {input_state(Prep::kZero), input_state(Prep::kOne), input_state(Prep::kPlus),
          input_state(Prep::kMinus)};
}

Preparation preparation(Prep p) {
  switch (p) {
    case Prep::kZero: return {0, ComplexMatrix::Identity(2, 2)};
    case Prep::kOne: return {1, ComplexMatrix::Identity(2, 2)};
    case Prep::kPlus: return {0, rotations().u_x};
    case Prep::kMinus: return {0, rotations().u_y_dagger};
  }
  throw DomainError("bad preparation");
}

unsigned Setting::input_bits() const {
  return (preparation(prep[0]).bit << 1) | preparation(prep[1]).bit;
}

std::vector<Setting> all_settings() {
  std::vector<Setting> out;
  out.reserve(144);
  for (Prep p1 : kAllPreps) {
    for (Prep p2 : kAllPreps) {
      for (Rotation r1 : kAllRotations) {
        for (Rotation r2 : kAllRotations) out.push_back({{p1, p2}, {r1, r2}});
      }
    }
  }
  return out;
}

GateUnderTest GateUnderTest::logical(ComplexMatrix u) {
  require(u.rows() == 4 && u.cols() == 4, "GateUnderTest: logical gate must be 4x4");
  GateUnderTest g;
  g.unitary_ = std::move(u);
  g.lattice_ = false;
  return g;
}

GateUnderTest GateUnderTest::lattice(const LatticeSpec& spec) {
  require(spec.sites() == 4, "GateUnderTest: tomography needs a four-site (two-qubit) lattice");
  spec.check();
  GateUnderTest g;
  g.unitary_ = unitary_at(build_hamiltonian(spec, two_qubit_basis()), spec.evolution_time).entries();
  g.lattice_ = true;
  return g;
}

Record simulate_setting(const GateUnderTest& gate, const Setting& setting) {
  Record rec;
  rec.setting = setting;
  if (!gate.is_lattice()) {
    const ComplexVector psi_in =
        kron(input_state(setting.prep[0]), input_state(setting.prep[1]));
    const ComplexMatrix rot =
        kron(rotation_matrix(setting.rotation[0]), rotation_matrix(setting.rotation[1]));
    const ComplexVector out = rot * (gate.unitary() * psi_in);
    double total = 0.0;
    for (int k = 0; k < 4; ++k) {
      rec.probabilities[static_cast<std::size_t>(k)] = std::norm(out(k));
      total += std::norm(out(k));
    }
    rec.leakage = std::max(0.0, 1.0 - total);
    return rec;
  }

  const FockBasis& basis = two_qubit_basis();
  ComplexVector psi = ComplexVector::Zero(static_cast<Eigen::Index>(basis.dimension()));
  psi(static_cast<Eigen::Index>(basis.index(dual_rail_state(2, setting.input_bits())))) = 1.0;
  for (int q = 0; q < 2; ++q) {
    if (auto lat = preparation_lattice(setting.prep[static_cast<std::size_t>(q)])) {
      psi = embedded_lattice_unitary(*lat, q, basis) * psi;
    }
  }
  psi = gate.unitary() * psi;
  for (int q = 0; q < 2; ++q) {
    if (auto lat = rotation_lattice(setting.rotation[static_cast<std::size_t>(q)])) {
      psi = embedded_lattice_unitary(*lat, q, basis) * psi;
    }
  }
  const DualRailEncoding& enc = two_qubit_encoding();
  double total = 0.0;
  for (std::size_t k = 0; k < 4; ++k) {
    rec.probabilities[k] = std::norm(psi(enc.indices[k]));
    total += rec.probabilities[k];
  }
  rec.leakage = std::max(0.0, psi.squaredNorm() - total);
  return rec;
}

std::vector<Record> simulate_all(const GateUnderTest& gate) {
  std::vector<Record> out;
  for (const Setting& s : all_settings()) out.push_back(simulate_setting(gate, s));
  return out;
}

std::vector<Record> sample_shots(const std::vector<Record>& exact, int shots,
                                 std::uint64_t seed) {
  require(shots >= 1, "sample_shots: shots must be >= 1");
  std::mt19937_64 rng(seed);
  std::vector<Record> out = exact;
  for (Record& rec : out) {
    std::array<double, 5> cumulative{};
    double acc = 0.0;
    for (std::size_t k = 0; k < 4; ++k) {
      acc += rec.probabilities[k];
      cumulative[k] = acc;
    }
    cumulative[4] = acc + rec.leakage;
    std::array<int, 5> counts{};
    for (int s = 0; s < shots; ++s) {
      const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53 * cumulative[4];
      std::size_t k = 0;
      while (k < 4 && u >= cumulative[k]) ++k;
      ++counts[k];
    }
    for (std::size_t k = 0; k < 4; ++k) rec.probabilities[k] = static_cast<double>(counts[k]) / shots;
    rec.leakage = static_cast<double>(counts[4]) / shots;
  }
  return out;
}

std::vector<std::string> pauli_labels() {
  static constexpr const char* kNames = "IXYZ";
  std::vector<std::string> out;
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) out.push_back(std::string{kNames[a], kNames[b]});
  }
  return out;
}

namespace {

// Rows: (setting in all_settings() order, outcome k). Columns: m * 16 + n.
// Entry Tr(M_k P_m rho P_n^dagger) = conj((R P_n psi)_k) (R P_m psi)_k.
const ComplexMatrix& design_matrix() {
  static const ComplexMatrix a = [] {
    const auto settings = all_settings();
    const auto& p = two_qubit_paulis();
    ComplexMatrix m(static_cast<Eigen::Index>(settings.size() * 4), 256);
    for (std::size_t s = 0; s < settings.size(); ++s) {
      const Setting& st = settings[s];
      const ComplexVector psi = kron(input_state(st.prep[0]), input_state(st.prep[1]));
      const ComplexMatrix rot =
          kron(rotation_matrix(st.rotation[0]), rotation_matrix(st.rotation[1]));
      std::array<ComplexVector, 16> w;
      for (std::size_t i = 0; i < 16; ++i) w[i] = rot * (p[i] * psi);
      for (Eigen::Index k = 0; k < 4; ++k) {
        const Eigen::Index row = static_cast<Eigen::Index>(s) * 4 + k;
        for (std::size_t mi = 0; mi < 16; ++mi) {
          for (std::size_t ni = 0; ni < 16; ++ni) {
            m(row, static_cast<Eigen::Index>(mi * 16 + ni)) = std::conj(w[ni](k)) * w[mi](k);
          }
        }
      }
    }
    return m;
  }();
  return a;
}

const Eigen::ColPivHouseholderQR<ComplexMatrix>& design_solver() {
  static const Eigen::ColPivHouseholderQR<ComplexMatrix> qr(design_matrix());
  return qr;
}

std::string setting_key(const Setting& s) {
  return to_string(s.prep[0]) + to_string(s.prep[1]) + "/" + to_string(s.rotation[0]) +
         to_string(s.rotation[1]);
}

}  // namespace

ProcessMatrix reconstruct_chi(const std::vector<Record>& records) {
  std::map<std::string, const Record*> by_key;
  for (const Record& r : records) by_key[setting_key(r.setting)] = &r;

  const auto settings = all_settings();
  std::vector<std::string> missing;
  for (const Setting& s : settings) {
    const std::string key = setting_key(s);
    if (!by_key.count(key)) missing.push_back(key);
  }
  if (!missing.empty()) {
    std::string msg = "reconstruct_chi: incomplete setting set, missing " +
                      std::to_string(missing.size()) + ":";
    for (std::size_t i = 0; i < missing.size() && i < 16; ++i) msg += " " + missing[i];
    if (missing.size() > 16) msg += " ...";
    throw DomainError(msg);
  }

  ComplexVector data(static_cast<Eigen::Index>(settings.size() * 4));
  double leak_sum = 0.0;
  for (std::size_t s = 0; s < settings.size(); ++s) {
    const Record& r = *by_key.at(setting_key(settings[s]));
    double logical = 0.0;
    for (double p : r.probabilities) logical += p;
    require(logical > 0.0, "reconstruct_chi: record with zero logical probability");
    for (std::size_t k = 0; k < 4; ++k) {
      data(static_cast<Eigen::Index>(s * 4 + k)) = r.probabilities[k] / logical;
    }
    leak_sum += r.leakage;
  }

  const ComplexVector x = design_solver().solve(data);
  ProcessMatrix out;
  out.chi.resize(16, 16);
  for (Eigen::Index m = 0; m < 16; ++m) {
    for (Eigen::Index n = 0; n < 16; ++n) out.chi(m, n) = x(m * 16 + n);
  }
  out.mean_leakage = leak_sum / static_cast<double>(settings.size());
  return out;
}

ComplexMatrix chi_of_unitary(const ComplexMatrix& u) {
  require(u.rows() == 4 && u.cols() == 4, "chi_of_unitary: need a 4x4 matrix");
  const auto& p = two_qubit_paulis();
  ComplexVector c(16);
  for (std::size_t m = 0; m < 16; ++m) {
    c(static_cast<Eigen::Index>(m)) = (p[m].adjoint() * u).trace() / 4.0;
  }
  return c * c.adjoint();
}

double process_fidelity(const ComplexMatrix& chi, const ComplexMatrix& chi_ideal) {
  require(chi.rows() == chi_ideal.rows() && chi.cols() == chi_ideal.cols() &&
              chi.rows() == chi.cols(),
          "process_fidelity: dimension mismatch");
  return (chi_ideal * chi).trace().real();
}

double trace_preservation_residual(const ComplexMatrix& chi) {
  require(chi.rows() == 16 && chi.cols() == 16, "trace_preservation_residual: need 16x16 chi");
  const auto& p = two_qubit_paulis();
  ComplexMatrix sum = ComplexMatrix::Zero(4, 4);
  for (std::size_t m = 0; m < 16; ++m) {
    for (std::size_t n = 0; n < 16; ++n) {
      sum += chi(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(n)) *
             (p[n].adjoint() * p[m]);
    }
  }
  return (sum - ComplexMatrix::Identity(4, 4)).cwiseAbs().maxCoeff();
}

void write_records_csv(std::ostream& os, const std::vector<Record>& records) {
  const auto saved = os.precision();
  os << "prep_q1,prep_q2,rot_q1,rot_q2,p00,p01,p10,p11,leak\n" << std::setprecision(12);
  for (const Record& r : records) {
    os << to_string(r.setting.prep[0]) << "," << to_string(r.setting.prep[1]) << ","
       << to_string(r.setting.rotation[0]) << "," << to_string(r.setting.rotation[1]);
    for (double p : r.probabilities) os << "," << p;
    os << "," << r.leakage << "\n";
  }
  os.precision(saved);
}

std::string chi_to_json(const ProcessMatrix& chi) {
  using nlohmann::json;
  json re = json::array();
  json im = json::array();
  for (Eigen::Index r = 0; r < chi.chi.rows(); ++r) {
    json rr = json::array();
    json ir = json::array();
    for (Eigen::Index c = 0; c < chi.chi.cols(); ++c) {
      rr.push_back(chi.chi(r, c).real());
      ir.push_back(chi.chi(r, c).imag());
    }
    re.push_back(std::move(rr));
    im.push_back(std::move(ir));
  }
  json doc;
  doc["labels"] = pauli_labels();
  doc["real"] = std::move(re);
  doc["imag"] = std::move(im);
  doc["mean_leakage"] = chi.mean_leakage;
  return doc.dump(2) + "\n";
}

}  // namespace qwgate::tomo
