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

#ifndef QWGATE_FOCK_H
#define QWGATE_FOCK_H

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qwgate/error.h"

namespace qwgate {

/// Occupation number vector: bosons per site, site 0 first.
using Occupations = std::vector<std::uint8_t>;

class FockState {
 public:
  FockState() = default;
  explicit FockState(Occupations occupations);
  FockState(std::initializer_list<int> occupations);

  std::size_t sites() const { return occ_.size(); }
  int particles() const;
  int operator[](std::size_t site) const { return occ_[site]; }
  const Occupations& occupations() const { return occ_; }

  /// Renders as a ket label, e.g. "|1010>".
  std::string label() const;

  friend bool operator==(const FockState&, const FockState&) = default;
  friend auto operator<=>(const FockState&, const FockState&) = default;

 private:
  Occupations occ_;
};

/// Ordered basis of every occupation vector of `particles` bosons on `sites`
/// sites.
///
/// Ordering is descending lexicographic with site 0 most significant, so
/// (2,0,0,0) precedes (1,1,0,0) which precedes (1,0,1,0). Serialized
/// matrices and test goldens depend on this order.
class FockBasis {
 public:
  FockBasis(int sites, int particles);

  int sites() const { return sites_; }
  int particles() const { return particles_; }
  std::size_t dimension() const { return states_.size(); }

  const FockState& state(std::size_t k) const { return states_.at(k); }
  const std::vector<FockState>& states() const { return states_; }

  /// Position of `state` in the basis; nullopt when it is not a member.
  std::optional<std::size_t> find(const FockState& state) const;
  /// As find(), but throws DomainError for non-members.
  std::size_t index(const FockState& state) const;

 private:
  int sites_;
  int particles_;
  std::vector<FockState> states_;
  std::map<Occupations, std::size_t> lookup_;
};

/// Throws DomainError unless sites >= 1 and particles >= 1.
FockBasis enumerate_basis(int sites, int particles);

/// C(particles + sites - 1, sites - 1).
std::size_t basis_dimension(int sites, int particles);

struct HopResult {
  FockState state;
  double amplitude;
};

/// Matrix element of a†_dest a_src acting on `state`. Site indices are
/// zero-based. Returns nullopt when the source site is empty.
std::optional<HopResult> apply_hop(const FockState& state, std::size_t dest,
                                   std::size_t src);

/// Sum_m E_m n_m + (gamma/2) Sum_m n_m (n_m - 1).
double number_diagonal(const FockState& state, std::span<const double> energies,
                       double gamma);

}  // namespace qwgate

#endif  // QWGATE_FOCK_H
