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

#include "qwgate/fock.h"

#include <cmath>
#include <limits>
#include <numeric>

namespace qwgate {

FockState::FockState(Occupations occupations) : occ_(std::move(occupations)) {}

FockState::FockState(std::initializer_list<int> occupations) {
  occ_.reserve(occupations.size());
  for (int n : occupations) {
    require(n >= 0 && n <= std::numeric_limits<std::uint8_t>::max(),
            "FockState: occupation out of range");
    occ_.push_back(static_cast<std::uint8_t>(n));
  }
}

int FockState::particles() const {
  return std::accumulate(occ_.begin(), occ_.end(), 0);
}

std::string FockState::label() const {
  std::string out = "|";
  for (auto n : occ_) out += std::to_string(n);
  out += ">";
  return out;
}

namespace {

// Emits compositions of `remaining` into sites [site, end) in descending
// lexicographic order: the leading site takes the largest count first.
void enumerate_into(Occupations& current, std::size_t site, int remaining,
                    std::vector<FockState>& out) {
  if (site + 1 == current.size()) {
    current[site] = static_cast<std::uint8_t>(remaining);
    out.emplace_back(current);
    return;
  }
  for (int n = remaining; n >= 0; --n) {
    current[site] = static_cast<std::uint8_t>(n);
    enumerate_into(current, site + 1, remaining - n, out);
  }
  current[site] = 0;
}

}  // namespace

FockBasis::FockBasis(int sites, int particles)
    : sites_(sites), particles_(particles) {
  require(sites >= 1, "enumerate_basis: sites must be >= 1");
  require(particles >= 1, "enumerate_basis: particles must be >= 1");
  require(particles <= std::numeric_limits<std::uint8_t>::max(),
          "enumerate_basis: too many particles");
  states_.reserve(basis_dimension(sites, particles));
  Occupations scratch(static_cast<std::size_t>(sites), 0);
  enumerate_into(scratch, 0, particles, states_);
  for (std::size_t k = 0; k < states_.size(); ++k) {
    lookup_.emplace(states_[k].occupations(), k);
  }
}

std::optional<std::size_t> FockBasis::find(const FockState& state) const {
  auto it = lookup_.find(state.occupations());
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

std::size_t FockBasis::index(const FockState& state) const {
  auto k = find(state);
  require(k.has_value(), "FockBasis: " + state.label() + " is not in the basis");
  return *k;
}

FockBasis enumerate_basis(int sites, int particles) {
  return FockBasis(sites, particles);
}

std::size_t basis_dimension(int sites, int particles) {
  require(sites >= 1 && particles >= 0, "basis_dimension: bad shape");
  // C(n + k, k) with k = sites - 1, built incrementally to stay exact.
  std::size_t k = static_cast<std::size_t>(sites - 1);
  std::size_t n = static_cast<std::size_t>(particles);
  std::size_t result = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    result = result * (n + i) / i;
  }
  return result;
}

std::optional<HopResult> apply_hop(const FockState& state, std::size_t dest,
                                   std::size_t src) {
  require(dest < state.sites() && src < state.sites(),
          "apply_hop: site index out of range");
  require(dest != src, "apply_hop: dest and src must differ");
  const int n_src = state[src];
  if (n_src == 0) return std::nullopt;
  const int n_dest = state[dest];
  Occupations occ = state.occupations();
  occ[src] = static_cast<std::uint8_t>(n_src - 1);
  occ[dest] = static_cast<std::uint8_t>(n_dest + 1);
  return HopResult{FockState(std::move(occ)),
                   std::sqrt(static_cast<double>((n_dest + 1) * n_src))};
}

double number_diagonal(const FockState& state, std::span<const double> energies,
                       double gamma) {
  require(energies.size() == state.sites(),
          "number_diagonal: energies length must equal site count");
  double onsite = 0.0;
  double pairs = 0.0;
  for (std::size_t m = 0; m < state.sites(); ++m) {
    const double n = state[m];
    onsite += energies[m] * n;
    pairs += n * (n - 1.0);
  }
  return onsite + 0.5 * gamma * pairs;
}

}  // namespace qwgate
