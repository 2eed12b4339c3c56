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

#ifndef QWGATE_TESTS_TEST_UTIL_H
#define QWGATE_TESTS_TEST_UTIL_H

#include <random>

#include "qwgate/hamiltonian.h"

namespace qwgate::test {

/// Onsite in [-mag, mag], hoppings in [-mag, 0], interaction in [0, mag].
inline LatticeSpec random_spec(int sites, double mag, std::mt19937_64& rng,
                               double evolution_time = 1.0) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  LatticeSpec spec;
  for (int s = 0; s < sites; ++s) spec.onsite.push_back(mag * (2.0 * u(rng) - 1.0));
  for (int s = 0; s + 1 < sites; ++s) spec.hoppings.push_back(-mag * u(rng));
  spec.interaction = mag * u(rng);
  spec.evolution_time = evolution_time;
  return spec;
}

inline double max_abs(const ComplexMatrix& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace qwgate::test

#endif  // QWGATE_TESTS_TEST_UTIL_H
