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

#ifndef QWGATE_ERROR_H
#define QWGATE_ERROR_H

#include <stdexcept>
#include <string>

namespace qwgate {

/// Raised when an argument lies outside an operation's domain: bad shapes,
/// out-of-range indices, non-Hermitian or non-unitary inputs.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline void require(bool condition, const std::string& message) {
  if (!condition) throw DomainError(message);
}

}  // namespace qwgate

#endif  // QWGATE_ERROR_H
