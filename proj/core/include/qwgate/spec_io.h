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

#ifndef QWGATE_SPEC_IO_H
#define QWGATE_SPEC_IO_H

#include <string>
#include <string_view>

#include "qwgate/hamiltonian.h"

namespace qwgate {

/// Parses a real with an optional factor of pi: "1.5", "4pi", "-0.5pi",
/// "pi", "pi/2", "3pi/4", "1e-3". Throws DomainError otherwise.
double parse_scalar(std::string_view text);

enum class Units { kRaw, kPi };

/// Lattice spec file:
///   {"onsite": [...], "hoppings": [...], "interaction": x,
///    "evolution_time": t, "units": "pi"}
/// With "units": "pi" every value except evolution_time is multiplied by
/// pi on load. evolution_time defaults to 1. `units_override` (when kPi)
/// forces the pi scaling regardless of the file.
LatticeSpec lattice_from_json(std::string_view text, Units units_override = Units::kRaw);
LatticeSpec load_lattice(const std::string& path, Units units_override = Units::kRaw);

/// Always writes raw values with "units": "raw", 17 significant digits, so
/// a load of the output reproduces the spec bit-exactly.
std::string lattice_to_json(const LatticeSpec& spec);
void save_lattice(const std::string& path, const LatticeSpec& spec);

/// {"real": [[...]], "imag": [[...]]}; "imag" may be omitted.
ComplexMatrix matrix_from_json(std::string_view text);
std::string matrix_to_json(const ComplexMatrix& m);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view content);

}  // namespace qwgate

#endif  // QWGATE_SPEC_IO_H
