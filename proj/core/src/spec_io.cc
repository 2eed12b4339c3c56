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

#include "qwgate/spec_io.h"

#include <cctype>
#include <charconv>
#include <fstream>
#include <numbers>
#include <sstream>

#include "json.hpp"

namespace qwgate {

using nlohmann::json;

namespace {

double parse_plain(std::string_view text, std::string_view whole) {
  double value = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (!text.empty() && text.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  require(ec == std::errc() && ptr == last,
          "parse_scalar: cannot parse '" + std::string(whole) + "'");
  return value;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

double parse_scalar(std::string_view text) {
  const std::string_view whole = text;
  text = trim(text);
  require(!text.empty(), "parse_scalar: empty value");

  double divisor = 1.0;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    divisor = parse_plain(trim(text.substr(slash + 1)), whole);
    require(divisor != 0.0, "parse_scalar: division by zero in '" + std::string(whole) + "'");
    text = trim(text.substr(0, slash));
  }

  double factor = 1.0;
  if (text.size() >= 2 && text.substr(text.size() - 2) == "pi") {
    factor = std::numbers::pi;
    text.remove_suffix(2);
    if (!text.empty() && text.back() == '*') text.remove_suffix(1);
    text = trim(text);
    if (text.empty() || text == "+") return factor / divisor;
    if (text == "-") return -factor / divisor;
  }
  return parse_plain(text, whole) * factor / divisor;
}

LatticeSpec lattice_from_json(std::string_view text, Units units_override) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw DomainError(std::string("lattice spec: malformed JSON: ") + e.what());
  }
  require(doc.is_object(), "lattice spec: top level must be an object");
  require(doc.contains("onsite") && doc["onsite"].is_array(),
          "lattice spec: missing array 'onsite'");

  double scale = 1.0;
  if (doc.contains("units")) {
    require(doc["units"].is_string(), "lattice spec: 'units' must be a string");
    const auto units = doc["units"].get<std::string>();
    require(units == "pi" || units == "raw",
            "lattice spec: 'units' must be \"pi\" or \"raw\"");
    if (units == "pi") scale = std::numbers::pi;
  }
  if (units_override == Units::kPi) scale = std::numbers::pi;

  auto read_number = [&](const json& value, const char* what) {
    require(value.is_number(), std::string("lattice spec: non-numeric ") + what);
    return value.get<double>();
  };

  LatticeSpec spec;
  try {
    for (const auto& v : doc["onsite"]) spec.onsite.push_back(scale * read_number(v, "onsite"));
    if (doc.contains("hoppings")) {
      require(doc["hoppings"].is_array(), "lattice spec: 'hoppings' must be an array");
      for (const auto& v : doc["hoppings"]) {
        spec.hoppings.push_back(scale * read_number(v, "hopping"));
      }
    }
    if (doc.contains("interaction")) {
      spec.interaction = scale * read_number(doc["interaction"], "interaction");
    }
    if (doc.contains("evolution_time")) {
      spec.evolution_time = read_number(doc["evolution_time"], "evolution_time");
    }
  } catch (const json::exception& e) {
    throw DomainError(std::string("lattice spec: ") + e.what());
  }
  spec.check();
  return spec;
}

LatticeSpec load_lattice(const std::string& path, Units units_override) {
  return lattice_from_json(read_text_file(path), units_override);
}

std::string lattice_to_json(const LatticeSpec& spec) {
  json doc;
  doc["onsite"] = spec.onsite;
  doc["hoppings"] = spec.hoppings;
  doc["interaction"] = spec.interaction;
  doc["evolution_time"] = spec.evolution_time;
  doc["units"] = "raw";
  // nlohmann emits the shortest representation that round-trips.
  return doc.dump(2) + "\n";
}

void save_lattice(const std::string& path, const LatticeSpec& spec) {
  write_text_file(path, lattice_to_json(spec));
}

ComplexMatrix matrix_from_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw DomainError(std::string("matrix: malformed JSON: ") + e.what());
  }
  require(doc.is_object() && doc.contains("real") && doc["real"].is_array(),
          "matrix: expected an object with a 'real' array of rows");
  const json& re = doc["real"];
  const bool has_imag = doc.contains("imag");
  const auto rows = static_cast<Eigen::Index>(re.size());
  require(rows > 0, "matrix: no rows");
  const auto cols = static_cast<Eigen::Index>(re[0].size());
  require(!has_imag || (doc["imag"].is_array() &&
                        static_cast<Eigen::Index>(doc["imag"].size()) == rows),
          "matrix: 'imag' shape differs from 'real'");
  ComplexMatrix m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    const json& rrow = re[static_cast<std::size_t>(r)];
    require(rrow.is_array() && static_cast<Eigen::Index>(rrow.size()) == cols,
            "matrix: ragged rows");
    for (Eigen::Index c = 0; c < cols; ++c) {
      const json& a = rrow[static_cast<std::size_t>(c)];
      require(a.is_number(), "matrix: non-numeric entry");
      double imag = 0.0;
      if (has_imag) {
        const json& irow = doc["imag"][static_cast<std::size_t>(r)];
        require(irow.is_array() && static_cast<Eigen::Index>(irow.size()) == cols,
                "matrix: 'imag' shape differs from 'real'");
        require(irow[static_cast<std::size_t>(c)].is_number(), "matrix: non-numeric entry");
        imag = irow[static_cast<std::size_t>(c)].get<double>();
      }
      m(r, c) = {a.get<double>(), imag};
    }
  }
  return m;
}

std::string matrix_to_json(const ComplexMatrix& m) {
  json re = json::array();
  json im = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json rr = json::array();
    json ir = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      rr.push_back(m(r, c).real());
      ir.push_back(m(r, c).imag());
    }
    re.push_back(std::move(rr));
    im.push_back(std::move(ir));
  }
  return json{{"real", re}, {"imag", im}}.dump(2) + "\n";
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  require(static_cast<bool>(in), "cannot open '" + path + "' for reading");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  require(static_cast<bool>(out), "cannot open '" + path + "' for writing");
  out << content;
  require(static_cast<bool>(out), "failed writing '" + path + "'");
}

}  // namespace qwgate
