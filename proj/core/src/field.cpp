/*
   Copyright 2026 The idealcount Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "idealcount/field.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <set>
#include <sstream>

#include "json.hpp"

namespace idealcount {
namespace {

using nlohmann::json;

bool squarefree(std::int64_t m) {
  std::uint64_t v = m < 0 ? static_cast<std::uint64_t>(-(m + 1)) + 1 : static_cast<std::uint64_t>(m);
  if (v == 0) return false;
  for (std::uint64_t p = 2; p * p <= v; ++p) {
    if (v % p != 0) continue;
    v /= p;
    if (v % p == 0) return false;
  }
  return true;
}

std::int64_t mod4(std::int64_t d) { return ((d % 4) + 4) % 4; }

template <typename T>
T get_integer(const json& doc, const char* key) {
  const json& v = doc.at(key);
  if (!v.is_number_integer()) throw ParseError(std::string("field key '") + key + "' must be an integer");
  return v.get<T>();
}

}  // namespace

std::int64_t delta0(int n) {
  switch (n) {
    case 1: return 1;
    case 2: return 3;
    case 3: return 23;
    case 4: return 117;
    case 5: return 1607;
    case 6: return 9747;
    case 7: return 184607;
    default:
      if (n < 1) throw DomainError("delta0: degree must be positive");
      return 184607;
  }
}

bool is_fundamental_discriminant(std::int64_t d) {
  if (d == 0 || d == 1) return false;
  if (mod4(d) == 1) return squarefree(d);
  if (mod4(d) != 0) return false;
  const std::int64_t m = d / 4;
  return (mod4(m) == 2 || mod4(m) == 3) && squarefree(m);
}

void validate(FieldSpec& f) {
  if (f.degree < 1) throw InvariantViolation("degree >= 1", "degree = " + std::to_string(f.degree));
  if (f.r1 < 0 || f.r2 < 0) throw InvariantViolation("r1 >= 0 and r2 >= 0", "");
  if (f.degree != f.r1 + 2 * f.r2)
    throw InvariantViolation("degree == r1 + 2*r2", std::to_string(f.degree) + " != " + std::to_string(f.r1) +
                                                        " + 2*" + std::to_string(f.r2));
  if (f.disc == 0) throw InvariantViolation("disc != 0", "");
  const std::int64_t abs_disc = f.disc < 0 ? -f.disc : f.disc;
  if (f.degree >= 2 && f.degree <= 7 && abs_disc < delta0(f.degree))
    throw DiscTooSmall("|disc| >= delta0(degree)", "|disc| = " + std::to_string(abs_disc) + " < " +
                                                       std::to_string(delta0(f.degree)));
  if (f.degree >= 8 && abs_disc < delta0(f.degree))
    f.warnings.push_back("|disc| below 184607 for degree >= 8; no unconditional minimum is known");
  if (f.degree == 1) f.warnings.push_back("degree-1 field: I(x) = floor(x) and constant evaluators reject n < 2");
  if (f.poly) {
    const auto& p = *f.poly;
    if (p.size() < 2 || p.back() != 1) throw InvariantViolation("poly is monic", "last coefficient must be 1");
    if (static_cast<int>(p.size()) - 1 != f.degree)
      throw InvariantViolation("deg(poly) == degree", "deg(poly) = " + std::to_string(p.size() - 1));
  }
  if (f.fundamental_disc) {
    if (f.degree != 2) throw InvariantViolation("fundamental_disc only for degree 2", "");
    if (*f.fundamental_disc != f.disc) throw InvariantViolation("fundamental_disc == disc", "");
    if (!is_fundamental_discriminant(*f.fundamental_disc))
      throw InvariantViolation("fundamental_disc is a fundamental discriminant", std::to_string(*f.fundamental_disc));
  }
  if (f.roots_of_unity && *f.roots_of_unity < 2) throw InvariantViolation("roots_of_unity >= 2", "");
  if (f.class_number && *f.class_number < 1) throw InvariantViolation("class_number >= 1", "");
}

FieldSpec parse_field(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("field document: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("field document must be a JSON object");
  FieldSpec f;
  try {
    if (!doc.contains("label") || !doc["label"].is_string()) throw ParseError("field key 'label' must be a string");
    f.label = doc["label"].get<std::string>();
    f.degree = get_integer<int>(doc, "degree");
    f.r1 = get_integer<int>(doc, "r1");
    f.r2 = get_integer<int>(doc, "r2");
    f.disc = get_integer<std::int64_t>(doc, "disc");
    if (doc.contains("poly")) {
      const json& p = doc["poly"];
      if (!p.is_array()) throw ParseError("field key 'poly' must be an integer array");
      std::vector<std::int64_t> coeffs;
      for (const auto& c : p) {
        if (!c.is_number_integer()) throw ParseError("field key 'poly' must be an integer array");
        coeffs.push_back(c.get<std::int64_t>());
      }
      f.poly = std::move(coeffs);
    }
    if (doc.contains("fundamental_disc")) f.fundamental_disc = get_integer<std::int64_t>(doc, "fundamental_disc");
    if (doc.contains("h")) f.class_number = get_integer<std::int64_t>(doc, "h");
    if (doc.contains("w")) f.roots_of_unity = get_integer<std::int64_t>(doc, "w");
    if (doc.contains("R")) {
      if (!doc["R"].is_number()) throw ParseError("field key 'R' must be a number");
      f.regulator = doc["R"].get<double>();
    }
  } catch (const json::out_of_range& e) {
    throw ParseError(std::string("field document missing key: ") + e.what());
  }
  static const std::set<std::string> known = {"label", "degree", "r1", "r2", "disc", "poly",
                                              "fundamental_disc", "h", "R", "w"};
  for (const auto& item : doc.items())
    if (!known.count(item.key())) f.warnings.push_back("unknown key '" + item.key() + "' ignored");
  validate(f);
  return f;
}

FieldSpec load_field(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open field file " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_field(buf.str());
}

std::string serialize_field(const FieldSpec& f) {
  json doc = {{"label", f.label}, {"degree", f.degree}, {"r1", f.r1}, {"r2", f.r2}, {"disc", f.disc}};
  if (f.poly) doc["poly"] = *f.poly;
  if (f.fundamental_disc) doc["fundamental_disc"] = *f.fundamental_disc;
  if (f.class_number) doc["h"] = *f.class_number;
  if (f.regulator) doc["R"] = *f.regulator;
  if (f.roots_of_unity) doc["w"] = *f.roots_of_unity;
  return doc.dump(2) + "\n";
}

double compute_A_K(const FieldSpec& f) {
  if (f.degree < 1 || f.disc == 0) throw DomainError("compute_A_K: invalid field");
  return std::pow(2.0, -f.r2) * std::pow(std::numbers::pi, -0.5 * f.degree) *
         std::sqrt(std::fabs(static_cast<double>(f.disc)));
}

}  // namespace idealcount
