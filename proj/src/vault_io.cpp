// Copyright 2026 The ffv Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ffv/vault_io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include "ffv/error.hpp"
#include "json.hpp"

namespace ffv {

namespace {

using json = nlohmann::ordered_json;

[[noreturn]] void bad(const std::string& msg) { throw FormatError(msg); }

const json& field(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) bad(where + ": expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) bad(where + ": missing \"" + key + "\"");
  return *it;
}

std::uint64_t as_uint(const json& v, const std::string& where) {
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0)) {
    bad(where + ": expected a non-negative integer");
  }
  return v.get<std::uint64_t>();
}

std::vector<double> as_reals(const json& v, const std::string& where) {
  if (!v.is_array()) bad(where + ": expected an array of numbers");
  std::vector<double> out;
  for (const auto& e : v) {
    if (!e.is_number()) bad(where + ": expected an array of numbers");
    out.push_back(e.get<double>());
  }
  return out;
}

Family as_family(const json& v, const std::string& where) {
  if (!v.is_string()) bad(where + ": family must be a string");
  const auto f = parse_family(v.get<std::string>());
  if (!f) bad(where + ": unknown family \"" + v.get<std::string>() + "\"");
  return *f;
}

json fuzzy_to_json(const FuzzyNumber& f) {
  json params = json::array();
  for (double p : f.params()) params.push_back(p);
  return json{{"family", std::string(family_name(f.family()))}, {"params", std::move(params)}};
}

FuzzyNumber fuzzy_from_json(const json& j, const std::string& where) {
  const Family fam = as_family(field(j, "family", where), where);
  const std::vector<double> params = as_reals(field(j, "params", where), where + ".params");
  try {
    return FuzzyNumber::from_params(fam, params);
  } catch (const ValidationError& e) {
    bad(where + ": " + e.what());
  }
}

FamilyTemplate template_from_json(const json& j, const std::string& where) {
  const Family fam = as_family(field(j, "family", where), where);
  std::vector<double> spreads;
  if (j.contains("spreads")) spreads = as_reals(j.at("spreads"), where + ".spreads");
  try {
    return FamilyTemplate(fam, std::move(spreads));
  } catch (const ValidationError& e) {
    bad(where + ": " + e.what());
  }
}

json parse_json(std::string_view text, const char* what) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    bad(std::string(what) + ": invalid JSON: " + e.what());
  }
}

}  // namespace

std::string serialize_fuzzy_number(const FuzzyNumber& f) { return fuzzy_to_json(f).dump(); }

FuzzyNumber parse_fuzzy_number(std::string_view text) {
  return fuzzy_from_json(parse_json(text, "fuzzy number"), "fuzzy number");
}

std::string serialize_vault(const Vault& vault) {
  json j;
  j["format_version"] = kVaultFormatVersion;
  j["q"] = vault.q;
  j["n"] = vault.n;
  j["r"] = vault.r();
  j["crc_variant"] = vault.crc_variant;
  json points = json::array();
  for (const auto& pt : vault.points) points.push_back(json{{"x", fuzzy_to_json(pt.x)}, {"y", fuzzy_to_json(pt.y)}});
  j["points"] = std::move(points);
  return j.dump(1) + "\n";
}

Vault parse_vault(std::string_view text) {
  const json j = parse_json(text, "vault");
  const std::string where = "vault";
  if (as_uint(field(j, "format_version", where), "vault.format_version") !=
      static_cast<std::uint64_t>(kVaultFormatVersion)) {
    bad("vault: unsupported format_version");
  }
  Vault v;
  v.q = as_uint(field(j, "q", where), "vault.q");
  v.n = as_uint(field(j, "n", where), "vault.n");
  const std::uint64_t r = as_uint(field(j, "r", where), "vault.r");
  const json& crc = field(j, "crc_variant", where);
  if (!crc.is_string()) bad("vault.crc_variant: expected a string");
  v.crc_variant = crc.get<std::string>();
  const json& points = field(j, "points", where);
  if (!points.is_array()) bad("vault.points: expected an array");
  if (points.size() != r) bad("vault: header r does not match the number of points");
  v.points.reserve(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    const std::string pw = "vault.points[" + std::to_string(i) + "]";
    v.points.push_back({fuzzy_from_json(field(points[i], "x", pw), pw + ".x"),
                        fuzzy_from_json(field(points[i], "y", pw), pw + ".y")});
  }
  validate_vault(v);
  if (v.n + 1 > v.points.size()) bad("vault: degree n must be below r");
  return v;
}

std::string serialize_set_description(const MultiFuzzySet& set) {
  json j;
  j["q"] = set.q();
  json subsets = json::array();
  for (const auto& s : set.subsets()) {
    json spreads = json::array();
    for (double d : s.family_template.spreads()) spreads.push_back(d);
    subsets.push_back(json{{"elements", s.elements},
                           {"family", std::string(family_name(s.family_template.family()))},
                           {"spreads", std::move(spreads)}});
  }
  j["subsets"] = std::move(subsets);
  return j.dump(1) + "\n";
}

MultiFuzzySet parse_set_description(std::string_view text, SetKind kind) {
  const json j = parse_json(text, "set description");
  const std::string where = "set description";
  const std::uint64_t q = as_uint(field(j, "q", where), "q");
  try {
    if (kind == SetKind::kField && j.contains("sizes")) {
      const json& sizes_j = j.at("sizes");
      const json& templates_j = field(j, "templates", where);
      if (!sizes_j.is_array() || !templates_j.is_array()) bad("field partition: sizes and templates must be arrays");
      std::vector<std::size_t> sizes;
      for (const auto& s : sizes_j) sizes.push_back(as_uint(s, "sizes"));
      std::vector<FamilyTemplate> templates;
      for (std::size_t i = 0; i < templates_j.size(); ++i) {
        templates.push_back(template_from_json(templates_j[i], "templates[" + std::to_string(i) + "]"));
      }
      return MultiFuzzySet::partition_field(q, sizes, templates);
    }
    const json& subsets = field(j, "subsets", where);
    if (!subsets.is_array()) bad("set description: subsets must be an array");
    std::vector<ElementGroup> groups;
    for (std::size_t i = 0; i < subsets.size(); ++i) {
      const std::string sw = "subsets[" + std::to_string(i) + "]";
      const json& elements_j = field(subsets[i], "elements", sw);
      if (!elements_j.is_array()) bad(sw + ".elements: expected an array");
      std::vector<FieldElement> elements;
      for (const auto& e : elements_j) elements.push_back(as_uint(e, sw + ".elements"));
      groups.push_back({std::move(elements), template_from_json(subsets[i], sw)});
    }
    return MultiFuzzySet::from_groups(q, kind, std::move(groups));
  } catch (const FormatError&) {
    throw;
  } catch (const ValidationError& e) {
    bad(std::string("set description: ") + e.what());
  }
}

std::optional<MultiFuzzySet> parse_optional_set_description(std::string_view text, SetKind kind) {
  if (text.find_first_not_of(" \t\r\n") == std::string_view::npos) return std::nullopt;
  const json j = parse_json(text, "set description");
  if (j.is_object() && j.contains("subsets") && j.at("subsets").is_array() && j.at("subsets").empty()) {
    return std::nullopt;
  }
  return parse_set_description(text, kind);
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string() + " for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("failed reading " + path.string());
  return buf.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw IoError("failed writing " + path.string());
}

}  // namespace ffv
