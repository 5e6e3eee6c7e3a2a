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

#ifndef FFV_VAULT_IO_HPP_
#define FFV_VAULT_IO_HPP_

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "ffv/multi_fuzzy_set.hpp"
#include "ffv/vault.hpp"

namespace ffv {

// Vault file: UTF-8 JSON
//   {"format_version": 1, "q": ..., "n": ..., "r": ..., "crc_variant": "CRC-16/ARC",
//    "points": [{"x": {"family": ..., "params": [...]}, "y": {...}}, ...]}
// Serialization is deterministic: equal vaults give byte-identical text.
std::string serialize_vault(const Vault& vault);
// Throws FormatError on malformed JSON or any schema violation.
Vault parse_vault(std::string_view text);

std::string serialize_fuzzy_number(const FuzzyNumber& f);
FuzzyNumber parse_fuzzy_number(std::string_view text);

// Set description: {"q": ..., "subsets": [{"elements": [...], "family": ..., "spreads": [...]}]}
// A field partition may instead be given as
//   {"q": ..., "sizes": [...], "templates": [{"family": ..., "spreads": [...]}]}.
std::string serialize_set_description(const MultiFuzzySet& set);
MultiFuzzySet parse_set_description(std::string_view text, SetKind kind);
// As above, but blank text or an empty "subsets" list yields nullopt.
std::optional<MultiFuzzySet> parse_optional_set_description(std::string_view text, SetKind kind);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace ffv

#endif  // FFV_VAULT_IO_HPP_
