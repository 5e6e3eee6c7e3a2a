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

#ifndef FFV_VAULT_HPP_
#define FFV_VAULT_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ffv/field_poly.hpp"
#include "ffv/fuzzy_number.hpp"
#include "ffv/multi_fuzzy_set.hpp"
#include "ffv/rng.hpp"

namespace ffv {

inline constexpr int kVaultFormatVersion = 1;

struct VaultPoint {
  FuzzyNumber x;
  FuzzyNumber y;

  bool operator==(const VaultPoint&) const = default;
};

// Integer field element encoded by a fuzzified point coordinate.
FieldElement core_of(const FuzzyNumber& f);

struct LockParams {
  std::size_t k_subset = 0;  // index of the locking subset A_k
  std::size_t k = 0;         // coefficient count; degree n = k - 1
  std::size_t r = 0;         // total vault points
  double rho = 0.2;          // share of chaff that lies on p under a wrong family
  double delta = 0.25;       // matching tolerance, in core units
  double delta_tilde = 0.0;  // reserved, unused
  std::uint64_t seed = 0;
  std::size_t m_B = 0;       // families the unlocker must supply (informational)
  // Consistency checks against the locking set; 0 means "derive".
  std::size_t t = 0;
  std::size_t t_MFk = 0;
};

// The public vault. Points are in scrambled order; nothing secret is stored.
struct Vault {
  std::uint64_t q = 0;
  std::size_t n = 0;
  std::string crc_variant{kCrc16Arc.name};
  std::vector<VaultPoint> points;

  std::size_t r() const { return points.size(); }
  std::size_t coefficient_count() const { return n + 1; }
};

enum class PointRole { kGenuine, kChaffOffPolynomial, kChaffWrongFamily };

// Private record of a lock, for tests and the census only.
struct LockTranscript {
  Polynomial polynomial;
  FamilyTemplate locking_template;
  std::vector<PointRole> roles;  // aligned with Vault::points
  std::size_t t = 0;
  std::size_t t_MFk = 0;

  std::vector<std::size_t> genuine_indices() const;
};

struct LockResult {
  Vault vault;
  LockTranscript transcript;
};

struct ChaffPoint {
  VaultPoint point;
  PointRole role;
};

// Throws ValidationError when any parameter invariant is violated.
void validate_lock_params(const MultiFuzzySet& locking_set, const MultiFuzzySet& field_mfs,
                          const PrimeField& field, const LockParams& params);

LockResult fuzzy_lock(std::span<const std::uint8_t> key, const MultiFuzzySet& locking_set,
                      const MultiFuzzySet& field_mfs, const LockParams& params);

// Locks an explicit polynomial (params.k must equal its coefficient count).
// Used where the field is too small to carry a key plus CRC.
LockResult fuzzy_lock_polynomial(const Polynomial& p, const MultiFuzzySet& locking_set,
                                 const MultiFuzzySet& field_mfs, const LockParams& params);

// floor(rho * count) wrong-family points on p first, then off-polynomial
// points. All x-cores are fresh and pairwise distinct. `used_x_cores` must be
// sorted ascending.
std::vector<ChaffPoint> generate_chaff(const Polynomial& p, const PrimeField& field, const MultiFuzzySet& field_mfs,
                                       std::span<const FieldElement> used_x_cores, std::size_t count, double rho,
                                       const FamilyTemplate& locking_template, Rng& rng);

template <typename T>
std::vector<T> scramble(std::vector<T> items, std::uint64_t seed) {
  Rng rng(seed);
  fisher_yates(std::span<T>(items), rng);
  return items;
}

struct MatchedPoint {
  std::size_t vault_index;
  FieldElement x;
  FieldElement y;
};

// One-to-one nearest-neighbour matching. Probes are visited in ascending core
// order; each takes the closest unmatched vault point (ties to the smaller
// x-core) if its distance is at most delta. Results are in probe order.
std::vector<MatchedPoint> match_points(const Vault& vault, std::span<const FuzzyNumber> probes, double delta);

struct UnlockResult {
  std::optional<Bytes> key;
  std::size_t matched = 0;
  std::uint64_t subsets_tried = 0;
  std::uint64_t effort = 0;  // field multiplications spent on interpolation, approximately
  bool effort_exhausted = false;
};

UnlockResult unlock_with_probes(const Vault& vault, std::span<const FuzzyNumber> probes, double delta,
                                std::size_t key_len, std::uint64_t effort_cap);

UnlockResult fuzzy_unlock(const Vault& vault, const MultiFuzzySet& unlocking_set, std::size_t k_subset,
                          double delta, std::size_t key_len, std::uint64_t effort_cap);

// Structural checks on a vault (also applied when parsing files).
// Throws FormatError.
void validate_vault(const Vault& vault);

}  // namespace ffv

#endif  // FFV_VAULT_HPP_
