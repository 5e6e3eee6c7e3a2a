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

#include "ffv/vault.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <unordered_set>

#include "ffv/error.hpp"

namespace ffv {

namespace {

constexpr double kCoreTolerance = 1e-9;

bool is_fresh(FieldElement u, std::span<const FieldElement> used) {
  return !std::binary_search(used.begin(), used.end(), u);
}

// `count` distinct elements of [0, q) not in `used`, in draw order.
std::vector<FieldElement> draw_fresh_cores(std::uint64_t q, std::span<const FieldElement> used, std::size_t count,
                                           Rng& rng) {
  std::vector<FieldElement> out;
  out.reserve(count);
  if (2 * (used.size() + count) >= q) {
    std::vector<FieldElement> pool;
    pool.reserve(q - used.size());
    for (FieldElement u = 0; u < q; ++u) {
      if (is_fresh(u, used)) pool.push_back(u);
    }
    for (std::size_t i = 0; i < count; ++i) {
      const std::size_t j = i + static_cast<std::size_t>(rng.below(pool.size() - i));
      std::swap(pool[i], pool[j]);
      out.push_back(pool[i]);
    }
    return out;
  }
  std::unordered_set<FieldElement> taken;
  taken.reserve(count * 2);
  while (out.size() < count) {
    const FieldElement u = rng.below(q);
    if (is_fresh(u, used) && taken.insert(u).second) out.push_back(u);
  }
  return out;
}

}  // namespace

FieldElement core_of(const FuzzyNumber& f) {
  const double c = defuzzify(f);
  return static_cast<FieldElement>(std::llround(c));
}

std::vector<std::size_t> LockTranscript::genuine_indices() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < roles.size(); ++i) {
    if (roles[i] == PointRole::kGenuine) out.push_back(i);
  }
  return out;
}

void validate_lock_params(const MultiFuzzySet& locking_set, const MultiFuzzySet& field_mfs, const PrimeField& field,
                          const LockParams& params) {
  if (locking_set.kind() != SetKind::kLocking) throw ValidationError("lock: locking set must be of locking kind");
  if (field_mfs.kind() != SetKind::kField) throw ValidationError("lock: field partition must be of field kind");
  if (locking_set.q() != field.q() || field_mfs.q() != field.q()) {
    throw ValidationError("lock: locking set, field partition and field must share the same q");
  }
  const SubsetDescriptor& subset = locking_set.subset(params.k_subset);
  const std::size_t t = locking_set.total_elements();
  const std::size_t t_mfk = subset.elements.size();
  if (params.t != 0 && params.t != t) {
    throw ValidationError("lock: t = " + std::to_string(params.t) + " does not match the locking set (" +
                          std::to_string(t) + " elements)");
  }
  if (params.t_MFk != 0 && params.t_MFk != t_mfk) {
    throw ValidationError("lock: t_MFk = " + std::to_string(params.t_MFk) + " does not match subset " +
                          std::to_string(params.k_subset) + " (" + std::to_string(t_mfk) + " elements)");
  }
  if (field.q() >= (std::uint64_t{1} << 53)) {
    throw ValidationError("lock: q must be below 2^53 so cores stay exact in the vault file");
  }
  if (params.k == 0) throw ValidationError("lock: coefficient count k must be positive");
  if (params.r > field.q()) throw ValidationError("lock: r exceeds field size");
  if (t_mfk > params.r) throw ValidationError("lock: r must be at least t_MFk (genuine points)");
  if (t > params.r) throw ValidationError("lock: r must be at least t (t_MFk <= t <= r)");
  if (t_mfk < params.k) {
    throw ValidationError("lock: t_MFk = " + std::to_string(t_mfk) + " is below k = " + std::to_string(params.k) +
                          " (vault could never be unlocked)");
  }
  if (!(params.rho >= 0.0 && params.rho <= 1.0)) throw ValidationError("lock: rho must lie in [0, 1]");
  if (!(params.delta > 0.0)) throw ValidationError("lock: delta must be positive");
}

std::vector<ChaffPoint> generate_chaff(const Polynomial& p, const PrimeField& field, const MultiFuzzySet& field_mfs,
                                       std::span<const FieldElement> used_x_cores, std::size_t count, double rho,
                                       const FamilyTemplate& locking_template, Rng& rng) {
  const std::uint64_t q = field.q();
  if (count > q - used_x_cores.size()) {
    throw ValidationError("generate_chaff: not enough fresh x-cores (" + std::to_string(count) + " requested, " +
                          std::to_string(q - used_x_cores.size()) + " available)");
  }
  if (!(rho >= 0.0 && rho <= 1.0)) throw ValidationError("generate_chaff: rho must lie in [0, 1]");
  std::vector<FamilyTemplate> wrong_family;
  for (const auto& tmpl : field_mfs.distinct_templates()) {
    if (tmpl.family() != locking_template.family()) wrong_family.push_back(tmpl);
  }
  const auto on_poly = static_cast<std::size_t>(std::floor(rho * static_cast<double>(count)));
  if (rho > 0.0 && count > 0 && wrong_family.empty()) {
    throw ValidationError("generate_chaff: rho > 0 needs a field family other than the locking family");
  }

  const std::vector<FieldElement> cores = draw_fresh_cores(q, used_x_cores, count, rng);
  std::vector<ChaffPoint> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const FieldElement u = cores[i];
    const FieldElement pu = poly_eval(p, u, field);
    if (i < on_poly) {
      const FamilyTemplate& tmpl = wrong_family[rng.below(wrong_family.size())];
      out.push_back({{tmpl.instantiate(static_cast<double>(u)), tmpl.instantiate(static_cast<double>(pu))},
                     PointRole::kChaffWrongFamily});
    } else {
      FieldElement v = rng.below(q - 1);
      if (v >= pu) ++v;
      const FamilyTemplate& tmpl = field_mfs.template_of(u);
      out.push_back({{tmpl.instantiate(static_cast<double>(u)), tmpl.instantiate(static_cast<double>(v))},
                     PointRole::kChaffOffPolynomial});
    }
  }
  return out;
}

LockResult fuzzy_lock_polynomial(const Polynomial& p, const MultiFuzzySet& locking_set,
                                 const MultiFuzzySet& field_mfs, const LockParams& params) {
  const PrimeField field(locking_set.q());
  validate_lock_params(locking_set, field_mfs, field, params);
  if (p.size() != params.k) throw ValidationError("lock: polynomial must have exactly k coefficients");
  for (FieldElement c : p.coefficients) {
    if (c >= field.q()) throw ValidationError("lock: polynomial coefficient out of range [0, q)");
  }

  const SubsetDescriptor& subset = locking_set.subset(params.k_subset);
  const FamilyTemplate& tmpl = subset.family_template;

  std::vector<ChaffPoint> all;
  all.reserve(params.r);
  for (FieldElement a : subset.elements) {
    const FieldElement pa = poly_eval(p, a, field);
    all.push_back({{tmpl.instantiate(static_cast<double>(a)), tmpl.instantiate(static_cast<double>(pa))},
                   PointRole::kGenuine});
  }

  std::uint64_t seed_state = params.seed;
  const std::uint64_t chaff_seed = splitmix64(seed_state);
  const std::uint64_t scramble_seed = splitmix64(seed_state);

  Rng chaff_rng(chaff_seed);
  auto chaff = generate_chaff(p, field, field_mfs, subset.elements, params.r - subset.elements.size(), params.rho,
                              tmpl, chaff_rng);
  std::move(chaff.begin(), chaff.end(), std::back_inserter(all));
  all = scramble(std::move(all), scramble_seed);

  LockResult result{Vault{field.q(), params.k - 1, std::string(kCrc16Arc.name), {}},
                    LockTranscript{p, tmpl, {}, locking_set.total_elements(), subset.elements.size()}};
  result.vault.points.reserve(all.size());
  result.transcript.roles.reserve(all.size());
  for (auto& cp : all) {
    result.vault.points.push_back(std::move(cp.point));
    result.transcript.roles.push_back(cp.role);
  }
  return result;
}

LockResult fuzzy_lock(std::span<const std::uint8_t> key, const MultiFuzzySet& locking_set,
                      const MultiFuzzySet& field_mfs, const LockParams& params) {
  const PrimeField field(locking_set.q());
  validate_lock_params(locking_set, field_mfs, field, params);
  return fuzzy_lock_polynomial(encode_key(key, field, params.k), locking_set, field_mfs, params);
}

std::vector<MatchedPoint> match_points(const Vault& vault, std::span<const FuzzyNumber> probes, double delta) {
  // Vault indices sorted by x-core. Chebyshev distance is never below the
  // core difference, so only a window of width 2*delta needs scanning.
  std::vector<std::pair<double, std::size_t>> by_core;
  by_core.reserve(vault.points.size());
  for (std::size_t i = 0; i < vault.points.size(); ++i) by_core.emplace_back(defuzzify(vault.points[i].x), i);
  std::sort(by_core.begin(), by_core.end());

  std::vector<std::size_t> order(probes.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return defuzzify(probes[a]) < defuzzify(probes[b]); });

  std::vector<bool> taken(vault.points.size(), false);
  std::vector<MatchedPoint> out;
  for (std::size_t pi : order) {
    const FuzzyNumber& probe = probes[pi];
    const double c = defuzzify(probe);
    auto it = std::lower_bound(by_core.begin(), by_core.end(), std::make_pair(c - delta - kCoreTolerance, std::size_t{0}));
    std::optional<std::size_t> best;
    double best_d = 0.0;
    double best_core = 0.0;
    for (; it != by_core.end() && it->first <= c + delta + kCoreTolerance; ++it) {
      if (taken[it->second]) continue;
      const double d = distance(vault.points[it->second].x, probe);
      if (d > delta) continue;
      if (!best || d < best_d || (d == best_d && it->first < best_core)) {
        best = it->second;
        best_d = d;
        best_core = it->first;
      }
    }
    if (best) {
      taken[*best] = true;
      out.push_back({*best, core_of(vault.points[*best].x), core_of(vault.points[*best].y)});
    }
  }
  return out;
}

UnlockResult unlock_with_probes(const Vault& vault, std::span<const FuzzyNumber> probes, double delta,
                                std::size_t key_len, std::uint64_t effort_cap) {
  if (effort_cap == 0) throw ValidationError("unlock: effort cap must be positive");
  if (!(delta > 0.0)) throw ValidationError("unlock: delta must be positive");
  validate_vault(vault);
  const PrimeField field(vault.q);
  const std::size_t k = vault.coefficient_count();

  std::vector<MatchedPoint> matched = match_points(vault, probes, delta);
  std::sort(matched.begin(), matched.end(), [](const auto& a, const auto& b) { return a.x < b.x; });
  UnlockResult result;
  result.matched = matched.size();
  if (matched.size() < k) return result;

  // k-subsets of the matched points in lexicographic index order.
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::vector<FieldPoint> pts(k);
  const std::size_t m = matched.size();
  for (;;) {
    if (result.subsets_tried >= effort_cap) {
      result.effort_exhausted = true;
      return result;
    }
    for (std::size_t i = 0; i < k; ++i) pts[i] = {matched[idx[i]].x, matched[idx[i]].y};
    ++result.subsets_tried;
    result.effort += static_cast<std::uint64_t>(3 * k * k);
    const Polynomial candidate = lagrange_interpolate(pts, field);
    if (auto km = decode_key(candidate, field, key_len)) {
      result.key = std::move(km->key);
      return result;
    }
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == m - k + (i - 1)) --i;
    if (i == 0) return result;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

UnlockResult fuzzy_unlock(const Vault& vault, const MultiFuzzySet& unlocking_set, std::size_t k_subset, double delta,
                          std::size_t key_len, std::uint64_t effort_cap) {
  if (unlocking_set.kind() != SetKind::kUnlocking) {
    throw ValidationError("unlock: probe set must be of unlocking kind");
  }
  if (effort_cap == 0) throw ValidationError("unlock: effort cap must be positive");
  const std::vector<FuzzyNumber> probes = unlocking_set.select_subset(k_subset);
  return unlock_with_probes(vault, probes, delta, key_len, effort_cap);
}

void validate_vault(const Vault& vault) {
  if (vault.crc_variant != kCrc16Arc.name) {
    throw FormatError("vault: unsupported crc_variant \"" + vault.crc_variant + "\"");
  }
  if (vault.q < 2 || vault.q >= (std::uint64_t{1} << 53) || !is_prime(vault.q)) {
    throw FormatError("vault: q must be a prime below 2^53");
  }
  if (vault.points.empty()) throw FormatError("vault: no points");
  if (vault.points.size() > vault.q) throw FormatError("vault: r exceeds field size");
  std::vector<FieldElement> xs;
  xs.reserve(vault.points.size());
  for (std::size_t i = 0; i < vault.points.size(); ++i) {
    const VaultPoint& pt = vault.points[i];
    if (pt.x.family() != pt.y.family()) {
      throw FormatError("vault: point " + std::to_string(i) + " has mismatched x/y families");
    }
    for (const FuzzyNumber* f : {&pt.x, &pt.y}) {
      const double c = defuzzify(*f);
      if (!(c >= 0.0) || c >= static_cast<double>(vault.q) || std::abs(c - std::round(c)) > kCoreTolerance) {
        throw FormatError("vault: point " + std::to_string(i) + " has a core outside the integers of [0, q)");
      }
    }
    xs.push_back(core_of(pt.x));
  }
  std::sort(xs.begin(), xs.end());
  if (std::adjacent_find(xs.begin(), xs.end()) != xs.end()) throw FormatError("vault: duplicate x-cores");
}

}  // namespace ffv
