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

#ifndef FFV_DESK_SCENARIOS_HPP_
#define FFV_DESK_SCENARIOS_HPP_

#include <algorithm>
#include <cstdint>
#include <vector>

#include "ffv/field_poly.hpp"
#include "ffv/multi_fuzzy_set.hpp"
#include "ffv/rng.hpp"
#include "ffv/vault.hpp"

namespace ffv::desk {

// Desk-scale setup used by the self-test and the test suites:
// q = 65537 split into four contiguous houses (triangular, gaussian,
// trapezoidal, sigmoid); the locking set draws 6 triangular, 12 gaussian and
// 6 sigmoid elements from the matching houses and locks on the gaussian one.
struct DeskSetup {
  MultiFuzzySet field;
  std::vector<ElementGroup> groups;
  MultiFuzzySet locking;
  LockParams params;
};

inline FamilyTemplate desk_template(std::size_t house) {
  switch (house) {
    case 0: return FamilyTemplate::triangular(1, 1);
    case 1: return FamilyTemplate::gaussian(0.5, 0.5);
    case 2: return FamilyTemplate::trapezoidal(0.5, 1, 1);
    default: return FamilyTemplate::sigmoid(1, 1, 0.8, 2);
  }
}

inline MultiFuzzySet desk_field() {
  const std::size_t sizes[] = {16384, 16384, 16384, 16385};
  const FamilyTemplate templates[] = {desk_template(0), desk_template(1), desk_template(2), desk_template(3)};
  return MultiFuzzySet::partition_field(65537, sizes, templates);
}

inline std::vector<FieldElement> pick_from_house(const MultiFuzzySet& field, std::size_t house, std::size_t count,
                                                 Rng& rng) {
  const auto& elems = field.subset(house).elements;
  std::vector<FieldElement> out;
  while (out.size() < count) {
    const FieldElement e = elems[rng.below(elems.size())];
    if (std::find(out.begin(), out.end(), e) == out.end()) out.push_back(e);
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline DeskSetup desk_setup(std::uint64_t seed, std::size_t r = 300) {
  MultiFuzzySet field = desk_field();
  Rng rng(seed ^ 0x5EEDF00Dull);
  std::vector<ElementGroup> groups = {
      {pick_from_house(field, 0, 6, rng), desk_template(0)},
      {pick_from_house(field, 1, 12, rng), desk_template(1)},
      {pick_from_house(field, 3, 6, rng), desk_template(3)},
  };
  MultiFuzzySet locking = build_locking_set(field, groups);
  LockParams params;
  params.k_subset = 1;
  params.k = 8;
  params.r = r;
  params.rho = 0.2;
  params.delta = 0.25;
  params.seed = seed;
  params.m_B = 3;
  params.t = 24;
  params.t_MFk = 12;
  return {std::move(field), std::move(groups), std::move(locking), params};
}

inline Bytes random_key(Rng& rng, std::size_t len) {
  Bytes key(len);
  for (auto& b : key) b = static_cast<std::uint8_t>(rng());
  return key;
}

// Census-scale lock: q = 97 (triangular / gaussian halves), a gaussian
// locking subset of t_MFk elements, a random degree < k polynomial and
// r - t_MFk chaff points.
inline LockResult census_lock(std::uint64_t seed, std::size_t k = 3, std::size_t r = 30, std::size_t t_mfk = 6,
                              double rho = 0.2) {
  const std::size_t sizes[] = {48, 49};
  const FamilyTemplate templates[] = {FamilyTemplate::triangular(1, 1), FamilyTemplate::gaussian(0.5, 0.5)};
  const MultiFuzzySet field = MultiFuzzySet::partition_field(97, sizes, templates);
  Rng rng(seed * 0x9E3779B97F4A7C15ull + 1);
  const MultiFuzzySet locking =
      build_locking_set(field, {{pick_from_house(field, 1, t_mfk, rng), FamilyTemplate::gaussian(0.5, 0.5)}});
  Polynomial p;
  for (std::size_t i = 0; i < k; ++i) p.coefficients.push_back(rng.below(97));
  LockParams params;
  params.k_subset = 0;
  params.k = k;
  params.r = r;
  params.rho = rho;
  params.seed = seed;
  return fuzzy_lock_polynomial(p, locking, field, params);
}

}  // namespace ffv::desk

#endif  // FFV_DESK_SCENARIOS_HPP_
