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

#include "ffv/multi_fuzzy_set.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "ffv/error.hpp"

namespace ffv {

namespace {

const char* kind_name(SetKind kind) {
  switch (kind) {
    case SetKind::kField:
      return "field";
    case SetKind::kLocking:
      return "locking";
    case SetKind::kUnlocking:
      return "unlocking";
  }
  return "?";
}

}  // namespace

FamilyTemplate::FamilyTemplate(Family family, std::vector<double> spreads)
    : family_(family), spreads_(std::move(spreads)) {
  if (spreads_.size() != spread_count(family_)) {
    throw ValidationError(std::string("template ") + std::string(family_name(family_)) + ": expected " +
                          std::to_string(spread_count(family_)) + " spreads, got " +
                          std::to_string(spreads_.size()));
  }
  for (double s : spreads_) {
    if (!(s > 0) || !std::isfinite(s)) {
      throw ValidationError(std::string("template ") + std::string(family_name(family_)) +
                            ": spreads must be strictly positive and finite");
    }
  }
  if (family_ == Family::kSigmoid && spreads_[2] > 1) {
    throw ValidationError("template sigmoid: omega must lie in (0, 1]");
  }
}

FamilyTemplate FamilyTemplate::triangular(double left_spread, double right_spread) {
  return {Family::kTriangular, {left_spread, right_spread}};
}
FamilyTemplate FamilyTemplate::trapezoidal(double plateau_halfwidth, double sigma_left, double beta_right) {
  return {Family::kTrapezoidal, {plateau_halfwidth, sigma_left, beta_right}};
}
FamilyTemplate FamilyTemplate::gaussian(double sigma_left, double sigma_right) {
  return {Family::kGaussian, {sigma_left, sigma_right}};
}
FamilyTemplate FamilyTemplate::sigmoid(double left_width, double right_width, double omega, double halfwidth) {
  return {Family::kSigmoid, {left_width, right_width, omega, halfwidth}};
}
FamilyTemplate FamilyTemplate::crisp() { return {Family::kCrisp, {}}; }

std::size_t FamilyTemplate::spread_count(Family family) {
  switch (family) {
    case Family::kTriangular:
      return 2;
    case Family::kTrapezoidal:
      return 3;
    case Family::kGaussian:
      return 2;
    case Family::kSigmoid:
      return 4;
    case Family::kCrisp:
      return 0;
  }
  return 0;
}

FuzzyNumber FamilyTemplate::instantiate(double core) const {
  const auto& s = spreads_;
  switch (family_) {
    case Family::kTriangular:
      return FuzzyNumber::triangular(core - s[0], core, core + s[1]);
    case Family::kTrapezoidal:
      return FuzzyNumber::trapezoidal(core - s[0], core + s[0], s[1], s[2]);
    case Family::kGaussian:
      return FuzzyNumber::gaussian(core, s[0], s[1]);
    case Family::kSigmoid:
      return FuzzyNumber::sigmoid(core - s[0], core, core + s[1], s[2], s[3]);
    case Family::kCrisp:
      return FuzzyNumber::crisp(core);
  }
  return FuzzyNumber::crisp(core);
}

MultiFuzzySet::MultiFuzzySet(std::uint64_t q, SetKind kind, std::vector<SubsetDescriptor> subsets)
    : q_(q), kind_(kind), subsets_(std::move(subsets)) {
  if (q_ < 2) throw ValidationError("multi-fuzzy set: field size q must be at least 2");
  std::size_t total = 0;
  for (const auto& s : subsets_) total += s.elements.size();
  lookup_.reserve(total);
  for (auto& s : subsets_) {
    if (s.elements.empty()) {
      throw ValidationError(std::string(kind_name(kind_)) + " set: subset " + std::to_string(s.index) +
                            " is empty");
    }
    std::sort(s.elements.begin(), s.elements.end());
    if (std::adjacent_find(s.elements.begin(), s.elements.end()) != s.elements.end()) {
      throw ValidationError(std::string(kind_name(kind_)) + " set: subset " + std::to_string(s.index) +
                            " contains duplicate elements");
    }
    if (s.elements.back() >= q_) {
      throw ValidationError(std::string(kind_name(kind_)) + " set: element " +
                            std::to_string(s.elements.back()) + " out of range [0, q)");
    }
    for (FieldElement e : s.elements) lookup_.emplace_back(e, s.index);
  }
  std::sort(lookup_.begin(), lookup_.end());
  for (std::size_t i = 1; i < lookup_.size(); ++i) {
    if (lookup_[i].first == lookup_[i - 1].first) {
      throw ValidationError(std::string(kind_name(kind_)) + " set: element " +
                            std::to_string(lookup_[i].first) + " appears in subsets " +
                            std::to_string(lookup_[i - 1].second) + " and " + std::to_string(lookup_[i].second) +
                            " (subsets must be disjoint)");
    }
  }
  if (kind_ == SetKind::kField && lookup_.size() != q_) {
    throw ValidationError("field set: subsets must cover every element of [0, q) exactly once");
  }
}

MultiFuzzySet MultiFuzzySet::partition_field(std::uint64_t q, std::span<const std::size_t> sizes,
                                             std::span<const FamilyTemplate> templates) {
  if (sizes.empty()) throw ValidationError("partition_field: at least one subset is required");
  if (sizes.size() != templates.size()) {
    throw ValidationError("partition_field: sizes and templates must have the same length");
  }
  const std::uint64_t sum = std::accumulate(sizes.begin(), sizes.end(), std::uint64_t{0});
  if (sum != q) {
    throw ValidationError("partition_field: subset sizes sum to " + std::to_string(sum) + ", expected q = " +
                          std::to_string(q));
  }
  std::vector<SubsetDescriptor> subsets;
  FieldElement next = 0;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    if (sizes[i] == 0) throw ValidationError("partition_field: subset " + std::to_string(i) + " is empty");
    std::vector<FieldElement> elements(sizes[i]);
    std::iota(elements.begin(), elements.end(), next);
    next += sizes[i];
    subsets.push_back({std::move(elements), templates[i], i});
  }
  return MultiFuzzySet(q, SetKind::kField, std::move(subsets));
}

MultiFuzzySet MultiFuzzySet::from_groups(std::uint64_t q, SetKind kind, std::vector<ElementGroup> groups) {
  if (groups.empty()) {
    throw ValidationError(std::string(kind_name(kind)) + " set: at least one subset is required");
  }
  std::vector<SubsetDescriptor> subsets;
  subsets.reserve(groups.size());
  for (std::size_t i = 0; i < groups.size(); ++i) {
    subsets.push_back({std::move(groups[i].elements), std::move(groups[i].family_template), i});
  }
  return MultiFuzzySet(q, kind, std::move(subsets));
}

const SubsetDescriptor& MultiFuzzySet::subset(std::size_t k) const {
  if (k >= subsets_.size()) {
    throw ValidationError("subset index " + std::to_string(k) + " out of range (set has " +
                          std::to_string(subsets_.size()) + " subsets)");
  }
  return subsets_[k];
}

std::optional<std::size_t> MultiFuzzySet::find_subset(FieldElement a) const {
  auto it = std::lower_bound(lookup_.begin(), lookup_.end(), std::make_pair(a, std::size_t{0}));
  if (it == lookup_.end() || it->first != a) return std::nullopt;
  return it->second;
}

const FamilyTemplate& MultiFuzzySet::template_of(FieldElement a) const {
  if (a >= q_) throw ValidationError("element " + std::to_string(a) + " out of range [0, q)");
  const auto k = find_subset(a);
  if (!k) {
    throw ValidationError("element " + std::to_string(a) + " is not covered by the " + kind_name(kind_) +
                          " set");
  }
  return subsets_[*k].family_template;
}

FuzzyNumber MultiFuzzySet::fuzzify_element(FieldElement a) const {
  return template_of(a).instantiate(static_cast<double>(a));
}

std::vector<FuzzyNumber> MultiFuzzySet::select_subset(std::size_t k) const {
  const SubsetDescriptor& s = subset(k);
  std::vector<FuzzyNumber> out;
  out.reserve(s.elements.size());
  for (FieldElement e : s.elements) out.push_back(s.family_template.instantiate(static_cast<double>(e)));
  return out;
}

std::vector<FamilyTemplate> MultiFuzzySet::distinct_templates() const {
  std::vector<FamilyTemplate> out;
  for (const auto& s : subsets_) {
    if (std::find(out.begin(), out.end(), s.family_template) == out.end()) out.push_back(s.family_template);
  }
  return out;
}

MultiFuzzySet build_locking_set(const MultiFuzzySet& field, std::vector<ElementGroup> groups) {
  return MultiFuzzySet::from_groups(field.q(), SetKind::kLocking, std::move(groups));
}

MultiFuzzySet build_unlocking_set(std::uint64_t q, std::vector<ElementGroup> groups) {
  return MultiFuzzySet::from_groups(q, SetKind::kUnlocking, std::move(groups));
}

}  // namespace ffv
