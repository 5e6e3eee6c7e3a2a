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

#ifndef FFV_MULTI_FUZZY_SET_HPP_
#define FFV_MULTI_FUZZY_SET_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "ffv/fuzzy_number.hpp"

namespace ffv {

using FieldElement = std::uint64_t;

// Shape of a membership family with the location left out; the location is
// supplied by the element being fuzzified. Spread layout per family:
//   Triangular  (left_spread, right_spread)
//   Trapezoidal (plateau_halfwidth, sigma_left, beta_right)
//   Gaussian    (sigma_left, sigma_right)
//   Sigmoid     (left_width, right_width, omega, halfwidth)
//   Crisp       ()
class FamilyTemplate {
 public:
  FamilyTemplate(Family family, std::vector<double> spreads);

  static FamilyTemplate triangular(double left_spread, double right_spread);
  static FamilyTemplate trapezoidal(double plateau_halfwidth, double sigma_left, double beta_right);
  static FamilyTemplate gaussian(double sigma_left, double sigma_right);
  static FamilyTemplate sigmoid(double left_width, double right_width, double omega, double halfwidth);
  static FamilyTemplate crisp();

  static std::size_t spread_count(Family family);

  Family family() const { return family_; }
  const std::vector<double>& spreads() const { return spreads_; }

  // defuzzify(instantiate(c)) == c.
  FuzzyNumber instantiate(double core) const;

  bool operator==(const FamilyTemplate&) const = default;

 private:
  Family family_;
  std::vector<double> spreads_;
};

struct SubsetDescriptor {
  std::vector<FieldElement> elements;  // ascending, distinct, nonempty
  FamilyTemplate family_template;
  std::size_t index = 0;
};

enum class SetKind { kField, kLocking, kUnlocking };

// One explicit group before it becomes a subset.
struct ElementGroup {
  std::vector<FieldElement> elements;
  FamilyTemplate family_template;
};

// A set of field elements partitioned into disjoint subsets, each bound to
// exactly one family template.
class MultiFuzzySet {
 public:
  // Contiguous ascending partition of {0, ..., q-1}.
  static MultiFuzzySet partition_field(std::uint64_t q, std::span<const std::size_t> sizes,
                                       std::span<const FamilyTemplate> templates);
  // Arbitrary layout. For kField the groups must cover [0, q) exactly.
  static MultiFuzzySet from_groups(std::uint64_t q, SetKind kind, std::vector<ElementGroup> groups);

  std::uint64_t q() const { return q_; }
  SetKind kind() const { return kind_; }
  std::size_t subset_count() const { return subsets_.size(); }
  const std::vector<SubsetDescriptor>& subsets() const { return subsets_; }
  const SubsetDescriptor& subset(std::size_t k) const;

  // Total number of covered elements (t for a locking set).
  std::size_t total_elements() const { return lookup_.size(); }

  std::optional<std::size_t> find_subset(FieldElement a) const;
  const FamilyTemplate& template_of(FieldElement a) const;
  FuzzyNumber fuzzify_element(FieldElement a) const;

  // Fuzzified elements of subset k, ascending by core.
  std::vector<FuzzyNumber> select_subset(std::size_t k) const;

  // Distinct templates in subset order.
  std::vector<FamilyTemplate> distinct_templates() const;

 private:
  MultiFuzzySet(std::uint64_t q, SetKind kind, std::vector<SubsetDescriptor> subsets);

  std::uint64_t q_;
  SetKind kind_;
  std::vector<SubsetDescriptor> subsets_;
  // (element, subset index), sorted by element.
  std::vector<std::pair<FieldElement, std::size_t>> lookup_;
};

MultiFuzzySet build_locking_set(const MultiFuzzySet& field, std::vector<ElementGroup> groups);
MultiFuzzySet build_unlocking_set(std::uint64_t q, std::vector<ElementGroup> groups);

}  // namespace ffv

#endif  // FFV_MULTI_FUZZY_SET_HPP_
