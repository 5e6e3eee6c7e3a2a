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

#ifndef FFV_FUZZY_LAGRANGE_HPP_
#define FFV_FUZZY_LAGRANGE_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "ffv/fuzzy_number.hpp"

namespace ffv {

struct FuzzyPoint {
  FuzzyNumber x;
  FuzzyNumber y;
};

// A fuzzy quantity known through its alpha-cuts on a uniform grid
// alpha_i = i / (levels - 1). Cuts are nested; membership between grid
// levels is interpolated linearly along each flank.
class SampledFuzzyNumber {
 public:
  explicit SampledFuzzyNumber(std::vector<AlphaCut> cuts);

  const std::vector<AlphaCut>& cuts() const { return cuts_; }
  std::size_t levels() const { return cuts_.size(); }

  // Core interval (alpha = 1).
  AlphaCut core() const { return cuts_.back(); }
  AlphaCut support() const { return cuts_.front(); }
  // Cut at an arbitrary alpha, interpolated between grid levels.
  AlphaCut alpha_cut(double alpha) const;
  double membership(double x) const;

 private:
  std::vector<AlphaCut> cuts_;
};

// Real-valued Lagrange evaluation p(query) = sum_j y_j L_j(query) carried out
// cut by cut with interval arithmetic. Denominators x_j - x_k are replaced by
// the difference of their defuzzified cores. Inputs must be triangular or
// crisp. Throws ValidationError on coincident cores or levels < 2.
SampledFuzzyNumber fuzzy_lagrange_real(std::span<const FuzzyPoint> points, const FuzzyNumber& query,
                                       std::size_t levels = 33);

}  // namespace ffv

#endif  // FFV_FUZZY_LAGRANGE_HPP_
