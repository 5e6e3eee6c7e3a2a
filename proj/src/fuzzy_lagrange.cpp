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

#include "ffv/fuzzy_lagrange.hpp"

#include <algorithm>
#include <string>

#include "ffv/error.hpp"

namespace ffv {

namespace {

struct Interval {
  double lo;
  double hi;
};

Interval operator-(Interval a, Interval b) { return {a.lo - b.hi, a.hi - b.lo}; }
Interval operator+(Interval a, Interval b) { return {a.lo + b.lo, a.hi + b.hi}; }
Interval operator*(Interval a, Interval b) {
  const double p[] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
  return {*std::min_element(std::begin(p), std::end(p)), *std::max_element(std::begin(p), std::end(p))};
}
Interval scale(Interval a, double s) { return s >= 0 ? Interval{a.lo * s, a.hi * s} : Interval{a.hi * s, a.lo * s}; }

Interval cut_of(const FuzzyNumber& f, double alpha) {
  const AlphaCut c = alpha_cut(f, alpha);
  return {c.lo, c.hi};
}

void require_linear_family(const FuzzyNumber& f) {
  if (f.family() != Family::kTriangular && f.family() != Family::kCrisp) {
    throw ValidationError("fuzzy_lagrange_real: inputs must be triangular or crisp, got " +
                          std::string(family_name(f.family())));
  }
}

}  // namespace

SampledFuzzyNumber::SampledFuzzyNumber(std::vector<AlphaCut> cuts) : cuts_(std::move(cuts)) {
  if (cuts_.size() < 2) throw ValidationError("sampled fuzzy number: at least two alpha levels are required");
}

AlphaCut SampledFuzzyNumber::alpha_cut(double alpha) const {
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw ValidationError("alpha_cut: alpha must lie in [0, 1]");
  const double pos = alpha * static_cast<double>(cuts_.size() - 1);
  const std::size_t i = std::min(static_cast<std::size_t>(pos), cuts_.size() - 2);
  const double w = pos - static_cast<double>(i);
  const AlphaCut& a = cuts_[i];
  const AlphaCut& b = cuts_[i + 1];
  return {alpha, a.lo + w * (b.lo - a.lo), a.hi + w * (b.hi - a.hi)};
}

double SampledFuzzyNumber::membership(double x) const {
  if (!cuts_.front().contains(x)) return 0.0;
  if (cuts_.back().contains(x)) return 1.0;
  // Find the highest level containing x, then interpolate toward the next.
  std::size_t i = 0;
  while (i + 1 < cuts_.size() && cuts_[i + 1].contains(x)) ++i;
  const AlphaCut& a = cuts_[i];
  const AlphaCut& b = cuts_[i + 1];
  double w;
  if (x < b.lo) {
    w = b.lo == a.lo ? 0.0 : (x - a.lo) / (b.lo - a.lo);
  } else {
    w = b.hi == a.hi ? 0.0 : (a.hi - x) / (a.hi - b.hi);
  }
  return a.alpha + std::clamp(w, 0.0, 1.0) * (b.alpha - a.alpha);
}

SampledFuzzyNumber fuzzy_lagrange_real(std::span<const FuzzyPoint> points, const FuzzyNumber& query,
                                       std::size_t levels) {
  if (levels < 2) throw ValidationError("fuzzy_lagrange_real: alpha grid needs at least 2 levels");
  if (points.empty()) throw ValidationError("fuzzy_lagrange_real: at least one point is required");
  require_linear_family(query);
  for (const auto& pt : points) {
    require_linear_family(pt.x);
    require_linear_family(pt.y);
  }
  const std::size_t n = points.size();
  std::vector<double> cores(n);
  for (std::size_t j = 0; j < n; ++j) cores[j] = defuzzify(points[j].x);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = j + 1; k < n; ++k) {
      if (cores[j] == cores[k]) {
        throw ValidationError("fuzzy_lagrange_real: coincident defuzzified x cores make a zero denominator");
      }
    }
  }

  std::vector<AlphaCut> cuts;
  cuts.reserve(levels);
  for (std::size_t level = 0; level < levels; ++level) {
    const double alpha = static_cast<double>(level) / static_cast<double>(levels - 1);
    const Interval xq = cut_of(query, alpha);
    Interval sum{0.0, 0.0};
    for (std::size_t j = 0; j < n; ++j) {
      Interval basis{1.0, 1.0};
      for (std::size_t k = 0; k < n; ++k) {
        if (k == j) continue;
        basis = scale(basis * (xq - cut_of(points[k].x, alpha)), 1.0 / (cores[j] - cores[k]));
      }
      sum = sum + cut_of(points[j].y, alpha) * basis;
    }
    cuts.push_back({alpha, sum.lo, sum.hi});
  }
  return SampledFuzzyNumber(std::move(cuts));
}

}  // namespace ffv
