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

#include <cmath>
#include <vector>

#include "doctest.h"
#include "ffv/error.hpp"
#include "ffv/fuzzy_lagrange.hpp"
#include "ffv/oracles.hpp"
#include "ffv/rng.hpp"

using ffv::FuzzyNumber;
using ffv::FuzzyPoint;

TEST_CASE("crisp inputs reduce to real Lagrange evaluation") {
  const std::vector<double> xs = {0, 1, 3}, ys = {2, -1, 4};
  std::vector<FuzzyPoint> pts;
  for (std::size_t i = 0; i < xs.size(); ++i) pts.push_back({FuzzyNumber::crisp(xs[i]), FuzzyNumber::crisp(ys[i])});
  const auto r = ffv::fuzzy_lagrange_real(pts, FuzzyNumber::crisp(2));
  const double expect = ffv::oracle::lagrange_real(xs, ys, 2);
  CHECK(r.core().lo == doctest::Approx(expect).epsilon(1e-12));
  CHECK(r.support().lo == doctest::Approx(expect).epsilon(1e-12));
  CHECK(r.support().hi == doctest::Approx(expect).epsilon(1e-12));
}

TEST_CASE("a single point gives back its y value") {
  const FuzzyPoint p[] = {{FuzzyNumber::triangular(1, 2, 3), FuzzyNumber::triangular(4, 5, 7)}};
  const auto r = ffv::fuzzy_lagrange_real(p, FuzzyNumber::triangular(8, 9, 10));
  CHECK(r.core().lo == 5);
  CHECK(r.core().hi == 5);
  CHECK(r.support().lo == 4);
  CHECK(r.support().hi == 7);
  CHECK(r.membership(6) == doctest::Approx(0.5));
}

TEST_CASE("midpoint query of two symmetric points gives the mean core") {
  const FuzzyPoint p[] = {{FuzzyNumber::triangular(0, 1, 2), FuzzyNumber::triangular(2, 3, 4)},
                          {FuzzyNumber::triangular(4, 5, 6), FuzzyNumber::triangular(6, 7, 8)}};
  const auto r = ffv::fuzzy_lagrange_real(p, FuzzyNumber::triangular(2, 3, 4));
  CHECK(r.core().lo == doctest::Approx(5.0).epsilon(1e-12));
  CHECK(r.core().hi == doctest::Approx(5.0).epsilon(1e-12));
  CHECK(r.support().lo < 5.0);
  CHECK(r.support().hi > 5.0);
  CHECK(r.levels() == 33);
}

TEST_CASE("fuzzy Lagrange errors") {
  const FuzzyPoint same[] = {{FuzzyNumber::triangular(0, 1, 2), FuzzyNumber::crisp(1)},
                             {FuzzyNumber::triangular(0.5, 1, 3), FuzzyNumber::crisp(2)}};
  CHECK_THROWS_AS(ffv::fuzzy_lagrange_real(same, FuzzyNumber::crisp(0)), ffv::ValidationError);
  const FuzzyPoint one[] = {{FuzzyNumber::crisp(1), FuzzyNumber::crisp(2)}};
  CHECK_THROWS_AS(ffv::fuzzy_lagrange_real(one, FuzzyNumber::crisp(0), 1), ffv::ValidationError);
  const FuzzyPoint gauss[] = {{FuzzyNumber::gaussian(1, 1, 1), FuzzyNumber::crisp(2)}};
  CHECK_THROWS_AS(ffv::fuzzy_lagrange_real(gauss, FuzzyNumber::crisp(0)), ffv::ValidationError);
}

TEST_CASE("property: result cores match real Lagrange on the cores") {
  ffv::Rng rng(41);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rng.below(6);
    std::vector<double> xs, ys;
    std::vector<FuzzyPoint> pts;
    for (std::size_t i = 0; i < n; ++i) {
      const double x = static_cast<double>(i) * 2.0 + rng.uniform(0, 1.5);
      const double y = rng.uniform(-10, 10);
      xs.push_back(x);
      ys.push_back(y);
      pts.push_back({FuzzyNumber::triangular(x - rng.uniform(0, 0.5), x, x + rng.uniform(0, 0.5)),
                     FuzzyNumber::triangular(y - rng.uniform(0, 2), y, y + rng.uniform(0, 2))});
    }
    const double qx = rng.uniform(-1, 2.0 * static_cast<double>(n));
    const auto r = ffv::fuzzy_lagrange_real(pts, FuzzyNumber::triangular(qx - 0.25, qx, qx + 0.25));
    const double expect = ffv::oracle::lagrange_real(xs, ys, qx);
    REQUIRE(std::abs(r.core().lo - expect) <= 1e-9 * std::max(1.0, std::abs(expect)));
    REQUIRE(std::abs(r.core().hi - expect) <= 1e-9 * std::max(1.0, std::abs(expect)));
    // Cuts are nested.
    for (std::size_t i = 1; i < r.levels(); ++i) {
      REQUIRE(r.cuts()[i - 1].lo <= r.cuts()[i].lo + 1e-9);
      REQUIRE(r.cuts()[i].hi <= r.cuts()[i - 1].hi + 1e-9);
    }
  }
}
