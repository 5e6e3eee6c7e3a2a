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

#include <algorithm>
#include <cmath>
#include <vector>

#include "doctest.h"
#include "ffv/error.hpp"
#include "ffv/minutiae.hpp"
#include "ffv/rng.hpp"

using namespace ffv;

namespace {

// Random minutiae on the orientation grid with one-step flanks.
std::vector<Minutia> synthetic_minutiae(Rng& rng, std::size_t count) {
  std::vector<Minutia> out;
  for (std::size_t i = 0; i < count; ++i) {
    const double c = kOrientationStep * static_cast<double>(rng.below(kOrientationBins));
    const auto kind = rng.below(2) ? MinutiaKind::kBifurcation : MinutiaKind::kRidgeEnding;
    out.push_back(make_minutia(kind, static_cast<int>(rng.below(500)), static_cast<int>(rng.below(500)),
                               c - kOrientationStep, c, c + kOrientationStep));
  }
  return out;
}

}  // namespace

TEST_CASE("orientation grid") {
  const auto set = orientation_set();
  REQUIRE(set.size() == 16);
  bool has_202 = false, has_315 = false;
  for (std::size_t i = 0; i < set.size(); ++i) {
    has_202 = has_202 || set[i].degrees() == 202.5;
    has_315 = has_315 || set[i].degrees() == 315;
    if (i > 0) CHECK(set[i].degrees() - set[i - 1].degrees() == 22.5);
  }
  CHECK(has_202);
  CHECK(has_315);
  CHECK(Orientation(-22.5).degrees() == 337.5);
  CHECK(Orientation(720).degrees() == 0);
}

TEST_CASE("circular distance examples") {
  CHECK(circular_distance(Orientation(350), Orientation(10)) == 20);
  CHECK(circular_distance(Orientation(123), Orientation(123)) == 0);
  CHECK(circular_distance(Orientation(0), Orientation(180)) == 180);
}

TEST_CASE("minutiae as triangular numbers") {
  const auto ridge = make_minutia(MinutiaKind::kRidgeEnding, 10, 20, 202.5, 225, 247.5);
  CHECK(minutia_to_fuzzy(ridge) == FuzzyNumber::triangular(202.5, 225, 247.5));

  const auto bif = minutia_from_short_list(MinutiaKind::kBifurcation, 30, 40, 292.5, 315, 0);
  CHECK(minutia_to_fuzzy(bif) == FuzzyNumber::triangular(292.5, 315, 337.5));

  const auto flat = make_minutia(MinutiaKind::kRidgeEnding, 0, 0, 90, 90, 90);
  CHECK(minutia_to_fuzzy(flat) == FuzzyNumber::triangular(90, 90, 90));

  const auto wrap = make_minutia(MinutiaKind::kBifurcation, 0, 0, 337.5, 0, 22.5);
  CHECK(minutia_to_fuzzy(wrap) == FuzzyNumber::triangular(337.5, 360, 382.5));
}

TEST_CASE("minutia validation") {
  CHECK_THROWS_AS(make_minutia(MinutiaKind::kRidgeEnding, 0, 0, 0, 90, 135), ValidationError);
  CHECK_THROWS_AS(make_minutia(MinutiaKind::kRidgeEnding, 0, 0, 45, 90, 22.5), ValidationError);
  CHECK_NOTHROW(make_minutia(MinutiaKind::kRidgeEnding, 0, 0, 45, 90, 135));
}

TEST_CASE("minutiae text format") {
  const auto ms = parse_minutiae(
      "# sample\n"
      "ridge_ending 120 80 202.5 225 247.5\n"
      "\n"
      "bifurcation 40 200 292.5 315 337.5  # trailing comment\n");
  REQUIRE(ms.size() == 2);
  CHECK(ms[0].kind == MinutiaKind::kRidgeEnding);
  CHECK(ms[1].kind == MinutiaKind::kBifurcation);
  CHECK(ms[1].x == 40);
  CHECK(ms[1].upper.degrees() == 337.5);
  CHECK_THROWS_AS(parse_minutiae("delta 1 2 3 4 5\n"), ValidationError);
  CHECK_THROWS_AS(parse_minutiae("ridge_ending 1 2 3 4\n"), ValidationError);
  CHECK_THROWS_AS(parse_minutiae("ridge_ending 1 2 3 4 5 6\n"), ValidationError);
}

TEST_CASE("property: circular distance is a metric on the grid") {
  const auto set = orientation_set();
  for (const auto& a : set) {
    for (const auto& b : set) {
      const double ab = circular_distance(a, b);
      REQUIRE(ab == circular_distance(b, a));
      REQUIRE(ab >= 0);
      REQUIRE(ab <= 180);
      REQUIRE(std::fmod(ab, kOrientationStep) == 0.0);
      REQUIRE((ab == 0) == (a == b));
      for (const auto& c : set) REQUIRE(circular_distance(a, c) <= ab + circular_distance(b, c));
    }
  }
}

TEST_CASE("property: defuzzified minutia equals its center modulo 360") {
  Rng rng(81);
  for (int i = 0; i < 2000; ++i) {
    const double lower = rng.uniform(0, 360);
    const double a = rng.uniform(0, 45), b = rng.uniform(0, 45);
    const auto m = make_minutia(MinutiaKind::kRidgeEnding, 0, 0, lower, lower + a, lower + a + b);
    REQUIRE(normalize_degrees(defuzzify(minutia_to_fuzzy(m))) == m.center.degrees());
  }
}

TEST_CASE("field mapping is distinct and in range") {
  Rng rng(82);
  const auto ms = synthetic_minutiae(rng, 200);
  const auto es = map_minutiae_to_field(ms, 257);
  std::vector<FieldElement> sorted = es;
  std::sort(sorted.begin(), sorted.end());
  CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
  for (auto e : es) CHECK(e < 257);
  CHECK_THROWS_AS(map_minutiae_to_field(ms, 101), ValidationError);
}

TEST_CASE("demo: zero jitter recovers the key") {
  Rng rng(83);
  const auto ms = synthetic_minutiae(rng, 20);
  const Bytes key = {0xDE, 0xAD, 0xBE, 0xEF};
  MinutiaeDemoParams p;
  p.seed = 1;
  const auto res = minutiae_vault_demo(ms, key, p);
  REQUIRE(res.unlock.key.has_value());
  CHECK(*res.unlock.key == key);
  CHECK(res.unlock.matched == 20);
}

TEST_CASE("demo: jitter beyond delta blocks every match") {
  Rng rng(84);
  const auto ms = synthetic_minutiae(rng, 20);
  const Bytes key = {1, 2, 3, 4};
  MinutiaeDemoParams p;
  p.seed = 2;
  p.jitter_min = 0.3;
  p.jitter_max = 0.45;
  const auto res = minutiae_vault_demo(ms, key, p);
  CHECK_FALSE(res.unlock.key.has_value());
  CHECK(res.unlock.matched == 0);
}

TEST_CASE("demo: jitter within delta/2 recovers the key over 20 seeds") {
  Rng rng(85);
  int ok = 0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto ms = synthetic_minutiae(rng, 16);
    Bytes key(4);
    for (auto& b : key) b = static_cast<std::uint8_t>(rng());
    MinutiaeDemoParams p;
    p.seed = seed;
    p.jitter_max = p.delta / 2;
    const auto res = minutiae_vault_demo(ms, key, p);
    if (res.unlock.key && *res.unlock.key == key) ++ok;
  }
  CHECK(ok == 20);
}

TEST_CASE("demo argument errors") {
  Rng rng(86);
  const auto ms = synthetic_minutiae(rng, 3);
  MinutiaeDemoParams p;
  CHECK_THROWS_AS(minutiae_vault_demo(ms, Bytes{1}, p), ValidationError);
  const auto more = synthetic_minutiae(rng, 8);
  p.jitter_min = 0.2;
  p.jitter_max = 0.1;
  CHECK_THROWS_AS(minutiae_vault_demo(more, Bytes{1}, p), ValidationError);
}
