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
#include <limits>
#include <vector>

#include "doctest.h"
#include "ffv/census.hpp"
#include "ffv/error.hpp"
#include "ffv/oracles.hpp"
#include "ffv/security.hpp"
#include "ffv/desk_scenarios.hpp"

using namespace ffv;

namespace {

ScenarioParams small_case() {
  ScenarioParams p;
  p.q = 7;
  p.k = 1;
  p.r = 3;
  p.t = 1;
  p.t_MFj = 1;
  p.m_A = 1;
  p.m_F = 1;
  p.n = 0;
  p.mu = 0.5;
  return p;
}

// Independent log2 of the spurious count: summed term by term, with the
// binomial built from a product rather than log-gamma.
double direct_log2_N(const ScenarioParams& p, bool family) {
  double acc = static_cast<double>(p.k) * std::log2(static_cast<double>(p.q));
  for (std::uint64_t i = 0; i < p.t_MFj; ++i) {
    acc += std::log2(static_cast<double>(p.r - i)) - std::log2(static_cast<double>(i + 1));
    if (family) acc -= std::log2(static_cast<double>(p.q - i)) - std::log2(static_cast<double>(i + 1));
  }
  const double frac = static_cast<double>(p.m_A) / static_cast<double>(p.q);
  acc += (static_cast<double>(p.k) - static_cast<double>(p.t_MFj)) * std::log2(frac);
  acc += static_cast<double>(p.r - p.t_MFj) * std::log2(1.0 - frac);
  if (family) acc += std::log2(p.mu) + std::log2(static_cast<double>(p.family_cardinality));
  return acc;
}

}  // namespace

TEST_CASE("spurious count examples") {
  const auto p = small_case();
  CHECK(spurious_polynomials_log2(p) == doctest::Approx(std::log2(108.0 / 7.0)).epsilon(1e-12));
  REQUIRE(spurious_polynomials_exact(p).has_value());
  CHECK(*spurious_polynomials_exact(p) == Rational(108, 7));

  ScenarioParams full = p;
  full.k = 4;
  full.r = 4;
  full.t = 4;
  full.t_MFj = 4;
  CHECK(spurious_polynomials_log2(full) == doctest::Approx(4 * std::log2(7.0)).epsilon(1e-12));

  ScenarioParams zero = p;
  zero.m_A = 7;
  zero.m_F = 7;
  CHECK(spurious_polynomials_log2(zero) == -std::numeric_limits<double>::infinity());
}

TEST_CASE("conditional membership probability") {
  CHECK(conditional_membership_prob(10, 5) == Rational(1, 2));
  CHECK(conditional_membership_prob(13, 13) == Rational(1));
  CHECK(conditional_membership_prob(1, 1) == Rational(1));
  CHECK_THROWS_AS(conditional_membership_prob(10, 11), ValidationError);
  CHECK_THROWS_AS(conditional_membership_prob(10, 0), ValidationError);
}

TEST_CASE("family bound examples") {
  ScenarioParams p = small_case();
  p.r = 7;
  p.t = 1;
  // r = q, k = t_MFj: 7 (6/7)^6 with unit binomial ratio.
  p.mu = 0.5;
  CHECK(family_spurious_log2(p) == doctest::Approx(std::log2(0.5 * 46656.0 / 16807.0)).epsilon(1e-12));
  REQUIRE(family_spurious_exact(p).has_value());
  CHECK(*family_spurious_exact(p) == Rational(46656, 2 * 16807));

  // r = 3 keeps the small count 108/7 but the binomial ratio is 3/7.
  ScenarioParams s = small_case();
  s.mu = 0.5;
  CHECK(*family_spurious_exact(s) == Rational(108, 98));

  ScenarioParams unit = p;
  unit.k = 3;
  unit.t_MFj = 3;
  unit.t = 3;
  unit.r = 7;
  CHECK(family_spurious_log2(unit) == doctest::Approx(std::log2(0.5) + 3 * std::log2(7.0) +
                                                       4 * std::log2(6.0 / 7.0)).epsilon(1e-12));

  ScenarioParams half = preset_params("movie-k16-t20");
  ScenarioParams quarter = half;
  quarter.mu = half.mu / 2;
  CHECK(family_spurious_log2(half) - family_spurious_log2(quarter) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("attacker success examples") {
  ScenarioParams p = small_case();
  p.q = 1000;
  p.m_A = 5;
  p.m_F = 10;
  p.t = 10;
  p.t_MFj = 10;
  p.r = 100;
  p.n = 2;
  CHECK(attacker_success_prob(p) == doctest::Approx(0.0025).epsilon(1e-14));
  CHECK(attacker_success_prob_product_form(p) == doctest::Approx(0.05).epsilon(1e-14));
  p.n = 0;
  CHECK(attacker_success_prob(p) == 1.0);
  ScenarioParams one = small_case();
  one.m_A = 3;
  one.m_F = 3;
  one.t_MFj = 3;
  one.t = 3;
  one.r = 3;
  one.n = 5;
  CHECK(attacker_success_prob(one) == 1.0);
}

TEST_CASE("scenario validation") {
  ScenarioParams p = small_case();
  p.t_MFj = 2;
  CHECK_THROWS_AS(validate_scenario(p), ValidationError);
  p = small_case();
  p.r = 8;
  CHECK_THROWS_AS(validate_scenario(p), ValidationError);
  p = small_case();
  p.m_A = 2;
  CHECK_THROWS_AS(validate_scenario(p), ValidationError);
  p = small_case();
  p.mu = 1.0;
  CHECK_THROWS_AS(validate_scenario(p), ValidationError);
  p.mu = 0.0;
  CHECK_THROWS_AS(validate_scenario(p), ValidationError);
  CHECK_THROWS_AS(preset_params("movie-k20"), ValidationError);
}

TEST_CASE("presets carry the reported claims") {
  const auto r1 = scenario_report("movie-k16-t20");
  REQUIRE(r1.reported.has_value());
  CHECK(r1.reported->classical_log2_N == 106);
  CHECK(r1.reported->classical_security_bits == 53);
  CHECK(r1.reported->fuzzy_log2_N == 249);
  CHECK(r1.reported->fuzzy_security_bits == 125);
  const auto r2 = scenario_report("movie-k18-t22");
  REQUIRE(r2.reported.has_value());
  CHECK(r2.reported->classical_log2_N == 139);
  CHECK(r2.reported->classical_security_bits == 70);
  CHECK(r2.reported->fuzzy_log2_N == 276);
  CHECK(r2.reported->fuzzy_security_bits == 138);

  const auto again = scenario_report(preset_params("movie-k16-t20"), preset_claims("movie-k16-t20"), r1.name);
  CHECK(again.log2_N == r1.log2_N);
  CHECK(again.log2_family_bound == r1.log2_family_bound);
  CHECK(again.attacker_prob == r1.attacker_prob);
  CHECK(again.discrepancy_flag == r1.discrepancy_flag);
}

TEST_CASE("preset values against exact evaluation") {
  // Reference exponents computed with exact rational arithmetic.
  const auto r1 = scenario_report("movie-k16-t20");
  CHECK(r1.log2_N_classical == doctest::Approx(468.96380057454235).epsilon(1e-11));
  CHECK(r1.log2_N == doctest::Approx(453.9151212248288).epsilon(1e-11));
  CHECK(r1.log2_family_count == doctest::Approx(249.26568659518315).epsilon(1e-11));
  CHECK(r1.log2_family_bound == doctest::Approx(249.26568659518315 - 125).epsilon(1e-11));
  const auto r2 = scenario_report("movie-k18-t22");
  CHECK(r2.log2_N_classical == doctest::Approx(513.2572684802401).epsilon(1e-11));
  CHECK(r2.log2_N == doctest::Approx(498.20974363293067).epsilon(1e-11));
  CHECK(r2.log2_family_count == doctest::Approx(275.8425544101243).epsilon(1e-11));

  // The classical claims do not follow from the count formula; the fuzzy
  // claims match the family bound within a bit.
  for (const auto* r : {&r1, &r2}) {
    CHECK(r->discrepancy_flag);
    REQUIRE(r->comparisons.size() == 4);
    CHECK(r->comparisons[0].discrepant);
    CHECK(r->comparisons[1].discrepant);
    CHECK_FALSE(r->comparisons[2].discrepant);
    CHECK_FALSE(r->comparisons[3].discrepant);
  }
  CHECK(format_report_text(r1).find("DISCREPANCY") != std::string::npos);
  CHECK(format_report_json(r1).find("\"discrepancy_flag\": true") != std::string::npos);
}

TEST_CASE("property: log-gamma agrees with exact rationals and a direct sum") {
  Rng rng(71);
  int exact_checked = 0;
  for (int trial = 0; trial < 500; ++trial) {
    ScenarioParams p;
    p.q = 2 + rng.below(400);
    p.r = 1 + rng.below(p.q);
    p.t = 1 + rng.below(p.r);
    p.t_MFj = 1 + rng.below(p.t);
    p.k = 1 + rng.below(30);
    p.m_F = 1 + rng.below(std::min<std::uint64_t>(p.q, 10));
    p.m_A = 1 + rng.below(std::min(p.m_F, p.q - 1));
    p.mu = rng.uniform(0.01, 0.99);
    p.family_cardinality = 1 + rng.below(4);
    p.n = p.k - 1;
    const double lg = spurious_polynomials_log2(p);
    REQUIRE(lg == doctest::Approx(direct_log2_N(p, false)).epsilon(1e-9).scale(1.0));
    const double fam = family_spurious_log2(p);
    REQUIRE(fam == doctest::Approx(direct_log2_N(p, true)).epsilon(1e-9).scale(1.0));
    if (auto exact = spurious_polynomials_exact(p)) {
      REQUIRE(std::abs(log2_rational(*exact) - lg) <= 1e-9);
      ++exact_checked;
    }
    if (auto exact = family_spurious_exact(p)) REQUIRE(std::abs(log2_rational(*exact) - fam) <= 1e-9);
  }
  CHECK(exact_checked > 100);
}

TEST_CASE("property: N is non-decreasing in k and the attacker bound is a probability") {
  Rng rng(72);
  for (int trial = 0; trial < 300; ++trial) {
    ScenarioParams p;
    p.q = 50 + rng.below(10000);
    p.r = 20 + rng.below(p.q - 19);
    p.t = 1 + rng.below(20);
    p.t_MFj = 1 + rng.below(p.t);
    p.m_F = 1 + rng.below(8);
    p.m_A = 1 + rng.below(p.m_F);
    p.k = 1;
    double prev = spurious_polynomials_log2(p);
    for (p.k = 2; p.k < 40; ++p.k) {
      const double cur = spurious_polynomials_log2(p);
      if (p.m_A > 1) {
        REQUIRE(cur > prev);
      } else {
        REQUIRE(cur >= prev - 1e-9);
      }
      prev = cur;
    }
    double last = 2.0;
    for (p.n = 0; p.n < 30; ++p.n) {
      const double a = attacker_success_prob(p);
      REQUIRE(a >= 0.0);
      REQUIRE(a <= 1.0);
      const bool base_below_one = p.m_A < p.m_F || p.t_MFj < p.r;
      if (base_below_one && p.n > 0 && last > 0) REQUIRE(a < last);
      last = a;
    }
  }
}

TEST_CASE("census: genuine-only vault has a single full agreement") {
  const auto res = desk::census_lock(5, 3, 6, 6, 0.0);
  const auto c = empirical_spurious_census(res.vault, res.transcript, 3);
  CHECK(c.total_polynomials == 97 * 97 * 97);
  CHECK(c.exact_family_blind() == 1);
  CHECK(c.exact_family_aware() == 1);
}

TEST_CASE("census: fewer points than coefficients leave an affine family") {
  Vault v;
  v.q = 97;
  v.n = 2;
  LockTranscript tr{Polynomial{{4, 5, 6}}, FamilyTemplate::gaussian(0.5, 0.5), {}, 2, 2};
  const PrimeField f(97);
  for (FieldElement x : {10u, 20u}) {
    const auto y = poly_eval(tr.polynomial, x, f);
    v.points.push_back({tr.locking_template.instantiate(static_cast<double>(x)),
                        tr.locking_template.instantiate(static_cast<double>(y))});
    tr.roles.push_back(PointRole::kGenuine);
  }
  const auto c = empirical_spurious_census(v, tr, 3);
  CHECK(c.exact_family_blind() == 97);
  CHECK(c.exact_family_aware() == 97);
}

TEST_CASE("census agrees with brute force and is reproducible") {
  for (std::uint64_t seed : {1u, 2u}) {
    const auto res = desk::census_lock(seed);
    const auto c = empirical_spurious_census(res.vault, res.transcript, 3);
    std::vector<std::uint64_t> xs, ys;
    std::vector<bool> all, aware;
    for (const auto& pt : res.vault.points) {
      xs.push_back(core_of(pt.x));
      ys.push_back(core_of(pt.y));
      all.push_back(true);
      aware.push_back(pt.x.family() == Family::kGaussian);
    }
    const auto blind = oracle::census_brute_force(97, 3, xs, ys, all);
    const auto fam = oracle::census_brute_force(97, 3, xs, ys, aware);
    CHECK(c.family_blind == blind);
    CHECK(c.family_aware == fam);
    CHECK(c.family_aware[6] >= 1);
    CHECK(empirical_spurious_census(res.vault, res.transcript, 3) == c);
  }
}

TEST_CASE("census report carries both models") {
  const auto res = desk::census_lock(3);
  const auto rep = census_report(res.vault, res.transcript, 3, 1);
  CHECK(rep.binomial_model_log2 == doctest::Approx(log2_binomial(30, 6) + (3.0 - 6.0) * std::log2(97.0) +
                                                    24 * std::log2(96.0 / 97.0)));
  CHECK(std::isfinite(rep.count_formula_log2));
  CHECK_THROWS_AS(empirical_spurious_census(res.vault, res.transcript, 4), ValidationError);
}
