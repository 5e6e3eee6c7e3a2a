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

#ifndef FFV_SECURITY_HPP_
#define FFV_SECURITY_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace ffv {

using Rational = boost::multiprecision::cpp_rational;

struct ScenarioParams {
  std::uint64_t q = 0;
  std::uint64_t k = 0;
  std::uint64_t r = 0;
  std::uint64_t t = 0;
  std::uint64_t t_MFj = 0;
  std::uint64_t m_A = 1;
  std::uint64_t m_F = 1;
  std::uint64_t n = 0;
  double mu = 0.5;
  std::uint64_t family_cardinality = 1;  // |epsilon|, the size of the agreeing family

  bool operator==(const ScenarioParams&) const = default;
};

// Throws ValidationError unless t_MFj <= t <= r <= q, 1 <= m_A <= m_F,
// m_A <= q and 0 < mu < 1.
void validate_scenario(const ScenarioParams& p);

// log2 of N = q^k C(r, t_MFj) (m_A/q)^(k - t_MFj) (1 - m_A/q)^(r - t_MFj),
// via log-gamma. Returns -infinity when the count is zero (m_A = q, r > t_MFj).
double spurious_polynomials_log2(const ScenarioParams& p);

// The same N as an exact rational, or nullopt when numerator or denominator
// would reach 2^1024.
std::optional<Rational> spurious_polynomials_exact(const ScenarioParams& p);

// m_A / q.
Rational conditional_membership_prob(std::uint64_t q, std::uint64_t m_A);

// log2 of mu |eps| q^k (C(r,t_MFj)/C(q,t_MFj)) (m_A/q)^(k-t_MFj) (1-m_A/q)^(r-t_MFj).
double family_spurious_log2(const ScenarioParams& p);
std::optional<Rational> family_spurious_exact(const ScenarioParams& p);

// (m_A/m_F * t_MFj/r)^n.
double attacker_success_prob(const ScenarioParams& p);
double attacker_success_log2(const ScenarioParams& p);
// prod_{i=0}^{n-1} base^i = base^(n(n-1)/2); kept for comparison only.
double attacker_success_prob_product_form(const ScenarioParams& p);

// Expected number of degree < k polynomials agreeing with exactly t of r
// uniformly random points with distinct x: C(r,t) q^(k-t) (1 - 1/q)^(r-t).
double binomial_model_log2(std::uint64_t q, std::uint64_t k, std::uint64_t r, std::uint64_t t);

double log2_binomial(std::uint64_t n, std::uint64_t k);
double log2_rational(const Rational& x);

// Exponents stated for the preset scenarios.
struct ReportedClaims {
  double classical_log2_N;
  double classical_security_bits;
  double fuzzy_log2_N;
  double fuzzy_security_bits;
};

// One reported exponent next to the value computed for it.
struct ClaimComparison {
  std::string label;
  double computed = 0;
  double claimed = 0;
  bool discrepant = false;  // |computed - claimed| > 1 bit
};

struct SecurityReport {
  std::string name;
  ScenarioParams params;
  double log2_N = 0;              // spurious count N at the given m_A
  double log2_N_classical = 0;    // same with m_A = 1
  double log2_family_bound = 0;   // includes the mu factor
  double log2_family_count = 0;   // the same bound without mu
  double attacker_prob = 0;
  double attacker_log2 = 0;
  double security_bits = 0;       // log2_N / 2
  double classical_security_bits = 0;
  std::optional<double> exact_log2_N;  // exact-rational cross-check when small enough
  std::optional<ReportedClaims> reported;
  // Classical claims are set against N at m_A = 1 (and N/2); fuzzy claims
  // against the family bound without mu (and with mu).
  std::vector<ClaimComparison> comparisons;
  bool discrepancy_flag = false;
};

std::vector<std::string> preset_names();
// Throws ValidationError for an unknown name.
ScenarioParams preset_params(std::string_view name);
ReportedClaims preset_claims(std::string_view name);

SecurityReport scenario_report(std::string_view preset);
SecurityReport scenario_report(const ScenarioParams& params, std::optional<ReportedClaims> claims = std::nullopt,
                               std::string name = "custom");

std::string format_report_text(const SecurityReport& report);
std::string format_report_json(const SecurityReport& report);

}  // namespace ffv

#endif  // FFV_SECURITY_HPP_
