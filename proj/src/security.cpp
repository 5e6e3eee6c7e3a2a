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

#include "ffv/security.hpp"

#include <charconv>
#include <cmath>
#include <iomanip>
#include <limits>
#include <sstream>

#include "ffv/error.hpp"
#include "json.hpp"

namespace ffv {

namespace {

using boost::multiprecision::cpp_int;

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
constexpr unsigned kExactBitLimit = 1024;

cpp_int int_pow(std::uint64_t base, std::uint64_t exp) {
  return boost::multiprecision::pow(cpp_int(base), static_cast<unsigned>(exp));
}

cpp_int exact_binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  cpp_int result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) result = result * (n - k + i) / i;
  return result;
}

double log2_int(const cpp_int& v) {
  if (v <= 0) return kNegInf;
  const unsigned msb = boost::multiprecision::msb(v);
  if (msb < 60) return std::log2(v.convert_to<double>());
  const unsigned shift = msb - 60;
  return std::log2(static_cast<cpp_int>(v >> shift).convert_to<double>()) + shift;
}

Rational exact_from_double(double x) {
  int exp = 0;
  const double mant = std::frexp(x, &exp);
  const auto m = static_cast<std::int64_t>(std::ldexp(mant, 53));
  const int shift = exp - 53;
  if (shift >= 0) return Rational(cpp_int(m) << shift);
  return Rational(cpp_int(m), cpp_int(1) << (-shift));
}

bool fits(const Rational& x) {
  const cpp_int num = boost::multiprecision::numerator(x);
  return (num == 0 || boost::multiprecision::msb(num) < kExactBitLimit) &&
         boost::multiprecision::msb(boost::multiprecision::denominator(x)) < kExactBitLimit;
}

// Rough bit size of the exact computation, to skip hopeless cases early.
double estimated_bits(const ScenarioParams& p) {
  const double lq = std::log2(static_cast<double>(p.q));
  const double diff = std::abs(static_cast<double>(p.k) - static_cast<double>(p.t_MFj));
  return static_cast<double>(p.k) * lq + static_cast<double>(p.r) + diff * lq +
         static_cast<double>(p.r - p.t_MFj) * lq + static_cast<double>(p.q);
}

// Shared tail of both counts: (m_A/q)^(k-t) (1-m_A/q)^(r-t).
Rational membership_factors(const ScenarioParams& p) {
  Rational f = 1;
  if (p.k >= p.t_MFj) {
    f *= Rational(int_pow(p.m_A, p.k - p.t_MFj), int_pow(p.q, p.k - p.t_MFj));
  } else {
    f *= Rational(int_pow(p.q, p.t_MFj - p.k), int_pow(p.m_A, p.t_MFj - p.k));
  }
  f *= Rational(int_pow(p.q - p.m_A, p.r - p.t_MFj), int_pow(p.q, p.r - p.t_MFj));
  return f;
}

double membership_factors_log2(const ScenarioParams& p) {
  const double q = static_cast<double>(p.q);
  const double ma = static_cast<double>(p.m_A);
  double sum = (static_cast<double>(p.k) - static_cast<double>(p.t_MFj)) * (std::log2(ma) - std::log2(q));
  if (p.r > p.t_MFj) {
    if (p.m_A == p.q) return kNegInf;
    sum += static_cast<double>(p.r - p.t_MFj) * std::log1p(-ma / q) / std::log(2.0);
  }
  return sum;
}

std::string fixed(double v, int precision) {
  if (std::isinf(v)) return v < 0 ? "-inf" : "inf";
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed, precision);
  return std::string(buf, res.ptr);
}

std::string general(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

struct Preset {
  std::string_view name;
  ScenarioParams params;
  ReportedClaims claims;
};

// Movie-lover scenarios: r = q = 10^4, five membership families for all points.
const Preset kPresets[] = {
    {"movie-k16-t20", {10000, 16, 10000, 20, 20, 5, 5, 15, 0x1.0p-125, 1}, {106, 53, 249, 125}},
    {"movie-k18-t22", {10000, 18, 10000, 22, 22, 5, 5, 17, 0x1.0p-138, 1}, {139, 70, 276, 138}},
};

const Preset& find_preset(std::string_view name) {
  for (const auto& p : kPresets) {
    if (p.name == name) return p;
  }
  throw ValidationError("unknown preset \"" + std::string(name) + "\"");
}

}  // namespace

void validate_scenario(const ScenarioParams& p) {
  if (p.q < 1) throw ValidationError("scenario: q must be positive");
  if (!(p.t_MFj <= p.t && p.t <= p.r && p.r <= p.q)) {
    throw ValidationError("scenario: requires t_MFj <= t <= r <= q");
  }
  if (!(p.m_A >= 1 && p.m_A <= p.m_F)) throw ValidationError("scenario: requires 1 <= m_A <= m_F");
  if (p.m_A > p.q) throw ValidationError("scenario: requires m_A <= q");
  if (!(p.mu > 0.0 && p.mu < 1.0)) throw ValidationError("scenario: mu must lie in (0, 1)");
}

double log2_binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return kNegInf;
  const double ln = std::lgamma(static_cast<double>(n) + 1) - std::lgamma(static_cast<double>(k) + 1) -
                    std::lgamma(static_cast<double>(n - k) + 1);
  return ln / std::log(2.0);
}

double log2_rational(const Rational& x) {
  if (x < 0) return std::numeric_limits<double>::quiet_NaN();
  if (x == 0) return kNegInf;
  return log2_int(boost::multiprecision::numerator(x)) - log2_int(boost::multiprecision::denominator(x));
}

double spurious_polynomials_log2(const ScenarioParams& p) {
  validate_scenario(p);
  const double tail = membership_factors_log2(p);
  if (std::isinf(tail)) return kNegInf;
  return static_cast<double>(p.k) * std::log2(static_cast<double>(p.q)) + log2_binomial(p.r, p.t_MFj) + tail;
}

std::optional<Rational> spurious_polynomials_exact(const ScenarioParams& p) {
  validate_scenario(p);
  if (estimated_bits(p) > 4 * kExactBitLimit) return std::nullopt;
  Rational n = Rational(int_pow(p.q, p.k) * exact_binomial(p.r, p.t_MFj)) * membership_factors(p);
  if (!fits(n)) return std::nullopt;
  return n;
}

Rational conditional_membership_prob(std::uint64_t q, std::uint64_t m_A) {
  if (q == 0 || m_A < 1 || m_A > q) throw ValidationError("conditional_membership_prob: requires 1 <= m_A <= q");
  return Rational(m_A, q);
}

double family_spurious_log2(const ScenarioParams& p) {
  validate_scenario(p);
  const double tail = membership_factors_log2(p);
  if (std::isinf(tail)) return kNegInf;
  return std::log2(p.mu) + std::log2(static_cast<double>(p.family_cardinality)) +
         static_cast<double>(p.k) * std::log2(static_cast<double>(p.q)) + log2_binomial(p.r, p.t_MFj) -
         log2_binomial(p.q, p.t_MFj) + tail;
}

std::optional<Rational> family_spurious_exact(const ScenarioParams& p) {
  validate_scenario(p);
  if (estimated_bits(p) > 4 * kExactBitLimit) return std::nullopt;
  Rational v = exact_from_double(p.mu) * Rational(cpp_int(p.family_cardinality) * int_pow(p.q, p.k)) *
               Rational(exact_binomial(p.r, p.t_MFj), exact_binomial(p.q, p.t_MFj)) * membership_factors(p);
  if (!fits(v)) return std::nullopt;
  return v;
}

double attacker_success_log2(const ScenarioParams& p) {
  validate_scenario(p);
  if (p.n == 0) return 0.0;
  const double base = (static_cast<double>(p.m_A) / static_cast<double>(p.m_F)) *
                      (static_cast<double>(p.t_MFj) / static_cast<double>(p.r));
  return static_cast<double>(p.n) * std::log2(base);
}

double attacker_success_prob(const ScenarioParams& p) { return std::exp2(attacker_success_log2(p)); }

double attacker_success_prob_product_form(const ScenarioParams& p) {
  validate_scenario(p);
  const double base = (static_cast<double>(p.m_A) / static_cast<double>(p.m_F)) *
                      (static_cast<double>(p.t_MFj) / static_cast<double>(p.t)) *
                      (static_cast<double>(p.t) / static_cast<double>(p.r));
  const double exponent = static_cast<double>(p.n) * (static_cast<double>(p.n) - 1) / 2;
  return exponent == 0 ? 1.0 : std::pow(base, exponent);
}

double binomial_model_log2(std::uint64_t q, std::uint64_t k, std::uint64_t r, std::uint64_t t) {
  if (t > r || q < 2) throw ValidationError("binomial_model_log2: requires t <= r and q >= 2");
  const double qd = static_cast<double>(q);
  return log2_binomial(r, t) + (static_cast<double>(k) - static_cast<double>(t)) * std::log2(qd) +
         static_cast<double>(r - t) * std::log1p(-1.0 / qd) / std::log(2.0);
}

std::vector<std::string> preset_names() {
  std::vector<std::string> out;
  for (const auto& p : kPresets) out.emplace_back(p.name);
  return out;
}

ScenarioParams preset_params(std::string_view name) { return find_preset(name).params; }
ReportedClaims preset_claims(std::string_view name) { return find_preset(name).claims; }

SecurityReport scenario_report(std::string_view preset) {
  const Preset& p = find_preset(preset);
  return scenario_report(p.params, p.claims, std::string(p.name));
}

SecurityReport scenario_report(const ScenarioParams& params, std::optional<ReportedClaims> claims,
                               std::string name) {
  validate_scenario(params);
  SecurityReport rep;
  rep.name = std::move(name);
  rep.params = params;
  rep.log2_N = spurious_polynomials_log2(params);
  ScenarioParams classical = params;
  classical.m_A = 1;
  rep.log2_N_classical = spurious_polynomials_log2(classical);
  rep.log2_family_bound = family_spurious_log2(params);
  rep.log2_family_count = rep.log2_family_bound - std::log2(params.mu);
  rep.attacker_log2 = attacker_success_log2(params);
  rep.attacker_prob = std::exp2(rep.attacker_log2);
  rep.security_bits = rep.log2_N / 2;
  rep.classical_security_bits = rep.log2_N_classical / 2;
  if (auto exact = spurious_polynomials_exact(params)) rep.exact_log2_N = log2_rational(*exact);
  rep.reported = claims;
  if (claims) {
    auto compare = [&rep](std::string label, double computed, double claimed) {
      const bool off = !(std::abs(computed - claimed) <= 1.0);
      rep.comparisons.push_back({std::move(label), computed, claimed, off});
      rep.discrepancy_flag = rep.discrepancy_flag || off;
    };
    compare("classical log2 N", rep.log2_N_classical, claims->classical_log2_N);
    compare("classical security bits", rep.classical_security_bits, claims->classical_security_bits);
    compare("fuzzy log2 N", rep.log2_family_count, claims->fuzzy_log2_N);
    compare("fuzzy security bits", rep.log2_family_bound, claims->fuzzy_security_bits);
  }
  return rep;
}

std::string format_report_text(const SecurityReport& r) {
  const ScenarioParams& p = r.params;
  std::ostringstream out;
  out << "scenario: " << r.name << "\n";
  out << "  q=" << p.q << " k=" << p.k << " r=" << p.r << " t=" << p.t << " t_MFj=" << p.t_MFj << " m_A=" << p.m_A
      << " m_F=" << p.m_F << " n=" << p.n << " mu=" << general(p.mu) << " |eps|=" << p.family_cardinality << "\n";
  out << "  " << std::left << std::setw(26) << ("log2 N (m_A=" + std::to_string(p.m_A) + ")") << std::right << ": "
      << fixed(r.log2_N, 12) << "\n";
  out << "  log2 N (classical, m_A=1) : " << fixed(r.log2_N_classical, 12) << "\n";
  out << "  log2 family bound         : " << fixed(r.log2_family_bound, 12) << "\n";
  out << "  log2 family bound / mu    : " << fixed(r.log2_family_count, 12) << "\n";
  out << "  attacker success prob     : " << general(r.attacker_prob) << " (log2 " << fixed(r.attacker_log2, 12)
      << ")\n";
  out << "  security bits (N/2)       : " << fixed(r.security_bits, 6) << " fuzzy, "
      << fixed(r.classical_security_bits, 6) << " classical\n";
  if (r.exact_log2_N) out << "  exact-rational log2 N      : " << fixed(*r.exact_log2_N, 12) << "\n";
  if (r.reported) {
    const ReportedClaims& c = *r.reported;
    out << "  reported claims           : classical N = 2^" << general(c.classical_log2_N) << " ("
        << general(c.classical_security_bits) << "-bit), fuzzy N = 2^" << general(c.fuzzy_log2_N) << " ("
        << general(c.fuzzy_security_bits) << "-bit)\n";
    for (const ClaimComparison& cmp : r.comparisons) {
      out << "    " << std::left << std::setw(24) << cmp.label << std::right << " computed " << fixed(cmp.computed, 3)
          << "  reported " << general(cmp.claimed) << (cmp.discrepant ? "  MISMATCH" : "  ok") << "\n";
    }
  }
  if (r.discrepancy_flag) {
    out << "  *** DISCREPANCY: computed values differ from the reported claims by more than 1 bit ***\n";
  }
  return out.str();
}

std::string format_report_json(const SecurityReport& r) {
  using json = nlohmann::ordered_json;
  auto num = [](double v) -> json {
    if (std::isfinite(v)) return v;
    return v < 0 ? "-inf" : "inf";
  };
  const ScenarioParams& p = r.params;
  json j;
  j["scenario"] = r.name;
  j["params"] = json{{"q", p.q},     {"k", p.k},     {"r", p.r},   {"t", p.t},   {"t_MFj", p.t_MFj},
                     {"m_A", p.m_A}, {"m_F", p.m_F}, {"n", p.n},   {"mu", p.mu}, {"family_cardinality", p.family_cardinality}};
  j["log2_N"] = num(r.log2_N);
  j["log2_N_classical"] = num(r.log2_N_classical);
  j["log2_family_bound"] = num(r.log2_family_bound);
  j["log2_family_count"] = num(r.log2_family_count);
  j["attacker_prob"] = r.attacker_prob;
  j["attacker_log2"] = num(r.attacker_log2);
  j["security_bits"] = num(r.security_bits);
  j["classical_security_bits"] = num(r.classical_security_bits);
  j["exact_log2_N"] = r.exact_log2_N ? num(*r.exact_log2_N) : json(nullptr);
  if (r.reported) {
    j["reported_claims"] = json{{"classical_log2_N", r.reported->classical_log2_N},
                                {"classical_security_bits", r.reported->classical_security_bits},
                                {"fuzzy_log2_N", r.reported->fuzzy_log2_N},
                                {"fuzzy_security_bits", r.reported->fuzzy_security_bits}};
    json cmp = json::array();
    for (const ClaimComparison& c : r.comparisons) {
      cmp.push_back(json{{"label", c.label}, {"computed", num(c.computed)}, {"claimed", c.claimed},
                         {"discrepant", c.discrepant}});
    }
    j["comparisons"] = std::move(cmp);
  } else {
    j["reported_claims"] = nullptr;
  }
  j["discrepancy_flag"] = r.discrepancy_flag;
  return j.dump(2) + "\n";
}

}  // namespace ffv
