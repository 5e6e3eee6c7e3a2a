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

#include "ffv/selftest.hpp"

#include <cmath>
#include <exception>
#include <sstream>

#include "ffv/census.hpp"
#include "ffv/desk_scenarios.hpp"
#include "ffv/fuzzy_number.hpp"
#include "ffv/minutiae.hpp"
#include "ffv/oracles.hpp"
#include "ffv/security.hpp"
#include "ffv/vault.hpp"
#include "ffv/vault_io.hpp"

namespace ffv {

namespace {

using Check = bool (*)(const SelftestOptions&, std::ostream&);

bool check_crc(const SelftestOptions& opt, std::ostream& detail) {
  const std::uint16_t check = crc16("123456789", opt.crc_variant);
  if (check != 0xBB3D) {
    detail << opt.crc_variant.name << " gives 0x" << std::hex << check << " for \"123456789\", expected 0xbb3d";
    return false;
  }
  Rng rng(0xC0FFEE);
  for (int i = 0; i < 2000; ++i) {
    Bytes data(rng.below(64));
    for (auto& b : data) b = static_cast<std::uint8_t>(rng());
    if (crc16(data, opt.crc_variant) != oracle::crc16_arc_bitwise(data)) {
      detail << "table CRC disagrees with the bitwise reference on case " << i;
      return false;
    }
  }
  detail << "check value 0xbb3d, 2000 random strings match the bitwise reference";
  return true;
}

bool check_eq32(const SelftestOptions&, std::ostream& detail) {
  ScenarioParams p;
  p.q = 7;
  p.k = 1;
  p.r = 3;
  p.t = 1;
  p.t_MFj = 1;
  const auto exact = spurious_polynomials_exact(p);
  const double lg = spurious_polynomials_log2(p);
  const double want = std::log2(108.0 / 7.0);
  detail << "N = 108/7, log2 " << lg;
  return exact && *exact == Rational(108, 7) && std::abs(lg - want) <= 1e-12 * want;
}

bool check_interpolation(const SelftestOptions&, std::ostream& detail) {
  Rng rng(0x1A6);
  for (int trial = 0; trial < 100; ++trial) {
    std::uint64_t q;
    do q = (1ull << 17) + rng.below((1ull << 20) - (1ull << 17));
    while (!is_prime(q));
    const PrimeField f(q);
    const std::size_t n = 2 + rng.below(12);
    Polynomial p;
    for (std::size_t i = 0; i < n; ++i) p.coefficients.push_back(rng.below(q));
    std::vector<FieldPoint> pts;
    std::vector<std::uint64_t> xs, ys;
    for (std::size_t i = 0; i < n; ++i) {
      xs.push_back(i * 31 + 7);
      ys.push_back(poly_eval(p, xs.back(), f));
      pts.push_back({xs.back(), ys.back()});
    }
    const Polynomial got = lagrange_interpolate(pts, f);
    if (got != p || got.coefficients != oracle::vandermonde_solve(q, xs, ys)) {
      detail << "mismatch at trial " << trial << " (q=" << q << ", " << n << " coefficients)";
      return false;
    }
  }
  detail << "100 random polynomials recovered";
  return true;
}

bool check_fuzzy_power(const SelftestOptions&, std::ostream& detail) {
  const auto base = FuzzyNumber::triangular(1, 2, 4);
  const auto p = pow_n(base, 2);
  const auto s = p.support();
  constexpr std::size_t kBins = 50;
  const auto mc = oracle::extension_principle_bins([&](double x) { return membership(base, x); },
                                                   [](double x) { return x * x; }, 1.0, 4.0, s.lo, s.hi, kBins,
                                                   50000, 7);
  double worst = 0;
  for (std::size_t b = 0; b < kBins; ++b) {
    const double lo = s.lo + (s.hi - s.lo) * static_cast<double>(b) / kBins;
    const double hi = s.lo + (s.hi - s.lo) * static_cast<double>(b + 1) / kBins;
    const double sup = (lo <= 4.0 && 4.0 <= hi) ? 1.0 : std::max(p.membership(lo), p.membership(hi));
    worst = std::max(worst, std::abs(sup - mc[b]));
  }
  detail << "max deviation from the extension-principle estimate " << worst;
  return worst < 0.03;
}

bool check_round_trip(const SelftestOptions&, std::ostream& detail) {
  Rng rng(0x7E57);
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const auto s = desk::desk_setup(seed);
    const Bytes key = desk::random_key(rng, 14);
    const auto locked = fuzzy_lock(key, s.locking, s.field, s.params);
    const std::string text = serialize_vault(locked.vault);
    const Vault reread = parse_vault(text);
    if (serialize_vault(reread) != text) {
      detail << "vault file does not re-serialize identically (seed " << seed << ")";
      return false;
    }
    const auto u = fuzzy_unlock(reread, build_unlocking_set(s.field.q(), s.groups), s.params.k_subset,
                                s.params.delta, key.size(), 100000);
    if (!u.key || *u.key != key) {
      detail << "key not recovered (seed " << seed << ")";
      return false;
    }
  }
  detail << "5 desk-scale vaults locked, re-read and unlocked";
  return true;
}

bool check_census(const SelftestOptions& opt, std::ostream& detail) {
  const auto locked = desk::census_lock(1);
  CensusResult fast = empirical_spurious_census(locked.vault, locked.transcript, 3);
  if (opt.corrupt_census) ++fast.family_blind.at(fast.t_MFj);
  std::vector<std::uint64_t> xs, ys;
  for (const auto& pt : locked.vault.points) {
    xs.push_back(core_of(pt.x));
    ys.push_back(core_of(pt.y));
  }
  const auto slow = oracle::census_brute_force(97, 3, xs, ys, std::vector<bool>(xs.size(), true));
  if (fast.family_blind != slow) {
    detail << "fast census disagrees with brute force (exact-" << fast.t_MFj << " count " << fast.exact_family_blind()
           << " vs " << slow.at(fast.t_MFj) << ")";
    return false;
  }
  detail << "97^3 polynomials, exact-" << fast.t_MFj << " count " << fast.exact_family_blind();
  return true;
}

bool check_minutiae(const SelftestOptions&, std::ostream& detail) {
  const auto ridge = make_minutia(MinutiaKind::kRidgeEnding, 0, 0, 202.5, 225, 247.5);
  const auto bif = minutia_from_short_list(MinutiaKind::kBifurcation, 0, 0, 292.5, 315, 0);
  const bool ok = minutia_to_fuzzy(ridge) == FuzzyNumber::triangular(202.5, 225, 247.5) &&
                  minutia_to_fuzzy(bif) == FuzzyNumber::triangular(292.5, 315, 337.5);
  detail << (ok ? "both orientation intervals map as expected" : "orientation interval mapping changed");
  return ok;
}

}  // namespace

std::vector<CheckResult> run_selftest(const SelftestOptions& options) {
  static constexpr std::pair<const char*, Check> kChecks[] = {
      {"crc16-arc", check_crc},
      {"spurious-count-small-case", check_eq32},
      {"interpolation", check_interpolation},
      {"fuzzy-power", check_fuzzy_power},
      {"vault-round-trip", check_round_trip},
      {"census", check_census},
      {"minutiae-intervals", check_minutiae},
  };
  std::vector<CheckResult> out;
  for (const auto& [name, fn] : kChecks) {
    std::ostringstream detail;
    bool passed = false;
    try {
      passed = fn(options, detail);
    } catch (const std::exception& e) {
      detail << "exception: " << e.what();
    }
    out.push_back({name, passed, detail.str()});
  }
  return out;
}

}  // namespace ffv
