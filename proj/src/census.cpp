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

#include "ffv/census.hpp"

#include <string>

#include "ffv/error.hpp"
#include "ffv/security.hpp"

namespace ffv {

namespace {

struct CorePoint {
  FieldElement x;
  FieldElement y;
  bool locking_family;
};

}  // namespace

CensusResult empirical_spurious_census(const Vault& vault, const LockTranscript& transcript, std::size_t k) {
  if (k == 0) throw ValidationError("census: k must be positive");
  const PrimeField field(vault.q);
  const std::uint64_t q = vault.q;
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (total > kCensusLimit / q) {
      throw ValidationError("census: q^k exceeds the exhaustive limit of " + std::to_string(kCensusLimit));
    }
    total *= q;
  }

  std::vector<CorePoint> pts;
  pts.reserve(vault.r());
  for (const auto& pt : vault.points) {
    const FieldElement x = core_of(pt.x);
    pts.push_back({x, core_of(pt.y), pt.x == transcript.locking_template.instantiate(static_cast<double>(x))});
  }

  CensusResult res;
  res.q = q;
  res.k = k;
  res.t_MFj = transcript.t_MFk;
  res.total_polynomials = total;
  res.family_blind.assign(pts.size() + 1, 0);
  res.family_aware.assign(pts.size() + 1, 0);

  // Iterate the high coefficients; for each, the constant term that makes
  // point i agree is y_i - sum_{j>=1} beta_j x_i^j, so all q constant terms
  // are tallied at once.
  std::vector<FieldElement> high(k - 1, 0);
  std::vector<std::uint32_t> blind(q), aware(q);
  for (;;) {
    std::fill(blind.begin(), blind.end(), 0);
    std::fill(aware.begin(), aware.end(), 0);
    for (const auto& pt : pts) {
      FieldElement acc = 0;
      for (std::size_t j = high.size(); j-- > 0;) acc = field.mul(field.add(acc, high[j]), pt.x);
      const FieldElement beta0 = field.sub(pt.y, acc);
      ++blind[beta0];
      if (pt.locking_family) ++aware[beta0];
    }
    for (std::uint64_t b = 0; b < q; ++b) {
      ++res.family_blind[blind[b]];
      ++res.family_aware[aware[b]];
    }
    std::size_t pos = 0;
    while (pos < high.size() && ++high[pos] == q) high[pos++] = 0;
    if (pos == high.size()) break;
  }
  return res;
}

CensusReport census_report(const Vault& vault, const LockTranscript& transcript, std::size_t k, std::uint64_t m_A) {
  CensusReport rep;
  rep.census = empirical_spurious_census(vault, transcript, k);
  ScenarioParams sp;
  sp.q = vault.q;
  sp.k = k;
  sp.r = vault.r();
  sp.t = transcript.t;
  sp.t_MFj = transcript.t_MFk;
  sp.m_A = m_A;
  sp.m_F = m_A;
  rep.count_formula_log2 = spurious_polynomials_log2(sp);
  rep.binomial_model_log2 = binomial_model_log2(vault.q, k, vault.r(), transcript.t_MFk);
  return rep;
}

}  // namespace ffv
