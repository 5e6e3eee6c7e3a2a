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

#ifndef FFV_CENSUS_HPP_
#define FFV_CENSUS_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "ffv/vault.hpp"

namespace ffv {

// Exhaustive count over all q^k polynomials of degree < k of how many vault
// points each one passes through.
struct CensusResult {
  std::uint64_t q = 0;
  std::size_t k = 0;
  std::size_t t_MFj = 0;
  std::uint64_t total_polynomials = 0;
  // histogram[a] = number of polynomials agreeing with exactly a points.
  std::vector<std::uint64_t> family_blind;
  // Same, counting only points fuzzified with the locking template.
  std::vector<std::uint64_t> family_aware;

  std::uint64_t exact_family_blind() const { return family_blind.at(t_MFj); }
  std::uint64_t exact_family_aware() const { return family_aware.at(t_MFj); }

  bool operator==(const CensusResult&) const = default;
};

inline constexpr std::uint64_t kCensusLimit = 10'000'000;

// Throws ValidationError when q^k exceeds kCensusLimit.
CensusResult empirical_spurious_census(const Vault& vault, const LockTranscript& transcript, std::size_t k);

struct CensusReport {
  CensusResult census;
  double count_formula_log2 = 0;            // spurious-polynomial count formula at (q, k, r, t_MFj, m_A)
  double binomial_model_log2 = 0;  // random-point expectation for exactly t_MFj agreements
};

CensusReport census_report(const Vault& vault, const LockTranscript& transcript, std::size_t k, std::uint64_t m_A);

}  // namespace ffv

#endif  // FFV_CENSUS_HPP_
