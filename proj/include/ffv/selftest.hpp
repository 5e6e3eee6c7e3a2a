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

#ifndef FFV_SELFTEST_HPP_
#define FFV_SELFTEST_HPP_

#include <string>
#include <vector>

#include "ffv/field_poly.hpp"

namespace ffv {

// Fast consistency checks run by `ffv selftest`. The options exist so the
// harness can prove that a misconfiguration is caught by the named check.
struct SelftestOptions {
  CrcVariant crc_variant = kCrc16Arc;  // variant handed to the CRC check
  bool corrupt_census = false;         // perturb the fast census before comparing
};

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

std::vector<CheckResult> run_selftest(const SelftestOptions& options = {});

}  // namespace ffv

#endif  // FFV_SELFTEST_HPP_
