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

#ifndef FFV_MINUTIAE_HPP_
#define FFV_MINUTIAE_HPP_

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "ffv/fuzzy_number.hpp"
#include "ffv/vault.hpp"

namespace ffv {

inline constexpr double kOrientationStep = 22.5;
inline constexpr int kOrientationBins = 16;

double normalize_degrees(double degrees);

class Orientation {
 public:
  explicit Orientation(double degrees) : degrees_(normalize_degrees(degrees)) {}
  double degrees() const { return degrees_; }
  bool operator==(const Orientation&) const = default;

 private:
  double degrees_;
};

// {0, 22.5, ..., 337.5}.
std::vector<Orientation> orientation_set();

// Shorter arc between two orientations, in [0, 180].
double circular_distance(Orientation a, Orientation b);

enum class MinutiaKind { kRidgeEnding, kBifurcation };

struct Minutia {
  MinutiaKind kind;
  int x;
  int y;
  Orientation lower;
  Orientation center;
  Orientation upper;
};

// Throws ValidationError unless center lies on the counter-clockwise arc from
// lower to upper and that arc is at most 90 degrees wide.
Minutia make_minutia(MinutiaKind kind, int x, int y, double lower, double center, double upper);

// Interval endpoints given on the 15-value orientation list that stops at
// 315 degrees, where 315 wraps directly to 0. Each endpoint is re-expressed by
// its step distance from the center on the uniform 16-bin grid.
Minutia minutia_from_short_list(MinutiaKind kind, int x, int y, double lower, double center, double upper);

// Triangle on the real line: lower, center and upper unwrapped upward from lower.
FuzzyNumber minutia_to_fuzzy(const Minutia& m);

// Text format, one minutia per line: `kind x y lower center upper`, where kind
// is ridge_ending or bifurcation. Blank lines and '#' comments are skipped.
std::vector<Minutia> parse_minutiae(std::string_view text);

// Field element: orientation bin + 16 * (quantized position hash), bumped by
// one until unused.
std::vector<FieldElement> map_minutiae_to_field(std::span<const Minutia> minutiae, std::uint64_t q);

struct MinutiaeDemoParams {
  std::uint64_t q = 65537;
  std::size_t k = 4;
  std::size_t r = 200;
  double rho = 0.2;
  double delta = 0.25;
  std::uint64_t seed = 0;
  // Orientation jitter applied to the unlocking copy, in grid steps; each
  // minutia gets a magnitude in [jitter_min, jitter_max] with a random sign.
  double jitter_min = 0.0;
  double jitter_max = 0.0;
  std::uint64_t effort_cap = 100000;
};

struct MinutiaeDemoResult {
  Vault vault;
  LockTranscript transcript;
  std::vector<FuzzyNumber> probes;
  UnlockResult unlock;
};

// Locks `key` with the minutiae as the single triangular locking subset, then
// unlocks with a jittered copy.
MinutiaeDemoResult minutiae_vault_demo(std::span<const Minutia> minutiae, std::span<const std::uint8_t> key,
                                       const MinutiaeDemoParams& params);

}  // namespace ffv

#endif  // FFV_MINUTIAE_HPP_
