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

#include "ffv/minutiae.hpp"

#include <cmath>
#include <locale>
#include <set>
#include <sstream>
#include <string>

#include "ffv/error.hpp"
#include "ffv/multi_fuzzy_set.hpp"
#include "ffv/rng.hpp"

namespace ffv {

namespace {

constexpr int kShortListBins = 15;
constexpr int kPositionCell = 8;

// Counter-clockwise sweep from a to b, in [0, 360).
double ccw(Orientation a, Orientation b) { return normalize_degrees(b.degrees() - a.degrees()); }

int short_list_index(double degrees) {
  const double d = normalize_degrees(degrees);
  const double idx = d / kOrientationStep;
  if (idx != std::floor(idx) || idx >= kShortListBins) {
    throw ValidationError("orientation " + std::to_string(degrees) + " is not on the 15-value list");
  }
  return static_cast<int>(idx);
}

int grid_bin(Orientation o) {
  const auto b = static_cast<long>(std::lround(o.degrees() / kOrientationStep));
  return static_cast<int>(((b % kOrientationBins) + kOrientationBins) % kOrientationBins);
}

std::uint64_t position_hash(int x, int y) {
  const auto qx = static_cast<std::uint32_t>(static_cast<std::int32_t>(std::floor(static_cast<double>(x) / kPositionCell)));
  const auto qy = static_cast<std::uint32_t>(static_cast<std::int32_t>(std::floor(static_cast<double>(y) / kPositionCell)));
  std::uint64_t state = (static_cast<std::uint64_t>(qx) << 32) | qy;
  return splitmix64(state);
}

// Signed offset of an orientation from its nearest grid bin, in grid steps.
double bin_offset(Orientation o) {
  double off = o.degrees() / kOrientationStep - grid_bin(o);
  if (off > kOrientationBins / 2.0) off -= kOrientationBins;
  if (off < -kOrientationBins / 2.0) off += kOrientationBins;
  return off;
}

}  // namespace

double normalize_degrees(double degrees) {
  double d = std::fmod(degrees, 360.0);
  if (d < 0) d += 360.0;
  if (d >= 360.0) d = 0.0;
  return d;
}

std::vector<Orientation> orientation_set() {
  std::vector<Orientation> out;
  out.reserve(kOrientationBins);
  for (int i = 0; i < kOrientationBins; ++i) out.emplace_back(i * kOrientationStep);
  return out;
}

double circular_distance(Orientation a, Orientation b) {
  const double d = std::abs(a.degrees() - b.degrees());
  return std::min(d, 360.0 - d);
}

Minutia make_minutia(MinutiaKind kind, int x, int y, double lower, double center, double upper) {
  Minutia m{kind, x, y, Orientation(lower), Orientation(center), Orientation(upper)};
  const double width = ccw(m.lower, m.upper);
  if (width > 90.0) throw ValidationError("minutia: orientation interval wider than 90 degrees");
  if (ccw(m.lower, m.center) > width) {
    throw ValidationError("minutia: center orientation lies outside [lower, upper]");
  }
  return m;
}

Minutia minutia_from_short_list(MinutiaKind kind, int x, int y, double lower, double center, double upper) {
  const int il = short_list_index(lower), ic = short_list_index(center), iu = short_list_index(upper);
  const int down = ((ic - il) % kShortListBins + kShortListBins) % kShortListBins;
  const int up = ((iu - ic) % kShortListBins + kShortListBins) % kShortListBins;
  const double c = ic * kOrientationStep;
  return make_minutia(kind, x, y, c - down * kOrientationStep, c, c + up * kOrientationStep);
}

FuzzyNumber minutia_to_fuzzy(const Minutia& m) {
  const double l = m.lower.degrees();
  return FuzzyNumber::triangular(l, l + ccw(m.lower, m.center), l + ccw(m.lower, m.upper));
}

std::vector<Minutia> parse_minutiae(std::string_view text) {
  std::vector<Minutia> out;
  std::istringstream in{std::string(text)};
  in.imbue(std::locale::classic());
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    fields.imbue(std::locale::classic());
    std::string kind;
    if (!(fields >> kind)) continue;
    int x = 0, y = 0;
    double lower = 0, center = 0, upper = 0;
    if (!(fields >> x >> y >> lower >> center >> upper)) {
      throw FormatError("minutiae line " + std::to_string(lineno) + ": expected `kind x y lower center upper`");
    }
    std::string rest;
    if (fields >> rest) throw FormatError("minutiae line " + std::to_string(lineno) + ": trailing fields");
    MinutiaKind mk;
    if (kind == "ridge_ending") {
      mk = MinutiaKind::kRidgeEnding;
    } else if (kind == "bifurcation") {
      mk = MinutiaKind::kBifurcation;
    } else {
      throw FormatError("minutiae line " + std::to_string(lineno) + ": unknown kind \"" + kind + "\"");
    }
    try {
      out.push_back(make_minutia(mk, x, y, lower, center, upper));
    } catch (const ValidationError& e) {
      throw FormatError("minutiae line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return out;
}

std::vector<FieldElement> map_minutiae_to_field(std::span<const Minutia> minutiae, std::uint64_t q) {
  if (q <= static_cast<std::uint64_t>(kOrientationBins)) throw ValidationError("minutiae: q must exceed 16");
  if (minutiae.size() > q) throw ValidationError("minutiae: more minutiae than field elements");
  const std::uint64_t slots = q / kOrientationBins;
  std::set<FieldElement> used;
  std::vector<FieldElement> out;
  out.reserve(minutiae.size());
  for (const Minutia& m : minutiae) {
    FieldElement e = (static_cast<std::uint64_t>(grid_bin(m.center)) +
                      kOrientationBins * (position_hash(m.x, m.y) % slots)) % q;
    while (used.count(e)) e = (e + 1) % q;
    used.insert(e);
    out.push_back(e);
  }
  return out;
}

MinutiaeDemoResult minutiae_vault_demo(std::span<const Minutia> minutiae, std::span<const std::uint8_t> key,
                                       const MinutiaeDemoParams& params) {
  if (minutiae.size() < params.k) throw ValidationError("minutiae demo: need at least k minutiae");
  if (!(params.jitter_min >= 0 && params.jitter_min <= params.jitter_max)) {
    throw ValidationError("minutiae demo: requires 0 <= jitter_min <= jitter_max");
  }
  const std::uint64_t q = params.q;
  const FamilyTemplate locking_template = FamilyTemplate::triangular(1.0, 1.0);
  const std::size_t sizes[] = {static_cast<std::size_t>(q / 2), static_cast<std::size_t>(q - q / 2)};
  const FamilyTemplate templates[] = {locking_template, FamilyTemplate::gaussian(0.5, 0.5)};
  const MultiFuzzySet field = MultiFuzzySet::partition_field(q, sizes, templates);

  const std::vector<FieldElement> elements = map_minutiae_to_field(minutiae, q);
  const MultiFuzzySet locking = build_locking_set(field, {{elements, locking_template}});

  LockParams lp;
  lp.k_subset = 0;
  lp.k = params.k;
  lp.r = params.r;
  lp.rho = params.rho;
  lp.delta = params.delta;
  lp.seed = params.seed;
  LockResult locked = fuzzy_lock(key, locking, field, lp);

  std::uint64_t jitter_seed = params.seed ^ 0x6A09E667F3BCC909ull;
  Rng rng(splitmix64(jitter_seed));
  std::vector<Minutia> jittered;
  jittered.reserve(minutiae.size());
  for (const Minutia& m : minutiae) {
    const double magnitude = params.jitter_min + (params.jitter_max - params.jitter_min) * rng.uniform(0.0, 1.0);
    const double shift = (rng.below(2) ? 1.0 : -1.0) * magnitude * kOrientationStep;
    jittered.push_back({m.kind, m.x, m.y, Orientation(m.lower.degrees() + shift),
                        Orientation(m.center.degrees() + shift), Orientation(m.upper.degrees() + shift)});
  }
  const std::vector<FieldElement> probe_elements = map_minutiae_to_field(jittered, q);
  std::vector<FuzzyNumber> probes;
  probes.reserve(jittered.size());
  for (std::size_t i = 0; i < jittered.size(); ++i) {
    probes.push_back(locking_template.instantiate(static_cast<double>(probe_elements[i]) + bin_offset(jittered[i].center)));
  }

  UnlockResult unlocked = unlock_with_probes(locked.vault, probes, params.delta, key.size(), params.effort_cap);
  return {std::move(locked.vault), std::move(locked.transcript), std::move(probes), std::move(unlocked)};
}

}  // namespace ffv
