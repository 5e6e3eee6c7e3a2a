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

#ifndef FFV_ORACLES_HPP_
#define FFV_ORACLES_HPP_

// Reference implementations used only to verify the library. Each one takes
// a deliberately different route from the production code it checks and uses
// nothing from the library beyond plain data types.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "ffv/rng.hpp"

namespace ffv::oracle {

// Bit-at-a-time CRC-16, MSB-first shift register. Reflection is applied by
// mirroring each input byte and the final register explicitly.
inline std::uint16_t crc16_bitwise(std::span<const std::uint8_t> data, std::uint16_t poly, std::uint16_t init,
                                   bool reflect_in, bool reflect_out, std::uint16_t xor_out) {
  auto mirror = [](std::uint32_t v, int bits) {
    std::uint32_t r = 0;
    for (int i = 0; i < bits; ++i) r |= ((v >> i) & 1u) << (bits - 1 - i);
    return r;
  };
  std::uint32_t reg = init;
  for (std::uint8_t byte : data) {
    const std::uint32_t b = reflect_in ? mirror(byte, 8) : byte;
    for (int i = 7; i >= 0; --i) {
      const std::uint32_t in_bit = (b >> i) & 1u;
      const std::uint32_t top = (reg >> 15) & 1u;
      reg = (reg << 1) & 0xFFFFu;
      if (top ^ in_bit) reg ^= poly;
    }
  }
  if (reflect_out) reg = mirror(reg, 16);
  return static_cast<std::uint16_t>(reg ^ xor_out);
}

inline std::uint16_t crc16_arc_bitwise(std::span<const std::uint8_t> data) {
  return crc16_bitwise(data, 0x8005, 0x0000, true, true, 0x0000);
}

struct Interval {
  double lo;
  double hi;
};

inline Interval interval_add(Interval a, Interval b) { return {a.lo + b.lo, a.hi + b.hi}; }
inline Interval interval_sub(Interval a, Interval b) { return {a.lo - b.hi, a.hi - b.lo}; }
inline Interval interval_scale(double x, Interval a) {
  return {std::min(x * a.lo, x * a.hi), std::max(x * a.lo, x * a.hi)};
}

// Extension-principle estimate of the membership of f(X) for a fuzzy X:
// sample x uniformly on [lo, hi], push through f, keep the largest source
// membership per output bin. Returns the per-bin maxima over [out_lo, out_hi].
inline std::vector<double> extension_principle_bins(const std::function<double(double)>& source_membership,
                                                    const std::function<double(double)>& f, double lo, double hi,
                                                    double out_lo, double out_hi, std::size_t bins,
                                                    std::size_t samples, std::uint64_t seed) {
  std::vector<double> best(bins, 0.0);
  Rng rng(seed);
  for (std::size_t s = 0; s < samples; ++s) {
    const double x = rng.uniform(lo, hi);
    const double y = f(x);
    if (y < out_lo || y > out_hi) continue;
    auto bin = static_cast<std::size_t>((y - out_lo) / (out_hi - out_lo) * static_cast<double>(bins));
    bin = std::min(bin, bins - 1);
    best[bin] = std::max(best[bin], source_membership(x));
  }
  return best;
}

// Plain double-precision Lagrange evaluation.
inline double lagrange_real(std::span<const double> xs, std::span<const double> ys, double x) {
  double sum = 0.0;
  for (std::size_t j = 0; j < xs.size(); ++j) {
    double basis = 1.0;
    for (std::size_t k = 0; k < xs.size(); ++k) {
      if (k != j) basis *= (x - xs[k]) / (xs[j] - xs[k]);
    }
    sum += ys[j] * basis;
  }
  return sum;
}

// Brute-force agreement histogram: evaluates every one of the q^k
// polynomials at every point with Horner's rule.
inline std::vector<std::uint64_t> census_brute_force(std::uint64_t q, std::size_t k,
                                                     std::span<const std::uint64_t> xs,
                                                     std::span<const std::uint64_t> ys,
                                                     const std::vector<bool>& counted) {
  std::vector<std::uint64_t> hist(xs.size() + 1, 0);
  std::vector<std::uint64_t> coeffs(k, 0);
  for (;;) {
    std::size_t agree = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (!counted[i]) continue;
      std::uint64_t acc = 0;
      for (std::size_t j = k; j-- > 0;) acc = (acc * xs[i] + coeffs[j]) % q;
      if (acc == ys[i]) ++agree;
    }
    ++hist[agree];
    std::size_t pos = 0;
    while (pos < k && ++coeffs[pos] == q) coeffs[pos++] = 0;
    if (pos == k) break;
  }
  return hist;
}

// Solves for the coefficients of a degree < n polynomial through n points by
// Gauss-Jordan elimination on the Vandermonde system mod a prime q.
inline std::vector<std::uint64_t> vandermonde_solve(std::uint64_t q, std::span<const std::uint64_t> xs,
                                                    std::span<const std::uint64_t> ys) {
  using u128 = unsigned __int128;
  const std::size_t n = xs.size();
  auto mul = [q](std::uint64_t a, std::uint64_t b) { return static_cast<std::uint64_t>(static_cast<u128>(a) * b % q); };
  auto inv = [&](std::uint64_t a) {
    std::uint64_t r = 1, e = q - 2;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  };
  std::vector<std::vector<std::uint64_t>> m(n, std::vector<std::uint64_t>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    std::uint64_t p = 1;
    for (std::size_t j = 0; j < n; ++j) {
      m[i][j] = p;
      p = mul(p, xs[i] % q);
    }
    m[i][n] = ys[i] % q;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (m[piv][col] == 0) ++piv;
    std::swap(m[piv], m[col]);
    const std::uint64_t s = inv(m[col][col]);
    for (auto& v : m[col]) v = mul(v, s);
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || m[row][col] == 0) continue;
      const std::uint64_t f = m[row][col];
      for (std::size_t j = 0; j <= n; ++j) m[row][j] = (m[row][j] + q - mul(f, m[col][j])) % q;
    }
  }
  std::vector<std::uint64_t> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = m[i][n];
  return out;
}

}  // namespace ffv::oracle

#endif  // FFV_ORACLES_HPP_
