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

#include "ffv/field_poly.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <string>

#include "ffv/error.hpp"

namespace ffv {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return result;
}

std::uint16_t reflect16(std::uint16_t v) {
  std::uint16_t r = 0;
  for (int i = 0; i < 16; ++i) {
    if (v & (1u << i)) r |= static_cast<std::uint16_t>(1u << (15 - i));
  }
  return r;
}

std::array<std::uint16_t, 256> make_table(const CrcVariant& v) {
  std::array<std::uint16_t, 256> table{};
  if (v.reflect_in) {
    const std::uint16_t rpoly = reflect16(v.poly);
    for (unsigned i = 0; i < 256; ++i) {
      std::uint16_t c = static_cast<std::uint16_t>(i);
      for (int b = 0; b < 8; ++b) c = (c & 1) ? static_cast<std::uint16_t>((c >> 1) ^ rpoly) : c >> 1;
      table[i] = c;
    }
  } else {
    for (unsigned i = 0; i < 256; ++i) {
      std::uint16_t c = static_cast<std::uint16_t>(i << 8);
      for (int b = 0; b < 8; ++b) {
        c = (c & 0x8000) ? static_cast<std::uint16_t>((c << 1) ^ v.poly) : static_cast<std::uint16_t>(c << 1);
      }
      table[i] = c;
    }
  }
  return table;
}

bool same_variant(const CrcVariant& a, const CrcVariant& b) {
  return a.poly == b.poly && a.init == b.init && a.reflect_in == b.reflect_in && a.reflect_out == b.reflect_out &&
         a.xor_out == b.xor_out;
}

bool bit_at(std::span<const std::uint8_t> bytes, std::size_t pos) {
  const std::size_t byte = pos / 8;
  if (byte >= bytes.size()) return false;
  return (bytes[byte] >> (7 - pos % 8)) & 1;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These bases are deterministic for all 64-bit n.
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint64_t q) : q_(q), chunk_bits_(0) {
  if (q >= (std::uint64_t{1} << 63)) throw ValidationError("field size q must be below 2^63");
  if (!is_prime(q)) throw ValidationError("field size q = " + std::to_string(q) + " is not prime");
  chunk_bits_ = static_cast<unsigned>(std::bit_width(q) - 1);
}

FieldElement PrimeField::pow(FieldElement base, std::uint64_t exp) const { return powmod(base, exp, q_); }

FieldElement PrimeField::inv(FieldElement a) const {
  if (a % q_ == 0) throw ValidationError("field inverse of zero");
  return powmod(a, q_ - 2, q_);
}

FieldElement poly_eval(const Polynomial& p, FieldElement x, const PrimeField& field) {
  FieldElement acc = 0;
  for (auto it = p.coefficients.rbegin(); it != p.coefficients.rend(); ++it) {
    acc = field.add(field.mul(acc, x), *it);
  }
  return acc;
}

Polynomial lagrange_interpolate(std::span<const FieldPoint> points, const PrimeField& field) {
  const std::size_t n = points.size();
  if (n == 0) throw ValidationError("lagrange_interpolate: at least one point is required");
  std::vector<FieldElement> xs;
  xs.reserve(n);
  for (const auto& pt : points) {
    if (pt.x >= field.q() || pt.y >= field.q()) {
      throw ValidationError("lagrange_interpolate: point coordinates must lie in [0, q)");
    }
    xs.push_back(pt.x);
  }
  std::sort(xs.begin(), xs.end());
  if (std::adjacent_find(xs.begin(), xs.end()) != xs.end()) {
    throw ValidationError("lagrange_interpolate: duplicate x coordinate");
  }

  // master(x) = prod (x - x_i), degree n, ascending coefficients.
  std::vector<FieldElement> master(n + 1, 0);
  master[0] = 1;
  for (std::size_t i = 0; i < n; ++i) {
    const FieldElement neg_x = field.neg(points[i].x);
    for (std::size_t d = i + 1; d > 0; --d) master[d] = field.add(master[d - 1], field.mul(master[d], neg_x));
    master[0] = field.mul(master[0], neg_x);
  }

  std::vector<FieldElement> result(n, 0);
  std::vector<FieldElement> quotient(n);
  for (std::size_t j = 0; j < n; ++j) {
    // quotient = master / (x - x_j) by synthetic division from the top.
    const FieldElement xj = points[j].x;
    FieldElement carry = master[n];
    for (std::size_t d = n; d-- > 0;) {
      quotient[d] = carry;
      carry = field.add(master[d], field.mul(carry, xj));
    }
    FieldElement denom = 0;
    for (std::size_t d = n; d-- > 0;) denom = field.add(field.mul(denom, xj), quotient[d]);
    const FieldElement scale = field.mul(points[j].y, field.inv(denom));
    if (scale == 0) continue;
    for (std::size_t d = 0; d < n; ++d) result[d] = field.add(result[d], field.mul(scale, quotient[d]));
  }
  return Polynomial{std::move(result)};
}

std::uint16_t crc16(std::span<const std::uint8_t> data, const CrcVariant& variant) {
  static const std::array<std::uint16_t, 256> kArcTable = make_table(kCrc16Arc);
  const std::array<std::uint16_t, 256> local =
      same_variant(variant, kCrc16Arc) ? std::array<std::uint16_t, 256>{} : make_table(variant);
  const auto& table = same_variant(variant, kCrc16Arc) ? kArcTable : local;

  std::uint16_t reg;
  if (variant.reflect_in) {
    reg = reflect16(variant.init);
    for (std::uint8_t byte : data) reg = static_cast<std::uint16_t>((reg >> 8) ^ table[(reg ^ byte) & 0xFF]);
    if (!variant.reflect_out) reg = reflect16(reg);
  } else {
    reg = variant.init;
    for (std::uint8_t byte : data) {
      reg = static_cast<std::uint16_t>((reg << 8) ^ table[((reg >> 8) ^ byte) & 0xFF]);
    }
    if (variant.reflect_out) reg = reflect16(reg);
  }
  return static_cast<std::uint16_t>(reg ^ variant.xor_out);
}

std::uint16_t crc16(std::string_view text, const CrcVariant& variant) {
  return crc16(std::span(reinterpret_cast<const std::uint8_t*>(text.data()), text.size()), variant);
}

std::size_t key_capacity_bytes(const PrimeField& field, std::size_t k) {
  const std::size_t bits = k * field.chunk_bits();
  return bits < 16 ? 0 : (bits - 16) / 8;
}

Polynomial encode_key(std::span<const std::uint8_t> key, const PrimeField& field, std::size_t k) {
  if (key.empty()) throw ValidationError("encode_key: key must not be empty");
  if (k == 0) throw ValidationError("encode_key: coefficient count k must be positive");
  const unsigned b = field.chunk_bits();
  const std::size_t needed = 8 * key.size() + 16;
  if (k * b < needed) {
    throw ValidationError("encode_key: capacity exceeded: " + std::to_string(k) + " coefficients x " +
                          std::to_string(b) + " bits < " + std::to_string(needed) + " bits (key + CRC-16)");
  }
  Bytes buf(key.begin(), key.end());
  const std::uint16_t crc = crc16(key);
  buf.push_back(static_cast<std::uint8_t>(crc >> 8));
  buf.push_back(static_cast<std::uint8_t>(crc & 0xFF));

  Polynomial p{std::vector<FieldElement>(k, 0)};
  for (std::size_t chunk = 0; chunk < k; ++chunk) {
    FieldElement value = 0;
    for (unsigned bit = 0; bit < b; ++bit) value = (value << 1) | (bit_at(buf, chunk * b + bit) ? 1u : 0u);
    p.coefficients[k - 1 - chunk] = value;
  }
  return p;
}

std::optional<KeyMaterial> decode_key(const Polynomial& p, const PrimeField& field, std::size_t key_len) {
  const std::size_t k = p.size();
  const unsigned b = field.chunk_bits();
  const std::size_t payload_bits = 8 * key_len + 16;
  if (key_len == 0 || k * b < payload_bits) return std::nullopt;

  Bytes buf((k * b + 7) / 8, 0);
  for (std::size_t chunk = 0; chunk < k; ++chunk) {
    const FieldElement value = p.coefficients[k - 1 - chunk];
    if (value >> b) return std::nullopt;
    for (unsigned bit = 0; bit < b; ++bit) {
      if ((value >> (b - 1 - bit)) & 1) {
        const std::size_t pos = chunk * b + bit;
        buf[pos / 8] |= static_cast<std::uint8_t>(0x80 >> (pos % 8));
      }
    }
  }
  for (std::size_t pos = payload_bits; pos < k * b; ++pos) {
    if (bit_at(buf, pos)) return std::nullopt;
  }
  KeyMaterial out;
  out.key.assign(buf.begin(), buf.begin() + static_cast<std::ptrdiff_t>(key_len));
  const std::uint16_t stored = static_cast<std::uint16_t>((buf[key_len] << 8) | buf[key_len + 1]);
  // Exact comparison: any tolerance here would accept wrong keys.
  if (crc16(out.key) != stored) return std::nullopt;
  out.crc = stored;
  return out;
}

}  // namespace ffv
