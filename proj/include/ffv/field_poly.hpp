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

#ifndef FFV_FIELD_POLY_HPP_
#define FFV_FIELD_POLY_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace ffv {

using FieldElement = std::uint64_t;
using Bytes = std::vector<std::uint8_t>;

bool is_prime(std::uint64_t n);

// Prime field F_q with q < 2^63. Primality is checked on construction.
class PrimeField {
 public:
  explicit PrimeField(std::uint64_t q);

  std::uint64_t q() const { return q_; }
  // Bits carried by one coefficient chunk: floor(log2 q).
  unsigned chunk_bits() const { return chunk_bits_; }

  FieldElement reduce(std::uint64_t v) const { return v % q_; }
  FieldElement add(FieldElement a, FieldElement b) const {
    const FieldElement s = a + b;
    return s >= q_ ? s - q_ : s;
  }
  FieldElement sub(FieldElement a, FieldElement b) const { return a >= b ? a - b : a + q_ - b; }
  FieldElement neg(FieldElement a) const { return a == 0 ? 0 : q_ - a; }
  FieldElement mul(FieldElement a, FieldElement b) const {
    return static_cast<FieldElement>((static_cast<unsigned __int128>(a) * b) % q_);
  }
  FieldElement pow(FieldElement base, std::uint64_t exp) const;
  // Throws ValidationError for a = 0.
  FieldElement inv(FieldElement a) const;

  bool operator==(const PrimeField&) const = default;

 private:
  std::uint64_t q_;
  unsigned chunk_bits_;
};

// Coefficients beta_0..beta_n in ascending order of degree.
struct Polynomial {
  std::vector<FieldElement> coefficients;

  std::size_t size() const { return coefficients.size(); }
  bool operator==(const Polynomial&) const = default;
};

FieldElement poly_eval(const Polynomial& p, FieldElement x, const PrimeField& field);

struct FieldPoint {
  FieldElement x;
  FieldElement y;
};

// Unique polynomial of degree < points.size() through all points.
// Throws ValidationError on duplicate x or an empty point list.
Polynomial lagrange_interpolate(std::span<const FieldPoint> points, const PrimeField& field);

// Parameterised CRC-16 (Rocksoft model).
struct CrcVariant {
  std::string_view name;
  std::uint16_t poly;
  std::uint16_t init;
  bool reflect_in;
  bool reflect_out;
  std::uint16_t xor_out;
};

inline constexpr CrcVariant kCrc16Arc{"CRC-16/ARC", 0x8005, 0x0000, true, true, 0x0000};
inline constexpr CrcVariant kCrc16CcittFalse{"CRC-16/CCITT-FALSE", 0x1021, 0xFFFF, false, false, 0x0000};

std::uint16_t crc16(std::span<const std::uint8_t> data, const CrcVariant& variant = kCrc16Arc);
std::uint16_t crc16(std::string_view text, const CrcVariant& variant = kCrc16Arc);

struct KeyMaterial {
  Bytes key;
  std::uint16_t crc = 0;
};

// Appends crc16(key) big-endian, reads the result as a big-endian bit string
// and cuts it into k chunks of chunk_bits() bits (zero padded at the tail).
// Chunk 0 becomes beta_{k-1}, chunk k-1 becomes beta_0.
// Throws ValidationError on an empty key or insufficient capacity.
Polynomial encode_key(std::span<const std::uint8_t> key, const PrimeField& field, std::size_t k);

// Inverse of encode_key. Returns nullopt when the polynomial cannot carry
// key_len bytes, a coefficient exceeds the chunk width, padding is nonzero,
// or the recomputed CRC differs from the stored one.
std::optional<KeyMaterial> decode_key(const Polynomial& p, const PrimeField& field, std::size_t key_len);

std::size_t key_capacity_bytes(const PrimeField& field, std::size_t k);

}  // namespace ffv

#endif  // FFV_FIELD_POLY_HPP_
