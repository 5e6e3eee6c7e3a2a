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

#ifndef FFV_FUZZY_NUMBER_HPP_
#define FFV_FUZZY_NUMBER_HPP_

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string_view>

namespace ffv {

enum class Family { kTriangular, kTrapezoidal, kGaussian, kSigmoid, kCrisp };

inline constexpr std::array<Family, 5> kAllFamilies = {
    Family::kTriangular, Family::kTrapezoidal, Family::kGaussian, Family::kSigmoid, Family::kCrisp};

std::string_view family_name(Family family);
std::optional<Family> parse_family(std::string_view name);
std::size_t param_count(Family family);

// Closed interval [lo, hi] of points whose membership is at least `alpha`.
struct AlphaCut {
  double alpha = 0.0;
  double lo = 0.0;
  double hi = 0.0;

  bool contains(double x) const { return lo <= x && x <= hi; }
  double width() const { return hi - lo; }
};

// A parametric fuzzy number. Parameter layout per family:
//   Triangular  (left, core, right)            absolute endpoints
//   Trapezoidal (x0, y0, sigma_left, beta_right)
//   Gaussian    (mean, sigma_left, sigma_right) support clipped at 3 sigma
//   Sigmoid     (a1, a2, a3, omega, halfwidth)  halfwidth is the psi domain bound
//   Crisp       (value)
// Instances are validated on construction and immutable afterwards.
class FuzzyNumber {
 public:
  static constexpr std::size_t kMaxParams = 5;

  static FuzzyNumber triangular(double left, double core, double right);
  // Spread form (left_spread, core, right_spread), converted to endpoints.
  static FuzzyNumber triangular_from_spreads(double left_spread, double core, double right_spread);
  static FuzzyNumber trapezoidal(double x0, double y0, double sigma_left, double beta_right);
  static FuzzyNumber gaussian(double mean, double sigma_left, double sigma_right);
  static FuzzyNumber sigmoid(double a1, double a2, double a3, double omega, double halfwidth);
  static FuzzyNumber crisp(double value);

  // Throws ValidationError if the parameter count or the family invariants are violated.
  static FuzzyNumber from_params(Family family, std::span<const double> params);

  Family family() const { return family_; }
  std::span<const double> params() const { return {params_.data(), param_count(family_)}; }
  double param(std::size_t i) const { return params_[i]; }

  // Supremum of the membership function: omega for Sigmoid, 1 otherwise.
  double height() const;

  bool operator==(const FuzzyNumber&) const = default;

 private:
  FuzzyNumber(Family family, std::array<double, kMaxParams> params) : family_(family), params_(params) {}
  void validate() const;

  Family family_;
  std::array<double, kMaxParams> params_;
};

double membership(const FuzzyNumber& f, double x);

// Throws ValidationError when alpha is outside [0, 1] or above the height of f.
// alpha = 0 yields the closed support.
AlphaCut alpha_cut(const FuzzyNumber& f, double alpha);
inline AlphaCut support(const FuzzyNumber& f) { return alpha_cut(f, 0.0); }

// Arithmetic is defined for Triangular operands and Crisp scalars only.
FuzzyNumber add(const FuzzyNumber& a, const FuzzyNumber& b);
FuzzyNumber sub(const FuzzyNumber& a, const FuzzyNumber& b);
FuzzyNumber scalar_mul(double x, const FuzzyNumber& a);

inline FuzzyNumber operator+(const FuzzyNumber& a, const FuzzyNumber& b) { return add(a, b); }
inline FuzzyNumber operator-(const FuzzyNumber& a, const FuzzyNumber& b) { return sub(a, b); }
inline FuzzyNumber operator*(double x, const FuzzyNumber& a) { return scalar_mul(x, a); }

// Chebyshev distance over the parameter vector; +infinity across families.
double distance(const FuzzyNumber& a, const FuzzyNumber& b);

// Representative crisp value (core, plateau midpoint, mean, a2 or value).
double defuzzify(const FuzzyNumber& f);

// n-th power of a positive triangular fuzzy number. The result is not
// triangular, so it is kept as a queryable membership function built from
// the power of the base alpha-cuts.
class FuzzyPower {
 public:
  FuzzyPower(const FuzzyNumber& base, int exponent);

  const FuzzyNumber& base() const { return base_; }
  int exponent() const { return exponent_; }

  double membership(double x) const;
  AlphaCut alpha_cut(double alpha) const;
  AlphaCut support() const { return alpha_cut(0.0); }

  // Lossy: the triangle through (left^n, core^n, right^n).
  FuzzyNumber linear_approximation() const;

 private:
  FuzzyNumber base_;
  int exponent_;
};

FuzzyPower pow_n(const FuzzyNumber& a, int n);

}  // namespace ffv

#endif  // FFV_FUZZY_NUMBER_HPP_
