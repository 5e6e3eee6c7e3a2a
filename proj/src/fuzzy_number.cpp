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

#include "ffv/fuzzy_number.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <string>

#include "ffv/error.hpp"

namespace ffv {

namespace {

constexpr std::array<std::string_view, 5> kFamilyNames = {"triangular", "trapezoidal", "gaussian",
                                                          "sigmoid", "crisp"};

double psi(double z) { return 1.0 / (1.0 + std::exp(-z)); }

double logit(double p) { return std::log(p / (1.0 - p)); }

[[noreturn]] void invalid(const std::string& msg) { throw ValidationError(msg); }

struct Triple {
  double left;
  double core;
  double right;
};

// Crisp values embed as degenerate triangles.
Triple as_triple(const FuzzyNumber& f, const char* op) {
  switch (f.family()) {
    case Family::kTriangular:
      return {f.param(0), f.param(1), f.param(2)};
    case Family::kCrisp:
      return {f.param(0), f.param(0), f.param(0)};
    default:
      invalid(std::string(op) + ": arithmetic is defined only for triangular and crisp operands, got " +
              std::string(family_name(f.family())));
  }
}

}  // namespace

std::string_view family_name(Family family) { return kFamilyNames[static_cast<std::size_t>(family)]; }

std::optional<Family> parse_family(std::string_view name) {
  for (std::size_t i = 0; i < kFamilyNames.size(); ++i) {
    if (kFamilyNames[i] == name) return static_cast<Family>(i);
  }
  return std::nullopt;
}

std::size_t param_count(Family family) {
  switch (family) {
    case Family::kTriangular:
      return 3;
    case Family::kTrapezoidal:
      return 4;
    case Family::kGaussian:
      return 3;
    case Family::kSigmoid:
      return 5;
    case Family::kCrisp:
      return 1;
  }
  return 0;
}

FuzzyNumber FuzzyNumber::triangular(double left, double core, double right) {
  FuzzyNumber f(Family::kTriangular, {left, core, right, 0, 0});
  f.validate();
  return f;
}

FuzzyNumber FuzzyNumber::triangular_from_spreads(double left_spread, double core, double right_spread) {
  if (!(left_spread >= 0) || !(right_spread >= 0)) invalid("triangular: spreads must be non-negative");
  return triangular(core - left_spread, core, core + right_spread);
}

FuzzyNumber FuzzyNumber::trapezoidal(double x0, double y0, double sigma_left, double beta_right) {
  FuzzyNumber f(Family::kTrapezoidal, {x0, y0, sigma_left, beta_right, 0});
  f.validate();
  return f;
}

FuzzyNumber FuzzyNumber::gaussian(double mean, double sigma_left, double sigma_right) {
  FuzzyNumber f(Family::kGaussian, {mean, sigma_left, sigma_right, 0, 0});
  f.validate();
  return f;
}

FuzzyNumber FuzzyNumber::sigmoid(double a1, double a2, double a3, double omega, double halfwidth) {
  FuzzyNumber f(Family::kSigmoid, {a1, a2, a3, omega, halfwidth});
  f.validate();
  return f;
}

FuzzyNumber FuzzyNumber::crisp(double value) {
  FuzzyNumber f(Family::kCrisp, {value, 0, 0, 0, 0});
  f.validate();
  return f;
}

FuzzyNumber FuzzyNumber::from_params(Family family, std::span<const double> params) {
  if (params.size() != param_count(family)) {
    std::ostringstream msg;
    msg << family_name(family) << ": expected " << param_count(family) << " parameters, got "
        << params.size();
    invalid(msg.str());
  }
  std::array<double, kMaxParams> p{};
  std::copy(params.begin(), params.end(), p.begin());
  FuzzyNumber f(family, p);
  f.validate();
  return f;
}

void FuzzyNumber::validate() const {
  for (double v : params()) {
    if (!std::isfinite(v)) invalid(std::string(family_name(family_)) + ": parameters must be finite");
  }
  const auto& p = params_;
  switch (family_) {
    case Family::kTriangular:
      if (!(p[0] <= p[1] && p[1] <= p[2])) invalid("triangular: requires left <= core <= right");
      break;
    case Family::kTrapezoidal:
      if (!(p[0] <= p[1])) invalid("trapezoidal: requires x0 <= y0");
      if (!(p[2] > 0 && p[3] > 0)) invalid("trapezoidal: fuzziness sigma and beta must be positive");
      break;
    case Family::kGaussian:
      if (!(p[1] > 0 && p[2] > 0)) invalid("gaussian: sigma_left and sigma_right must be positive");
      break;
    case Family::kSigmoid:
      if (!(p[0] <= p[1] && p[1] <= p[2])) invalid("sigmoid: requires a1 <= a2 <= a3");
      if (!(p[3] > 0 && p[3] <= 1)) invalid("sigmoid: omega must lie in (0, 1]");
      if (!(p[4] > 0)) invalid("sigmoid: domain halfwidth must be positive");
      break;
    case Family::kCrisp:
      break;
  }
}

double FuzzyNumber::height() const { return family_ == Family::kSigmoid ? params_[3] : 1.0; }

double membership(const FuzzyNumber& f, double x) {
  switch (f.family()) {
    case Family::kTriangular: {
      const double l = f.param(0), c = f.param(1), r = f.param(2);
      if (x < l || x > r) return 0.0;
      if (x == c) return 1.0;
      if (x < c) return (x - l) / (c - l);
      return (r - x) / (r - c);
    }
    case Family::kTrapezoidal: {
      const double x0 = f.param(0), y0 = f.param(1), sigma = f.param(2), beta = f.param(3);
      if (x < x0 - sigma || x > y0 + beta) return 0.0;
      if (x < x0) return (x - x0 + sigma) / sigma;
      if (x <= y0) return 1.0;
      return (y0 - x + beta) / beta;
    }
    case Family::kGaussian: {
      const double m = f.param(0), sl = f.param(1), sr = f.param(2);
      if (x <= m - 3 * sl || x >= m + 3 * sr) return 0.0;
      const double s = x < m ? sl : sr;
      return std::exp(-(x - m) * (x - m) / (2 * s * s));
    }
    case Family::kSigmoid: {
      const double a1 = f.param(0), a2 = f.param(1), a3 = f.param(2), omega = f.param(3), a = f.param(4);
      if (x < a1 || x > a3) return 0.0;
      if (x == a2) return omega;
      const double span = psi(a) - psi(-a);
      double grade;
      if (x < a2) {
        grade = (psi((x - (a1 + a2) / 2) * 2 * a / (a2 - a1)) - psi(-a)) / span;
      } else {
        grade = (psi(a) - psi((x - (a2 + a3) / 2) * 2 * a / (a3 - a2))) / span;
      }
      return omega * std::clamp(grade, 0.0, 1.0);
    }
    case Family::kCrisp:
      return x == f.param(0) ? 1.0 : 0.0;
  }
  return 0.0;
}

AlphaCut alpha_cut(const FuzzyNumber& f, double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) invalid("alpha_cut: alpha must lie in [0, 1]");
  if (alpha > f.height()) invalid("alpha_cut: alpha exceeds the sigmoid height omega (empty cut)");
  switch (f.family()) {
    case Family::kTriangular: {
      const double l = f.param(0), c = f.param(1), r = f.param(2);
      return {alpha, (c - l) * alpha + l, r - (r - c) * alpha};
    }
    case Family::kTrapezoidal: {
      const double x0 = f.param(0), y0 = f.param(1), sigma = f.param(2), beta = f.param(3);
      return {alpha, x0 - sigma + sigma * alpha, y0 + beta - beta * alpha};
    }
    case Family::kGaussian: {
      const double m = f.param(0), sl = f.param(1), sr = f.param(2);
      if (alpha == 0.0) return {alpha, m - 3 * sl, m + 3 * sr};
      const double z = std::min(std::sqrt(-2.0 * std::log(alpha)), 3.0);
      return {alpha, m - z * sl, m + z * sr};
    }
    case Family::kSigmoid: {
      const double a1 = f.param(0), a2 = f.param(1), a3 = f.param(2), omega = f.param(3), a = f.param(4);
      if (alpha == 0.0) return {alpha, a1, a3};
      if (alpha == omega) return {alpha, a2, a2};
      const double level = alpha / omega;
      const double lo_psi = psi(-a), hi_psi = psi(a), span = hi_psi - lo_psi;
      const double zl = logit(lo_psi + level * span);
      const double zr = logit(hi_psi - level * span);
      const double lo = a2 == a1 ? a2 : (a1 + a2) / 2 + zl * (a2 - a1) / (2 * a);
      const double hi = a3 == a2 ? a2 : (a2 + a3) / 2 + zr * (a3 - a2) / (2 * a);
      return {alpha, std::clamp(lo, a1, a2), std::clamp(hi, a2, a3)};
    }
    case Family::kCrisp:
      return {alpha, f.param(0), f.param(0)};
  }
  return {alpha, 0, 0};
}

FuzzyNumber add(const FuzzyNumber& a, const FuzzyNumber& b) {
  if (a.family() == Family::kCrisp && b.family() == Family::kCrisp) {
    return FuzzyNumber::crisp(a.param(0) + b.param(0));
  }
  const Triple x = as_triple(a, "add"), y = as_triple(b, "add");
  return FuzzyNumber::triangular(x.left + y.left, x.core + y.core, x.right + y.right);
}

FuzzyNumber sub(const FuzzyNumber& a, const FuzzyNumber& b) {
  if (a.family() == Family::kCrisp && b.family() == Family::kCrisp) {
    return FuzzyNumber::crisp(a.param(0) - b.param(0));
  }
  const Triple x = as_triple(a, "sub"), y = as_triple(b, "sub");
  return FuzzyNumber::triangular(x.left - y.right, x.core - y.core, x.right - y.left);
}

FuzzyNumber scalar_mul(double x, const FuzzyNumber& a) {
  if (x == 0.0) return FuzzyNumber::crisp(0.0);
  if (a.family() == Family::kCrisp) return FuzzyNumber::crisp(x * a.param(0));
  const Triple t = as_triple(a, "scalar_mul");
  if (x > 0) return FuzzyNumber::triangular(x * t.left, x * t.core, x * t.right);
  return FuzzyNumber::triangular(x * t.right, x * t.core, x * t.left);
}

double distance(const FuzzyNumber& a, const FuzzyNumber& b) {
  if (a.family() != b.family()) return std::numeric_limits<double>::infinity();
  double d = 0.0;
  const auto pa = a.params(), pb = b.params();
  for (std::size_t i = 0; i < pa.size(); ++i) d = std::max(d, std::abs(pa[i] - pb[i]));
  return d;
}

double defuzzify(const FuzzyNumber& f) {
  switch (f.family()) {
    case Family::kTriangular:
      return f.param(1);
    case Family::kTrapezoidal:
      return (f.param(0) + f.param(1)) / 2;
    case Family::kGaussian:
      return f.param(0);
    case Family::kSigmoid:
      return f.param(1);
    case Family::kCrisp:
      return f.param(0);
  }
  return 0.0;
}

FuzzyPower::FuzzyPower(const FuzzyNumber& base, int exponent) : base_(base), exponent_(exponent) {
  if (base.family() != Family::kTriangular) invalid("pow_n: base must be triangular");
  if (!(base.param(0) > 0)) invalid("pow_n: base must be positive (left endpoint > 0)");
  if (exponent < 1) invalid("pow_n: exponent must be a positive integer");
}

double FuzzyPower::membership(double x) const {
  const double l = base_.param(0), c = base_.param(1), r = base_.param(2);
  const double lo = std::pow(l, exponent_), mid = std::pow(c, exponent_), hi = std::pow(r, exponent_);
  if (x < lo || x > hi) return 0.0;
  if (x == mid) return 1.0;
  const double root = exponent_ == 2 ? std::sqrt(x) : std::pow(x, 1.0 / exponent_);
  const double grade = x < mid ? (root - l) / (c - l) : (r - root) / (r - c);
  return std::clamp(grade, 0.0, 1.0);
}

AlphaCut FuzzyPower::alpha_cut(double alpha) const {
  const AlphaCut base_cut = ffv::alpha_cut(base_, alpha);
  return {alpha, std::pow(base_cut.lo, exponent_), std::pow(base_cut.hi, exponent_)};
}

FuzzyNumber FuzzyPower::linear_approximation() const {
  return FuzzyNumber::triangular(std::pow(base_.param(0), exponent_), std::pow(base_.param(1), exponent_),
                                 std::pow(base_.param(2), exponent_));
}

FuzzyPower pow_n(const FuzzyNumber& a, int n) { return FuzzyPower(a, n); }

}  // namespace ffv
