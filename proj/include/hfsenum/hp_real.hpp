// Copyright 2026 The hfsenum Authors
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

#ifndef HFSENUM_HP_REAL_HPP_
#define HFSENUM_HP_REAL_HPP_

#include <mpfr.h>

#include <cstddef>
#include <stdexcept>
#include <string>

#include "hfsenum/big_count.hpp"

namespace hfs {

class PrecisionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Working precision in bits for a target number of decimal digits.
mpfr_prec_t bits_for_digits(std::size_t digits);

// A real number known up to an explicit radius: the true value lies in
// [mid - radius, mid + radius]. Every operation rounds the midpoint to
// nearest and grows the radius by the propagated input radii plus one ulp of
// the result whenever MPFR reports an inexact result; radii are always
// rounded upward.
class HPReal {
 public:
  explicit HPReal(mpfr_prec_t precision);
  HPReal(const HPReal& other);
  HPReal(HPReal&& other) noexcept;
  HPReal& operator=(const HPReal& other);
  HPReal& operator=(HPReal&& other) noexcept;
  ~HPReal();

  static HPReal exact(long value, mpfr_prec_t precision);
  // Integer rounded to the working precision (radius covers the rounding).
  static HPReal from_integer(const BigCount& value, mpfr_prec_t precision);
  static HPReal log2_constant(mpfr_prec_t precision);
  // An upper bound stored as an exact midpoint with zero radius.
  static HPReal upper_bound_of(mpfr_srcptr value, mpfr_prec_t precision);

  mpfr_prec_t precision() const noexcept { return mpfr_get_prec(mid_); }
  mpfr_srcptr mid() const noexcept { return mid_; }
  mpfr_srcptr radius() const noexcept { return rad_; }

  // Midpoint in scientific notation with `digits` significant digits.
  std::string mid_string(std::size_t digits) const;
  // mid + radius, printed with 7 significant digits and rounded upward.
  std::string upper_string() const;
  std::string radius_string() const;
  double mid_double() const { return mpfr_get_d(mid_, MPFR_RNDN); }

  // True when radius < 10^exponent10.
  bool radius_below_pow10(long exponent10) const;
  // The whole interval lies at or above zero.
  bool certainly_nonnegative() const;
  // Some point of this interval is at or below some point of `bound`.
  bool possibly_at_most(const HPReal& bound) const;
  // |mid - value| + radius <= tolerance, i.e. value is certified within tolerance.
  bool certainly_within(const std::string& value, const std::string& tolerance) const;

  HPReal scaled_pow2(long exponent) const;
  HPReal abs() const;

  friend HPReal operator+(const HPReal& a, const HPReal& b);
  friend HPReal operator-(const HPReal& a, const HPReal& b);
  friend HPReal operator*(const HPReal& a, const HPReal& b);
  friend HPReal operator/(const HPReal& a, const HPReal& b);
  friend HPReal exp(const HPReal& a);
  // Natural log; PrecisionError unless the interval is strictly positive.
  friend HPReal log(const HPReal& a);

  // Adds a non-negative amount to the radius (rounded upward).
  void widen(mpfr_srcptr amount);

 private:
  void account_rounding(int ternary);

  mpfr_t mid_;
  mpfr_t rad_;
};

}  // namespace hfs

#endif  // HFSENUM_HP_REAL_HPP_
