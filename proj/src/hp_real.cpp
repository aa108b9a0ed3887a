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

#include "hfsenum/hp_real.hpp"

#include <algorithm>
#include <cmath>
#include <memory>

namespace hfs {
namespace {

constexpr mpfr_prec_t kRadiusBits = 64;

// RAII scratch value.
class Scratch {
 public:
  explicit Scratch(mpfr_prec_t bits) { mpfr_init2(v_, bits); }
  ~Scratch() { mpfr_clear(v_); }
  Scratch(const Scratch&) = delete;
  Scratch& operator=(const Scratch&) = delete;
  mpfr_ptr get() { return v_; }
  operator mpfr_ptr() { return v_; }

 private:
  mpfr_t v_;
};

}  // namespace

mpfr_prec_t bits_for_digits(std::size_t digits) {
  // log2(10) < 3.3220
  return static_cast<mpfr_prec_t>(std::ceil(static_cast<double>(digits) * 3.3220)) + 8;
}

HPReal::HPReal(mpfr_prec_t precision) {
  mpfr_init2(mid_, precision);
  mpfr_init2(rad_, kRadiusBits);
  mpfr_set_zero(mid_, 1);
  mpfr_set_zero(rad_, 1);
}

HPReal::HPReal(const HPReal& other) : HPReal(other.precision()) {
  mpfr_set(mid_, other.mid_, MPFR_RNDN);
  mpfr_set(rad_, other.rad_, MPFR_RNDU);
}

HPReal::HPReal(HPReal&& other) noexcept : HPReal(other) {}

HPReal& HPReal::operator=(const HPReal& other) {
  if (this != &other) {
    mpfr_set_prec(mid_, other.precision());
    mpfr_set(mid_, other.mid_, MPFR_RNDN);
    mpfr_set(rad_, other.rad_, MPFR_RNDU);
  }
  return *this;
}

HPReal& HPReal::operator=(HPReal&& other) noexcept {
  if (this != &other) {
    mpfr_swap(mid_, other.mid_);
    mpfr_swap(rad_, other.rad_);
  }
  return *this;
}

HPReal::~HPReal() {
  mpfr_clear(mid_);
  mpfr_clear(rad_);
}

void HPReal::account_rounding(int ternary) {
  if (ternary == 0) return;
  Scratch ulp(kRadiusBits);
  if (mpfr_zero_p(mid_)) {
    mpfr_set_ui_2exp(ulp, 1, mpfr_get_emin(), MPFR_RNDU);
  } else {
    mpfr_set_ui_2exp(ulp, 1, mpfr_get_exp(mid_) - precision(), MPFR_RNDU);
  }
  mpfr_add(rad_, rad_, ulp, MPFR_RNDU);
}

void HPReal::widen(mpfr_srcptr amount) {
  if (mpfr_sgn(amount) < 0) throw std::invalid_argument("negative widening");
  mpfr_add(rad_, rad_, amount, MPFR_RNDU);
}

HPReal HPReal::exact(long value, mpfr_prec_t precision) {
  HPReal out(precision);
  out.account_rounding(mpfr_set_si(out.mid_, value, MPFR_RNDN));
  return out;
}

HPReal HPReal::from_integer(const BigCount& value, mpfr_prec_t precision) {
  HPReal out(precision);
  out.account_rounding(mpfr_set_z(out.mid_, value.get_mpz_t(), MPFR_RNDN));
  return out;
}

HPReal HPReal::log2_constant(mpfr_prec_t precision) {
  HPReal out(precision);
  out.account_rounding(mpfr_const_log2(out.mid_, MPFR_RNDN));
  return out;
}

HPReal HPReal::upper_bound_of(mpfr_srcptr value, mpfr_prec_t precision) {
  HPReal out(std::max(precision, mpfr_get_prec(value)));
  mpfr_set(out.mid_, value, MPFR_RNDU);
  return out;
}

std::string HPReal::mid_string(std::size_t digits) const {
  std::unique_ptr<char, void (*)(char*)> text(nullptr, [](char* p) { mpfr_free_str(p); });
  if (mpfr_zero_p(mid_)) return "0";
  mpfr_exp_t exponent = 0;
  text.reset(mpfr_get_str(nullptr, &exponent, 10, std::max<std::size_t>(digits, 2), mid_,
                          MPFR_RNDN));
  std::string mantissa(text.get());
  std::string sign;
  if (!mantissa.empty() && mantissa.front() == '-') {
    sign = "-";
    mantissa.erase(0, 1);
  }
  // Value is 0.mantissa * 10^exponent.
  if (exponent >= 1 && exponent <= static_cast<mpfr_exp_t>(mantissa.size())) {
    std::string out = sign + mantissa.substr(0, static_cast<std::size_t>(exponent));
    if (static_cast<std::size_t>(exponent) < mantissa.size()) {
      out += "." + mantissa.substr(static_cast<std::size_t>(exponent));
    }
    return out;
  }
  return sign + mantissa.substr(0, 1) + "." + mantissa.substr(1) + "e" +
         std::to_string(exponent - 1);
}

std::string HPReal::radius_string() const {
  if (mpfr_zero_p(rad_)) return "0";
  // Round the printed bound upward so the text never understates it.
  char buffer[64];
  mpfr_snprintf(buffer, sizeof buffer, "%.6RUe", rad_);
  return buffer;
}

std::string HPReal::upper_string() const {
  Scratch upper(precision() + kRadiusBits);
  mpfr_add(upper, mid_, rad_, MPFR_RNDU);
  char buffer[64];
  mpfr_snprintf(buffer, sizeof buffer, "%.6RUe", upper.get());
  return buffer;
}

bool HPReal::radius_below_pow10(long exponent10) const {
  Scratch bound(kRadiusBits);
  mpfr_set_si(bound, 10, MPFR_RNDD);
  mpfr_pow_si(bound, bound, exponent10, MPFR_RNDD);
  return mpfr_less_p(rad_, bound);
}

bool HPReal::certainly_nonnegative() const {
  Scratch low(precision() + kRadiusBits);
  mpfr_sub(low, mid_, rad_, MPFR_RNDD);
  return mpfr_sgn(low.get()) >= 0;
}

bool HPReal::possibly_at_most(const HPReal& bound) const {
  const mpfr_prec_t bits = std::max(precision(), bound.precision()) + kRadiusBits;
  Scratch low(bits);
  Scratch high(bits);
  mpfr_sub(low, mid_, rad_, MPFR_RNDD);
  mpfr_add(high, bound.mid_, bound.rad_, MPFR_RNDU);
  return mpfr_lessequal_p(low, high);
}

bool HPReal::certainly_within(const std::string& value, const std::string& tolerance) const {
  const mpfr_prec_t bits = precision() + kRadiusBits;
  Scratch v(bits);
  Scratch tol(kRadiusBits);
  Scratch diff(bits);
  char* end = nullptr;
  const int ternary = mpfr_strtofr(v, value.c_str(), &end, 10, MPFR_RNDN);
  if (value.empty() || *end != '\0' ||
      mpfr_set_str(tol, tolerance.c_str(), 10, MPFR_RNDD) != 0) {
    throw std::invalid_argument("bad decimal in certainly_within");
  }
  if (mpfr_cmp(mid_, v) >= 0) {
    mpfr_sub(diff, mid_, v, MPFR_RNDU);
  } else {
    mpfr_sub(diff, v, mid_, MPFR_RNDU);
  }
  mpfr_add(diff, diff, rad_, MPFR_RNDU);
  if (ternary != 0) {
    // The parsed decimal is off by at most one ulp.
    Scratch slack(kRadiusBits);
    mpfr_set_ui_2exp(slack, 1, mpfr_get_exp(v.get()) - bits, MPFR_RNDU);
    mpfr_add(diff, diff, slack, MPFR_RNDU);
  }
  return mpfr_lessequal_p(diff, tol);
}

HPReal HPReal::scaled_pow2(long exponent) const {
  HPReal out(*this);
  mpfr_mul_2si(out.mid_, mid_, exponent, MPFR_RNDN);
  mpfr_mul_2si(out.rad_, rad_, exponent, MPFR_RNDU);
  return out;
}

HPReal HPReal::abs() const {
  HPReal out(*this);
  mpfr_abs(out.mid_, mid_, MPFR_RNDN);
  return out;
}

HPReal operator+(const HPReal& a, const HPReal& b) {
  HPReal out(std::max(a.precision(), b.precision()));
  const int ternary = mpfr_add(out.mid_, a.mid_, b.mid_, MPFR_RNDN);
  mpfr_add(out.rad_, a.rad_, b.rad_, MPFR_RNDU);
  out.account_rounding(ternary);
  return out;
}

HPReal operator-(const HPReal& a, const HPReal& b) {
  HPReal out(std::max(a.precision(), b.precision()));
  const int ternary = mpfr_sub(out.mid_, a.mid_, b.mid_, MPFR_RNDN);
  mpfr_add(out.rad_, a.rad_, b.rad_, MPFR_RNDU);
  out.account_rounding(ternary);
  return out;
}

HPReal operator*(const HPReal& a, const HPReal& b) {
  HPReal out(std::max(a.precision(), b.precision()));
  const int ternary = mpfr_mul(out.mid_, a.mid_, b.mid_, MPFR_RNDN);
  // |a| rb + |b| ra + ra rb
  Scratch abs_a(a.precision());
  Scratch abs_b(b.precision());
  Scratch term(kRadiusBits);
  mpfr_abs(abs_a, a.mid_, MPFR_RNDU);
  mpfr_abs(abs_b, b.mid_, MPFR_RNDU);
  mpfr_mul(out.rad_, abs_a, b.rad_, MPFR_RNDU);
  mpfr_mul(term, abs_b, a.rad_, MPFR_RNDU);
  mpfr_add(out.rad_, out.rad_, term, MPFR_RNDU);
  mpfr_mul(term, a.rad_, b.rad_, MPFR_RNDU);
  mpfr_add(out.rad_, out.rad_, term, MPFR_RNDU);
  out.account_rounding(ternary);
  return out;
}

HPReal operator/(const HPReal& a, const HPReal& b) {
  Scratch abs_b_low(b.precision());
  mpfr_abs(abs_b_low, b.mid_, MPFR_RNDD);
  Scratch margin(b.precision() + kRadiusBits);
  mpfr_sub(margin, abs_b_low, b.rad_, MPFR_RNDD);
  if (mpfr_sgn(margin.get()) <= 0) throw PrecisionError("division by an interval containing zero");

  HPReal out(std::max(a.precision(), b.precision()));
  const int ternary = mpfr_div(out.mid_, a.mid_, b.mid_, MPFR_RNDN);
  // (ra |b| + |a| rb) / (|b| (|b| - rb))
  Scratch numerator(kRadiusBits);
  Scratch term(kRadiusBits);
  Scratch denominator(kRadiusBits);
  Scratch abs_a(a.precision());
  Scratch abs_b(b.precision());
  mpfr_abs(abs_a, a.mid_, MPFR_RNDU);
  mpfr_abs(abs_b, b.mid_, MPFR_RNDU);
  mpfr_mul(numerator, a.rad_, abs_b, MPFR_RNDU);
  mpfr_mul(term, abs_a, b.rad_, MPFR_RNDU);
  mpfr_add(numerator, numerator, term, MPFR_RNDU);
  mpfr_mul(denominator, abs_b_low, margin, MPFR_RNDD);
  mpfr_div(out.rad_, numerator, denominator, MPFR_RNDU);
  out.account_rounding(ternary);
  return out;
}

HPReal exp(const HPReal& a) {
  HPReal out(a.precision());
  const int ternary = mpfr_exp(out.mid_, a.mid_, MPFR_RNDN);
  // |exp(x) - exp(mid)| <= exp(mid) * expm1(ra)
  Scratch upper(kRadiusBits);
  Scratch growth(kRadiusBits);
  mpfr_exp(upper, a.mid_, MPFR_RNDU);
  mpfr_expm1(growth, a.rad_, MPFR_RNDU);
  mpfr_mul(out.rad_, upper, growth, MPFR_RNDU);
  out.account_rounding(ternary);
  return out;
}

HPReal log(const HPReal& a) {
  Scratch low(a.precision() + kRadiusBits);
  mpfr_sub(low, a.mid_, a.rad_, MPFR_RNDD);
  if (mpfr_sgn(low.get()) <= 0) throw PrecisionError("log of an interval reaching zero");
  HPReal out(a.precision());
  const int ternary = mpfr_log(out.mid_, a.mid_, MPFR_RNDN);
  // |ln y - ln mid| <= ra / (mid - ra) for |y - mid| <= ra
  mpfr_div(out.rad_, a.rad_, low, MPFR_RNDU);
  out.account_rounding(ternary);
  return out;
}

}  // namespace hfs
