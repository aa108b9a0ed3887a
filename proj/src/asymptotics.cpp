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

#include "hfsenum/asymptotics.hpp"

#include <cmath>
#include <stdexcept>

namespace hfs {
namespace {

constexpr unsigned long kRatioGuardDigits = 10;

std::size_t working_digits(std::size_t digits, std::size_t terms) {
  return digits + static_cast<std::size_t>(std::ceil(static_cast<double>(terms) * 0.30103));
}

HPReal log_with_bits(const BigCount& x, mpfr_prec_t bits) {
  const auto shift = static_cast<long>(mpz_sizeinbase(x.get_mpz_t(), 2)) - 1;
  const HPReal mantissa = HPReal::from_integer(x, bits).scaled_pow2(-shift);
  return HPReal::exact(shift, bits) * HPReal::log2_constant(bits) + log(mantissa);
}

}  // namespace

HPReal log_big(const BigCount& x, std::size_t digits) {
  if (x < 1) throw std::invalid_argument("log_big needs x >= 1");
  const mpfr_prec_t bits = bits_for_digits(digits + kRatioGuardDigits);
  HPReal out = log_with_bits(x, bits);
  if (!out.radius_below_pow10(-static_cast<long>(digits))) {
    throw PrecisionError("log_big radius exceeds 10^-" + std::to_string(digits));
  }
  return out;
}

std::vector<HPReal> residuals(const std::vector<BigCount>& c, std::size_t digits) {
  if (c.size() < 3) throw std::invalid_argument("residuals need c_0 .. c_2 at least");
  const std::size_t wd = working_digits(digits, c.size() - 1);
  const mpfr_prec_t bits = bits_for_digits(wd + kRatioGuardDigits);
  std::vector<HPReal> u;
  u.reserve(c.size());
  for (const BigCount& value : c) u.push_back(log_big(value, wd));
  std::vector<HPReal> r;
  r.reserve(c.size());
  r.push_back(HPReal(bits));
  r.push_back(HPReal(bits));
  for (std::size_t n = 2; n < c.size(); ++n) r.push_back(u[n] - u[n - 1].scaled_pow2(1));
  return r;
}

HPReal log1p_four_over_upper(const BigCount& x, mpfr_prec_t precision) {
  if (x < 1) throw std::invalid_argument("log1p_four_over_upper needs x >= 1");
  mpfr_t low, bound;
  mpfr_init2(low, precision);
  mpfr_init2(bound, precision);
  mpfr_set_z(low, x.get_mpz_t(), MPFR_RNDD);
  mpfr_ui_div(bound, 4, low, MPFR_RNDU);
  mpfr_log1p(bound, bound, MPFR_RNDU);
  HPReal out = HPReal::upper_bound_of(bound, precision);
  mpfr_clear(low);
  mpfr_clear(bound);
  return out;
}

ConstantEstimate constant_C(const std::vector<BigCount>& c, std::size_t digits) {
  if (c.size() < 4) throw std::invalid_argument("constant_C needs c_0 .. c_3 at least");
  const std::size_t terms = c.size() - 1;
  const mpfr_prec_t bits = bits_for_digits(working_digits(digits, terms) + kRatioGuardDigits);

  const std::vector<HPReal> r = residuals(c, digits);
  HPReal sum(bits);
  for (std::size_t k = 2; k <= terms; ++k) sum = sum + r[k].scaled_pow2(-static_cast<long>(k));

  HPReal truncation = log1p_four_over_upper(c[terms - 1], bits).scaled_pow2(-static_cast<long>(terms));

  HPReal value = exp(sum);
  // C lies in [exp(S), exp(S) exp(T)]: widen by exp(S)_upper * expm1(T).
  mpfr_t upper, growth;
  mpfr_init2(upper, 64);
  mpfr_init2(growth, 64);
  mpfr_add(upper, value.mid(), value.radius(), MPFR_RNDU);
  mpfr_expm1(growth, truncation.mid(), MPFR_RNDU);
  mpfr_mul(growth, growth, upper, MPFR_RNDU);
  value.widen(growth);
  mpfr_clear(upper);
  mpfr_clear(growth);

  return ConstantEstimate{std::move(value), std::move(sum), terms, std::move(truncation), digits};
}

bool SandwichReport::ok() const {
  for (const auto& row : rows) {
    if (!row.lower_ok || !row.upper_ok) return false;
  }
  return true;
}

SandwichReport sandwich_check(const std::vector<BigCount>& c) {
  if (c.size() < 3) throw std::invalid_argument("sandwich_check needs c_0 .. c_2 at least");
  SandwichReport report;
  for (std::size_t n = 2; n < c.size(); ++n) {
    SandwichRow row;
    row.n = n;
    const BigCount square = c[n - 1] * c[n - 1];
    row.lower_margin = c[n] - square;
    row.upper_margin = square * (c[n - 2] + 4) - c[n] * c[n - 2];
    row.lower_ok = row.lower_margin >= 0;
    row.upper_ok = row.upper_margin >= 0;
    report.rows.push_back(std::move(row));
  }
  return report;
}

InequalityReport check_power_doubling(const std::vector<BigCount>& c) {
  InequalityReport report;
  for (std::size_t n = 2; n < c.size(); ++n) {
    for (std::size_t k = 1; k + 1 <= n; ++k) {
      ++report.checked;
      BigCount power;
      if (c[n - k] <= 1) {
        power = c[n - k];
      } else {
        if (k >= 40) {
          report.failures.push_back("c_" + std::to_string(n - k) + "^(2^" + std::to_string(k) +
                                    ") too large to form");
          continue;
        }
        mpz_pow_ui(power.get_mpz_t(), c[n - k].get_mpz_t(), 1ul << k);
      }
      if (power > c[n]) {
        report.failures.push_back("c_" + std::to_string(n - k) + "^(2^" + std::to_string(k) +
                                  ") > c_" + std::to_string(n));
      }
    }
  }
  return report;
}

InequalityReport check_linear_doubling(const std::vector<BigCount>& c) {
  InequalityReport report;
  for (std::size_t n = 2; n < c.size(); ++n) {
    for (std::size_t k = 1; k + 1 <= n; ++k) {
      ++report.checked;
      BigCount lhs;
      mpz_mul_2exp(lhs.get_mpz_t(), c[n - k].get_mpz_t(), k);
      if (lhs > c[n]) {
        report.failures.push_back("2^" + std::to_string(k) + " c_" + std::to_string(n - k) +
                                  " > c_" + std::to_string(n));
      }
    }
  }
  return report;
}

InequalityReport check_sum_inequality(const std::vector<BigCount>& c) {
  InequalityReport report;
  BigCount prefix = 0;  // sum_{k=0}^{n-2} c_k
  for (std::size_t n = 2; n <= c.size(); ++n) {
    prefix += c[n - 2];
    ++report.checked;
    if (c[n - 1] < c[n - 2] * prefix) {
      report.failures.push_back("c_" + std::to_string(n - 1) + " < c_" + std::to_string(n - 2) +
                                " * sum_{k<=" + std::to_string(n - 2) + "} c_k");
    }
  }
  return report;
}

InequalityReport check_double_exponential_floor(const std::vector<BigCount>& c) {
  InequalityReport report;
  for (std::size_t n = 2; n < c.size(); ++n) {
    ++report.checked;
    BigCount floor;
    mpz_ui_pow_ui(floor.get_mpz_t(), 2, 1ul << (n - 2));
    if (c[n] < floor) {
      report.failures.push_back("c_" + std::to_string(n) + " < 2^(2^" + std::to_string(n - 2) +
                                ")");
    }
  }
  return report;
}

HPReal ratio_check(const std::vector<BigCount>& a, const ConstantEstimate& estimate,
                   std::size_t n) {
  if (n >= a.size()) throw std::out_of_range("ratio_check: a_n not available");
  HPReal power = estimate.value;
  for (std::size_t i = 0; i < n; ++i) power = power * power;
  const HPReal ratio = HPReal::from_integer(a[n], power.precision()) / power;
  HPReal deviation = (ratio - HPReal::exact(1, power.precision())).abs();
  mpfr_t magnitude;
  mpfr_init2(magnitude, 64);
  mpfr_abs(magnitude, deviation.mid(), MPFR_RNDD);
  const bool resolved = mpfr_greater_p(magnitude, deviation.radius());
  mpfr_clear(magnitude);
  if (!resolved) {
    throw PrecisionError("ratio_check at n = " + std::to_string(n) +
                         ": precision insufficient for 2^n-fold exponentiation");
  }
  return deviation;
}

}  // namespace hfs
