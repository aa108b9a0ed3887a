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

#ifndef HFSENUM_ASYMPTOTICS_HPP_
#define HFSENUM_ASYMPTOTICS_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "hfsenum/big_count.hpp"
#include "hfsenum/hp_real.hpp"

namespace hfs {

// ln x for x >= 1 with radius <= 10^-digits, via ln x = k ln 2 + ln(x / 2^k)
// where k + 1 is the bit length of x. Guard digits are added internally.
HPReal log_big(const BigCount& x, std::size_t digits);

// r_n = u_n - 2 u_{n-1} with u_n = ln c_n, for n >= 2. Entries 0 and 1 of
// the result are exact zeros so that index n holds r_n.
std::vector<HPReal> residuals(const std::vector<BigCount>& c, std::size_t digits);

// Upper bound on ln(1 + 4/x), rounded upward.
HPReal log1p_four_over_upper(const BigCount& x, mpfr_prec_t precision);

struct ConstantEstimate {
  HPReal value;             // C; radius covers rounding and truncation
  HPReal log_value;         // sum_{k=2}^{N} 2^-k r_k; radius covers rounding only
  std::size_t terms_used;   // N
  HPReal truncation_bound;  // >= tail sum_{k>N} 2^-k r_k
  std::size_t digits;

  // Certified |C - value.mid|.
  const HPReal& certified() const noexcept { return value; }
};

// C = exp(sum_{k=2}^{N} 2^-k r_k) with N = c.size() - 1 (at least 3). The
// neglected tail is at most 2^-N ln(1 + 4/c_{N-1}).
ConstantEstimate constant_C(const std::vector<BigCount>& c, std::size_t digits);

// Exact check of c_{n-1}^2 <= c_n <= c_{n-1}^2 (1 + 4/c_{n-2}) for
// 2 <= n < c.size(); the upper bound is tested as
// c_n c_{n-2} <= c_{n-1}^2 (c_{n-2} + 4).
struct SandwichRow {
  std::size_t n = 0;
  bool lower_ok = false;
  bool upper_ok = false;
  BigCount lower_margin;  // c_n - c_{n-1}^2
  BigCount upper_margin;  // c_{n-1}^2 (c_{n-2} + 4) - c_n c_{n-2}
};
struct SandwichReport {
  std::vector<SandwichRow> rows;
  bool ok() const;
};
SandwichReport sandwich_check(const std::vector<BigCount>& c);

struct InequalityReport {
  std::size_t checked = 0;
  std::vector<std::string> failures;
  bool ok() const noexcept { return failures.empty(); }
};

// c_{n-k}^(2^k) <= c_n for n >= 2, 1 <= k <= n-1.
InequalityReport check_power_doubling(const std::vector<BigCount>& c);
// 2^k c_{n-k} <= c_n for n >= 2, 1 <= k <= n-1.
InequalityReport check_linear_doubling(const std::vector<BigCount>& c);
// c_{n-1} >= c_{n-2} * sum_{k=0}^{n-2} c_k for 2 <= n <= c.size().
InequalityReport check_sum_inequality(const std::vector<BigCount>& c);
// c_n >= 2^(2^(n-2)) for n >= 2.
InequalityReport check_double_exponential_floor(const std::vector<BigCount>& c);

// |a_n C^(-2^n) - 1|, with C^(2^n) formed by n squarings. Throws
// PrecisionError when the radius swamps the quotient.
HPReal ratio_check(const std::vector<BigCount>& a, const ConstantEstimate& estimate,
                   std::size_t n);

}  // namespace hfs

#endif  // HFSENUM_ASYMPTOTICS_HPP_
