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

#ifndef HFSENUM_VERIFY_HPP_
#define HFSENUM_VERIFY_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "hfsenum/hierarchy_spec.hpp"
#include "hfsenum/oracle.hpp"

namespace hfs {

struct Check {
  std::string name;
  bool ok = false;
  std::string detail;
};

struct VerifyReport {
  HierarchySpec spec;
  std::vector<std::size_t> sizes;
  std::vector<Check> checks;
  bool ok() const;
};

// Builds levels 0..n by brute force and compares them with the recurrence
// for the same variant:
//   plain:      a_n, every b_{n,m}, the k-split partition against the three
//               recurrence summands, rank and cardinality profiles, ark recursion
//   atoms:      a_n and every b_{n,m}
//   bounded:    a_n and every b_{n,m}
//   minbounded: a_n and every b_{n,m}
//   cumulative: |V_{n+1}| = 2^|V_n|
// Throws ResourceCapError past the oracle limits.
VerifyReport verify_against_oracle(const HierarchySpec& spec, std::size_t n,
                                   const OracleLimits& limits = {});

}  // namespace hfs

#endif  // HFSENUM_VERIFY_HPP_
