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

#ifndef HFSENUM_ORACLE_HPP_
#define HFSENUM_ORACLE_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <span>
#include <vector>

#include "hfsenum/big_count.hpp"
#include "hfsenum/hfs_core.hpp"
#include "hfsenum/hierarchy_spec.hpp"

namespace hfs {

// Brute-force construction of hierarchy levels as explicit sets. Everything
// here is computed by literal application of the defining equations and
// serves as ground truth for the recurrences.

class ResourceCapError : public ResourceError {
 public:
  ResourceCapError(const std::string& what, std::size_t level)
      : ResourceError(what), level_(level) {}
  std::size_t level() const noexcept { return level_; }

 private:
  std::size_t level_;
};

// Depth and size caps; configuration, not constants.
struct OracleLimits {
  std::size_t plain_depth = 5;
  std::size_t minbounded_depth = 5;
  std::size_t cumulative_depth = 5;
  std::size_t atoms_depth = 4;
  std::size_t atoms_max_u = 3;
  std::size_t max_level_size = 200000;
};

// Dense membership bitset over interned ids.
class IdBitset {
 public:
  IdBitset() = default;
  explicit IdBitset(std::size_t universe_size) : words_((universe_size + 63) / 64, 0) {}

  void insert(SetId id) {
    const std::size_t word = id.value / 64;
    if (word >= words_.size()) words_.resize(word + 1, 0);
    words_[word] |= std::uint64_t{1} << (id.value % 64);
  }
  bool contains(SetId id) const {
    const std::size_t word = id.value / 64;
    return word < words_.size() && ((words_[word] >> (id.value % 64)) & 1u) != 0;
  }

 private:
  std::vector<std::uint64_t> words_;
};

class LevelSets {
 public:
  const HierarchySpec& spec() const noexcept { return spec_; }
  // Index of the deepest computed level.
  std::size_t depth() const noexcept { return members_.size() - 1; }

  // Members of level n. The member list of level n+1 starts with the members
  // of level n in the same order (levels are nested).
  const std::vector<SetId>& level(std::size_t n) const;
  std::size_t size(std::size_t n) const { return level(n).size(); }
  std::vector<std::size_t> sizes() const;
  bool contains(std::size_t n, SetId x) const;
  // Least n with x in level n, if any.
  std::optional<std::size_t> first_level(SetId x) const;

  std::span<const SetId> atom_ids() const noexcept { return atoms_; }

  // Minimally bounded only: witness m (-1 allowed) used to build level n+1.
  long witness(std::size_t n) const { return witnesses_.at(n); }

  Universe& universe() const noexcept { return *universe_; }

 private:
  friend LevelSets build_levels(std::shared_ptr<Universe>, const HierarchySpec&, std::size_t,
                                const OracleLimits&);
  friend LevelSets build_cumulative(std::shared_ptr<Universe>, std::size_t, const OracleLimits&);

  LevelSets(std::shared_ptr<Universe> universe, HierarchySpec spec)
      : universe_(std::move(universe)), spec_(std::move(spec)) {}

  void push_level(std::vector<SetId> members);

  std::shared_ptr<Universe> universe_;
  HierarchySpec spec_;
  std::vector<std::vector<SetId>> members_;
  std::vector<IdBitset> bits_;
  std::vector<SetId> atoms_;
  std::vector<long> witnesses_;
};

// Levels 0..n_max of the plain, atoms, bounded or minimally bounded
// hierarchy. Throws ResourceCapError (with the offending level) past the caps.
LevelSets build_levels(std::shared_ptr<Universe> universe, const HierarchySpec& spec,
                       std::size_t n_max, const OracleLimits& limits = {});

// von Neumann levels V_0..V_n_max (V_0 is empty).
LevelSets build_cumulative(std::shared_ptr<Universe> universe, std::size_t n_max,
                           const OracleLimits& limits = {});

// |{x in L_n \ L_{n-1} : x ⊆ L_m}|, split by k = |x ∩ (L_m \ L_{m-1})|.
struct PartitionCounts {
  BigCount total;
  std::vector<BigCount> by_k;
};
PartitionCounts partition_counts(const LevelSets& levels, std::size_t n, std::size_t m);

enum class ProfileKind { kRank, kCardinality };

// Histogram of rank or cardinality over level n; keys 0..n are always present.
std::map<std::size_t, BigCount> profile_counts(const LevelSets& levels, std::size_t n,
                                               ProfileKind by);

struct ArkReport {
  std::size_t checked = 0;
  std::size_t matched = 0;
  std::vector<SetId> mismatches;
  bool ok() const noexcept { return checked == matched; }
};

// Compares the closed-form adjunctive rank of every member of the deepest
// level with the least level containing it. Plain hierarchy only.
ArkReport verify_ark_recursion(const LevelSets& levels);

// One set per line, in creation order of the level's member list.
void dump_level(const LevelSets& levels, std::size_t n, std::ostream& out);

}  // namespace hfs

#endif  // HFSENUM_ORACLE_HPP_
