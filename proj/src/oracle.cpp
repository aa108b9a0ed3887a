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

#include "hfsenum/oracle.hpp"

#include <stdexcept>
#include <string>

namespace hfs {
namespace {

std::string level_message(const HierarchySpec& spec, std::size_t level, const std::string& why) {
  return "oracle " + spec.describe() + ": level " + std::to_string(level) + " " + why;
}

void check_depth(const HierarchySpec& spec, std::size_t n_max, std::size_t cap) {
  if (n_max > cap) {
    throw ResourceCapError(
        level_message(spec, n_max, "exceeds depth cap " + std::to_string(cap)), n_max);
  }
}

// Collects a level: previous members that survive first (nesting check),
// then newly discovered sets in discovery order.
class LevelCollector {
 public:
  LevelCollector(const HierarchySpec& spec, std::size_t level, std::size_t cap)
      : spec_(spec), level_(level), cap_(cap) {}

  void add(SetId x) {
    if (seen_.contains(x)) return;
    seen_.insert(x);
    found_.push_back(x);
    if (found_.size() > cap_) {
      throw ResourceCapError(
          level_message(spec_, level_, "exceeds size cap " + std::to_string(cap_)), level_);
    }
  }

  std::vector<SetId> finish(const std::vector<SetId>& previous) const {
    std::vector<SetId> out;
    out.reserve(found_.size());
    IdBitset kept;
    for (SetId x : previous) {
      if (seen_.contains(x)) {
        out.push_back(x);
        kept.insert(x);
      }
    }
    for (SetId x : found_) {
      if (!kept.contains(x)) out.push_back(x);
    }
    return out;
  }

 private:
  const HierarchySpec& spec_;
  std::size_t level_;
  std::size_t cap_;
  IdBitset seen_;
  std::vector<SetId> found_;
};

bool all_elements_in(const Universe& u, SetId x, const LevelSets& levels, std::size_t m) {
  for (SetId e : u.elements(x)) {
    if (!levels.contains(m, e)) return false;
  }
  return true;
}

}  // namespace

const std::vector<SetId>& LevelSets::level(std::size_t n) const {
  if (n >= members_.size()) {
    throw std::out_of_range("level " + std::to_string(n) + " not computed (depth " +
                            std::to_string(depth()) + ")");
  }
  return members_[n];
}

std::vector<std::size_t> LevelSets::sizes() const {
  std::vector<std::size_t> out;
  for (const auto& m : members_) out.push_back(m.size());
  return out;
}

bool LevelSets::contains(std::size_t n, SetId x) const {
  if (n >= bits_.size()) throw std::out_of_range("level " + std::to_string(n) + " not computed");
  return bits_[n].contains(x);
}

std::optional<std::size_t> LevelSets::first_level(SetId x) const {
  for (std::size_t n = 0; n < bits_.size(); ++n) {
    if (bits_[n].contains(x)) return n;
  }
  return std::nullopt;
}

void LevelSets::push_level(std::vector<SetId> members) {
  IdBitset bits(universe_->size());
  for (SetId x : members) bits.insert(x);
  members_.push_back(std::move(members));
  bits_.push_back(std::move(bits));
}

LevelSets build_levels(std::shared_ptr<Universe> universe, const HierarchySpec& spec,
                       std::size_t n_max, const OracleLimits& limits) {
  using Kind = HierarchySpec::Kind;
  switch (spec.kind) {
    case Kind::kPlain: check_depth(spec, n_max, limits.plain_depth); break;
    case Kind::kMinBounded: check_depth(spec, n_max, limits.minbounded_depth); break;
    case Kind::kAtoms:
      check_depth(spec, n_max, limits.atoms_depth);
      if (spec.atoms > limits.atoms_max_u) {
        throw ResourceCapError(level_message(spec, 0, "has more atoms than the cap " +
                                                          std::to_string(limits.atoms_max_u)),
                               0);
      }
      break;
    case Kind::kBounded:
      if (!spec.bound) throw std::invalid_argument("bounded spec without a bound function");
      spec.bound->validate(n_max);
      break;
    case Kind::kCumulative: return build_cumulative(std::move(universe), n_max, limits);
  }

  LevelSets out(universe, spec);
  Universe& u = *universe;
  const SetId empty = u.empty_set();

  std::vector<SetId> first{empty};
  for (std::size_t i = 0; i < spec.atoms; ++i) {
    SetId a = u.atom("u" + std::to_string(i));
    out.atoms_.push_back(a);
    first.push_back(a);
  }
  out.push_level(std::move(first));

  // Minimally bounded witness search state.
  long witness = -1;
  std::size_t scanned = 0;
  std::size_t subset_count = 0;

  for (std::size_t n = 0; n < n_max; ++n) {
    const std::vector<SetId>& current = out.members_[n];
    LevelCollector next(spec, n + 1, limits.max_level_size);
    next.add(empty);
    for (SetId a : out.atoms_) next.add(a);

    std::size_t source_level = n;
    if (spec.kind == Kind::kBounded) {
      source_level = (*spec.bound)(n);
    } else if (spec.kind == Kind::kMinBounded) {
      // Largest m with P(L_m) ⊆ L_n, detected as |L_n ∩ P(L_m)| = 2^|L_m|.
      for (;;) {
        const auto candidate = static_cast<std::size_t>(witness + 1);
        if (candidate > n) break;
        const std::size_t base = out.members_[candidate].size();
        if (base >= 63) break;
        for (; scanned < current.size(); ++scanned) {
          if (all_elements_in(u, current[scanned], out, candidate)) ++subset_count;
        }
        if (subset_count != (std::size_t{1} << base)) break;
        ++witness;
        scanned = 0;
        subset_count = 0;
      }
      out.witnesses_.push_back(witness);
      source_level = static_cast<std::size_t>(witness + 1);
    }

    const std::vector<SetId>& sources = out.members_[source_level];
    for (SetId x : current) {
      if (u.is_atom(x)) continue;
      for (SetId y : sources) next.add(u.adjoin(x, y));
    }
    out.push_level(next.finish(current));
  }
  return out;
}

LevelSets build_cumulative(std::shared_ptr<Universe> universe, std::size_t n_max,
                           const OracleLimits& limits) {
  const HierarchySpec spec = HierarchySpec::cumulative();
  check_depth(spec, n_max, limits.cumulative_depth);
  LevelSets out(universe, spec);
  Universe& u = *universe;
  out.push_level({});
  for (std::size_t n = 0; n < n_max; ++n) {
    const std::vector<SetId>& base = out.members_[n];
    if (base.size() >= 24) {
      throw ResourceCapError(level_message(spec, n + 1, "power set too large"), n + 1);
    }
    LevelCollector next(spec, n + 1, std::size_t{1} << base.size());
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << base.size()); ++mask) {
      std::vector<SetId> elements;
      for (std::size_t i = 0; i < base.size(); ++i) {
        if ((mask >> i) & 1u) elements.push_back(base[i]);
      }
      next.add(u.make_set(std::move(elements)));
    }
    out.push_level(next.finish(base));
  }
  return out;
}

PartitionCounts partition_counts(const LevelSets& levels, std::size_t n, std::size_t m) {
  if (n > levels.depth() || m >= n) {
    throw std::out_of_range("partition_counts needs n > m >= 0 and n <= depth (n=" +
                            std::to_string(n) + ", m=" + std::to_string(m) + ")");
  }
  const Universe& u = levels.universe();
  PartitionCounts out;
  out.total = 0;
  out.by_k.assign(n - m + 1, 0);
  for (SetId x : levels.level(n)) {
    if (n > 0 && levels.contains(n - 1, x)) continue;
    if (!all_elements_in(u, x, levels, m)) continue;
    std::size_t k = 0;
    for (SetId e : u.elements(x)) {
      if (m == 0 || !levels.contains(m - 1, e)) ++k;
    }
    if (k >= out.by_k.size()) out.by_k.resize(k + 1, 0);
    ++out.total;
    ++out.by_k[k];
  }
  return out;
}

std::map<std::size_t, BigCount> profile_counts(const LevelSets& levels, std::size_t n,
                                               ProfileKind by) {
  const Universe& u = levels.universe();
  std::map<std::size_t, BigCount> out;
  for (std::size_t t = 0; t <= n; ++t) out[t] = 0;
  for (SetId x : levels.level(n)) {
    const std::size_t key = by == ProfileKind::kRank ? u.rank(x) : u.cardinality(x);
    ++out[key];
  }
  return out;
}

ArkReport verify_ark_recursion(const LevelSets& levels) {
  if (levels.spec().kind != HierarchySpec::Kind::kPlain) {
    throw std::invalid_argument("verify_ark_recursion applies to the plain hierarchy only");
  }
  const Universe& u = levels.universe();
  ArkReport report;
  for (SetId x : levels.level(levels.depth())) {
    ++report.checked;
    auto by_level = levels.first_level(x);
    if (by_level && *by_level == u.ark(x)) {
      ++report.matched;
    } else {
      report.mismatches.push_back(x);
    }
  }
  return report;
}

void dump_level(const LevelSets& levels, std::size_t n, std::ostream& out) {
  const Universe& u = levels.universe();
  for (SetId x : levels.level(n)) out << u.format(x) << '\n';
}

}  // namespace hfs
