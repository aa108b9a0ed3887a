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

#ifndef HFSENUM_HFS_CORE_HPP_
#define HFSENUM_HFS_CORE_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <mutex>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "hfsenum/big_count.hpp"

namespace hfs {

// Handle to an interned node of a Universe. Equality of handles is
// extensional equality of the sets they name. The built-in ordering is
// creation order, not the canonical set order (see Universe::compare).
struct SetId {
  std::uint32_t value = 0;

  friend constexpr bool operator==(SetId, SetId) = default;
  friend constexpr auto operator<=>(SetId, SetId) = default;
};

struct SetIdHash {
  std::size_t operator()(SetId id) const noexcept { return std::hash<std::uint32_t>{}(id.value); }
};

// Raised when a computation would exceed a configured resource budget
// (Ackermann bit budget, oracle level caps).
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Adjunctive rank from the adjunctive ranks of the elements, which must be
// sorted non-decreasingly: max_j (ark_j + n - j) + 1 with 1-based j, and 0
// for the empty set.
unsigned adjunctive_rank_from_sorted(std::span<const unsigned> element_arks);

// Append-only interning table of hereditarily finite sets (optionally with
// atoms). Ids are dense and assigned in creation order; every element is
// created before any set containing it, so membership is acyclic.
//
// Elements are kept sorted in the canonical order, which coincides with
// numeric order of Ackermann codes on pure sets: compare by rank, then
// lexicographically on the descending element sequences. Atoms precede all
// sets and are ordered by creation.
//
// Threading: reads may run concurrently with each other; inserts (adjoin,
// make_set, atom, decode_ackermann, parse) must be serialized by the caller
// and must not overlap reads. rank/ark are filled once at creation; the
// Ackermann memo is internally locked.
class Universe {
 public:
  static constexpr std::size_t kDefaultAckermannBits = std::size_t{1} << 20;

  explicit Universe(std::size_t ackermann_bit_budget = kDefaultAckermannBits);
  Universe(const Universe&) = delete;
  Universe& operator=(const Universe&) = delete;

  SetId empty_set() const noexcept { return SetId{0}; }

  // x ∪ {y}; returns x itself when y is already a member. x must not be an atom.
  SetId adjoin(SetId x, SetId y);

  // The set whose elements are exactly `elements` (duplicates allowed).
  SetId make_set(std::vector<SetId> elements);

  // The atom with this label, created on first use.
  SetId atom(std::string_view label);
  std::optional<SetId> find_atom(std::string_view label) const;

  bool is_atom(SetId x) const { return node(x).atom_index != kNotAtom; }
  // True when no atom occurs anywhere in the membership tree of x.
  bool is_pure(SetId x) const { return node(x).pure; }
  std::string_view label(SetId atom) const;

  std::span<const SetId> elements(SetId x) const;
  std::size_t cardinality(SetId x) const { return node(x).count; }
  bool contains(SetId x, SetId y) const;

  unsigned rank(SetId x) const { return node(x).rank; }
  unsigned ark(SetId x) const { return node(x).ark; }

  std::strong_ordering compare(SetId a, SetId b) const;
  bool less(SetId a, SetId b) const { return compare(a, b) < 0; }

  // Ackermann code; ResourceError when the code needs more than the bit
  // budget, std::domain_error for sets containing atoms.
  BigCount ackermann_code(SetId x) const;
  SetId decode_ackermann(const BigCount& code);

  std::size_t ackermann_bit_budget() const noexcept { return ack_bit_budget_; }
  void set_ackermann_bit_budget(std::size_t bits) noexcept { ack_bit_budget_ = bits; }

  // Textual notation: {} , {{}} , {{},{{}}} ; atoms by label.
  std::string format(SetId x) const;
  SetId parse(std::string_view text);

  std::size_t size() const noexcept { return nodes_.size(); }

 private:
  static constexpr std::uint32_t kNotAtom = 0xffffffffu;

  struct Node {
    std::uint32_t offset = 0;
    std::uint32_t count = 0;
    std::uint32_t rank = 0;
    std::uint32_t ark = 0;
    std::uint32_t atom_index = kNotAtom;
    bool pure = true;
  };

  const Node& node(SetId x) const;
  SetId intern_sorted(std::vector<SetId>&& sorted);
  const BigCount& code_locked(SetId x) const;
  void format_into(SetId x, std::string& out) const;

  std::vector<Node> nodes_;
  std::vector<SetId> pool_;
  std::unordered_multimap<std::uint64_t, std::uint32_t> index_;
  std::vector<std::string> atom_labels_;
  std::unordered_map<std::string, SetId> atoms_by_label_;

  std::size_t ack_bit_budget_;
  mutable std::mutex ack_mutex_;
  mutable std::unordered_map<std::uint32_t, BigCount> ack_memo_;
};

}  // namespace hfs

#endif  // HFSENUM_HFS_CORE_HPP_
