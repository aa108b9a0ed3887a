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

#include "hfsenum/hfs_core.hpp"

#include <algorithm>
#include <cctype>

namespace hfs {
namespace {

std::uint64_t hash_elements(std::span<const SetId> elements) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (SetId e : elements) {
    h ^= e.value;
    h *= 0x100000001b3ull;
    h ^= h >> 29;
  }
  return h;
}

class Parser {
 public:
  Parser(Universe& universe, std::string_view text) : universe_(universe), text_(text) {}

  SetId parse_all() {
    SetId result = parse_element();
    skip_space();
    if (pos_ != text_.size()) fail("trailing characters");
    return result;
  }

 private:
  SetId parse_element() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char ch = text_[pos_];
    if (ch == '{') return parse_set();
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') return parse_atom();
    fail("expected '{' or an atom label");
  }

  SetId parse_set() {
    ++pos_;  // '{'
    std::vector<SetId> elements;
    skip_space();
    if (peek() == '}') {
      ++pos_;
      return universe_.empty_set();
    }
    for (;;) {
      elements.push_back(parse_element());
      skip_space();
      char ch = peek();
      if (ch == ',') {
        ++pos_;
      } else if (ch == '}') {
        ++pos_;
        break;
      } else {
        fail("expected ',' or '}'");
      }
    }
    return universe_.make_set(std::move(elements));
  }

  SetId parse_atom() {
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    return universe_.atom(text_.substr(start, pos_ - start));
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const char* what) const {
    throw std::invalid_argument("set notation: " + std::string(what) + " at offset " +
                                std::to_string(pos_));
  }

  Universe& universe_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

unsigned adjunctive_rank_from_sorted(std::span<const unsigned> element_arks) {
  if (element_arks.empty()) return 0;
  const std::size_t n = element_arks.size();
  unsigned best = 0;
  for (std::size_t j = 1; j <= n; ++j) {
    best = std::max(best, static_cast<unsigned>(element_arks[j - 1] + (n - j)));
  }
  return best + 1;
}

Universe::Universe(std::size_t ackermann_bit_budget) : ack_bit_budget_(ackermann_bit_budget) {
  nodes_.push_back(Node{});
  index_.emplace(hash_elements({}), 0);
}

const Universe::Node& Universe::node(SetId x) const {
  if (x.value >= nodes_.size()) throw std::out_of_range("unknown set id " + std::to_string(x.value));
  return nodes_[x.value];
}

std::span<const SetId> Universe::elements(SetId x) const {
  const Node& n = node(x);
  return {pool_.data() + n.offset, n.count};
}

std::string_view Universe::label(SetId atom) const {
  const Node& n = node(atom);
  if (n.atom_index == kNotAtom) throw std::invalid_argument("label() of a set");
  return atom_labels_[n.atom_index];
}

bool Universe::contains(SetId x, SetId y) const {
  auto elems = elements(x);
  auto it = std::lower_bound(elems.begin(), elems.end(), y,
                             [this](SetId a, SetId b) { return less(a, b); });
  return it != elems.end() && *it == y;
}

std::strong_ordering Universe::compare(SetId a, SetId b) const {
  if (a == b) return std::strong_ordering::equal;
  const Node& na = node(a);
  const Node& nb = node(b);
  const bool atom_a = na.atom_index != kNotAtom;
  const bool atom_b = nb.atom_index != kNotAtom;
  if (atom_a || atom_b) {
    if (atom_a && atom_b) return na.atom_index <=> nb.atom_index;
    return atom_a ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  if (na.rank != nb.rank) return na.rank <=> nb.rank;
  // Lexicographic on descending element sequences; a proper prefix is smaller.
  auto ea = elements(a);
  auto eb = elements(b);
  auto ia = ea.rbegin();
  auto ib = eb.rbegin();
  for (; ia != ea.rend() && ib != eb.rend(); ++ia, ++ib) {
    auto c = compare(*ia, *ib);
    if (c != 0) return c;
  }
  if (ia == ea.rend() && ib == eb.rend()) return std::strong_ordering::equal;
  return ia == ea.rend() ? std::strong_ordering::less : std::strong_ordering::greater;
}

SetId Universe::intern_sorted(std::vector<SetId>&& sorted) {
  const std::uint64_t h = hash_elements(sorted);
  auto [lo, hi] = index_.equal_range(h);
  for (auto it = lo; it != hi; ++it) {
    SetId candidate{it->second};
    auto elems = elements(candidate);
    if (std::equal(elems.begin(), elems.end(), sorted.begin(), sorted.end())) return candidate;
  }

  Node fresh;
  fresh.offset = static_cast<std::uint32_t>(pool_.size());
  fresh.count = static_cast<std::uint32_t>(sorted.size());
  std::vector<unsigned> arks;
  arks.reserve(sorted.size());
  for (SetId e : sorted) {
    const Node& ne = node(e);
    fresh.rank = std::max(fresh.rank, ne.rank + 1);
    fresh.pure = fresh.pure && ne.pure && ne.atom_index == kNotAtom;
    arks.push_back(ne.ark);
  }
  std::sort(arks.begin(), arks.end());
  fresh.ark = adjunctive_rank_from_sorted(arks);

  if (nodes_.size() >= 0xfffffff0u) throw ResourceError("interning table exhausted");
  pool_.insert(pool_.end(), sorted.begin(), sorted.end());
  SetId id{static_cast<std::uint32_t>(nodes_.size())};
  nodes_.push_back(fresh);
  index_.emplace(h, id.value);
  return id;
}

SetId Universe::adjoin(SetId x, SetId y) {
  if (is_atom(x)) throw std::invalid_argument("cannot adjoin to an atom");
  node(y);
  auto elems = elements(x);
  auto it = std::lower_bound(elems.begin(), elems.end(), y,
                             [this](SetId a, SetId b) { return less(a, b); });
  if (it != elems.end() && *it == y) return x;
  std::vector<SetId> out;
  out.reserve(elems.size() + 1);
  out.insert(out.end(), elems.begin(), it);
  out.push_back(y);
  out.insert(out.end(), it, elems.end());
  return intern_sorted(std::move(out));
}

SetId Universe::make_set(std::vector<SetId> elements) {
  for (SetId e : elements) node(e);
  std::sort(elements.begin(), elements.end(), [this](SetId a, SetId b) { return less(a, b); });
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  return intern_sorted(std::move(elements));
}

SetId Universe::atom(std::string_view label) {
  if (auto found = find_atom(label)) return *found;
  if (label.empty()) throw std::invalid_argument("atom label must be non-empty");
  Node fresh;
  fresh.offset = static_cast<std::uint32_t>(pool_.size());
  fresh.atom_index = static_cast<std::uint32_t>(atom_labels_.size());
  fresh.pure = false;
  SetId id{static_cast<std::uint32_t>(nodes_.size())};
  nodes_.push_back(fresh);
  atom_labels_.emplace_back(label);
  atoms_by_label_.emplace(std::string(label), id);
  return id;
}

std::optional<SetId> Universe::find_atom(std::string_view label) const {
  auto it = atoms_by_label_.find(std::string(label));
  if (it == atoms_by_label_.end()) return std::nullopt;
  return it->second;
}

const BigCount& Universe::code_locked(SetId x) const {
  if (auto it = ack_memo_.find(x.value); it != ack_memo_.end()) return it->second;
  BigCount code = 0;
  auto elems = elements(x);
  if (!elems.empty()) {
    // Canonical order is Ackermann order, so the last element has the top bit.
    const BigCount& top = code_locked(elems.back());
    if (top >= BigCount(static_cast<unsigned long>(ack_bit_budget_))) {
      throw ResourceError("Ackermann code needs more than " + std::to_string(ack_bit_budget_) +
                          " bits");
    }
    for (SetId e : elems) mpz_setbit(code.get_mpz_t(), code_locked(e).get_ui());
  }
  return ack_memo_.emplace(x.value, std::move(code)).first->second;
}

BigCount Universe::ackermann_code(SetId x) const {
  if (!is_pure(x)) throw std::domain_error("sets containing atoms have no Ackermann code");
  std::lock_guard lock(ack_mutex_);
  return code_locked(x);
}

SetId Universe::decode_ackermann(const BigCount& code) {
  if (code < 0) throw std::invalid_argument("Ackermann codes are natural numbers");
  if (code == 0) return empty_set();
  const std::size_t bits = mpz_sizeinbase(code.get_mpz_t(), 2);
  if (bits > ack_bit_budget_) {
    throw ResourceError("Ackermann code has " + std::to_string(bits) + " bits, budget is " +
                        std::to_string(ack_bit_budget_));
  }
  std::vector<SetId> elements;
  for (mp_bitcnt_t bit = mpz_scan1(code.get_mpz_t(), 0); bit < bits;
       bit = mpz_scan1(code.get_mpz_t(), bit + 1)) {
    elements.push_back(decode_ackermann(BigCount(static_cast<unsigned long>(bit))));
  }
  return make_set(std::move(elements));
}

void Universe::format_into(SetId x, std::string& out) const {
  if (is_atom(x)) {
    out += label(x);
    return;
  }
  out += '{';
  bool first = true;
  for (SetId e : elements(x)) {
    if (!first) out += ',';
    first = false;
    format_into(e, out);
  }
  out += '}';
}

std::string Universe::format(SetId x) const {
  std::string out;
  format_into(x, out);
  return out;
}

SetId Universe::parse(std::string_view text) { return Parser(*this, text).parse_all(); }

}  // namespace hfs
