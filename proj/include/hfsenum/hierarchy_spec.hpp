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

#ifndef HFSENUM_HIERARCHY_SPEC_HPP_
#define HFSENUM_HIERARCHY_SPEC_HPP_

#include <cstddef>
#include <optional>
#include <string>

#include "hfsenum/bound_function.hpp"

namespace hfs {

// Which hierarchy a level construction or a count table describes.
struct HierarchySpec {
  enum class Kind { kPlain, kAtoms, kBounded, kMinBounded, kCumulative };

  Kind kind = Kind::kPlain;
  std::size_t atoms = 0;
  std::optional<BoundFunction> bound;

  static HierarchySpec plain() { return {}; }
  static HierarchySpec with_atoms(std::size_t u) { return {Kind::kAtoms, u, std::nullopt}; }
  static HierarchySpec bounded_by(BoundFunction f) { return {Kind::kBounded, 0, std::move(f)}; }
  static HierarchySpec minimally_bounded() { return {Kind::kMinBounded, 0, std::nullopt}; }
  // The von Neumann hierarchy V_n; only meaningful for oracle levels.
  static HierarchySpec cumulative() { return {Kind::kCumulative, 0, std::nullopt}; }

  // plain | atoms(u=3) | bounded(f=half) | minbounded | cumulative
  std::string describe() const {
    switch (kind) {
      case Kind::kPlain: return "plain";
      case Kind::kAtoms: return "atoms(u=" + std::to_string(atoms) + ")";
      case Kind::kBounded: return "bounded(f=" + bound->describe() + ")";
      case Kind::kMinBounded: return "minbounded";
      case Kind::kCumulative: return "cumulative";
    }
    return "?";
  }

  friend bool operator==(const HierarchySpec&, const HierarchySpec&) = default;
};

}  // namespace hfs

#endif  // HFSENUM_HIERARCHY_SPEC_HPP_
