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

#ifndef HFSENUM_SERIALIZATION_HPP_
#define HFSENUM_SERIALIZATION_HPP_

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "hfsenum/bound_function.hpp"
#include "hfsenum/hierarchy_spec.hpp"
#include "hfsenum/recurrence.hpp"
#include "json.hpp"

namespace hfs {

inline constexpr int kCacheFormatVersion = 1;

// Checksum, version or parse failure while loading a cached table.
class CacheError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Inverse of HierarchySpec::describe().
HierarchySpec parse_hierarchy_spec(std::string_view text);

// identity | half | sqrt | log2 | table:v0,v1,... | file:<path>. A file holds
// one natural per line (commas also accepted). When n_max is given the
// result is validated on 0..n_max-1.
BoundFunction parse_bound_function(std::string_view text);
BoundFunction parse_bound_function(std::string_view text, std::size_t n_max);

// 64-bit FNV-1a.
std::uint64_t fnv1a64(std::string_view bytes);

// {"a": [...], "cells": [[...], ...], "format_version": 1, "n_max": N,
//  "variant": "..."} with every count a decimal string.
nlohmann::json table_payload(const BTable& table);

// The payload plus a "checksum" field, dumped with sorted keys and no
// whitespace. Saving a loaded table reproduces the input bytes.
std::string serialize_table(const BTable& table);

// Rejects other format versions before looking at anything else, then
// verifies the checksum, rebuilds the table and recomputes one row chosen
// by a seed derived from the checksum.
BTable deserialize_table(std::string_view text);

void save_table(const std::filesystem::path& path, const BTable& table);
BTable load_table(const std::filesystem::path& path);

// Rows 0..n of `table`.
BTable truncate_table(const BTable& table, std::size_t n);

}  // namespace hfs

#endif  // HFSENUM_SERIALIZATION_HPP_
