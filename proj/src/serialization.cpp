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

#include "hfsenum/serialization.hpp"

#include <charconv>
#include <fstream>
#include <random>
#include <sstream>

#include "hfsenum/big_count.hpp"

namespace hfs {
namespace {

using nlohmann::json;

std::size_t parse_natural(std::string_view text, std::string_view what) {
  std::size_t value = 0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc() || ptr != end) {
    throw std::invalid_argument(std::string(what) + ": not a natural number: '" +
                                std::string(text) + "'");
  }
  return value;
}

std::string trim(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = text.find_last_not_of(" \t\r\n");
  return std::string(text.substr(first, last - first + 1));
}

BoundFunction read_bound_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw BoundFunctionError("cannot open bound function file '" + path + "'");
  std::vector<std::size_t> values;
  std::string line;
  while (std::getline(in, line)) {
    std::stringstream fields(line);
    std::string field;
    while (std::getline(fields, field, ',')) {
      const std::string token = trim(field);
      if (token.empty() || token.front() == '#') continue;
      values.push_back(parse_natural(token, "bound function file"));
    }
  }
  if (values.empty()) throw BoundFunctionError("bound function file '" + path + "' is empty");
  return BoundFunction::table(std::move(values));
}

std::string hex64(std::uint64_t value) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i, value >>= 4) out[static_cast<std::size_t>(i)] = kDigits[value & 15];
  return out;
}

BigCount big_from_json(const json& value) {
  if (!value.is_string()) throw CacheError("count is not a decimal string");
  try {
    return from_decimal(value.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw CacheError(e.what());
  }
}

}  // namespace

HierarchySpec parse_hierarchy_spec(std::string_view text) {
  if (text == "plain") return HierarchySpec::plain();
  if (text == "minbounded") return HierarchySpec::minimally_bounded();
  if (text == "cumulative") return HierarchySpec::cumulative();
  constexpr std::string_view kAtoms = "atoms(u=";
  constexpr std::string_view kBounded = "bounded(f=";
  if (text.ends_with(')')) {
    if (text.starts_with(kAtoms)) {
      return HierarchySpec::with_atoms(
          parse_natural(text.substr(kAtoms.size(), text.size() - kAtoms.size() - 1), "atoms"));
    }
    if (text.starts_with(kBounded)) {
      return HierarchySpec::bounded_by(BoundFunction::from_descriptor(
          text.substr(kBounded.size(), text.size() - kBounded.size() - 1)));
    }
  }
  throw std::invalid_argument("unknown hierarchy variant '" + std::string(text) + "'");
}

BoundFunction parse_bound_function(std::string_view text) {
  constexpr std::string_view kFile = "file:";
  if (text.starts_with(kFile)) return read_bound_file(std::string(text.substr(kFile.size())));
  return BoundFunction::from_descriptor(text);
}

BoundFunction parse_bound_function(std::string_view text, std::size_t n_max) {
  BoundFunction f = parse_bound_function(text);
  f.validate(n_max);
  return f;
}

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t hash = 0xcbf29ce484222325ull;
  for (const char ch : bytes) {
    hash ^= static_cast<unsigned char>(ch);
    hash *= 0x100000001b3ull;
  }
  return hash;
}

json table_payload(const BTable& table) {
  json cells = json::array();
  for (std::size_t n = 0; n <= table.n_max(); ++n) {
    json row = json::array();
    for (const BigCount& value : table.row(n)) row.push_back(to_decimal(value));
    cells.push_back(std::move(row));
  }
  json a = json::array();
  for (const BigCount& value : table.a()) a.push_back(to_decimal(value));
  return json{{"a", std::move(a)},
              {"cells", std::move(cells)},
              {"format_version", kCacheFormatVersion},
              {"n_max", table.n_max()},
              {"variant", table.variant().describe()}};
}

std::string serialize_table(const BTable& table) {
  json payload = table_payload(table);
  const std::uint64_t checksum = fnv1a64(payload.dump());
  payload["checksum"] = hex64(checksum);
  return payload.dump() + "\n";
}

BTable deserialize_table(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw CacheError(std::string("cache is not valid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("format_version")) {
    throw CacheError("cache has no format_version");
  }
  if (doc["format_version"] != kCacheFormatVersion) {
    throw CacheError("cache format_version " + doc["format_version"].dump() +
                     " is not supported (expected " + std::to_string(kCacheFormatVersion) + ")");
  }
  if (!doc.contains("checksum") || !doc["checksum"].is_string()) {
    throw CacheError("cache has no checksum");
  }
  const std::string stored = doc["checksum"].get<std::string>();
  doc.erase("checksum");
  const std::uint64_t checksum = fnv1a64(doc.dump());
  if (hex64(checksum) != stored) {
    throw CacheError("cache checksum mismatch: stored " + stored + ", computed " +
                     hex64(checksum));
  }

  BTable table(HierarchySpec::plain());
  try {
    table = BTable(parse_hierarchy_spec(doc.at("variant").get<std::string>()));
    const auto& cells = doc.at("cells");
    if (!cells.is_array() || cells.empty()) throw CacheError("cache has no rows");
    for (const auto& row : cells) {
      std::vector<BigCount> values;
      for (const auto& cell : row) values.push_back(big_from_json(cell));
      table.append_row(std::move(values));
    }
    if (doc.at("n_max").get<std::size_t>() != table.n_max()) {
      throw CacheError("cache n_max disagrees with its rows");
    }
    const auto& a = doc.at("a");
    if (a.size() != table.a().size()) throw CacheError("cache level sizes disagree with rows");
    for (std::size_t n = 0; n < a.size(); ++n) {
      if (big_from_json(a[n]) != table.a()[n]) {
        throw CacheError("cache level size a_" + std::to_string(n) + " disagrees with rows");
      }
    }
  } catch (const json::exception& e) {
    throw CacheError(std::string("malformed cache: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw CacheError(std::string("malformed cache: ") + e.what());
  }

  if (table.n_max() >= 1) {
    std::mt19937_64 rng(checksum);
    std::uniform_int_distribution<std::size_t> pick(1, table.n_max());
    const std::size_t n = pick(rng);
    const std::vector<BigCount> expected = recompute_row(table, n);
    const auto stored_row = table.row(n);
    if (!std::equal(expected.begin(), expected.end(), stored_row.begin(), stored_row.end())) {
      throw CacheError("cache spot check failed at row " + std::to_string(n));
    }
  }
  return table;
}

void save_table(const std::filesystem::path& path, const BTable& table) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw CacheError("cannot write cache '" + path.string() + "'");
  out << serialize_table(table);
  if (!out) throw CacheError("write failed for cache '" + path.string() + "'");
}

BTable load_table(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CacheError("cannot read cache '" + path.string() + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return deserialize_table(buffer.str());
}

BTable truncate_table(const BTable& table, std::size_t n) {
  if (n > table.n_max()) throw std::out_of_range("truncate_table past n_max");
  BTable out(table.variant());
  for (std::size_t i = 0; i <= n; ++i) {
    const auto row = table.row(i);
    out.append_row(std::vector<BigCount>(row.begin(), row.end()));
  }
  return out;
}

}  // namespace hfs
