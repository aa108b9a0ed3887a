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

#include "hfsenum/commands.hpp"

#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "hfsenum/asymptotics.hpp"
#include "hfsenum/bounded.hpp"
#include "hfsenum/oracle.hpp"
#include "hfsenum/recurrence.hpp"
#include "hfsenum/refinements.hpp"
#include "hfsenum/serialization.hpp"
#include "hfsenum/verify.hpp"
#include "json.hpp"

namespace hfs {
namespace {

using nlohmann::json;

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct VerificationFailure {};

// Row-oriented output. The first column is the row index; plain output
// drops it and the header.
struct Grid {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

void write_grid(const Grid& grid, OutputFormat format, std::ostream& out) {
  if (format == OutputFormat::kCsv) {
    for (std::size_t i = 0; i < grid.header.size(); ++i) out << (i ? "," : "") << grid.header[i];
    out << '\n';
    for (const auto& row : grid.rows) {
      for (std::size_t i = 0; i < grid.header.size(); ++i) {
        out << (i ? "," : "") << (i < row.size() ? row[i] : "");
      }
      out << '\n';
    }
    return;
  }
  for (const auto& row : grid.rows) {
    bool first = true;
    for (std::size_t i = 1; i < row.size(); ++i) {
      if (row[i].empty()) continue;
      out << (first ? "" : " ") << row[i];
      first = false;
    }
    out << '\n';
  }
}

void write_json(const json& doc, std::ostream& out) { out << doc.dump(2) << '\n'; }

json decimals(const std::vector<BigCount>& values) {
  json out = json::array();
  for (const BigCount& value : values) out.push_back(to_decimal(value));
  return out;
}

const char* module_of(const std::string& subcommand) {
  static const std::map<std::string, const char*> kModules = {
      {"levels", "recurrence"},      {"table", "recurrence"},
      {"rank-profile", "refinements"}, {"card-profile", "refinements"},
      {"atoms", "refinements"},      {"bounded", "bounded"},
      {"minbounded", "bounded"},     {"constant", "asymptotics"},
      {"oracle-verify", "oracle"}};
  const auto it = kModules.find(subcommand);
  return it == kModules.end() ? "cli" : it->second;
}

const char* format_name(OutputFormat format) {
  switch (format) {
    case OutputFormat::kJson: return "json";
    case OutputFormat::kCsv: return "csv";
    case OutputFormat::kPlain: return "plain";
  }
  return "json";
}

HierarchySpec variant_from_flags(const CommandSpec& command) {
  const std::string& v = command.variant;
  if (v == "atoms") return HierarchySpec::with_atoms(command.u.empty() ? 1 : command.u.front());
  if (v == "bounded") return HierarchySpec::bounded_by(parse_bound_function(command.f));
  return parse_hierarchy_spec(v);
}

BTable compute_for(const HierarchySpec& spec, std::size_t n) {
  switch (spec.kind) {
    case HierarchySpec::Kind::kPlain: return compute_b_table(n);
    case HierarchySpec::Kind::kAtoms: return compute_atoms_table(spec.atoms, n);
    case HierarchySpec::Kind::kBounded: return compute_bounded_table(*spec.bound, n).table;
    case HierarchySpec::Kind::kMinBounded: return compute_minbounded(n).table();
    case HierarchySpec::Kind::kCumulative: break;
  }
  throw UsageError("no count table for variant " + spec.describe());
}

// Serves rows 0..n from the cache when it holds enough of them, otherwise
// computes and (re)writes the cache.
BTable obtain_table(const HierarchySpec& spec, std::size_t n, const std::optional<std::string>& cache) {
  if (!cache) return compute_for(spec, n);
  const std::filesystem::path path(*cache);
  if (std::filesystem::exists(path)) {
    BTable stored = load_table(path);
    if (!(stored.variant() == spec)) {
      throw UsageError("cache '" + *cache + "' holds " + stored.variant().describe() +
                       ", requested " + spec.describe());
    }
    if (stored.n_max() >= n) return truncate_table(stored, n);
  }
  BTable table = compute_for(spec, n);
  save_table(path, table);
  return table;
}

void emit_sequence(const CommandSpec& command, const std::string& variant,
                   const std::vector<BigCount>& a, const std::vector<std::size_t>& indices,
                   std::ostream& out) {
  if (command.format == OutputFormat::kJson) {
    json rows = json::array();
    for (std::size_t n : indices) rows.push_back(to_decimal(a[n]));
    json doc{{"command", command.subcommand},
             {"variant", variant},
             {"n_max", command.n},
             {"a", std::move(rows)}};
    if (indices.size() != a.size()) doc["indices"] = indices;
    write_json(doc, out);
    return;
  }
  Grid grid{{"n", "a"}, {}};
  for (std::size_t n : indices) grid.rows.push_back({std::to_string(n), to_decimal(a[n])});
  write_grid(grid, command.format, out);
}

std::vector<std::size_t> all_indices(std::size_t n) {
  std::vector<std::size_t> out(n + 1);
  for (std::size_t i = 0; i <= n; ++i) out[i] = i;
  return out;
}

void cmd_levels(const CommandSpec& command, std::ostream& out) {
  const BTable table = obtain_table(HierarchySpec::plain(), command.n, command.cache);
  emit_sequence(command, "plain", table.a(), all_indices(command.n), out);
}

void cmd_table(const CommandSpec& command, std::ostream& out) {
  const HierarchySpec spec = variant_from_flags(command);
  const BTable table = obtain_table(spec, command.n, command.cache);
  if (command.format == OutputFormat::kJson) {
    json cells = json::array();
    for (std::size_t n = 0; n <= table.n_max(); ++n) {
      const auto row = table.row(n);
      cells.push_back(decimals(std::vector<BigCount>(row.begin(), row.end())));
    }
    write_json(json{{"command", "table"},
                    {"variant", spec.describe()},
                    {"n_max", command.n},
                    {"first_column", -1},
                    {"cells", std::move(cells)},
                    {"a", decimals(table.a())}},
               out);
    return;
  }
  long widest = 0;
  for (std::size_t n = 0; n <= table.n_max(); ++n) widest = std::max(widest, table.last_column(n));
  Grid grid{{"n"}, {}};
  for (long m = -1; m <= widest; ++m) grid.header.push_back("m=" + std::to_string(m));
  for (std::size_t n = 0; n <= table.n_max(); ++n) {
    std::vector<std::string> row{std::to_string(n)};
    for (const BigCount& value : table.row(n)) row.push_back(to_decimal(value));
    grid.rows.push_back(std::move(row));
  }
  write_grid(grid, command.format, out);
}

void cmd_profile(const CommandSpec& command, RefinementKind kind, std::ostream& out) {
  const bool rank = kind == RefinementKind::kRank;
  const RefinedTable table = rank ? compute_r_table(command.n) : compute_d_table(command.n);
  const std::size_t t_max = command.t_max.value_or(command.n);
  std::vector<std::vector<BigCount>> rows;
  for (std::size_t n = 0; n <= command.n; ++n) {
    const auto profile = rank ? r_profile(table, n) : d_profile(table, n);
    std::vector<BigCount> values;
    for (const auto& [t, count] : profile) {
      if (t <= std::min(n, t_max)) values.push_back(count);
    }
    rows.push_back(std::move(values));
  }
  if (command.format == OutputFormat::kJson) {
    json doc_rows = json::array();
    for (const auto& values : rows) doc_rows.push_back(decimals(values));
    write_json(json{{"command", command.subcommand},
                    {"kind", rank ? "rank" : "cardinality"},
                    {"n_max", command.n},
                    {"t_max", t_max},
                    {"rows", std::move(doc_rows)}},
               out);
    return;
  }
  Grid grid{{"n"}, {}};
  for (std::size_t t = 0; t <= t_max; ++t) grid.header.push_back("t=" + std::to_string(t));
  for (std::size_t n = 0; n < rows.size(); ++n) {
    std::vector<std::string> row{std::to_string(n)};
    for (const BigCount& value : rows[n]) row.push_back(to_decimal(value));
    grid.rows.push_back(std::move(row));
  }
  write_grid(grid, command.format, out);
}

void cmd_atoms(const CommandSpec& command, std::ostream& out) {
  std::vector<std::size_t> us = command.u;
  if (us.empty()) us = {1, 2, 3, 4, 5};
  if (command.cache && us.size() != 1) throw UsageError("--cache needs exactly one --u");
  std::vector<std::vector<BigCount>> columns;
  for (std::size_t u : us) {
    columns.push_back(obtain_table(HierarchySpec::with_atoms(u), command.n, command.cache).a());
  }
  if (command.format == OutputFormat::kJson) {
    json doc_columns = json::array();
    for (std::size_t i = 0; i < us.size(); ++i) {
      doc_columns.push_back(json{{"u", us[i]}, {"a", decimals(columns[i])}});
    }
    write_json(json{{"command", "atoms"}, {"n_max", command.n}, {"columns", std::move(doc_columns)}},
               out);
    return;
  }
  Grid grid{{"n"}, {}};
  for (std::size_t u : us) grid.header.push_back("u=" + std::to_string(u));
  for (std::size_t n = 0; n <= command.n; ++n) {
    std::vector<std::string> row{std::to_string(n)};
    for (const auto& column : columns) row.push_back(to_decimal(column[n]));
    grid.rows.push_back(std::move(row));
  }
  write_grid(grid, command.format, out);
}

void cmd_bounded(const CommandSpec& command, std::ostream& out) {
  const BoundFunction f = parse_bound_function(command.f, command.n);
  const HierarchySpec spec = HierarchySpec::bounded_by(f);
  const BTable table = obtain_table(spec, command.n, command.cache);
  const auto indices =
      command.skip_duplicates ? distinct_level_indices(table.a()) : all_indices(command.n);
  emit_sequence(command, spec.describe(), table.a(), indices, out);
}

void cmd_minbounded(const CommandSpec& command, std::ostream& out) {
  const BTable table =
      obtain_table(HierarchySpec::minimally_bounded(), command.n, command.cache);
  emit_sequence(command, "minbounded", table.a(), all_indices(command.n), out);
}

void cmd_constant(const CommandSpec& command, std::ostream& out) {
  if (command.terms < 3) throw UsageError("--terms must be at least 3");
  const std::vector<BigCount> c = c_sequence(compute_b_table(command.terms));
  const ConstantEstimate estimate = constant_C(c, command.digits);
  if (!estimate.value.radius_below_pow10(-static_cast<long>(command.digits))) {
    throw PrecisionError("error bound " + estimate.value.radius_string() + " exceeds 10^-" +
                         std::to_string(command.digits) + "; raise --terms");
  }
  const std::string value = estimate.value.mid_string(command.digits + 1);
  if (command.format == OutputFormat::kJson) {
    write_json(json{{"C", value},
                    {"digits", command.digits},
                    {"terms_used", estimate.terms_used},
                    {"truncation_bound", estimate.truncation_bound.upper_string()},
                    {"error_bound", estimate.value.radius_string()}},
               out);
    return;
  }
  if (command.format == OutputFormat::kCsv) {
    out << "C,digits,terms_used,truncation_bound,error_bound\n"
        << value << ',' << command.digits << ',' << estimate.terms_used << ','
        << estimate.truncation_bound.upper_string() << ',' << estimate.value.radius_string()
        << '\n';
    return;
  }
  out << value << '\n';
}

int cmd_oracle_verify(const CommandSpec& command, std::ostream& out) {
  const HierarchySpec spec = variant_from_flags(command);
  const VerifyReport report = verify_against_oracle(spec, command.n);
  std::vector<std::string> dumped;
  if (command.dump) {
    auto universe = std::make_shared<Universe>();
    const LevelSets levels = spec.kind == HierarchySpec::Kind::kCumulative
                                 ? build_cumulative(universe, command.n)
                                 : build_levels(universe, spec, command.n);
    std::ostringstream text;
    dump_level(levels, command.n, text);
    std::string line;
    std::istringstream lines(text.str());
    while (std::getline(lines, line)) dumped.push_back(line);
  }

  if (command.format == OutputFormat::kJson) {
    json checks = json::array();
    for (const Check& check : report.checks) {
      checks.push_back(json{{"name", check.name}, {"ok", check.ok}, {"detail", check.detail}});
    }
    json doc{{"spec", spec.describe()}, {"sizes", report.sizes}, {"checks", std::move(checks)}};
    if (command.dump) doc["level"] = dumped;
    write_json(doc, out);
  } else if (command.format == OutputFormat::kCsv) {
    out << "check,ok,detail\n";
    for (const Check& check : report.checks) {
      out << check.name << ',' << (check.ok ? "true" : "false") << ",\"" << check.detail << "\"\n";
    }
  } else {
    for (const Check& check : report.checks) {
      out << (check.ok ? "" : "FAIL ") << check.detail << '\n';
    }
    for (const std::string& line : dumped) out << line << '\n';
  }
  return report.ok() ? kExitOk : kExitVerificationFailure;
}

int dispatch(const CommandSpec& command, std::ostream& out) {
  const std::string& s = command.subcommand;
  if (s == "levels") cmd_levels(command, out);
  else if (s == "table") cmd_table(command, out);
  else if (s == "rank-profile") cmd_profile(command, RefinementKind::kRank, out);
  else if (s == "card-profile") cmd_profile(command, RefinementKind::kCardinality, out);
  else if (s == "atoms") cmd_atoms(command, out);
  else if (s == "bounded") cmd_bounded(command, out);
  else if (s == "minbounded") cmd_minbounded(command, out);
  else if (s == "constant") cmd_constant(command, out);
  else if (s == "oracle-verify") return cmd_oracle_verify(command, out);
  else throw UsageError("unknown subcommand '" + s + "'");
  return kExitOk;
}

}  // namespace

std::string CommandSpec::echo() const {
  std::ostringstream text;
  text << subcommand;
  if (subcommand == "constant") {
    text << " --digits " << digits << " --terms " << terms;
  } else {
    text << " --n " << n;
  }
  if (subcommand == "table" || subcommand == "oracle-verify") text << " --variant " << variant;
  for (std::size_t value : u) text << " --u " << value;
  if (subcommand == "bounded" || variant == "bounded") text << " --f " << f;
  if (skip_duplicates) text << " --skip-duplicates";
  if (t_max) text << " --t-max " << *t_max;
  if (dump) text << " --dump";
  if (cache) text << " --cache " << *cache;
  text << " --format " << format_name(format);
  return text.str();
}

int run(const CommandSpec& command, std::ostream& out, std::ostream& err) {
  const auto report = [&](const char* what) {
    err << "hfsenum: " << module_of(command.subcommand) << ": " << what << " ["
        << command.echo() << "]\n";
  };
  // Buffer so that a failing command leaves no partial artifact on `out`.
  std::ostringstream buffer;
  try {
    const int status = dispatch(command, buffer);
    out << buffer.str();
    return status;
  } catch (const ResourceError& e) {
    report(e.what());
    return kExitResourceCap;
  } catch (const CacheError& e) {
    report(e.what());
    return kExitVerificationFailure;
  } catch (const PrecisionError& e) {
    report(e.what());
    return kExitVerificationFailure;
  } catch (const std::invalid_argument& e) {
    report(e.what());
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    report(e.what());
    return kExitUsage;
  } catch (const std::exception& e) {
    report(e.what());
    return kExitVerificationFailure;
  }
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact enumeration of adjunctive hierarchies of hereditarily finite sets",
               "hfsenum"};
  app.require_subcommand(1);
  CommandSpec command;
  std::string format = "json";
  std::optional<std::size_t> t_max;
  std::optional<std::string> cache;

  const auto common = [&](CLI::App* sub, bool needs_n, bool cacheable) {
    if (needs_n) sub->add_option("--n", command.n, "Deepest level")->required();
    sub->add_option("--format", format, "json | csv | plain")
        ->check(CLI::IsMember({"json", "csv", "plain"}));
    if (cacheable) sub->add_option("--cache", cache, "Table cache file");
  };

  auto* levels = app.add_subcommand("levels", "Level sizes a_0..a_n");
  common(levels, true, true);

  auto* table = app.add_subcommand("table", "The b_{n,m} table of a variant");
  common(table, true, true);
  table->add_option("--variant", command.variant,
                    "plain | atoms | bounded | minbounded | atoms(u=K) | bounded(f=F)");
  table->add_option("--u", command.u, "Atoms for --variant atoms");
  table->add_option("--f", command.f, "Bound for --variant bounded");

  auto* rank = app.add_subcommand("rank-profile", "Counts by rank, r^t_n");
  common(rank, true, false);
  rank->add_option("--t-max", t_max, "Largest t shown");

  auto* card = app.add_subcommand("card-profile", "Counts by cardinality, d^t_n");
  common(card, true, false);
  card->add_option("--t-max", t_max, "Largest t shown");

  auto* atoms = app.add_subcommand("atoms", "Level sizes with u atoms");
  common(atoms, true, true);
  atoms->add_option("--u", command.u, "Number of atoms; repeatable (default 1..5)");

  auto* bounded = app.add_subcommand("bounded", "Level sizes of the f-bounded hierarchy");
  common(bounded, true, true);
  bounded->add_option("--f", command.f, "identity | half | sqrt | log2 | table:... | file:PATH")
      ->required();
  bounded->add_flag("--skip-duplicates", command.skip_duplicates,
                    "Show only levels that differ from their predecessor");

  auto* minbounded = app.add_subcommand("minbounded", "Level sizes of the minimally bounded hierarchy");
  common(minbounded, true, true);

  auto* constant = app.add_subcommand("constant", "Growth constant C with a certified bound");
  common(constant, false, false);
  constant->add_option("--digits", command.digits, "Decimal digits (default 30)")
      ->check(CLI::Range(1, 100000));
  constant->add_option("--terms", command.terms, "Residual terms N (default 12)");

  auto* oracle = app.add_subcommand("oracle-verify", "Compare brute-force levels with the recurrences");
  common(oracle, true, false);
  oracle->add_option("--variant", command.variant,
                     "plain | atoms | bounded | minbounded | cumulative");
  oracle->add_option("--u", command.u, "Atoms for --variant atoms");
  oracle->add_option("--f", command.f, "Bound for --variant bounded");
  oracle->add_flag("--dump", command.dump, "Print the members of level n");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int status = app.exit(e, out, err);
    return status == 0 ? kExitOk : kExitUsage;
  }

  command.subcommand = app.get_subcommands().front()->get_name();
  command.format = format == "csv" ? OutputFormat::kCsv
                   : format == "plain" ? OutputFormat::kPlain
                                       : OutputFormat::kJson;
  command.t_max = t_max;
  command.cache = cache;
  return run(command, out, err);
}

}  // namespace hfs
