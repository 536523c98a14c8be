#pragma once

// The classification tables for rank three: Dynkin diagram patterns per
// characteristic, their exchange graphs, matching of concrete diagrams
// against the patterns, and a self-check of the tables against the engine.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nichols/braiding.hpp"
#include "nichols/lattice.hpp"
#include "nichols/weyl.hpp"

namespace nichols {

enum class CharClass { Two, Three, Greater };

// Throws UnsupportedChar for p = 0.
CharClass char_class(int p);
std::string to_string(CharClass c);

struct ParamSpec {
  std::string name;
  std::vector<std::int64_t> orders;    // non-empty: a primitive root of one of these orders
  std::vector<std::int64_t> excluded;  // free parameter not in G'_n for these n
};

struct PatternDiagram {
  std::string id;
  DynkinData pattern;  // over the row's pattern context
  // Smith form of the label/parameter exponent matrix, shared by all matches.
  lattice::SmithForm smith;
  // One row per equation: the labels v1 v2 v3 e12 e23 e13, then the row's
  // relations (which must evaluate to 1).
  IntRows exponents;
  std::vector<int> signs;
};

// A diagram with its vertices moved: vertex v of the diagram sits at
// position tau[v] (1-based).
struct Relabeled {
  std::array<int, 3> tau{1, 2, 3};
  std::string diagram;

  bool identity() const { return tau == std::array<int, 3>{1, 2, 3}; }
  std::string name() const;
};

struct ExchangeSpec {
  Relabeled a, b;
  int label;
  std::optional<int> printed;  // label as printed when it differs
};

struct TableRow {
  CharClass char_class;
  std::string id;
  int heck_row = 0;
  std::vector<ParamSpec> params;
  std::vector<std::string> relations;
  std::vector<std::vector<std::string>> distinct;
  ScalarContext pattern_ctx;
  std::vector<PatternDiagram> diagrams;
  std::vector<Relabeled> vertices;
  std::vector<ExchangeSpec> edges;
  std::vector<std::string> errata;

  const PatternDiagram& diagram(const std::string& id) const;
};

// Parses the table data format; throws TableDataError naming the line.
std::vector<TableRow> parse_tables(std::string_view text);
std::string_view builtin_table_text();
const std::vector<TableRow>& builtin_rows(int p);

struct Match {
  std::string row_id;
  std::string diagram_id;
  // Pattern vertex k sits at input vertex permutation[k] (0-based).
  std::array<int, 3> permutation;
  std::vector<std::pair<std::string, Scalar>> assignment;

  std::string describe() const;
};

// All matches against the rows for the characteristic of d.
std::vector<Match> match_diagram(const DynkinData& d);
std::vector<Match> match_row(const TableRow& row, const DynkinData& d);

struct ClassifyResult {
  std::vector<Match> matches;
  bool finite = false;
  std::string reason;  // why the orbit or root closure is not finite
  std::size_t points = 0;
  std::optional<std::size_t> positive_roots;
  std::vector<int> heck_rows;
};

// Throws UnsupportedChar, RankMismatch, DecomposableInput, and
// InternalTableMismatch when the tables and the root closure disagree.
ClassifyResult classify(const DynkinData& d, const Limits& limits = {});
bool is_finite_dimensional_nichols(const DynkinData& d, const Limits& limits = {});

// A table row realised over concrete generators.
struct RowInstance {
  std::string label;  // e.g. "zeta order 6"; empty when there is no choice
  ScalarContext ctx;
  std::vector<Scalar> params;
};

std::vector<RowInstance> instantiate(const TableRow& row, int p);
DynkinData instantiate(const TableRow& row, const RowInstance& inst, const Relabeled& v);

struct RowReport {
  std::string row_id;
  std::string instance;
  std::size_t points = 0;
  std::size_t positive_roots = 0;
  std::string good_point;
  std::vector<std::string> failures;
  std::vector<std::string> notes;

  bool ok() const { return failures.empty(); }
};

struct TablesReport {
  int p = 0;
  std::vector<RowReport> instances;

  std::size_t row_count() const;
  std::size_t rows_passed() const;
  bool ok() const;
};

TablesReport verify_all_tables(int p, const Limits& limits = {});

}  // namespace nichols
