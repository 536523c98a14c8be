#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include "nichols/input.hpp"
#include "nichols/tables.hpp"

namespace test {

inline std::string fixture_path(const std::string& name) { return std::string(NICHOLS_FIXTURE_DIR) + "/" + name; }

inline std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

inline nichols::InputDocument fixture(const std::string& name) {
  return nichols::parse_input(read_text(fixture_path(name)));
}

inline const nichols::TableRow& table_row(int p, const std::string& id) {
  for (const auto& r : nichols::builtin_rows(p))
    if (r.id == id) return r;
  throw std::out_of_range("no table row " + id);
}

// A diagram of a table row over the canonical instance of its parameters.
inline nichols::DynkinData row_diagram(int p, const std::string& row, const std::string& diagram,
                                       std::size_t instance = 0) {
  const auto& r = table_row(p, row);
  const auto inst = nichols::instantiate(r, p);
  nichols::Relabeled v;
  v.diagram = diagram;
  return nichols::instantiate(r, inst.at(instance), v);
}

}  // namespace test
