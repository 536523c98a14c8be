#pragma once

// Input documents for the command line tool. The format is a small subset of
// TOML:
//
//   p = 5
//   generators = ["q", "zeta:3"]      # name, or name:order
//   relations = ["q*zeta^-1"]         # optional, each word equals 1
//   matrix = [["q", "q^-1", "1"],     # full braiding matrix q_ij ...
//             ["1", "q", "q^-1"],
//             ["1", "1", "q"]]
//
//   [dynkin]                          # ... or the Dynkin diagram directly
//   vertices = ["-1", "q", "-1"]
//   edges = [[1, 2, "q^-1"], [2, 3, "q^-1"]]
//
// Array entries may be quoted strings or bare scalar expressions.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nichols/braiding.hpp"
#include "nichols/scalars.hpp"

namespace nichols {

struct InputDocument {
  int p = 0;
  std::vector<GeneratorSpec> generators;
  std::vector<std::string> relations;
  ScalarContext ctx;
  std::optional<BraidingMatrix> matrix;  // set when the input gave q_ij
  DynkinData dynkin;

  int rank() const { return dynkin.rank(); }
};

// Throws SyntaxError ("line L, column C: ...") for malformed text and
// ValidationError or the engine's own code (InvalidChar,
// TorsionDivisibleByP, ...) with the offending line for semantic problems.
InputDocument parse_input(std::string_view text);

}  // namespace nichols
