#pragma once

// Good A3 / B3 / C3 neighborhoods of points in a rank three Cartan graph.

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "nichols/weyl.hpp"

namespace nichols {

enum class NeighborhoodKind { A3, B3, C3 };

std::string to_string(NeighborhoodKind k);

struct NeighborhoodWitness {
  NeighborhoodKind kind;
  // Relabeled vertex k is original vertex permutation[k] (0-based).
  std::array<int, 3> permutation;
  // (a, b, c, d) for A3; for B3 and C3 only data[0] = a is used.
  std::array<int, 4> data{};

  std::string describe() const;
};

// All three throw RankMismatch unless the graph has rank 3.
std::optional<NeighborhoodWitness> good_A3(const CartanGraph& g, std::size_t x);
std::optional<NeighborhoodWitness> good_B3(const CartanGraph& g, std::size_t x);
std::optional<NeighborhoodWitness> good_C3(const CartanGraph& g, std::size_t x);

// Every witness at x, ordered by kind then permutation.
std::vector<NeighborhoodWitness> all_witnesses(const CartanGraph& g, std::size_t x);

struct GoodPoint {
  std::size_t point;
  NeighborhoodWitness witness;
  std::size_t multiplicity;  // number of witnesses over the whole graph
};

// First point in BFS order with a witness.
std::optional<GoodPoint> find_good_point(const CartanGraph& g);

}  // namespace nichols
