#pragma once

// Cartan graph of a braiding: the orbit of its Dynkin diagram under all
// reflections, together with real roots and groupoid morphisms.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "nichols/braiding.hpp"
#include "nichols/reflections.hpp"

namespace nichols {

using Root = std::vector<std::int64_t>;

struct Limits {
  std::size_t max_points = 256;
  std::size_t max_roots = 256;
  std::int64_t max_coeff = 100;
  std::size_t morphism_cap = 100000;
  // Stop expanding points at this BFS depth; unexplored reflections become
  // self-loops and the graph is flagged as truncated. Test fixture only.
  std::optional<std::size_t> max_depth;
};

struct Point {
  std::string key;
  DynkinData dynkin;
  IntMatrix cartan;
  std::vector<int> word;  // 0-based reflection indices leading from the base
};

struct CartanGraph {
  int rank = 0;
  std::vector<Point> points;
  std::vector<std::vector<std::size_t>> neighbor;  // neighbor[x][i] = r_i(x)
  std::size_t base = 0;
  bool truncated = false;
  std::vector<std::string> warnings;

  std::optional<std::size_t> find(const std::string& key) const;
  std::size_t size() const { return points.size(); }

 private:
  friend CartanGraph build_cartan_graph(const DynkinData&, const Limits&);
  std::map<std::string, std::size_t> index_;
};

// Throws NotAdmitsAllReflections, PointLimitExceeded.
CartanGraph build_cartan_graph(const DynkinData& d, const Limits& limits = {});

// Pairs (i, j) with a^X_ij != a^{r_i X}_ij or r_i r_i X != X.
std::vector<std::string> semi_cartan_violations(const CartanGraph& g);

struct ExchangeEdge {
  std::size_t a, b;  // a < b
  std::vector<int> labels;  // 1-based, ascending
};

std::vector<ExchangeEdge> exchange_graph(const CartanGraph& g);

// Vertex names are "p" + 16 hex digits of a digest of the point key.
std::string point_digest(const std::string& key);
std::string to_dot(const CartanGraph& g);

struct RootSystemData {
  bool finite = false;
  std::string reason;  // why the closure stopped when not finite
  std::vector<std::set<Root>> roots;  // per point; partial when not finite

  std::vector<Root> positive(std::size_t x) const;
};

RootSystemData real_roots(const CartanGraph& g, const Limits& limits = {});

struct AxiomReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

AxiomReport verify_cartan_graph_axioms(const CartanGraph& g, const RootSystemData& r);
AxiomReport verify_root_system_axioms(const CartanGraph& g, const RootSystemData& r);
// s_i maps the positive roots at r_i(X) other than alpha_i onto those at X.
AxiomReport verify_positive_root_bijections(const CartanGraph& g, const RootSystemData& r);

struct Morphism {
  std::size_t source;
  std::size_t target;
  IntMatrix matrix;
};

// All morphisms into x; throws CapExceeded.
std::vector<Morphism> enumerate_morphisms(const CartanGraph& g, std::size_t x, std::size_t cap = 100000);

// Total number of morphisms, nullopt when enumeration exceeds the cap.
std::optional<std::uint64_t> weyl_groupoid_order(const CartanGraph& g, std::size_t cap = 100000);

}  // namespace nichols
