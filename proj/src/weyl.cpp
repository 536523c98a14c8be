#include "nichols/weyl.hpp"

#include <algorithm>
#include <cstdio>
#include <deque>
#include <sstream>

#include "nichols/errors.hpp"

namespace nichols {

namespace {

std::string word_text(const std::vector<int>& word) {
  if (word.empty()) return "(empty)";
  std::string out;
  for (std::size_t k = 0; k < word.size(); ++k) out += (k ? " " : "") + std::to_string(word[k] + 1);
  return out;
}

Root simple_root(int n, int i, std::int64_t sign = 1) {
  Root r(n, 0);
  r[i] = sign;
  return r;
}

bool nonneg(const Root& r) {
  return std::all_of(r.begin(), r.end(), [](std::int64_t c) { return c >= 0; });
}

bool nonpos(const Root& r) {
  return std::all_of(r.begin(), r.end(), [](std::int64_t c) { return c <= 0; });
}

std::string root_text(const Root& r) {
  std::string out = "(";
  for (std::size_t k = 0; k < r.size(); ++k) out += (k ? "," : "") + std::to_string(r[k]);
  return out + ")";
}

std::string point_name(const CartanGraph& g, std::size_t x) { return "point " + std::to_string(x) + " [" + g.points[x].key + "]"; }

}  // namespace

std::optional<std::size_t> CartanGraph::find(const std::string& key) const {
  auto it = index_.find(key);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

CartanGraph build_cartan_graph(const DynkinData& d, const Limits& limits) {
  CartanGraph g;
  g.rank = d.rank();
  const int n = g.rank;
  if (!is_indecomposable(d)) g.warnings.push_back("input Dynkin diagram is decomposable");

  auto add_point = [&](DynkinData dd, std::vector<int> word) -> std::size_t {
    std::string key = dd.key();
    if (auto it = g.index_.find(key); it != g.index_.end()) return it->second;
    if (g.points.size() >= limits.max_points)
      fail(ErrorCode::PointLimitExceeded, "more than " + std::to_string(limits.max_points) + " points");
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j && !cartan_entry(dd, i, j))
          fail(ErrorCode::NotAdmitsAllReflections, "point reached by word " + word_text(word) + " is not " +
                                                       std::to_string(i + 1) + "-finite (i=" + std::to_string(i + 1) +
                                                       ", j=" + std::to_string(j + 1) + ")");
    IntMatrix a = cartan_matrix(dd);
    const std::size_t id = g.points.size();
    g.index_.emplace(key, id);
    g.points.push_back(Point{std::move(key), std::move(dd), std::move(a), std::move(word)});
    g.neighbor.emplace_back(n, id);
    return id;
  };

  add_point(d, {});
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    const std::size_t x = queue.front();
    queue.pop_front();
    if (limits.max_depth && g.points[x].word.size() >= *limits.max_depth) {
      g.truncated = true;
      continue;  // neighbors stay self-loops
    }
    for (int i = 0; i < n; ++i) {
      DynkinData y = reflect(g.points[x].dynkin, i);
      std::vector<int> word = g.points[x].word;
      word.push_back(i);
      const std::size_t before = g.points.size();
      const std::size_t id = add_point(std::move(y), std::move(word));
      g.neighbor[x][i] = id;
      if (id == before) queue.push_back(id);
    }
  }
  if (g.truncated) {
    g.warnings.push_back("graph truncated at depth " + std::to_string(*limits.max_depth));
  } else {
    auto bad = semi_cartan_violations(g);
    if (!bad.empty()) fail(ErrorCode::InternalError, "semi-Cartan law violated: " + bad.front());
  }
  return g;
}

std::vector<std::string> semi_cartan_violations(const CartanGraph& g) {
  std::vector<std::string> out;
  for (std::size_t x = 0; x < g.size(); ++x)
    for (int i = 0; i < g.rank; ++i) {
      const std::size_t y = g.neighbor[x][i];
      if (g.neighbor[y][i] != x)
        out.push_back(point_name(g, x) + ": r_" + std::to_string(i + 1) + " is not an involution");
      for (int j = 0; j < g.rank; ++j)
        if (g.points[x].cartan[i][j] != g.points[y].cartan[i][j])
          out.push_back(point_name(g, x) + ": a_" + std::to_string(i + 1) + std::to_string(j + 1) +
                        " changes along r_" + std::to_string(i + 1));
    }
  return out;
}

std::vector<ExchangeEdge> exchange_graph(const CartanGraph& g) {
  std::map<std::pair<std::size_t, std::size_t>, std::vector<int>> edges;
  for (std::size_t x = 0; x < g.size(); ++x)
    for (int i = 0; i < g.rank; ++i) {
      const std::size_t y = g.neighbor[x][i];
      if (y == x) continue;
      auto& labels = edges[{std::min(x, y), std::max(x, y)}];
      if (std::find(labels.begin(), labels.end(), i + 1) == labels.end()) labels.push_back(i + 1);
    }
  std::vector<ExchangeEdge> out;
  for (auto& [ab, labels] : edges) {
    std::sort(labels.begin(), labels.end());
    out.push_back(ExchangeEdge{ab.first, ab.second, labels});
  }
  return out;
}

std::string point_digest(const std::string& key) {
  std::uint64_t h = 14695981039346656037ull;  // FNV-1a
  for (unsigned char c : key) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[20];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string("p") + buf;
}

std::string to_dot(const CartanGraph& g) {
  std::ostringstream out;
  out << "graph exchange {\n";
  for (std::size_t x = 0; x < g.size(); ++x)
    out << "  " << point_digest(g.points[x].key) << " [label=\"" << g.points[x].dynkin.describe() << "\"];\n";
  for (const auto& e : exchange_graph(g)) {
    out << "  " << point_digest(g.points[e.a].key) << " -- " << point_digest(g.points[e.b].key) << " [label=\"";
    for (std::size_t k = 0; k < e.labels.size(); ++k) out << (k ? "," : "") << e.labels[k];
    out << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

std::vector<Root> RootSystemData::positive(std::size_t x) const {
  std::vector<Root> out;
  for (const auto& r : roots[x])
    if (nonneg(r)) out.push_back(r);
  return out;
}

RootSystemData real_roots(const CartanGraph& g, const Limits& limits) {
  const int n = g.rank;
  RootSystemData out;
  out.roots.assign(g.size(), {});
  for (std::size_t x = 0; x < g.size(); ++x)
    for (int i = 0; i < n; ++i) {
      out.roots[x].insert(simple_root(n, i));
      out.roots[x].insert(simple_root(n, i, -1));
    }

  // s_i^{r_i X} carries the roots of r_i(X) into those of X.
  std::vector<std::vector<IntMatrix>> s(g.size());
  for (std::size_t x = 0; x < g.size(); ++x)
    for (int i = 0; i < n; ++i) s[x].push_back(simple_reflection_matrix(g.points[g.neighbor[x][i]].cartan, i));

  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t x = 0; x < g.size(); ++x) {
      for (int i = 0; i < n; ++i) {
        const std::size_t y = g.neighbor[x][i];
        std::vector<Root> fresh;
        for (const auto& r : out.roots[y]) {
          Root img = apply_matrix(s[x][i], r);
          if (!out.roots[x].count(img)) fresh.push_back(std::move(img));
        }
        for (auto& r : fresh) {
          for (auto c : r)
            if (c > limits.max_coeff || c < -limits.max_coeff) {
              out.reason = "root coefficient exceeds " + std::to_string(limits.max_coeff);
              return out;
            }
          out.roots[x].insert(std::move(r));
          changed = true;
        }
        if (out.roots[x].size() > limits.max_roots) {
          out.reason = "more than " + std::to_string(limits.max_roots) + " roots at a point";
          return out;
        }
      }
    }
  }
  out.finite = true;
  return out;
}

namespace {

// Axiom shared by Cartan graphs and root systems: every root is sign coherent
// and rank-two periods close up.
void check_signs(const CartanGraph& g, const RootSystemData& r, AxiomReport& rep) {
  for (std::size_t x = 0; x < g.size(); ++x)
    for (const auto& root : r.roots[x])
      if (!nonneg(root) && !nonpos(root))
        rep.violations.push_back(point_name(g, x) + ": root " + root_text(root) + " is neither positive nor negative");
}

void check_periods(const CartanGraph& g, const RootSystemData& r, AxiomReport& rep, const char* axiom) {
  for (std::size_t y = 0; y < g.size(); ++y)
    for (int m = 0; m < g.rank; ++m)
      for (int k = 0; k < g.rank; ++k) {
        if (m == k) continue;
        std::size_t l = 0;
        for (const auto& root : r.roots[y]) {
          bool inside = nonneg(root);
          for (int t = 0; t < g.rank && inside; ++t)
            if (t != m && t != k && root[t] != 0) inside = false;
          if (inside) ++l;
        }
        std::size_t z = y;
        for (std::size_t step = 0; step < l; ++step) z = g.neighbor[g.neighbor[z][k]][m];
        if (z != y)
          rep.violations.push_back(point_name(g, y) + ": " + axiom + " fails for (m,n)=(" + std::to_string(m + 1) +
                                   "," + std::to_string(k + 1) + ") with l=" + std::to_string(l));
      }
}

void require_finite(const RootSystemData& r, AxiomReport& rep) {
  if (!r.finite) rep.violations.push_back("real roots not finite: " + r.reason);
}

}  // namespace

AxiomReport verify_cartan_graph_axioms(const CartanGraph& g, const RootSystemData& r) {
  AxiomReport rep;
  require_finite(r, rep);
  check_signs(g, r, rep);
  check_periods(g, r, rep, "axiom (2)");
  return rep;
}

AxiomReport verify_root_system_axioms(const CartanGraph& g, const RootSystemData& r) {
  AxiomReport rep;
  require_finite(r, rep);
  check_signs(g, r, rep);
  const int n = g.rank;
  for (std::size_t x = 0; x < g.size(); ++x) {
    for (int i = 0; i < n; ++i) {
      for (const auto& root : r.roots[x]) {
        bool multiple = true;
        for (int t = 0; t < n; ++t)
          if (t != i && root[t] != 0) multiple = false;
        if (multiple && root[i] != 1 && root[i] != -1)
          rep.violations.push_back(point_name(g, x) + ": root " + root_text(root) + " is a multiple of a simple root");
      }
      // s_i^X carries the roots of X onto those of r_i(X)
      const std::size_t y = g.neighbor[x][i];
      const IntMatrix s = simple_reflection_matrix(g.points[x].cartan, i);
      std::set<Root> image;
      for (const auto& root : r.roots[x]) image.insert(apply_matrix(s, root));
      if (image != r.roots[y])
        rep.violations.push_back(point_name(g, x) + ": s_" + std::to_string(i + 1) + " does not map roots onto r_" +
                                 std::to_string(i + 1) + "(X)");
    }
  }
  check_periods(g, r, rep, "axiom (4)");
  return rep;
}

AxiomReport verify_positive_root_bijections(const CartanGraph& g, const RootSystemData& r) {
  AxiomReport rep;
  const int n = g.rank;
  for (std::size_t x = 0; x < g.size(); ++x)
    for (int i = 0; i < n; ++i) {
      const std::size_t y = g.neighbor[x][i];
      const IntMatrix s = simple_reflection_matrix(g.points[y].cartan, i);
      const Root ai = simple_root(n, i);
      std::set<Root> image, expected;
      std::size_t count = 0;
      for (const auto& root : r.positive(y)) {
        if (root == ai) continue;
        image.insert(apply_matrix(s, root));
        ++count;
      }
      for (const auto& root : r.positive(x))
        if (root != ai) expected.insert(root);
      if (image != expected || image.size() != count)
        rep.violations.push_back(point_name(g, x) + ": s_" + std::to_string(i + 1) +
                                 " is not a bijection on positive roots other than alpha_" + std::to_string(i + 1));
    }
  return rep;
}

std::vector<Morphism> enumerate_morphisms(const CartanGraph& g, std::size_t x, std::size_t cap) {
  const int n = g.rank;
  std::set<std::pair<std::size_t, IntMatrix>> seen;
  std::vector<Morphism> out;
  std::deque<std::size_t> queue;
  auto push = [&](std::size_t source, IntMatrix m) {
    if (!seen.emplace(source, m).second) return;
    if (out.size() >= cap) fail(ErrorCode::CapExceeded, "more than " + std::to_string(cap) + " morphisms");
    out.push_back(Morphism{source, x, std::move(m)});
    queue.push_back(out.size() - 1);
  };
  push(x, identity_matrix(n));
  while (!queue.empty()) {
    const std::size_t k = queue.front();
    queue.pop_front();
    const std::size_t y = out[k].source;
    for (int i = 0; i < n; ++i) {
      const std::size_t z = g.neighbor[y][i];
      // s_i^Z : Z -> Y, so matrix * s_i^Z : Z -> X
      push(z, multiply(out[k].matrix, simple_reflection_matrix(g.points[z].cartan, i)));
    }
  }
  return out;
}

std::optional<std::uint64_t> weyl_groupoid_order(const CartanGraph& g, std::size_t cap) {
  std::uint64_t total = 0;
  for (std::size_t x = 0; x < g.size(); ++x) {
    try {
      total += enumerate_morphisms(g, x, cap).size();
    } catch (const Error& e) {
      if (e.code() == ErrorCode::CapExceeded) return std::nullopt;
      throw;
    }
  }
  return total;
}

}  // namespace nichols
