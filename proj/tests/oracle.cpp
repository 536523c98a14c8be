#include "oracle.hpp"

#include <deque>
#include <numeric>
#include <stdexcept>

namespace oracle {

using nichols::GaloisField;
using nichols::Scalar;

namespace {

template <class T>
const T& pick(std::mt19937_64& rng, const std::vector<T>& v) {
  return v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng)];
}

int uniform(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

}  // namespace

constexpr std::uint64_t kMaxFieldSize = std::uint64_t{1} << 20;

// size of the smallest extension of F_p containing the n-th roots of unity
std::uint64_t field_size(int p, std::int64_t n) {
  std::uint64_t q = static_cast<std::uint64_t>(p);
  while ((q - 1) % static_cast<std::uint64_t>(n) != 0) {
    if (q > kMaxFieldSize) return q;
    q *= static_cast<std::uint64_t>(p);
  }
  return q;
}

RandomContext random_context(std::mt19937_64& rng, const std::vector<int>& ps, int max_order, int embeddings) {
  RandomContext rc;
  rc.p = pick(rng, ps);
  std::vector<int> allowed;
  for (int n = 2; n <= max_order; ++n)
    if (n % rc.p != 0) allowed.push_back(n);
  std::vector<int> orders;
  do {
    // redraw until the splitting field stays small enough for the linear searches below
    const int count = uniform(rng, 1, 2);
    orders = {pick(rng, allowed)};
    if (count == 2) {
      std::vector<int> coprime;
      for (int n : allowed)
        if (std::gcd(n, orders[0]) == 1) coprime.push_back(n);
      if (!coprime.empty()) orders.push_back(pick(rng, coprime));
    }
    rc.group_order = rc.p == 2 ? 1 : 2;
    for (int n : orders) rc.group_order = std::lcm(rc.group_order, static_cast<std::int64_t>(n));
  } while (field_size(rc.p, rc.group_order) > kMaxFieldSize);
  const char* names[] = {"z", "w"};
  for (std::size_t k = 0; k < orders.size(); ++k) rc.generators.push_back({names[k], orders[k]});
  rc.ctx = nichols::ScalarContext::create(rc.p, rc.generators);
  if (rc.ctx.torsion_order() != rc.group_order)
    throw std::logic_error("scalar group and its embedding have different orders");

  rc.field = GaloisField::with_roots_of_unity(static_cast<std::uint32_t>(rc.p), static_cast<std::uint64_t>(rc.group_order));
  const Elem w = rc.field.element_of_order(static_cast<std::uint64_t>(rc.group_order));
  for (int e = 0; e < embeddings; ++e) {
    nichols::FieldAssignment a;
    for (std::size_t k = 0; k < orders.size(); ++k) {
      const int n = orders[k];
      int u;
      do u = uniform(rng, 1, n - 1);
      while (std::gcd(u, n) != 1);
      a[names[k]] = rc.field.pow(w, rc.group_order / n * u);
    }
    rc.embeddings.push_back(std::move(a));
  }
  return rc;
}

Scalar random_scalar(std::mt19937_64& rng, const nichols::ScalarContext& ctx, const RandomContext& rc) {
  Scalar s = ctx.one();
  for (const auto& g : rc.generators) s = s * pow(ctx.generator(g.name), uniform(rng, 0, static_cast<int>(*g.order) - 1));
  if (ctx.has_sign_generator() && uniform(rng, 0, 1)) s = s * ctx.minus_one();
  return s;
}

nichols::DynkinData random_dynkin(std::mt19937_64& rng, const RandomContext& rc, double edge_probability) {
  std::bernoulli_distribution has_edge(edge_probability);
  std::vector<Scalar> v;
  for (int k = 0; k < 3; ++k) v.push_back(random_scalar(rng, rc.ctx, rc));
  std::vector<std::vector<Scalar>> e(3, std::vector<Scalar>(3, rc.ctx.one()));
  for (int a = 0; a < 3; ++a)
    for (int b = a + 1; b < 3; ++b)
      if (has_edge(rng)) e[a][b] = e[b][a] = random_scalar(rng, rc.ctx, rc);
  return nichols::DynkinData(rc.ctx, v, e);
}

ConcreteDynkin evaluate(const GaloisField& f, const nichols::FieldAssignment& a, const nichols::DynkinData& d) {
  ConcreteDynkin c;
  const int n = d.rank();
  c.edge.assign(n, std::vector<Elem>(n));
  for (int i = 0; i < n; ++i) {
    c.vertex.push_back(nichols::eval_finite_field(d.context(), f, a, d.vertex(i)));
    for (int j = 0; j < n; ++j) c.edge[i][j] = nichols::eval_finite_field(d.context(), f, a, d.edge(i, j));
  }
  return c;
}

std::optional<std::int64_t> cartan_entry(const GaloisField& f, const Elem& q, const Elem& e) {
  Elem sum = f.zero();
  Elem power = f.one();
  for (std::uint64_t m = 0; m <= f.size(); ++m) {
    sum = f.add(sum, power);
    if (f.is_zero(sum) || f.mul(power, e) == f.one()) return -static_cast<std::int64_t>(m);
    power = f.mul(power, q);
  }
  return std::nullopt;
}

std::optional<IntMatrix> cartan_matrix(const GaloisField& f, const ConcreteDynkin& d) {
  const std::size_t n = d.vertex.size();
  IntMatrix a(n, std::vector<std::int64_t>(n, 2));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      auto m = cartan_entry(f, d.vertex[i], d.edge[i][j]);
      if (!m) return std::nullopt;
      a[i][j] = *m;
    }
  return a;
}

ConcreteDynkin reflect(const GaloisField& f, const ConcreteDynkin& d, int i, const std::vector<std::int64_t>& row_i) {
  const int n = static_cast<int>(d.vertex.size());
  std::vector<std::vector<std::int64_t>> beta(n, std::vector<std::int64_t>(n, 0));
  for (int j = 0; j < n; ++j) {
    if (j == i) {
      beta[j][i] = -1;
    } else {
      beta[j][j] = 1;
      beta[j][i] = -row_i[j];
    }
  }
  auto pair = [&](const std::vector<std::int64_t>& b, const std::vector<std::int64_t>& c) {
    Elem r = f.one();
    for (int u = 0; u < n; ++u) {
      r = f.mul(r, f.pow(d.vertex[u], 2 * b[u] * c[u]));
      for (int w = u + 1; w < n; ++w) r = f.mul(r, f.pow(d.edge[u][w], b[u] * c[w] + b[w] * c[u]));
    }
    return r;
  };
  ConcreteDynkin out;
  out.edge.assign(n, std::vector<Elem>(n, f.one()));
  for (int j = 0; j < n; ++j) {
    Elem v = f.one();
    const auto& b = beta[j];
    for (int u = 0; u < n; ++u) {
      v = f.mul(v, f.pow(d.vertex[u], b[u] * b[u]));
      for (int w = u + 1; w < n; ++w) v = f.mul(v, f.pow(d.edge[u][w], b[u] * b[w]));
    }
    out.vertex.push_back(v);
    for (int k = 0; k < n; ++k)
      if (k != j) out.edge[j][k] = pair(beta[j], beta[k]);
  }
  return out;
}

bool same(const ConcreteDynkin& a, const ConcreteDynkin& b) { return a.vertex == b.vertex && a.edge == b.edge; }

namespace {

std::vector<std::int64_t> apply_s(const IntMatrix& a, int i, std::vector<std::int64_t> v) {
  std::int64_t c = 0;
  for (std::size_t j = 0; j < v.size(); ++j) c += a[i][j] * v[j];
  v[i] -= c;
  return v;
}

}  // namespace

std::set<std::vector<std::int64_t>> weyl_roots(const IntMatrix& a, std::size_t limit) {
  const int n = static_cast<int>(a.size());
  std::set<std::vector<std::int64_t>> seen;
  std::deque<std::vector<std::int64_t>> todo;
  for (int i = 0; i < n; ++i) {
    std::vector<std::int64_t> e(n, 0);
    e[i] = 1;
    if (seen.insert(e).second) todo.push_back(e);
  }
  while (!todo.empty()) {
    auto v = todo.front();
    todo.pop_front();
    for (int i = 0; i < n; ++i) {
      auto w = apply_s(a, i, v);
      if (seen.insert(w).second) {
        if (seen.size() > limit) throw std::runtime_error("root limit");
        todo.push_back(w);
      }
    }
  }
  return seen;
}

std::size_t weyl_group_order(const IntMatrix& a, std::size_t limit) {
  const int n = static_cast<int>(a.size());
  // an element is stored as the images of the simple roots
  using Element = std::vector<std::vector<std::int64_t>>;
  Element id(n, std::vector<std::int64_t>(n, 0));
  for (int i = 0; i < n; ++i) id[i][i] = 1;
  std::set<Element> seen{id};
  std::deque<Element> todo{id};
  while (!todo.empty()) {
    Element g = todo.front();
    todo.pop_front();
    for (int i = 0; i < n; ++i) {
      Element h;
      for (const auto& col : g) h.push_back(apply_s(a, i, col));
      if (seen.insert(h).second) {
        if (seen.size() > limit) throw std::runtime_error("group limit");
        todo.push_back(std::move(h));
      }
    }
  }
  return seen.size();
}

}  // namespace oracle
