#include "nichols/reflections.hpp"

#include <vector>

#include "nichols/errors.hpp"
#include "nichols/lattice.hpp"

namespace nichols {

namespace {

// Which of the three label cases hold for the pair (i, j).
struct CaseSet {
  bool unit = false;       // q_ii = 1
  bool edge_power = false; // q'_ij = q_ii^{a_ij}
  bool root = false;       // q_ii in G'_{1 - a_ij}
};

CaseSet cases_for(const DynkinData& d, int i, int j, std::int64_t a) {
  const Scalar& qii = d.vertex(i);
  CaseSet c;
  c.unit = is_one(qii);
  c.edge_power = d.edge(i, j) == pow(qii, a);
  c.root = in_primitive_roots(qii, 1 - a);
  return c;
}

void require_agreement(std::vector<Scalar>& values, const char* what) {
  if (values.empty()) fail(ErrorCode::CaseExhaustion, std::string("no reflection case applies to ") + what);
  for (const auto& v : values)
    if (v != values.front())
      fail(ErrorCode::InternalError, std::string("reflection cases disagree for ") + what);
}

}  // namespace

DynkinData reflect(const DynkinData& d, int i, ReflectMode mode) {
  const int n = d.rank();
  if (i < 0 || i >= n) fail(ErrorCode::ValidationError, "reflection index out of range");
  const ScalarContext& ctx = d.context();
  const Scalar& qii = d.vertex(i);

  std::vector<std::int64_t> a(n, 2);
  std::vector<CaseSet> cases(n);
  for (int j = 0; j < n; ++j) {
    if (j == i) continue;
    auto e = cartan_entry(d, i, j);
    if (!e) fail(ErrorCode::NotIFinite, "not " + std::to_string(i + 1) + "-finite with respect to vertex " + std::to_string(j + 1));
    a[j] = *e;
    cases[j] = cases_for(d, i, j, a[j]);
  }
  const bool verify = mode == ReflectMode::Verify;

  std::vector<Scalar> diag(n);
  std::vector<std::vector<Scalar>> edge(n, std::vector<Scalar>(n, ctx.one()));
  diag[i] = qii;

  for (int j = 0; j < n; ++j) {
    if (j == i) continue;
    const Scalar& e = d.edge(i, j);
    const CaseSet& c = cases[j];
    std::vector<Scalar> vs, es;
    if (c.unit) {
      vs.push_back(d.vertex(j) * pow(e, -a[j]));
      es.push_back(inv(e));
    }
    if (c.edge_power && (verify || vs.empty())) {
      vs.push_back(d.vertex(j));
      es.push_back(e);
    }
    if (c.root && (verify || vs.empty())) {
      vs.push_back(qii * d.vertex(j) * pow(e, -a[j]));
      es.push_back(pow(qii, 2) * inv(e));
    }
    require_agreement(vs, "a vertex label");
    require_agreement(es, "an edge at the reflected vertex");
    diag[j] = vs.front();
    edge[i][j] = edge[j][i] = es.front();
  }

  for (int j = 0; j < n; ++j) {
    for (int k = j + 1; k < n; ++k) {
      if (j == i || k == i) continue;
      const Scalar& ejk = d.edge(j, k);
      const Scalar& eij = d.edge(i, j);
      const Scalar& eik = d.edge(i, k);
      const CaseSet& cj = cases[j];
      const CaseSet& ck = cases[k];
      std::vector<Scalar> vals;
      auto want = [&] { return verify || vals.empty(); };
      if (cj.unit && ck.unit) vals.push_back(ejk * pow(eij, -a[k]) * pow(eik, -a[j]));
      if (want() && cj.edge_power && ck.edge_power) vals.push_back(ejk);
      if (want() && cj.edge_power && ck.root) vals.push_back(ejk * pow(eik * inv(qii), -a[j]));
      if (want() && cj.root && ck.edge_power) vals.push_back(ejk * pow(eij * inv(qii), -a[k]));
      if (want() && cj.root && ck.root) vals.push_back(ejk * pow(qii, 2) * pow(eij * eik, -a[j]));
      require_agreement(vals, "an edge away from the reflected vertex");
      edge[j][k] = edge[k][j] = vals.front();
    }
  }
  return DynkinData(ctx, std::move(diag), std::move(edge));
}

IntMatrix identity_matrix(int n) {
  IntMatrix m(n, std::vector<std::int64_t>(n, 0));
  for (int k = 0; k < n; ++k) m[k][k] = 1;
  return m;
}

IntMatrix simple_reflection_matrix(const IntMatrix& a, int i) {
  const int n = static_cast<int>(a.size());
  IntMatrix s = identity_matrix(n);
  for (int j = 0; j < n; ++j) s[i][j] = j == i ? -1 : -a[i][j];
  return s;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  const std::size_t n = a.size(), m = b.empty() ? 0 : b[0].size(), k = b.size();
  IntMatrix r(n, std::vector<std::int64_t>(m, 0));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < m; ++y) {
      std::int64_t acc = 0;
      for (std::size_t z = 0; z < k; ++z) acc = lattice::checked_add(acc, lattice::checked_mul(a[x][z], b[z][y]));
      r[x][y] = acc;
    }
  return r;
}

std::vector<std::int64_t> apply_matrix(const IntMatrix& m, const std::vector<std::int64_t>& v) {
  std::vector<std::int64_t> r(m.size(), 0);
  for (std::size_t x = 0; x < m.size(); ++x)
    for (std::size_t z = 0; z < v.size(); ++z) r[x] = lattice::checked_add(r[x], lattice::checked_mul(m[x][z], v[z]));
  return r;
}

}  // namespace nichols
