#include "nichols/braiding.hpp"

#include <algorithm>
#include <sstream>

#include "nichols/errors.hpp"

namespace nichols {

DynkinData::DynkinData(ScalarContext ctx, std::vector<Scalar> diag, std::vector<std::vector<Scalar>> edge)
    : ctx_(std::move(ctx)), diag_(std::move(diag)), edge_(std::move(edge)) {
  const std::size_t n = diag_.size();
  if (n == 0) fail(ErrorCode::ValidationError, "Dynkin data needs rank >= 1");
  if (edge_.size() != n) fail(ErrorCode::ValidationError, "edge matrix has wrong size");
  for (std::size_t i = 0; i < n; ++i) {
    if (edge_[i].size() != n) fail(ErrorCode::ValidationError, "edge matrix has wrong size");
    if (!(diag_[i].context() == ctx_)) fail(ErrorCode::ContextMismatch, "vertex label from another context");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!is_one(edge_[i][i])) fail(ErrorCode::ValidationError, "edge[i][i] must be 1");
    for (std::size_t j = 0; j < n; ++j)
      if (edge_[i][j] != edge_[j][i]) fail(ErrorCode::ValidationError, "edge matrix must be symmetric");
  }
}

DynkinData DynkinData::chain(const ScalarContext& ctx, const Scalar& v1, const Scalar& e12, const Scalar& v2,
                             const Scalar& e23, const Scalar& v3) {
  const Scalar o = ctx.one();
  return DynkinData(ctx, {v1, v2, v3}, {{o, e12, o}, {e12, o, e23}, {o, e23, o}});
}

DynkinData DynkinData::triangle(const ScalarContext& ctx, const Scalar& v1, const Scalar& v2, const Scalar& v3,
                                const Scalar& e12, const Scalar& e23, const Scalar& e13) {
  const Scalar o = ctx.one();
  return DynkinData(ctx, {v1, v2, v3}, {{o, e12, e13}, {e12, o, e23}, {e13, e23, o}});
}

DynkinData DynkinData::permuted(const std::vector<int>& perm) const {
  const int n = rank();
  if (static_cast<int>(perm.size()) != n) fail(ErrorCode::ValidationError, "permutation has wrong length");
  std::vector<Scalar> diag(n);
  std::vector<std::vector<Scalar>> edge(n, std::vector<Scalar>(n));
  for (int k = 0; k < n; ++k) {
    diag[k] = diag_[perm[k]];
    for (int l = 0; l < n; ++l) edge[k][l] = edge_[perm[k]][perm[l]];
  }
  return DynkinData(ctx_, std::move(diag), std::move(edge));
}

std::string DynkinData::key() const {
  std::string out;
  for (int i = 0; i < rank(); ++i) {
    if (i) out += ',';
    out += to_string(diag_[i]);
  }
  out += '|';
  bool first = true;
  for (int i = 0; i < rank(); ++i)
    for (int j = i + 1; j < rank(); ++j) {
      if (!first) out += ',';
      first = false;
      out += to_string(edge_[i][j]);
    }
  return out;
}

std::string DynkinData::describe() const {
  if (rank() == 3) {
    if (is_one(edge_[0][2]))
      return "chain(" + to_string(diag_[0]) + ", " + to_string(edge_[0][1]) + ", " + to_string(diag_[1]) + ", " +
             to_string(edge_[1][2]) + ", " + to_string(diag_[2]) + ")";
    return "triangle(" + to_string(diag_[0]) + ", " + to_string(diag_[1]) + ", " + to_string(diag_[2]) + "; " +
           to_string(edge_[0][1]) + ", " + to_string(edge_[1][2]) + ", " + to_string(edge_[0][2]) + ")";
  }
  return "dynkin(" + key() + ")";
}

bool operator==(const DynkinData& a, const DynkinData& b) {
  return a.ctx_ == b.ctx_ && a.diag_ == b.diag_ && a.edge_ == b.edge_;
}

DynkinData to_dynkin(const BraidingMatrix& b) {
  const int n = b.rank();
  std::vector<Scalar> diag(n);
  std::vector<std::vector<Scalar>> edge(n, std::vector<Scalar>(n));
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(b.q[i].size()) != n) fail(ErrorCode::ValidationError, "braiding matrix is not square");
    diag[i] = b.q[i][i];
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) edge[i][j] = i == j ? b.ctx.one() : b.q[i][j] * b.q[j][i];
  return DynkinData(b.ctx, std::move(diag), std::move(edge));
}

bool is_indecomposable(const DynkinData& d) {
  const int n = d.rank();
  std::vector<bool> seen(n, false);
  std::vector<int> stack{0};
  seen[0] = true;
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    for (int v = 0; v < n; ++v)
      if (!seen[v] && !is_one(d.edge(u, v))) {
        seen[v] = true;
        stack.push_back(v);
      }
  }
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

std::optional<std::int64_t> cartan_entry(const DynkinData& d, int i, int j) {
  if (i == j) fail(ErrorCode::ValidationError, "cartan_entry needs i != j");
  const Scalar& qii = d.vertex(i);
  const Scalar& e = d.edge(i, j);
  if (is_one(e)) return 0;

  std::optional<std::int64_t> m;
  if (is_one(qii)) {
    const int p = d.context().characteristic();
    if (p > 0) m = p - 1;
  } else if (auto ord = order(qii)) {
    m = *ord - 1;
  }
  if (auto m2 = discrete_log(qii, inv(e)); m2 && (!m || *m2 < *m)) m = m2;
  if (!m) return std::nullopt;
  return -*m;
}

IntMatrix cartan_matrix(const DynkinData& d) {
  const int n = d.rank();
  IntMatrix a(n, std::vector<std::int64_t>(n, 0));
  for (int i = 0; i < n; ++i) {
    a[i][i] = 2;
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      auto e = cartan_entry(d, i, j);
      if (!e)
        fail(ErrorCode::NotIFinite, "not " + std::to_string(i + 1) + "-finite with respect to vertex " +
                                        std::to_string(j + 1));
      a[i][j] = *e;
    }
  }
  return a;
}

bool i_finite(const DynkinData& d, int i) {
  for (int j = 0; j < d.rank(); ++j)
    if (j != i && !cartan_entry(d, i, j)) return false;
  return true;
}

std::string to_string(const IntMatrix& m) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < m.size(); ++i) {
    out << (i ? ", [" : "[");
    for (std::size_t j = 0; j < m[i].size(); ++j) out << (j ? ", " : "") << m[i][j];
    out << ']';
  }
  out << ']';
  return out.str();
}

}  // namespace nichols
