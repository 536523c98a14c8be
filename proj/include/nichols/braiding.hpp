#pragma once

// Braiding matrices of diagonal type, their Dynkin diagrams, and the
// generalized Cartan matrix read off from the vertex and edge labels.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nichols/scalars.hpp"

namespace nichols {

using IntMatrix = std::vector<std::vector<std::int64_t>>;

struct BraidingMatrix {
  ScalarContext ctx;
  std::vector<std::vector<Scalar>> q;  // q[i][j]

  int rank() const { return static_cast<int>(q.size()); }
};

// Vertices and edges of a diagonal braiding; indices are 0-based.
class DynkinData {
 public:
  DynkinData() = default;
  DynkinData(ScalarContext ctx, std::vector<Scalar> diag, std::vector<std::vector<Scalar>> edge);

  // Convenience constructors for rank 3.
  static DynkinData chain(const ScalarContext& ctx, const Scalar& v1, const Scalar& e12, const Scalar& v2,
                          const Scalar& e23, const Scalar& v3);
  static DynkinData triangle(const ScalarContext& ctx, const Scalar& v1, const Scalar& v2, const Scalar& v3,
                             const Scalar& e12, const Scalar& e23, const Scalar& e13);

  const ScalarContext& context() const { return ctx_; }
  int rank() const { return static_cast<int>(diag_.size()); }
  const Scalar& vertex(int i) const { return diag_[i]; }
  const Scalar& edge(int i, int j) const { return edge_[i][j]; }
  const std::vector<Scalar>& vertices() const { return diag_; }

  // Relabels vertices: vertex k of the result is vertex perm[k] of *this.
  DynkinData permuted(const std::vector<int>& perm) const;

  // Canonical text: "v1,v2,v3|e12,e13,e23" in scalar normal form.
  std::string key() const;
  // Human readable, e.g. "chain(q, q^-1, q, q^-1, q)".
  std::string describe() const;

  friend bool operator==(const DynkinData& a, const DynkinData& b);
  friend bool operator!=(const DynkinData& a, const DynkinData& b) { return !(a == b); }

 private:
  ScalarContext ctx_;
  std::vector<Scalar> diag_;
  std::vector<std::vector<Scalar>> edge_;
};

DynkinData to_dynkin(const BraidingMatrix& b);
bool is_indecomposable(const DynkinData& d);

// -min{m >= 0 : (m+1)_{q_ii} = 0 or q_ii^m q'_ij = 1}, or nullopt.
std::optional<std::int64_t> cartan_entry(const DynkinData& d, int i, int j);
// Throws NotIFinite naming the first offending pair.
IntMatrix cartan_matrix(const DynkinData& d);
bool i_finite(const DynkinData& d, int i);

std::string to_string(const IntMatrix& m);

}  // namespace nichols
