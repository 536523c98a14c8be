#pragma once

// Integer lattice normal forms. Elimination runs in arbitrary precision
// (boost::multiprecision::cpp_int); results are handed back as 64-bit
// integers and Error{Overflow} is thrown when they do not fit.

#include <cstddef>
#include <cstdint>
#include <vector>

namespace nichols::lattice {

using IntVec = std::vector<std::int64_t>;
using IntRows = std::vector<IntVec>;

// Row echelon basis of the lattice spanned by a set of row vectors, with
// pivots taken from the last column towards the first. Every pivot entry is
// positive and rows[k] is zero in every column processed before pivots[k].
struct EchelonBasis {
  std::size_t cols = 0;
  IntRows rows;
  std::vector<std::size_t> pivots;
};

EchelonBasis echelon_basis(const IntRows& generators, std::size_t cols);

// Canonical coset representative of x modulo the lattice: each pivot
// coordinate is brought into the symmetric residue range (-d/2, d/2].
IntVec reduce(const EchelonBasis& basis, IntVec x);

// U * A * V = diag(d_0, d_1, ...) with U, V unimodular and d_i | d_{i+1}
// among the nonzero entries. diag has length cols; entries past the rank
// are 0.
struct SmithForm {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::int64_t> diag;
  std::size_t rank = 0;
  IntRows U;     // rows x rows
  IntRows V;     // cols x cols
  IntRows Vinv;  // cols x cols
};

SmithForm smith_form(const IntRows& a, std::size_t cols);

// Integer helpers shared by the scalar layer.
std::int64_t floor_mod(std::int64_t a, std::int64_t m);
std::int64_t symmetric_mod(std::int64_t a, std::int64_t m);
std::int64_t gcd(std::int64_t a, std::int64_t b);
std::int64_t lcm(std::int64_t a, std::int64_t b);

// Solves x == r_k (mod m_k) for all k. Returns {x, M} with 0 <= x < M, or
// M == 0 when the system is inconsistent.
struct Congruence {
  std::int64_t residue = 0;
  std::int64_t modulus = 1;
};
Congruence combine(const std::vector<Congruence>& system);

// Checked 64-bit arithmetic (throws Error{Overflow}).
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

}  // namespace nichols::lattice
