#pragma once

// Concrete arithmetic in GF(p^k), used to realise symbolic scalars and as an
// independent oracle for the symbolic engine.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nichols/scalars.hpp"

namespace nichols {

class GaloisField {
 public:
  // Coefficients of a polynomial in the generator of the extension, low
  // degree first, each in [0, p).
  using Element = std::vector<std::uint32_t>;

  // GF(p^k) with the lexicographically first monic irreducible modulus.
  GaloisField(std::uint32_t p, std::uint32_t degree);

  // Smallest extension of GF(p) containing the n-th roots of unity.
  static GaloisField with_roots_of_unity(std::uint32_t p, std::uint64_t n);

  std::uint32_t characteristic() const { return p_; }
  std::uint32_t degree() const { return k_; }
  std::uint64_t size() const { return size_; }

  Element zero() const { return Element(k_, 0); }
  Element one() const { return from_int(1); }
  Element from_int(std::int64_t v) const;

  Element add(const Element& a, const Element& b) const;
  Element sub(const Element& a, const Element& b) const;
  Element mul(const Element& a, const Element& b) const;
  Element pow(const Element& a, std::int64_t n) const;
  Element inv(const Element& a) const;
  bool is_zero(const Element& a) const;

  // Multiplicative order; nullopt for zero.
  std::optional<std::uint64_t> multiplicative_order(const Element& a) const;
  // Some element of exact multiplicative order n (n must divide size()-1).
  Element element_of_order(std::uint64_t n) const;

  std::string to_string(const Element& a) const;

 private:
  std::uint32_t p_;
  std::uint32_t k_;
  std::uint64_t size_;
  std::vector<std::uint32_t> modulus_;  // monic, degree k_, low degree first
  std::vector<std::uint64_t> group_primes_;
};

using FieldAssignment = std::map<std::string, GaloisField::Element>;

// Homomorphic evaluation of a scalar under an assignment of the declared
// generators. The sign generator maps to -1 unless assigned explicitly.
// Throws AssignmentViolatesRelations when some relation of the context does
// not hold for the assigned values.
GaloisField::Element eval_finite_field(const ScalarContext& ctx, const GaloisField& field,
                                       const FieldAssignment& assignment, const Scalar& a);

// Validates an assignment against the relation lattice without evaluating.
void check_assignment(const ScalarContext& ctx, const GaloisField& field, const FieldAssignment& assignment);

}  // namespace nichols
