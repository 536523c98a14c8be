#pragma once

// Multiplicative scalars q in k* modelled as elements of a finitely generated
// abelian group Z^s / L. Generic parameters are free generators, roots of
// unity are generators of finite order, and "-1" is a distinguished element
// of order 2 (the identity when p = 2).

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nichols/lattice.hpp"

namespace nichols {

using lattice::IntRows;
using lattice::IntVec;

// nullopt means infinite order.
using Order = std::optional<std::int64_t>;

struct GeneratorSpec {
  std::string name;
  Order order;  // declared order; nullopt for a free generator
};

namespace detail {
struct ContextData;
}

class Scalar;

class ScalarContext {
 public:
  ScalarContext() = default;

  // Throws InvalidChar, BadRelation, TorsionDivisibleByP, NonCyclicTorsion.
  static ScalarContext create(int p, const std::vector<GeneratorSpec>& generators,
                              const std::vector<std::string>& relations = {});

  bool valid() const { return static_cast<bool>(data_); }
  int characteristic() const;

  // Generator names in internal order. When p != 2 the first entry is the
  // sign generator, spelled "-1".
  const std::vector<std::string>& generator_names() const;
  const std::vector<GeneratorSpec>& declared_generators() const;
  bool has_sign_generator() const;

  // Rows spanning the relation lattice L (order rows included).
  const IntRows& relation_rows() const;

  Scalar one() const;
  Scalar minus_one() const;
  Scalar generator(std::string_view name) const;
  Scalar from_exponents(IntVec exponents) const;

  // Scalar expression grammar:
  //   expr   := factor ('*' factor)*
  //   factor := '-'? atom
  //   atom   := '1' | ident ('^' '-'? digits)?
  // Throws ParseError (message carries the column).
  Scalar parse(std::string_view text) const;

  // Structure of Z^s/L as Z/d_0 x ... x Z^f. invariants()[k] is the modulus
  // of coordinate k, or 0 for a free coordinate.
  const std::vector<std::int64_t>& invariants() const;
  IntVec coordinates(const Scalar& a) const;
  Scalar from_coordinates(const IntVec& coords) const;
  // Order of the (cyclic) torsion subgroup; 1 when torsion-free.
  std::int64_t torsion_order() const;

  friend bool operator==(const ScalarContext& a, const ScalarContext& b) { return a.data_ == b.data_; }

 private:
  friend class Scalar;
  explicit ScalarContext(std::shared_ptr<const detail::ContextData> data) : data_(std::move(data)) {}
  std::shared_ptr<const detail::ContextData> data_;
};

class Scalar {
 public:
  Scalar() = default;

  ScalarContext context() const { return ScalarContext(ctx_); }
  // Canonical exponent vector: equal scalars have identical vectors.
  const IntVec& exponents() const { return exps_; }

  friend Scalar operator*(const Scalar& a, const Scalar& b);
  Scalar& operator*=(const Scalar& b) { return *this = *this * b; }
  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
  // Arbitrary but stable total order, for use as a map key.
  friend bool operator<(const Scalar& a, const Scalar& b);

  std::size_t hash() const;

 private:
  friend class ScalarContext;
  Scalar(std::shared_ptr<const detail::ContextData> ctx, IntVec exps) : ctx_(std::move(ctx)), exps_(std::move(exps)) {}
  std::shared_ptr<const detail::ContextData> ctx_;
  IntVec exps_;

  friend Scalar inv(const Scalar& a);
  friend Scalar pow(const Scalar& a, std::int64_t n);
};

Scalar mul(const Scalar& a, const Scalar& b);
Scalar inv(const Scalar& a);
Scalar pow(const Scalar& a, std::int64_t n);
inline Scalar one(const ScalarContext& ctx) { return ctx.one(); }
inline Scalar minus_one(const ScalarContext& ctx) { return ctx.minus_one(); }

bool is_one(const Scalar& a);
Order order(const Scalar& a);
// Membership in G'_n, the primitive n-th roots of unity.
bool in_primitive_roots(const Scalar& a, std::int64_t n);
// (n)_q = 1 + q + ... + q^(n-1) == 0 in characteristic p.
bool qnum_is_zero(const Scalar& q, std::int64_t n);
// Least m >= 0 with base^m == target.
std::optional<std::int64_t> discrete_log(const Scalar& base, const Scalar& target);

std::string to_string(const Scalar& a);

struct ScalarHash {
  std::size_t operator()(const Scalar& a) const { return a.hash(); }
};

}  // namespace nichols
