#include "nichols/finite_field.hpp"

#include <sstream>

#include "nichols/errors.hpp"

namespace nichols {

namespace {

using Poly = std::vector<std::uint64_t>;  // low degree first, may have trailing zeros

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mod(Poly a, const Poly& m, std::uint64_t p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  // m is monic
  while (a.size() > dm) {
    const std::uint64_t lead = a.back();
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) a[shift + i] = (a[shift + i] + (p - lead) * m[i]) % p;
    trim(a);
  }
  return a;
}

Poly poly_mul(const Poly& a, const Poly& b, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  trim(r);
  return r;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, std::uint64_t p) { return poly_mod(poly_mul(a, b, p), m, p); }

Poly poly_powmod(Poly base, std::uint64_t e, const Poly& m, std::uint64_t p) {
  Poly r{1};
  base = poly_mod(base, m, p);
  while (e > 0) {
    if (e & 1) r = poly_mulmod(r, base, m, p);
    base = poly_mulmod(base, base, m, p);
    e >>= 1;
  }
  return r;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  std::uint64_t r = 1, e = p - 2;
  a %= p;
  while (e > 0) {
    if (e & 1) r = r * a % p;
    a = a * a % p;
    e >>= 1;
  }
  return r;
}

Poly poly_gcd(Poly a, Poly b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    // make b monic, then a mod b
    const std::uint64_t li = inv_mod(b.back(), p);
    for (auto& c : b) c = c * li % p;
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::uint64_t ipow(std::uint64_t b, std::uint32_t e) {
  std::uint64_t r = 1;
  for (std::uint32_t i = 0; i < e; ++i) {
    if (r > (~std::uint64_t{0}) / b) fail(ErrorCode::Overflow, "field size overflow");
    r *= b;
  }
  return r;
}

// Rabin's irreducibility test.
bool irreducible(const Poly& f, std::uint32_t k, std::uint64_t p) {
  const Poly x{0, 1};
  Poly xp = poly_powmod(x, ipow(p, k), f, p);
  Poly diff = xp;
  diff.resize(std::max<std::size_t>(diff.size(), 2), 0);
  diff[1] = (diff[1] + p - 1) % p;
  trim(diff);
  if (!diff.empty()) return false;
  for (auto r : prime_factors(k)) {
    Poly y = poly_powmod(x, ipow(p, k / static_cast<std::uint32_t>(r)), f, p);
    y.resize(std::max<std::size_t>(y.size(), 2), 0);
    y[1] = (y[1] + p - 1) % p;
    trim(y);
    Poly g = poly_gcd(f, y, p);
    if (g.size() != 1) return false;
  }
  return true;
}

}  // namespace

GaloisField::GaloisField(std::uint32_t p, std::uint32_t degree) : p_(p), k_(degree) {
  if (p < 2 || degree < 1) fail(ErrorCode::ValidationError, "GF(p^k) needs prime p and k >= 1");
  for (std::uint32_t d = 2; d * d <= p; ++d)
    if (p % d == 0) fail(ErrorCode::InvalidChar, "GF(p^k) needs prime p");
  size_ = ipow(p, degree);
  if (degree == 1) {
    modulus_ = {0, 1};
  } else {
    // enumerate monic polynomials of degree k in lexicographic order
    const std::uint64_t count = ipow(p, degree);
    for (std::uint64_t code = 0; code < count; ++code) {
      Poly f(degree + 1, 0);
      std::uint64_t c = code;
      for (std::uint32_t i = 0; i < degree; ++i) {
        f[i] = c % p;
        c /= p;
      }
      f[degree] = 1;
      if (f[0] == 0) continue;
      if (irreducible(f, degree, p)) {
        modulus_.assign(f.begin(), f.end());
        break;
      }
    }
    if (modulus_.empty()) fail(ErrorCode::InternalError, "no irreducible polynomial found");
  }
  group_primes_ = prime_factors(size_ - 1);
}

GaloisField GaloisField::with_roots_of_unity(std::uint32_t p, std::uint64_t n) {
  if (n % p == 0) fail(ErrorCode::TorsionDivisibleByP, "roots of unity of order divisible by p do not exist");
  std::uint64_t pk = p % n;
  std::uint32_t k = 1;
  while ((pk + n - 1) % n != 0 && n > 1) {  // p^k == 1 mod n
    pk = pk * p % n;
    ++k;
  }
  return GaloisField(p, k);
}

GaloisField::Element GaloisField::from_int(std::int64_t v) const {
  Element e(k_, 0);
  std::int64_t r = v % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  e[0] = static_cast<std::uint32_t>(r);
  return e;
}

GaloisField::Element GaloisField::add(const Element& a, const Element& b) const {
  Element r(k_);
  for (std::uint32_t i = 0; i < k_; ++i) r[i] = (a[i] + b[i]) % p_;
  return r;
}

GaloisField::Element GaloisField::sub(const Element& a, const Element& b) const {
  Element r(k_);
  for (std::uint32_t i = 0; i < k_; ++i) r[i] = (a[i] + p_ - b[i]) % p_;
  return r;
}

GaloisField::Element GaloisField::mul(const Element& a, const Element& b) const {
  Poly pa(a.begin(), a.end()), pb(b.begin(), b.end());
  Poly m(modulus_.begin(), modulus_.end());
  Poly r = poly_mulmod(pa, pb, m, p_);
  Element out(k_, 0);
  for (std::size_t i = 0; i < r.size(); ++i) out[i] = static_cast<std::uint32_t>(r[i]);
  return out;
}

GaloisField::Element GaloisField::pow(const Element& a, std::int64_t n) const {
  const std::uint64_t group = size_ - 1;
  Element base = a;
  if (n < 0) {
    base = inv(a);
    n = -n;
  }
  std::uint64_t e = static_cast<std::uint64_t>(n);
  if (!is_zero(base)) e %= group;
  Element r = one();
  while (e > 0) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

GaloisField::Element GaloisField::inv(const Element& a) const {
  if (is_zero(a)) fail(ErrorCode::ValidationError, "inverse of zero");
  return pow(a, static_cast<std::int64_t>(size_ - 2));
}

bool GaloisField::is_zero(const Element& a) const {
  for (auto c : a)
    if (c != 0) return false;
  return true;
}

std::optional<std::uint64_t> GaloisField::multiplicative_order(const Element& a) const {
  if (is_zero(a)) return std::nullopt;
  std::uint64_t n = size_ - 1;
  for (auto q : group_primes_) {
    while (n % q == 0 && pow(a, static_cast<std::int64_t>(n / q)) == one()) n /= q;
  }
  return n;
}

GaloisField::Element GaloisField::element_of_order(std::uint64_t n) const {
  if (n == 0 || (size_ - 1) % n != 0) fail(ErrorCode::ValidationError, "no element of that order in this field");
  for (std::uint64_t code = 1; code < size_; ++code) {
    Element x(k_, 0);
    std::uint64_t c = code;
    for (std::uint32_t i = 0; i < k_; ++i) {
      x[i] = static_cast<std::uint32_t>(c % p_);
      c /= p_;
    }
    Element h = pow(x, static_cast<std::int64_t>((size_ - 1) / n));
    if (multiplicative_order(h) == std::optional<std::uint64_t>{n}) return h;
  }
  fail(ErrorCode::InternalError, "element_of_order: search failed");
}

std::string GaloisField::to_string(const Element& a) const {
  if (k_ == 1) return std::to_string(a[0]);
  std::ostringstream out;
  out << '[';
  for (std::uint32_t i = 0; i < k_; ++i) out << (i ? "," : "") << a[i];
  out << ']';
  return out.str();
}

namespace {

GaloisField::Element eval_vector(const ScalarContext& ctx, const GaloisField& field, const FieldAssignment& assignment,
                                 const IntVec& exps) {
  const auto& names = ctx.generator_names();
  GaloisField::Element r = field.one();
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (exps[i] == 0) continue;
    GaloisField::Element g;
    auto it = assignment.find(names[i]);
    if (it != assignment.end()) {
      g = it->second;
    } else if (i == 0 && ctx.has_sign_generator()) {
      g = field.from_int(-1);
    } else {
      fail(ErrorCode::AssignmentViolatesRelations, "generator '" + names[i] + "' is not assigned");
    }
    if (field.is_zero(g)) fail(ErrorCode::AssignmentViolatesRelations, "generator '" + names[i] + "' assigned zero");
    r = field.mul(r, field.pow(g, exps[i]));
  }
  return r;
}

}  // namespace

void check_assignment(const ScalarContext& ctx, const GaloisField& field, const FieldAssignment& assignment) {
  if (static_cast<int>(field.characteristic()) != ctx.characteristic())
    fail(ErrorCode::AssignmentViolatesRelations, "field characteristic differs from the context");
  for (const auto& row : ctx.relation_rows()) {
    if (eval_vector(ctx, field, assignment, row) != field.one())
      fail(ErrorCode::AssignmentViolatesRelations, "assignment violates a declared order or relation");
  }
}

GaloisField::Element eval_finite_field(const ScalarContext& ctx, const GaloisField& field,
                                       const FieldAssignment& assignment, const Scalar& a) {
  check_assignment(ctx, field, assignment);
  if (!(a.context() == ctx)) fail(ErrorCode::ContextMismatch, "scalar belongs to a different context");
  return eval_vector(ctx, field, assignment, a.exponents());
}

}  // namespace nichols
