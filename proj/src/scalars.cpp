#include "nichols/scalars.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>

#include "nichols/errors.hpp"

namespace nichols {

namespace detail {

struct ContextData {
  int p = 0;
  std::vector<GeneratorSpec> declared;
  std::vector<std::string> names;  // internal order; names[0] == "-1" when sign
  bool sign = false;
  IntRows relations;
  lattice::EchelonBasis basis;
  IntRows V;
  IntRows Vinv;
  std::vector<std::size_t> kept;
  std::vector<std::int64_t> invariants;
  std::int64_t torsion = 1;
  IntVec minus_one;
};

}  // namespace detail

namespace {

using detail::ContextData;

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; static_cast<long>(d) * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

// Parses a scalar word into an unreduced exponent vector.
class WordParser {
 public:
  WordParser(const std::vector<std::string>& names, bool sign, std::string_view text)
      : names_(names), sign_(sign), text_(text) {}

  IntVec parse() {
    IntVec exps(names_.size(), 0);
    skip_ws();
    if (pos_ >= text_.size()) error("empty expression");
    factor(exps);
    skip_ws();
    while (pos_ < text_.size()) {
      if (text_[pos_] != '*') error(std::string("expected '*', found '") + text_[pos_] + "'");
      ++pos_;
      factor(exps);
      skip_ws();
    }
    return exps;
  }

 private:
  [[noreturn]] void error(const std::string& what) const {
    fail(ErrorCode::ParseError, "column " + std::to_string(pos_ + 1) + ": " + what + " in '" + std::string(text_) + "'");
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  void factor(IntVec& exps) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == '-') {
      ++pos_;
      if (sign_) exps[0] = lattice::checked_add(exps[0], 1);
      skip_ws();
    }
    if (pos_ >= text_.size()) error("expected '1' or a generator name");
    if (text_[pos_] == '1' && (pos_ + 1 >= text_.size() || !is_ident_char(text_[pos_ + 1]))) {
      ++pos_;
      return;
    }
    if (!is_ident_start(text_[pos_])) error(std::string("unexpected character '") + text_[pos_] + "'");
    const std::size_t start = pos_;
    while (pos_ < text_.size() && is_ident_char(text_[pos_])) ++pos_;
    const std::string name(text_.substr(start, pos_ - start));
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) {
      pos_ = start;
      error("unknown generator '" + name + "'");
    }
    std::int64_t e = 1;
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == '^') {
      ++pos_;
      skip_ws();
      bool neg = false;
      if (pos_ < text_.size() && text_[pos_] == '-') {
        neg = true;
        ++pos_;
      }
      if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) error("expected exponent digits");
      e = 0;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        e = lattice::checked_add(lattice::checked_mul(e, 10), text_[pos_] - '0');
        ++pos_;
      }
      if (neg) e = -e;
    }
    auto idx = static_cast<std::size_t>(it - names_.begin());
    exps[idx] = lattice::checked_add(exps[idx], e);
  }

  const std::vector<std::string>& names_;
  bool sign_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

struct GroupShape {
  lattice::SmithForm smith;
  std::vector<std::int64_t> torsion;  // invariants > 1
};

GroupShape shape_of(const IntRows& rows, std::size_t cols) {
  GroupShape g;
  g.smith = lattice::smith_form(rows, cols);
  for (auto d : g.smith.diag)
    if (d > 1) g.torsion.push_back(d);
  return g;
}

IntVec row_times(const IntVec& x, const IntRows& m) {
  IntVec y(m.empty() ? 0 : m[0].size(), 0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < y.size(); ++j)
      y[j] = lattice::checked_add(y[j], lattice::checked_mul(x[i], m[i][j]));
  }
  return y;
}

const ContextData& require(const std::shared_ptr<const ContextData>& d) {
  if (!d) fail(ErrorCode::ContextMismatch, "scalar has no context");
  return *d;
}

void same_context(const Scalar& a, const Scalar& b) {
  if (!(a.context() == b.context())) fail(ErrorCode::ContextMismatch, "scalars belong to different contexts");
  if (!a.context().valid()) fail(ErrorCode::ContextMismatch, "scalar has no context");
}

}  // namespace

ScalarContext ScalarContext::create(int p, const std::vector<GeneratorSpec>& generators,
                                    const std::vector<std::string>& relations) {
  if (p != 0 && !is_prime(p)) fail(ErrorCode::InvalidChar, "characteristic must be 0 or a prime, got " + std::to_string(p));

  auto data = std::make_shared<ContextData>();
  data->p = p;
  data->declared = generators;
  data->sign = (p != 2);
  const std::size_t offset = data->sign ? 1 : 0;
  if (data->sign) data->names.push_back("-1");
  for (const auto& g : generators) {
    if (g.name.empty() || !is_ident_start(g.name[0]) ||
        !std::all_of(g.name.begin(), g.name.end(), is_ident_char))
      fail(ErrorCode::ValidationError, "invalid generator name '" + g.name + "'");
    if (std::find(data->names.begin(), data->names.end(), g.name) != data->names.end())
      fail(ErrorCode::ValidationError, "duplicate generator '" + g.name + "'");
    if (g.order && *g.order < 1) fail(ErrorCode::ValidationError, "generator '" + g.name + "' has non-positive order");
    data->names.push_back(g.name);
  }
  const std::size_t s = data->names.size();

  IntRows rows;
  for (std::size_t k = 0; k < generators.size(); ++k) {
    if (!generators[k].order) continue;
    IntVec r(s, 0);
    r[offset + k] = *generators[k].order;
    rows.push_back(r);
  }
  for (const auto& word : relations) {
    try {
      rows.push_back(WordParser(data->names, data->sign, word).parse());
    } catch (const Error& e) {
      fail(ErrorCode::BadRelation, std::string("bad relation: ") + e.what());
    }
  }

  if (data->sign) {
    // Identify the sign generator with the order-2 element of the subgroup
    // generated by the declared generators, when that subgroup has one.
    // Columns are permuted so the sign column is eliminated first; the
    // remaining echelon rows span the relations among declared generators.
    IntRows permuted;
    for (const auto& r : rows) {
      IntVec q(r.begin() + 1, r.end());
      q.push_back(r[0]);
      permuted.push_back(q);
    }
    auto ech = lattice::echelon_basis(permuted, s);
    IntRows user_rows;
    for (std::size_t k = 0; k < ech.rows.size(); ++k) {
      if (ech.pivots[k] == s - 1) continue;
      user_rows.emplace_back(ech.rows[k].begin(), ech.rows[k].end() - 1);
    }
    auto user = shape_of(user_rows, s - 1);
    if (user.torsion.size() > 1)
      fail(ErrorCode::NonCyclicTorsion, "torsion subgroup of the declared generators is not cyclic");
    IntVec sign_order(s, 0);
    sign_order[0] = 2;
    rows.push_back(sign_order);
    if (!user.torsion.empty() && user.torsion[0] % 2 == 0) {
      const std::size_t t = static_cast<std::size_t>(
          std::find(user.smith.diag.begin(), user.smith.diag.end(), user.torsion[0]) - user.smith.diag.begin());
      IntVec y(s - 1, 0);
      y[t] = user.torsion[0] / 2;
      IntVec half = row_times(y, user.smith.Vinv);
      IntVec rel(s, 0);
      rel[0] = 1;
      for (std::size_t j = 0; j + 1 < s; ++j) rel[j + 1] = -half[j];
      rows.push_back(rel);
    }
  }

  auto shape = shape_of(rows, s);
  if (shape.torsion.size() > 1) fail(ErrorCode::NonCyclicTorsion, "torsion subgroup is not cyclic");
  data->torsion = shape.torsion.empty() ? 1 : shape.torsion[0];
  if (p > 0 && data->torsion % p == 0)
    fail(ErrorCode::TorsionDivisibleByP, "torsion of order " + std::to_string(data->torsion) +
                                             " is divisible by the characteristic " + std::to_string(p));

  data->relations = rows;
  data->basis = lattice::echelon_basis(rows, s);
  data->V = shape.smith.V;
  data->Vinv = shape.smith.Vinv;
  for (std::size_t j = 0; j < s; ++j) {
    if (shape.smith.diag[j] == 1) continue;
    data->kept.push_back(j);
    data->invariants.push_back(shape.smith.diag[j]);
  }
  data->minus_one.assign(s, 0);
  if (data->sign) {
    data->minus_one[0] = 1;
    data->minus_one = lattice::reduce(data->basis, data->minus_one);
  }

  ScalarContext ctx(std::move(data));
  if (ctx.has_sign_generator() && order(ctx.minus_one()) != Order{2})
    fail(ErrorCode::ValidationError, "relations force -1 = 1 in characteristic " + std::to_string(p));
  return ctx;
}

int ScalarContext::characteristic() const { return require(data_).p; }
const std::vector<std::string>& ScalarContext::generator_names() const { return require(data_).names; }
const std::vector<GeneratorSpec>& ScalarContext::declared_generators() const { return require(data_).declared; }
bool ScalarContext::has_sign_generator() const { return require(data_).sign; }
const IntRows& ScalarContext::relation_rows() const { return require(data_).relations; }
const std::vector<std::int64_t>& ScalarContext::invariants() const { return require(data_).invariants; }
std::int64_t ScalarContext::torsion_order() const { return require(data_).torsion; }

Scalar ScalarContext::one() const { return Scalar(data_, IntVec(require(data_).names.size(), 0)); }
Scalar ScalarContext::minus_one() const { return Scalar(data_, require(data_).minus_one); }

Scalar ScalarContext::generator(std::string_view name) const {
  const auto& names = require(data_).names;
  auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end()) fail(ErrorCode::ParseError, "unknown generator '" + std::string(name) + "'");
  IntVec e(names.size(), 0);
  e[static_cast<std::size_t>(it - names.begin())] = 1;
  return from_exponents(std::move(e));
}

Scalar ScalarContext::from_exponents(IntVec exponents) const {
  const auto& d = require(data_);
  if (exponents.size() != d.names.size()) fail(ErrorCode::InternalError, "exponent vector has wrong length");
  return Scalar(data_, lattice::reduce(d.basis, std::move(exponents)));
}

Scalar ScalarContext::parse(std::string_view text) const {
  const auto& d = require(data_);
  return from_exponents(WordParser(d.names, d.sign, text).parse());
}

IntVec ScalarContext::coordinates(const Scalar& a) const {
  const auto& d = require(data_);
  if (!(a.context() == *this)) fail(ErrorCode::ContextMismatch, "scalar belongs to a different context");
  IntVec y = row_times(a.exponents(), d.V);
  IntVec out;
  out.reserve(d.kept.size());
  for (std::size_t k = 0; k < d.kept.size(); ++k) {
    std::int64_t v = y[d.kept[k]];
    if (d.invariants[k] != 0) v = lattice::floor_mod(v, d.invariants[k]);
    out.push_back(v);
  }
  return out;
}

Scalar ScalarContext::from_coordinates(const IntVec& coords) const {
  const auto& d = require(data_);
  if (coords.size() != d.kept.size()) fail(ErrorCode::InternalError, "coordinate vector has wrong length");
  IntVec y(d.names.size(), 0);
  for (std::size_t k = 0; k < d.kept.size(); ++k) y[d.kept[k]] = coords[k];
  return from_exponents(row_times(y, d.Vinv));
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  same_context(a, b);
  IntVec e(a.exps_.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = lattice::checked_add(a.exps_[i], b.exps_[i]);
  return a.context().from_exponents(std::move(e));
}

bool operator==(const Scalar& a, const Scalar& b) {
  same_context(a, b);
  return a.exps_ == b.exps_;
}

bool operator<(const Scalar& a, const Scalar& b) {
  same_context(a, b);
  return a.exps_ < b.exps_;
}

std::size_t Scalar::hash() const {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (auto v : exps_) h = (h ^ std::hash<std::int64_t>{}(v)) * 0x100000001b3ULL;
  return h;
}

Scalar mul(const Scalar& a, const Scalar& b) { return a * b; }

Scalar inv(const Scalar& a) { return pow(a, -1); }

Scalar pow(const Scalar& a, std::int64_t n) {
  require(a.ctx_);
  IntVec e(a.exps_.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = lattice::checked_mul(a.exps_[i], n);
  return a.context().from_exponents(std::move(e));
}

bool is_one(const Scalar& a) {
  return std::all_of(a.exponents().begin(), a.exponents().end(), [](std::int64_t v) { return v == 0; });
}

Order order(const Scalar& a) {
  const ScalarContext ctx = a.context();
  const IntVec y = ctx.coordinates(a);
  const auto& inv = ctx.invariants();
  std::int64_t n = 1;
  for (std::size_t k = 0; k < y.size(); ++k) {
    if (inv[k] == 0) {
      if (y[k] != 0) return std::nullopt;
      continue;
    }
    n = lattice::lcm(n, inv[k] / lattice::gcd(y[k], inv[k]));
  }
  return n;
}

bool in_primitive_roots(const Scalar& a, std::int64_t n) {
  if (n < 1) fail(ErrorCode::ValidationError, "G'_n requires n >= 1");
  return order(a) == Order{n};
}

bool qnum_is_zero(const Scalar& q, std::int64_t n) {
  if (n < 0) fail(ErrorCode::ValidationError, "(n)_q requires n >= 0");
  if (n == 0) return true;
  if (n == 1) return false;
  if (is_one(q)) {
    const int p = q.context().characteristic();
    return p > 0 && n % p == 0;
  }
  return is_one(pow(q, n));
}

std::optional<std::int64_t> discrete_log(const Scalar& base, const Scalar& target) {
  same_context(base, target);
  const ScalarContext ctx = base.context();
  const IntVec b = ctx.coordinates(base);
  const IntVec t = ctx.coordinates(target);
  const auto& inv = ctx.invariants();

  std::optional<std::int64_t> fixed;
  std::vector<lattice::Congruence> system;
  for (std::size_t k = 0; k < b.size(); ++k) {
    if (inv[k] != 0) continue;
    if (b[k] == 0) {
      if (t[k] != 0) return std::nullopt;
      continue;
    }
    if (t[k] % b[k] != 0) return std::nullopt;
    const std::int64_t m = t[k] / b[k];
    if (m < 0 || (fixed && *fixed != m)) return std::nullopt;
    fixed = m;
  }
  for (std::size_t k = 0; k < b.size(); ++k) {
    const std::int64_t d = inv[k];
    if (d == 0) continue;
    if (fixed) {
      if (lattice::floor_mod(static_cast<std::int64_t>(static_cast<__int128>(*fixed) * b[k] % d), d) != t[k])
        return std::nullopt;
      continue;
    }
    // m * b == t (mod d)
    const std::int64_t g = lattice::gcd(b[k], d);
    if (t[k] % g != 0) return std::nullopt;
    const std::int64_t dg = d / g;
    if (dg == 1) continue;
    // inverse of b/g modulo d/g
    std::int64_t r0 = lattice::floor_mod(b[k] / g, dg), r1 = dg, s0 = 1, s1 = 0;
    while (r1 != 0) {
      const std::int64_t q = r0 / r1;
      std::tie(r0, r1) = std::make_pair(r1, r0 - q * r1);
      std::tie(s0, s1) = std::make_pair(s1, s0 - q * s1);
    }
    const std::int64_t residue =
        lattice::floor_mod(static_cast<std::int64_t>(static_cast<__int128>(t[k] / g) * lattice::floor_mod(s0, dg) % dg), dg);
    system.push_back({residue, dg});
  }
  if (fixed) return fixed;
  const auto sol = lattice::combine(system);
  if (sol.modulus == 0) return std::nullopt;
  return sol.residue;
}

std::string to_string(const Scalar& a) {
  const ScalarContext ctx = a.context();
  const auto& names = ctx.generator_names();
  const IntVec& e = a.exponents();
  std::ostringstream out;
  std::size_t first = 0;
  bool negative = false;
  if (ctx.has_sign_generator()) {
    first = 1;
    negative = (e[0] != 0);
  }
  bool any = false;
  for (std::size_t i = first; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (any) out << '*';
    out << names[i];
    if (e[i] != 1) out << '^' << e[i];
    any = true;
  }
  std::string body = any ? out.str() : "1";
  return negative ? "-" + body : body;
}

}  // namespace nichols
