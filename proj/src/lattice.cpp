#include "nichols/lattice.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

#include "nichols/errors.hpp"

namespace nichols::lattice {

namespace {

using BigInt = boost::multiprecision::cpp_int;
using BigRows = std::vector<std::vector<BigInt>>;

BigRows to_big(const IntRows& rows, std::size_t cols) {
  BigRows out(rows.size(), std::vector<BigInt>(cols));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) fail(ErrorCode::InternalError, "lattice: ragged input row");
    for (std::size_t c = 0; c < cols; ++c) out[r][c] = rows[r][c];
  }
  return out;
}

std::int64_t to_int64(const BigInt& v) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
    fail(ErrorCode::Overflow, "lattice: entry exceeds 64-bit range");
  return static_cast<std::int64_t>(v);
}

IntRows to_small(const BigRows& rows) {
  IntRows out(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    out[r].reserve(rows[r].size());
    for (const auto& v : rows[r]) out[r].push_back(to_int64(v));
  }
  return out;
}

BigRows identity(std::size_t n) {
  BigRows id(n, std::vector<BigInt>(n));
  for (std::size_t i = 0; i < n; ++i) id[i][i] = 1;
  return id;
}

// Floor division for BigInt.
BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

EchelonBasis echelon_basis(const IntRows& generators, std::size_t cols) {
  BigRows m = to_big(generators, cols);
  EchelonBasis out;
  out.cols = cols;
  std::size_t top = 0;
  for (std::size_t step = 0; step < cols; ++step) {
    const std::size_t c = cols - 1 - step;
    // Euclid on column c among rows top..end until a single nonzero remains.
    while (true) {
      std::size_t best = m.size();
      for (std::size_t r = top; r < m.size(); ++r) {
        if (m[r][c] == 0) continue;
        if (best == m.size() || abs(m[r][c]) < abs(m[best][c])) best = r;
      }
      if (best == m.size()) break;
      std::swap(m[top], m[best]);
      bool done = true;
      for (std::size_t r = top + 1; r < m.size(); ++r) {
        if (m[r][c] == 0) continue;
        BigInt q = m[r][c] / m[top][c];
        for (std::size_t k = 0; k < cols; ++k) m[r][k] -= q * m[top][k];
        if (m[r][c] != 0) done = false;
      }
      if (done) {
        if (m[top][c] < 0)
          for (auto& v : m[top]) v = -v;
        out.pivots.push_back(c);
        ++top;
        break;
      }
    }
  }
  m.resize(top);
  out.rows = to_small(m);
  return out;
}

IntVec reduce(const EchelonBasis& basis, IntVec x) {
  if (x.size() != basis.cols) fail(ErrorCode::InternalError, "lattice: reduce dimension mismatch");
  for (std::size_t k = 0; k < basis.rows.size(); ++k) {
    const std::size_t c = basis.pivots[k];
    const std::int64_t d = basis.rows[k][c];
    const std::int64_t target = symmetric_mod(x[c], d);
    if (target == x[c]) continue;
    const std::int64_t q = (x[c] - target) / d;
    for (std::size_t j = 0; j < x.size(); ++j)
      x[j] = checked_add(x[j], -checked_mul(q, basis.rows[k][j]));
  }
  return x;
}

SmithForm smith_form(const IntRows& input, std::size_t cols) {
  const std::size_t rows = input.size();
  BigRows a = to_big(input, cols);
  BigRows u = identity(rows);
  BigRows v = identity(cols);
  BigRows vinv = identity(cols);

  auto swap_rows = [&](std::size_t r1, std::size_t r2) {
    if (r1 == r2) return;
    std::swap(a[r1], a[r2]);
    std::swap(u[r1], u[r2]);
  };
  auto add_row = [&](std::size_t dst, std::size_t src, const BigInt& k) {  // row dst += k*row src
    for (std::size_t c = 0; c < cols; ++c) a[dst][c] += k * a[src][c];
    for (std::size_t c = 0; c < rows; ++c) u[dst][c] += k * u[src][c];
  };
  auto swap_cols = [&](std::size_t c1, std::size_t c2) {
    if (c1 == c2) return;
    for (auto& row : a) std::swap(row[c1], row[c2]);
    for (auto& row : v) std::swap(row[c1], row[c2]);
    std::swap(vinv[c1], vinv[c2]);
  };
  auto add_col = [&](std::size_t dst, std::size_t src, const BigInt& k) {  // col dst += k*col src
    for (auto& row : a) row[dst] += k * row[src];
    for (auto& row : v) row[dst] += k * row[src];
    for (std::size_t c = 0; c < cols; ++c) vinv[src][c] -= k * vinv[dst][c];
  };

  std::size_t t = 0;
  const std::size_t limit = std::min(rows, cols);
  for (; t < limit; ++t) {
    while (true) {
      // smallest nonzero entry of the trailing block becomes the pivot
      std::size_t pr = rows, pc = cols;
      for (std::size_t r = t; r < rows; ++r)
        for (std::size_t c = t; c < cols; ++c)
          if (a[r][c] != 0 && (pr == rows || abs(a[r][c]) < abs(a[pr][pc]))) {
            pr = r;
            pc = c;
          }
      if (pr == rows) goto finished;
      swap_rows(t, pr);
      swap_cols(t, pc);

      bool clean = true;
      for (std::size_t r = t + 1; r < rows; ++r) {
        if (a[r][t] == 0) continue;
        add_row(r, t, -floor_div(a[r][t], a[t][t]));
        if (a[r][t] != 0) clean = false;
      }
      for (std::size_t c = t + 1; c < cols; ++c) {
        if (a[t][c] == 0) continue;
        add_col(c, t, -floor_div(a[t][c], a[t][t]));
        if (a[t][c] != 0) clean = false;
      }
      if (!clean) continue;

      // divisibility of the trailing block by the pivot
      bool divisible = true;
      for (std::size_t r = t + 1; r < rows && divisible; ++r)
        for (std::size_t c = t + 1; c < cols; ++c)
          if (a[r][c] % a[t][t] != 0) {
            add_row(t, r, 1);
            divisible = false;
            break;
          }
      if (!divisible) continue;

      if (a[t][t] < 0) {
        for (auto& x : a[t]) x = -x;
        for (auto& x : u[t]) x = -x;
      }
      break;
    }
  }
finished:
  SmithForm out;
  out.rows = rows;
  out.cols = cols;
  out.diag.assign(cols, 0);
  for (std::size_t i = 0; i < limit; ++i) out.diag[i] = to_int64(a[i][i]);
  out.rank = static_cast<std::size_t>(
      std::count_if(out.diag.begin(), out.diag.end(), [](std::int64_t d) { return d != 0; }));
  out.U = to_small(u);
  out.V = to_small(v);
  out.Vinv = to_small(vinv);
  return out;
}

std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  if (r < 0) r += m;
  return r;
}

std::int64_t symmetric_mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = floor_mod(a, m);
  if (2 * static_cast<__int128>(r) > m) r -= m;
  return r;
}

std::int64_t gcd(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

std::int64_t lcm(std::int64_t a, std::int64_t b) {
  if (a == 0 || b == 0) return 0;
  const __int128 l = static_cast<__int128>(a / gcd(a, b)) * b;
  if (l > std::numeric_limits<std::int64_t>::max() || l < -std::numeric_limits<std::int64_t>::max())
    fail(ErrorCode::Overflow, "lcm exceeds 64-bit range");
  return static_cast<std::int64_t>(l < 0 ? -l : l);
}

Congruence combine(const std::vector<Congruence>& system) {
  __int128 x = 0;
  __int128 m = 1;
  for (const auto& eq : system) {
    const __int128 m2 = eq.modulus;
    const __int128 r2 = floor_mod(eq.residue, eq.modulus);
    // solve x + m*t == r2 (mod m2)
    std::int64_t g = gcd(static_cast<std::int64_t>(m), static_cast<std::int64_t>(m2));
    __int128 diff = r2 - x;
    if (diff % g != 0) return {0, 0};
    // t == (diff/g) * inv(m/g) mod (m2/g)
    const __int128 mg = m / g, m2g = m2 / g;
    // extended Euclid for inverse of mg mod m2g
    __int128 old_r = mg % m2g, r = m2g, old_s = 1, s = 0;
    if (old_r < 0) old_r += m2g;
    while (r != 0) {
      __int128 q = old_r / r;
      std::tie(old_r, r) = std::make_pair(r, old_r - q * r);
      std::tie(old_s, s) = std::make_pair(s, old_s - q * s);
    }
    __int128 inv = m2g == 1 ? 0 : ((old_s % m2g) + m2g) % m2g;
    __int128 t = ((diff / g) % m2g + m2g) % m2g * inv % m2g;
    x += m * t;
    m *= m2g;
    if (m > std::numeric_limits<std::int64_t>::max()) fail(ErrorCode::Overflow, "congruence modulus overflow");
    x = ((x % m) + m) % m;
  }
  return {static_cast<std::int64_t>(x), static_cast<std::int64_t>(m)};
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) fail(ErrorCode::Overflow, "integer overflow in addition");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) fail(ErrorCode::Overflow, "integer overflow in multiplication");
  return r;
}

}  // namespace nichols::lattice
