#include "nichols/neighborhoods.hpp"

#include <algorithm>

#include "nichols/errors.hpp"

namespace nichols {

namespace {

using Perm = std::array<int, 3>;
using M3 = std::array<std::array<std::int64_t, 3>, 3>;

std::vector<Perm> all_perms() {
  std::vector<Perm> out;
  Perm p{0, 1, 2};
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

void require_rank3(const CartanGraph& g) {
  if (g.rank != 3) fail(ErrorCode::RankMismatch, "good neighborhoods need rank 3, got " + std::to_string(g.rank));
}

// The graph seen through a relabeling of the vertices.
struct View {
  const CartanGraph& g;
  Perm s;

  std::size_t r(std::size_t x, int k) const { return g.neighbor[x][s[k]]; }
  M3 cartan(std::size_t x) const {
    M3 m{};
    for (int k = 0; k < 3; ++k)
      for (int l = 0; l < 3; ++l) m[k][l] = g.points[x].cartan[s[k]][s[l]];
    return m;
  }
};

M3 shape(std::int64_t a12, std::int64_t a13, std::int64_t a21, std::int64_t a23, std::int64_t a31, std::int64_t a32) {
  return M3{{{2, -a12, -a13}, {-a21, 2, -a23}, {-a31, -a32, 2}}};
}

std::optional<NeighborhoodWitness> a3_at(const View& v, std::size_t x) {
  if (v.cartan(x) != shape(1, 0, 1, 1, 0, 1)) return std::nullopt;
  const M3 m1 = v.cartan(v.r(x, 0)), m2 = v.cartan(v.r(x, 1)), m3 = v.cartan(v.r(x, 2));
  const std::int64_t a = -m1[1][2], b = -m2[0][2], c = -m2[2][0], d = -m3[1][0];
  if (m1 != shape(1, 0, 1, a, 0, 1) || m2 != shape(1, b, 1, 1, c, 1) || m3 != shape(1, 0, d, 1, 0, 1))
    return std::nullopt;
  static const std::vector<std::array<std::int64_t, 4>> list1 = {
      {1, 0, 0, 1}, {1, 1, 1, 1}, {1, 1, 1, 2}, {1, 1, 2, 3}, {2, 1, 1, 2}, {2, 1, 2, 2}};
  const std::array<std::int64_t, 4> t{a, b, c, d};
  bool good = std::find(list1.begin(), list1.end(), t) != list1.end();
  if (!good && t == std::array<std::int64_t, 4>{2, 1, 2, 3}) good = -v.cartan(v.r(v.r(x, 0), 2))[1][0] == 3;
  if (!good) return std::nullopt;
  return NeighborhoodWitness{NeighborhoodKind::A3, v.s,
                             {static_cast<int>(a), static_cast<int>(b), static_cast<int>(c), static_cast<int>(d)}};
}

std::optional<NeighborhoodWitness> b3_at(const View& v, std::size_t x) {
  const M3 base = shape(1, 0, 1, 1, 0, 2);
  if (v.cartan(x) != base || v.cartan(v.r(x, 0)) != base || v.cartan(v.r(x, 1)) != base) return std::nullopt;
  const std::size_t y3 = v.r(x, 2);
  const std::int64_t a = -v.cartan(y3)[1][0];
  if ((a != 1 && a != 2) || v.cartan(y3) != shape(1, 0, a, 1, 0, 2)) return std::nullopt;
  const std::int64_t side = -v.cartan(v.r(y3, 0))[1][2];
  if (side != 1 && side != 2) return std::nullopt;
  return NeighborhoodWitness{NeighborhoodKind::B3, v.s, {static_cast<int>(a), 0, 0, 0}};
}

std::optional<NeighborhoodWitness> c3_at(const View& v, std::size_t x) {
  const M3 base = shape(1, 0, 1, 2, 0, 1);
  if (v.cartan(x) != base || v.cartan(v.r(x, 0)) != base || v.cartan(v.r(x, 1)) != base) return std::nullopt;
  const M3 m3 = v.cartan(v.r(x, 2));
  const std::int64_t a = -m3[1][0];
  if ((a != 1 && a != 2) || m3 != shape(1, 0, a, 2, 0, 1)) return std::nullopt;
  return NeighborhoodWitness{NeighborhoodKind::C3, v.s, {static_cast<int>(a), 0, 0, 0}};
}

template <typename F>
std::optional<NeighborhoodWitness> first_perm(const CartanGraph& g, std::size_t x, F detect) {
  require_rank3(g);
  for (const auto& s : all_perms())
    if (auto w = detect(View{g, s}, x)) return w;
  return std::nullopt;
}

}  // namespace

std::string to_string(NeighborhoodKind k) {
  switch (k) {
    case NeighborhoodKind::A3: return "A3";
    case NeighborhoodKind::B3: return "B3";
    case NeighborhoodKind::C3: return "C3";
  }
  return "?";
}

std::string NeighborhoodWitness::describe() const {
  std::string out = to_string(kind) + " perm=(" + std::to_string(permutation[0] + 1) + "," +
                    std::to_string(permutation[1] + 1) + "," + std::to_string(permutation[2] + 1) + ")";
  if (kind == NeighborhoodKind::A3)
    out += " (a,b,c,d)=(" + std::to_string(data[0]) + "," + std::to_string(data[1]) + "," + std::to_string(data[2]) +
           "," + std::to_string(data[3]) + ")";
  else
    out += " a=" + std::to_string(data[0]);
  return out;
}

std::optional<NeighborhoodWitness> good_A3(const CartanGraph& g, std::size_t x) { return first_perm(g, x, a3_at); }
std::optional<NeighborhoodWitness> good_B3(const CartanGraph& g, std::size_t x) { return first_perm(g, x, b3_at); }
std::optional<NeighborhoodWitness> good_C3(const CartanGraph& g, std::size_t x) { return first_perm(g, x, c3_at); }

std::vector<NeighborhoodWitness> all_witnesses(const CartanGraph& g, std::size_t x) {
  require_rank3(g);
  std::vector<NeighborhoodWitness> out;
  for (auto detect : {a3_at, b3_at, c3_at})
    for (const auto& s : all_perms())
      if (auto w = detect(View{g, s}, x)) out.push_back(*w);
  return out;
}

std::optional<GoodPoint> find_good_point(const CartanGraph& g) {
  require_rank3(g);
  std::optional<GoodPoint> best;
  std::size_t total = 0;
  for (std::size_t x = 0; x < g.size(); ++x) {
    auto ws = all_witnesses(g, x);
    total += ws.size();
    if (!best && !ws.empty()) best = GoodPoint{x, ws.front(), 0};
  }
  if (best) best->multiplicity = total;
  return best;
}

}  // namespace nichols
