#include "nichols/tables.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <set>
#include <sstream>

#include "nichols/errors.hpp"
#include "nichols/neighborhoods.hpp"

namespace nichols {

extern const char* const kBuiltinTables;

namespace {

constexpr std::size_t kMaxSolutions = 4096;

// Label order used for unification: vertices, then edges 12, 23, 13.
constexpr std::array<std::pair<int, int>, 6> kLabels{{{0, 0}, {1, 1}, {2, 2}, {0, 1}, {1, 2}, {0, 2}}};

Scalar label_of(const DynkinData& d, int k) {
  const auto [a, b] = kLabels[k];
  return a == b ? d.vertex(a) : d.edge(a, b);
}

std::vector<std::string> tokenize(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  std::string t;
  while (in >> t) out.push_back(t);
  return out;
}

std::int64_t parse_int(const std::string& s, std::size_t line) {
  try {
    std::size_t used = 0;
    const long long v = std::stoll(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  fail(ErrorCode::TableDataError, "line " + std::to_string(line) + ": expected an integer, got '" + s + "'");
}

Relabeled parse_vertex(const std::string& token, std::size_t line) {
  Relabeled v;
  const auto colon = token.find(':');
  if (colon == std::string::npos) {
    v.diagram = token;
    return v;
  }
  const std::string t = token.substr(0, colon);
  v.diagram = token.substr(colon + 1);
  std::array<int, 3> seen{};
  if (t.size() != 3) fail(ErrorCode::TableDataError, "line " + std::to_string(line) + ": bad relabeling '" + t + "'");
  for (int k = 0; k < 3; ++k) {
    const int x = t[k] - '0';
    if (x < 1 || x > 3 || seen[x - 1]++)
      fail(ErrorCode::TableDataError, "line " + std::to_string(line) + ": bad relabeling '" + t + "'");
    v.tau[k] = x;
  }
  return v;
}

void finish_row(TableRow& row, const std::vector<std::array<std::string, 8>>& raw, std::size_t line) {
  std::vector<GeneratorSpec> gens;
  for (const auto& p : row.params) gens.push_back({p.name, std::nullopt});
  row.pattern_ctx = ScalarContext::create(0, gens);
  const ScalarContext& ctx = row.pattern_ctx;
  for (const auto& r : raw) {
    std::vector<Scalar> l;
    try {
      for (int k = 2; k < 8; ++k)
        if (!r[k].empty()) l.push_back(ctx.parse(r[k]));
    } catch (const Error& e) {
      fail(ErrorCode::TableDataError, "row " + row.id + ", diagram " + r[0] + ": " + e.what());
    }
    PatternDiagram pd;
    pd.id = r[0];
    pd.pattern = r[1] == "chain" ? DynkinData::chain(ctx, l[0], l[1], l[2], l[3], l[4])
                                 : DynkinData::triangle(ctx, l[0], l[1], l[2], l[3], l[4], l[5]);
    const std::size_t np = row.params.size();
    for (int k = 0; k < 6; ++k) {
      const IntVec e = label_of(pd.pattern, k).exponents();
      pd.signs.push_back(static_cast<int>(lattice::floor_mod(e[0], 2)));
      pd.exponents.emplace_back(e.begin() + 1, e.end());
    }
    // relations among the parameters join the label equations with target 1
    for (const auto& rel : row.relations) {
      Scalar w;
      try {
        w = ctx.parse(rel);
      } catch (const Error& e) {
        fail(ErrorCode::TableDataError, "row " + row.id + ", relation " + rel + ": " + e.what());
      }
      pd.signs.push_back(0);
      pd.exponents.emplace_back(w.exponents().begin() + 1, w.exponents().end());
    }
    pd.smith = lattice::smith_form(pd.exponents, np);
    if (pd.smith.rank != np)
      fail(ErrorCode::TableDataError, "row " + row.id + ", diagram " + pd.id + ": labels do not determine the parameters");
    row.diagrams.push_back(std::move(pd));
  }
  auto known = [&](const Relabeled& v) {
    for (const auto& d : row.diagrams)
      if (d.id == v.diagram) return;
    fail(ErrorCode::TableDataError, "line " + std::to_string(line) + ": row " + row.id + " has no diagram " + v.diagram);
  };
  for (const auto& v : row.vertices) known(v);
  if (row.vertices.empty()) fail(ErrorCode::TableDataError, "row " + row.id + " has no exchange graph");
}

void add_vertex(TableRow& row, const Relabeled& v) {
  for (const auto& w : row.vertices)
    if (w.name() == v.name()) return;
  row.vertices.push_back(v);
}

std::string join_tau(const std::array<int, 3>& t) {
  return std::to_string(t[0]) + std::to_string(t[1]) + std::to_string(t[2]);
}

// Solutions of a * y == c (mod m); m == 0 means over the integers.
std::vector<std::int64_t> solve_linear(std::int64_t a, std::int64_t c, std::int64_t m) {
  if (m == 0) {
    if (a == 0) fail(ErrorCode::InternalError, "unification: singular system");
    if (c % a != 0) return {};
    return {c / a};
  }
  a = lattice::floor_mod(a, m);
  c = lattice::floor_mod(c, m);
  const std::int64_t g = lattice::gcd(a, m);
  if (c % g != 0) return {};
  const std::int64_t mg = m / g;
  // inverse of a/g modulo m/g by brute force over the small torsion moduli
  std::int64_t inv = 0;
  const std::int64_t ag = (a / g) % mg;
  for (std::int64_t t = 0; t < mg; ++t)
    if ((static_cast<__int128>(ag) * t) % mg == 1 % mg) {
      inv = t;
      break;
    }
  const std::int64_t y0 = static_cast<std::int64_t>((static_cast<__int128>(c / g) * inv) % mg);
  std::vector<std::int64_t> out;
  for (std::int64_t k = 0; k < g; ++k) out.push_back(y0 + k * mg);
  return out;
}

bool constraints_hold(const TableRow& row, const std::vector<Scalar>& t) {
  for (std::size_t j = 0; j < row.params.size(); ++j) {
    const auto& spec = row.params[j];
    const Order ord = order(t[j]);
    if (!spec.orders.empty()) {
      if (!ord || std::find(spec.orders.begin(), spec.orders.end(), *ord) == spec.orders.end()) return false;
    }
    for (auto n : spec.excluded)
      if (ord && *ord == n) return false;
  }
  for (const auto& rel : row.relations) {
    const Scalar word = row.pattern_ctx.parse(rel);
    const IntVec& e = word.exponents();
    Scalar v = t.empty() ? Scalar() : t[0].context().one();
    for (std::size_t j = 0; j < t.size(); ++j) v *= pow(t[j], e[j + 1]);
    if (!is_one(v)) return false;
  }
  for (const auto& group : row.distinct) {
    std::vector<Scalar> vals;
    for (const auto& name : group)
      for (std::size_t j = 0; j < row.params.size(); ++j)
        if (row.params[j].name == name) vals.push_back(t[j]);
    for (std::size_t a = 0; a < vals.size(); ++a)
      for (std::size_t b = a + 1; b < vals.size(); ++b)
        if (vals[a] == vals[b]) return false;
  }
  return true;
}

Scalar substitute(const Scalar& label, const ScalarContext& target, const std::vector<Scalar>& t) {
  const IntVec& e = label.exponents();
  Scalar v = pow(target.minus_one(), e[0]);
  for (std::size_t j = 0; j < t.size(); ++j) v *= pow(t[j], e[j + 1]);
  return v;
}

DynkinData substitute(const DynkinData& pattern, const ScalarContext& target, const std::vector<Scalar>& t) {
  std::vector<Scalar> diag;
  std::vector<std::vector<Scalar>> edge(3, std::vector<Scalar>(3, target.one()));
  for (int a = 0; a < 3; ++a) diag.push_back(substitute(pattern.vertex(a), target, t));
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      if (a != b) edge[a][b] = substitute(pattern.edge(a, b), target, t);
  return DynkinData(target, std::move(diag), std::move(edge));
}

// Parameter values making the pattern equal to d, before constraints.
std::vector<std::vector<Scalar>> unify(const PatternDiagram& pd, const DynkinData& d) {
  const ScalarContext& ctx = d.context();
  const auto& mods = ctx.invariants();
  const std::size_t np = pd.smith.cols;
  const std::size_t nc = mods.size();
  if (np == 0) return {{}};

  // right-hand sides per coordinate; rows past the six labels are relations
  const std::size_t ne = pd.exponents.size();
  std::vector<IntVec> rhs(nc, IntVec(ne, 0));
  for (int k = 0; k < 6; ++k) {
    Scalar target = label_of(d, k);
    if (pd.signs[k]) target *= inv(ctx.minus_one());
    const IntVec c = ctx.coordinates(target);
    for (std::size_t x = 0; x < nc; ++x) rhs[x][k] = c[x];
  }

  // per coordinate: list of parameter coordinate vectors
  std::vector<std::vector<IntVec>> per_coord(nc);
  for (std::size_t x = 0; x < nc; ++x) {
    const std::int64_t m = mods[x];
    IntVec c(ne, 0);
    for (std::size_t r = 0; r < ne; ++r)
      for (std::size_t k = 0; k < ne; ++k)
        c[r] = lattice::checked_add(c[r], lattice::checked_mul(pd.smith.U[r][k], rhs[x][k]));
    bool ok = true;
    for (std::size_t r = np; r < ne && ok; ++r)
      if (m == 0 ? c[r] != 0 : lattice::floor_mod(c[r], m) != 0) ok = false;
    if (!ok) return {};
    std::vector<std::vector<std::int64_t>> choices(np);
    for (std::size_t r = 0; r < np; ++r) {
      choices[r] = solve_linear(pd.smith.diag[r], c[r], m);
      if (choices[r].empty()) return {};
    }
    // expand y choices, then T = V y
    std::vector<IntVec> ys{IntVec{}};
    for (std::size_t r = 0; r < np; ++r) {
      std::vector<IntVec> next;
      for (const auto& y : ys)
        for (auto v : choices[r]) {
          IntVec z = y;
          z.push_back(v);
          next.push_back(std::move(z));
        }
      ys = std::move(next);
      if (ys.size() > kMaxSolutions) fail(ErrorCode::CapExceeded, "too many unification candidates");
    }
    for (const auto& y : ys) {
      IntVec tcoord(np, 0);
      for (std::size_t j = 0; j < np; ++j) {
        std::int64_t acc = 0;
        for (std::size_t r = 0; r < np; ++r) acc = lattice::checked_add(acc, lattice::checked_mul(pd.smith.V[j][r], y[r]));
        tcoord[j] = m == 0 ? acc : lattice::floor_mod(acc, m);
      }
      per_coord[x].push_back(std::move(tcoord));
    }
  }

  // combine coordinates into parameter scalars
  std::size_t total = 1;
  for (const auto& pc : per_coord) {
    total *= pc.size();
    if (total > kMaxSolutions) fail(ErrorCode::CapExceeded, "too many unification candidates");
  }
  std::vector<std::vector<Scalar>> out;
  for (std::size_t n = 0; n < total; ++n) {
    std::vector<std::size_t> pick(nc);
    std::size_t rest = n;
    for (std::size_t x = 0; x < nc; ++x) {
      pick[x] = rest % per_coord[x].size();
      rest /= per_coord[x].size();
    }
    std::vector<Scalar> t;
    for (std::size_t j = 0; j < np; ++j) {
      IntVec coords(nc, 0);
      for (std::size_t x = 0; x < nc; ++x) coords[x] = per_coord[x][pick[x]][j];
      t.push_back(ctx.from_coordinates(coords));
    }
    out.push_back(std::move(t));
  }
  return out;
}

}  // namespace

CharClass char_class(int p) {
  if (p == 0) fail(ErrorCode::UnsupportedChar, "the tables cover positive characteristic only");
  if (p == 2) return CharClass::Two;
  if (p == 3) return CharClass::Three;
  return CharClass::Greater;
}

std::string to_string(CharClass c) {
  switch (c) {
    case CharClass::Two: return "p=2";
    case CharClass::Three: return "p=3";
    case CharClass::Greater: return "p>3";
  }
  return "?";
}

std::string Relabeled::name() const { return identity() ? diagram : join_tau(tau) + ":" + diagram; }

const PatternDiagram& TableRow::diagram(const std::string& id_) const {
  for (const auto& d : diagrams)
    if (d.id == id_) return d;
  fail(ErrorCode::TableDataError, "row " + id + " has no diagram " + id_);
}

std::vector<TableRow> parse_tables(std::string_view text) {
  std::vector<TableRow> rows;
  std::optional<CharClass> cls;
  std::optional<TableRow> row;
  std::vector<std::array<std::string, 8>> raw;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  auto bad = [&](const std::string& msg) { fail(ErrorCode::TableDataError, "line " + std::to_string(lineno) + ": " + msg); };

  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto tok = tokenize(line);
    if (tok.empty()) continue;
    const std::string& cmd = tok[0];
    if (cmd == "format") {
      if (tok.size() != 2 || tok[1] != "1") bad("unsupported format version");
    } else if (cmd == "table") {
      if (row) bad("table inside a row");
      if (tok.size() != 2) bad("table needs a class");
      if (tok[1] == "p=2") cls = CharClass::Two;
      else if (tok[1] == "p=3") cls = CharClass::Three;
      else if (tok[1] == "p>3") cls = CharClass::Greater;
      else bad("unknown class " + tok[1]);
    } else if (cmd == "row") {
      if (!cls) bad("row before table");
      if (row) bad("row inside a row");
      if (tok.size() != 2) bad("row needs an id");
      row = TableRow{};
      row->char_class = *cls;
      row->id = tok[1];
      raw.clear();
    } else if (!row) {
      bad("'" + cmd + "' outside a row");
    } else if (cmd == "heck") {
      if (tok.size() != 2) bad("heck needs a number");
      row->heck_row = static_cast<int>(parse_int(tok[1], lineno));
    } else if (cmd == "param") {
      if (tok.size() < 3) bad("param needs a name and a kind");
      ParamSpec p{tok[1], {}, {}};
      if (tok[2] == "free") {
        std::size_t k = 3;
        if (k < tok.size()) {
          if (tok[k] != "exclude") bad("expected 'exclude'");
          for (++k; k < tok.size(); ++k) p.excluded.push_back(parse_int(tok[k], lineno));
        }
      } else if (tok[2] == "root") {
        for (std::size_t k = 3; k < tok.size(); ++k) p.orders.push_back(parse_int(tok[k], lineno));
        if (p.orders.empty()) bad("root needs at least one order");
      } else {
        bad("unknown parameter kind " + tok[2]);
      }
      row->params.push_back(std::move(p));
    } else if (cmd == "relation") {
      if (tok.size() != 2) bad("relation needs one word");
      row->relations.push_back(tok[1]);
    } else if (cmd == "distinct") {
      row->distinct.emplace_back(tok.begin() + 1, tok.end());
    } else if (cmd == "diagram") {
      if (tok.size() < 3) bad("diagram needs an id and a shape");
      const std::size_t want = tok[2] == "chain" ? 5 : tok[2] == "triangle" ? 6 : 0;
      if (want == 0) bad("unknown shape " + tok[2]);
      if (tok.size() != 3 + want) bad("wrong number of labels");
      std::array<std::string, 8> r{};
      r[0] = tok[1];
      r[1] = tok[2];
      for (std::size_t k = 0; k < want; ++k) r[2 + k] = tok[3 + k];
      raw.push_back(r);
    } else if (cmd == "point") {
      if (tok.size() != 2) bad("point needs one vertex");
      add_vertex(*row, parse_vertex(tok[1], lineno));
    } else if (cmd == "edge") {
      if (tok.size() != 4 && tok.size() != 6) bad("edge needs two vertices and a label");
      ExchangeSpec e{parse_vertex(tok[1], lineno), parse_vertex(tok[2], lineno),
                     static_cast<int>(parse_int(tok[3], lineno)), std::nullopt};
      if (e.label < 1 || e.label > 3) bad("edge label out of range");
      if (tok.size() == 6) {
        if (tok[4] != "printed") bad("expected 'printed'");
        e.printed = static_cast<int>(parse_int(tok[5], lineno));
      }
      add_vertex(*row, e.a);
      add_vertex(*row, e.b);
      row->edges.push_back(std::move(e));
    } else if (cmd == "erratum") {
      std::string msg;
      for (std::size_t k = 1; k < tok.size(); ++k) msg += (k > 1 ? " " : "") + tok[k];
      row->errata.push_back(msg);
    } else if (cmd == "end") {
      finish_row(*row, raw, lineno);
      rows.push_back(std::move(*row));
      row.reset();
    } else {
      bad("unknown keyword " + cmd);
    }
  }
  if (row) fail(ErrorCode::TableDataError, "unterminated row " + row->id);
  return rows;
}

std::string_view builtin_table_text() { return kBuiltinTables; }

const std::vector<TableRow>& builtin_rows(int p) {
  static std::once_flag once;
  static std::vector<TableRow> all;
  static std::map<CharClass, std::vector<TableRow>> by_class;
  const CharClass c = char_class(p);
  std::call_once(once, [] {
    all = parse_tables(kBuiltinTables);
    for (const auto& r : all) by_class[r.char_class].push_back(r);
  });
  return by_class[c];
}

std::string Match::describe() const {
  std::string out = "row " + row_id + " " + diagram_id + " at " + join_tau({permutation[0] + 1, permutation[1] + 1, permutation[2] + 1});
  if (!assignment.empty()) {
    out += " with";
    for (std::size_t k = 0; k < assignment.size(); ++k)
      out += (k ? ", " : " ") + assignment[k].first + "=" + to_string(assignment[k].second);
  }
  return out;
}

std::vector<Match> match_row(const TableRow& row, const DynkinData& d) {
  if (d.rank() != 3) fail(ErrorCode::RankMismatch, "table matching needs rank 3");
  std::vector<Match> out;
  std::set<std::string> seen;
  std::array<int, 3> perm{0, 1, 2};
  for (const auto& pd : row.diagrams) {
    perm = {0, 1, 2};
    do {
      const DynkinData view = d.permuted({perm[0], perm[1], perm[2]});
      for (auto& t : unify(pd, view)) {
        if (substitute(pd.pattern, d.context(), t) != view) continue;
        if (!constraints_hold(row, t)) continue;
        Match m{row.id, pd.id, perm, {}};
        for (std::size_t j = 0; j < t.size(); ++j) m.assignment.emplace_back(row.params[j].name, t[j]);
        if (seen.insert(m.describe()).second) out.push_back(std::move(m));
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return out;
}

std::vector<Match> match_diagram(const DynkinData& d) {
  std::vector<Match> out;
  for (const auto& row : builtin_rows(d.context().characteristic())) {
    auto m = match_row(row, d);
    out.insert(out.end(), m.begin(), m.end());
  }
  return out;
}

ClassifyResult classify(const DynkinData& d, const Limits& limits) {
  char_class(d.context().characteristic());
  if (d.rank() != 3) fail(ErrorCode::RankMismatch, "classification needs rank 3");
  if (!is_indecomposable(d)) fail(ErrorCode::DecomposableInput, "the Dynkin diagram is decomposable");

  ClassifyResult res;
  res.matches = match_diagram(d);
  for (const auto& m : res.matches)
    for (const auto& row : builtin_rows(d.context().characteristic()))
      if (row.id == m.row_id && std::find(res.heck_rows.begin(), res.heck_rows.end(), row.heck_row) == res.heck_rows.end())
        res.heck_rows.push_back(row.heck_row);

  try {
    CartanGraph g = build_cartan_graph(d, limits);
    res.points = g.size();
    RootSystemData r = real_roots(g, limits);
    res.finite = r.finite;
    if (r.finite) res.positive_roots = r.positive(g.base).size();
    else res.reason = r.reason;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotAdmitsAllReflections && e.code() != ErrorCode::PointLimitExceeded) throw;
    res.finite = false;
    res.reason = std::string(error_code_name(e.code())) + ": " + e.what();
  }
  if (res.finite != !res.matches.empty())
    fail(ErrorCode::InternalTableMismatch,
         std::string("tables and root closure disagree for ") + d.describe() + ": " +
             (res.finite ? "finite root system without a table match" : "table match but no finite root system"));
  return res;
}

bool is_finite_dimensional_nichols(const DynkinData& d, const Limits& limits) {
  const ClassifyResult r = classify(d, limits);
  if (r.matches.empty()) return false;
  for (const auto& v : d.vertices())
    if (!order(v)) return false;
  return true;
}

std::vector<RowInstance> instantiate(const TableRow& row, int p) {
  // one instance per choice of order for each root parameter
  std::vector<std::vector<std::int64_t>> choices{{}};
  for (const auto& spec : row.params) {
    std::vector<std::vector<std::int64_t>> next;
    for (const auto& c : choices) {
      if (spec.orders.empty()) {
        auto z = c;
        z.push_back(0);
        next.push_back(z);
      } else {
        for (auto o : spec.orders) {
          auto z = c;
          z.push_back(o);
          next.push_back(z);
        }
      }
    }
    choices = std::move(next);
  }
  std::vector<RowInstance> out;
  for (const auto& c : choices) {
    std::vector<GeneratorSpec> gens;
    std::string label;
    for (std::size_t j = 0; j < row.params.size(); ++j) {
      gens.push_back({row.params[j].name, c[j] ? Order{c[j]} : std::nullopt});
      if (c[j] && row.params[j].orders.size() > 1)
        label += (label.empty() ? "" : ", ") + row.params[j].name + " order " + std::to_string(c[j]);
    }
    RowInstance inst{label, ScalarContext::create(p, gens, row.relations), {}};
    for (const auto& g : row.params) inst.params.push_back(inst.ctx.generator(g.name));
    out.push_back(std::move(inst));
  }
  return out;
}

DynkinData instantiate(const TableRow& row, const RowInstance& inst, const Relabeled& v) {
  const DynkinData base = substitute(row.diagram(v.diagram).pattern, inst.ctx, inst.params);
  std::vector<int> perm(3);
  for (int k = 0; k < 3; ++k) perm[v.tau[k] - 1] = k;
  return base.permuted(perm);
}

std::size_t TablesReport::row_count() const {
  std::set<std::string> ids;
  for (const auto& r : instances) ids.insert(r.row_id);
  return ids.size();
}

std::size_t TablesReport::rows_passed() const {
  std::map<std::string, bool> ok;
  for (const auto& r : instances) {
    auto [it, fresh] = ok.emplace(r.row_id, r.ok());
    if (!fresh) it->second = it->second && r.ok();
  }
  return static_cast<std::size_t>(std::count_if(ok.begin(), ok.end(), [](const auto& kv) { return kv.second; }));
}

bool TablesReport::ok() const { return rows_passed() == row_count(); }

namespace {

// Identifies the table vertices with graph points so that the printed edges
// are exactly the exchange edges. Returns the assignment or nullopt.
std::optional<std::vector<std::size_t>> align_exchange_graph(const TableRow& row, const RowInstance& inst,
                                                             const CartanGraph& g, std::vector<std::string>& failures) {
  const std::size_t nv = row.vertices.size();
  if (nv != g.size()) {
    failures.push_back("table lists " + std::to_string(nv) + " vertices, orbit has " + std::to_string(g.size()) + " points");
    return std::nullopt;
  }
  std::vector<std::vector<std::size_t>> cand(nv);
  for (std::size_t v = 0; v < nv; ++v) {
    const Relabeled& rv = row.vertices[v];
    if (auto x = g.find(instantiate(row, inst, rv).key())) {
      cand[v].push_back(*x);
      continue;
    }
    // same diagram under another admissible parameter choice
    for (std::size_t x = 0; x < g.size(); ++x)
      for (const auto& m : match_row(row, g.points[x].dynkin))
        if (m.diagram_id == rv.diagram &&
            m.permutation == std::array<int, 3>{rv.tau[0] - 1, rv.tau[1] - 1, rv.tau[2] - 1}) {
          cand[v].push_back(x);
          break;
        }
    if (cand[v].empty()) failures.push_back("vertex " + rv.name() + " is not a point of the orbit");
  }
  if (!failures.empty()) return std::nullopt;

  std::set<std::tuple<std::size_t, std::size_t, int>> computed;
  for (const auto& e : exchange_graph(g))
    for (int l : e.labels) computed.emplace(e.a, e.b, l);

  auto index_of = [&](const Relabeled& r) {
    for (std::size_t v = 0; v < nv; ++v)
      if (row.vertices[v].name() == r.name()) return v;
    return nv;
  };

  std::vector<std::size_t> map(nv, g.size());
  std::vector<bool> used(g.size(), false);
  std::function<bool(std::size_t)> search = [&](std::size_t v) -> bool {
    if (v == nv) {
      std::set<std::tuple<std::size_t, std::size_t, int>> printed;
      for (const auto& e : row.edges) {
        std::size_t a = map[index_of(e.a)], b = map[index_of(e.b)];
        printed.emplace(std::min(a, b), std::max(a, b), e.label);
      }
      return printed == computed;
    }
    for (auto x : cand[v]) {
      if (used[x]) continue;
      used[x] = true;
      map[v] = x;
      if (search(v + 1)) return true;
      used[x] = false;
    }
    return false;
  };
  if (!search(0)) {
    failures.push_back("exchange graph is not isomorphic to the tabulated one");
    return std::nullopt;
  }
  return map;
}

RowReport verify_instance(const TableRow& row, const RowInstance& inst, const Limits& limits) {
  RowReport rep;
  rep.row_id = row.id;
  rep.instance = inst.label;
  for (const auto& e : row.edges)
    if (e.printed)
      rep.notes.push_back("edge " + e.a.name() + " - " + e.b.name() + " is printed with label " +
                          std::to_string(*e.printed) + "; computed label " + std::to_string(e.label));
  for (const auto& e : row.errata) rep.notes.push_back(e);

  const DynkinData base = instantiate(row, inst, Relabeled{{1, 2, 3}, row.diagrams.front().id});
  CartanGraph g;
  try {
    g = build_cartan_graph(base, limits);
  } catch (const Error& e) {
    rep.failures.push_back(std::string("orbit: ") + std::string(error_code_name(e.code())) + ": " + e.what());
    return rep;
  }
  rep.points = g.size();

  // (a) every point is a relabeled diagram of the row and every diagram occurs
  std::set<std::string> hit;
  for (std::size_t x = 0; x < g.size(); ++x) {
    auto ms = match_row(row, g.points[x].dynkin);
    if (ms.empty()) rep.failures.push_back("point " + g.points[x].dynkin.describe() + " matches no diagram of the row");
    for (const auto& m : ms) hit.insert(m.diagram_id);
  }
  for (const auto& d : row.diagrams)
    if (!hit.count(d.id)) rep.failures.push_back("diagram " + d.id + " does not occur in the orbit");

  // (b) exchange graph
  align_exchange_graph(row, inst, g, rep.failures);

  // (c) classification round trip
  try {
    const ClassifyResult c = classify(base, limits);
    if (std::none_of(c.matches.begin(), c.matches.end(), [&](const Match& m) { return m.row_id == row.id; }))
      rep.failures.push_back("classify does not return row " + row.id);
  } catch (const Error& e) {
    rep.failures.push_back(std::string("classify: ") + std::string(error_code_name(e.code())) + ": " + e.what());
  }

  // (d) good neighborhood
  if (auto gp = find_good_point(g))
    rep.good_point = g.points[gp->point].dynkin.describe() + " " + gp->witness.describe();
  else
    rep.failures.push_back("no point with a good neighborhood");

  // (e) axioms
  const RootSystemData roots = real_roots(g, limits);
  if (roots.finite) rep.positive_roots = roots.positive(g.base).size();
  for (const auto& v : verify_cartan_graph_axioms(g, roots).violations) rep.failures.push_back("Cartan graph: " + v);
  for (const auto& v : verify_root_system_axioms(g, roots).violations) rep.failures.push_back("root system: " + v);
  for (const auto& v : verify_positive_root_bijections(g, roots).violations) rep.failures.push_back("bijection: " + v);
  for (const auto& v : semi_cartan_violations(g)) rep.failures.push_back("semi-Cartan: " + v);
  return rep;
}

}  // namespace

TablesReport verify_all_tables(int p, const Limits& limits) {
  TablesReport report;
  report.p = p;
  for (const auto& row : builtin_rows(p)) {
    std::vector<RowInstance> insts;
    try {
      insts = instantiate(row, p);
    } catch (const Error& e) {
      RowReport r;
      r.row_id = row.id;
      r.failures.push_back(std::string("instantiation: ") + e.what());
      report.instances.push_back(std::move(r));
      continue;
    }
    for (const auto& inst : insts) report.instances.push_back(verify_instance(row, inst, limits));
  }
  return report;
}

}  // namespace nichols
