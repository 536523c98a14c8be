#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "nichols/errors.hpp"
#include "nichols/input.hpp"
#include "nichols/neighborhoods.hpp"
#include "nichols/reflections.hpp"
#include "nichols/tables.hpp"
#include "nichols/weyl.hpp"

namespace nichols::cli {

namespace {

using json = nlohmann::ordered_json;

struct Options {
  bool json = false;
  Limits limits;
  std::string file;
  int index = 0;
  std::string dot;
  int p = -1;
};

// One command's result: exit code, JSON body and text body.
struct Report {
  int code = 0;
  json doc = json::object();
  std::ostringstream text;
};

int exit_code(ErrorCode c) {
  switch (c) {
    case ErrorCode::NotIFinite:
    case ErrorCode::NotAdmitsAllReflections:
    case ErrorCode::PointLimitExceeded:
    case ErrorCode::CapExceeded:
      return 1;
    case ErrorCode::SyntaxError:
    case ErrorCode::ValidationError:
    case ErrorCode::ParseError:
    case ErrorCode::InvalidChar:
    case ErrorCode::TorsionDivisibleByP:
    case ErrorCode::NonCyclicTorsion:
    case ErrorCode::BadRelation:
    case ErrorCode::UnsupportedChar:
    case ErrorCode::RankMismatch:
    case ErrorCode::DecomposableInput:
    case ErrorCode::Overflow:
      return 2;
    default:
      return 3;
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::ValidationError, "cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string word_text(const std::vector<int>& word) {
  if (word.empty()) return "id";
  std::string out;
  for (std::size_t k = 0; k < word.size(); ++k) out += (k ? " " : "") + std::string("r") + std::to_string(word[k] + 1);
  return out;
}

std::string root_text(const Root& r) {
  std::string out = "(";
  for (std::size_t k = 0; k < r.size(); ++k) out += (k ? "," : "") + std::to_string(r[k]);
  return out + ")";
}

json dynkin_json(const DynkinData& d) {
  json j;
  j["rank"] = d.rank();
  j["text"] = d.describe();
  j["vertices"] = json::array();
  for (const auto& v : d.vertices()) j["vertices"].push_back(to_string(v));
  j["edges"] = json::array();
  for (int a = 0; a < d.rank(); ++a)
    for (int b = a + 1; b < d.rank(); ++b)
      if (!is_one(d.edge(a, b))) j["edges"].push_back({{"i", a + 1}, {"j", b + 1}, {"label", to_string(d.edge(a, b))}});
  return j;
}

void dynkin_text(std::ostream& out, const DynkinData& d) {
  out << "dynkin: " << d.describe() << "\n";
  for (int a = 0; a < d.rank(); ++a) out << "  vertex " << a + 1 << ": " << to_string(d.vertex(a)) << "\n";
  for (int a = 0; a < d.rank(); ++a)
    for (int b = a + 1; b < d.rank(); ++b)
      if (!is_one(d.edge(a, b))) out << "  edge " << a + 1 << "-" << b + 1 << ": " << to_string(d.edge(a, b)) << "\n";
}

void matrix_text(std::ostream& out, const IntMatrix& m, const std::string& indent) {
  std::size_t w = 1;
  for (const auto& row : m)
    for (auto v : row) w = std::max(w, std::to_string(v).size());
  for (const auto& row : m) {
    out << indent;
    for (std::size_t k = 0; k < row.size(); ++k) {
      const std::string v = std::to_string(row[k]);
      out << (k ? " " : "") << std::string(w - v.size(), ' ') << v;
    }
    out << "\n";
  }
}

json witness_json(const NeighborhoodWitness& w) {
  json j;
  j["kind"] = to_string(w.kind);
  j["permutation"] = {w.permutation[0] + 1, w.permutation[1] + 1, w.permutation[2] + 1};
  if (w.kind == NeighborhoodKind::A3)
    j["data"] = {w.data[0], w.data[1], w.data[2], w.data[3]};
  else
    j["data"] = {w.data[0]};
  j["text"] = w.describe();
  return j;
}

InputDocument load(const Options& o) { return parse_input(read_file(o.file)); }

void cmd_cartan(const Options& o, Report& r) {
  const InputDocument doc = load(o);
  r.doc["dynkin"] = dynkin_json(doc.dynkin);
  dynkin_text(r.text, doc.dynkin);
  const IntMatrix a = cartan_matrix(doc.dynkin);
  r.doc["cartan"] = a;
  r.text << "cartan:\n";
  matrix_text(r.text, a, "  ");
}

void cmd_reflect(const Options& o, Report& r) {
  const InputDocument doc = load(o);
  if (o.index < 1 || o.index > doc.rank())
    fail(ErrorCode::ValidationError, "-i must lie in 1.." + std::to_string(doc.rank()));
  const DynkinData out = reflect(doc.dynkin, o.index - 1, ReflectMode::Verify);
  r.doc["index"] = o.index;
  r.doc["input"] = dynkin_json(doc.dynkin);
  r.doc["result"] = dynkin_json(out);
  r.text << "r" << o.index << " of " << doc.dynkin.describe() << "\n";
  dynkin_text(r.text, out);
}

void cmd_orbit(const Options& o, Report& r) {
  const InputDocument doc = load(o);
  const CartanGraph g = build_cartan_graph(doc.dynkin, o.limits);
  r.doc["points"] = json::array();
  r.text << g.size() << " point" << (g.size() == 1 ? "" : "s") << "\n";
  for (std::size_t x = 0; x < g.size(); ++x) {
    const Point& pt = g.points[x];
    r.doc["points"].push_back({{"index", x + 1},
                               {"id", point_digest(pt.key)},
                               {"word", word_text(pt.word)},
                               {"dynkin", dynkin_json(pt.dynkin)},
                               {"cartan", pt.cartan}});
    r.text << "point " << x + 1 << " [" << word_text(pt.word) << "]: " << pt.dynkin.describe() << "\n";
    matrix_text(r.text, pt.cartan, "    ");
  }
  r.doc["edges"] = json::array();
  for (const auto& e : exchange_graph(g)) {
    r.doc["edges"].push_back({{"a", e.a + 1}, {"b", e.b + 1}, {"labels", e.labels}});
    r.text << "edge " << e.a + 1 << " - " << e.b + 1 << ":";
    for (int l : e.labels) r.text << " " << l;
    r.text << "\n";
  }
  for (const auto& w : g.warnings) r.text << "warning: " << w << "\n";
  r.doc["warnings"] = g.warnings;
  if (!o.dot.empty()) {
    std::ofstream f(o.dot, std::ios::binary);
    if (!f) fail(ErrorCode::ValidationError, "cannot write " + o.dot);
    f << to_dot(g);
    r.doc["dot"] = o.dot;
  }
}

void cmd_roots(const Options& o, Report& r) {
  const InputDocument doc = load(o);
  const CartanGraph g = build_cartan_graph(doc.dynkin, o.limits);
  const RootSystemData roots = real_roots(g, o.limits);
  r.doc["points"] = g.size();
  r.doc["finite"] = roots.finite;
  r.text << "points: " << g.size() << "\n";
  if (!roots.finite) {
    r.code = 1;
    r.doc["reason"] = roots.reason;
    r.text << "root system: not finite (" << roots.reason << ")\n";
    return;
  }
  const auto order = weyl_groupoid_order(g, o.limits.morphism_cap);
  r.doc["morphisms"] = order ? json(*order) : json(nullptr);
  r.doc["roots"] = json::array();
  r.text << "root system: finite\n";
  if (order) r.text << "morphisms: " << *order << "\n";
  for (std::size_t x = 0; x < g.size(); ++x) {
    const auto pos = roots.positive(x);
    json pj = json::array();
    for (const auto& a : pos) pj.push_back(a);
    r.doc["roots"].push_back({{"index", x + 1}, {"dynkin", g.points[x].dynkin.describe()}, {"positive", pj}});
    r.text << "point " << x + 1 << ": " << g.points[x].dynkin.describe() << "\n  " << pos.size() << " positive:";
    for (const auto& a : pos) r.text << " " << root_text(a);
    r.text << "\n";
  }
}

void cmd_classify(const Options& o, Report& r) {
  const InputDocument doc = load(o);
  const ClassifyResult c = classify(doc.dynkin, o.limits);
  r.doc["dynkin"] = dynkin_json(doc.dynkin);
  r.doc["characteristic"] = doc.p;
  r.doc["matches"] = json::array();
  for (const auto& m : c.matches) {
    json a = json::object();
    for (const auto& [name, value] : m.assignment) a[name] = to_string(value);
    r.doc["matches"].push_back({{"row", m.row_id},
                                {"diagram", m.diagram_id},
                                {"permutation", {m.permutation[0] + 1, m.permutation[1] + 1, m.permutation[2] + 1}},
                                {"assignment", a},
                                {"text", m.describe()}});
  }
  r.doc["heck_rows"] = c.heck_rows;
  r.doc["finite_root_system"] = c.finite;
  r.doc["points"] = c.points;
  r.doc["positive_roots"] = c.positive_roots ? json(*c.positive_roots) : json(nullptr);
  if (!c.finite) r.doc["reason"] = c.reason;

  r.text << "input: " << doc.dynkin.describe() << "\n";
  if (c.matches.empty()) {
    r.code = 1;
    r.text << "no table row matches\n";
    r.text << "root system: not finite (" << c.reason << ")\n";
    return;
  }
  for (const auto& m : c.matches) r.text << "match: " << m.describe() << "\n";
  r.text << "heck rows:";
  for (int h : c.heck_rows) r.text << " " << h;
  r.text << "\npoints: " << c.points << "\n";
  if (c.positive_roots) r.text << "positive roots: " << *c.positive_roots << "\n";
}

void cmd_good(const Options& o, Report& r) {
  const InputDocument doc = load(o);
  if (doc.rank() != 3) fail(ErrorCode::RankMismatch, "good neighborhoods need rank 3");
  const CartanGraph g = build_cartan_graph(doc.dynkin, o.limits);
  const auto gp = find_good_point(g);
  r.doc["points"] = g.size();
  if (!gp) {
    r.code = 1;
    r.doc["witness"] = nullptr;
    r.text << "no good A3, B3 or C3 neighborhood among " << g.size() << " points\n";
    return;
  }
  const Point& pt = g.points[gp->point];
  r.doc["point"] = {{"index", gp->point + 1}, {"word", word_text(pt.word)}, {"dynkin", dynkin_json(pt.dynkin)}};
  r.doc["witness"] = witness_json(gp->witness);
  r.doc["multiplicity"] = gp->multiplicity;
  r.text << "point " << gp->point + 1 << " [" << word_text(pt.word) << "]: " << pt.dynkin.describe() << "\n";
  r.text << "witness: " << gp->witness.describe() << "\n";
  r.text << "witnesses in the graph: " << gp->multiplicity << "\n";
}

void cmd_verify_tables(const Options& o, Report& r) {
  const TablesReport rep = verify_all_tables(o.p, o.limits);
  r.doc["characteristic"] = o.p;
  r.doc["rows"] = rep.row_count();
  r.doc["rows_passed"] = rep.rows_passed();
  r.doc["instances"] = json::array();
  for (const auto& x : rep.instances) {
    r.doc["instances"].push_back({{"row", x.row_id},
                                  {"instance", x.instance},
                                  {"ok", x.ok()},
                                  {"points", x.points},
                                  {"positive_roots", x.positive_roots},
                                  {"good_point", x.good_point},
                                  {"failures", x.failures},
                                  {"notes", x.notes}});
    r.text << "row " << x.row_id << (x.instance.empty() ? "" : " (" + x.instance + ")") << ": "
           << (x.ok() ? "ok" : "FAILED") << ", " << x.points << " points, " << x.positive_roots << " positive roots\n";
    r.text << "  good point: " << x.good_point << "\n";
    for (const auto& f : x.failures) r.text << "  failure: " << f << "\n";
    for (const auto& n : x.notes) r.text << "  note: " << n << "\n";
  }
  r.doc["ok"] = rep.ok();
  r.text << "p=" << o.p << ": " << rep.rows_passed() << "/" << rep.row_count() << " rows pass\n";
  if (!rep.ok()) r.code = 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Cartan graphs, root systems and classification of rank three diagonal braidings", "nichols"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_flag("--json", o.json, "Write a JSON document instead of text");
  app.add_option("--max-points", o.limits.max_points, "Bound on the number of points of a Cartan graph")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-roots", o.limits.max_roots, "Bound on the number of roots per point")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-coeff", o.limits.max_coeff, "Bound on root coefficients")->check(CLI::PositiveNumber);

  std::string command;
  auto with_file = [&](const std::string& name, const std::string& help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("file", o.file, "Input document")->required();
    sub->callback([&command, name] { command = name; });
    return sub;
  };
  with_file("cartan", "Print the Cartan matrix");
  with_file("reflect", "Print the reflected Dynkin diagram")->add_option("-i", o.index, "Vertex, 1-based")->required();
  with_file("orbit", "Points and exchange graph of the Cartan graph")
      ->add_option("--dot", o.dot, "Also write the exchange graph in DOT format");
  with_file("roots", "Real roots and finiteness of the root system");
  with_file("classify", "Match against the classification tables");
  with_file("good-neighborhood", "Find a point with a good A3, B3 or C3 neighborhood");
  auto* vt = app.add_subcommand("verify-tables", "Check the built-in tables against the engine");
  vt->add_option("--p", o.p, "Characteristic")->required();
  vt->callback([&command] { command = "verify-tables"; });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  Report r;
  std::string error_code, error_message;
  try {
    if (command == "cartan") cmd_cartan(o, r);
    else if (command == "reflect") cmd_reflect(o, r);
    else if (command == "orbit") cmd_orbit(o, r);
    else if (command == "roots") cmd_roots(o, r);
    else if (command == "classify") cmd_classify(o, r);
    else if (command == "good-neighborhood") cmd_good(o, r);
    else cmd_verify_tables(o, r);
  } catch (const Error& e) {
    r.code = exit_code(e.code());
    error_code = error_code_name(e.code());
    error_message = e.what();
  } catch (const std::exception& e) {
    r.code = 3;
    error_code = "InternalError";
    error_message = e.what();
  }

  if (o.json) {
    json doc;
    doc["schema"] = kSchema;
    doc["command"] = command;
    doc["status"] = r.code == 0 ? "ok" : !error_code.empty() ? "error" : "negative";
    doc["exit_code"] = r.code;
    if (!error_code.empty()) {
      doc["error"] = {{"code", error_code}, {"message", error_message}};
      if (r.code == 1) doc["status"] = "negative";
    }
    for (auto& [k, v] : r.doc.items()) doc[k] = v;
    out << doc.dump(2) << "\n";
  } else {
    out << r.text.str();
    if (!error_code.empty()) err << "error: " << error_code << ": " << error_message << "\n";
  }
  return r.code;
}

}  // namespace nichols::cli
