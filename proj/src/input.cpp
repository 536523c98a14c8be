#include "nichols/input.hpp"

#include <cctype>
#include <cstdint>
#include <map>
#include <set>

#include "nichols/errors.hpp"

namespace nichols {

namespace {

struct Value {
  enum class Kind { Int, Str, Bare, Array } kind = Kind::Int;
  std::int64_t i = 0;
  std::string s;
  std::vector<Value> items;
  std::size_t line = 0, col = 0;
};

std::string where(std::size_t line, std::size_t col) {
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

[[noreturn]] void invalid(const Value& v, const std::string& msg) {
  fail(ErrorCode::ValidationError, where(v.line, v.col) + ": " + msg);
}

bool bare_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '^' || c == '*' || c == '-';
}

class Reader {
 public:
  explicit Reader(std::string_view text) : text_(text) {}

  // key -> value, keys of [dynkin] are prefixed with "dynkin."
  std::map<std::string, Value> document() {
    std::map<std::string, Value> out;
    std::string section;
    while (true) {
      skip_blank_lines();
      if (eof()) break;
      const std::size_t l = line_, c = col_;
      if (peek() == '[') {
        get();
        skip_spaces();
        section = ident();
        skip_spaces();
        expect(']');
        end_of_line();
        if (section != "dynkin") fail(ErrorCode::ValidationError, where(l, c) + ": unknown section [" + section + "]");
        if (!seen_sections_.insert(section).second)
          fail(ErrorCode::ValidationError, where(l, c) + ": duplicate section [" + section + "]");
        continue;
      }
      std::string key = ident();
      skip_spaces();
      expect('=');
      skip_spaces();
      Value v = value();
      end_of_line();
      if (!section.empty()) key = section + "." + key;
      if (out.count(key)) fail(ErrorCode::ValidationError, where(l, c) + ": duplicate key '" + key + "'");
      out.emplace(key, std::move(v));
    }
    return out;
  }

 private:
  bool eof() const { return pos_ >= text_.size(); }
  char peek() const { return eof() ? '\0' : text_[pos_]; }

  char get() {
    const char ch = text_[pos_++];
    if (ch == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return ch;
  }

  [[noreturn]] void syntax(const std::string& msg) const {
    fail(ErrorCode::SyntaxError, where(line_, col_) + ": " + msg);
  }

  void expect(char ch) {
    if (peek() != ch) syntax(std::string("expected '") + ch + "'");
    get();
  }

  void skip_spaces() {
    while (!eof() && (peek() == ' ' || peek() == '\t' || peek() == '\r')) get();
  }

  void skip_comment() {
    if (peek() == '#')
      while (!eof() && peek() != '\n') get();
  }

  void skip_blank_lines() {
    while (true) {
      skip_spaces();
      skip_comment();
      if (peek() != '\n') return;
      get();
    }
  }

  void end_of_line() {
    skip_spaces();
    skip_comment();
    if (eof()) return;
    if (peek() != '\n') syntax("unexpected text after value");
    get();
  }

  std::string ident() {
    std::string out;
    while (!eof() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) out += get();
    if (out.empty()) syntax("expected a key");
    return out;
  }

  Value value() {
    Value v;
    v.line = line_;
    v.col = col_;
    const char ch = peek();
    if (ch == '[') {
      get();
      v.kind = Value::Kind::Array;
      skip_blank_lines();
      while (peek() != ']') {
        v.items.push_back(value());
        skip_blank_lines();
        if (peek() == ',') {
          get();
          skip_blank_lines();
        } else if (peek() != ']') {
          syntax("expected ',' or ']'");
        }
      }
      get();
      return v;
    }
    if (ch == '"') {
      get();
      v.kind = Value::Kind::Str;
      while (peek() != '"') {
        if (eof() || peek() == '\n') syntax("unterminated string");
        if (peek() == '\\') syntax("escapes are not supported");
        v.s += get();
      }
      get();
      return v;
    }
    if (!bare_char(ch)) syntax(eof() ? "expected a value" : std::string("unexpected character '") + ch + "'");
    while (!eof() && bare_char(peek())) v.s += get();
    std::size_t digits = v.s[0] == '-' ? 1 : 0;
    bool numeric = v.s.size() > digits;
    for (std::size_t k = digits; k < v.s.size(); ++k)
      if (!std::isdigit(static_cast<unsigned char>(v.s[k]))) numeric = false;
    if (numeric && v.s.size() < 19) {
      v.kind = Value::Kind::Int;
      v.i = std::stoll(v.s);
    } else {
      v.kind = Value::Kind::Bare;
    }
    return v;
  }

  std::string_view text_;
  std::size_t pos_ = 0, line_ = 1, col_ = 1;
  std::set<std::string> seen_sections_;
};

std::string as_text(const Value& v) {
  if (v.kind == Value::Kind::Array) invalid(v, "expected a scalar expression, got an array");
  return v.s;
}

const std::vector<Value>& as_array(const Value& v, const std::string& what) {
  if (v.kind != Value::Kind::Array) invalid(v, what + " must be an array");
  return v.items;
}

std::int64_t as_int(const Value& v, const std::string& what) {
  if (v.kind != Value::Kind::Int) invalid(v, what + " must be an integer");
  return v.i;
}

Scalar parse_scalar(const ScalarContext& ctx, const Value& v) {
  const std::string s = as_text(v);
  try {
    return ctx.parse(s);
  } catch (const Error& e) {
    fail(e.code(), where(v.line, v.col) + ": '" + s + "': " + e.what());
  }
}

GeneratorSpec parse_generator(const Value& v) {
  const std::string s = as_text(v);
  GeneratorSpec g;
  const auto colon = s.find(':');
  g.name = s.substr(0, colon);
  if (g.name.empty() || !std::isalpha(static_cast<unsigned char>(g.name[0])))
    invalid(v, "bad generator name '" + g.name + "'");
  for (char c : g.name)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') invalid(v, "bad generator name '" + g.name + "'");
  if (colon != std::string::npos) {
    const std::string o = s.substr(colon + 1);
    bool ok = !o.empty() && o.size() < 10;
    for (char c : o) ok = ok && std::isdigit(static_cast<unsigned char>(c));
    if (!ok || std::stoll(o) < 1) invalid(v, "bad order '" + o + "' for generator " + g.name);
    g.order = std::stoll(o);
  }
  return g;
}

}  // namespace

InputDocument parse_input(std::string_view text) {
  auto keys = Reader(text).document();
  static const std::set<std::string> known{"p", "generators", "generator", "relations", "matrix", "dynkin.vertices",
                                           "dynkin.edges"};
  for (const auto& [k, v] : keys)
    if (!known.count(k)) invalid(v, "unknown key '" + k + "'");
  if (keys.count("generators") && keys.count("generator"))
    invalid(keys.at("generator"), "'generator' and 'generators' are the same key");

  InputDocument doc;
  if (!keys.count("p")) fail(ErrorCode::ValidationError, "missing key 'p'");
  const Value& pv = keys.at("p");
  const std::int64_t p = as_int(pv, "p");
  if (p < 0 || p > 1000000) fail(ErrorCode::InvalidChar, where(pv.line, pv.col) + ": unsupported characteristic " + pv.s);
  doc.p = static_cast<int>(p);

  for (const char* k : {"generators", "generator"})
    if (keys.count(k))
      for (const auto& g : as_array(keys.at(k), k)) doc.generators.push_back(parse_generator(g));
  const Value* rel_value = keys.count("relations") ? &keys.at("relations") : nullptr;
  if (rel_value)
    for (const auto& r : as_array(*rel_value, "relations")) doc.relations.push_back(as_text(r));

  try {
    doc.ctx = ScalarContext::create(doc.p, doc.generators, doc.relations);
  } catch (const Error& e) {
    const Value& at = e.code() == ErrorCode::InvalidChar ? pv
                      : rel_value && e.code() == ErrorCode::BadRelation
                          ? *rel_value
                          : keys.count("generators") ? keys.at("generators")
                          : keys.count("generator")  ? keys.at("generator")
                                                     : pv;
    fail(e.code(), where(at.line, at.col) + ": " + e.what());
  }

  const bool has_matrix = keys.count("matrix");
  const bool has_dynkin = keys.count("dynkin.vertices") || keys.count("dynkin.edges");
  if (has_matrix == has_dynkin) fail(ErrorCode::ValidationError, "give exactly one of 'matrix' and a [dynkin] section");

  if (has_matrix) {
    const Value& mv = keys.at("matrix");
    const auto& rows = as_array(mv, "matrix");
    if (rows.empty()) invalid(mv, "matrix must have at least one row");
    BraidingMatrix b{doc.ctx, {}};
    for (const auto& r : rows) {
      const auto& cells = as_array(r, "each matrix row");
      if (cells.size() != rows.size())
        invalid(r, "matrix is not square: " + std::to_string(rows.size()) + " rows but a row of " +
                       std::to_string(cells.size()) + " entries");
      std::vector<Scalar> row;
      for (const auto& c : cells) row.push_back(parse_scalar(doc.ctx, c));
      b.q.push_back(std::move(row));
    }
    doc.dynkin = to_dynkin(b);
    doc.matrix = std::move(b);
    return doc;
  }

  if (!keys.count("dynkin.vertices")) fail(ErrorCode::ValidationError, "[dynkin] needs 'vertices'");
  const auto& verts = as_array(keys.at("dynkin.vertices"), "vertices");
  if (verts.empty()) invalid(keys.at("dynkin.vertices"), "vertices must not be empty");
  const int n = static_cast<int>(verts.size());
  std::vector<Scalar> diag;
  for (const auto& v : verts) diag.push_back(parse_scalar(doc.ctx, v));
  std::vector<std::vector<Scalar>> edge(n, std::vector<Scalar>(n, doc.ctx.one()));
  std::set<std::pair<int, int>> given;
  if (keys.count("dynkin.edges")) {
    for (const auto& e : as_array(keys.at("dynkin.edges"), "edges")) {
      const auto& parts = as_array(e, "each edge");
      if (parts.size() != 3) invalid(e, "an edge is [i, j, label]");
      const std::int64_t i = as_int(parts[0], "edge endpoint"), j = as_int(parts[1], "edge endpoint");
      if (i < 1 || j < 1 || i > n || j > n) invalid(e, "edge endpoint out of range 1.." + std::to_string(n));
      if (i == j) invalid(e, "an edge needs two distinct vertices");
      const int a = static_cast<int>(std::min(i, j)) - 1, b = static_cast<int>(std::max(i, j)) - 1;
      if (!given.insert({a, b}).second) invalid(e, "edge given twice");
      edge[a][b] = edge[b][a] = parse_scalar(doc.ctx, parts[2]);
    }
  }
  doc.dynkin = DynkinData(doc.ctx, std::move(diag), std::move(edge));
  return doc;
}

}  // namespace nichols
