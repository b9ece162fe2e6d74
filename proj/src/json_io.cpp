#include "toricalc/json_io.hpp"

#include <stdexcept>

namespace toricalc::json_io {

namespace {

[[noreturn]] void malformed(const std::string& what) {
  throw std::invalid_argument(what);
}

const json& require(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) malformed(std::string("missing key \"") + key + "\"");
  return j.at(key);
}

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\n\r");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\n\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split_csv(std::string_view csv) {
  std::vector<std::string> out;
  if (trim(csv).empty()) return out;
  std::size_t start = 0;
  for (;;) {
    auto pos = csv.find(',', start);
    out.push_back(trim(csv.substr(start, pos == std::string_view::npos ? pos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

} // namespace

BigInt parse_integer_text(std::string_view text) {
  std::string s = trim(text);
  std::size_t digits = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (s.size() == digits) malformed("empty integer");
  for (std::size_t i = digits; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') malformed("not an integer: \"" + s + "\"");
  if (s[0] == '+') s.erase(0, 1);
  return BigInt(s, 10);
}

BigInt parse_integer(const json& j) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return BigInt(j.get<unsigned long>());
    return BigInt(j.get<long>());
  }
  if (j.is_string()) return parse_integer_text(j.get<std::string>());
  malformed("expected an integer, got " + j.dump());
}

BigRat parse_rational(std::string_view text) {
  std::string s = trim(text);
  auto slash = s.find('/');
  if (slash == std::string::npos) return BigRat(parse_integer_text(s));
  BigInt num = parse_integer_text(std::string_view(s).substr(0, slash));
  BigInt den = parse_integer_text(std::string_view(s).substr(slash + 1));
  if (den == 0) malformed("zero denominator in \"" + s + "\"");
  BigRat q(num, den);
  q.canonicalize();
  return q;
}

IntVector parse_int_vector(const json& j) {
  if (!j.is_array()) malformed("expected an array of integers, got " + j.dump());
  IntVector out;
  for (const auto& x : j) out.push_back(parse_integer(x));
  return out;
}

IntegerMatrix parse_matrix(const json& j, std::size_t cols) {
  if (!j.is_array()) malformed("expected an array of rows");
  std::vector<IntVector> rows;
  for (const auto& r : j) {
    rows.push_back(parse_int_vector(r));
    if (rows.back().size() != cols) malformed("matrix row has the wrong length");
  }
  return IntegerMatrix::from_rows(rows, cols);
}

Polyhedron parse_polyhedron(const json& j) {
  const json& dim = require(j, "dim");
  if (!dim.is_number_unsigned()) malformed("\"dim\" must be a nonnegative integer");
  const std::size_t d = dim.get<std::size_t>();
  const json& ineqs = require(j, "inequalities");
  if (!ineqs.is_array()) malformed("\"inequalities\" must be an array");
  Polyhedron p;
  p.dim = d;
  for (const auto& q : ineqs) {
    IntVector a = parse_int_vector(require(q, "a"));
    if (a.size() != d) malformed("inequality normal has the wrong length");
    p.inequalities.push_back({std::move(a), parse_integer(require(q, "b"))});
  }
  return p;
}

LinearizedAction parse_action(const json& j) {
  const json& n = require(j, "n");
  if (!n.is_number_unsigned()) malformed("\"n\" must be a nonnegative integer");
  const std::size_t count = n.get<std::size_t>();
  IntegerMatrix w = parse_matrix(require(j, "weights"), count);
  IntVector alpha = parse_int_vector(require(j, "linearization"));
  return LinearizedAction(count, std::move(w), std::move(alpha));
}

Support parse_support(std::string_view csv, std::size_t n) {
  Support s;
  for (const auto& item : split_csv(csv)) {
    BigInt idx = parse_integer_text(item);
    if (idx < 1 || idx > static_cast<unsigned long>(n))
      malformed("support index " + item + " outside 1.." + std::to_string(n));
    s.indices.insert(idx.get_ui() - 1);
  }
  return s;
}

RatVector parse_point(std::string_view csv) {
  RatVector out;
  for (const auto& item : split_csv(csv)) out.push_back(parse_rational(item));
  return out;
}

json to_json(const BigInt& x) { return x.get_str(); }

json to_json(const BigRat& x) { return x.get_str(); }

json to_json(const IntVector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

json to_json(const RatVector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

json to_json(const IntegerMatrix& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(to_json(m.row(i)));
  return out;
}

json to_json(const Polyhedron& p) {
  json ineqs = json::array();
  for (const auto& q : p.inequalities)
    ineqs.push_back({{"a", to_json(q.a)}, {"b", to_json(q.b)}});
  return {{"dim", p.dim}, {"inequalities", ineqs}};
}

json to_json(const LinearizedAction& a) {
  return {{"n", a.n},
          {"weights", to_json(a.weights)},
          {"linearization", to_json(a.linearization)}};
}

json to_json(const VRepresentation& v) {
  json lin = json::array(), rays = json::array(), verts = json::array();
  for (const auto& x : v.lineality) lin.push_back(to_json(x));
  for (const auto& x : v.rays) rays.push_back(to_json(x));
  for (const auto& x : v.points()) verts.push_back(to_json(x));
  return {{"empty", v.empty},
          {v.lineality.empty() ? "vertices" : "base_points", verts},
          {"rays", rays},
          {"lineality", lin}};
}

json to_json(const GradedSemigroupElement& g) {
  return {{"point", to_json(g.point)}, {"degree", g.degree.get_ui()}};
}

json to_json(const RingPresentation& r) {
  json gens = json::array();
  for (const auto& g : r.generators) gens.push_back(to_json(g));
  json rels = json::array();
  for (const auto& [degree, rel] : r.relations_by_degree) {
    json binomials = json::array();
    for (const auto& b : rel.binomials) binomials.push_back({b.lhs, b.rhs});
    rels.push_back({{"degree", degree},
                    {"monomials", rel.monomial_count},
                    {"hilbert", rel.hilbert_value},
                    {"kernel_dimension", rel.kernel_dimension},
                    {"binomials", binomials}});
  }
  return {{"generators", gens}, {"relations", rels}};
}

json to_json(const Support& s) {
  json out = json::array();
  for (std::size_t i : s.indices) out.push_back(i + 1);
  return out;
}

} // namespace toricalc::json_io
