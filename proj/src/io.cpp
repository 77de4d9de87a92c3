#include "rigidlines/io.hpp"

#include <cmath>

#include "rigidlines/errors.hpp"

namespace rigidlines {

namespace {

Json parse_doc(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError("json", e.what());
  }
}

const Json& field(const Json& doc, const char* key) {
  if (!doc.is_object()) throw ParseError("json", "expected an object");
  auto it = doc.find(key);
  if (it == doc.end()) throw ParseError(key, "missing field");
  return *it;
}

double number_at(const Json& v, const std::string& where) {
  if (!v.is_number()) throw ParseError(where, "expected a number");
  double x = v.get<double>();
  if (!std::isfinite(x)) throw ParseError(where, "not finite");
  return x;
}

std::vector<double> row_at(const Json& v, std::size_t width, const std::string& where) {
  if (!v.is_array() || v.size() != width)
    throw ParseError(where, "expected an array of " + std::to_string(width) + " numbers");
  std::vector<double> out;
  for (std::size_t k = 0; k < width; ++k) out.push_back(number_at(v[k], where + "[" + std::to_string(k) + "]"));
  return out;
}

Embedding points_at(const Json& v, const std::string& where) {
  if (!v.is_array()) throw ParseError(where, "expected an array of points");
  Embedding out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    auto r = row_at(v[i], 2, where + "[" + std::to_string(i) + "]");
    out.emplace_back(r[0], r[1]);
  }
  return out;
}

Json points_json(const Embedding& p) {
  Json arr = Json::array();
  for (const auto& q : p) arr.push_back({q.x(), q.y()});
  return arr;
}

int int_at(const Json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end() || !it->is_number_integer()) throw ParseError(where + "." + key, "missing or not an integer");
  return it->get<int>();
}

}  // namespace

Json lines_to_json(std::span<const Line> lines) {
  Json arr = Json::array();
  for (const auto& l : lines) arr.push_back({l.a, l.b, l.c, l.d});
  return Json{{"lines", arr}};
}

LineConfig parse_lines(std::string_view text) {
  const Json doc = parse_doc(text);
  const Json& arr = field(doc, "lines");
  if (!arr.is_array()) throw ParseError("lines", "expected an array");
  LineConfig out;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    auto r = row_at(arr[i], 4, "lines[" + std::to_string(i) + "]");
    out.push_back({r[0], r[1], r[2], r[3]});
  }
  return out;
}

Json embedding_to_json(const Embedding& p) { return Json{{"points", points_json(p)}}; }

Embedding parse_embedding(std::string_view text) {
  const Json doc = parse_doc(text);
  return points_at(field(doc, "points"), "points");
}

Json pair_to_json(const Embedding& p, const Embedding& p_prime) {
  return Json{{"p", points_json(p)}, {"p_prime", points_json(p_prime)}};
}

std::pair<Embedding, Embedding> parse_pair(std::string_view text) {
  const Json doc = parse_doc(text);
  Embedding p = points_at(field(doc, "p"), "p");
  Embedding q = points_at(field(doc, "p_prime"), "p_prime");
  if (p.size() != q.size()) throw ParseError("p_prime", "length differs from p");
  return {std::move(p), std::move(q)};
}

Json steps_to_json(std::span<const Move> steps) {
  Json arr = Json::array();
  for (const auto& s : steps) {
    Json o{{"kind", move_kind_name(s.kind)}, {"u", s.u}, {"v", s.v}};
    if (s.kind == Move::Kind::ext1) o["w"] = s.w;
    arr.push_back(o);
  }
  return arr;
}

std::vector<Move> parse_steps(std::string_view text) {
  Json doc = parse_doc(text);
  // A full extraction report is accepted as well as a bare list.
  if (doc.is_object() && doc.contains("steps")) doc = Json(doc["steps"]);
  if (!doc.is_array()) throw ParseError("json", "expected an array of steps");
  std::vector<Move> out;
  for (std::size_t k = 0; k < doc.size(); ++k) {
    const std::string where = "steps[" + std::to_string(k) + "]";
    const Json& o = doc[k];
    if (!o.is_object()) throw ParseError(where, "expected an object");
    auto kind = o.find("kind");
    if (kind == o.end() || !kind->is_string()) throw ParseError(where + ".kind", "missing or not a string");
    const std::string name = kind->get<std::string>();
    const int u = int_at(o, "u", where), v = int_at(o, "v", where);
    if (name == "ext0") {
      out.push_back(Move::ext0(u, v));
    } else if (name == "ext1") {
      out.push_back(Move::ext1(u, v, int_at(o, "w", where)));
    } else if (name == "edge") {
      out.push_back(Move::edge(u, v));
    } else {
      throw ParseError(where + ".kind", "unknown move '" + name + "'");
    }
  }
  return out;
}

Json report_to_json(const DimensionReport& r) {
  return Json{{"ambient_dim", r.ambient_dim},         {"constraint_count", r.constraint_count},
              {"jacobian_rank", r.jacobian_rank},     {"local_dim_estimate", r.local_dim},
              {"tol", r.tol},                         {"certified", r.certified},
              {"exact", r.exact}};
}

Json graph_to_json(const Graph& g) {
  Json edges = Json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  return Json{{"n", g.n()}, {"edges", edges}};
}

}  // namespace rigidlines
