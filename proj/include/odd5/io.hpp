#pragma once

// JSON files: graphs with their embedding, colorings, solve traces and
// detector output. Unknown fields are rejected.

#include <fstream>
#include <initializer_list>
#include <set>
#include <sstream>
#include <string>

#include <json.hpp>

#include "odd5/generators.hpp"
#include "odd5/solver.hpp"

namespace odd5 {

using json = nlohmann::json;

namespace detail {

inline void only_fields(const json& j, std::initializer_list<const char*> allowed, const char* what) {
  if (!j.is_object()) throw input_error(std::string(what) + ": expected a JSON object");
  for (auto it = j.begin(); it != j.end(); ++it)
    if (std::find_if(allowed.begin(), allowed.end(), [&](const char* a) { return it.key() == a; }) == allowed.end())
      throw input_error(std::string(what) + ": unknown field \"" + it.key() + "\"");
}

inline const json& field(const json& j, const char* name, const char* what) {
  auto it = j.find(name);
  if (it == j.end()) throw input_error(std::string(what) + ": missing field \"" + name + "\"");
  return *it;
}

inline int as_int(const json& j, const std::string& what) {
  if (!j.is_number_integer()) throw input_error(what + ": expected an integer");
  return j.get<int>();
}

inline vertex as_vertex(const json& j, int n, const std::string& what) {
  int v = as_int(j, what);
  if (v < 0 || v >= n) throw structural_error(what + ": vertex " + std::to_string(v) + " outside [0," + std::to_string(n) + ")");
  return v;
}

inline vertex key_vertex(const std::string& key, int n, const std::string& what) {
  std::size_t used = 0;
  int v = -1;
  try {
    v = std::stoi(key, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != key.size() || key.empty()) throw input_error(what + ": key \"" + key + "\" is not a vertex id");
  if (v < 0 || v >= n) throw structural_error(what + ": vertex " + key + " outside [0," + std::to_string(n) + ")");
  return v;
}

inline walk parse_walk(const json& j, int n, const char* what) {
  if (!j.is_array()) throw input_error(std::string(what) + ": expected an array");
  walk w;
  for (const auto& x : j) w.push_back(as_vertex(x, n, what));
  return w;
}

// A face is one walk or a list of walks, one per component.
inline std::vector<walk> parse_face(const json& j, int n, const char* what) {
  if (j.is_null()) return {};
  if (!j.is_array()) throw input_error(std::string(what) + ": expected an array or null");
  if (!j.empty() && j.front().is_array()) {
    std::vector<walk> ws;
    for (const auto& x : j) ws.push_back(parse_walk(x, n, what));
    return ws;
  }
  if (j.empty()) return {};
  return {parse_walk(j, n, what)};
}

inline json face_json(const std::vector<walk>& ws) {
  if (ws.empty()) return nullptr;
  if (ws.size() == 1) return ws.front();
  return ws;
}

}  // namespace detail

inline embedded graph_from_json(const json& j) {
  if (!j.is_object()) throw input_error("graph: expected a JSON object");
  std::string kind;
  const json& k = detail::field(j, "kind", "graph");
  if (!k.is_string()) throw input_error("graph: \"kind\" must be a string");
  kind = k.get<std::string>();
  if (kind == "o1p")
    detail::only_fields(j, {"kind", "n", "edges", "order"}, "graph");
  else if (kind == "2bp")
    detail::only_fields(j, {"kind", "n", "edges", "rotation", "outer_face", "inner_face"}, "graph");
  else
    throw input_error("graph: unknown kind \"" + kind + "\"");
  int n = detail::as_int(detail::field(j, "n", "graph"), "graph.n");
  if (n < 0) throw input_error("graph.n must be >= 0");
  graph g(n);
  const json& es = detail::field(j, "edges", "graph");
  if (!es.is_array()) throw input_error("graph.edges: expected an array");
  for (const auto& e : es) {
    if (!e.is_array() || e.size() != 2) throw input_error("graph.edges: each edge is a pair [u,v]");
    vertex u = detail::as_vertex(e[0], n, "graph.edges"), v = detail::as_vertex(e[1], n, "graph.edges");
    if (u == v) throw structural_error("graph.edges: loop at " + std::to_string(u));
    if (g.has_edge(u, v)) throw structural_error("graph.edges: repeated edge " + std::to_string(u) + "-" + std::to_string(v));
    g.add_edge(u, v);
  }
  if (kind == "o1p") {
    o1p_embedding emb{std::move(g), detail::parse_walk(detail::field(j, "order", "graph"), n, "graph.order")};
    return emb;
  }
  two_boundary_embedding emb;
  emb.g = std::move(g);
  emb.rotation.assign(n, {});
  const json& rot = detail::field(j, "rotation", "graph");
  if (!rot.is_object()) throw input_error("graph.rotation: expected an object {vertex: [neighbors]}");
  for (auto it = rot.begin(); it != rot.end(); ++it) {
    vertex v = detail::key_vertex(it.key(), n, "graph.rotation");
    emb.rotation[v] = detail::parse_walk(it.value(), n, "graph.rotation");
  }
  emb.outer_face = detail::parse_face(detail::field(j, "outer_face", "graph"), n, "graph.outer_face");
  if (auto it = j.find("inner_face"); it != j.end())
    emb.inner_face = detail::parse_face(*it, n, "graph.inner_face");
  return emb;
}

inline json to_json(const embedded& e) {
  json j;
  const graph& g = graph_of(e);
  j["kind"] = std::holds_alternative<o1p_embedding>(e) ? "o1p" : "2bp";
  j["n"] = g.capacity();
  json es = json::array();
  for (const edge& x : g.edges()) es.push_back({x.u, x.v});
  j["edges"] = es;
  if (auto* o = std::get_if<o1p_embedding>(&e)) {
    j["order"] = o->order;
  } else {
    const auto& t = std::get<two_boundary_embedding>(e);
    json rot = json::object();
    for (vertex v : g.vertices()) rot[std::to_string(v)] = v < static_cast<int>(t.rotation.size()) ? t.rotation[v] : walk{};
    j["rotation"] = rot;
    j["outer_face"] = t.outer_face.empty() ? json::array() : detail::face_json(t.outer_face);
    j["inner_face"] = detail::face_json(t.inner_face);
  }
  return j;
}

// Colors above k are kept so that verification can name them.
inline coloring coloring_from_json(const json& j, int n) {
  detail::only_fields(j, {"k", "colors"}, "coloring");
  int k = detail::as_int(detail::field(j, "k", "coloring"), "coloring.k");
  if (k < 1) throw input_error("coloring.k must be >= 1");
  const json& cs = detail::field(j, "colors", "coloring");
  if (!cs.is_object()) throw input_error("coloring.colors: expected an object {vertex: color}");
  int top = k;
  for (auto it = cs.begin(); it != cs.end(); ++it) {
    int c = detail::as_int(it.value(), "coloring.colors");
    if (c < 1) throw input_error("coloring.colors: colors are positive integers");
    top = std::max(top, c);
  }
  coloring out(top, n);
  for (auto it = cs.begin(); it != cs.end(); ++it)
    out.assign(detail::key_vertex(it.key(), n, "coloring.colors"), it.value().get<int>());
  return out;
}

inline json to_json(const coloring& c, const graph& g) {
  json cs = json::object();
  for (vertex v : g.vertices())
    if (c.assigned(v)) cs[std::to_string(v)] = c[v];
  return {{"k", c.palette()}, {"colors", cs}};
}

inline json to_json(const configuration& c) {
  json b = json::object();
  const auto& names = role_names(c.tag);
  for (std::size_t i = 0; i < names.size() && i < c.bound.size(); ++i) b[names[i]] = c.bound[i];
  return {{"tag", std::string(tag_name(c.tag))}, {"bindings", b}};
}

inline json to_json(const special_graph& s) {
  std::vector<vertex> u(s.iso.begin(), s.iso.begin() + s.n), v(s.iso.begin() + s.n, s.iso.end());
  return {{"special", s.type == special_graph::kind::m ? "M" : "P"}, {"n", s.n}, {"u", u}, {"v", v}};
}

inline json to_json(const solve_trace& t, const graph& g) {
  json steps = json::array();
  for (std::size_t i = 0; i < t.steps.size(); ++i) {
    const auto& s = t.steps[i];
    json st = to_json(s.config);
    json re = json::array(), ad = json::array();
    for (const edge& e : s.removed_edges) re.push_back({e.u, e.v});
    for (const edge& e : s.added_edges) ad.push_back({e.u, e.v});
    st["removed_vertices"] = s.removed_vertices;
    st["removed_edges"] = re;
    st["added_edges"] = ad;
    st["measure_before"] = t.measures[i];
    st["measure_after"] = t.measures[i + 1];
    st["decrement"] = documented_decrement(s.config.tag);
    if (i < t.branches.size()) st["branch"] = t.branches[i];
    steps.push_back(st);
  }
  json j = {{"steps", steps}, {"base_case", to_string(t.base)}, {"oracle_fallback", t.oracle_fallback}};
  if (t.special_n) j["special_n"] = t.special_n;
  graph base = g;
  for (const auto& s : t.steps) base = reduce(base, s);
  j["base_coloring"] = to_json(t.base_coloring, base);
  return j;
}

inline json to_json(const solve_result& r, const graph& g) {
  json comps = json::array();
  auto parts = g.components();
  for (std::size_t i = 0; i < r.components.size(); ++i) {
    json c = to_json(r.components[i], g.induced(parts[i]));
    c["vertices"] = parts[i];
    comps.push_back(c);
  }
  return {{"k", r.colors.palette()}, {"components", comps}};
}

// Graphviz description with the colors as labels and fill indices.
inline std::string to_dot(const graph& g, const coloring& c) {
  std::ostringstream os;
  os << "graph odd5 {\n  node [style=filled, colorscheme=set19];\n";
  for (vertex v : g.vertices())
    os << "  " << v << " [label=\"" << v << ":" << c[v] << "\", fillcolor=" << std::max(1, std::min(c[v], 9)) << "];\n";
  for (const edge& e : g.edges()) os << "  " << e.u << " -- " << e.v << ";\n";
  os << "}\n";
  return os.str();
}

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw input_error(path + ": " + e.what());
  }
}

inline void write_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw input_error("cannot write " + path);
  out << j.dump(2) << "\n";
}

}  // namespace odd5
