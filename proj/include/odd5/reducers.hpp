#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "odd5/coloring.hpp"
#include "odd5/structure.hpp"

namespace odd5 {

struct reduction_step {
  configuration config;
  std::vector<vertex> removed_vertices;
  std::vector<edge> removed_edges;
  std::vector<edge> added_edges;
  int k = 5;
};

// Exact drop of |V|+|E| from G to the reduced graph.
inline int documented_decrement(config_tag t) {
  switch (t) {
    case config_tag::a1:
    case config_tag::a2:
    case config_tag::c1:
    case config_tag::c2: return 2;
    case config_tag::b1:
    case config_tag::b2: return 3;
    case config_tag::d1:
    case config_tag::e2: return 7;
    case config_tag::d2:
    case config_tag::g2:
    case config_tag::h2:
    case config_tag::i2: return 4;
  }
  return 0;
}

inline reduction_step plan_reduction(const graph& g, const configuration& c, int k) {
  if (!holds(g, c)) throw precondition_error("plan_reduction: " + std::string(tag_name(c.tag)) + " does not hold");
  reduction_step s;
  s.config = c;
  s.k = k;
  switch (c.tag) {
    case config_tag::a1:
    case config_tag::a2: s.removed_vertices = {c.at("v")}; break;
    case config_tag::b1:
    case config_tag::b2:
    case config_tag::d2: s.removed_vertices = {c.at("v")}; break;
    case config_tag::c1:
    case config_tag::c2:
      s.removed_vertices = {c.at("v")};
      s.added_edges = {edge(c.at("u"), c.at("w"))};
      break;
    case config_tag::d1: s.removed_vertices = {c.at("u"), c.at("v")}; break;
    case config_tag::e2: s.removed_vertices = {c.at("v"), c.at("w")}; break;
    case config_tag::g2: s.removed_vertices = {c.at("x")}; break;
    case config_tag::h2: s.removed_vertices = {c.at("u")}; break;
    case config_tag::i2: s.removed_vertices = {c.at("y")}; break;
  }
  std::set<edge> gone;
  for (vertex v : s.removed_vertices)
    for (vertex w : g.neighbors(v)) gone.insert(edge(v, w));
  s.removed_edges.assign(gone.begin(), gone.end());
  return s;
}

inline graph reduce(const graph& g, const reduction_step& s) {
  graph h = g;
  for (vertex v : s.removed_vertices) h.remove_vertex(v);
  for (const edge& e : s.added_edges) h.add_edge(e.u, e.v);
  return h;
}

struct extension {
  coloring colors;
  std::string branch;
  // Vertices the argument is allowed to color or recolor.
  std::vector<vertex> designated;
  bool repaired = false;
};

// Backtracking over the free vertices with everything else fixed. Used only
// when a proof branch fails verification.
inline std::optional<coloring> local_repair(const graph& g, const coloring& start, std::vector<vertex> free, int k) {
  std::sort(free.begin(), free.end());
  free.erase(std::unique(free.begin(), free.end()), free.end());
  coloring c = start;
  for (vertex v : free) c.erase(v);
  std::vector<int> index(g.capacity(), -1);
  for (std::size_t i = 0; i < free.size(); ++i) index[free[i]] = static_cast<int>(i);
  std::set<vertex> watch(free.begin(), free.end());
  for (vertex v : free)
    for (vertex w : g.neighbors(v)) watch.insert(w);
  // A watched vertex is checked once its last free neighbor is placed.
  std::vector<std::vector<vertex>> check_at(free.size() + 1);
  for (vertex w : watch) {
    int last = -1;
    for (vertex x : g.neighbors(w)) last = std::max(last, index[x]);
    check_at[last + 1].push_back(w);
  }
  auto fine = [&](vertex w) { return g.degree(w) == 0 || !profile_of(g, c, w).odd_set.empty(); };
  for (vertex w : check_at[0])
    if (!fine(w)) return std::nullopt;
  std::function<bool(std::size_t)> place = [&](std::size_t i) {
    if (i == free.size()) return true;
    vertex v = free[i];
    for (color col = 1; col <= k; ++col) {
      bool clash = false;
      for (vertex w : g.neighbors(v))
        if (c[w] == col) clash = true;
      if (clash) continue;
      c.assign(v, col);
      bool ok = true;
      for (vertex w : check_at[i + 1])
        if (!fine(w)) {
          ok = false;
          break;
        }
      if (ok && place(i + 1)) return true;
      c.erase(v);
    }
    return false;
  };
  if (!place(0)) return std::nullopt;
  return c;
}

namespace detail {

struct ext_ctx {
  const graph& g;
  const reduction_step& s;
  int k;
  coloring base;  // the reduced coloring, restricted to V(H)

  vertex at(const char* role) const { return s.config.at(role); }
  color c(vertex v) const { return base[v]; }
  color odd(vertex v) const { return unique_odd(g, base, v); }
  bool ok(const coloring& x) const { return is_odd_coloring(g, x, k); }
};

inline ext_ctx prepare(const graph& g, const reduction_step& s, const coloring& reduced, int min_k,
                       std::initializer_list<config_tag> tags) {
  if (std::find(tags.begin(), tags.end(), s.config.tag) == tags.end())
    throw precondition_error("extension called with configuration " + std::string(tag_name(s.config.tag)));
  if (s.k < min_k) throw precondition_error("extension needs k >= " + std::to_string(min_k));
  if (!holds(g, s.config))
    throw precondition_error(std::string(tag_name(s.config.tag)) + " bindings do not hold in G");
  graph h = reduce(g, s);
  coloring base(s.k, g.capacity());
  for (vertex v : h.vertices()) {
    if (!reduced.assigned(v)) throw precondition_error("reduced coloring misses vertex " + std::to_string(v));
    if (reduced[v] > s.k) throw precondition_error("reduced coloring exceeds the palette");
    base.assign(v, reduced[v]);
  }
  auto verdict = check_odd_coloring(h, base, s.k);
  if (!verdict) throw precondition_error("reduced coloring is not an odd coloring of H: " + verdict.describe());
  return {g, s, s.k, std::move(base)};
}

// Accept the proof's coloring, else search the designated vertices, then
// every bound vertex, before giving up.
inline extension finish(const ext_ctx& x, coloring cand, std::string branch, std::vector<vertex> designated) {
  std::sort(designated.begin(), designated.end());
  if (x.ok(cand)) return {std::move(cand), std::move(branch), std::move(designated), false};
  if (auto r = local_repair(x.g, cand, designated, x.k)) return {std::move(*r), branch + "+repair", designated, true};
  std::vector<vertex> all = x.s.config.bound;
  all.insert(all.end(), x.s.removed_vertices.begin(), x.s.removed_vertices.end());
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  if (auto r = local_repair(x.g, cand, all, x.k)) return {std::move(*r), branch + "+repair", all, true};
  throw reduction_failure(std::string(tag_name(x.s.config.tag)) + " extension failed verification (" + branch + ")");
}

// First candidate assignment that verifies; otherwise the first one.
inline coloring first_verified(const ext_ctx& x, const std::vector<coloring>& cands) {
  for (const auto& c : cands)
    if (x.ok(c)) return c;
  return cands.front();
}

inline color first_or_zero(const std::set<color>& s) { return s.empty() ? 0 : *s.begin(); }

inline color first_available(const graph& g, const coloring& c, vertex v, int k) {
  auto a = available_set(g, c, v, k);
  return a.empty() ? 1 : a.front();
}

inline color smallest_outside(int k, const std::set<color>& f) {
  for (color c = 1; c <= k; ++c)
    if (!f.count(c)) return c;
  return 0;
}

}  // namespace detail

inline extension extend_degree1(const graph& g, const reduction_step& s, const coloring& reduced) {
  auto x = detail::prepare(g, s, reduced, 3, {config_tag::a1, config_tag::a2});
  vertex v = x.at("v");
  coloring out = x.base;
  out.assign(v, detail::first_available(g, x.base, v, x.k));
  return detail::finish(x, out, "direct", {v});
}

inline extension extend_triangle_deg2(const graph& g, const reduction_step& s, const coloring& reduced) {
  auto x = detail::prepare(g, s, reduced, 5, {config_tag::b1, config_tag::b2});
  vertex v = x.at("v");
  coloring out = x.base;
  out.assign(v, detail::first_available(g, x.base, v, x.k));
  return detail::finish(x, out, "direct", {v});
}

inline extension extend_path_deg2(const graph& g, const reduction_step& s, const coloring& reduced) {
  if (s.config.bound.size() == 3 && g.has_edge(s.config.bound[0], s.config.bound[2]))
    throw precondition_error("extend_path_deg2: uw is an edge of G");
  auto x = detail::prepare(g, s, reduced, 5, {config_tag::c1, config_tag::c2});
  vertex u = x.at("u"), v = x.at("v"), w = x.at("w");
  graph h = reduce(g, s);
  auto pm = palette_map::canonical(x.k, {x.c(u), x.c(w)});
  color tou = pm.canon(unique_odd(h, x.base, u));
  color tow = pm.canon(unique_odd(h, x.base, w));
  // Odd colors at a vertex of G - v, outside {1, 2}, in canonical names.
  auto odd_outside = [&](vertex a) {
    std::set<color> s2;
    for (color c : profile_of(g, x.base, a).odd_set)
      if (pm.canon(c) > 2) s2.insert(pm.canon(c));
    return s2;
  };
  color pick;
  std::string branch;
  if (tou == 2 && tow == 1) {
    pick = 3;
    branch = "case1";
  } else if (tou == 2 || tow == 1) {
    bool mirror = tou != 2;
    vertex side = mirror ? u : w;
    color t = mirror ? tou : tow;
    color c = t != 0 ? t : detail::first_or_zero(odd_outside(side));
    pick = detail::smallest_outside(x.k, {1, 2, c});
    branch = mirror ? "case2-mirror" : "case2";
  } else {
    color a = detail::first_or_zero(odd_outside(u));
    color b = detail::first_or_zero(odd_outside(w));
    pick = detail::smallest_outside(x.k, {1, 2, a, b});
    branch = "case3";
  }
  coloring out = x.base;
  out.assign(v, pm.actual(pick));
  return detail::finish(x, out, branch, {v});
}

inline extension extend_deg3_two_odd(const graph& g, const reduction_step& s, const coloring& reduced) {
  if (s.config.tag == config_tag::d2 && s.config.bound.size() == 4)
    for (int i : {1, 2})
      if (g.contains(s.config.bound[i]) && g.degree(s.config.bound[i]) % 2 == 0)
        throw precondition_error("extend_deg3_two_odd: neighbor has even degree");
  auto x = detail::prepare(g, s, reduced, 5, {config_tag::d2});
  vertex v = x.at("v");
  coloring out = x.base;
  out.assign(v, detail::first_available(g, x.base, v, x.k));
  return detail::finish(x, out, "direct", {v});
}

// Triangle u v w with d(v) = d(w) = 3; E2 directly, D1 with the apex x as u
// and the two degree-3 vertices as v, w.
inline extension extend_triangle_33(const graph& g, const reduction_step& s, const coloring& reduced) {
  auto x = detail::prepare(g, s, reduced, 5, {config_tag::e2, config_tag::d1});
  vertex u, v, w;
  if (s.config.tag == config_tag::e2) {
    u = x.at("u"), v = x.at("v"), w = x.at("w");
  } else {
    u = x.at("x"), v = x.at("u"), w = x.at("v");
  }
  if (g.degree(u) % 2 == 1) {
    // As for a 3-vertex with two odd neighbors, once for v and once for w.
    coloring out = x.base;
    out.assign(v, detail::first_available(g, out, v, x.k));
    out.assign(w, detail::first_available(g, out, w, x.k));
    return detail::finish(x, out, "delegated", {v, w});
  }
  auto av = available_set(g, x.base, v, x.k);
  coloring phi = x.base;
  phi.assign(v, av[0]);
  auto aw = available_set(g, phi, w, x.k);
  if (!aw.empty()) {
    phi.assign(w, aw[0]);
    return detail::finish(x, phi, "direct", {v, w});
  }
  std::vector<coloring> cands;
  for (std::size_t i = 1; i < av.size(); ++i) {
    coloring c = x.base;
    c.assign(v, av[i]);
    c.assign(w, av[0]);
    cands.push_back(c);
  }
  return detail::finish(x, detail::first_verified(x, cands), "tight", {v, w});
}

inline extension extend_adjacent_triangles(const graph& g, const reduction_step& s, const coloring& reduced) {
  if (s.config.tag == config_tag::g2 && s.config.bound.size() == 7 && g.contains(s.config.bound[3]) &&
      g.degree(s.config.bound[3]) % 2 == 0)
    throw precondition_error("extend_adjacent_triangles: d(y) is even");
  auto X = detail::prepare(g, s, reduced, 5, {config_tag::g2});
  vertex x = X.at("x"), u = X.at("u"), v = X.at("v"), y = X.at("y"), xp = X.at("x'"), up = X.at("u'"),
         vp = X.at("v'");
  std::set<color> f{X.c(u), X.c(v), X.c(y), X.c(xp)};
  if (color t = X.odd(xp)) f.insert(t);
  if (color a = detail::smallest_outside(X.k, f)) {
    coloring out = X.base;
    out.assign(x, a);
    return detail::finish(X, out, "direct", {x});
  }
  auto pm = palette_map::canonical(5, {X.c(u), X.c(v), X.c(y), X.c(xp), X.odd(xp)});
  if (pm.canon(X.c(up)) != 2 && pm.canon(X.c(vp)) != 1) {
    coloring out = X.base;
    out.assign(x, pm.actual(3));
    return detail::finish(X, out, "tight-direct", {x});
  }
  // Erase one of u, v and recolor it; x takes its old color.
  bool mirror = pm.canon(X.c(up)) != 2;
  vertex a = mirror ? v : u;
  color reserved = pm.actual(mirror ? 2 : 1);
  coloring phi = X.base;
  phi.erase(a);
  std::vector<coloring> cands;
  for (color c : available_set(g, phi, a, X.k)) {
    if (c == reserved) continue;
    coloring out = phi;
    out.assign(a, c);
    out.assign(x, reserved);
    cands.push_back(out);
  }
  if (cands.empty()) {
    coloring out = X.base;
    out.assign(x, pm.actual(3));
    cands.push_back(out);
  }
  return detail::finish(X, detail::first_verified(X, cands), mirror ? "tight-v" : "tight-u", {x, a});
}

inline extension extend_triple_triangle(const graph& g, const reduction_step& s, const coloring& reduced) {
  auto X = detail::prepare(g, s, reduced, 5, {config_tag::h2});
  vertex u = X.at("u"), v = X.at("v"), w = X.at("w"), x = X.at("x"), y = X.at("y"), xp = X.at("x'"),
         yp = X.at("y'");
  auto au = available_set(g, X.base, u, X.k);
  if (!au.empty()) {
    coloring out = X.base;
    out.assign(u, au[0]);
    return detail::finish(X, out, "direct", {u});
  }
  if (X.k >= 6)
    throw reduction_failure("H2 extension: forbidden set covers [k] for k >= 6, which the argument excludes");
  color tx = X.odd(x), tv = X.odd(v);
  // Colors are given canonically; `set` maps them back through pm.
  auto build = [&](const palette_map& pm, std::vector<std::pair<vertex, color>> assign) {
    coloring out = X.base;
    for (auto [a, c] : assign) out.assign(a, pm.actual(c));
    return out;
  };
  auto options = [](std::vector<color> from, std::set<color> minus) {
    std::vector<color> r;
    for (color c : from)
      if (!minus.count(c)) r.push_back(c);
    return r;
  };
  std::vector<coloring> cands;
  std::string branch;
  std::vector<vertex> designated;
  if (tx != 0 && tx == X.c(y)) {
    auto pm = palette_map::canonical(5, {X.c(x), tx, X.c(v)});
    if (tv != 0) {
      branch = "1.1";
      designated = {x, u};
      for (color c : options({4, 5}, {pm.canon(X.odd(xp))})) cands.push_back(build(pm, {{x, c}, {u, 1}}));
    } else {
      auto pm2 = palette_map::canonical(5, {X.c(x), tx, X.c(v), X.c(w)});
      if (pm2.canon(X.odd(xp)) == 4) {
        branch = "1.2a";
        designated = {x, u};
        cands.push_back(build(pm2, {{x, 5}, {u, 1}}));
      } else if (pm2.canon(X.c(yp)) != 3) {
        branch = "1.2b";
        designated = {x, u};
        cands.push_back(build(pm2, {{x, 4}, {u, 1}}));
      } else {
        branch = "1.2c";
        designated = {x, v, u};
        for (color c : options({1, 5}, {pm2.canon(X.odd(w))})) cands.push_back(build(pm2, {{x, 4}, {v, c}, {u, 3}}));
      }
    }
  } else if (tv != 0 && tv == X.c(y)) {
    auto pm = palette_map::canonical(5, {X.c(v), tv, X.c(x)});
    if (tx != 0) {
      branch = "2.1";
      designated = {x, u};
      for (color c : options({4, 5}, {pm.canon(X.odd(xp))})) cands.push_back(build(pm, {{x, c}, {u, 3}}));
    } else {
      auto pm2 = palette_map::canonical(5, {X.c(v), tv, X.c(x), X.c(xp)});
      if (pm2.canon(X.odd(xp)) != 5) {
        branch = "2.2a";
        designated = {x, u};
        cands.push_back(build(pm2, {{x, 5}, {u, 3}}));
      } else {
        branch = "2.2b";
        designated = {x, v, u};
        for (color c : options({4, 5}, {pm2.canon(X.odd(w))})) cands.push_back(build(pm2, {{x, 1}, {v, c}, {u, 3}}));
      }
    }
  }
  if (cands.empty()) {
    // Not reachable by the case analysis; the repair search decides.
    branch = branch.empty() ? "unmatched" : branch;
    designated = {u, x, v};
    coloring out = X.base;
    out.assign(u, 1);
    cands.push_back(out);
  }
  return detail::finish(X, detail::first_verified(X, cands), branch, designated);
}

inline extension extend_fan(const graph& g, const reduction_step& s, const coloring& reduced) {
  auto X = detail::prepare(g, s, reduced, 5, {config_tag::i2});
  vertex v = X.at("v"), u = X.at("u"), x = X.at("x"), y = X.at("y"), z = X.at("z"), w = X.at("w"),
         xp = X.at("x'"), zp = X.at("z'");
  auto ay = available_set(g, X.base, y, X.k);
  if (!ay.empty()) {
    coloring out = X.base;
    out.assign(y, ay[0]);
    return detail::finish(X, out, "direct", {y});
  }
  auto pm = palette_map::canonical(5, {X.c(x), X.c(v), X.c(z), X.odd(x), X.odd(z)});
  auto build = [&](std::vector<std::pair<vertex, color>> assign) {
    coloring out = X.base;
    for (auto [a, c] : assign) out.assign(a, pm.actual(c));
    return out;
  };
  std::set<color> s1{pm.canon(X.odd(xp)), pm.canon(X.odd(u))};
  std::set<color> s2{pm.canon(X.odd(zp)), pm.canon(X.odd(w))};
  std::vector<coloring> cands;
  if (s1 != std::set<color>{3, 5}) {
    for (color c : {3, 5})
      if (!s1.count(c)) cands.push_back(build({{x, c}, {y, 1}}));
    return detail::finish(X, detail::first_verified(X, cands), "recolor-x", {x, y});
  }
  if (s2 != std::set<color>{1, 4}) {
    for (color c : {1, 4})
      if (!s2.count(c)) cands.push_back(build({{z, c}, {y, 3}}));
    return detail::finish(X, detail::first_verified(X, cands), "recolor-z", {z, y});
  }
  coloring out = build({{v, 1}, {y, 2}});
  out.assign(x, X.odd(u));
  return detail::finish(X, out, "recolor-xv", {x, v, y});
}

// Dispatch by tag.
inline extension extend(const graph& g, const reduction_step& s, const coloring& reduced) {
  switch (s.config.tag) {
    case config_tag::a1:
    case config_tag::a2: return extend_degree1(g, s, reduced);
    case config_tag::b1:
    case config_tag::b2: return extend_triangle_deg2(g, s, reduced);
    case config_tag::c1:
    case config_tag::c2: return extend_path_deg2(g, s, reduced);
    case config_tag::d2: return extend_deg3_two_odd(g, s, reduced);
    case config_tag::d1:
    case config_tag::e2: return extend_triangle_33(g, s, reduced);
    case config_tag::g2: return extend_adjacent_triangles(g, s, reduced);
    case config_tag::h2: return extend_triple_triangle(g, s, reduced);
    case config_tag::i2: return extend_fan(g, s, reduced);
  }
  throw precondition_error("unknown configuration tag");
}

}  // namespace odd5
