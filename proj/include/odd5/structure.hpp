#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "odd5/o1p.hpp"
#include "odd5/two_boundary.hpp"

namespace odd5 {

enum class config_tag { a1, b1, c1, d1, a2, b2, c2, d2, e2, g2, h2, i2 };

inline constexpr config_tag all_tags[] = {config_tag::a1, config_tag::b1, config_tag::c1, config_tag::d1,
                                          config_tag::a2, config_tag::b2, config_tag::c2, config_tag::d2,
                                          config_tag::e2, config_tag::g2, config_tag::h2, config_tag::i2};

inline std::string_view tag_name(config_tag t) {
  constexpr std::string_view names[] = {"A1", "B1", "C1", "D1", "A2", "B2", "C2", "D2", "E2", "G2", "H2", "I2"};
  return names[static_cast<int>(t)];
}

inline std::optional<config_tag> parse_tag(std::string_view s) {
  for (config_tag t : all_tags)
    if (tag_name(t) == s) return t;
  return std::nullopt;
}

// Role names of the bound vertices, in tuple order.
inline const std::vector<std::string>& role_names(config_tag t) {
  static const std::vector<std::string> a{"v", "u"}, bc{"u", "v", "w"}, d1{"u", "x", "v", "y"},
      d2{"v", "x", "y", "z"}, e2{"u", "v", "w", "x", "y"}, g2{"x", "u", "v", "y", "x'", "u'", "v'"},
      h2{"u", "v", "w", "x", "y", "x'", "y'", "u'"}, i2{"v", "u", "x", "y", "z", "w", "x'", "z'"};
  switch (t) {
    case config_tag::a1:
    case config_tag::a2: return a;
    case config_tag::b1:
    case config_tag::b2:
    case config_tag::c1:
    case config_tag::c2: return bc;
    case config_tag::d1: return d1;
    case config_tag::d2: return d2;
    case config_tag::e2: return e2;
    case config_tag::g2: return g2;
    case config_tag::h2: return h2;
    case config_tag::i2: return i2;
  }
  return a;
}

struct configuration {
  config_tag tag = config_tag::a1;
  std::vector<vertex> bound;

  vertex at(std::string_view role) const {
    const auto& names = role_names(tag);
    for (std::size_t i = 0; i < names.size() && i < bound.size(); ++i)
      if (names[i] == role) return bound[i];
    throw precondition_error("configuration " + std::string(tag_name(tag)) + " has no role " + std::string(role));
  }

  friend bool operator==(const configuration&, const configuration&) = default;
};

struct special_graph {
  enum class kind { none, m, p };
  kind type = kind::none;
  int n = 0;
  // iso[i] is the vertex playing u_{i+1}; iso[n+i] plays v_{i+1}.
  std::vector<vertex> iso;

  explicit operator bool() const { return type != kind::none; }
};

// The detector found nothing. Carries the offending instance.
class detector_exhausted : public std::runtime_error {
 public:
  detector_exhausted(std::string family, graph instance)
      : std::runtime_error("detector exhausted on a " + family + " instance with " +
                           std::to_string(instance.order()) + " vertices"),
        family_(std::move(family)),
        instance_(std::move(instance)) {}

  const std::string& family() const { return family_; }
  const graph& instance() const { return instance_; }

 private:
  std::string family_;
  graph instance_;
};

namespace detail {

inline bool same_set(const std::set<vertex>& s, std::initializer_list<vertex> xs) {
  std::set<vertex> t(xs);
  return t.size() == xs.size() && s == t;
}

inline bool odd_degree(const graph& g, vertex v) { return g.degree(v) % 2 == 1; }

inline std::vector<vertex> common(const graph& g, vertex a, vertex b) {
  std::vector<vertex> out;
  const auto& na = g.neighbors(a);
  const auto& nb = g.neighbors(b);
  std::set_intersection(na.begin(), na.end(), nb.begin(), nb.end(), std::back_inserter(out));
  return out;
}

// The single neighbor of v outside `skip`, or -1 when there is not exactly one.
inline vertex other_neighbor(const graph& g, vertex v, std::initializer_list<vertex> skip) {
  vertex found = -1;
  for (vertex w : g.neighbors(v)) {
    if (std::find(skip.begin(), skip.end(), w) != skip.end()) continue;
    if (found >= 0) return -1;
    found = w;
  }
  return found;
}

inline void keep_min(std::optional<std::vector<vertex>>& best, std::vector<vertex> cand) {
  if (!best || cand < *best) best = std::move(cand);
}

inline std::optional<configuration> wrap(config_tag t, std::optional<std::vector<vertex>> b) {
  if (!b) return std::nullopt;
  return configuration{t, std::move(*b)};
}

inline std::optional<configuration> find_a(const graph& g, config_tag t) {
  for (vertex v : g.vertices())
    if (g.degree(v) == 1) return configuration{t, {v, *g.neighbors(v).begin()}};
  return std::nullopt;
}

inline std::optional<configuration> find_b(const graph& g, config_tag t) {
  std::optional<std::vector<vertex>> best;
  for (vertex v : g.vertices()) {
    if (g.degree(v) != 2) continue;
    vertex a = *g.neighbors(v).begin(), b = *g.neighbors(v).rbegin();
    if (g.has_edge(a, b)) keep_min(best, {a, v, b});
  }
  return wrap(t, best);
}

// All C candidates in lexicographic order.
inline std::vector<configuration> c_candidates(const graph& g, config_tag t) {
  std::vector<configuration> out;
  for (vertex v : g.vertices()) {
    if (g.degree(v) != 2) continue;
    vertex a = *g.neighbors(v).begin(), b = *g.neighbors(v).rbegin();
    if (!g.has_edge(a, b)) out.push_back({t, {a, v, b}});
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.bound < y.bound; });
  return out;
}

inline std::optional<configuration> find_d1(const graph& g) {
  std::optional<std::vector<vertex>> best;
  for (const edge& e : g.edges()) {
    if (g.degree(e.u) != 3 || g.degree(e.v) != 3) continue;
    auto c = common(g, e.u, e.v);
    if (c.size() == 2) keep_min(best, {e.u, c[0], e.v, c[1]});
  }
  return wrap(config_tag::d1, best);
}

inline std::optional<configuration> find_d2(const graph& g) {
  for (vertex v : g.vertices()) {
    if (g.degree(v) != 3) continue;
    std::vector<vertex> odd, even;
    for (vertex w : g.neighbors(v)) (odd_degree(g, w) ? odd : even).push_back(w);
    if (odd.size() < 2) continue;
    std::vector<vertex> rest(odd.begin() + 2, odd.end());
    rest.insert(rest.end(), even.begin(), even.end());
    std::sort(rest.begin(), rest.end());
    return configuration{config_tag::d2, {v, odd[0], odd[1], rest[0]}};
  }
  return std::nullopt;
}

inline std::optional<configuration> find_e2(const graph& g) {
  std::optional<std::vector<vertex>> best;
  for (vertex u : g.vertices())
    for (vertex v : g.neighbors(u)) {
      if (g.degree(v) != 3) continue;
      for (vertex w : g.neighbors(u)) {
        if (w <= v || g.degree(w) != 3 || !g.has_edge(v, w)) continue;
        vertex x = other_neighbor(g, v, {u, w});
        vertex y = other_neighbor(g, w, {u, v});
        keep_min(best, {u, v, w, x, y});
      }
    }
  return wrap(config_tag::e2, best);
}

inline std::optional<configuration> find_g2(const graph& g) {
  std::optional<std::vector<vertex>> best;
  for (const edge& e : g.edges()) {
    vertex u = e.u, v = e.v;
    if (g.degree(u) != 4 || g.degree(v) != 4) continue;
    auto c = common(g, u, v);
    for (vertex x : c) {
      if (g.degree(x) != 3) continue;
      for (vertex y : c) {
        if (y == x || !odd_degree(g, y)) continue;
        vertex xp = other_neighbor(g, x, {u, v});
        vertex up = other_neighbor(g, u, {x, y, v});
        vertex vp = other_neighbor(g, v, {x, y, u});
        keep_min(best, {x, u, v, y, xp, up, vp});
      }
    }
  }
  return wrap(config_tag::g2, best);
}

inline std::optional<configuration> find_h2(const graph& g) {
  std::optional<std::vector<vertex>> best;
  for (vertex v : g.vertices()) {
    if (g.degree(v) != 4) continue;
    for (vertex x : g.neighbors(v)) {
      if (g.degree(x) != 4) continue;
      for (vertex y : common(g, v, x)) {
        if (g.degree(y) != 4) continue;
        for (vertex u : common(g, v, x)) {
          if (u == y || g.degree(u) != 3) continue;
          for (vertex w : common(g, v, y)) {
            if (w == x || w == u) continue;
            vertex xp = other_neighbor(g, x, {u, v, y});
            vertex yp = other_neighbor(g, y, {x, v, w});
            vertex up = other_neighbor(g, u, {x, v});
            keep_min(best, {u, v, w, x, y, xp, yp, up});
          }
        }
      }
    }
  }
  return wrap(config_tag::h2, best);
}

inline std::optional<configuration> find_i2(const graph& g) {
  std::optional<std::vector<vertex>> best;
  for (vertex v : g.vertices()) {
    if (g.degree(v) != 5) continue;
    for (vertex y : g.neighbors(v)) {
      if (g.degree(y) != 3) continue;
      for (vertex x : common(g, v, y))
        for (vertex z : common(g, v, y)) {
          if (x == z || g.degree(x) != 4 || g.degree(z) != 4) continue;
          for (vertex u : common(g, v, x)) {
            if (u == y || u == z) continue;
            for (vertex w : common(g, v, z)) {
              if (w == y || w == x || w == u) continue;
              vertex xp = other_neighbor(g, x, {u, v, y});
              vertex zp = other_neighbor(g, z, {y, v, w});
              keep_min(best, {v, u, x, y, z, w, xp, zp});
            }
          }
        }
    }
  }
  return wrap(config_tag::i2, best);
}

}  // namespace detail

// Degree and adjacency constraints of the tag. C1/C2 suppression validity is
// checked separately by the embedding overloads below.
inline bool holds(const graph& g, const configuration& c) {
  if (c.bound.size() != role_names(c.tag).size()) return false;
  for (vertex v : c.bound)
    if (!g.contains(v)) return false;
  const auto& b = c.bound;
  auto d = [&](vertex v) { return g.degree(v); };
  auto adj = [&](vertex a, vertex bb) { return g.has_edge(a, bb); };
  using detail::same_set;
  switch (c.tag) {
    case config_tag::a1:
    case config_tag::a2: return d(b[0]) == 1 && adj(b[0], b[1]);
    case config_tag::b1:
    case config_tag::b2: return d(b[1]) == 2 && same_set(g.neighbors(b[1]), {b[0], b[2]}) && adj(b[0], b[2]);
    case config_tag::c1:
    case config_tag::c2: return d(b[1]) == 2 && same_set(g.neighbors(b[1]), {b[0], b[2]}) && !adj(b[0], b[2]);
    case config_tag::d1: {
      vertex u = b[0], x = b[1], v = b[2], y = b[3];
      return d(u) == 3 && d(v) == 3 && adj(u, v) && same_set(g.neighbors(u), {x, v, y}) &&
             same_set(g.neighbors(v), {x, u, y});
    }
    case config_tag::d2:
      return d(b[0]) == 3 && same_set(g.neighbors(b[0]), {b[1], b[2], b[3]}) && d(b[1]) % 2 == 1 &&
             d(b[2]) % 2 == 1;
    case config_tag::e2: {
      vertex u = b[0], v = b[1], w = b[2], x = b[3], y = b[4];
      return adj(u, v) && adj(u, w) && adj(v, w) && same_set(g.neighbors(v), {u, w, x}) &&
             same_set(g.neighbors(w), {u, v, y});
    }
    case config_tag::g2: {
      vertex x = b[0], u = b[1], v = b[2], y = b[3], xp = b[4], up = b[5], vp = b[6];
      return x != y && adj(u, v) && d(y) % 2 == 1 && same_set(g.neighbors(x), {u, v, xp}) &&
             same_set(g.neighbors(u), {x, y, v, up}) && same_set(g.neighbors(v), {x, y, u, vp}) && adj(y, u) &&
             adj(y, v);
    }
    case config_tag::h2: {
      vertex u = b[0], v = b[1], w = b[2], x = b[3], y = b[4], xp = b[5], yp = b[6], up = b[7];
      return u != w && adj(x, y) && adj(w, y) && same_set(g.neighbors(v), {x, y, u, w}) &&
             same_set(g.neighbors(x), {u, v, y, xp}) && same_set(g.neighbors(y), {x, v, w, yp}) &&
             same_set(g.neighbors(u), {x, v, up});
    }
    case config_tag::i2: {
      vertex v = b[0], u = b[1], x = b[2], y = b[3], z = b[4], w = b[5], xp = b[6], zp = b[7];
      return same_set(g.neighbors(v), {u, x, y, z, w}) && adj(u, x) && adj(z, w) &&
             same_set(g.neighbors(y), {x, v, z}) && same_set(g.neighbors(x), {u, v, y, xp}) &&
             same_set(g.neighbors(z), {y, v, w, zp});
    }
  }
  return false;
}

inline bool holds(const o1p_embedding& emb, const configuration& c) {
  if (!holds(emb.g, c)) return false;
  if (c.tag == config_tag::c1) return suppress_degree2(emb, c.bound[1]).class_valid;
  return true;
}

inline bool holds(const two_boundary_embedding& emb, const configuration& c) {
  if (!holds(emb.g, c)) return false;
  if (c.tag == config_tag::c2) return suppress_degree2(emb, c.bound[1]).class_valid;
  return true;
}

// Canonical labels: u_i is i-1, v_i is n+i-1.
inline graph canonical_prism(int n) {
  graph g(2 * n);
  for (int i = 0; i < n; ++i) {
    g.add_edge(i, (i + 1) % n);
    g.add_edge(n + i, n + (i + 1) % n);
    g.add_edge(i, n + i);
  }
  return g;
}

// N(v_i) = {u_{i-1}, u_i, v_{i-1}, v_{i+1}}; the u_i form a cycle.
inline graph canonical_antiprism(int n) {
  graph g(2 * n);
  for (int i = 0; i < n; ++i) {
    g.add_edge(i, (i + 1) % n);
    g.add_edge(n + i, n + (i + 1) % n);
    g.add_edge(n + i, i);
    g.add_edge(n + i, (i + n - 1) % n);
  }
  return g;
}

namespace detail {

inline bool matches_canonical(const graph& g, const std::vector<vertex>& iso, const graph& canon) {
  if (static_cast<int>(iso.size()) != canon.order() || g.order() != canon.order() || g.size() != canon.size())
    return false;
  std::set<vertex> distinct(iso.begin(), iso.end());
  if (static_cast<int>(distinct.size()) != canon.order()) return false;
  for (vertex v : iso)
    if (!g.contains(v)) return false;
  for (const edge& e : canon.edges())
    if (!g.has_edge(iso[e.u], iso[e.v])) return false;
  return true;
}

inline std::optional<std::vector<vertex>> find_prism(const graph& g, int n) {
  vertex s = g.vertices().front();
  for (vertex t : g.neighbors(s))
    for (vertex s2 : g.neighbors(s)) {
      if (s2 == t) continue;
      std::vector<vertex> us{s, s2}, vs{t};
      bool ok = true;
      for (int i = 1; i < n && ok; ++i) {
        // v_{i+1}: common neighbor of u_{i+1} and v_i other than u_i.
        vertex vn = -1;
        for (vertex c : common(g, us[i], vs[i - 1]))
          if (c != us[i - 1]) vn = vn < 0 ? c : -2;
        if (vn < 0) {
          ok = false;
          break;
        }
        vs.push_back(vn);
        if (i + 1 < n) {
          vertex un = other_neighbor(g, us[i], {us[i - 1], vs[i]});
          if (un < 0) ok = false;
          else us.push_back(un);
        }
      }
      if (!ok) continue;
      std::vector<vertex> iso = us;
      iso.insert(iso.end(), vs.begin(), vs.end());
      if (matches_canonical(g, iso, canonical_prism(n))) return iso;
    }
  return std::nullopt;
}

// P(n) is the circulant C_{2n}(1,2) along z = (u_1, v_2, u_2, v_3, ..., u_n, v_1).
inline std::optional<std::vector<vertex>> find_antiprism(const graph& g, int n) {
  int N = 2 * n;
  std::vector<vertex> z{g.vertices().front()};
  std::set<vertex> used{z[0]};
  graph canon = canonical_antiprism(n);
  std::function<std::optional<std::vector<vertex>>()> extend = [&]() -> std::optional<std::vector<vertex>> {
    if (static_cast<int>(z.size()) == N) {
      std::vector<vertex> iso(N);
      for (int i = 0; i < n; ++i) {
        iso[i] = z[2 * i];
        iso[n + (i + 1) % n] = z[2 * i + 1];
      }
      if (matches_canonical(g, iso, canon)) return iso;
      return std::nullopt;
    }
    std::vector<vertex> cands;
    if (z.size() == 1) {
      cands.assign(g.neighbors(z[0]).begin(), g.neighbors(z[0]).end());
    } else {
      cands = common(g, z[z.size() - 1], z[z.size() - 2]);
    }
    for (vertex c : cands) {
      if (used.count(c)) continue;
      z.push_back(c);
      used.insert(c);
      if (auto r = extend()) return r;
      used.erase(c);
      z.pop_back();
    }
    return std::nullopt;
  };
  return extend();
}

}  // namespace detail

inline special_graph recognize_special(const graph& g) {
  int N = g.order();
  if (N < 6 || N % 2) return {};
  int n = N / 2;
  bool cubic = true, quartic = true;
  for (vertex v : g.vertices()) {
    cubic = cubic && g.degree(v) == 3;
    quartic = quartic && g.degree(v) == 4;
  }
  if (cubic)
    if (auto iso = detail::find_prism(g, n)) return {special_graph::kind::m, n, *iso};
  if (quartic)
    if (auto iso = detail::find_antiprism(g, n)) return {special_graph::kind::p, n, *iso};
  return {};
}

// Outer-1-planar search over a graph, C1 candidates filtered by `c_ok`.
inline std::optional<configuration> detect_o1p(const graph& g, const std::function<bool(const configuration&)>& c_ok) {
  if (auto c = detail::find_a(g, config_tag::a1)) return c;
  if (auto c = detail::find_b(g, config_tag::b1)) return c;
  for (auto& c : detail::c_candidates(g, config_tag::c1))
    if (c_ok(c)) return c;
  return detail::find_d1(g);
}

inline std::optional<configuration> detect_2bp(const graph& g, const std::function<bool(const configuration&)>& c_ok) {
  if (auto c = detail::find_a(g, config_tag::a2)) return c;
  if (auto c = detail::find_b(g, config_tag::b2)) return c;
  for (auto& c : detail::c_candidates(g, config_tag::c2))
    if (c_ok(c)) return c;
  if (auto c = detail::find_d2(g)) return c;
  if (auto c = detail::find_e2(g)) return c;
  if (auto c = detail::find_g2(g)) return c;
  if (auto c = detail::find_h2(g)) return c;
  return detail::find_i2(g);
}

inline configuration find_config_o1p(const o1p_embedding& emb) {
  auto c = detect_o1p(emb.g, [&](const configuration& x) { return suppress_degree2(emb, x.bound[1]).class_valid; });
  if (!c) throw detector_exhausted("o1p", emb.g);
  return *c;
}

using detection = std::variant<configuration, special_graph>;

inline detection find_config_2bp(const two_boundary_embedding& emb) {
  if (auto s = recognize_special(emb.g)) return s;
  auto c = detect_2bp(emb.g, [&](const configuration& x) { return suppress_degree2(emb, x.bound[1]).class_valid; });
  if (!c) throw detector_exhausted("2bp", emb.g);
  return *c;
}

}  // namespace odd5
