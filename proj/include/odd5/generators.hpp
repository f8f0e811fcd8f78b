#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "odd5/o1p.hpp"
#include "odd5/two_boundary.hpp"

namespace odd5 {

enum class graph_class { o1p, two_boundary };

inline const char* to_string(graph_class c) { return c == graph_class::o1p ? "o1p" : "2bp"; }

using embedded = std::variant<o1p_embedding, two_boundary_embedding>;

inline const graph& graph_of(const embedded& e) {
  return std::visit([](const auto& x) -> const graph& { return x.g; }, e);
}

// How the rungs between the outer and inner cycle advance.
enum class staircase { random, ladder, zigzag };

struct gen_params {
  int n = 10;      // o1p
  int n_out = 6;   // 2bp
  int n_in = 6;
  double chord_density = 0.2;
  double crossing_density = 0.5;
  double inter_edge_density = 0.8;
  double path_probability = 0.1;  // o1p: start from a path instead of a cycle
  int shared_vertex_count = 0;
  staircase stairs = staircase::random;
  bool shuffle_labels = true;
  std::uint64_t seed = 0;
};

// Platform-independent draws on top of mt19937_64.
class rng {
 public:
  explicit rng(std::uint64_t seed) : eng_(seed) {}
  std::uint64_t next() { return eng_(); }
  int below(int n) { return n <= 1 ? 0 : static_cast<int>(eng_() % static_cast<std::uint64_t>(n)); }
  int between(int lo, int hi) { return lo + below(hi - lo + 1); }
  double unit() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }
  bool chance(double p) { return unit() < p; }
  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(static_cast<int>(i))]);
  }

 private:
  std::mt19937_64 eng_;
};

namespace detail {

inline void check_params(const gen_params& p) {
  for (double d : {p.chord_density, p.crossing_density, p.inter_edge_density, p.path_probability})
    if (!(d >= 0.0 && d <= 1.0)) throw precondition_error("generator densities must lie in [0,1]");
  if (p.shared_vertex_count < 0) throw precondition_error("shared_vertex_count must be >= 0");
}

inline std::vector<vertex> random_permutation(rng& r, int n) {
  std::vector<vertex> p(n);
  std::iota(p.begin(), p.end(), 0);
  r.shuffle(p);
  return p;
}

}  // namespace detail

inline o1p_embedding gen_o1p(const gen_params& p) {
  detail::check_params(p);
  if (p.n < 1) throw precondition_error("gen_o1p: n must be >= 1");
  rng r(p.seed);
  int n = p.n;
  auto label = detail::random_permutation(r, n);
  o1p_embedding emb{graph(n), label};
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[label[i]] = i;
  bool cyc = n >= 3 && !r.chance(p.path_probability);
  for (int i = 0; i + 1 < n; ++i) emb.g.add_edge(label[i], label[i + 1]);
  if (cyc) emb.g.add_edge(label[n - 1], label[0]);
  std::vector<std::pair<int, int>> cands;
  for (int i = 0; i < n; ++i)
    for (int j = i + 2; j < n; ++j)
      if (!(i == 0 && j == n - 1)) cands.emplace_back(i, j);
  r.shuffle(cands);
  for (auto [i, j] : cands) {
    if (!r.chance(p.chord_density)) continue;
    edge e(label[i], label[j]);
    auto partners = crossing_partners(emb, pos, e);
    if (partners.size() > 1) continue;
    if (partners.size() == 1) {
      if (!crossing_partners(emb, pos, partners[0]).empty()) continue;
      if (!r.chance(p.crossing_density)) continue;
    }
    emb.g.add_edge(e.u, e.v);
  }
  return emb;
}

namespace detail {

// Corner of a face at position i of its dart list: the dart entering ds[i].from.
inline void insert_chord(two_boundary_embedding& emb, const std::vector<dart>& ds, std::size_t i, std::size_t j) {
  auto put_after = [&](vertex at, vertex after, vertex nb) {
    auto& r = emb.rotation[at];
    auto it = std::find(r.begin(), r.end(), after);
    r.insert(it + 1, nb);
  };
  std::size_t L = ds.size();
  vertex a = ds[i].from, b = ds[j].from;
  vertex xa = ds[(i + L - 1) % L].from;
  vertex xb = ds[(j + L - 1) % L].from;
  put_after(a, xa, b);
  put_after(b, xb, a);
  emb.g.add_edge(a, b);
}

// Contracts the edge o-i into o. Common neighbors lose their edge to i first.
inline two_boundary_embedding contract(const two_boundary_embedding& emb, vertex o, vertex i) {
  auto res = resolve(emb);
  two_boundary_embedding out = emb;
  auto& rot = out.rotation;
  std::vector<vertex> dropped;
  for (vertex z : emb.g.neighbors(i))
    if (z != o && emb.g.has_edge(o, z)) {
      dropped.push_back(z);
      std::erase(rot[i], z);
      std::erase(rot[z], i);
      out.g.remove_edge(i, z);
    }
  auto fix = [&](std::vector<dart> ds) {
    std::vector<dart> r;
    for (dart d : ds) {
      bool gone_edge = (d.from == i && std::count(dropped.begin(), dropped.end(), d.to)) ||
                       (d.to == i && std::count(dropped.begin(), dropped.end(), d.from));
      if (gone_edge) continue;
      if ((d.from == o && d.to == i) || (d.from == i && d.to == o)) continue;
      if (d.from == i) d.from = o;
      if (d.to == i) d.to = o;
      r.push_back(d);
    }
    return r;
  };
  auto od = fix(face_darts(res, res.outer));
  auto id = fix(face_darts(res, res.inner));
  auto rotate_after = [](const std::vector<vertex>& r, vertex pivot) {
    std::vector<vertex> s;
    auto it = std::find(r.begin(), r.end(), pivot);
    std::size_t k = it - r.begin();
    for (std::size_t t = 1; t < r.size(); ++t) s.push_back(r[(k + t) % r.size()]);
    return s;
  };
  std::vector<vertex> merged = rotate_after(rot[o], i);
  std::vector<vertex> tail = rotate_after(rot[i], o);
  merged.insert(merged.end(), tail.begin(), tail.end());
  for (vertex b : tail) std::replace(rot[b].begin(), rot[b].end(), i, o);
  rot[o] = merged;
  rot[i].clear();
  out.g.remove_vertex(i);
  for (vertex b : tail) out.g.add_edge(o, b);
  rebuild_faces(out, od, id);
  return out;
}

inline two_boundary_embedding relabel(const two_boundary_embedding& emb, const std::vector<vertex>& to) {
  int n = 0;
  for (vertex v : emb.g.vertices()) n = std::max(n, to[v] + 1);
  two_boundary_embedding out;
  out.g = graph(n);
  out.rotation.assign(n, {});
  for (const edge& e : emb.g.edges()) out.g.add_edge(to[e.u], to[e.v]);
  for (vertex v : emb.g.vertices())
    for (vertex w : emb.rotation[v]) out.rotation[to[v]].push_back(to[w]);
  auto map_walks = [&](const std::vector<walk>& ws) {
    std::vector<walk> r;
    for (const walk& w : ws) {
      walk m;
      for (vertex v : w) m.push_back(to[v]);
      r.push_back(m);
    }
    return r;
  };
  out.outer_face = map_walks(emb.outer_face);
  out.inner_face = map_walks(emb.inner_face);
  // Canonical starting darts.
  face_map fm(out.g, out.rotation);
  for (auto* ws : {&out.outer_face, &out.inner_face})
    for (walk& w : *ws)
      if (int f = fm.match(w); f >= 0) w = fm.walk_of(f);
  return out;
}

}  // namespace detail

inline two_boundary_embedding gen_2bp(const gen_params& prm) {
  detail::check_params(prm);
  int p = prm.n_out, q = prm.n_in;
  if (p < 3) throw precondition_error("gen_2bp: n_out must be >= 3");
  if (q < 0) throw precondition_error("gen_2bp: n_in must be >= 0");
  rng r(prm.seed);
  auto O = [](int a) { return a; };
  auto I = [p, q](int b) { return p + ((b % q) + q) % q; };
  two_boundary_embedding emb;
  emb.g = graph(p + q);
  emb.rotation.assign(p + q, {});
  for (int a = 0; a < p; ++a) emb.g.add_edge(O(a), O((a + 1) % p));
  if (q >= 3)
    for (int b = 0; b < q; ++b) emb.g.add_edge(I(b), I(b + 1));
  if (q == 2) emb.g.add_edge(I(0), I(1));

  // Rungs along a monotone path from (0,0) to (p,q) on the annulus.
  struct rung { int a, b; };
  std::vector<rung> rungs;
  if (q > 0) {
    int a = 0, b = 0, last = 1;
    auto add = [&](int ra, int rb) {
      if (ra == p && rb == q) return;
      if (!rungs.empty() && !r.chance(prm.inter_edge_density)) return;
      vertex x = O(ra % p), y = I(rb);
      if (emb.g.has_edge(x, y)) return;
      emb.g.add_edge(x, y);
      rungs.push_back({ra, rb});
    };
    add(0, 0);
    while (a < p || b < q) {
      int move;  // 0: outer, 1: inner, 2: both
      if (a == p) move = 1;
      else if (b == q) move = 0;
      else if (prm.stairs == staircase::ladder) move = 2;
      else if (prm.stairs == staircase::zigzag) move = 1 - last;
      else if (r.chance(0.15)) move = 2;
      else move = r.chance(0.75) ? 1 - last : last;
      if (move != 1) ++a;
      if (move != 0) ++b;
      if (move != 2) last = move;
      add(a, b);
    }
  }
  // Rotations. Outer vertex: next outer, inner neighbors from far to near,
  // previous outer. Inner vertex: previous inner, outer neighbors, next inner.
  for (int a = 0; a < p; ++a) {
    std::vector<std::pair<int, vertex>> in;
    for (const rung& g : rungs)
      if (g.a % p == a) in.emplace_back(g.a < p ? g.b : g.b - q, I(g.b));
    std::sort(in.begin(), in.end(), [](auto& x, auto& y) { return x.first > y.first; });
    auto& rot = emb.rotation[O(a)];
    rot.push_back(O((a + 1) % p));
    for (auto& e : in) rot.push_back(e.second);
    rot.push_back(O((a + p - 1) % p));
  }
  for (int b = 0; b < q; ++b) {
    std::vector<std::pair<int, vertex>> out;
    for (const rung& g : rungs)
      if (g.b % q == b) out.emplace_back(g.b < q ? g.a : g.a - p, O(g.a % p));
    std::sort(out.begin(), out.end());
    auto& rot = emb.rotation[I(b)];
    if (q >= 2) rot.push_back(I(b - 1));
    for (auto& e : out) rot.push_back(e.second);
    if (q >= 3) rot.push_back(I(b + 1));
  }
  face_map fm(emb.g, emb.rotation);
  int fo = fm.face_of({O(0), O(1)});
  emb.outer_face = {fm.walk_of(fo)};
  if (q > 0) {
    int fi = -1;
    if (q >= 3) fi = fm.face_of({I(1), I(0)});
    if (fi < 0 || fi == fo) {
      for (int f = 0; f < fm.count() && fi < 0; ++f) {
        if (f == fo) continue;
        std::set<vertex> on;
        for (const dart& d : fm.face(f)) on.insert(d.from);
        bool all = true;
        for (int b = 0; b < q; ++b) all = all && on.count(I(b));
        if (all) fi = f;
      }
    }
    if (fi < 0) throw reduction_failure("gen_2bp: no inner face found");
    emb.inner_face = {fm.walk_of(fi)};
  }

  // Chords inside interior faces.
  int attempts = static_cast<int>(prm.chord_density * (p + q) + 0.5);
  for (int t = 0; t < attempts; ++t) {
    auto res = resolve(emb);
    std::vector<int> interior;
    for (int f = 0; f < res.faces.count(); ++f)
      if (std::find(res.outer.begin(), res.outer.end(), f) == res.outer.end() &&
          std::find(res.inner.begin(), res.inner.end(), f) == res.inner.end() && res.faces.face(f).size() >= 4)
        interior.push_back(f);
    if (interior.empty()) break;
    const auto& ds = res.faces.face(interior[r.below(static_cast<int>(interior.size()))]);
    std::size_t L = ds.size();
    std::size_t i = r.below(static_cast<int>(L)), j = r.below(static_cast<int>(L));
    if (i == j) continue;
    vertex a = ds[i].from, b = ds[j].from;
    if (a == b || emb.g.has_edge(a, b)) continue;
    detail::insert_chord(emb, ds, i, j);
  }

  // Shared vertices by contracting interconnected edges.
  for (int s = 0; s < prm.shared_vertex_count; ++s) {
    auto res = resolve(emb);
    std::vector<edge> cands;
    for (const edge& e : emb.g.edges())
      if (classify_edge(res, e) == edge_class::interconnected) cands.push_back(e);
    r.shuffle(cands);
    bool done = false;
    for (const edge& e : cands) {
      vertex o = res.outer_vertices.count(e.u) ? e.u : e.v;
      vertex i = e.other(o);
      auto next = detail::contract(emb, o, i);
      if (validate_2bp(next).valid) {
        emb = std::move(next);
        done = true;
        break;
      }
    }
    if (!done) throw precondition_error("gen_2bp: cannot create " + std::to_string(prm.shared_vertex_count) +
                                        " shared vertices");
  }

  std::vector<vertex> live = emb.g.vertices();
  std::vector<vertex> to(emb.g.capacity(), -1);
  auto perm = prm.shuffle_labels ? detail::random_permutation(r, static_cast<int>(live.size()))
                                 : std::vector<vertex>();
  for (std::size_t k = 0; k < live.size(); ++k) to[live[k]] = prm.shuffle_labels ? perm[k] : static_cast<int>(k);
  return detail::relabel(emb, to);
}

inline two_boundary_embedding prism_embedding(int n) {
  gen_params p;
  p.n_out = p.n_in = n;
  p.chord_density = 0;
  p.inter_edge_density = 1;
  p.stairs = staircase::ladder;
  p.shuffle_labels = false;
  return gen_2bp(p);
}

inline two_boundary_embedding antiprism_embedding(int n) {
  gen_params p;
  p.n_out = p.n_in = n;
  p.chord_density = 0;
  p.inter_edge_density = 1;
  p.stairs = staircase::zigzag;
  p.shuffle_labels = false;
  return gen_2bp(p);
}

}  // namespace odd5
