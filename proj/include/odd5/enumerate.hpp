#pragma once

// Exhaustive small instances. The 2bp side decides membership by a planarity
// test on the graph plus two apex vertices, one joined to each side of a
// vertex partition.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>
#include <unordered_set>
#include <variant>
#include <vector>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include "odd5/generators.hpp"

namespace odd5 {

inline constexpr int enumerate_limit = 8;

namespace detail {

// Adjacency of a graph on at most 8 vertices as a bit mask over pairs i<j.
using small_mask = std::uint32_t;

inline int pair_index(int n, int i, int j) {
  if (i > j) std::swap(i, j);
  return i * n - i * (i + 1) / 2 + (j - i - 1);
}

inline std::vector<std::pair<int, int>> pair_list(int n) {
  std::vector<std::pair<int, int>> ps;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) ps.emplace_back(i, j);
  return ps;
}

inline small_mask permute_mask(int n, small_mask m, const std::vector<int>& p) {
  small_mask out = 0;
  int idx = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++idx)
      if (m >> idx & 1u) out |= small_mask{1} << pair_index(n, p[i], p[j]);
  return out;
}

// Smallest relabeled mask over all permutations that respect the degree-sorted
// refinement cells. Exact because every automorphism class is searched.
inline small_mask canonical_mask(int n, small_mask m) {
  std::vector<std::vector<int>> adj(n);
  int idx = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++idx)
      if (m >> idx & 1u) {
        adj[i].push_back(j);
        adj[j].push_back(i);
      }
  // Color refinement.
  std::vector<int> col(n, 0);
  for (int round = 0; round < n; ++round) {
    std::vector<std::pair<std::vector<int>, int>> sig(n);
    for (int v = 0; v < n; ++v) {
      std::vector<int> s{col[v]};
      std::vector<int> nb;
      for (int w : adj[v]) nb.push_back(col[w]);
      std::sort(nb.begin(), nb.end());
      s.insert(s.end(), nb.begin(), nb.end());
      sig[v] = {s, v};
    }
    std::vector<std::vector<int>> keys;
    for (auto& s : sig) keys.push_back(s.first);
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    std::vector<int> nc(n);
    for (int v = 0; v < n; ++v) nc[v] = static_cast<int>(std::lower_bound(keys.begin(), keys.end(), sig[v].first) - keys.begin());
    bool same = std::set<int>(nc.begin(), nc.end()).size() == std::set<int>(col.begin(), col.end()).size();
    col = nc;
    if (same) break;
  }
  // Vertices of cell c go to the positions reserved for c; search all orders
  // within cells.
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return col[a] < col[b]; });
  std::vector<std::pair<int, int>> cells;
  for (int s = 0; s < n;) {
    int e = s;
    while (e < n && col[order[e]] == col[order[s]]) ++e;
    cells.emplace_back(s, e);
    s = e;
  }
  small_mask best = ~small_mask{0};
  std::vector<int> p(n);
  std::function<void(std::size_t)> go = [&](std::size_t ci) {
    if (ci == cells.size()) {
      for (int pos = 0; pos < n; ++pos) p[order[pos]] = pos;
      best = std::min(best, permute_mask(n, m, p));
      return;
    }
    auto [s, e] = cells[ci];
    std::sort(order.begin() + s, order.begin() + e);
    do {
      go(ci + 1);
    } while (std::next_permutation(order.begin() + s, order.begin() + e));
  };
  go(0);
  return best;
}

using bgraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                     boost::property<boost::vertex_index_t, int>,
                                     boost::property<boost::edge_index_t, int>>;
using bedge = boost::graph_traits<bgraph>::edge_descriptor;

inline bool planar_with_apexes(int n, small_mask m, unsigned side_a, bool apexes, rotation_system* rot) {
  int N = apexes ? n + 2 : n;
  bgraph bg(N);
  int idx = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++idx)
      if (m >> idx & 1u) boost::add_edge(i, j, bg);
  if (apexes)
    for (int v = 0; v < n; ++v) boost::add_edge(v, (side_a >> v & 1u) ? n : n + 1, bg);
  int c = 0;
  auto ei = boost::get(boost::edge_index, bg);
  for (auto [it, end] = boost::edges(bg); it != end; ++it) boost::put(ei, *it, c++);
  if (!rot) return boost::boyer_myrvold_planarity_test(bg);
  std::vector<std::vector<bedge>> emb(N);
  if (!boost::boyer_myrvold_planarity_test(boost::boyer_myrvold_params::graph = bg,
                                           boost::boyer_myrvold_params::embedding = &emb[0]))
    return false;
  rot->assign(n, {});
  for (int v = 0; v < n; ++v)
    for (const bedge& e : emb[v]) {
      int w = static_cast<int>(boost::source(e, bg)) == v ? static_cast<int>(boost::target(e, bg))
                                                            : static_cast<int>(boost::source(e, bg));
      if (w < n) (*rot)[v].push_back(w);
    }
  return true;
}

// A side assignment witnessing membership, if any. Vertex 0 is always on side A.
inline std::optional<unsigned> two_boundary_witness(int n, small_mask m) {
  if (!planar_with_apexes(n, m, 0, false, nullptr)) return std::nullopt;
  if (n == 0) return 0u;
  for (unsigned b = 0; b < (1u << (n - 1)); ++b) {
    unsigned a = ((~b << 1) | 1u) & ((1u << n) - 1);
    if (planar_with_apexes(n, m, a, true, nullptr)) return a;
  }
  return std::nullopt;
}

inline graph mask_graph(int n, small_mask m) {
  graph g(n);
  int idx = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++idx)
      if (m >> idx & 1u) g.add_edge(i, j);
  return g;
}

inline two_boundary_embedding witness_embedding(int n, small_mask m, unsigned side_a) {
  two_boundary_embedding emb;
  emb.g = mask_graph(n, m);
  planar_with_apexes(n, m, side_a, true, &emb.rotation);
  if (emb.g.size() == 0) return emb;
  face_map fm(emb.g, emb.rotation);
  auto on = [&](int f) {
    std::set<vertex> s;
    for (const dart& d : fm.face(f)) s.insert(d.from);
    return s;
  };
  std::set<vertex> A, B;
  for (vertex v = 0; v < n; ++v)
    if (emb.g.degree(v) > 0) ((side_a >> v & 1u) ? A : B).insert(v);
  auto covers = [](const std::set<vertex>& big, const std::set<vertex>& small) {
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
  };
  int fo = -1, fi = -1;
  for (int f = 0; f < fm.count() && fo < 0; ++f)
    if (covers(on(f), A)) fo = f;
  if (fo < 0) throw reduction_failure("enumerate: apex embedding lost its outer face");
  if (!covers(on(fo), B))
    for (int f = 0; f < fm.count() && fi < 0; ++f)
      if (f != fo && covers(on(f), B)) fi = f;
  emb.outer_face = {fm.walk_of(fo)};
  if (fi >= 0) emb.inner_face = {fm.walk_of(fi)};
  return emb;
}

inline void enumerate_o1p(int n_max, const std::function<void(const embedded&)>& fn) {
  for (int n = 1; n <= n_max; ++n) {
    auto ps = pair_list(n);
    int P = static_cast<int>(ps.size());
    // Images of each pair under the 2n symmetries of the cycle.
    std::vector<std::vector<int>> sym;
    for (int refl = 0; refl < 2; ++refl)
      for (int r = 0; r < n; ++r) {
        std::vector<int> t(P);
        for (int k = 0; k < P; ++k) {
          auto f = [&](int v) { return ((refl ? n - v : v) + r) % n; };
          t[k] = pair_index(n, f(ps[k].first), f(ps[k].second));
        }
        sym.push_back(t);
      }
    std::vector<std::vector<int>> crosses(P);
    for (int a = 0; a < P; ++a)
      for (int b = 0; b < P; ++b) {
        auto [i, j] = ps[a];
        auto [k, l] = ps[b];
        bool x = (i < k && k < j && j < l) || (k < i && i < l && l < j);
        if (x) crosses[a].push_back(b);
      }
    std::vector<int> cnt(P, 0);
    small_mask m = 0;
    std::function<void(int)> go = [&](int k) {
      if (k == P) {
        graph g = mask_graph(n, m);
        if (!g.connected()) return;
        for (const auto& t : sym) {
          small_mask img = 0;
          for (int e = 0; e < P; ++e)
            if (m >> e & 1u) img |= small_mask{1} << t[e];
          if (img < m) return;
        }
        std::vector<vertex> order(n);
        std::iota(order.begin(), order.end(), 0);
        fn(embedded{o1p_embedding{std::move(g), order}});
        return;
      }
      go(k + 1);
      bool ok = true;
      int partners = 0;
      for (int b : crosses[k])
        if (m >> b & 1u) {
          ++partners;
          if (cnt[b] >= 1) ok = false;
        }
      if (!ok || partners > 1) return;
      m |= small_mask{1} << k;
      for (int b : crosses[k])
        if (m >> b & 1u) ++cnt[b], ++cnt[k];
      go(k + 1);
      for (int b : crosses[k])
        if (m >> b & 1u) --cnt[b], --cnt[k];
      m &= ~(small_mask{1} << k);
    };
    go(0);
  }
}

inline void enumerate_2bp(int n_max, const std::function<void(const embedded&)>& fn) {
  std::vector<small_mask> level{0};  // n = 1: a single vertex
  for (int n = 1;; ++n) {
    for (small_mask m : level) {
      if (!mask_graph(n, m).connected()) continue;
      auto a = two_boundary_witness(n, m);
      fn(embedded{witness_embedding(n, m, *a)});
    }
    if (n == n_max) break;
    std::unordered_set<small_mask> next;
    std::vector<small_mask> grown;
    for (small_mask m : level) {
      // Re-index pairs from n to n+1 vertices, then join vertex n to a subset.
      small_mask base = 0;
      int idx = 0;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++idx)
          if (m >> idx & 1u) base |= small_mask{1} << pair_index(n + 1, i, j);
      for (unsigned s = 0; s < (1u << n); ++s) {
        small_mask g = base;
        for (int v = 0; v < n; ++v)
          if (s >> v & 1u) g |= small_mask{1} << pair_index(n + 1, v, n);
        small_mask c = canonical_mask(n + 1, g);
        if (!next.insert(c).second) continue;
        if (two_boundary_witness(n + 1, c)) grown.push_back(c);
      }
    }
    std::sort(grown.begin(), grown.end());
    level = std::move(grown);
  }
}

}  // namespace detail

// Every embedded instance of the class on 1..n_max vertices, connected and up
// to isomorphism (o1p: up to symmetries of the vertex cycle).
inline void enumerate_small(graph_class cls, int n_max, const std::function<void(const embedded&)>& fn) {
  if (n_max < 1 || n_max > enumerate_limit)
    throw precondition_error("enumerate_small: n_max must lie in [1," + std::to_string(enumerate_limit) + "]");
  if (cls == graph_class::o1p)
    detail::enumerate_o1p(n_max, fn);
  else
    detail::enumerate_2bp(n_max, fn);
}

}  // namespace odd5
