#pragma once

#include <algorithm>
#include <compare>
#include <set>
#include <string>
#include <vector>

#include "odd5/errors.hpp"

namespace odd5 {

using vertex = int;

// Undirected edge, stored with u < v.
struct edge {
  vertex u = 0;
  vertex v = 0;

  edge() = default;
  edge(vertex a, vertex b) : u(std::min(a, b)), v(std::max(a, b)) {}

  bool has(vertex x) const { return x == u || x == v; }
  vertex other(vertex x) const { return x == u ? v : u; }

  friend auto operator<=>(const edge&, const edge&) = default;
};

// Simple undirected graph over dense ids. Removed vertices stay as dead
// slots so ids remain stable across reductions.
class graph {
 public:
  graph() = default;
  explicit graph(int n) : adj_(n), alive_(n, 1), live_(n) {}

  int capacity() const { return static_cast<int>(adj_.size()); }
  int order() const { return live_; }
  int size() const { return edges_; }

  bool contains(vertex v) const { return v >= 0 && v < capacity() && alive_[v]; }

  vertex add_vertex() {
    adj_.emplace_back();
    alive_.push_back(1);
    ++live_;
    return capacity() - 1;
  }

  const std::set<vertex>& neighbors(vertex v) const {
    require(v);
    return adj_[v];
  }

  int degree(vertex v) const { return static_cast<int>(neighbors(v).size()); }

  bool has_edge(vertex u, vertex v) const {
    return contains(u) && contains(v) && adj_[u].count(v) > 0;
  }

  void add_edge(vertex u, vertex v) {
    require(u);
    require(v);
    if (u == v) throw precondition_error("loop at vertex " + std::to_string(u));
    if (!adj_[u].insert(v).second)
      throw precondition_error("duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
    adj_[v].insert(u);
    ++edges_;
  }

  void remove_edge(vertex u, vertex v) {
    if (!has_edge(u, v))
      throw precondition_error("no edge " + std::to_string(u) + "-" + std::to_string(v));
    adj_[u].erase(v);
    adj_[v].erase(u);
    --edges_;
  }

  void remove_vertex(vertex v) {
    require(v);
    for (vertex w : adj_[v]) adj_[w].erase(v);
    edges_ -= static_cast<int>(adj_[v].size());
    adj_[v].clear();
    alive_[v] = 0;
    --live_;
  }

  std::vector<vertex> vertices() const {
    std::vector<vertex> out;
    out.reserve(live_);
    for (vertex v = 0; v < capacity(); ++v)
      if (alive_[v]) out.push_back(v);
    return out;
  }

  std::vector<edge> edges() const {
    std::vector<edge> out;
    out.reserve(edges_);
    for (vertex u = 0; u < capacity(); ++u)
      for (vertex v : adj_[u])
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  // Connected components of live vertices, each sorted, ordered by least id.
  std::vector<std::vector<vertex>> components() const {
    std::vector<std::vector<vertex>> out;
    std::vector<char> seen(capacity(), 0);
    for (vertex s = 0; s < capacity(); ++s) {
      if (!alive_[s] || seen[s]) continue;
      std::vector<vertex> comp{s};
      seen[s] = 1;
      for (std::size_t i = 0; i < comp.size(); ++i)
        for (vertex w : adj_[comp[i]])
          if (!seen[w]) {
            seen[w] = 1;
            comp.push_back(w);
          }
      std::sort(comp.begin(), comp.end());
      out.push_back(std::move(comp));
    }
    return out;
  }

  bool connected() const { return components().size() <= 1; }

  // Same id space; only the listed vertices stay alive.
  graph induced(const std::vector<vertex>& keep) const {
    graph h(capacity());
    std::vector<char> in(capacity(), 0);
    for (vertex v : keep) {
      require(v);
      in[v] = 1;
    }
    for (vertex v = 0; v < capacity(); ++v)
      if (!in[v]) {
        h.alive_[v] = 0;
        --h.live_;
      }
    for (vertex v : keep)
      for (vertex w : adj_[v])
        if (in[w] && v < w) h.add_edge(v, w);
    return h;
  }

  int min_degree() const {
    int d = -1;
    for (vertex v : vertices()) d = d < 0 ? degree(v) : std::min(d, degree(v));
    return d < 0 ? 0 : d;
  }

  int max_degree() const {
    int d = 0;
    for (vertex v : vertices()) d = std::max(d, degree(v));
    return d;
  }

  friend bool operator==(const graph& a, const graph& b) {
    return a.adj_ == b.adj_ && a.alive_ == b.alive_;
  }

 private:
  void require(vertex v) const {
    if (!contains(v)) throw precondition_error("vertex " + std::to_string(v) + " not in graph");
  }

  std::vector<std::set<vertex>> adj_;
  std::vector<char> alive_;
  int live_ = 0;
  int edges_ = 0;
};

// The reduction measure |V| + |E|.
inline int measure(const graph& g) { return g.order() + g.size(); }

inline graph cycle_graph(int n) {
  graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

inline graph path_graph(int n) {
  graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

inline graph complete_graph(int n) {
  graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

}  // namespace odd5
