#pragma once

#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "odd5/graph.hpp"

namespace odd5 {

using color = int;  // 1..k; 0 means "none"

// Partial map vertex -> [k].
class coloring {
 public:
  coloring() = default;
  coloring(int k, int capacity) : k_(k), c_(capacity, 0) {}

  int palette() const { return k_; }
  int capacity() const { return static_cast<int>(c_.size()); }

  color operator[](vertex v) const { return v >= 0 && v < capacity() ? c_[v] : 0; }
  bool assigned(vertex v) const { return (*this)[v] != 0; }

  void assign(vertex v, color c) {
    if (c < 1 || c > k_)
      throw precondition_error("color " + std::to_string(c) + " outside [" + std::to_string(k_) + "]");
    if (v < 0) throw precondition_error("negative vertex id");
    if (v >= capacity()) c_.resize(v + 1, 0);
    c_[v] = c;
  }

  void erase(vertex v) {
    if (v >= 0 && v < capacity()) c_[v] = 0;
  }

  bool total_on(const graph& g) const {
    for (vertex v : g.vertices())
      if (!assigned(v)) return false;
    return true;
  }

  int colors_used() const {
    std::set<color> s;
    for (color c : c_)
      if (c) s.insert(c);
    return static_cast<int>(s.size());
  }

  friend bool operator==(const coloring& a, const coloring& b) {
    int n = std::max(a.capacity(), b.capacity());
    for (int v = 0; v < n; ++v)
      if (a[v] != b[v]) return false;
    return a.k_ == b.k_;
  }

 private:
  int k_ = 0;
  std::vector<color> c_;
};

// Multiplicities of colors on the colored part of N(v).
struct odd_profile {
  vertex v = 0;
  std::map<color, int> counts;
  std::set<color> odd_set;
  color tau_o = 0;
};

inline odd_profile profile_of(const graph& g, const coloring& c, vertex v) {
  odd_profile p;
  p.v = v;
  for (vertex w : g.neighbors(v))
    if (c.assigned(w)) ++p.counts[c[w]];
  for (auto [col, n] : p.counts)
    if (n % 2) p.odd_set.insert(col);
  if (p.odd_set.size() == 1) p.tau_o = *p.odd_set.begin();
  return p;
}

// Unique odd color over the colored neighbors of v, else 0.
inline color unique_odd(const graph& g, const coloring& c, vertex v) { return profile_of(g, c, v).tau_o; }

inline color tau_o(const graph& g, const coloring& c, vertex v) {
  for (vertex w : g.neighbors(v))
    if (!c.assigned(w)) throw precondition_error("tau_o: neighbor " + std::to_string(w) + " uncolored");
  return unique_odd(g, c, v);
}

inline bool is_proper(const graph& g, const coloring& c) {
  if (!c.total_on(g)) throw precondition_error("is_proper: partial coloring");
  for (const edge& e : g.edges())
    if (c[e.u] == c[e.v]) return false;
  return true;
}

struct odd_verdict {
  enum class reason { none, out_of_palette, improper_edge, empty_odd_set };
  bool ok = true;
  reason why = reason::none;
  vertex witness = -1;
  vertex other = -1;  // second endpoint for improper_edge

  explicit operator bool() const { return ok; }
  std::string describe() const {
    switch (why) {
      case reason::none: return "ok";
      case reason::out_of_palette: return "vertex " + std::to_string(witness) + " has a color outside the palette";
      case reason::improper_edge:
        return "improper edge " + std::to_string(witness) + "-" + std::to_string(other);
      case reason::empty_odd_set: return "vertex " + std::to_string(witness) + " has no odd color";
    }
    return "?";
  }
};

// Checks vertices in ascending id order; the first failure is the witness.
inline odd_verdict check_odd_coloring(const graph& g, const coloring& c, int k) {
  if (!c.total_on(g)) throw precondition_error("is_odd_coloring: partial coloring");
  odd_verdict out;
  auto fail = [&](odd_verdict::reason r, vertex v, vertex w) {
    out.ok = false;
    out.why = r;
    out.witness = v;
    out.other = w;
    return out;
  };
  for (vertex v : g.vertices())
    if (c[v] > k) return fail(odd_verdict::reason::out_of_palette, v, -1);
  std::vector<int> cnt(k + 1, 0);
  for (vertex v : g.vertices()) {
    const auto& nb = g.neighbors(v);
    for (vertex w : nb)
      if (c[w] == c[v]) return fail(odd_verdict::reason::improper_edge, v, w);
    if (nb.empty()) continue;
    for (vertex w : nb) ++cnt[c[w]];
    bool odd = false;
    for (vertex w : nb) {
      if (cnt[c[w]] % 2) odd = true;
    }
    for (vertex w : nb) cnt[c[w]] = 0;
    if (!odd) return fail(odd_verdict::reason::empty_odd_set, v, -1);
  }
  return out;
}

inline bool is_odd_coloring(const graph& g, const coloring& c, int k) { return check_odd_coloring(g, c, k).ok; }

// F(v) = [k] ∩ (colors of N(v) ∪ unique odd colors of N(v)), over colored
// neighbors. The colored vertices play the role of the reduced graph.
inline std::set<color> forbidden_set(const graph& g, const coloring& c, vertex v, int k) {
  if (c.assigned(v)) throw precondition_error("forbidden_set: vertex already colored");
  std::set<color> f;
  for (vertex u : g.neighbors(v)) {
    if (!c.assigned(u)) continue;
    f.insert(c[u]);
    color t = unique_odd(g, c, u);
    if (t >= 1 && t <= k) f.insert(t);
  }
  return f;
}

inline std::vector<color> available_set(const graph& g, const coloring& c, vertex v, int k) {
  auto f = forbidden_set(g, c, v, k);
  std::vector<color> a;
  for (color x = 1; x <= k; ++x)
    if (!f.count(x)) a.push_back(x);
  return a;
}

// Permutation of [k] realising a "w.l.o.g. these colors are 1, 2, ..." step.
class palette_map {
 public:
  palette_map() = default;

  // leading[i] becomes i+1; the remaining colors follow in ascending order.
  static palette_map canonical(int k, std::span<const color> leading) {
    palette_map p;
    p.to_canon_.assign(k + 1, 0);
    p.to_actual_.assign(k + 1, 0);
    int next = 1;
    for (color c : leading) {
      if (c < 1 || c > k || p.to_canon_[c]) throw precondition_error("palette_map: bad leading colors");
      p.to_canon_[c] = next;
      p.to_actual_[next] = c;
      ++next;
    }
    for (color c = 1; c <= k; ++c)
      if (!p.to_canon_[c]) {
        p.to_canon_[c] = next;
        p.to_actual_[next] = c;
        ++next;
      }
    return p;
  }

  static palette_map canonical(int k, std::initializer_list<color> leading) {
    return canonical(k, std::span<const color>(leading.begin(), leading.size()));
  }

  color canon(color actual) const { return actual == 0 ? 0 : to_canon_.at(actual); }
  color actual(color canonical) const { return canonical == 0 ? 0 : to_actual_.at(canonical); }

 private:
  std::vector<color> to_canon_;
  std::vector<color> to_actual_;
};

// Incremental color multiplicities around every vertex. Changing one
// vertex's color touches two counters per neighbor.
class odd_tracker {
 public:
  odd_tracker(const graph& g, int k) : g_(&g), k_(k), col_(g.capacity(), 0),
      cnt_(static_cast<std::size_t>(g.capacity()) * (k + 1), 0), odd_(g.capacity(), 0) {}

  odd_tracker(const graph& g, const coloring& c, int k) : odd_tracker(g, k) {
    for (vertex v : g.vertices())
      if (c.assigned(v)) assign(v, c[v]);
  }

  color operator[](vertex v) const { return col_[v]; }
  int count(vertex v, color c) const { return cnt_[idx(v, c)]; }
  int odd_count(vertex v) const { return odd_[v]; }

  color unique_odd(vertex v) const {
    if (odd_[v] != 1) return 0;
    for (color c = 1; c <= k_; ++c)
      if (cnt_[idx(v, c)] % 2) return c;
    return 0;
  }

  void assign(vertex v, color c) {
    if (col_[v]) unassign(v);
    col_[v] = c;
    for (vertex w : g_->neighbors(v)) bump(w, c, +1);
  }

  void unassign(vertex v) {
    color c = col_[v];
    if (!c) return;
    for (vertex w : g_->neighbors(v)) bump(w, c, -1);
    col_[v] = 0;
  }

 private:
  std::size_t idx(vertex v, color c) const { return static_cast<std::size_t>(v) * (k_ + 1) + c; }
  void bump(vertex w, color c, int d) {
    int& x = cnt_[idx(w, c)];
    odd_[w] += (x % 2) ? -1 : 1;
    x += d;
  }

  const graph* g_;
  int k_;
  std::vector<color> col_;
  std::vector<int> cnt_;
  std::vector<int> odd_;
};

}  // namespace odd5
