#pragma once

#include <string>
#include <vector>

#include "odd5/graph.hpp"

namespace odd5 {

// Vertices on a circle in cyclic order; edges are straight chords.
struct o1p_embedding {
  graph g;
  std::vector<vertex> order;
};

struct o1p_report {
  bool valid = true;
  std::vector<edge> overloaded;  // edges crossed more than once
  explicit operator bool() const { return valid; }
};

template <class Embedding>
struct suppression {
  Embedding embedding;
  bool class_valid = true;
};

// Position of each vertex in the order; throws on a malformed order.
inline std::vector<int> positions(const o1p_embedding& emb) {
  std::vector<int> pos(emb.g.capacity(), -1);
  for (std::size_t i = 0; i < emb.order.size(); ++i) {
    vertex v = emb.order[i];
    if (!emb.g.contains(v)) throw structural_error("order lists unknown vertex " + std::to_string(v));
    if (pos[v] >= 0) throw structural_error("order lists vertex " + std::to_string(v) + " twice");
    pos[v] = static_cast<int>(i);
  }
  for (vertex v : emb.g.vertices())
    if (pos[v] < 0) throw structural_error("order misses vertex " + std::to_string(v));
  return pos;
}

// Chords cross iff their endpoints interleave; shared endpoints never cross.
inline bool chords_cross(const std::vector<int>& pos, edge a, edge b) {
  if (a.has(b.u) || a.has(b.v)) return false;
  int lo = std::min(pos[a.u], pos[a.v]);
  int hi = std::max(pos[a.u], pos[a.v]);
  auto inside = [&](vertex x) { return pos[x] > lo && pos[x] < hi; };
  return inside(b.u) != inside(b.v);
}

inline std::vector<edge> crossing_partners(const o1p_embedding& emb, const std::vector<int>& pos, edge e) {
  std::vector<edge> out;
  for (const edge& f : emb.g.edges())
    if (chords_cross(pos, e, f)) out.push_back(f);
  return out;
}

inline o1p_report validate_o1p(const o1p_embedding& emb) {
  auto pos = positions(emb);
  o1p_report r;
  auto es = emb.g.edges();
  std::vector<int> load(es.size(), 0);
  for (std::size_t i = 0; i < es.size(); ++i)
    for (std::size_t j = i + 1; j < es.size(); ++j)
      if (chords_cross(pos, es[i], es[j])) {
        ++load[i];
        ++load[j];
      }
  for (std::size_t i = 0; i < es.size(); ++i)
    if (load[i] > 1) {
      r.valid = false;
      r.overloaded.push_back(es[i]);
    }
  return r;
}

inline o1p_embedding delete_vertex(const o1p_embedding& emb, vertex v) {
  if (!emb.g.contains(v)) throw precondition_error("delete_vertex: no vertex " + std::to_string(v));
  o1p_embedding out = emb;
  out.g.remove_vertex(v);
  std::erase(out.order, v);
  return out;
}

// Replaces the path u-v-w by the chord uw. The flag is true iff the chord is
// crossed at most once and its partner stays crossed at most once.
inline suppression<o1p_embedding> suppress_degree2(const o1p_embedding& emb, vertex v) {
  if (!emb.g.contains(v) || emb.g.degree(v) != 2)
    throw precondition_error("suppress_degree2: vertex must have degree 2");
  vertex u = *emb.g.neighbors(v).begin();
  vertex w = *emb.g.neighbors(v).rbegin();
  if (emb.g.has_edge(u, w)) throw precondition_error("suppress_degree2: uw is already an edge");
  suppression<o1p_embedding> out{delete_vertex(emb, v), true};
  out.embedding.g.add_edge(u, w);
  auto pos = positions(out.embedding);
  auto partners = crossing_partners(out.embedding, pos, edge(u, w));
  if (partners.size() > 1) {
    out.class_valid = false;
  } else if (partners.size() == 1) {
    out.class_valid = crossing_partners(out.embedding, pos, partners[0]).size() <= 1;
  }
  return out;
}

}  // namespace odd5
