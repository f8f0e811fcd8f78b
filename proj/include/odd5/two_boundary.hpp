#pragma once

#include <algorithm>
#include <compare>
#include <set>
#include <string>
#include <vector>

#include "odd5/graph.hpp"
#include "odd5/o1p.hpp"

namespace odd5 {

struct dart {
  vertex from = 0;
  vertex to = 0;
  friend auto operator<=>(const dart&, const dart&) = default;
};

using walk = std::vector<vertex>;
using rotation_system = std::vector<std::vector<vertex>>;

// Plane embedding given by a rotation system. The two distinguished faces are
// boundary walks; a disconnected graph has one walk per component touching
// the face. inner_face empty means the face is absent.
struct two_boundary_embedding {
  graph g;
  rotation_system rotation;
  std::vector<walk> outer_face;
  std::vector<walk> inner_face;
};

// Faces traced from a rotation system: the dart after a->b is b->c where c
// follows a in the rotation at b.
class face_map {
 public:
  face_map() = default;

  face_map(const graph& g, const rotation_system& rot) : rot_(rot) {
    for (std::size_t v = g.capacity(); v < rot_.size(); ++v)
      if (!rot_[v].empty()) throw structural_error("rotation given for unknown vertex " + std::to_string(v));
    rot_.resize(g.capacity());
    for (vertex v = 0; v < g.capacity(); ++v) {
      const auto& r = rot_[v];
      if (!g.contains(v)) {
        if (!r.empty()) throw structural_error("rotation given for missing vertex " + std::to_string(v));
        continue;
      }
      std::set<vertex> seen(r.begin(), r.end());
      if (seen.size() != r.size() || seen != g.neighbors(v))
        throw structural_error("rotation at vertex " + std::to_string(v) + " does not list exactly its incident edges");
    }
    slot_face_.resize(g.capacity());
    for (vertex v = 0; v < g.capacity(); ++v) slot_face_[v].assign(rot_[v].size(), -1);
    for (vertex v = 0; v < g.capacity(); ++v)
      for (std::size_t i = 0; i < rot_[v].size(); ++i) {
        if (slot_face_[v][i] >= 0) continue;
        int id = static_cast<int>(faces_.size());
        faces_.emplace_back();
        vertex a = v;
        std::size_t s = i;
        while (slot_face_[a][s] < 0) {
          slot_face_[a][s] = id;
          vertex b = rot_[a][s];
          faces_.back().push_back({a, b});
          std::size_t back = slot(b, a);
          a = b;
          s = (back + 1) % rot_[b].size();
        }
      }
  }

  int count() const { return static_cast<int>(faces_.size()); }
  const std::vector<dart>& face(int f) const { return faces_[f]; }
  const std::vector<std::vector<dart>>& faces() const { return faces_; }

  int face_of(dart d) const {
    if (d.from < 0 || d.from >= static_cast<int>(rot_.size())) return -1;
    const auto& r = rot_[d.from];
    auto it = std::find(r.begin(), r.end(), d.to);
    if (it == r.end()) return -1;
    return slot_face_[d.from][it - r.begin()];
  }

  // Boundary walk of a face, starting at its least dart.
  walk walk_of(int f) const {
    const auto& ds = faces_[f];
    auto start = std::min_element(ds.begin(), ds.end()) - ds.begin();
    walk w;
    for (std::size_t j = 0; j < ds.size(); ++j) w.push_back(ds[(start + j) % ds.size()].from);
    return w;
  }

  // Face whose boundary is the given closed walk in either direction, or -1.
  int match(const walk& w) const {
    if (w.size() < 2) return -1;
    if (int f = match_directed(w); f >= 0) return f;
    walk r(w.rbegin(), w.rend());
    return match_directed(r);
  }

 private:
  std::size_t slot(vertex v, vertex to) const {
    const auto& r = rot_[v];
    return static_cast<std::size_t>(std::find(r.begin(), r.end(), to) - r.begin());
  }

  int match_directed(const walk& w) const {
    std::size_t L = w.size();
    int f = face_of({w[0], w[1]});
    if (f < 0 || faces_[f].size() != L) return -1;
    const auto& ds = faces_[f];
    std::size_t p = std::find(ds.begin(), ds.end(), dart{w[0], w[1]}) - ds.begin();
    for (std::size_t j = 0; j < L; ++j)
      if (ds[(p + j) % L] != dart{w[j], w[(j + 1) % L]}) return -1;
    return f;
  }

  rotation_system rot_;
  std::vector<std::vector<int>> slot_face_;
  std::vector<std::vector<dart>> faces_;
};

// Face ids of the distinguished faces, resolved against a fresh trace.
struct resolved_faces {
  face_map faces;
  std::vector<int> outer;
  std::vector<int> inner;
  std::set<vertex> outer_vertices;
  std::set<vertex> inner_vertices;

  bool shared(vertex v) const { return outer_vertices.count(v) && inner_vertices.count(v); }
};

namespace detail {

// Returns an empty string on success, else the reason.
inline std::string resolve_walks(const graph& g, const face_map& fm, const std::vector<walk>& walks,
                                 std::vector<int>& ids, std::set<vertex>& verts, const char* name) {
  for (const walk& w : walks) {
    if (w.size() == 1 && g.contains(w[0]) && g.degree(w[0]) == 0) {
      verts.insert(w[0]);
      continue;
    }
    int f = fm.match(w);
    if (f < 0) return std::string(name) + " walk is not a face of the rotation system";
    if (std::find(ids.begin(), ids.end(), f) != ids.end()) return std::string(name) + " lists a face twice";
    ids.push_back(f);
    for (const dart& d : fm.face(f)) verts.insert(d.from);
  }
  return {};
}

}  // namespace detail

struct two_boundary_report {
  bool valid = true;
  std::string reason;
  explicit operator bool() const { return valid; }
};

inline two_boundary_report validate_2bp(const two_boundary_embedding& emb) {
  const graph& g = emb.g;
  face_map fm(g, emb.rotation);
  auto bad = [](std::string why) { return two_boundary_report{false, std::move(why)}; };

  std::vector<int> comp_of(g.capacity(), -1);
  auto comps = g.components();
  for (std::size_t c = 0; c < comps.size(); ++c)
    for (vertex v : comps[c]) comp_of[v] = static_cast<int>(c);
  std::vector<int> faces_in(comps.size(), 0);
  for (const auto& f : fm.faces()) ++faces_in[comp_of[f.front().from]];
  for (std::size_t c = 0; c < comps.size(); ++c) {
    int vc = static_cast<int>(comps[c].size());
    if (vc == 1) continue;
    int ec = 0;
    for (vertex v : comps[c]) ec += g.degree(v);
    ec /= 2;
    if (vc - ec + faces_in[c] != 2)
      return bad("component of vertex " + std::to_string(comps[c][0]) + " violates Euler's formula");
  }

  std::vector<int> outer, inner;
  std::set<vertex> vo, vi;
  if (auto r = detail::resolve_walks(g, fm, emb.outer_face, outer, vo, "outer_face"); !r.empty()) return bad(r);
  if (auto r = detail::resolve_walks(g, fm, emb.inner_face, inner, vi, "inner_face"); !r.empty()) return bad(r);
  for (int f : outer)
    if (std::find(inner.begin(), inner.end(), f) != inner.end())
      return bad("outer and inner face coincide");
  std::vector<int> per_comp_out(comps.size(), 0), per_comp_in(comps.size(), 0);
  for (int f : outer)
    if (++per_comp_out[comp_of[fm.face(f).front().from]] > 1) return bad("two outer walks in one component");
  for (int f : inner)
    if (++per_comp_in[comp_of[fm.face(f).front().from]] > 1) return bad("two inner walks in one component");
  for (vertex v : g.vertices())
    if (g.degree(v) > 0 && !vo.count(v) && !vi.count(v))
      return bad("vertex " + std::to_string(v) + " lies on neither distinguished face");
  return {};
}

inline resolved_faces resolve(const two_boundary_embedding& emb) {
  resolved_faces r;
  r.faces = face_map(emb.g, emb.rotation);
  auto e1 = detail::resolve_walks(emb.g, r.faces, emb.outer_face, r.outer, r.outer_vertices, "outer_face");
  auto e2 = detail::resolve_walks(emb.g, r.faces, emb.inner_face, r.inner, r.inner_vertices, "inner_face");
  if (!e1.empty() || !e2.empty()) throw precondition_error(e1.empty() ? e2 : e1);
  return r;
}

inline std::set<vertex> shared_vertices(const two_boundary_embedding& emb) {
  auto r = resolve(emb);
  std::set<vertex> s;
  for (vertex v : r.outer_vertices)
    if (r.inner_vertices.count(v)) s.insert(v);
  return s;
}

enum class edge_class { chordal, boundary, interconnected, other };

inline const char* to_string(edge_class c) {
  switch (c) {
    case edge_class::chordal: return "chordal";
    case edge_class::boundary: return "boundary";
    case edge_class::interconnected: return "interconnected";
    case edge_class::other: return "other";
  }
  return "?";
}

inline edge_class classify_edge(const resolved_faces& r, edge e) {
  for (int f : r.outer)
    if (r.faces.face_of({e.u, e.v}) == f || r.faces.face_of({e.v, e.u}) == f) return edge_class::boundary;
  for (int f : r.inner)
    if (r.faces.face_of({e.u, e.v}) == f || r.faces.face_of({e.v, e.u}) == f) return edge_class::boundary;
  const auto& O = r.outer_vertices;
  const auto& I = r.inner_vertices;
  if ((O.count(e.u) && O.count(e.v)) || (I.count(e.u) && I.count(e.v))) return edge_class::chordal;
  auto only_out = [&](vertex x) { return O.count(x) && !I.count(x); };
  auto only_in = [&](vertex x) { return I.count(x) && !O.count(x); };
  if ((only_out(e.u) && only_in(e.v)) || (only_in(e.u) && only_out(e.v))) return edge_class::interconnected;
  return edge_class::other;
}

inline edge_class classify_edge(const two_boundary_embedding& emb, edge e) {
  if (!emb.g.has_edge(e.u, e.v))
    throw precondition_error("classify_edge: " + std::to_string(e.u) + "-" + std::to_string(e.v) + " is not an edge");
  return classify_edge(resolve(emb), e);
}

// Maximum degree over vertices not shared by the two faces.
inline int tilde_delta(const two_boundary_embedding& emb) {
  auto r = resolve(emb);
  int best = -1;
  for (vertex v : emb.g.vertices())
    if (!r.shared(v)) best = std::max(best, emb.g.degree(v));
  if (best < 0) throw precondition_error("tilde_delta: every vertex is shared");
  return best;
}

namespace detail {

// Re-derives the distinguished faces after an edit from darts known to lie
// on them. A face hit by both outer and inner darts becomes outer.
inline void rebuild_faces(two_boundary_embedding& emb, const std::vector<dart>& outer_darts,
                          const std::vector<dart>& inner_darts) {
  face_map fm(emb.g, emb.rotation);
  std::vector<int> outer, inner;
  for (const dart& d : outer_darts) {
    int f = fm.face_of(d);
    if (f >= 0 && std::find(outer.begin(), outer.end(), f) == outer.end()) outer.push_back(f);
  }
  for (const dart& d : inner_darts) {
    int f = fm.face_of(d);
    if (f >= 0 && std::find(outer.begin(), outer.end(), f) == outer.end() &&
        std::find(inner.begin(), inner.end(), f) == inner.end())
      inner.push_back(f);
  }
  std::sort(outer.begin(), outer.end());
  std::sort(inner.begin(), inner.end());
  emb.outer_face.clear();
  emb.inner_face.clear();
  for (int f : outer) emb.outer_face.push_back(fm.walk_of(f));
  for (int f : inner) emb.inner_face.push_back(fm.walk_of(f));
}

inline std::vector<dart> face_darts(const resolved_faces& r, const std::vector<int>& ids) {
  std::vector<dart> out;
  for (int f : ids)
    for (const dart& d : r.faces.face(f)) out.push_back(d);
  return out;
}

}  // namespace detail

inline two_boundary_embedding delete_vertex(const two_boundary_embedding& emb, vertex v) {
  if (!emb.g.contains(v)) throw precondition_error("delete_vertex: no vertex " + std::to_string(v));
  auto r = resolve(emb);
  auto keep = [v](std::vector<dart> ds) {
    std::erase_if(ds, [v](const dart& d) { return d.from == v || d.to == v; });
    return ds;
  };
  auto od = keep(detail::face_darts(r, r.outer));
  auto id = keep(detail::face_darts(r, r.inner));
  two_boundary_embedding out = emb;
  out.rotation.resize(emb.g.capacity());
  for (vertex w : emb.g.neighbors(v)) std::erase(out.rotation[w], v);
  out.rotation[v].clear();
  out.g.remove_vertex(v);
  detail::rebuild_faces(out, od, id);
  return out;
}

inline suppression<two_boundary_embedding> suppress_degree2(const two_boundary_embedding& emb, vertex v) {
  if (!emb.g.contains(v) || emb.g.degree(v) != 2)
    throw precondition_error("suppress_degree2: vertex must have degree 2");
  vertex u = *emb.g.neighbors(v).begin();
  vertex w = *emb.g.neighbors(v).rbegin();
  if (emb.g.has_edge(u, w)) throw precondition_error("suppress_degree2: uw is already an edge");
  auto r = resolve(emb);
  auto remap = [&](std::vector<dart> ds) {
    std::vector<dart> out;
    for (dart d : ds) {
      if (d.from == v) continue;
      if (d.to == v) d.to = d.from == u ? w : u;
      out.push_back(d);
    }
    return out;
  };
  auto od = remap(detail::face_darts(r, r.outer));
  auto id = remap(detail::face_darts(r, r.inner));
  suppression<two_boundary_embedding> s{emb, true};
  auto& out = s.embedding;
  out.rotation.resize(emb.g.capacity());
  std::replace(out.rotation[u].begin(), out.rotation[u].end(), v, w);
  std::replace(out.rotation[w].begin(), out.rotation[w].end(), v, u);
  out.rotation[v].clear();
  out.g.remove_vertex(v);
  out.g.add_edge(u, w);
  detail::rebuild_faces(out, od, id);
  s.class_valid = validate_2bp(out).valid;
  return s;
}

// Embedding of the subgraph induced by one vertex set closed under adjacency.
inline two_boundary_embedding restrict_to(const two_boundary_embedding& emb, const std::vector<vertex>& keep) {
  two_boundary_embedding out;
  out.g = emb.g.induced(keep);
  out.rotation.assign(emb.g.capacity(), {});
  std::set<vertex> in(keep.begin(), keep.end());
  for (vertex v : keep)
    if (v < static_cast<int>(emb.rotation.size())) out.rotation[v] = emb.rotation[v];
  auto inside = [&](const walk& w) { return !w.empty() && in.count(w[0]); };
  for (const walk& w : emb.outer_face)
    if (inside(w)) out.outer_face.push_back(w);
  for (const walk& w : emb.inner_face)
    if (inside(w)) out.inner_face.push_back(w);
  return out;
}

inline o1p_embedding restrict_to(const o1p_embedding& emb, const std::vector<vertex>& keep) {
  o1p_embedding out;
  out.g = emb.g.induced(keep);
  std::set<vertex> in(keep.begin(), keep.end());
  for (vertex v : emb.order)
    if (in.count(v)) out.order.push_back(v);
  return out;
}

}  // namespace odd5
