#pragma once

#include <numeric>
#include <utility>
#include <vector>

#include "odd5/odd5.hpp"

namespace odd5::testing {

inline graph make_graph(int n, const std::vector<std::pair<int, int>>& es) {
  graph g(n);
  for (auto [a, b] : es) g.add_edge(a, b);
  return g;
}

// Order 0..n-1.
inline o1p_embedding o1p(int n, const std::vector<std::pair<int, int>>& es) {
  std::vector<vertex> order(n);
  std::iota(order.begin(), order.end(), 0);
  return {make_graph(n, es), order};
}

inline std::vector<std::pair<int, int>> cycle_edges(int n) {
  std::vector<std::pair<int, int>> es;
  for (int i = 0; i < n; ++i) es.emplace_back(i, (i + 1) % n);
  return es;
}

inline std::set<vertex> face_vertices(const face_map& fm, int f) {
  std::set<vertex> s;
  for (const dart& d : fm.face(f)) s.insert(d.from);
  return s;
}

// Distinguished faces picked by predicates over face vertex sets.
template <class Out, class In>
two_boundary_embedding with_faces(graph g, rotation_system rot, Out is_outer, In is_inner) {
  two_boundary_embedding e{std::move(g), std::move(rot), {}, {}};
  face_map fm(e.g, e.rotation);
  for (int f = 0; f < fm.count(); ++f) {
    auto vs = face_vertices(fm, f);
    if (e.outer_face.empty() && is_outer(vs))
      e.outer_face = {fm.walk_of(f)};
    else if (e.inner_face.empty() && is_inner(vs))
      e.inner_face = {fm.walk_of(f)};
  }
  return e;
}

// C_n drawn as a polygon; the face traced from 0->1 is the outer one.
inline two_boundary_embedding cycle_2bp(int n) {
  graph g = cycle_graph(n);
  rotation_system rot(n);
  for (int i = 0; i < n; ++i) rot[i] = {(i + 1) % n, (i + n - 1) % n};
  two_boundary_embedding e{g, rot, {}, {}};
  face_map fm(e.g, e.rotation);
  e.outer_face = {fm.walk_of(fm.face_of({0, 1}))};
  return e;
}

// Pinched prism on four spokes (spoke 0 contracted into the shared vertex 0)
// with a pendant triangle 0-7-8 in the outer face. Degree of 0 is 6, every
// other vertex has degree at most 3.
inline two_boundary_embedding pinched_prism_with_triangle() {
  graph g = make_graph(9, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}, {4, 5}, {5, 6}, {6, 0},
                           {1, 4}, {2, 5}, {3, 6}, {0, 7}, {0, 8}, {7, 8}});
  rotation_system rot{{3, 6, 4, 1, 8, 7}, {0, 4, 2}, {1, 5, 3}, {2, 6, 0}, {1, 0, 5},
                      {4, 6, 2},          {5, 0, 3}, {8, 0},    {7, 0}};
  return with_faces(
      g, rot, [](const std::set<vertex>& s) { return s.count(2) && s.count(7); },
      [](const std::set<vertex>& s) { return s == std::set<vertex>{0, 4, 5, 6}; });
}

}  // namespace odd5::testing
