#pragma once

#include <string>
#include <variant>
#include <vector>

#include "odd5/oracle.hpp"
#include "odd5/reducers.hpp"

namespace odd5 {

enum class base_case { empty, oracle, special_m, special_p };

inline const char* to_string(base_case b) {
  switch (b) {
    case base_case::empty: return "empty";
    case base_case::oracle: return "oracle";
    case base_case::special_m: return "M";
    case base_case::special_p: return "P";
  }
  return "?";
}

// One component's induction: reductions in order, then the base coloring of
// the final reduced graph.
struct solve_trace {
  std::vector<reduction_step> steps;
  std::vector<std::string> branches;  // extension branch per step
  std::vector<int> measures;          // |V|+|E| before each step, then after the last
  base_case base = base_case::empty;
  coloring base_coloring;
  int special_n = 0;
  bool oracle_fallback = false;  // the detector came up empty and the oracle stood in
};

struct solve_result {
  coloring colors;
  std::vector<solve_trace> components;
};

struct solve_options {
  int k = 5;
  int oracle_base = 6;          // sub-instances with at most this many non-isolated vertices
  bool oracle_fallback = false; // retry exhausted sub-instances with the oracle
  int oracle_guard = oracle_limit();
};

// Proper <= 3-coloring of the prism in canonical labels; every degree is odd.
inline coloring color_special_M(int n) {
  if (n < 3) throw precondition_error("color_special_M: n must be >= 3");
  coloring c(3, 2 * n);
  for (int i = 0; i < n; ++i) c.assign(i, i % 2 + 1);
  if (n % 2) c.assign(n - 1, 3);
  for (int i = 0; i < n; ++i) c.assign(n + i, c[(i + 1) % n]);
  if (!is_odd_coloring(canonical_prism(n), c, 3)) throw reduction_failure("prism coloring failed verification");
  return c;
}

// The antiprism colorings: four colors for even n, five for odd n >= 5.
inline coloring color_special_P(int n) {
  if (n < 4) throw precondition_error("color_special_P: n must be >= 4");
  auto u = [](int i) { return i - 1; };
  auto v = [n](int i) { return n + i - 1; };
  coloring c(n % 2 ? 5 : 4, 2 * n);
  if (n % 2 == 0) {
    for (int i = 1; i <= n - 1; i += 2) {
      c.assign(u(i), 1);
      c.assign(u(i + 1), 2);
      c.assign(v(i), 3);
      c.assign(v(i + 1), 4);
    }
  } else {
    std::vector<int> starts;
    for (int i = 1; i <= n - 4; i += 2) starts.push_back(i);
    starts.push_back(n - 1);
    for (int i : starts) {
      c.assign(u(i), 4);
      c.assign(u(i + 1), 5);
    }
    c.assign(u(n - 2), 3);
    for (int i = 1; i <= n - 2; i += 2) {
      c.assign(v(i), 1);
      c.assign(v(i + 1), 2);
    }
    c.assign(v(n), 3);
  }
  if (!is_odd_coloring(canonical_antiprism(n), c, c.palette()))
    throw reduction_failure("antiprism coloring failed verification");
  return c;
}

namespace detail {

inline o1p_embedding apply_to(const o1p_embedding& e, const reduction_step& s) {
  if (!s.added_edges.empty()) return suppress_degree2(e, s.removed_vertices.front()).embedding;
  o1p_embedding out = e;
  for (vertex v : s.removed_vertices) out = delete_vertex(out, v);
  return out;
}

inline two_boundary_embedding apply_to(const two_boundary_embedding& e, const reduction_step& s) {
  if (!s.added_edges.empty()) return suppress_degree2(e, s.removed_vertices.front()).embedding;
  two_boundary_embedding out = e;
  for (vertex v : s.removed_vertices) out = delete_vertex(out, v);
  return out;
}

inline std::vector<vertex> non_isolated(const graph& g) {
  std::vector<vertex> out;
  for (vertex v : g.vertices())
    if (g.degree(v) > 0) out.push_back(v);
  return out;
}

inline coloring ones_on(const graph& g, int k) {
  coloring c(k, g.capacity());
  for (vertex v : g.vertices()) c.assign(v, 1);
  return c;
}

inline std::optional<configuration> detect(const o1p_embedding& e) {
  try {
    return find_config_o1p(e);
  } catch (const detector_exhausted&) {
    return std::nullopt;
  }
}

template <class Emb>
solve_trace solve_component(const Emb& comp, const solve_options& opt) {
  constexpr bool two_b = std::is_same_v<Emb, two_boundary_embedding>;
  solve_trace t;
  std::vector<Emb> levels{comp};
  for (;;) {
    const Emb& cur = levels.back();
    const graph& g = cur.g;
    t.measures.push_back(measure(g));
    auto live = non_isolated(g);
    if (live.empty()) {
      t.base = base_case::empty;
      t.base_coloring = ones_on(g, opt.k);
      break;
    }
    if (static_cast<int>(live.size()) <= opt.oracle_base) {
      auto w = is_odd_k_colorable(g, opt.k);
      if (!w) throw reduction_failure("small base instance has no odd coloring");
      t.base = base_case::oracle;
      t.base_coloring = *w;
      break;
    }
    std::optional<configuration> cfg;
    if constexpr (two_b) {
      graph core = g.induced(live);
      if (auto sp = recognize_special(core); sp && (sp.type == special_graph::kind::m || sp.n >= 4)) {
        coloring canon = sp.type == special_graph::kind::m ? color_special_M(sp.n) : color_special_P(sp.n);
        coloring c = ones_on(g, opt.k);
        for (int i = 0; i < 2 * sp.n; ++i) c.assign(sp.iso[i], canon[i]);
        t.base = sp.type == special_graph::kind::m ? base_case::special_m : base_case::special_p;
        t.special_n = sp.n;
        t.base_coloring = c;
        break;
      }
      cfg = detect_2bp(g, [&](const configuration& x) { return suppress_degree2(cur, x.bound[1]).class_valid; });
    } else {
      cfg = detect(cur);
    }
    if (!cfg) {
      if (opt.oracle_fallback && g.order() <= opt.oracle_guard) {
        auto w = is_odd_k_colorable(g, opt.k);
        if (!w) throw reduction_failure("oracle found no odd coloring of an exhausted instance");
        t.base = base_case::oracle;
        t.base_coloring = *w;
        t.oracle_fallback = true;
        break;
      }
      throw detector_exhausted(two_b ? "2bp" : "o1p", g);
    }
    auto step = plan_reduction(g, *cfg, opt.k);
    Emb next = apply_to(cur, step);
    if (measure(g) - measure(next.g) != documented_decrement(step.config.tag))
      throw reduction_failure("reduction changed |V|+|E| by an unexpected amount");
    t.steps.push_back(std::move(step));
    levels.push_back(std::move(next));
  }
  return t;
}

}  // namespace detail

// Re-runs the extensions along a trace. Returns the coloring and fills the
// extension branches when requested.
inline coloring replay(const graph& g, const solve_trace& t, std::vector<std::string>* branches = nullptr) {
  std::vector<graph> gs{g};
  for (const auto& s : t.steps) gs.push_back(reduce(gs.back(), s));
  coloring c = t.base_coloring;
  std::vector<std::string> br(t.steps.size());
  for (std::size_t i = t.steps.size(); i-- > 0;) {
    auto ext = extend(gs[i], t.steps[i], c);
    c = std::move(ext.colors);
    br[i] = std::move(ext.branch);
  }
  if (branches) *branches = std::move(br);
  return c;
}

namespace detail {

template <class Emb>
solve_result solve_all(const Emb& emb, const solve_options& opt) {
  if (opt.k < 5) throw precondition_error("odd_five_color: k must be >= 5");
  solve_result r;
  r.colors = coloring(opt.k, emb.g.capacity());
  for (const auto& comp : emb.g.components()) {
    Emb part = restrict_to(emb, comp);
    solve_trace t = solve_component(part, opt);
    coloring c = replay(part.g, t, &t.branches);
    for (vertex v : comp) r.colors.assign(v, c[v]);
    r.components.push_back(std::move(t));
  }
  auto verdict = check_odd_coloring(emb.g, r.colors, opt.k);
  if (!verdict) throw reduction_failure("solver output failed verification: " + verdict.describe());
  return r;
}

}  // namespace detail

inline solve_result odd_five_color(const o1p_embedding& emb, const solve_options& opt = {}) {
  if (auto rep = validate_o1p(emb); !rep) throw precondition_error("odd_five_color: embedding is not outer-1-planar");
  return detail::solve_all(emb, opt);
}

inline solve_result odd_five_color(const two_boundary_embedding& emb, const solve_options& opt = {}) {
  if (auto rep = validate_2bp(emb); !rep) throw precondition_error("odd_five_color: " + rep.reason);
  return detail::solve_all(emb, opt);
}

}  // namespace odd5
