#pragma once

// Randomized extension fixtures: a graph G containing a configuration, the
// reduction step, and an odd 5-coloring of the reduced graph found by the
// oracle.

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "odd5/odd5.hpp"

namespace odd5::testing {

struct lemma {
  std::string name;
  std::vector<config_tag> tags;
};

inline const std::vector<lemma>& lemmas() {
  using t = config_tag;
  static const std::vector<lemma> all{
      {"degree1", {t::a1, t::a2}},        {"triangle_deg2", {t::b1, t::b2}},
      {"path_deg2", {t::c1, t::c2}},      {"deg3_two_odd", {t::d2}},
      {"triangle_33", {t::d1, t::e2}},    {"adjacent_triangles", {t::g2}},
      {"triple_triangle", {t::h2}},       {"fan", {t::i2}},
  };
  return all;
}

inline std::optional<configuration> find_tag(const graph& g, config_tag t,
                                             const std::function<bool(const configuration&)>& c_ok) {
  using namespace odd5::detail;
  switch (t) {
    case config_tag::a1:
    case config_tag::a2: return find_a(g, t);
    case config_tag::b1:
    case config_tag::b2: return find_b(g, t);
    case config_tag::c1:
    case config_tag::c2:
      for (auto& c : c_candidates(g, t))
        if (c_ok(c)) return c;
      return std::nullopt;
    case config_tag::d1: return find_d1(g);
    case config_tag::d2: return find_d2(g);
    case config_tag::e2: return find_e2(g);
    case config_tag::g2: return find_g2(g);
    case config_tag::h2: return find_h2(g);
    case config_tag::i2: return find_i2(g);
  }
  return std::nullopt;
}

inline bool is_two_boundary_tag(config_tag t) {
  return t != config_tag::a1 && t != config_tag::b1 && t != config_tag::c1 && t != config_tag::d1;
}

struct fixture {
  graph g;
  reduction_step step;
  coloring reduced;
};

// Walks down the solver's own reduction chain of small seeded instances and
// collects every level that contains one of the lemma's tags.
inline std::vector<fixture> make_fixtures(const lemma& lm, int wanted, std::uint64_t seed, int colorings_per_graph = 3,
                                          int max_reduced_order = 16) {
  std::vector<fixture> out;
  for (std::uint64_t trial = 0; static_cast<int>(out.size()) < wanted && trial < 400000; ++trial) {
    std::uint64_t s = mix_seed(seed, trial);
    rng r(s);
    config_tag want = lm.tags[r.below(static_cast<int>(lm.tags.size()))];
    gen_params p;
    p.seed = s;
    p.chord_density = r.unit();
    p.crossing_density = r.unit();
    p.inter_edge_density = 0.5 + 0.5 * r.unit();
    std::vector<embedded> levels;
    if (is_two_boundary_tag(want)) {
      p.n_out = r.between(3, 10);
      p.n_in = r.between(0, 9);
      p.stairs = r.chance(0.7) ? staircase::random : staircase::zigzag;
      p.shared_vertex_count = p.n_in >= 2 && r.chance(0.3) ? 1 : 0;
      two_boundary_embedding e;
      try {
        e = gen_2bp(p);
      } catch (const precondition_error&) {
        continue;
      }
      levels.push_back(e);
      for (int depth = 0; depth < 12; ++depth) {
        auto c = detect_2bp(e.g, [&](const configuration& x) { return suppress_degree2(e, x.bound[1]).class_valid; });
        if (!c) break;
        e = detail::apply_to(e, plan_reduction(e.g, *c, 5));
        levels.push_back(e);
      }
    } else {
      p.n = r.between(4, 16);
      o1p_embedding e = gen_o1p(p);
      levels.push_back(e);
      for (int depth = 0; depth < 12; ++depth) {
        auto c = detect_o1p(e.g, [&](const configuration& x) { return suppress_degree2(e, x.bound[1]).class_valid; });
        if (!c) break;
        e = detail::apply_to(e, plan_reduction(e.g, *c, 5));
        levels.push_back(e);
      }
    }
    for (const auto& lv : levels) {
      auto found = std::visit(
          [&](const auto& emb) {
            return find_tag(emb.g, want, [&](const configuration& x) { return suppress_degree2(emb, x.bound[1]).class_valid; });
          },
          lv);
      if (!found) continue;
      const graph& g = graph_of(lv);
      auto step = plan_reduction(g, *found, 5);
      graph h = reduce(g, step);
      if (h.order() > max_reduced_order) continue;
      for (int c = 0; c < colorings_per_graph && static_cast<int>(out.size()) < wanted; ++c) {
        auto tau = sample_odd_k_coloring(h, 5, mix_seed(s, 1000 + c));
        if (tau) out.push_back({g, step, *tau});
      }
      break;
    }
  }
  return out;
}

struct soundness {
  int trials = 0;
  int verified = 0;
  int frame_ok = 0;
  int repaired = 0;
  std::map<std::string, int> branches;
};

// Extends every fixture and checks the output and the frame property.
inline soundness check_fixtures(const std::vector<fixture>& fs) {
  soundness s;
  for (const auto& f : fs) {
    ++s.trials;
    extension ext;
    try {
      ext = extend(f.g, f.step, f.reduced);
    } catch (const std::exception&) {
      continue;
    }
    s.branches[ext.branch]++;
    if (ext.repaired) ++s.repaired;
    if (is_odd_coloring(f.g, ext.colors, 5)) ++s.verified;
    graph h = reduce(f.g, f.step);
    bool frame = true;
    for (vertex v : h.vertices())
      if (ext.colors[v] != f.reduced[v] &&
          std::find(ext.designated.begin(), ext.designated.end(), v) == ext.designated.end())
        frame = false;
    if (frame) ++s.frame_ok;
  }
  return s;
}

}  // namespace odd5::testing
