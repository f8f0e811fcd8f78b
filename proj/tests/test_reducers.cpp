#include <gtest/gtest.h>

#include "support/builders.hpp"
#include "support/fixtures.hpp"

using namespace odd5;
using namespace odd5::testing;

namespace {

coloring on(int k, int n, const std::vector<std::pair<vertex, color>>& cs) {
  coloring c(k, n);
  for (auto [v, col] : cs) c.assign(v, col);
  return c;
}

reduction_step step_for(const graph& g, config_tag t, std::vector<vertex> b, int k = 5) {
  return plan_reduction(g, {t, std::move(b)}, k);
}

}  // namespace

TEST(Degree1, SingleEdge) {
  graph g = make_graph(2, {{0, 1}});
  auto e = extend_degree1(g, step_for(g, config_tag::a1, {0, 1}), on(5, 2, {{1, 1}}));
  EXPECT_EQ(e.colors[0], 2);
  EXPECT_EQ(e.branch, "direct");
}

TEST(Degree1, AvoidsUniqueOddColorOfNeighbor) {
  // u = 0 colored 1 with one other leaf colored 2; new leaf 2.
  graph g = make_graph(3, {{0, 1}, {0, 2}});
  auto e = extend_degree1(g, step_for(g, config_tag::a2, {2, 0}), on(5, 3, {{0, 1}, {1, 2}}));
  EXPECT_EQ(e.colors[2], 3);
  EXPECT_TRUE(is_odd_coloring(g, e.colors, 5));
}

TEST(Degree1, SmallestOutsideColorAndOdd) {
  // u = 0 colored 1, neighbors in H colored 3, 3, 4.
  graph g = make_graph(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
  auto e = extend_degree1(g, step_for(g, config_tag::a1, {4, 0}), on(5, 5, {{0, 1}, {1, 3}, {2, 3}, {3, 4}}));
  EXPECT_EQ(e.colors[4], 2);
}

TEST(Degree1, WorksWithThreeColors) {
  graph g = make_graph(2, {{0, 1}});
  auto e = extend_degree1(g, step_for(g, config_tag::a1, {0, 1}, 3), on(3, 2, {{1, 3}}));
  EXPECT_EQ(e.colors[0], 1);
}

TEST(TriangleDeg2, K3) {
  graph g = complete_graph(3);
  auto e = extend_triangle_deg2(g, step_for(g, config_tag::b1, {0, 1, 2}), on(5, 3, {{0, 1}, {2, 2}}));
  EXPECT_EQ(e.colors[1], 3);
}

TEST(TriangleDeg2, FullForbiddenSet) {
  // u=0, v=1, w=2; tau_o(u) = 3 from leaves 3(3), 4(2); tau_o(w) = 4 from 5(4), 6(1).
  graph g = make_graph(7, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {2, 5}, {2, 6}});
  auto e = extend_triangle_deg2(g, step_for(g, config_tag::b2, {0, 1, 2}),
                                on(5, 7, {{0, 1}, {2, 2}, {3, 3}, {4, 2}, {5, 4}, {6, 1}}));
  EXPECT_EQ(e.colors[1], 5);
  EXPECT_TRUE(is_odd_coloring(g, e.colors, 5));
}

TEST(PathDeg2, C5FromOracleColoringOfC4) {
  graph g = cycle_graph(5);
  auto s = step_for(g, config_tag::c1, {0, 1, 2});
  graph h = reduce(g, s);
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    auto tau = sample_odd_k_coloring(h, 5, seed);
    ASSERT_TRUE(tau);
    auto e = extend_path_deg2(g, s, *tau);
    EXPECT_TRUE(is_odd_coloring(g, e.colors, 5));
    EXPECT_FALSE(e.repaired);
  }
}

TEST(PathDeg2, CaseOne) {
  // H is the edge u w, so tau_o(u) = tau(w) and tau_o(w) = tau(u).
  graph g = path_graph(3);
  auto e = extend_path_deg2(g, step_for(g, config_tag::c1, {0, 1, 2}), on(5, 3, {{0, 1}, {2, 2}}));
  EXPECT_EQ(e.branch, "case1");
  EXPECT_EQ(e.colors[1], 3);
  // Renaming: tau(u) = 4, tau(w) = 2 maps canonical 3 to the smallest other color.
  auto f = extend_path_deg2(g, step_for(g, config_tag::c1, {0, 1, 2}), on(5, 3, {{0, 4}, {2, 2}}));
  EXPECT_EQ(f.colors[1], 1);
}

TEST(PathDeg2, AdjacentEndsAreRejected) {
  graph g = complete_graph(3);
  reduction_step s;
  s.config = {config_tag::c1, {0, 1, 2}};
  s.removed_vertices = {1};
  s.removed_edges = {edge(0, 1), edge(1, 2)};
  EXPECT_THROW(extend_path_deg2(g, s, on(5, 3, {{0, 1}, {2, 2}})), precondition_error);
}

TEST(Deg3TwoOdd, K4) {
  graph g = complete_graph(4);
  auto e = extend_deg3_two_odd(g, step_for(g, config_tag::d2, {3, 0, 1, 2}), on(5, 4, {{0, 1}, {1, 2}, {2, 3}}));
  EXPECT_EQ(e.colors[3], 4);
  EXPECT_EQ(e.colors.colors_used(), chi_odd(g).chi_odd);
}

TEST(Deg3TwoOdd, OnlyFiveAvailable) {
  // v=0; x=1, y=2 of degree 3 with two-colored outer neighbors; z=3 with tau_o = 4.
  graph g = make_graph(9, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}, {2, 6}, {2, 7}, {3, 8}});
  auto e = extend_deg3_two_odd(g, step_for(g, config_tag::d2, {0, 1, 2, 3}),
                               on(5, 9, {{1, 1}, {2, 2}, {3, 3}, {4, 3}, {5, 4}, {6, 1}, {7, 3}, {8, 4}}));
  EXPECT_EQ(e.colors[0], 5);
}

TEST(Deg3TwoOdd, EvenNeighborIsRejected) {
  graph g = make_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}});
  reduction_step s;
  s.config = {config_tag::d2, {0, 1, 2, 3}};
  s.removed_vertices = {0};
  EXPECT_THROW(extend_deg3_two_odd(g, s, on(5, 4, {{1, 1}, {2, 2}, {3, 1}})), precondition_error);
  EXPECT_THROW(plan_reduction(g, s.config, 5), precondition_error);
}

TEST(Triangle33, K4AsD1) {
  graph g = complete_graph(4);
  auto c = *detail::find_d1(g);
  auto s = plan_reduction(g, c, 5);
  graph h = reduce(g, s);
  auto tau = is_odd_k_colorable(h, 5);
  auto e = extend_triangle_33(g, s, *tau);
  EXPECT_TRUE(is_odd_coloring(g, e.colors, 5));
  EXPECT_GE(e.colors.colors_used(), chi_odd(g).chi_odd);
}

TEST(Triangle33, SharedOutsideNeighbor) {
  // u=0, v=1, w=2, x=y=3; d(u) = 2 so no delegation.
  graph g = make_graph(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}});
  auto s = step_for(g, config_tag::e2, {0, 1, 2, 3, 3});
  for (color a = 1; a <= 5; ++a)
    for (color b = 1; b <= 5; ++b) {
      auto e = extend_triangle_33(g, s, on(5, 4, {{0, a}, {3, b}}));
      EXPECT_TRUE(is_odd_coloring(g, e.colors, 5));
      EXPECT_NE(e.branch, "delegated");
    }
}

TEST(Triangle33, OddApexDelegates) {
  graph g = complete_graph(4);
  auto s = step_for(g, config_tag::e2, {0, 1, 2, 3, 3});
  auto tau = on(5, 4, {{0, 1}, {3, 2}});
  auto e = extend_triangle_33(g, s, tau);
  EXPECT_EQ(e.branch, "delegated");
  // Same as coloring v, then w, by the available-set rule.
  coloring manual = tau;
  manual.assign(1, available_set(g, manual, 1, 5).front());
  manual.assign(2, available_set(g, manual, 2, 5).front());
  EXPECT_EQ(e.colors, manual);
}

TEST(AdjacentTriangles, EvenYIsRejected) {
  // x=0 u=1 v=2 y=3 x'=4 u'=5 v'=6, d(y) = 2.
  graph g = make_graph(7, {{0, 1}, {0, 2}, {1, 2}, {3, 1}, {3, 2}, {0, 4}, {1, 5}, {2, 6}});
  reduction_step s;
  s.config = {config_tag::g2, {0, 1, 2, 3, 4, 5, 6}};
  s.removed_vertices = {0};
  EXPECT_THROW(extend_adjacent_triangles(g, s, on(5, 7, {{1, 1}, {2, 2}, {3, 3}, {4, 1}, {5, 2}, {6, 1}})),
               precondition_error);
}

TEST(Extend, WrongTagIsRejected) {
  graph g = make_graph(2, {{0, 1}});
  auto s = step_for(g, config_tag::a1, {0, 1});
  EXPECT_THROW(extend_triangle_deg2(g, s, on(5, 2, {{1, 1}})), precondition_error);
}

TEST(Extend, BadReducedColoringIsRejected) {
  graph g = cycle_graph(5);
  auto s = step_for(g, config_tag::c1, {0, 1, 2});
  EXPECT_THROW(extend(g, s, on(5, 5, {{0, 1}, {2, 2}, {3, 1}, {4, 2}})), precondition_error);
  EXPECT_THROW(extend(g, s, on(5, 5, {{0, 1}, {2, 2}})), precondition_error);
}

TEST(Extend, Decrements) {
  EXPECT_EQ(documented_decrement(config_tag::a1), 2);
  EXPECT_EQ(documented_decrement(config_tag::b2), 3);
  EXPECT_EQ(documented_decrement(config_tag::c2), 2);
  EXPECT_EQ(documented_decrement(config_tag::d2), 4);
  EXPECT_EQ(documented_decrement(config_tag::d1), 7);
  EXPECT_EQ(documented_decrement(config_tag::e2), 7);
  EXPECT_EQ(documented_decrement(config_tag::i2), 4);
}

// Soundness and frame property on randomized fixtures.
class Extension : public ::testing::TestWithParam<int> {};

TEST_P(Extension, FixturesExtendSoundly) {
  const auto& lm = lemmas()[GetParam()];
  auto fs = make_fixtures(lm, 200, 42 + GetParam());
  ASSERT_EQ(fs.size(), 200u) << lm.name;
  auto s = check_fixtures(fs);
  EXPECT_EQ(s.verified, s.trials) << lm.name;
  EXPECT_EQ(s.frame_ok, s.trials) << lm.name;
  for (const auto& f : fs) {
    EXPECT_EQ(measure(f.g) - measure(reduce(f.g, f.step)), documented_decrement(f.step.config.tag));
    auto a = extend(f.g, f.step, f.reduced);
    auto b = extend(f.g, f.step, f.reduced);
    EXPECT_EQ(a.colors, b.colors);
    EXPECT_LE(a.colors.palette(), 5);
  }
}

INSTANTIATE_TEST_SUITE_P(Reducers, Extension, ::testing::Range(0, 8),
                         [](const auto& info) { return lemmas()[info.param].name; });

// Palette 6 leaves a free color for the fan's middle vertex.
TEST(Fan, SixColorsGoDirect) {
  auto fs = make_fixtures(lemmas()[7], 20, 5);
  ASSERT_FALSE(fs.empty());
  for (auto& f : fs) {
    f.step.k = 6;
    coloring wide(6, f.reduced.capacity());
    graph h = reduce(f.g, f.step);
    for (vertex v : h.vertices()) wide.assign(v, f.reduced[v]);
    auto e = extend_fan(f.g, f.step, wide);
    EXPECT_EQ(e.branch, "direct");
    EXPECT_TRUE(is_odd_coloring(f.g, e.colors, 6));
  }
}
