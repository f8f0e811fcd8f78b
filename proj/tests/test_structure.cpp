#include <gtest/gtest.h>

#include "support/builders.hpp"

using namespace odd5;
using namespace odd5::testing;

namespace {

configuration config_of(const detection& d) {
  EXPECT_TRUE(std::holds_alternative<configuration>(d));
  return std::get<configuration>(d);
}

two_boundary_embedding k4_2bp() {
  // Triangle 0 1 2 with 3 inside.
  rotation_system rot{{1, 3, 2}, {2, 3, 0}, {0, 3, 1}, {2, 0, 1}};
  return with_faces(
      complete_graph(4), rot, [](const std::set<vertex>& s) { return s == std::set<vertex>{0, 1, 2}; },
      [](const std::set<vertex>& s) { return s.count(3) > 0; });
}

}  // namespace

TEST(Structure, PathHasDegreeOneVertex) {
  auto c = find_config_o1p(o1p(3, {{0, 1}, {1, 2}}));
  EXPECT_EQ(c.tag, config_tag::a1);
  EXPECT_EQ(c.bound, (std::vector<vertex>{0, 1}));
  EXPECT_EQ(c.at("u"), 1);
}

TEST(Structure, K4IsD1) {
  auto c = find_config_o1p(o1p(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}, {1, 3}}));
  EXPECT_EQ(c.tag, config_tag::d1);
  EXPECT_EQ(c.bound, (std::vector<vertex>{0, 1, 2, 3}));
}

TEST(Structure, CycleIsC) {
  auto c = find_config_o1p(o1p(5, cycle_edges(5)));
  EXPECT_EQ(c.tag, config_tag::c1);
  EXPECT_EQ(c.bound, (std::vector<vertex>{0, 1, 2}));
  auto d = config_of(find_config_2bp(cycle_2bp(5)));
  EXPECT_EQ(d.tag, config_tag::c2);
  EXPECT_EQ(d.bound, (std::vector<vertex>{0, 1, 2}));
}

TEST(Structure, TriangleIsB) {
  auto c = find_config_o1p(o1p(3, cycle_edges(3)));
  EXPECT_EQ(c.tag, config_tag::b1);
  EXPECT_EQ(c.bound, (std::vector<vertex>{0, 1, 2}));
}

TEST(Structure, CubeIsM4) {
  auto s = recognize_special(canonical_prism(4));
  EXPECT_EQ(s.type, special_graph::kind::m);
  EXPECT_EQ(s.n, 4);
  auto d = find_config_2bp(prism_embedding(4));
  ASSERT_TRUE(std::holds_alternative<special_graph>(d));
  EXPECT_EQ(std::get<special_graph>(d).type, special_graph::kind::m);
}

TEST(Structure, OctahedronIsP3) {
  auto s = recognize_special(canonical_antiprism(3));
  EXPECT_EQ(s.type, special_graph::kind::p);
  EXPECT_EQ(s.n, 3);
  auto d = find_config_2bp(antiprism_embedding(4));
  ASSERT_TRUE(std::holds_alternative<special_graph>(d));
  EXPECT_EQ(std::get<special_graph>(d).type, special_graph::kind::p);
  EXPECT_EQ(std::get<special_graph>(d).n, 4);
}

TEST(Structure, IsomorphismMapsCanonicalLabels) {
  for (int n = 3; n <= 9; ++n) {
    gen_params p;
    p.n_out = p.n_in = n;
    p.stairs = staircase::zigzag;
    p.chord_density = 0;
    p.inter_edge_density = 1;
    p.seed = static_cast<std::uint64_t>(n);
    auto e = gen_2bp(p);
    auto s = recognize_special(e.g);
    ASSERT_EQ(s.type, special_graph::kind::p) << n;
    graph canon = canonical_antiprism(n);
    for (const edge& x : canon.edges()) EXPECT_TRUE(e.g.has_edge(s.iso[x.u], s.iso[x.v]));
  }
}

TEST(Structure, K4IsNotSpecialButHasD2) {
  EXPECT_FALSE(recognize_special(complete_graph(4)));
  auto e = k4_2bp();
  ASSERT_TRUE(validate_2bp(e).valid) << validate_2bp(e).reason;
  auto c = config_of(find_config_2bp(e));
  EXPECT_EQ(c.tag, config_tag::d2);
  EXPECT_EQ(c.bound, (std::vector<vertex>{0, 1, 2, 3}));
}

TEST(Structure, PrismNotAntiprism) {
  EXPECT_FALSE(recognize_special(canonical_prism(5)).type == special_graph::kind::p);
  EXPECT_FALSE(recognize_special(complete_graph(6)));
  EXPECT_FALSE(recognize_special(cycle_graph(6)));
}

TEST(Structure, RolesAndTags) {
  for (config_tag t : all_tags) EXPECT_EQ(parse_tag(tag_name(t)), t);
  EXPECT_FALSE(parse_tag("F2"));
  configuration c{config_tag::a1, {3, 4}};
  EXPECT_THROW(c.at("w"), precondition_error);
}

TEST(Structure, HoldsRejectsWrongBindings) {
  graph g = complete_graph(4);
  EXPECT_FALSE(holds(g, {config_tag::a1, {0, 1}}));
  EXPECT_FALSE(holds(g, {config_tag::d1, {0, 1, 2}}));
  EXPECT_TRUE(holds(g, {config_tag::d1, {0, 2, 1, 3}}));
  EXPECT_FALSE(holds(g, {config_tag::d1, {0, 2, 1, 9}}));
}

TEST(Structure, DetectorIsDeterministicAndSound) {
  for (std::uint64_t s = 0; s < 400; ++s) {
    gen_params p;
    p.seed = s;
    p.n_out = 3 + static_cast<int>(s % 10);
    p.n_in = static_cast<int>(s % 9);
    p.chord_density = (s % 5) / 4.0;
    auto e = gen_2bp(p);
    if (e.g.order() == 0 || e.g.min_degree() == 0) continue;
    auto d1 = find_config_2bp(e);
    auto d2 = find_config_2bp(e);
    ASSERT_EQ(d1.index(), d2.index());
    if (auto* c = std::get_if<configuration>(&d1)) {
      EXPECT_EQ(*c, std::get<configuration>(d2));
      EXPECT_TRUE(holds(e, *c)) << "seed " << s;
      EXPECT_EQ(tag_name(c->tag).back(), '2');
    }
    p.n = 4 + static_cast<int>(s % 20);
    auto o = gen_o1p(p);
    if (o.g.min_degree() == 0) continue;
    auto c = find_config_o1p(o);
    EXPECT_TRUE(holds(o, c)) << "seed " << s;
    EXPECT_EQ(tag_name(c.tag).back(), '1');
  }
}

TEST(Structure, ExhaustedCarriesInstance) {
  // Edgeless input: nothing to find.
  graph g(2);
  try {
    find_config_o1p({g, {0, 1}});
    FAIL();
  } catch (const detector_exhausted& e) {
    EXPECT_EQ(e.family(), "o1p");
    EXPECT_EQ(e.instance().order(), 2);
  }
}
