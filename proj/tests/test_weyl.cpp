#include <gtest/gtest.h>

#include <algorithm>

#include "helpers.hpp"
#include "nichols/errors.hpp"
#include "nichols/weyl.hpp"
#include "oracle.hpp"

using namespace nichols;

namespace {

std::vector<std::vector<int>> labeled_edges(const CartanGraph& g) {
  std::vector<std::vector<int>> out;
  for (const auto& e : exchange_graph(g)) out.push_back(e.labels);
  return out;
}

}  // namespace

TEST(CartanGraph, RowOneIsASinglePoint) {
  const CartanGraph g = build_cartan_graph(test::row_diagram(7, "1", "D1,1"));
  EXPECT_EQ(g.size(), 1u);
  EXPECT_TRUE(exchange_graph(g).empty());
  for (int i = 0; i < 3; ++i) EXPECT_EQ(g.neighbor[0][i], 0u);
}

TEST(CartanGraph, RowFiveIsAPath) {
  const CartanGraph g = build_cartan_graph(test::row_diagram(7, "5", "D5,1"));
  ASSERT_EQ(g.size(), 3u);
  const auto edges = exchange_graph(g);
  ASSERT_EQ(edges.size(), 2u);
  // D5,1 -1- D5,2 -2- D5,3
  EXPECT_EQ(edges[0].labels, std::vector<int>{1});
  EXPECT_EQ(edges[1].labels, std::vector<int>{2});
  EXPECT_EQ(edges[0].b, edges[1].a);
}

TEST(CartanGraph, RowFourIsAPathOfFour) {
  const CartanGraph g = build_cartan_graph(test::row_diagram(5, "4", "D4,1"));
  ASSERT_EQ(g.size(), 4u);
  auto labels = labeled_edges(g);
  std::sort(labels.begin(), labels.end());
  EXPECT_EQ(labels, (std::vector<std::vector<int>>{{1}, {2}, {3}}));
  std::vector<int> degree(4, 0);
  for (const auto& e : exchange_graph(g)) ++degree[e.a], ++degree[e.b];
  std::sort(degree.begin(), degree.end());
  EXPECT_EQ(degree, (std::vector<int>{1, 1, 2, 2}));
}

TEST(CartanGraph, RowSeventeenHasNinePoints) {
  const CartanGraph g = build_cartan_graph(test::row_diagram(7, "17", "D17,1"));
  EXPECT_EQ(g.size(), 9u);
  EXPECT_TRUE(semi_cartan_violations(g).empty());
}

TEST(CartanGraph, PointLimit) {
  Limits l;
  l.max_points = 4;
  try {
    build_cartan_graph(test::row_diagram(7, "17", "D17,1"), l);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::PointLimitExceeded);
  }
}

TEST(CartanGraph, NonAdmissibleReportsTheWord) {
  const auto doc = test::fixture("a1.toml");
  try {
    build_cartan_graph(doc.dynkin);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotAdmitsAllReflections);
    EXPECT_NE(std::string(e.what()).find("word"), std::string::npos);
  }
}

TEST(CartanGraph, DotIsDeterministic) {
  const DynkinData d = test::row_diagram(7, "17", "D17,1");
  const std::string a = to_dot(build_cartan_graph(d));
  const std::string b = to_dot(build_cartan_graph(d));
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.rfind("graph exchange {", 0), 0u);
  EXPECT_EQ(point_digest("x"), point_digest("x"));
  EXPECT_NE(point_digest("x"), point_digest("y"));
}

TEST(Roots, RankOne) {
  auto c = ScalarContext::create(5, {{"q", std::nullopt}});
  const DynkinData d(c, {c.generator("q")}, {{c.one()}});
  const CartanGraph g = build_cartan_graph(d);
  const RootSystemData r = real_roots(g);
  ASSERT_TRUE(r.finite);
  EXPECT_EQ(r.roots[0], (std::set<Root>{{1}, {-1}}));
  EXPECT_TRUE(verify_cartan_graph_axioms(g, r).ok());
  EXPECT_TRUE(verify_root_system_axioms(g, r).ok());
  EXPECT_EQ(weyl_groupoid_order(g), std::optional<std::uint64_t>(2));
}

// Single-point graphs: the root set must equal the Weyl group orbit of the
// simple roots for the fixed Cartan matrix.
TEST(Roots, SinglePointRowsMatchWeylGroupClosure) {
  for (const char* row : {"1", "2", "3"}) {
    const CartanGraph g = build_cartan_graph(test::row_diagram(7, row, std::string("D") + row + ",1"));
    ASSERT_EQ(g.size(), 1u);
    const RootSystemData r = real_roots(g);
    ASSERT_TRUE(r.finite);
    EXPECT_EQ(r.roots[0], oracle::weyl_roots(g.points[0].cartan)) << "row " << row;
    EXPECT_EQ(weyl_groupoid_order(g), std::optional<std::uint64_t>(oracle::weyl_group_order(g.points[0].cartan)));
  }
}

// Frozen after the closure comparison above.
TEST(Roots, FrozenCounts) {
  const CartanGraph g1 = build_cartan_graph(test::row_diagram(7, "1", "D1,1"));
  EXPECT_EQ(real_roots(g1).positive(0).size(), 6u);
  EXPECT_EQ(weyl_groupoid_order(g1), std::optional<std::uint64_t>(24));
  const CartanGraph g2 = build_cartan_graph(test::row_diagram(7, "2", "D2,1"));
  const RootSystemData r2 = real_roots(g2);
  for (std::size_t x = 0; x < g2.size(); ++x) EXPECT_EQ(r2.positive(x).size(), 9u);
  EXPECT_EQ(weyl_groupoid_order(g2), std::optional<std::uint64_t>(48));
}

TEST(Roots, NegationClosureAndBijections) {
  for (const auto& [row, diagram] : std::vector<std::pair<std::string, std::string>>{
           {"4", "D4,1"}, {"7", "D7,1"}, {"13", "D13,1"}, {"16", "D16,1"}, {"17", "D17,1"}}) {
    const CartanGraph g = build_cartan_graph(test::row_diagram(7, row, diagram));
    const RootSystemData r = real_roots(g);
    ASSERT_TRUE(r.finite) << row;
    for (std::size_t x = 0; x < g.size(); ++x)
      for (const auto& a : r.roots[x]) {
        Root n = a;
        for (auto& v : n) v = -v;
        EXPECT_TRUE(r.roots[x].count(n)) << row;
      }
    EXPECT_TRUE(verify_cartan_graph_axioms(g, r).ok()) << row;
    EXPECT_TRUE(verify_root_system_axioms(g, r).ok()) << row;
    EXPECT_TRUE(verify_positive_root_bijections(g, r).ok()) << row;
  }
}

TEST(Roots, TruncatedGraphViolatesThePeriodAxiom) {
  Limits l;
  l.max_depth = 2;
  const CartanGraph g = build_cartan_graph(test::row_diagram(7, "17", "D17,1"), l);
  EXPECT_TRUE(g.truncated);
  const RootSystemData r = real_roots(g, l);
  const AxiomReport rep = verify_cartan_graph_axioms(g, r);
  EXPECT_TRUE(std::any_of(rep.violations.begin(), rep.violations.end(),
                          [](const std::string& v) { return v.find("axiom (2)") != std::string::npos; }));
  EXPECT_FALSE(weyl_groupoid_order(g).has_value());
}

TEST(Roots, InfiniteClosureStopsAtTheBound) {
  const auto doc = test::fixture("cubic_chain.toml");
  const CartanGraph g = build_cartan_graph(doc.dynkin);
  const RootSystemData r = real_roots(g);
  EXPECT_FALSE(r.finite);
  EXPECT_FALSE(r.reason.empty());
}

TEST(Morphisms, CountAndCap) {
  const CartanGraph g = build_cartan_graph(test::row_diagram(7, "5", "D5,1"));
  std::size_t total = 0;
  for (std::size_t x = 0; x < g.size(); ++x) {
    const auto ms = enumerate_morphisms(g, x);
    for (const auto& m : ms) EXPECT_EQ(m.target, x);
    total += ms.size();
  }
  EXPECT_EQ(weyl_groupoid_order(g), std::optional<std::uint64_t>(total));
  EXPECT_THROW(enumerate_morphisms(g, 0, 5), Error);
}
