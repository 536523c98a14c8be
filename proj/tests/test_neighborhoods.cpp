#include <gtest/gtest.h>

#include "helpers.hpp"
#include "nichols/errors.hpp"
#include "nichols/neighborhoods.hpp"

using namespace nichols;

namespace {

CartanGraph graph_of(const std::string& row, int p = 7, std::size_t instance = 0) {
  return build_cartan_graph(test::row_diagram(p, row, "D" + row + ",1", instance));
}

}  // namespace

TEST(GoodA3, RowOne) {
  const CartanGraph g = graph_of("1");
  const auto w = good_A3(g, 0);
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(w->permutation, (std::array<int, 3>{0, 1, 2}));
  EXPECT_EQ(w->data, (std::array<int, 4>{1, 0, 0, 1}));
  EXPECT_FALSE(good_B3(g, 0).has_value());
  EXPECT_FALSE(good_C3(g, 0).has_value());
}

TEST(GoodB3, RowTwo) {
  const CartanGraph g = graph_of("2");
  EXPECT_FALSE(good_A3(g, 0).has_value());
  const auto w = good_B3(g, 0);
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(w->data[0], 1);
  EXPECT_FALSE(good_C3(g, 0).has_value());
}

TEST(GoodC3, RowThree) {
  const CartanGraph g = graph_of("3");
  const auto w = good_C3(g, 0);
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(w->permutation, (std::array<int, 3>{0, 1, 2}));
  EXPECT_EQ(w->data[0], 1);
}

TEST(GoodC3, RowThirteen) {
  for (std::size_t inst = 0; inst < 2; ++inst) {
    const CartanGraph g = graph_of("13", 7, inst);
    const auto w = good_C3(g, g.base);
    ASSERT_TRUE(w.has_value());
    EXPECT_EQ(w->kind, NeighborhoodKind::C3);
  }
}

// X = chain(-1, q^-1, q, q^-1, zeta) with q = -zeta: a_23 at r_1 r_3(X) is -3.
TEST(GoodB3, RejectsTheMinusZetaCase) {
  const auto doc = test::fixture("b3a.toml");
  const CartanGraph g = build_cartan_graph(doc.dynkin);
  const std::size_t x = g.base;
  const std::size_t y = g.neighbor[g.neighbor[x][2]][0];
  EXPECT_EQ(g.points[y].cartan[1][2], -3);
  EXPECT_EQ(g.points[g.neighbor[x][2]].cartan, g.points[x].cartan);
  EXPECT_FALSE(good_B3(g, x).has_value());
  EXPECT_FALSE(find_good_point(g).has_value());
}

TEST(Neighborhoods, RankMismatch) {
  auto c = ScalarContext::create(7, {{"q", std::nullopt}});
  const Scalar q = c.generator("q");
  const CartanGraph g = build_cartan_graph(DynkinData(c, {q, q}, {{c.one(), inv(q)}, {inv(q), c.one()}}));
  try {
    good_A3(g, 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::RankMismatch);
  }
  EXPECT_THROW(good_B3(g, 0), Error);
  EXPECT_THROW(good_C3(g, 0), Error);
}

TEST(Neighborhoods, DecomposableInput) {
  auto c = ScalarContext::create(7, {{"q", std::nullopt}});
  const Scalar q = c.generator("q");
  const CartanGraph g = build_cartan_graph(DynkinData::chain(c, q, inv(q), q, c.one(), q));
  ASSERT_FALSE(g.warnings.empty());
  EXPECT_NE(g.warnings[0].find("decomposable"), std::string::npos);
  EXPECT_FALSE(find_good_point(g).has_value());
}

TEST(Neighborhoods, EveryTableRowHasAGoodPoint) {
  for (int p : {2, 3, 7}) {
    for (const auto& row : builtin_rows(p))
      for (const auto& inst : instantiate(row, p)) {
        Relabeled v;
        v.diagram = row.diagrams.front().id;
        const CartanGraph g = build_cartan_graph(instantiate(row, inst, v));
        const auto gp = find_good_point(g);
        ASSERT_TRUE(gp.has_value()) << "p=" << p << " row " << row.id;
        EXPECT_GE(gp->multiplicity, 1u);
        if (row.id == "2") EXPECT_EQ(gp->witness.kind, NeighborhoodKind::B3);
        if (row.id == "3") EXPECT_EQ(gp->witness.kind, NeighborhoodKind::C3);
      }
  }
}

TEST(Neighborhoods, WitnessesAreSortedAndConsistent) {
  const CartanGraph g = graph_of("1");
  const auto all = all_witnesses(g, 0);
  ASSERT_FALSE(all.empty());
  for (const auto& w : all) EXPECT_EQ(w.kind, NeighborhoodKind::A3);
  EXPECT_EQ(all.front().permutation, good_A3(g, 0)->permutation);
}
