#include <gtest/gtest.h>

#include "nichols/errors.hpp"
#include "nichols/reflections.hpp"
#include "oracle.hpp"

using namespace nichols;

TEST(Reflect, CaseA1) {
  auto c = ScalarContext::create(7, {{"q", std::nullopt}, {"r", std::nullopt}});
  const Scalar q = c.generator("q"), r = c.generator("r"), m = c.minus_one();
  const DynkinData d = DynkinData::chain(c, m, q, m, r, m);
  const DynkinData x = reflect(d, 1, ReflectMode::Verify);
  EXPECT_EQ(x, DynkinData::triangle(c, q, m, r, inv(q), inv(r), q * r));
  EXPECT_EQ(x.describe(), "triangle(q, -1, r; q^-1, r^-1, q*r)");
  EXPECT_EQ(reflect(x, 1, ReflectMode::Verify), d);
}

TEST(Reflect, CaseB2a) {
  auto c = ScalarContext::create(7, {{"q", std::nullopt}, {"zeta", 3}});
  const Scalar q = c.generator("q"), z = c.generator("zeta"), m = c.minus_one();
  const DynkinData d = DynkinData::chain(c, m, q, m, inv(q), z);
  const DynkinData x = reflect(d, 2, ReflectMode::Verify);
  EXPECT_EQ(x, DynkinData::chain(c, m, q, m * z * pow(q, -2), q * inv(z), z));
}

TEST(Reflect, NotIFiniteThrows) {
  auto c = ScalarContext::create(0, {{"q", std::nullopt}});
  const Scalar q = c.generator("q");
  const DynkinData d = DynkinData::chain(c, c.one(), q, q, c.one(), q);
  try {
    reflect(d, 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotIFinite);
  }
}

TEST(Reflect, StandardTypeIsFixed) {
  auto c = ScalarContext::create(5, {{"q", std::nullopt}});
  const Scalar q = c.generator("q");
  const DynkinData d = DynkinData::chain(c, q, inv(q), q, inv(q), q);
  for (int i = 0; i < 3; ++i) EXPECT_EQ(reflect(d, i, ReflectMode::Verify), d);
}

TEST(SimpleReflection, Matrices) {
  const IntMatrix a3{{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}};
  // columns are the images of the simple roots
  EXPECT_EQ(simple_reflection_matrix(a3, 0), (IntMatrix{{-1, 1, 0}, {0, 1, 0}, {0, 0, 1}}));
  EXPECT_EQ(apply_matrix(simple_reflection_matrix(a3, 0), {0, 1, 0}), (std::vector<std::int64_t>{1, 1, 0}));
  const IntMatrix diag{{2, 0, 0}, {0, 2, 0}, {0, 0, 2}};
  EXPECT_EQ(simple_reflection_matrix(diag, 1), (IntMatrix{{1, 0, 0}, {0, -1, 0}, {0, 0, 1}}));
  for (int i = 0; i < 3; ++i) {
    const IntMatrix s = simple_reflection_matrix(a3, i);
    EXPECT_EQ(multiply(s, s), identity_matrix(3));
  }
}

TEST(Reflect, AgreesWithBicharacter) {
  std::mt19937_64 rng(5);
  int compared = 0;
  for (int t = 0; t < 60; ++t) {
    const auto rc = oracle::random_context(rng, {2, 3, 5, 7}, 12, 2);
    for (int k = 0; k < 5; ++k) {
      const DynkinData d = oracle::random_dynkin(rng, rc);
      for (int i = 0; i < 3; ++i) {
        const DynkinData x = reflect(d, i, ReflectMode::Verify);
        for (const auto& a : rc.embeddings) {
          const auto cd = oracle::evaluate(rc.field, a, d);
          std::vector<std::int64_t> row(3, 2);
          for (int j = 0; j < 3; ++j)
            if (j != i) row[j] = *oracle::cartan_entry(rc.field, cd.vertex[i], cd.edge[i][j]);
          EXPECT_TRUE(oracle::same(oracle::evaluate(rc.field, a, x), oracle::reflect(rc.field, cd, i, row)))
              << d.describe() << " at " << i + 1 << " p=" << rc.p;
          ++compared;
        }
      }
    }
  }
  EXPECT_EQ(compared, 60 * 5 * 3 * 2);
}

TEST(Reflect, InvolutionOnRandomInputs) {
  std::mt19937_64 rng(99);
  int checked = 0;
  while (checked < 1000) {
    const auto rc = oracle::random_context(rng, {2, 3, 5, 7}, 12, 0);
    const DynkinData d = oracle::random_dynkin(rng, rc);
    for (int i = 0; i < 3; ++i) {
      if (!i_finite(d, i)) continue;
      const DynkinData x = reflect(d, i);
      ASSERT_TRUE(i_finite(x, i));
      EXPECT_EQ(reflect(x, i), d) << d.describe() << " at " << i + 1;
      ++checked;
    }
  }
}

TEST(Reflect, InvolutionWithGenericParameters) {
  auto c = ScalarContext::create(7, {{"q", std::nullopt}, {"r", std::nullopt}, {"zeta", 3}});
  const Scalar q = c.generator("q"), r = c.generator("r"), z = c.generator("zeta"), m = c.minus_one();
  const std::vector<DynkinData> inputs{
      DynkinData::chain(c, m, q, m, r, m),        DynkinData::chain(c, m, q, m, inv(q), z),
      DynkinData::chain(c, q, inv(q), q, inv(q), q), DynkinData::chain(c, pow(q, 2), pow(q, -2), pow(q, 2), pow(q, -2), q),
      DynkinData::triangle(c, q, m, r, inv(q), inv(r), q * r)};
  for (const auto& d : inputs)
    for (int i = 0; i < 3; ++i) {
      if (!i_finite(d, i)) continue;
      EXPECT_EQ(reflect(reflect(d, i, ReflectMode::Verify), i, ReflectMode::Verify), d) << d.describe();
    }
}
