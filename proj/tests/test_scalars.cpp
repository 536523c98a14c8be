#include <gtest/gtest.h>

#include <functional>

#include "nichols/errors.hpp"
#include "nichols/finite_field.hpp"
#include "nichols/scalars.hpp"

using namespace nichols;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::InternalError;
}

}  // namespace

TEST(Context, FreeGeneratorHasInfiniteOrder) {
  auto c = ScalarContext::create(5, {{"q", std::nullopt}});
  EXPECT_FALSE(order(c.generator("q")).has_value());
  EXPECT_FALSE(is_one(c.generator("q")));
}

TEST(Context, Rejections) {
  EXPECT_EQ(code_of([] { ScalarContext::create(3, {{"z", 3}}); }), ErrorCode::TorsionDivisibleByP);
  EXPECT_EQ(code_of([] { ScalarContext::create(4, {}); }), ErrorCode::InvalidChar);
  EXPECT_EQ(code_of([] { ScalarContext::create(7, {{"a", 4}, {"b", 6}}); }), ErrorCode::NonCyclicTorsion);
  EXPECT_EQ(code_of([] { ScalarContext::create(7, {{"q", std::nullopt}}, {"q*x"}); }), ErrorCode::BadRelation);
  EXPECT_NO_THROW(ScalarContext::create(7, {{"a", 4}, {"b", 6}}, {"a^2*b^-3"}));
}

TEST(Context, RelationQRS) {
  auto c = ScalarContext::create(0, {{"q", std::nullopt}, {"r", std::nullopt}, {"s", std::nullopt}}, {"q*r*s"});
  const Scalar q = c.generator("q"), r = c.generator("r"), s = c.generator("s");
  EXPECT_TRUE(is_one(q * r * s));
  EXPECT_FALSE(order(q * r).has_value());
  EXPECT_EQ(q * r, inv(s));
}

TEST(Arithmetic, Basics) {
  auto c = ScalarContext::create(7, {{"q", std::nullopt}, {"z", 3}});
  const Scalar q = c.generator("q"), z = c.generator("z");
  EXPECT_EQ(pow(q, 0), c.one());
  EXPECT_EQ(mul(q, inv(q)), c.one());
  EXPECT_TRUE(is_one(pow(z, 2) * z));
  EXPECT_EQ(pow(z, -1), pow(z, 2));
  EXPECT_EQ(c.minus_one() * c.minus_one(), c.one());
  EXPECT_NE(c.minus_one(), c.one());
  EXPECT_EQ(order(c.minus_one()), std::optional<std::int64_t>(2));
}

TEST(Arithmetic, MinusOneInCharacteristicTwo) {
  auto c = ScalarContext::create(2, {{"q", std::nullopt}});
  EXPECT_EQ(c.minus_one(), c.one());
  EXPECT_EQ(c.parse("-q"), c.generator("q"));
  EXPECT_EQ(to_string(c.parse("-q")), "q");
}

TEST(Arithmetic, EvenOrderGeneratorContainsMinusOne) {
  auto c = ScalarContext::create(7, {{"z", 6}});
  EXPECT_EQ(pow(c.generator("z"), 3), c.minus_one());
  EXPECT_EQ(c.torsion_order(), 6);
}

TEST(Order, Values) {
  auto c = ScalarContext::create(7, {{"z", 9}});
  EXPECT_EQ(order(pow(c.generator("z"), 3)), std::optional<std::int64_t>(3));
  EXPECT_EQ(order(c.one()), std::optional<std::int64_t>(1));
  EXPECT_EQ(order(c.minus_one() * c.generator("z")), std::optional<std::int64_t>(18));
}

TEST(PrimitiveRoots, Membership) {
  auto c3 = ScalarContext::create(7, {{"z", 3}});
  EXPECT_TRUE(in_primitive_roots(c3.generator("z"), 3));
  auto c9 = ScalarContext::create(7, {{"z", 9}});
  EXPECT_FALSE(in_primitive_roots(c9.generator("z"), 3));
  EXPECT_TRUE(in_primitive_roots(c9.one(), 1));
}

TEST(QNumbers, Vanishing) {
  auto c = ScalarContext::create(7, {{"z", 3}, {"q", std::nullopt}});
  EXPECT_TRUE(qnum_is_zero(c.generator("z"), 3));
  EXPECT_FALSE(qnum_is_zero(c.generator("z"), 2));
  EXPECT_FALSE(qnum_is_zero(c.generator("q"), 1));
  EXPECT_FALSE(qnum_is_zero(c.one(), 1));
  EXPECT_TRUE(qnum_is_zero(c.generator("q"), 0));
  EXPECT_TRUE(qnum_is_zero(c.minus_one(), 2));
  auto c5 = ScalarContext::create(5, {});
  EXPECT_TRUE(qnum_is_zero(c5.one(), 5));
  EXPECT_FALSE(qnum_is_zero(c5.one(), 4));
  auto c0 = ScalarContext::create(0, {});
  EXPECT_FALSE(qnum_is_zero(c0.one(), 5));
}

TEST(DiscreteLog, Values) {
  auto c = ScalarContext::create(7, {{"q", std::nullopt}, {"z", 6}});
  const Scalar q = c.generator("q"), z = c.generator("z");
  EXPECT_EQ(discrete_log(q, pow(q, 5)), std::optional<std::int64_t>(5));
  EXPECT_FALSE(discrete_log(q, inv(q)).has_value());
  EXPECT_EQ(discrete_log(z, pow(z, 4)), std::optional<std::int64_t>(4));
  EXPECT_EQ(discrete_log(z, inv(z)), std::optional<std::int64_t>(5));
  EXPECT_FALSE(discrete_log(z, q).has_value());
}

TEST(Parse, GrammarAndPrinting) {
  auto c = ScalarContext::create(7, {{"q", std::nullopt}, {"zeta", 3}});
  const Scalar q = c.generator("q"), z = c.generator("zeta");
  EXPECT_EQ(c.parse("-q^-2*zeta"), c.minus_one() * pow(q, -2) * z);
  EXPECT_EQ(c.parse("1"), c.one());
  EXPECT_EQ(c.parse("-1"), c.minus_one());
  EXPECT_EQ(c.parse(to_string(c.parse("-q^3*zeta^2"))), c.parse("-q^3*zeta^2"));
  EXPECT_EQ(code_of([&] { c.parse("q^"); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([&] { c.parse("x"); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([&] { c.parse("q**q"); }), ErrorCode::ParseError);
}

TEST(Parse, ContextMismatch) {
  auto a = ScalarContext::create(7, {{"q", std::nullopt}});
  auto b = ScalarContext::create(7, {{"q", std::nullopt}});
  EXPECT_EQ(code_of([&] { (void)(a.generator("q") * b.generator("q")); }), ErrorCode::ContextMismatch);
}

TEST(FiniteField, Evaluation) {
  auto c = ScalarContext::create(7, {{"z", 3}});
  GaloisField f7(7, 1);
  EXPECT_EQ(eval_finite_field(c, f7, {{"z", f7.from_int(2)}}, pow(c.generator("z"), 2)), f7.from_int(4));
  EXPECT_EQ(code_of([&] { eval_finite_field(c, f7, {{"z", f7.from_int(3)}}, c.generator("z")); }),
            ErrorCode::AssignmentViolatesRelations);
  auto cq = ScalarContext::create(5, {{"q", std::nullopt}});
  GaloisField f5(5, 1);
  EXPECT_EQ(eval_finite_field(cq, f5, {{"q", f5.from_int(2)}}, inv(cq.generator("q"))), f5.from_int(3));
  EXPECT_EQ(eval_finite_field(cq, f5, {{"q", f5.from_int(2)}}, cq.minus_one()), f5.from_int(4));
}

TEST(FiniteField, ExtensionFields) {
  const GaloisField f = GaloisField::with_roots_of_unity(2, 9);
  EXPECT_EQ(f.size(), 64u);
  const auto z = f.element_of_order(9);
  EXPECT_EQ(f.multiplicative_order(z), std::optional<std::uint64_t>(9));
  std::uint64_t n = 0;
  for (std::uint64_t code = 1; code < f.size(); ++code) {
    GaloisField::Element x(f.degree());
    std::uint64_t c = code;
    for (auto& d : x) {
      d = static_cast<std::uint32_t>(c % 2);
      c /= 2;
    }
    EXPECT_EQ(f.mul(x, f.inv(x)), f.one());
    if (f.pow(x, 9) == f.one()) ++n;
  }
  EXPECT_EQ(n, 9u);
}
