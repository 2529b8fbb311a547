#include <gtest/gtest.h>

#include <random>

#include "kummer/values.hpp"
#include "support.hpp"

using namespace kummer;
using kt::V;

TEST(Values, Arithmetic) {
  EXPECT_EQ(V("1/2") + V("1/3"), V("5/6"));
  EXPECT_EQ(min(Value::infinity(), V("3/2")), V("3/2"));
  EXPECT_EQ(V("1/2") <=> V("1/2"), std::strong_ordering::equal);
  EXPECT_EQ(Value(2, 4), V("1/2"));
  EXPECT_EQ(Value(3, -6).str(), "-1/2");
  EXPECT_EQ(V("4").str(), "4");
  EXPECT_EQ(Value::infinity().str(), "inf");
  EXPECT_EQ(V("1/2") * 3, V("3/2"));
  EXPECT_EQ(V("3/2") / 3, V("1/2"));
}

TEST(Values, Infinity) {
  Value inf = Value::infinity();
  EXPECT_TRUE((inf + V("7")).is_infinite());
  EXPECT_GT(inf, V("1000000"));
  EXPECT_EQ(kt::kind_of([&] { (void)-inf; }), ErrorKind::NegateInfinity);
  EXPECT_EQ(kt::kind_of([&] { (void)inf.rational(); }), ErrorKind::MalformedValue);
  EXPECT_TRUE(inf.scaled(mpq_class(1, 3)).is_infinite());
}

TEST(Values, ParseRoundTrip) {
  for (const char* s : {"0", "1/2", "-7/3", "inf", "12"}) EXPECT_EQ(V(s).str(), s);
  EXPECT_EQ(V("6/4").str(), "3/2");
  EXPECT_EQ(kt::kind_of([] { V("1/0"); }), ErrorKind::MalformedValue);
  EXPECT_EQ(kt::kind_of([] { V("x"); }), ErrorKind::MalformedValue);
}

TEST(ValueGroup, Lattice) {
  EXPECT_EQ(ValueGroup::for_backend(3, 0).denominator, 2);
  EXPECT_EQ(ValueGroup::for_backend(3, 1).denominator, 6);
  EXPECT_EQ(ValueGroup::for_backend(5, 2).denominator, 100);
  EXPECT_EQ(ValueGroup::for_backend(2, 0).denominator, 1);
  ValueGroup g = ValueGroup::for_backend(3, 0);
  EXPECT_TRUE(g.contains(V("3/2")));
  EXPECT_FALSE(g.contains(V("1/3")));
  EXPECT_EQ(g.ceil(V("1/3")), V("1/2"));
  EXPECT_EQ(g.floor(V("1/3")), V("0"));
  EXPECT_EQ(g.floor(V("-1/3")), V("-1/2"));
  EXPECT_EQ(g.numerator_of(V("3/2")), 3);
  EXPECT_EQ(kt::kind_of([&] { g.numerator_of(V("1/3")); }), ErrorKind::MalformedValue);
}

TEST(ValueGroup, PMultiples) {
  EXPECT_FALSE(in_p_multiple(V("1/2"), ValueGroup::for_backend(3, 0), 3));
  EXPECT_TRUE(in_p_multiple(V("1/2"), ValueGroup::for_backend(3, 1), 3));
  EXPECT_TRUE(in_p_multiple(V("3/2"), ValueGroup::for_backend(3, 0), 3));
  EXPECT_EQ(kt::kind_of([] { in_p_multiple(V("1/3"), ValueGroup::for_backend(3, 0), 3); }),
            ErrorKind::MalformedValue);
}

// properties over random lattice points
TEST(ValuesProperty, OrderAndAddition) {
  std::mt19937_64 rng(11);
  auto draw = [&] { return Value(static_cast<long>(rng() % 61) - 30, static_cast<long>(rng() % 12) + 1); };
  for (int k = 0; k < 500; ++k) {
    Value a = draw(), b = draw(), c = draw();
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ((a + b) + c, a + (b + c));
    Value m = min(a, b);
    EXPECT_TRUE(m == a || m == b);
    EXPECT_TRUE(m <= a && m <= b);
    EXPECT_TRUE(a < b || b < a || a == b);
    EXPECT_EQ(a - a, Value(0));
    EXPECT_EQ(Value::parse(a.str()), a);
  }
}

TEST(ValuesProperty, PMultipleOfLatticePoint) {
  std::mt19937_64 rng(12);
  for (long p : {2L, 3L, 5L, 7L}) {
    for (int n = 0; n < 3; ++n) {
      ValueGroup g = ValueGroup::for_backend(p, n);
      for (int k = 0; k < 50; ++k) {
        Value gamma(static_cast<long>(rng() % 41) - 20, g.denominator);
        EXPECT_TRUE(g.contains(gamma));
        EXPECT_TRUE(in_p_multiple(gamma * p, g, p));
        EXPECT_EQ(g.ceil(gamma), gamma);
        EXPECT_EQ(g.floor(gamma), gamma);
      }
    }
  }
}
