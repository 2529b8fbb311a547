#include <gtest/gtest.h>

#include <random>

#include "kummer/poly.hpp"
#include "kummer/ratfunc.hpp"
#include "support.hpp"

using namespace kummer;

namespace {

QPoly P(std::vector<long> c) {
  std::vector<mpq_class> q;
  for (long x : c) q.emplace_back(x);
  return QPoly(q);
}

QPoly random_poly(std::mt19937_64& rng, int maxdeg) {
  std::vector<mpq_class> c;
  int d = static_cast<int>(rng() % (maxdeg + 1));
  for (int i = 0; i <= d; ++i) c.emplace_back(static_cast<long>(rng() % 19) - 9, static_cast<long>(rng() % 3) + 1);
  if (c.back() == 0) c.back() = 1;
  return QPoly(c);
}

// textbook Euclid over Q, monic result
QPoly euclid_gcd(QPoly a, QPoly b) {
  while (!b.is_zero()) {
    QPoly r = a.divmod(b).second;
    a = b;
    b = r;
  }
  return a.is_zero() ? a : a.monic();
}

}  // namespace

TEST(Poly, Basics) {
  QPoly a = P({1, 1}), b = P({-1, 1});
  EXPECT_EQ(a * b, P({-1, 0, 1}));
  EXPECT_EQ((a + b), P({0, 2}));
  EXPECT_TRUE((a - a).is_zero());
  EXPECT_EQ(P({1, 2, 3}).derivative(), P({2, 6}));
  auto [q, r] = P({-1, 0, 1}).divmod(P({1, 1}));
  EXPECT_EQ(q, P({-1, 1}));
  EXPECT_TRUE(r.is_zero());
  EXPECT_EQ(P({0, 0, 0}).degree(), -1);
  EXPECT_EQ(P({9, 3}).gauss_val(3), 1);
  EXPECT_EQ(padic_val(mpq_class(18, 5), 3), 2);
  EXPECT_EQ(padic_val(mpq_class(5, 27), 3), -3);
  EXPECT_TRUE(is_prime(97));
  EXPECT_FALSE(is_prime(91));
  EXPECT_FALSE(is_prime(1));
}

TEST(Poly, GcdKnown) {
  QPoly g = P({2, 1});
  EXPECT_EQ(gcd(g * P({1, 1}), g * P({-1, 0, 3})), g);
  EXPECT_EQ(gcd(P({1, 1}), P({2, 1})), P({1}));
  EXPECT_TRUE(gcd(QPoly(), QPoly()).is_zero());
  EXPECT_EQ(gcd(QPoly(), P({4, 2})), P({2, 1}));
  EXPECT_EQ(gcd(P({5}), P({1, 1, 1})), P({1}));
}

TEST(PolyProperty, GcdMatchesEuclid) {
  std::mt19937_64 rng(21);
  for (int k = 0; k < 150; ++k) {
    QPoly c = random_poly(rng, 4);
    QPoly a = random_poly(rng, 5) * c, b = random_poly(rng, 5) * c;
    QPoly g = gcd(a, b);
    EXPECT_EQ(g, euclid_gcd(a, b));
    if (!g.is_zero()) {
      EXPECT_TRUE(a.divmod(g).second.is_zero());
      EXPECT_TRUE(b.divmod(g).second.is_zero());
    }
  }
}

TEST(PolyProperty, GcdLargeCoefficients) {
  // coefficient growth well past a single machine prime
  QPoly big = P({1});
  for (int i = 1; i <= 12; ++i) big = big * P({1000003L * i + 7, 999983L - i, 1});
  QPoly a = big * P({3, 0, 1}), b = big * P({-5, 1});
  EXPECT_EQ(gcd(a, b), big.monic());
}

TEST(RatFunc, Canonical) {
  RatFunc u = RatFunc::u();
  RatFunc f = (u * u - RatFunc(1)) / (RatFunc(2) * u + RatFunc(2));
  EXPECT_EQ(f, RatFunc(P({-1, 1}), P({2})));
  EXPECT_TRUE(f.den().lead() == 1);
  EXPECT_EQ((u / u), RatFunc(1));
  EXPECT_EQ(RatFunc(P({0, 3}), P({9, 3})).gauss_val(3), 0);
  EXPECT_EQ(kt::kind_of([] { RatFunc(0).inverse(); }), ErrorKind::DivisionByZero);
}

TEST(RatFuncProperty, FieldLaws) {
  std::mt19937_64 rng(22);
  auto draw = [&] {
    QPoly d = random_poly(rng, 3);
    return RatFunc(random_poly(rng, 3), d.is_zero() ? P({1}) : d);
  };
  for (int k = 0; k < 100; ++k) {
    RatFunc a = draw(), b = draw(), c = draw();
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ((a * b) * c, a * (b * c));
    if (!b.is_zero()) EXPECT_EQ((a / b) * b, a);
    EXPECT_TRUE(gcd(a.num(), a.den()).is_one() || a.is_zero());
  }
}

TEST(FpPoly, Arithmetic) {
  FpPoly a(5, {1, 1}), b(5, {4, 1});
  EXPECT_EQ(a * b, FpPoly(5, {4, 0, 1}));
  EXPECT_EQ(gcd(a * b, a * a), a.monic());
  EXPECT_EQ(a.pow(5), FpPoly(5, {1, 0, 0, 0, 0, 1}));
  EXPECT_EQ(mod_inverse(3, 7), 5);
}
