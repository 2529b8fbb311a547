#include <gtest/gtest.h>

#include "kummer/diff.hpp"
#include "kummer/sampling.hpp"
#include "kummer/theorems.hpp"
#include "support.hpp"

using namespace kummer;
using kt::E;
using kt::V;

namespace {

const Witness* find_witness(const VerificationResult& r, const std::string& label) {
  for (const auto& w : r.witnesses)
    if (w.label == label) return &w;
  return nullptr;
}

}  // namespace

TEST(HEqN, QuadraticGaussian) {
  ClassifiedExtension ce = kt::X(2, false, 0, "-1");
  VerificationResult r = verify_h_eq_n(ce.ext, ce.report, 200, 42);
  EXPECT_TRUE(r.pass) << (r.failures.empty() ? "" : r.failures[0]);
  EXPECT_EQ(r.min_attained, V("1"));
  const Witness* w = find_witness(r, "sigma(alpha-1)/(alpha-1) - 1");
  ASSERT_NE(w, nullptr);
  EXPECT_EQ(w->expr, "2");
  EXPECT_EQ(w->value, V("1"));
}

TEST(HEqN, AlphaWitnessHasValueOfZp) {
  for (const char* h : {"z", "1+u*z", "u"}) {
    ClassifiedExtension ce = kt::X(3, true, 0, h);
    VerificationResult r = verify_h_eq_n(ce.ext, ce.report, 10, 1);
    EXPECT_TRUE(r.pass);
    const Witness* w = find_witness(r, "sigma(alpha)/alpha - 1");
    ASSERT_NE(w, nullptr);
    EXPECT_EQ(w->value, V("3/2"));
    EXPECT_GE(w->value, ce.report.sw);
  }
}

TEST(GeneratorFromUnit, PreconditionsForTwo) {
  ClassifiedExtension g = kt::X(2, false, 0, "-1");
  const Extension& e = g.ext;
  EXPECT_EQ(kt::kind_of([&] { kummer_generator_from_unit(e, e.alpha()); }), ErrorKind::PreconditionViolated);
  EXPECT_EQ(kt::kind_of([&] { kummer_generator_from_unit(e, e.one() + e.alpha()); }),
            ErrorKind::PreconditionViolated);
  EXPECT_EQ(kt::kind_of([&] { kummer_generator_from_unit(e, e.one()); }), ErrorKind::PreconditionViolated);
  ClassifiedExtension t = kt::X(2, false, 0, "2");
  ExtElem b = t.ext.one() + t.ext.alpha();
  EXPECT_EQ(t.ext.w(t.ext.sigma(b) - b), V("3/2"));
  EXPECT_EQ(kt::kind_of([&] { kummer_generator_from_unit(t.ext, b); }), ErrorKind::PreconditionViolated);
}

TEST(GeneratorFromUnit, FallbackAtAlpha) {
  ClassifiedExtension ce = kt::X(3, true, 0, "1+u*z");
  GeneratorResult g = kummer_generator_from_unit(ce.ext, ce.ext.alpha());
  EXPECT_TRUE(g.fallback);
  EXPECT_TRUE(g.sigma_ok);
  EXPECT_TRUE(g.bound_ok);
  // generic witness sigma(alpha)/alpha - 1 with norm z^p
  EXPECT_EQ(g.lhs, V("3/2"));
  EXPECT_EQ(g.rhs, V("3/2"));
  EXPECT_EQ(g.x, ce.ext.alpha());
}

TEST(GeneratorFromUnit, TwoBranchOnQ) {
  // Q(sqrt 5) is unramified at 2; sampled units reach w(sigma b - b) = 0 < v(2)
  ClassifiedExtension ce = kt::X(2, false, 0, "5");
  VerificationResult r = verify_generator_from_unit(ce.ext, ce.report, 40, 3);
  EXPECT_TRUE(r.pass) << (r.failures.empty() ? "" : r.failures[0]);
  EXPECT_GT(find_witness(r, "admissible")->value, Value(0));
}

// sigma(x) = zeta x and x^p in K hold for every constructed x
class GeneratorIdentities : public ::testing::TestWithParam<std::tuple<long, bool, int, const char*>> {};

TEST_P(GeneratorIdentities, ConstructedXIsEigenvector) {
  auto [p, u, n, h] = GetParam();
  ClassifiedExtension ce = kt::X(p, u, n, h);
  Rng rng(77);
  int built = 0;
  for (int k = 0; k < 30; ++k) {
    ExtElem b = sample_integral(ce.ext, ce.report, rng, true);
    try {
      GeneratorResult g = kummer_generator_from_unit(ce.ext, b);
      EXPECT_TRUE(g.sigma_ok) << b.str();
      EXPECT_TRUE(g.in_base_ok) << b.str();
      EXPECT_GE(g.lhs, ce.report.sw);
      built += !g.fallback;
    } catch (const Error& ex) {
      EXPECT_EQ(ex.kind(), ErrorKind::PreconditionViolated);
    }
  }
  EXPECT_GT(built, 0);
}

INSTANTIATE_TEST_SUITE_P(Instances, GeneratorIdentities,
                         ::testing::Values(std::tuple{3L, false, 0, "1+3*z"}, std::tuple{3L, false, 0, "1+z^2"},
                                           std::tuple{5L, false, 0, "1+z^5"}, std::tuple{5L, false, 0, "2"},
                                           std::tuple{2L, false, 0, "5"}, std::tuple{3L, true, 0, "1+u*z^2"}));

TEST(GeneratorFromUnit, BoundOnUnramified) {
  for (auto [p, h] : {std::pair{3L, "1+3*z"}, std::pair{5L, "1+z^5"}}) {
    ClassifiedExtension ce = kt::X(p, false, 0, h);
    VerificationResult r = verify_generator_from_unit(ce.ext, ce.report, 30, 5);
    EXPECT_TRUE(r.pass) << h << " " << (r.failures.empty() ? "" : r.failures[0]);
  }
}

TEST(Rsw, Forms) {
  ClassifiedExtension w2 = kt::X(3, false, 0, "z");
  RswResult a = rsw(w2.ext, w2.report);
  EXPECT_EQ(a.H.gen_val, V("3/2"));
  EXPECT_EQ(a.I.gen_val, V("1"));
  EXPECT_EQ(a.I.kind, IdealDesc::Threshold);
  // (1/(h-1)) dlog h on the m_A branch
  DiffElem expect = DiffElem::dlog((w2.report.h_best - w2.ext.base().one()).inverse(), w2.report.h_best);
  EXPECT_TRUE(compare(a.form, expect, Value::infinity()).exact);

  ClassifiedExtension w3 = kt::X(3, true, 0, "1+u*z");
  RswResult b = rsw(w3.ext, w3.report);
  EXPECT_EQ(b.I.gen_val, V("2/3"));
  const FieldElem& h = w3.report.h_best;
  const Field& K = w3.ext.base();
  // unit branch: ((h-1)/h) dlog(h-1), scaled by 1/(h-1)
  DiffElem unit = DiffElem::dlog(h.inverse(), h - K.one());
  EXPECT_TRUE(compare(b.form, unit, Value::infinity()).exact);

  ClassifiedExtension ur = kt::X(3, false, 0, "1+3*z");
  RswResult c = rsw(ur.ext, ur.report);
  EXPECT_EQ(c.H.gen_val, V("0"));
  EXPECT_EQ(c.I.gen_val, V("0"));
}

TEST(Rsw, WellDefined) {
  ClassifiedExtension ce = kt::X(3, true, 0, "1+u*z");
  const Field& K = ce.ext.base();
  VerificationResult r = verify_rsw_well_defined(ce.ext, ce.report, E(K, "1+z"));
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(find_witness(r, "v(a-1)")->value, V("1/2"));
  EXPECT_EQ(kt::kind_of([&] { verify_rsw_well_defined(ce.ext, ce.report, K.one()); }),
            ErrorKind::PreconditionViolated);
  EXPECT_EQ(kt::kind_of([&] { verify_rsw_well_defined(ce.ext, ce.report, K.zero()); }),
            ErrorKind::PreconditionViolated);
  EXPECT_EQ(kt::kind_of([&] { verify_rsw_well_defined(ce.ext, ce.report, E(K, "1+u")); }),
            ErrorKind::NotBestPair);
  // a unit with v(a-1) = 0 against a unit h with v(h-1) = 0 is a best pair
  ClassifiedExtension iv = kt::X(3, true, 0, "u");
  EXPECT_TRUE(verify_rsw_well_defined(iv.ext, iv.report, E(K, "2")).pass);
}

TEST(Inclusions, Witnesses) {
  ClassifiedExtension a = kt::X(3, false, 0, "z");
  VerificationResult r = verify_inclusions(a.ext, a.report);
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(find_witness(r, "(sigma-1)(alpha) = z*alpha")->value, V("2/3"));
  ClassifiedExtension b = kt::X(3, true, 0, "1+u*z");
  VerificationResult s = verify_inclusions(b.ext, b.report);
  EXPECT_TRUE(s.pass);
  EXPECT_EQ(find_witness(s, "(sigma-1)(z/(alpha-1))")->value, V("2/3"));
  ClassifiedExtension c = kt::X(3, false, 0, "1+3*z");
  EXPECT_TRUE(verify_inclusions(c.ext, c.report).pass);
}

TEST(Diagram, UnitElement) {
  ClassifiedExtension a = kt::X(3, false, 0, "z");
  VerificationResult r = verify_diagram(a.ext, a.report, 1, 0);
  EXPECT_TRUE(r.pass);
  EXPECT_NE(find_witness(r, "b = 1, path 1"), nullptr);
  ClassifiedExtension b = kt::X(3, true, 0, "1+u*z");
  EXPECT_TRUE(verify_diagram(b.ext, b.report, 1, 0).pass);
}

class Suites : public ::testing::TestWithParam<std::tuple<long, bool, int, const char*>> {};

TEST_P(Suites, AllPass) {
  auto [p, u, n, h] = GetParam();
  ClassifiedExtension ce = kt::X(p, u, n, h);
  for (const VerificationResult& r :
       {verify_h_eq_n(ce.ext, ce.report, 20, 1), verify_rsw_suite(ce.ext, ce.report, 10, 2),
        verify_inclusions(ce.ext, ce.report), verify_diagram(ce.ext, ce.report, 20, 3)}) {
    EXPECT_TRUE(r.pass) << r.theorem << ": " << (r.failures.empty() ? "" : r.failures[0]);
    EXPECT_TRUE(r.flags.empty()) << r.theorem;
  }
}

INSTANTIATE_TEST_SUITE_P(Instances, Suites,
                         ::testing::Values(std::tuple{3L, false, 0, "z"}, std::tuple{3L, true, 0, "1+u*z"},
                                           std::tuple{3L, true, 0, "u"}, std::tuple{3L, false, 0, "1+3*z"},
                                           std::tuple{2L, false, 0, "-1"}, std::tuple{5L, false, 0, "z"},
                                           std::tuple{2L, true, 0, "u"}));

TEST(Determinism, SameSeedSameResult) {
  ClassifiedExtension ce = kt::X(3, true, 0, "1+u*z");
  VerificationResult a = verify_h_eq_n(ce.ext, ce.report, 15, 9), b = verify_h_eq_n(ce.ext, ce.report, 15, 9);
  EXPECT_EQ(a.min_attained, b.min_attained);
  ASSERT_EQ(a.witnesses.size(), b.witnesses.size());
  Rng r1(4), r2(4);
  for (int k = 0; k < 10; ++k)
    EXPECT_EQ(sample_integral(ce.ext, ce.report, r1, true), sample_integral(ce.ext, ce.report, r2, true));
}
