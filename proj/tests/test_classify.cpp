#include <gtest/gtest.h>

#include "kummer/classify.hpp"
#include "kummer/sampling.hpp"
#include "kummer/theorems.hpp"
#include "support.hpp"

using namespace kummer;
using kt::E;
using kt::F;
using kt::V;

namespace {

ExtensionReport cls(long p, bool u, int n, const std::string& h) {
  Field K = F(p, u, n);
  return classify(K, E(K, h));
}

// j from the extension: w(sigma(mu)/mu - 1) for the case witness
Value j_oracle(const ClassifiedExtension& ce) {
  ExtElem mu = j_witness(ce.ext, ce.report);
  return ce.ext.w(ce.ext.sigma(mu) / mu - ce.ext.one());
}

// monomials p^c z^a s^b u^d of value in [0, bound]
std::vector<FieldElem> small_monomials(const Field& K, const Value& bound) {
  std::vector<FieldElem> out;
  const long p = K.p();
  const long sdeg = K.tower_level() > 0 ? 2 : 0;
  for (long c = 0; c <= 1; ++c)
    for (long a = 0; a <= p - 2; ++a)
      for (long b = 0; b <= sdeg; ++b)
        for (long d = 0; d <= (K.with_u() ? 1 : 0); ++d) {
          FieldElem m = K.integer(p).pow(c) * K.z().pow(a);
          if (b > 0) m *= K.s().pow(b);
          if (d > 0) m *= K.u();
          if (valuation(m) <= bound) out.push_back(m);
        }
  return out;
}

// largest v(h a^p - 1) over a = r (1 + c m) with small constants r, c and monomials m
Value brute_force_best_t(const FieldElem& h) {
  const Field& K = h.field();
  const long p = K.p();
  std::vector<FieldElem> ms = small_monomials(K, Value(1));
  std::vector<FieldElem> rs{K.one(), K.integer(-1), K.integer(2), K.zeta()};
  if (K.with_u()) rs.push_back(K.u());
  std::vector<FieldElem> cs{K.one(), K.integer(-1), K.integer(2)};
  if (K.with_u()) cs.push_back(K.u());
  Value best = valuation(h - K.one());
  for (const auto& r : rs)
    for (const auto& m : ms)
      for (const auto& c : cs) {
        FieldElem a = r * (K.one() + c * m);
        best = max(best, valuation(h * a.pow(p) - K.one()));
      }
  return best;
}

void expect_same_invariants(const ExtensionReport& a, const ExtensionReport& b) {
  EXPECT_EQ(a.tag, b.tag);
  EXPECT_EQ(a.sw, b.sw);
  EXPECT_EQ(a.j, b.j);
  EXPECT_EQ(a.i, b.i);
  EXPECT_EQ(a.t, b.t);
  EXPECT_EQ(a.e, b.e);
  EXPECT_EQ(a.f, b.f);
}

}  // namespace

TEST(Classify, WildII) {
  ExtensionReport r = cls(3, false, 0, "z");
  EXPECT_EQ(r.tag, CaseTag::WILD_II);
  EXPECT_EQ(r.h_best, F(3).z());
  EXPECT_EQ(r.iterations, 0);
  EXPECT_EQ(r.sw, V("3/2"));
  EXPECT_EQ(r.j, V("1/2"));
  EXPECT_EQ(r.e, 3);
  EXPECT_EQ(r.f, 1);
  EXPECT_EQ(r.i, V("1/2") + V("1/6"));
}

TEST(Classify, WildIII) {
  ExtensionReport r = cls(3, true, 0, "1 + u*z");
  EXPECT_EQ(r.tag, CaseTag::WILD_III);
  EXPECT_EQ(r.t, V("1/2"));
  EXPECT_EQ(r.sw, V("1"));
  EXPECT_EQ(r.j, V("1/3"));
  EXPECT_EQ(r.e, 3);
}

TEST(Classify, FerociousIV) {
  ExtensionReport r = cls(3, true, 0, "u*(1+z)^3");
  EXPECT_EQ(r.tag, CaseTag::FEROCIOUS_IV);
  EXPECT_EQ(r.h_best, F(3, true).u());
  EXPECT_EQ(r.sw, V("3/2"));
  EXPECT_EQ(r.j, V("1/2"));
  EXPECT_EQ(r.f, 3);
  EXPECT_EQ(r.e, 1);
}

TEST(Classify, FerociousV) {
  ExtensionReport r = cls(3, true, 1, "1 + u*z");
  EXPECT_EQ(r.tag, CaseTag::FEROCIOUS_V);
  EXPECT_EQ(r.sw, V("1"));
  EXPECT_EQ(r.j, V("1/3"));
  EXPECT_EQ(r.f, 3);
}

TEST(Classify, UnramifiedI) {
  ExtensionReport r = cls(3, false, 0, "1 + 3*z");
  EXPECT_EQ(r.tag, CaseTag::UNRAMIFIED_I);
  EXPECT_EQ(r.sw, V("0"));
  EXPECT_EQ(r.j, V("0"));
  EXPECT_EQ(r.i, V("0"));
  EXPECT_EQ(r.t, V("3/2"));
  EXPECT_EQ(r.e, 1);
  EXPECT_EQ(r.f, 3);
  // Q(sqrt 5) over Q: 5 = 1 + 4, residue of (h-1)/4 is 1, not in {x^2 + x}
  ExtensionReport q = cls(2, false, 0, "5");
  EXPECT_EQ(q.tag, CaseTag::UNRAMIFIED_I);
}

TEST(Classify, Rejections) {
  EXPECT_EQ(kt::kind_of([] { cls(2, false, 0, "4"); }), ErrorKind::NotInA);
  EXPECT_EQ(kt::kind_of([] { cls(3, true, 0, "(1+u)^3"); }), ErrorKind::NotInA);
  EXPECT_EQ(kt::kind_of([] { cls(3, false, 0, "1 + 9*z"); }), ErrorKind::NotInA);
  EXPECT_EQ(kt::kind_of([] { cls(3, false, 0, "0"); }), ErrorKind::ZeroH);
  Field K = F(3);
  EXPECT_EQ(kt::kind_of([&] { best_h(K, K.integer(2), 0); }), ErrorKind::IterationCap);
  EXPECT_NO_THROW(best_h(K, K.integer(2), 1));
}

TEST(Classify, Descent) {
  ExtensionReport r = cls(3, true, 0, "1 + u*z");
  EXPECT_EQ(descend_invariants(r, 1).sw, r.sw);
  ExtensionReport d = descend_invariants(r, 2);
  EXPECT_EQ(d.sw, V("1"));
  EXPECT_TRUE(d.descended);
  EXPECT_EQ(d.m, 2);
  EXPECT_EQ(kt::kind_of([&] { descend_invariants(r, 3); }), ErrorKind::InvalidArgument);
}

struct Instance {
  long p;
  bool u;
  int n;
  const char* h;
};

class ClassifyInstances : public ::testing::TestWithParam<Instance> {};

TEST_P(ClassifyInstances, ReportInvariants) {
  const Instance& c = GetParam();
  ClassifiedExtension ce = kt::X(c.p, c.u, c.n, c.h);
  const ExtensionReport& r = ce.report;
  EXPECT_EQ(r.e * r.f * r.defect, c.p);
  EXPECT_EQ(r.defect, 1);
  EXPECT_GE(r.sw, Value(0));
  EXPECT_EQ(r.sw == Value(0), r.tag == CaseTag::UNRAMIFIED_I);
  EXPECT_EQ(r.H_gen_val, r.sw);
  if (r.tag != CaseTag::UNRAMIFIED_I) EXPECT_EQ(r.sw, r.j * c.p);
  EXPECT_EQ(r.model, "global");
  // idempotence
  ExtensionReport again = classify(ce.ext.base(), r.h_best);
  EXPECT_EQ(again.h_best, r.h_best);
  EXPECT_EQ(again.iterations, 0);
}

TEST_P(ClassifyInstances, JMatchesExtensionOracle) {
  const Instance& c = GetParam();
  ClassifiedExtension ce = kt::X(c.p, c.u, c.n, c.h);
  EXPECT_EQ(j_oracle(ce), ce.report.j);
}

// i is the least w(sigma b - b) over integral b; the case generator attains it
TEST_P(ClassifyInstances, IMatchesSampledMinimum) {
  const Instance& c = GetParam();
  ClassifiedExtension ce = kt::X(c.p, c.u, c.n, c.h);
  const Extension& e = ce.ext;
  ExtElem mu = case_generator(e, ce.report);
  Value least = e.w(e.sigma(mu) - mu);
  Rng rng(17);
  for (int k = 0; k < 25; ++k) {
    ExtElem b = sample_integral(e, ce.report, rng, false);
    ASSERT_GE(e.w(b), Value(0));
    least = min(least, e.w(e.sigma(b) - b));
  }
  EXPECT_EQ(least, ce.report.i);
}

TEST_P(ClassifyInstances, BruteForceFindsNoBetterH) {
  const Instance& c = GetParam();
  ClassifiedExtension ce = kt::X(c.p, c.u, c.n, c.h);
  const FieldElem& hb = ce.report.h_best;
  Value t = valuation(hb - hb.field().one());
  EXPECT_EQ(brute_force_best_t(hb), t);
}

TEST_P(ClassifyInstances, ClassInvariance) {
  const Instance& c = GetParam();
  Field K = F(c.p, c.u, c.n);
  FieldElem h = E(K, c.h);
  ExtensionReport r = classify(K, h);
  Rng rng(5);
  for (int k = 0; k < 4; ++k) {
    FieldElem a = random_element(K, rng);
    expect_same_invariants(classify(K, h * a.pow(c.p)), r);
  }
}

TEST_P(ClassifyInstances, TraceIncreases) {
  const Instance& c = GetParam();
  Field K = F(c.p, c.u, c.n);
  Rng rng(6);
  FieldElem h = E(K, c.h) * random_unit(K, rng).pow(c.p);
  BestH b = best_h(K, h);
  for (std::size_t k = 1; k < b.t_trace.size(); ++k) EXPECT_LT(b.t_trace[k - 1], b.t_trace[k]);
  EXPECT_EQ(b.h_best, h * b.multiplier.pow(c.p));
}

INSTANTIATE_TEST_SUITE_P(Cases, ClassifyInstances,
                         ::testing::Values(Instance{3, false, 0, "z"}, Instance{3, true, 0, "1+u*z"},
                                           Instance{3, true, 0, "u"}, Instance{3, true, 1, "1+u*z"},
                                           Instance{3, false, 0, "1+3*z"}, Instance{2, false, 0, "-1"},
                                           Instance{2, false, 0, "2"}, Instance{2, false, 0, "5"},
                                           Instance{2, true, 0, "u"}, Instance{5, false, 0, "2"},
                                           Instance{5, false, 0, "1+z^5"}, Instance{3, false, 1, "4"}));
