#include "kummer/defectlab.hpp"

#include <algorithm>

#include "kummer/error.hpp"
#include "kummer/expr.hpp"
#include "kummer/sampling.hpp"

namespace kummer {

namespace {

Value wv(const Extension& e, const ExtElem& x) { return x.is_zero() ? Value::infinity() : e.w(x); }

Value vv(const FieldElem& x) { return valuation(x); }

void merge(VerificationResult& into, const VerificationResult& from, const std::string& prefix) {
  for (const auto& f : from.failures) into.fail(prefix + f);
  for (const auto& f : from.flags) into.flags.push_back(prefix + f);
  if (from.has_min) into.attain(from.min_attained);
}

// 1 + sum of a few small monomial terms of positive value.
FieldElem random_one_unit(const Field& K, Rng& rng) {
  const long D = K.value_group().denominator;
  FieldElem c = K.one();
  const long terms = rng.uniform(1, 2);
  for (long k = 0; k < terms; ++k) {
    FieldElem coef = K.integer(rng.uniform(1, K.p() - 1 > 1 ? K.p() - 1 : 1));
    if (rng.coin()) coef = -coef;
    if (K.with_u() && rng.coin()) coef *= K.u();
    c += coef * K.monomial(Value(rng.uniform(1, 2 * D), D));
  }
  return c;
}

}  // namespace

bool in_unit_one_class(const FieldElem& h) {
  if (h.is_zero() || !(valuation(h) == Value(0))) return false;
  FieldElem d = h - h.field().one();
  return d.is_zero() || valuation(d) > Value(0);
}

AlphaPrime make_alpha_prime(const Extension& e) { return make_alpha_prime(e, e.alpha()); }

AlphaPrime make_alpha_prime(const Extension& e, const ExtElem& alpha) {
  const Field& K = e.base();
  ExtElem ap = alpha.pow(e.p());
  if (!ap.in_base() || !in_unit_one_class(ap.coeff(0)))
    throw Error(ErrorKind::NotUnitOneClass, "alpha^p is not a unit congruent to 1");
  ExtElem am1 = alpha - e.one();
  if (am1.is_zero() || alpha.in_base()) throw Error(ErrorKind::PreconditionViolated, "alpha lies in K");
  Value g = K.v_z() - e.w(am1);
  if (!K.value_group().contains(g))
    throw Error(ErrorKind::GammaNotInValueGroup, "v(gamma) = " + g.str() + " is not a value of K");
  if (g < Value(0)) throw Error(ErrorKind::PreconditionViolated, "w(alpha - 1) > v(z)");
  AlphaPrime out;
  out.alpha = alpha;
  out.gamma = K.monomial(g);
  out.alpha_prime = am1.scaled(out.gamma / K.z());
  return out;
}

VerificationResult check_alpha_prime(const Extension& e, const AlphaPrime& a) {
  VerificationResult res;
  res.theorem = "alpha-prime";
  const Field& K = e.base();
  Value w = e.w(a.alpha_prime);
  res.witnesses.push_back({"w(alpha')", a.alpha_prime.str(), w});
  if (!(w == Value(0))) res.fail("w(alpha') = " + w.str() + " != 0");
  ExtElem d = e.sigma(a.alpha_prime) - a.alpha_prime;
  if (!(d == a.alpha.scaled(a.gamma))) res.fail("(sigma - 1)(alpha') != gamma alpha");
  Value g = vv(a.gamma);
  res.witnesses.push_back({"v(gamma)", a.gamma.str(), g});
  if (!(g < K.v_z())) res.fail("v(gamma) = " + g.str() + " is not below v(z)");
  res.attain(g);
  return res;
}

VerificationResult containment_check(const Extension& e, const FieldElem& c) {
  VerificationResult res;
  res.theorem = "containment";
  const Field& K = e.base();
  if (c.is_zero() || !in_unit_one_class(c.pow(e.p()) * e.h()))
    throw Error(ErrorKind::NotInSPrime, "(c alpha)^p is not a unit congruent to 1");
  ExtElem a1 = e.alpha();
  ExtElem a2 = a1.scaled(c);
  AlphaPrime p1 = make_alpha_prime(e, a1);
  AlphaPrime p2 = make_alpha_prime(e, a2);
  Value w1 = e.w(a1 - e.one()), w2 = e.w(a2 - e.one());
  // a: the smaller w(alpha - 1); u = alpha_a / alpha_b lies in K.
  const bool swap = w2 < w1;
  const AlphaPrime& pa = swap ? p2 : p1;
  const AlphaPrime& pb = swap ? p1 : p2;
  const Value wa = swap ? w2 : w1, wb = swap ? w1 : w2;
  FieldElem u = swap ? c : c.inverse();
  if (!(pa.alpha == pb.alpha.scaled(u))) res.fail("alpha_a != u alpha_b");
  FieldElem coef = pa.gamma / pb.gamma * u;
  FieldElem lambda = pa.gamma * (u - K.one()) / K.z();
  if (!(pa.alpha_prime == pb.alpha_prime.scaled(coef) + e.from_base(lambda)))
    res.fail("alpha_a' != (gamma_a/gamma_b) u alpha_b' + gamma_a (u - 1)/z");
  Value vc = vv(coef);
  Value vl = lambda.is_zero() ? Value::infinity() : vv(lambda);
  res.witnesses.push_back({"w(alpha_a - 1)", "", wa});
  res.witnesses.push_back({"w(alpha_b - 1)", "", wb});
  res.witnesses.push_back({"(gamma_a/gamma_b) u", coef.str(), vc});
  res.witnesses.push_back({"gamma_a (u - 1)/z", lambda.str(), vl});
  if (vc < Value(0)) res.fail("coefficient of alpha_b' has value " + vc.str());
  if (vl < Value(0)) res.fail("constant term has value " + vl.str());
  if (wa < wb) {
    res.flags.push_back("strict");
    if (!(vl == Value(0))) res.fail("lambda = gamma_a (u - 1)/z is not a unit: value " + vl.str());
  }
  res.attain(min(vc, vl));
  return res;
}

VerificationResult verify_containment_suite(const Extension& e, int pairs, std::uint64_t seed) {
  VerificationResult res;
  res.theorem = "containment";
  res.samples = pairs;
  res.seed = seed;
  const Field& K = e.base();
  Rng rng(seed);
  int done = 0, strict = 0, skipped = 0;
  for (int k = 0; done < pairs && k < pairs * 20; ++k) {
    FieldElem c = k == 0 ? K.one() : random_one_unit(K, rng);
    try {
      VerificationResult one = containment_check(e, c);
      ++done;
      if (!one.flags.empty()) ++strict;
      for (const auto& f : one.failures) res.fail("c = " + c.str() + ": " + f);
      if (one.has_min) res.attain(one.min_attained);
    } catch (const Error& ex) {
      if (ex.kind() != ErrorKind::GammaNotInValueGroup) throw;
      ++skipped;
    }
  }
  res.witnesses.push_back({"pairs", "", Value(done)});
  res.witnesses.push_back({"strict", "", Value(strict)});
  res.witnesses.push_back({"skipped", "", Value(skipped)});
  if (done < pairs) res.fail("only " + std::to_string(done) + " pairs generated");
  return res;
}

VerificationResult trace_bound_check(const Extension& e, const ExtElem& beta) {
  VerificationResult res;
  res.theorem = "trace-bound";
  const Field& K = e.base();
  const long p = e.p();
  AlphaPrime ap = make_alpha_prime(e);
  merge(res, check_alpha_prime(e, ap), "");
  res.has_min = false;
  const Value g = vv(ap.gamma);
  const Value bound = g * (p - 1);

  // Step-1 chain with the ambient gamma: (sigma-1)(b_i) = b_{i+1} gamma.
  ExtElem b = beta;
  for (long i = 1; i < p; ++i) {
    ExtElem d = e.sigma(b) - b;
    if (d.is_zero()) break;
    b = d.scaled(ap.gamma.inverse());
    if (e.w(b) < Value(0)) {
      res.flags.push_back("chain step " + std::to_string(i) + " needs a better alpha");
      break;
    }
  }

  ExtElem apm = e.one();
  for (long m = 0; m < p; ++m) {
    ExtElem bj = e.one();
    for (long j = 0; j < p; ++j) {
      ExtElem x = apm * bj;
      for (long k = 1; k < p; ++k) x = e.sigma(x) - x;
      Value v = wv(e, x);
      if (v < bound)
        res.fail("m = " + std::to_string(m) + ", j = " + std::to_string(j) + ": value " + v.str() + " < " +
                 bound.str());
      res.attain(v);
      bj *= beta;
    }
    apm *= ap.alpha_prime;
  }

  ExtElem fp = e.one();
  for (long i = 1; i < p; ++i) fp *= ap.alpha_prime - e.sigma(ap.alpha_prime, i);
  FieldElem scale = e.h() * K.integer(p) * (ap.gamma / K.z()).pow(p - 1);
  ExtElem formula = ap.alpha.inverse().scaled(scale);
  if (!(fp == formula)) res.fail("F'(alpha') != (h p / alpha)(gamma/z)^(p-1)");
  ExtElem fmin = evaluate(derivative(e.min_poly(ap.alpha_prime)), ap.alpha_prime);
  if (!(fp == fmin)) res.fail("product of differences differs from F' evaluated at alpha'");
  Value vf = e.w(fp);
  res.witnesses.push_back({"v(F'(alpha'))", "", vf});
  res.witnesses.push_back({"(p-1) v(gamma)", "", bound});
  if (!(vf == bound)) res.fail("v(F'(alpha')) = " + vf.str() + " != " + bound.str());
  return res;
}

VerificationResult verify_trace_bound_suite(const Extension& e, const ExtensionReport& r, int samples,
                                            std::uint64_t seed) {
  VerificationResult res;
  res.theorem = "trace-bound";
  res.samples = samples;
  res.seed = seed;
  Rng rng(seed);
  AlphaPrime ap = make_alpha_prime(e);
  std::vector<ExtElem> betas{e.one(), ap.alpha_prime};
  for (int k = 0; k < samples; ++k) betas.push_back(sample_integral(e, r, rng, true));
  for (std::size_t k = 0; k < betas.size(); ++k)
    merge(res, trace_bound_check(e, betas[k]), "beta #" + std::to_string(k) + ": ");
  res.witnesses.push_back({"instances", "", Value(static_cast<long>(betas.size()))});
  return res;
}

DefectCertificate family_scan(const FamilySpec& spec, int max_iter) {
  if (spec.stages.empty()) throw Error(ErrorKind::MalformedFamily, "family has no stages");
  DefectCertificate cert;
  cert.description = spec.description;
  std::vector<Field> fields;
  for (std::size_t i = 0; i < spec.stages.size(); ++i) {
    const FamilyStage& st = spec.stages[i];
    const std::string where = "stage " + std::to_string(i) + ": ";
    if (st.n < 0) throw Error(ErrorKind::MalformedFamily, where + "negative tower level");
    if (!spec.tower_levels.empty() &&
        std::find(spec.tower_levels.begin(), spec.tower_levels.end(), st.n) == spec.tower_levels.end())
      throw Error(ErrorKind::MalformedFamily, where + "tower level " + std::to_string(st.n) + " not listed in base");
    StageResult sr;
    sr.index = static_cast<int>(i);
    sr.n = st.n;
    sr.h = st.h;
    try {
      Field K = Field::make({spec.p, spec.with_u, st.n});
      sr.report = classify(K, eval_expr(K, st.h), max_iter);
      fields.push_back(K);
    } catch (const Error& ex) {
      if (ex.kind() == ErrorKind::NotPrime) throw Error(ErrorKind::MalformedFamily, where + ex.what());
      throw Error(ex.kind(), where + ex.what());
    }
    cert.sws.push_back(sr.report.sw);
    cert.stages.push_back(std::move(sr));
  }
  cert.strictly_decreasing = cert.sws.size() >= 2;
  for (std::size_t i = 1; i < cert.sws.size(); ++i)
    if (!(cert.sws[i] < cert.sws[i - 1])) cert.strictly_decreasing = false;
  if (!cert.strictly_decreasing) {
    Value m = cert.sws[0];
    for (const auto& s : cert.sws) m = min(m, s);
    cert.inf_candidate = m;
  }

  // Carry each stage's best h one level on and compare alpha with the improved c alpha.
  for (std::size_t i = 0; i + 1 < cert.stages.size(); ++i) {
    CrossStage cs;
    cs.from = static_cast<int>(i);
    cs.to = static_cast<int>(i + 1);
    const Field& K2 = fields[i + 1];
    if (cert.stages[i + 1].n < cert.stages[i].n) {
      cs.status = "skipped";
      cs.detail = "tower levels do not embed";
      cert.cross.push_back(cs);
      continue;
    }
    try {
      FieldElem h = embed(cert.stages[i].report.h_best, K2);
      Extension e2 = Extension::make(K2, h);
      BestH bh = best_h(K2, h, max_iter);
      VerificationResult r = containment_check(e2, bh.multiplier);
      cs.status = r.pass ? "pass" : "fail";
      cs.detail = "c = " + bh.multiplier.str() + ", sw " + Value(K2.v_z() * K2.p() - valuation(h - K2.one())).str() +
                  " -> " + Value(K2.v_z() * K2.p() - valuation(bh.h_best - K2.one())).str();
      for (const auto& f : r.failures) cs.detail += "; " + f;
    } catch (const Error& ex) {
      cs.status = "skipped";
      cs.detail = std::string(to_string(ex.kind())) + ": " + ex.what();
    }
    cert.cross.push_back(cs);
  }
  return cert;
}

}  // namespace kummer
