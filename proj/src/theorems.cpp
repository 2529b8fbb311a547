#include "kummer/theorems.hpp"

#include <numeric>

#include "kummer/error.hpp"
#include "kummer/sampling.hpp"

namespace kummer {

namespace {

Value v_zp(const Field& K) { return K.v_z() * K.p(); }

Value cutoff_of(const ExtensionReport& r) { return r.sw.scaled(mpq_class(r.p() - 1, r.p())); }

// v(N(sigma b / b - 1)) for b != 0 outside K.
Value log_norm_value(const Extension& e, const ExtElem& b) {
  return valuation(e.norm(e.sigma(b) - b)) - valuation(e.norm(b));
}

}  // namespace

VerificationResult verify_h_eq_n(const Extension& e, const ExtensionReport& r, int samples, std::uint64_t seed) {
  VerificationResult res;
  res.theorem = "h-eq-n";
  res.samples = samples;
  res.seed = seed;
  const Field& K = e.base();
  const long p = e.p();
  const FieldElem& h = e.h();
  const FieldElem zp = K.z().pow(p);

  ExtElem a = e.alpha();
  FieldElem n1 = e.norm(e.sigma(a) / a - e.one());
  if (!(n1 == zp)) res.fail("N(sigma(alpha)/alpha - 1) = " + n1.str() + " differs from z^p");
  Value v1 = valuation(n1);
  res.witnesses.push_back({"sigma(alpha)/alpha - 1", n1.str(), v1});
  res.attain(v1);

  if (valuation(h) == Value(0)) {
    ExtElem am1 = a - e.one();
    FieldElem n2 = e.norm(e.sigma(am1) / am1 - e.one());
    FieldElem expect = zp * h / (h - K.one());
    if (!(n2 == expect)) res.fail("N(sigma(alpha-1)/(alpha-1) - 1) = " + n2.str() + " differs from z^p h/(h-1)");
    Value v2 = valuation(n2);
    res.witnesses.push_back({"sigma(alpha-1)/(alpha-1) - 1", n2.str(), v2});
    res.attain(v2);
  }

  Rng rng(seed);
  for (int k = 0; k < samples; ++k) {
    ExtElem b = sample_integral(e, r, rng, true);
    Value v = log_norm_value(e, b);
    if (v < r.sw) res.fail("sample " + std::to_string(k) + " b = " + b.str() + " gives " + v.str() + " < sw");
    res.attain(v);
  }
  if (!(res.min_attained == r.sw))
    res.fail("minimum " + res.min_attained.str() + " differs from sw = " + r.sw.str());
  return res;
}

// ---------------------------------------------------------------- generators from units

GeneratorResult kummer_generator_from_unit(const Extension& e, const ExtElem& b) {
  const Field& K = e.base();
  const long p = e.p();
  if (b.in_base()) throw Error(ErrorKind::PreconditionViolated, "b lies in K");
  if (!(e.w(b) == Value(0))) throw Error(ErrorKind::PreconditionViolated, "b is not a unit of B");
  ExtElem sb = e.sigma(b);
  Value s = e.w(sb - b);
  GeneratorResult out;
  out.rhs = s * p;
  if (s >= K.v_z()) {
    if (p == 2) throw Error(ErrorKind::PreconditionViolated, "w(sigma(b) - b) >= v(2)");
    out.fallback = true;
    out.x = e.alpha();
    out.h_x = e.h();
    out.sigma_ok = e.sigma(out.x) == out.x.scaled(K.zeta());
    out.in_base_ok = true;
    out.lhs = v_zp(K);
    out.bound_ok = out.lhs <= out.rhs;
    return out;
  }
  if (p == 2) {
    out.x = (sb - b).scaled(e.trace(b).inverse());
  } else {
    KPoly g = e.min_poly(b);
    ExtElem gamma = b.pow(p - 1) / evaluate(derivative(g), b);
    ExtElem y = gamma;
    FieldElem zi = K.zeta();
    for (long i = 2; i < p; ++i) {
      zi *= K.zeta();
      y = e.sigma(y) - y.scaled(zi);
    }
    if (!(e.sigma(y) - y.scaled(K.zeta()) == e.one()))
      throw Error(ErrorKind::PreconditionViolated, "(sigma - zeta)(y) != 1");
    out.x = e.one() + y.scaled(K.z());
  }
  out.sigma_ok = e.sigma(out.x) == out.x.scaled(K.zeta());
  ExtElem xp = out.x.pow(p);
  FieldElem nx = e.norm(out.x);
  // x^p = (-1)^(p-1) N(x)
  out.in_base_ok = xp.in_base() && xp.coeff(0) == (p == 2 ? -nx : nx);
  out.h_x = xp.coeff(0);
  FieldElem hm1 = out.h_x - K.one();
  out.lhs = hm1.is_zero() ? Value::infinity() : v_zp(K) - valuation(hm1);
  out.bound_ok = out.lhs <= out.rhs;
  return out;
}

VerificationResult verify_generator_from_unit(const Extension& e, const ExtensionReport& r, int samples,
                                              std::uint64_t seed) {
  VerificationResult res;
  res.theorem = "gen-from-unit";
  res.samples = samples;
  res.seed = seed;
  Rng rng(seed);
  int admissible = 0, fallback = 0;
  const Value vzp = v_zp(e.base());
  for (int k = 0; k < samples; ++k) {
    ExtElem b = sample_integral(e, r, rng, true);
    try {
      GeneratorResult g = kummer_generator_from_unit(e, b);
      if (g.fallback) {
        ++fallback;
      } else {
        ++admissible;
      }
      if (!g.sigma_ok) res.fail("sample " + std::to_string(k) + ": sigma(x) != zeta x for b = " + b.str());
      if (!g.in_base_ok) res.fail("sample " + std::to_string(k) + ": x^p != N(x) for b = " + b.str());
      if (!g.bound_ok)
        res.fail("sample " + std::to_string(k) + ": v(z^p/(h_x-1)) = " + g.lhs.str() + " > " + g.rhs.str());
      if (!g.fallback) res.attain(g.rhs);
    } catch (const Error& ex) {
      if (ex.kind() != ErrorKind::PreconditionViolated) throw;
      // generic witness: N(sigma(b)/b - 1) lies in (z^p)
      ++fallback;
      if (log_norm_value(e, b) < vzp) res.fail("sample " + std::to_string(k) + ": fallback bound fails");
    }
  }
  res.witnesses.push_back({"admissible", "", Value(admissible)});
  res.witnesses.push_back({"fallback", "", Value(fallback)});
  return res;
}

// ---------------------------------------------------------------- refined Swan conductor

RswResult rsw(const Extension& e, const ExtensionReport& r) {
  const Field& K = e.base();
  const FieldElem& h = e.h();
  RswResult out;
  out.H.ring = IdealDesc::A;
  out.H.kind = IdealDesc::Principal;
  out.H.gen_val = r.sw;
  FieldElem gen = K.z().pow(e.p()) / (h - K.one());
  out.H.witnesses.push_back({"z^p/(h-1)", gen.str(), valuation(gen)});
  out.form = dlog_circ(h).scaled((h - K.one()).inverse());
  out.I.ring = IdealDesc::A;
  out.I.kind = IdealDesc::Threshold;
  out.I.gen_val = cutoff_of(r);
  out.H_h_threshold = H_x_threshold(h);
  return out;
}

VerificationResult verify_rsw_well_defined(const Extension& e, const ExtensionReport& r, const FieldElem& a) {
  const Field& K = e.base();
  const long p = e.p();
  const FieldElem& h = e.h();
  if (a.is_zero() || a.is_one()) throw Error(ErrorKind::PreconditionViolated, "a must differ from 0 and 1");
  if (valuation(a) < Value(0)) throw Error(ErrorKind::PreconditionViolated, "a is not in A");
  Value t = valuation(h - K.one());
  Value t2 = valuation(a.pow(p) * h - K.one());
  if (!(t == t2))
    throw Error(ErrorKind::NotBestPair, "v(a^p h - 1) = " + t2.str() + " but v(h - 1) = " + t.str());
  VerificationResult res;
  res.theorem = "rsw-wd";
  res.samples = 1;
  Value lhs = valuation(a - K.one());
  Value rhs = t / p;
  res.witnesses.push_back({"v(a-1)", a.str(), lhs});
  res.attain(lhs);
  if (lhs < rhs) res.fail("v(a-1) = " + lhs.str() + " < v(h-1)/p = " + rhs.str());
  DiffElem d = dlog_circ(a).scaled(K.prime_elem() / (h - K.one()));
  Value dv = d.min_coeff_valuation();
  res.witnesses.push_back({"p dlog°(a) at z^p/(h-1)", d.str(), dv});
  if (dv < cutoff_of(r)) res.fail("difference form has coefficient value " + dv.str() + " below " + cutoff_of(r).str());
  return res;
}

VerificationResult verify_rsw_suite(const Extension& e, const ExtensionReport& r, int pairs, std::uint64_t seed) {
  VerificationResult res;
  res.theorem = "rsw-wd";
  res.seed = seed;
  const Field& K = e.base();
  const long D = K.value_group().denominator;
  Rng rng(seed);
  int found = 0, skipped = 0;
  for (int attempt = 0; attempt < pairs * 40 && found < pairs; ++attempt) {
    FieldElem a;
    switch (rng.uniform(0, 3)) {
      case 0: a = K.zeta().pow(rng.uniform(0, K.p() - 1)) * (K.one() + random_unit(K, rng) * K.monomial(Value(rng.uniform(0, 3 * D), D))); break;
      case 1: a = random_unit(K, rng); break;
      case 2: a = random_unit(K, rng) * K.monomial(Value(rng.uniform(1, 2 * D), D)); break;
      default: a = K.zeta().pow(rng.uniform(1, K.p() - 1)); break;
    }
    if (a.is_zero() || a.is_one()) continue;
    try {
      VerificationResult one = verify_rsw_well_defined(e, r, a);
      ++found;
      res.attain(one.min_attained);
      for (const auto& f : one.failures) res.fail(f);
    } catch (const Error& ex) {
      if (ex.kind() != ErrorKind::NotBestPair) throw;
      ++skipped;
    }
  }
  res.samples = found;
  res.witnesses.push_back({"best_pairs", "", Value(found)});
  res.witnesses.push_back({"skipped", "", Value(skipped)});
  if (found < pairs) res.fail("only " + std::to_string(found) + " best pairs generated");
  return res;
}

// ---------------------------------------------------------------- inclusions

VerificationResult verify_inclusions(const Extension& e, const ExtensionReport& r) {
  VerificationResult res;
  res.theorem = "inclusions";
  const Field& K = e.base();
  const ValueGroup& G = K.value_group();
  const long p = e.p();
  const FieldElem& h = e.h();
  const Value cutoff = cutoff_of(r);
  const Value cut_G = G.ceil(cutoff);
  ExtElem a = e.alpha(), am1 = a - e.one();

  if (r.sw < cutoff) res.fail("H not inside I: sw < cutoff");

  // witness W = (sigma - 1)(x); x must be integral
  std::string label;
  ExtElem x;
  if (r.tag == CaseTag::UNRAMIFIED_I) {
    label = "(sigma-1)((alpha-1)/z)";
    x = am1.scaled(K.z().inverse());
  } else if (p > 2 && r.tag == CaseTag::WILD_II) {
    label = "(sigma-1)(alpha) = z*alpha";
    x = a;
  } else if (p > 2) {
    label = "(sigma-1)(z/(alpha-1))";
    x = am1.inverse().scaled(K.z());
  } else if (r.t == Value(0)) {
    label = "(sigma-1)(-alpha/h) = 2*alpha/h";
    x = a.scaled(-h.inverse());
  } else if (r.e == 1) {
    label = "(sigma-1)((alpha-1)/y) = -2*alpha/y";
    x = case_generator(e, r);
  } else {
    Value s = r.t / 2;
    Value g = G.floor(s);
    if (G.ceil(s) < Value(1)) {
      label = "(sigma-1)((alpha-1)/m), v(m) = " + g.str();
      x = am1.scaled(K.monomial(g).inverse());
    } else {
      label = "(sigma-1)(2/(alpha-1))";
      x = am1.inverse().scaled(K.integer(2));
    }
  }
  ExtElem W = e.sigma(x) - x;
  Value wW = e.w(W);
  Value wx = e.w(x);
  res.witnesses.push_back({label, W.str(), wW});
  res.attain(wW);
  if (wx < Value(0)) res.fail("witness " + label + " is not in I_sigma: its preimage has value " + wx.str() + " < 0");
  if (wW > cut_G) res.fail("witness value " + wW.str() + " exceeds cutoff " + cut_G.str());

  // I_sigma ∩ A is the threshold ceil(i); compare directly.
  Value thr = G.ceil(r.i);
  res.witnesses.push_back({"I_sigma ∩ A threshold", "", thr});
  if (thr > cut_G) res.fail("I not inside I_sigma ∩ A: threshold " + thr.str() + " > " + cut_G.str());
  return res;
}

// ---------------------------------------------------------------- diagram

VerificationResult verify_diagram(const Extension& e, const ExtensionReport& r, int samples, std::uint64_t seed) {
  VerificationResult res;
  res.theorem = "diagram";
  res.samples = samples;
  res.seed = seed;
  const Field& K = e.base();
  const FieldElem& h = e.h();
  const bool unit_mu = !(r.tag == CaseTag::WILD_II || r.tag == CaseTag::FEROCIOUS_IV);
  ExtElem mu = unit_mu ? e.alpha() - e.one() : e.alpha();
  const FieldElem Nmu = e.norm(mu);
  const ExtElem phi = e.sigma(mu) / mu - e.one();
  const FieldElem zp_inv = K.z().pow(e.p()).inverse();
  const DiffElem dh = dlog_circ(h);
  const Value thr = K.value_group().ceil(r.i);
  Rng rng(seed);
  for (int k = 0; k < samples; ++k) {
    ExtElem b = k == 0 ? e.one() : sample_integral(e, r, rng, false);
    FieldElem Nb = e.norm(b);
    DiffElem path1 = DiffElem::dlog(Nb, Nmu);
    FieldElem img = e.norm(b * phi);
    DiffElem path2 = dh.scaled(img * zp_inv);
    DiffComparison c = compare(path1, path2, thr);
    if (k == 0) {
      res.witnesses.push_back({"b = 1, path 1", path1.normalized().str(), valuation(Nb)});
      res.witnesses.push_back({"b = 1, path 2", path2.normalized().str(), valuation(img)});
    }
    if (!c.equal) {
      res.fail("sample " + std::to_string(k) + ": paths differ, residual value " + c.residual_valuation.str());
    } else if (!c.exact) {
      res.flags.push_back("sample " + std::to_string(k) + ": equal only modulo threshold " + thr.str());
    }
  }
  return res;
}

ExtensionReport descend_invariants(const ExtensionReport& r, long m) {
  if (r.p() == 2) throw Error(ErrorKind::PreconditionViolated, "descent requires p > 2");
  if (m < 1) throw Error(ErrorKind::InvalidArgument, "m must be positive");
  if (std::gcd(m, r.p()) != 1) throw Error(ErrorKind::InvalidArgument, "m = " + std::to_string(m) + " is divisible by p");
  ExtensionReport out = r;
  out.descended = true;
  out.m = m;
  return out;
}

}  // namespace kummer
