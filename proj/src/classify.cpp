#include "kummer/classify.hpp"

#include "kummer/error.hpp"

namespace kummer {

std::string_view to_string(CaseTag tag) {
  switch (tag) {
    case CaseTag::UNRAMIFIED_I: return "UNRAMIFIED_I";
    case CaseTag::WILD_II: return "WILD_II";
    case CaseTag::WILD_III: return "WILD_III";
    case CaseTag::FEROCIOUS_IV: return "FEROCIOUS_IV";
    case CaseTag::FEROCIOUS_V: return "FEROCIOUS_V";
  }
  return "?";
}

bool is_wild(CaseTag tag) { return tag == CaseTag::WILD_II || tag == CaseTag::WILD_III; }

long ExtensionReport::value_denominator_L() const {
  long D = ValueGroup::for_backend(field.p, field.tower_level).denominator;
  return e == field.p ? D * field.p : D;
}

namespace {

mpz_class floor_div(const mpz_class& a, long b) {
  mpz_class q;
  mpz_fdiv_q_ui(q.get_mpz_t(), a.get_mpz_t(), static_cast<unsigned long>(b));
  return q;
}

Value group_value(const mpz_class& num, long D) { return Value(mpq_class(num, mpz_class(D))); }

}  // namespace

BestH best_h(const Field& K, const FieldElem& h_in, int max_iter) {
  if (h_in.is_zero()) throw Error(ErrorKind::ZeroH, "h must be nonzero");
  const long p = K.p();
  const long D = K.value_group().denominator;
  const Value pvz = K.v_z() * p;

  BestH out;
  FieldElem h = h_in;
  FieldElem a = K.one();
  auto step = [&](const FieldElem& factor) {
    // h <- h * factor^p
    h *= factor.pow(p);
    a *= factor;
    if (++out.iterations > max_iter)
      throw Error(ErrorKind::IterationCap, "best-h loop exceeded " + std::to_string(max_iter) + " iterations");
  };
  auto finish = [&](CaseTag tag) {
    out.h_best = h;
    out.multiplier = a;
    out.tag = tag;
    return out;
  };

  // (1) move v(h) into [0, p/D)
  mpz_class T = K.value_group().numerator_of(valuation(h));
  mpz_class q = floor_div(T, p);
  if (q != 0) step(K.monomial(group_value(q, D)).inverse());
  if (T - q * p != 0) return finish(CaseTag::WILD_II);

  // (2) unit: make the residue 1
  ResElem c = residue(h);
  auto root = pth_root(c);
  if (!root) return finish(CaseTag::FEROCIOUS_IV);
  if (!(root->num() == FpPoly::constant(p, 1) && root->den() == FpPoly::constant(p, 1)))
    step(lift(K, *root).inverse());

  // (3) raise t = v(h - 1)
  for (;;) {
    FieldElem hm1 = h - K.one();
    Value t = valuation(hm1);
    out.t_trace.push_back(t);
    if (t > pvz) throw Error(ErrorKind::NotInA, "trivial extension: h is a p-th power in the henselization");
    if (t == pvz) {
      FieldElem cp = hm1 / K.z().pow(p);
      auto r = artin_schreier_root(residue(cp));
      if (!r) return finish(CaseTag::UNRAMIFIED_I);
      step(K.one() - lift(K, *r) * K.z());
      continue;
    }
    if (!in_p_multiple(t, K.value_group(), p)) return finish(CaseTag::WILD_III);
    FieldElem y = K.monomial(t / p);
    FieldElem cp = hm1 / y.pow(p);
    auto d = pth_root(residue(cp));
    if (!d) return finish(CaseTag::FEROCIOUS_V);
    step(K.one() - lift(K, *d) * y);
  }
}

ExtensionReport classify(const Field& K, const FieldElem& h, int max_iter) {
  BestH b = best_h(K, h, max_iter);
  const long p = K.p();
  const long D = K.value_group().denominator;
  const Value vz = K.v_z();
  ExtensionReport r;
  r.field = K.desc();
  r.h_input = h;
  r.h_best = b.h_best;
  r.tag = b.tag;
  r.iterations = b.iterations;
  r.t = valuation(b.h_best - K.one());
  const Value step_L = Value(1, p * D);
  switch (b.tag) {
    case CaseTag::UNRAMIFIED_I:
      r.e = 1, r.f = static_cast<int>(p);
      r.sw = 0, r.j = 0, r.i = 0;
      break;
    case CaseTag::WILD_II:
      r.e = static_cast<int>(p), r.f = 1;
      r.sw = vz * p, r.j = vz, r.i = vz + step_L;
      break;
    case CaseTag::WILD_III:
      r.e = static_cast<int>(p), r.f = 1;
      r.sw = vz * p - r.t, r.j = vz - r.t / p, r.i = r.j + step_L;
      break;
    case CaseTag::FEROCIOUS_IV:
      r.e = 1, r.f = static_cast<int>(p);
      r.sw = vz * p, r.j = vz, r.i = vz;
      break;
    case CaseTag::FEROCIOUS_V:
      r.e = 1, r.f = static_cast<int>(p);
      r.sw = vz * p - r.t, r.j = vz - r.t / p, r.i = r.j;
      break;
  }
  r.defect = 1;
  r.H_gen_val = r.sw;
  return r;
}

ClassifiedExtension make_extension(const Field& K, const FieldElem& h, int max_iter, bool use_best) {
  ExtensionReport r = classify(K, h, max_iter);
  Extension e = Extension::make(K, use_best ? r.h_best : h);
  return {e, r};
}

ExtElem case_generator(const Extension& e, const ExtensionReport& r) {
  const Field& K = e.base();
  ExtElem am1 = e.alpha() - e.one();
  switch (r.tag) {
    case CaseTag::UNRAMIFIED_I: return am1.scaled(K.z().inverse());
    case CaseTag::WILD_II:
    case CaseTag::FEROCIOUS_IV: return e.alpha();
    case CaseTag::WILD_III: return am1;
    case CaseTag::FEROCIOUS_V: return am1.scaled(K.monomial(r.t / r.p()).inverse());
  }
  return e.alpha();
}

ExtElem j_witness(const Extension& e, const ExtensionReport& r) {
  if (r.tag == CaseTag::UNRAMIFIED_I) return e.alpha() - e.one();
  return case_generator(e, r);
}

}  // namespace kummer
