#include "kummer/sampling.hpp"

#include "kummer/error.hpp"

namespace kummer {

long Rng::uniform(long lo, long hi) {
  std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<long>(g_() % span);
}

namespace {

long unit_integer(long p, Rng& rng, long bound) {
  for (;;) {
    long n = rng.uniform(1, bound);
    if (n % p != 0) return rng.coin() ? n : -n;
  }
}

}  // namespace

FieldElem random_unit(const Field& K, Rng& rng) {
  const long p = K.p();
  mpq_class q(unit_integer(p, rng, 9), std::labs(unit_integer(p, rng, 5)));
  q.canonicalize();
  RatFunc c(q);
  if (K.with_u() && rng.uniform(0, 2) != 0) {
    long d = rng.uniform(1, 2);
    std::vector<mpq_class> poly(static_cast<std::size_t>(d) + 1, mpq_class(0));
    poly[0] = rng.uniform(0, 1) ? mpq_class(rng.uniform(-3, 3)) : mpq_class(0);
    poly[static_cast<std::size_t>(d)] = unit_integer(p, rng, 4);
    if (rng.coin()) poly[0] = unit_integer(p, rng, 4);
    c *= RatFunc(QPoly(poly), QPoly(mpq_class(1)));
  }
  FieldElem x = K.from_ratfunc(c);
  if (p > 2 && rng.coin()) x += K.z().scaled(RatFunc(rng.uniform(-3, 3)));
  return x;
}

FieldElem random_element(const Field& K, Rng& rng) {
  const long D = K.value_group().denominator;
  for (;;) {
    FieldElem x = random_unit(K, rng) * K.monomial(Value(rng.uniform(-D, 3 * D), D));
    if (rng.coin()) x += random_unit(K, rng) * K.monomial(Value(rng.uniform(0, 3 * D), D));
    if (!x.is_zero()) return x;
  }
}

ExtElem sample_integral(const Extension& e, const ExtensionReport& r, Rng& rng, bool unit) {
  const Field& K = e.base();
  const ValueGroup& G = K.value_group();
  const long p = e.p();
  ExtElem mu = case_generator(e, r);
  Value wmu = e.w(mu);
  std::vector<ExtElem> powers{e.one()};
  for (long i = 1; i < p; ++i) powers.push_back(powers.back() * mu);
  for (int attempt = 0; attempt < 64; ++attempt) {
    ExtElem x = e.zero();
    for (long i = 0; i < p; ++i) {
      if (i > 0 && rng.uniform(0, 3) == 0) continue;
      long delta = (i == 0 && unit) ? 0 : rng.uniform(0, 2);
      Value lo = G.ceil(-(wmu * i));
      FieldElem m = K.monomial(lo + Value(delta, G.denominator));
      x += powers[static_cast<std::size_t>(i)].scaled(random_unit(K, rng) * m);
    }
    if (x.in_base()) continue;
    if (unit && !(e.w(x) == Value(0))) continue;
    return x;
  }
  throw Error(ErrorKind::SamplerExhausted, "could not draw an integral unit outside K");
}

}  // namespace kummer
