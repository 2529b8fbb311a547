#include "kummer/ext.hpp"

#include <sstream>

#include "kummer/error.hpp"

namespace kummer {

struct ExtData {
  Field base;
  FieldElem h;
  long p;
  std::vector<FieldElem> zeta_pow;  // zeta^k, 0 <= k < p
};

Extension Extension::make(const Field& field, const FieldElem& h) {
  if (h.is_zero()) throw Error(ErrorKind::ZeroH, "h must be nonzero");
  auto d = std::make_shared<ExtData>(ExtData{field, h, field.p(), {}});
  FieldElem zk = field.one();
  for (long k = 0; k < d->p; ++k) {
    d->zeta_pow.push_back(zk);
    zk *= field.zeta();
  }
  return Extension(std::move(d));
}

const Field& Extension::base() const { return d_->base; }
const FieldElem& Extension::h() const { return d_->h; }
long Extension::p() const { return d_->p; }

ExtElem Extension::zero() const {
  return ExtElem(d_, std::vector<FieldElem>(static_cast<std::size_t>(p()), base().zero()));
}
ExtElem Extension::from_base(const FieldElem& c) const {
  ExtElem r = zero();
  r.c_[0] = c;
  return r;
}
ExtElem Extension::one() const { return from_base(base().one()); }
ExtElem Extension::alpha() const {
  ExtElem r = zero();
  r.c_[1] = base().one();
  return r;
}
ExtElem Extension::from_coeffs(std::vector<FieldElem> c) const {
  if (c.size() != static_cast<std::size_t>(p())) throw Error(ErrorKind::InvalidArgument, "need exactly p coefficients");
  return ExtElem(d_, std::move(c));
}

ExtElem Extension::sigma(const ExtElem& x, long power) const {
  const long p = this->p();
  std::vector<FieldElem> c = x.c_;
  long k = ((power % p) + p) % p;
  if (k == 0) return x;
  for (long i = 1; i < p; ++i)
    if (!c[i].is_zero()) c[i] *= d_->zeta_pow[(i * k) % p];
  return ExtElem(d_, std::move(c));
}

FieldElem Extension::trace(const ExtElem& x) const { return x.c_[0] * base().integer(p()); }

FieldElem Extension::norm(const ExtElem& x) const {
  if (x.in_base()) return x.c_[0].pow(p());
  ExtElem prod = x;
  for (long k = 1; k < p(); ++k) prod *= sigma(x, k);
  if (!prod.in_base()) throw Error(ErrorKind::PreconditionViolated, "product of conjugates outside K");
  return prod.c_[0];
}

FieldElem Extension::norm_resultant(const ExtElem& x) const {
  KPoly f(static_cast<std::size_t>(p()) + 1, base().zero());
  f[0] = -h();
  f.back() = base().one();
  return resultant(std::move(f), x.c_, base());
}

Value Extension::w(const ExtElem& x) const {
  if (x.is_zero()) return Value::infinity();
  return valuation(norm(x)) / p();
}

KPoly Extension::min_poly(const ExtElem& b) const {
  if (b.in_base()) return KPoly{-b.c_[0], base().one()};
  // Coefficients in L of prod (T - sigma^i b), lowest first.
  std::vector<ExtElem> g{one()};
  for (long i = 0; i < p(); ++i) {
    ExtElem r = sigma(b, i);
    std::vector<ExtElem> next(g.size() + 1, zero());
    for (std::size_t k = 0; k < g.size(); ++k) {
      next[k + 1] += g[k];
      next[k] -= g[k] * r;
    }
    g = std::move(next);
  }
  KPoly out;
  for (const auto& c : g) {
    if (!c.in_base()) throw Error(ErrorKind::PreconditionViolated, "minimal polynomial coefficient outside K");
    out.push_back(c.c_[0]);
  }
  return out;
}

// ---------------------------------------------------------------- ExtElem

void ExtElem::check_same(const ExtElem& o) const {
  if (!d_ || !o.d_) throw Error(ErrorKind::FieldMismatch, "uninitialized extension element");
  if (d_ != o.d_ && !(d_->base == o.d_->base && d_->h == o.d_->h))
    throw Error(ErrorKind::FieldMismatch, "elements of different extensions");
}

bool ExtElem::is_zero() const {
  for (const auto& c : c_)
    if (!c.is_zero()) return false;
  return true;
}

bool ExtElem::in_base() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (!c_[i].is_zero()) return false;
  return true;
}

ExtElem ExtElem::operator+(const ExtElem& o) const {
  check_same(o);
  std::vector<FieldElem> c = c_;
  for (std::size_t i = 0; i < c.size(); ++i)
    if (!o.c_[i].is_zero()) c[i] += o.c_[i];
  return ExtElem(d_, std::move(c));
}

ExtElem ExtElem::operator-() const {
  std::vector<FieldElem> c = c_;
  for (auto& x : c) x = -x;
  return ExtElem(d_, std::move(c));
}

ExtElem ExtElem::operator-(const ExtElem& o) const { return *this + (-o); }

ExtElem ExtElem::scaled(const FieldElem& s) const {
  std::vector<FieldElem> c = c_;
  for (auto& x : c)
    if (!x.is_zero()) x *= s;
  return ExtElem(d_, std::move(c));
}

ExtElem ExtElem::operator*(const ExtElem& o) const {
  check_same(o);
  if (in_base()) return o.scaled(c_[0]);
  if (o.in_base()) return scaled(o.c_[0]);
  const std::size_t p = c_.size();
  const Field& K = d_->base;
  std::vector<FieldElem> raw(2 * p - 1, K.zero());
  for (std::size_t i = 0; i < p; ++i) {
    if (c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < p; ++j)
      if (!o.c_[j].is_zero()) raw[i + j] += c_[i] * o.c_[j];
  }
  std::vector<FieldElem> c(raw.begin(), raw.begin() + static_cast<long>(p));
  for (std::size_t k = p; k < raw.size(); ++k)
    if (!raw[k].is_zero()) c[k - p] += raw[k] * d_->h;
  return ExtElem(d_, std::move(c));
}

ExtElem ExtElem::inverse() const {
  if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  Extension e(d_);
  if (in_base()) return e.from_base(c_[0].inverse());
  ExtElem conj = e.one();
  for (long k = 1; k < e.p(); ++k) conj *= e.sigma(*this, k);
  // conj * x = N(x) lies in K.
  return conj.scaled(e.norm(*this).inverse());
}

ExtElem ExtElem::operator/(const ExtElem& o) const { return *this * o.inverse(); }

ExtElem ExtElem::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  ExtElem result = Extension(d_).one(), base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

bool ExtElem::operator==(const ExtElem& o) const {
  check_same(o);
  return c_ == o.c_;
}

std::string ExtElem::str() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < c_.size(); ++i) os << (i ? "; " : "") << c_[i].str();
  os << "]";
  return os.str();
}

// ---------------------------------------------------------------- polynomials

void trim(KPoly& f) {
  while (!f.empty() && f.back().is_zero()) f.pop_back();
}

long degree(const KPoly& f) {
  for (std::size_t k = f.size(); k-- > 0;)
    if (!f[k].is_zero()) return static_cast<long>(k);
  return -1;
}

KPoly derivative(const KPoly& f) {
  KPoly d;
  for (std::size_t k = 1; k < f.size(); ++k) d.push_back(f[k].scaled(RatFunc(static_cast<long>(k))));
  trim(d);
  return d;
}

ExtElem evaluate(const KPoly& f, const ExtElem& x) {
  Extension e = x.extension();
  ExtElem r = e.zero();
  for (std::size_t k = f.size(); k-- > 0;) r = r * x + e.from_base(f[k]);
  return r;
}

namespace {

KPoly remainder(KPoly f, const KPoly& g) {
  long dg = degree(g);
  FieldElem inv = g[static_cast<std::size_t>(dg)].inverse();
  trim(f);
  while (degree(f) >= dg) {
    long df = degree(f);
    FieldElem q = f[static_cast<std::size_t>(df)] * inv;
    for (long k = 0; k <= dg; ++k) {
      const FieldElem& gk = g[static_cast<std::size_t>(k)];
      if (!gk.is_zero()) f[static_cast<std::size_t>(df - dg + k)] -= q * gk;
    }
    f[static_cast<std::size_t>(df)] = q.field().zero();
    trim(f);
  }
  return f;
}

}  // namespace

FieldElem resultant(KPoly f, KPoly g, const Field& field) {
  trim(f);
  trim(g);
  if (f.empty() || g.empty()) return field.zero();
  FieldElem acc = field.one();
  for (;;) {
    long df = degree(f), dg = degree(g);
    if (dg == 0) return acc * g[0].pow(df);
    if (df == 0) return acc * f[0].pow(dg);
    KPoly r = remainder(f, g);
    if (r.empty()) return field.zero();
    long dr = degree(r);
    // Res(f, g) = (-1)^{df dg} lc(g)^{df - dr} Res(g, r)
    if ((df * dg) % 2 != 0) acc = -acc;
    acc *= g[static_cast<std::size_t>(dg)].pow(df - dr);
    f = std::move(g);
    g = std::move(r);
  }
}

}  // namespace kummer
