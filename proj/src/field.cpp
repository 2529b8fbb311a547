#include "kummer/field.hpp"

#include <sstream>

#include "kummer/error.hpp"

namespace kummer {

struct FieldData {
  FieldDesc desc;
  ValueGroup group;
  std::size_t zdeg = 1;   // p - 1
  std::size_t sdeg = 1;   // p^n
  // z^{p-1} = sum_m zrel[m] z^m, from Phi_p(1 + z) = 0.
  std::vector<mpq_class> zrel;
};

std::string FieldDesc::str() const {
  std::ostringstream os;
  os << "Q(zeta_" << p << ")";
  if (with_u) os << "(u)";
  if (tower_level > 0) {
    long q = 1;
    for (int k = 0; k < tower_level; ++k) q *= p;
    os << "[s]/(s^" << q << " - " << p << ")";
  }
  return os.str();
}

namespace {

mpz_class binomial(long n, long k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

// Reduces a raw grid of numerators (z-degree < 2(p-1), s-degree < 2 p^n)
// modulo z^{p-1} = ..., s^{p^n} = p.
std::vector<QPoly> reduce_grid(const FieldData& d, std::vector<std::vector<QPoly>>& g) {
  const std::size_t zd = d.zdeg, sd = d.sdeg;
  const mpq_class p(d.desc.p);
  for (auto& row : g) {
    for (std::size_t j = row.size(); j-- > sd;) {
      if (row[j].is_zero()) continue;
      row[j - sd] = row[j - sd] + row[j] * p;
      row[j] = QPoly();
    }
  }
  for (std::size_t i = g.size(); i-- > zd;) {
    for (std::size_t j = 0; j < sd; ++j) {
      if (g[i][j].is_zero()) continue;
      QPoly c = std::move(g[i][j]);
      g[i][j] = QPoly();
      for (std::size_t m = 0; m < zd; ++m) {
        if (d.zrel[m] == 0) continue;
        g[i - zd + m][j] = g[i - zd + m][j] + c * d.zrel[m];
      }
    }
  }
  std::vector<QPoly> out(zd * sd);
  for (std::size_t i = 0; i < zd && i < g.size(); ++i)
    for (std::size_t j = 0; j < sd; ++j) out[i + zd * j] = std::move(g[i][j]);
  return out;
}

std::vector<QPoly> unit_numerators(std::size_t n, std::size_t k, const QPoly& c) {
  std::vector<QPoly> v(n);
  v[k] = c;
  return v;
}

}  // namespace

Field Field::make(const FieldDesc& desc) {
  if (!is_prime(desc.p)) throw Error(ErrorKind::NotPrime, std::to_string(desc.p) + " is not prime");
  if (desc.tower_level < 0) throw Error(ErrorKind::InvalidArgument, "negative tower level");
  auto d = std::make_shared<FieldData>();
  d->desc = desc;
  d->group = ValueGroup::for_backend(desc.p, desc.tower_level);
  d->zdeg = static_cast<std::size_t>(desc.p - 1);
  d->sdeg = 1;
  for (int i = 0; i < desc.tower_level; ++i) d->sdeg *= static_cast<std::size_t>(desc.p);
  // Phi_p(1+z) = sum_{m=0}^{p-1} binom(p, m+1) z^m, monic of degree p-1.
  d->zrel.resize(d->zdeg);
  for (std::size_t m = 0; m < d->zdeg; ++m) d->zrel[m] = -mpq_class(binomial(desc.p, static_cast<long>(m) + 1));
  return Field(std::move(d));
}

const FieldDesc& Field::desc() const { return d_->desc; }
const ValueGroup& Field::value_group() const { return d_->group; }
std::size_t Field::dimension() const { return d_->zdeg * d_->sdeg; }
bool Field::operator==(const Field& o) const { return d_ == o.d_ || d_->desc == o.d_->desc; }

FieldElem Field::from_coords(std::vector<RatFunc> coords) const {
  if (coords.size() != dimension()) throw Error(ErrorKind::InvalidArgument, "coordinate vector has wrong size");
  QPoly l(mpq_class(1));
  for (const auto& c : coords) {
    if (c.is_zero() || c.den().is_one()) continue;
    l = l.exact_div(gcd(l, c.den())) * c.den();
  }
  std::vector<QPoly> n;
  n.reserve(coords.size());
  for (const auto& c : coords) n.push_back(c.is_zero() ? QPoly() : c.num() * l.exact_div(c.den()));
  return FieldElem(d_, std::move(n), std::move(l));
}

FieldElem Field::zero() const { return FieldElem(d_, std::vector<QPoly>(dimension()), QPoly(mpq_class(1))); }
FieldElem Field::from_ratfunc(const RatFunc& f) const {
  return FieldElem(d_, unit_numerators(dimension(), 0, f.num()), f.den());
}
FieldElem Field::one() const { return from_ratfunc(RatFunc(1)); }
FieldElem Field::integer(long n) const { return from_ratfunc(RatFunc(n)); }
FieldElem Field::rational(const mpq_class& q) const { return from_ratfunc(RatFunc(q)); }
FieldElem Field::prime_elem() const { return integer(p()); }

FieldElem Field::z() const {
  std::vector<std::vector<QPoly>> g(std::max<std::size_t>(2, d_->zdeg + 1), std::vector<QPoly>(d_->sdeg));
  g[1][0] = QPoly(mpq_class(1));
  return FieldElem(d_, reduce_grid(*d_, g), QPoly(mpq_class(1)));
}

FieldElem Field::zeta() const { return one() + z(); }

FieldElem Field::u() const {
  if (!with_u()) throw Error(ErrorKind::NotAdjoined, "u is not adjoined to this field");
  return from_ratfunc(RatFunc::u());
}

FieldElem Field::s() const {
  if (tower_level() == 0) throw Error(ErrorKind::NotAdjoined, "s is not adjoined at tower level 0");
  return FieldElem(d_, unit_numerators(dimension(), d_->zdeg, QPoly(mpq_class(1))), QPoly(mpq_class(1)));
}

Value Field::v_z() const { return Value(1, p() - 1); }

FieldElem Field::monomial(const Value& t) const {
  const long p = this->p();
  const long zd = p - 1;
  const long sd = static_cast<long>(d_->sdeg);
  mpz_class T = value_group().numerator_of(t);
  // a p^n + b (p-1) + c D = T with 0 <= a < p-1, 0 <= b < p^n.
  mpz_class a_m, b_m;
  mpz_fdiv_r_ui(a_m.get_mpz_t(), T.get_mpz_t(), static_cast<unsigned long>(zd));
  long a = a_m.get_si();
  long b = 0;
  if (sd > 1) {
    // b = -T (p-1)^{-1} mod p^n; (p-1)^{-1} = -(1 + p + ... ) mod p^n.
    mpz_class inv, modulus(sd), pm1(p - 1);
    mpz_invert(inv.get_mpz_t(), pm1.get_mpz_t(), modulus.get_mpz_t());
    mpz_class bb = T * inv;
    mpz_fdiv_r(bb.get_mpz_t(), bb.get_mpz_t(), modulus.get_mpz_t());
    b = bb.get_si();
  }
  mpz_class rest = T - mpz_class(a) * sd - mpz_class(b) * zd;
  mpz_class c = rest / (zd * sd);
  FieldElem r = z().pow(a);
  if (b > 0) r *= s().pow(b);
  long ci = c.get_si();
  mpq_class pc = 1;
  for (long k = 0; k < std::abs(ci); ++k) pc *= p;
  if (ci < 0) pc = 1 / pc;
  return r.scaled(RatFunc(pc));
}

// ---------------------------------------------------------------- FieldElem

FieldElem::FieldElem(std::shared_ptr<const FieldData> d, std::vector<QPoly> n, QPoly den)
    : d_(std::move(d)), n_(std::move(n)), den_(std::move(den)) {
  if (den_.is_zero()) throw Error(ErrorKind::DivisionByZero, "field element with zero denominator");
  normalize();
}

// Lowest terms, integral and primitive. With cancel_only, only factors of
// that polynomial can be common to numerators and denominator.
void FieldElem::normalize(const QPoly* cancel_only) {
  bool zero = true;
  for (const auto& c : n_)
    if (!c.is_zero()) zero = false;
  if (zero) {
    den_ = QPoly(mpq_class(1));
    return;
  }
  if (!den_.is_constant()) {
    QPoly g = cancel_only ? *cancel_only : den_;
    for (const auto& c : n_) {
      if (g.is_constant()) break;
      if (!c.is_zero()) g = gcd(g, c);
    }
    if (!g.is_constant()) {
      den_ = den_.exact_div(g);
      for (auto& c : n_)
        if (!c.is_zero()) c = c.exact_div(g);
    }
  }
  // Integral, primitive, positive leading denominator coefficient.
  mpz_class l = 1, g = 0;
  auto scan_den = [&l](const QPoly& q) {
    for (const auto& c : q.coeffs())
      if (c != 0) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  };
  for (const auto& c : n_) scan_den(c);
  scan_den(den_);
  auto scan_num = [&g, &l](const QPoly& q) {
    for (const auto& c : q.coeffs()) {
      if (c == 0) continue;
      mpz_class x = c.get_num() * (l / c.get_den());
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    }
  };
  for (const auto& c : n_) scan_num(c);
  scan_num(den_);
  mpq_class f(l, g);
  f.canonicalize();
  if (sgn(den_.lead()) < 0) f = -f;
  if (f != 1) {
    for (auto& c : n_)
      if (!c.is_zero()) c = c * f;
    den_ = den_ * f;
  }
}

void FieldElem::check_same(const FieldElem& o) const {
  if (!d_ || !o.d_) throw Error(ErrorKind::FieldMismatch, "uninitialized field element");
  if (d_ != o.d_ && !(d_->desc == o.d_->desc))
    throw Error(ErrorKind::FieldMismatch, "elements of different fields: " + d_->desc.str() + " vs " + o.d_->desc.str());
}

bool FieldElem::is_zero() const {
  for (const auto& c : n_)
    if (!c.is_zero()) return false;
  return true;
}

bool FieldElem::is_one() const {
  if (!den_.is_one() || !n_[0].is_one()) return false;
  for (std::size_t k = 1; k < n_.size(); ++k)
    if (!n_[k].is_zero()) return false;
  return true;
}

bool FieldElem::is_ratfunc() const {
  for (std::size_t k = 1; k < n_.size(); ++k)
    if (!n_[k].is_zero()) return false;
  return true;
}

std::vector<RatFunc> FieldElem::coords() const {
  std::vector<RatFunc> r;
  r.reserve(n_.size());
  for (const auto& c : n_) r.push_back(c.is_zero() ? RatFunc() : RatFunc(c, den_));
  return r;
}

RatFunc FieldElem::coord(std::size_t i, std::size_t j) const {
  const QPoly& c = n_[i + d_->zdeg * j];
  return c.is_zero() ? RatFunc() : RatFunc(c, den_);
}

FieldElem FieldElem::operator+(const FieldElem& o) const {
  check_same(o);
  if (o.is_zero()) return *this;
  if (is_zero()) return o;
  std::vector<QPoly> r(n_.size());
  if (den_ == o.den_) {
    for (std::size_t k = 0; k < r.size(); ++k) r[k] = n_[k] + o.n_[k];
    return FieldElem(d_, std::move(r), den_);
  }
  QPoly g = den_.is_one() || o.den_.is_one() ? QPoly(mpq_class(1)) : gcd(den_, o.den_);
  QPoly d1 = g.is_one() ? den_ : den_.exact_div(g);
  QPoly d2 = g.is_one() ? o.den_ : o.den_.exact_div(g);
  for (std::size_t k = 0; k < r.size(); ++k) {
    QPoly a = n_[k].is_zero() ? QPoly() : n_[k] * d2;
    QPoly b = o.n_[k].is_zero() ? QPoly() : o.n_[k] * d1;
    r[k] = a + b;
  }
  FieldElem out = *this;
  out.n_ = std::move(r);
  out.den_ = d1 * o.den_;
  out.normalize(&g);
  return out;
}

FieldElem FieldElem::operator-() const {
  FieldElem r = *this;
  for (auto& c : r.n_) c = -c;
  return r;
}

FieldElem FieldElem::operator-(const FieldElem& o) const { return *this + (-o); }

FieldElem FieldElem::scaled(const RatFunc& f) const {
  if (f.is_zero()) return Field(d_).zero();
  std::vector<QPoly> r = n_;
  for (auto& c : r)
    if (!c.is_zero()) c = c * f.num();
  return FieldElem(d_, std::move(r), den_ * f.den());
}

FieldElem FieldElem::operator*(const FieldElem& o) const {
  check_same(o);
  const FieldData& d = *d_;
  const std::size_t zd = d.zdeg, sd = d.sdeg;
  if (is_ratfunc()) return o.scaled(RatFunc(n_[0], den_));
  if (o.is_ratfunc()) return scaled(RatFunc(o.n_[0], o.den_));
  std::vector<std::vector<QPoly>> g(2 * zd, std::vector<QPoly>(2 * sd));
  for (std::size_t i1 = 0; i1 < zd; ++i1)
    for (std::size_t j1 = 0; j1 < sd; ++j1) {
      const QPoly& a = n_[i1 + zd * j1];
      if (a.is_zero()) continue;
      for (std::size_t i2 = 0; i2 < zd; ++i2)
        for (std::size_t j2 = 0; j2 < sd; ++j2) {
          const QPoly& b = o.n_[i2 + zd * j2];
          if (b.is_zero()) continue;
          QPoly& cell = g[i1 + i2][j1 + j2];
          cell = cell + a * b;
        }
    }
  return FieldElem(d_, reduce_grid(d, g), den_ * o.den_);
}

FieldElem FieldElem::inverse() const {
  if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero field element");
  if (is_ratfunc()) return Field(d_).from_ratfunc(RatFunc(n_[0], den_).inverse());
  // x = N/den; solve (multiplication by N) * y = 1 over Q[u] with
  // fraction-free Gauss-Jordan elimination.
  const std::size_t n = n_.size();
  const QPoly one(mpq_class(1));
  FieldElem xs(d_, n_, one);
  std::vector<std::vector<QPoly>> m(n, std::vector<QPoly>(n + 1));
  for (std::size_t k = 0; k < n; ++k) {
    FieldElem col = xs * FieldElem(d_, unit_numerators(n, k, one), one);
    for (std::size_t r = 0; r < n; ++r) m[r][k] = col.n_[r];
  }
  m[0][n] = one;
  QPoly prev = one;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t sel = k;
    while (sel < n && m[sel][k].is_zero()) ++sel;
    if (sel == n) throw Error(ErrorKind::DivisionByZero, "singular multiplication matrix");
    std::swap(m[sel], m[k]);
    const QPoly piv = m[k][k];
    for (std::size_t r = 0; r < n; ++r) {
      if (r == k) continue;
      const QPoly a = m[r][k];
      for (std::size_t j = 0; j <= n; ++j) {
        if (j == k) continue;
        QPoly v = piv * m[r][j];
        if (!a.is_zero() && !m[k][j].is_zero()) v = v - a * m[k][j];
        m[r][j] = prev.is_one() ? v : v.exact_div(prev);
      }
      m[r][k] = QPoly();
    }
    prev = piv;
  }
  // Every diagonal entry now equals the determinant.
  const QPoly det = m[n - 1][n - 1];
  std::vector<QPoly> y(n);
  for (std::size_t r = 0; r < n; ++r) y[r] = m[r][n] * den_;
  return FieldElem(d_, std::move(y), det);
}

FieldElem FieldElem::operator/(const FieldElem& o) const {
  check_same(o);
  return *this * o.inverse();
}

FieldElem FieldElem::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  FieldElem result = Field(d_).one(), base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

bool FieldElem::operator==(const FieldElem& o) const {
  check_same(o);
  return den_ == o.den_ && n_ == o.n_;
}

std::string FieldElem::str() const {
  const FieldData& d = *d_;
  std::ostringstream os;
  bool first = true;
  for (std::size_t j = 0; j < d.sdeg; ++j)
    for (std::size_t i = 0; i < d.zdeg; ++i) {
      if (n_[i + d.zdeg * j].is_zero()) continue;
      const RatFunc c = coord(i, j);
      std::string mono;
      if (i > 0) mono += i == 1 ? "z" : "z^" + std::to_string(i);
      if (j > 0) mono += std::string(mono.empty() ? "" : "*") + (j == 1 ? "s" : "s^" + std::to_string(j));
      bool negative = false;
      std::string coef;
      if (c.is_constant()) {
        mpq_class q = c.constant();
        negative = sgn(q) < 0;
        mpq_class a = abs(q);
        if (!(a == 1 && !mono.empty())) coef = a.get_str();
      } else if (c.den().is_one()) {
        coef = "(" + c.num().str() + ")";
      } else {
        coef = "(" + c.num().str() + ")/(" + c.den().str() + ")";
      }
      std::string term = coef;
      if (!mono.empty()) term += (coef.empty() ? "" : "*") + mono;
      if (first) {
        os << (negative ? "-" : "") << term;
      } else {
        os << (negative ? " - " : " + ") << term;
      }
      first = false;
    }
  if (first) return "0";
  return os.str();
}

// ---------------------------------------------------------------- valuation

Value valuation(const FieldElem& x) {
  const Field f = x.field();
  const long p = f.p();
  const std::size_t zd = static_cast<std::size_t>(p - 1);
  const long sd = static_cast<long>(f.dimension() / zd);
  bool any = false;
  Value best;
  const auto& n = x.numerators();
  if (x.is_zero()) return Value::infinity();
  const long dv = x.denominator().gauss_val(p);
  for (std::size_t k = 0; k < n.size(); ++k) {
    if (n[k].is_zero()) continue;
    long i = static_cast<long>(k % zd);
    long j = static_cast<long>(k / zd);
    Value v = Value(n[k].gauss_val(p) - dv) + Value(i, p - 1) + Value(j, sd);
    if (!any || v < best) best = v;
    any = true;
  }
  return any ? best : Value::infinity();
}

ResElem residue(const FieldElem& x) {
  const Field f = x.field();
  const long p = f.p();
  if (x.is_zero()) return ResElem(p, 0);
  if (valuation(x) < Value(0)) throw Error(ErrorKind::NegativeValuation, "residue of element with negative valuation");
  if (x.numerators()[0].is_zero()) return ResElem(p, 0);
  const RatFunc c = x.coord(0, 0);
  // Scale numerator and denominator so the denominator has Gauss valuation 0.
  long k = c.den().gauss_val(p);
  mpq_class scale = 1;
  for (long i = 0; i < std::abs(k); ++i) scale *= p;
  if (k > 0) scale = 1 / scale;
  auto reduce = [p](const QPoly& poly) {
    std::vector<long> out;
    for (const auto& q : poly.coeffs()) {
      if (q == 0) {
        out.push_back(0);
        continue;
      }
      if (padic_val(q, p) < 0) throw Error(ErrorKind::NegativeValuation, "coefficient not p-integral");
      mpz_class num = q.get_num(), den = q.get_den();
      mpz_class r;
      mpz_class pm(p);
      mpz_invert(r.get_mpz_t(), den.get_mpz_t(), pm.get_mpz_t());
      r = r * num;
      mpz_fdiv_r(r.get_mpz_t(), r.get_mpz_t(), pm.get_mpz_t());
      out.push_back(r.get_si());
    }
    return FpPoly(p, std::move(out));
  };
  return ResElem(reduce(c.num() * scale), reduce(c.den() * scale));
}

FieldElem lift(const Field& field, const ResElem& r) {
  RatFunc f = r.lift();
  if (!field.with_u() && !f.is_constant()) throw Error(ErrorKind::NotAdjoined, "residue involves u but u is not adjoined");
  return field.from_ratfunc(f);
}

RootResult is_pth_power_residue(const Field& field, const ResElem& c) {
  (void)field;
  auto root = pth_root(c);
  return RootResult{root.has_value(), root};
}

RootResult artin_schreier_solvable(const Field& field, const ResElem& c) {
  (void)field;
  auto root = artin_schreier_root(c);
  return RootResult{root.has_value(), root};
}

FieldElem embed(const FieldElem& x, const Field& target) {
  const Field src = x.field();
  if (src.p() != target.p() || target.tower_level() < src.tower_level() || (src.with_u() && !target.with_u()))
    throw Error(ErrorKind::FieldMismatch, "cannot embed " + src.desc().str() + " into " + target.desc().str());
  const std::size_t zd = static_cast<std::size_t>(src.p() - 1);
  const std::size_t sd_src = src.dimension() / zd;
  std::size_t stride = 1;
  for (int i = src.tower_level(); i < target.tower_level(); ++i) stride *= static_cast<std::size_t>(src.p());
  std::vector<RatFunc> out(target.dimension());
  const std::vector<RatFunc> c = x.coords();
  for (std::size_t j = 0; j < sd_src; ++j)
    for (std::size_t i = 0; i < zd; ++i) out[i + zd * (j * stride)] = c[i + zd * j];
  return target.from_coords(std::move(out));
}

}  // namespace kummer
