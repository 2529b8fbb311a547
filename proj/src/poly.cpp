#include "kummer/poly.hpp"

#include <algorithm>
#include <sstream>

#include "kummer/error.hpp"

namespace kummer {

long padic_val(const mpz_class& n, long p) {
  if (n == 0) throw Error(ErrorKind::ZeroArgument, "valuation of zero integer");
  mpz_class m = abs(n);
  long k = 0;
  while (mpz_divisible_ui_p(m.get_mpz_t(), static_cast<unsigned long>(p))) {
    mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), static_cast<unsigned long>(p));
    ++k;
  }
  return k;
}

long padic_val(const mpq_class& q, long p) {
  return padic_val(q.get_num(), p) - padic_val(q.get_den(), p);
}

// ---------------------------------------------------------------- QPoly

QPoly::QPoly(const mpq_class& c) {
  if (c != 0) {
    c_.push_back(c);
    c_.back().canonicalize();
  }
}

QPoly::QPoly(std::vector<mpq_class> coeffs) : c_(std::move(coeffs)) {
  for (auto& x : c_) x.canonicalize();
  trim();
}

QPoly QPoly::monomial(const mpq_class& c, std::size_t degree) {
  if (c == 0) return QPoly();
  std::vector<mpq_class> v(degree + 1, mpq_class(0));
  v[degree] = c;
  return QPoly(std::move(v));
}

void QPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

QPoly QPoly::operator+(const QPoly& o) const {
  std::vector<mpq_class> r(std::max(c_.size(), o.c_.size()), mpq_class(0));
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
  return QPoly(std::move(r));
}

QPoly QPoly::operator-() const {
  QPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

QPoly QPoly::operator-(const QPoly& o) const { return *this + (-o); }

QPoly QPoly::operator*(const QPoly& o) const {
  if (is_zero() || o.is_zero()) return QPoly();
  std::vector<mpq_class> r(c_.size() + o.c_.size() - 1, mpq_class(0));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  }
  return QPoly(std::move(r));
}

QPoly QPoly::operator*(const mpq_class& s) const {
  if (s == 0) return QPoly();
  QPoly r = *this;
  for (auto& c : r.c_) c *= s;
  return r;
}

std::pair<QPoly, QPoly> QPoly::divmod(const QPoly& d) const {
  if (d.is_zero()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
  if (degree() < d.degree()) return {QPoly(), *this};
  std::vector<mpq_class> rem = c_;
  std::vector<mpq_class> quo(c_.size() - d.c_.size() + 1, mpq_class(0));
  const mpq_class inv_lead = 1 / d.lead();
  for (long k = static_cast<long>(quo.size()) - 1; k >= 0; --k) {
    const mpq_class& top = rem[k + d.c_.size() - 1];
    if (top == 0) continue;
    mpq_class f = top * inv_lead;
    quo[k] = f;
    for (std::size_t j = 0; j < d.c_.size(); ++j) rem[k + j] -= f * d.c_[j];
  }
  return {QPoly(std::move(quo)), QPoly(std::move(rem))};
}

QPoly QPoly::exact_div(const QPoly& d) const {
  auto [q, r] = divmod(d);
  if (!r.is_zero()) throw Error(ErrorKind::InvalidArgument, "inexact polynomial division");
  return q;
}

QPoly QPoly::monic() const {
  if (is_zero()) return *this;
  return *this * mpq_class(1 / lead());
}

QPoly QPoly::derivative() const {
  if (c_.size() <= 1) return QPoly();
  std::vector<mpq_class> r(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * static_cast<long>(i);
  return QPoly(std::move(r));
}

long QPoly::gauss_val(long p) const {
  if (is_zero()) throw Error(ErrorKind::ZeroArgument, "Gauss valuation of zero");
  bool first = true;
  long best = 0;
  for (const auto& c : c_) {
    if (c == 0) continue;
    long v = padic_val(c, p);
    if (first || v < best) best = v;
    first = false;
  }
  return best;
}

std::string QPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (long i = degree(); i >= 0; --i) {
    const mpq_class& c = c_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    mpq_class a = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << a.get_str();
      continue;
    }
    if (a != 1) os << a.get_str() << "*";
    os << "u";
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

namespace {

// Integer primitive part with positive leading coefficient.
QPoly primitive(const QPoly& a) {
  if (a.is_zero()) return a;
  mpz_class l = 1, g = 0;
  for (const auto& c : a.coeffs()) {
    if (c == 0) continue;
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  }
  std::vector<mpq_class> v;
  for (const auto& c : a.coeffs()) {
    mpq_class x = c * l;
    v.push_back(x);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_num_mpz_t());
  }
  if (sgn(a.lead()) < 0) g = -g;
  for (auto& c : v) c /= g;
  return QPoly(std::move(v));
}

FpPoly reduce_mod(const QPoly& a, long q) {
  std::vector<long> v;
  for (const auto& c : a.coeffs()) v.push_back(static_cast<long>(mpz_fdiv_ui(c.get_num_mpz_t(), static_cast<unsigned long>(q))));
  return FpPoly(q, std::move(v));
}

const std::vector<long>& gcd_primes() {
  static const std::vector<long> primes = [] {
    std::vector<long> out;
    for (long q = 2147483647L; out.size() < 400; q -= 2)
      if (is_prime(q)) out.push_back(q);
    return out;
  }();
  return primes;
}

bool divides(const QPoly& d, const QPoly& a) { return a.divmod(d).second.is_zero(); }

// Multi-modular gcd of primitive integer polynomials, both nonconstant.
QPoly modular_gcd(const QPoly& a, const QPoly& b) {
  mpz_class lc;
  mpz_gcd(lc.get_mpz_t(), a.lead().get_num_mpz_t(), b.lead().get_num_mpz_t());
  long best_deg = std::min(a.degree(), b.degree()) + 1;
  std::vector<mpz_class> acc;
  mpz_class modulus = 1;
  QPoly last;
  for (long q : gcd_primes()) {
    const auto uq = static_cast<unsigned long>(q);
    if (mpz_divisible_ui_p(a.lead().get_num_mpz_t(), uq) || mpz_divisible_ui_p(b.lead().get_num_mpz_t(), uq)) continue;
    FpPoly g = gcd(reduce_mod(a, q), reduce_mod(b, q));
    const long d = g.degree();
    if (d == 0) return QPoly(mpq_class(1));
    if (d > best_deg) continue;  // unlucky prime
    g = g.scaled(static_cast<long>(mpz_fdiv_ui(lc.get_mpz_t(), uq)));
    if (d < best_deg) {
      best_deg = d;
      acc.assign(static_cast<std::size_t>(d) + 1, mpz_class(0));
      modulus = 1;
    }
    // CRT: x = acc mod modulus, x = g mod q.
    mpz_class inv, qz(q);
    mpz_invert(inv.get_mpz_t(), modulus.get_mpz_t(), qz.get_mpz_t());
    for (std::size_t i = 0; i < acc.size(); ++i) {
      mpz_class r = mpz_class(g.coeff(i)) - acc[i];
      r = r * inv;
      mpz_fdiv_r(r.get_mpz_t(), r.get_mpz_t(), qz.get_mpz_t());
      acc[i] += modulus * r;
    }
    modulus *= q;
    mpz_class half = modulus / 2;
    std::vector<mpq_class> sym;
    for (const auto& c : acc) sym.emplace_back(c > half ? mpz_class(c - modulus) : c);
    QPoly cand = primitive(QPoly(std::move(sym)));
    if (cand == last && divides(cand, a) && divides(cand, b)) return cand.monic();
    last = std::move(cand);
  }
  throw Error(ErrorKind::InvalidArgument, "modular gcd did not converge");
}

}  // namespace

QPoly gcd(QPoly a, QPoly b) {
  a = primitive(a);
  b = primitive(b);
  if (a.is_zero() || b.is_zero()) return (a.is_zero() ? b : a).monic();
  if (a.is_constant() || b.is_constant()) return QPoly(mpq_class(1));
  return modular_gcd(a, b);
}

// ---------------------------------------------------------------- FpPoly

namespace {
long mod(long a, long p) {
  long r = a % p;
  return r < 0 ? r + p : r;
}
}  // namespace

long mod_inverse(long a, long p) {
  long t = 0, new_t = 1, r = p, new_r = mod(a, p);
  while (new_r != 0) {
    long q = r / new_r;
    std::tie(t, new_t) = std::make_pair(new_t, t - q * new_t);
    std::tie(r, new_r) = std::make_pair(new_r, r - q * new_r);
  }
  if (r != 1) throw Error(ErrorKind::DivisionByZero, "non-invertible residue");
  return mod(t, p);
}

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

FpPoly::FpPoly(long p, std::vector<long> coeffs) : p_(p), c_(std::move(coeffs)) {
  for (auto& c : c_) c = mod(c, p_);
  trim();
}

FpPoly FpPoly::constant(long p, long c) { return FpPoly(p, {c}); }

void FpPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

FpPoly FpPoly::operator+(const FpPoly& o) const {
  std::vector<long> r(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
  return FpPoly(p_, std::move(r));
}

FpPoly FpPoly::operator-(const FpPoly& o) const {
  std::vector<long> r(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
  return FpPoly(p_, std::move(r));
}

FpPoly FpPoly::operator*(const FpPoly& o) const {
  if (is_zero() || o.is_zero()) return FpPoly(p_, {});
  std::vector<long> r(c_.size() + o.c_.size() - 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] = (r[i + j] + c_[i] * o.c_[j]) % p_;
  return FpPoly(p_, std::move(r));
}

FpPoly FpPoly::scaled(long s) const {
  std::vector<long> r = c_;
  for (auto& c : r) c = (c * mod(s, p_)) % p_;
  return FpPoly(p_, std::move(r));
}

std::pair<FpPoly, FpPoly> FpPoly::divmod(const FpPoly& d) const {
  if (d.is_zero()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
  if (degree() < d.degree()) return {FpPoly(p_, {}), *this};
  std::vector<long> rem = c_;
  std::vector<long> quo(c_.size() - d.c_.size() + 1, 0);
  long inv_lead = mod_inverse(d.lead(), p_);
  for (long k = static_cast<long>(quo.size()) - 1; k >= 0; --k) {
    long top = rem[k + d.c_.size() - 1];
    if (top == 0) continue;
    long f = (top * inv_lead) % p_;
    quo[k] = f;
    for (std::size_t j = 0; j < d.c_.size(); ++j) rem[k + j] = mod(rem[k + j] - f * d.c_[j], p_);
  }
  return {FpPoly(p_, std::move(quo)), FpPoly(p_, std::move(rem))};
}

FpPoly FpPoly::monic() const {
  if (is_zero()) return *this;
  return scaled(mod_inverse(lead(), p_));
}

FpPoly FpPoly::pow(long e) const {
  FpPoly result = constant(p_, 1), base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

std::string FpPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (long i = degree(); i >= 0; --i) {
    long c = c_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0) {
      os << c;
      continue;
    }
    if (c != 1) os << c << "*";
    os << "u";
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

FpPoly gcd(FpPoly a, FpPoly b) {
  while (!b.is_zero()) {
    FpPoly r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

}  // namespace kummer
