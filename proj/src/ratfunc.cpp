#include "kummer/ratfunc.hpp"

#include "kummer/error.hpp"

namespace kummer {

// ---------------------------------------------------------------- RatFunc

RatFunc::RatFunc(QPoly num, QPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw Error(ErrorKind::DivisionByZero, "rational function with zero denominator");
  canonicalize();
}

RatFunc RatFunc::u() { return RatFunc(QPoly::monomial(1, 1), QPoly(mpq_class(1))); }

void RatFunc::canonicalize() {
  if (num_.is_zero()) {
    den_ = QPoly(mpq_class(1));
    return;
  }
  if (den_.is_constant()) {
    if (!den_.is_one()) {
      num_ = num_ * mpq_class(1 / den_.lead());
      den_ = QPoly(mpq_class(1));
    }
    return;
  }
  QPoly g = gcd(num_, den_);
  if (!g.is_constant()) {
    num_ = num_.exact_div(g);
    den_ = den_.exact_div(g);
  }
  mpq_class lc = den_.lead();
  if (lc != 1) {
    num_ = num_ * mpq_class(1 / lc);
    den_ = den_.monic();
  }
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
  if (is_constant() && o.is_constant()) return RatFunc(mpq_class(constant() + o.constant()));
  if (den_ == o.den_) return RatFunc(num_ + o.num_, den_);
  if (den_.is_one()) return from_reduced(num_ * o.den_ + o.num_, o.den_);
  if (o.den_.is_one()) return from_reduced(num_ + o.num_ * den_, den_);
  // Henrici: only the common part of the denominators can cancel.
  QPoly g = gcd(den_, o.den_);
  if (g.is_constant()) return from_reduced(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  QPoly d1 = den_.exact_div(g), d2 = o.den_.exact_div(g);
  QPoly n = num_ * d2 + o.num_ * d1;
  if (n.is_zero()) return RatFunc();
  QPoly g2 = gcd(n, g);
  if (!g2.is_constant()) {
    n = n.exact_div(g2);
    g = g.exact_div(g2);
  }
  return from_reduced(std::move(n), d1 * d2 * g);
}

// num/den already coprime; only normalizes the leading coefficient.
RatFunc RatFunc::from_reduced(QPoly num, QPoly den) {
  RatFunc r;
  if (num.is_zero()) return r;
  mpq_class lc = den.lead();
  if (lc != 1) {
    num = num * mpq_class(1 / lc);
    den = den.monic();
  }
  r.num_ = std::move(num);
  r.den_ = std::move(den);
  return r;
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc RatFunc::operator-(const RatFunc& o) const { return *this + (-o); }

RatFunc RatFunc::operator*(const RatFunc& o) const {
  if (is_zero() || o.is_zero()) return RatFunc();
  if (is_constant() && o.is_constant()) return RatFunc(mpq_class(constant() * o.constant()));
  if (is_constant()) {
    RatFunc r = o;
    r.num_ = r.num_ * constant();
    return r;
  }
  if (o.is_constant()) {
    RatFunc r = *this;
    r.num_ = r.num_ * o.constant();
    return r;
  }
  QPoly n1 = num_, d1 = den_, n2 = o.num_, d2 = o.den_;
  if (!d2.is_one()) {
    QPoly g = gcd(n1, d2);
    if (!g.is_constant()) {
      n1 = n1.exact_div(g);
      d2 = d2.exact_div(g);
    }
  }
  if (!d1.is_one()) {
    QPoly g = gcd(n2, d1);
    if (!g.is_constant()) {
      n2 = n2.exact_div(g);
      d1 = d1.exact_div(g);
    }
  }
  return from_reduced(n1 * n2, d1 * d2);
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero in Q(u)");
  if (is_constant()) return RatFunc(mpq_class(1 / constant()));
  return RatFunc(den_, num_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const { return *this * o.inverse(); }

std::string RatFunc::str() const {
  if (den_.is_one()) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

// ---------------------------------------------------------------- ResElem

ResElem::ResElem(long p, long c) : num_(FpPoly::constant(p, c)), den_(FpPoly::constant(p, 1)) {}

ResElem::ResElem(FpPoly num, FpPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw Error(ErrorKind::DivisionByZero, "residue with zero denominator");
  canonicalize();
}

void ResElem::canonicalize() {
  const long p = num_.prime();
  if (num_.is_zero()) {
    den_ = FpPoly::constant(p, 1);
    return;
  }
  FpPoly g = gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = num_.divmod(g).first;
    den_ = den_.divmod(g).first;
  }
  long inv = mod_inverse(den_.lead(), p);
  num_ = num_.scaled(inv);
  den_ = den_.scaled(inv);
}

ResElem ResElem::operator+(const ResElem& o) const {
  return ResElem(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}
ResElem ResElem::operator-(const ResElem& o) const {
  return ResElem(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}
ResElem ResElem::operator*(const ResElem& o) const { return ResElem(num_ * o.num_, den_ * o.den_); }
ResElem ResElem::operator/(const ResElem& o) const {
  if (o.is_zero()) throw Error(ErrorKind::DivisionByZero, "residue division by zero");
  return ResElem(num_ * o.den_, den_ * o.num_);
}
ResElem ResElem::pow(long e) const { return ResElem(num_.pow(e), den_.pow(e)); }

RatFunc ResElem::lift() const {
  auto to_q = [](const FpPoly& f) {
    std::vector<mpq_class> c;
    for (long x : f.coeffs()) c.emplace_back(x);
    return QPoly(std::move(c));
  };
  return RatFunc(to_q(num_), to_q(den_));
}

std::string ResElem::str() const {
  if (den_.degree() == 0) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

namespace {

// f(u) = g(u^p) -> g, if every exponent of f is divisible by p.
std::optional<FpPoly> deflate(const FpPoly& f) {
  const long p = f.prime();
  std::vector<long> g;
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
    if (f.coeffs()[i] == 0) continue;
    if (i % static_cast<std::size_t>(p) != 0) return std::nullopt;
  }
  for (std::size_t i = 0; i < f.coeffs().size(); i += static_cast<std::size_t>(p)) g.push_back(f.coeffs()[i]);
  return FpPoly(p, std::move(g));
}

// Solve M x = rhs over F_p; returns one solution (free variables 0) if consistent.
std::optional<std::vector<long>> solve_mod_p(std::vector<std::vector<long>> m, std::vector<long> rhs, long p) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  std::vector<long> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t sel = r;
    while (sel < rows && m[sel][c] == 0) ++sel;
    if (sel == rows) continue;
    std::swap(m[sel], m[r]);
    std::swap(rhs[sel], rhs[r]);
    long inv = mod_inverse(m[r][c], p);
    for (auto& x : m[r]) x = (x * inv) % p;
    rhs[r] = (rhs[r] * inv) % p;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      long f = m[i][c];
      for (std::size_t j = 0; j < cols; ++j) m[i][j] = ((m[i][j] - f * m[r][j]) % p + p) % p;
      rhs[i] = ((rhs[i] - f * rhs[r]) % p + p) % p;
    }
    pivot_col.push_back(static_cast<long>(c));
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i)
    if (rhs[i] != 0) return std::nullopt;
  std::vector<long> x(cols, 0);
  for (std::size_t i = 0; i < r; ++i) x[static_cast<std::size_t>(pivot_col[i])] = rhs[i];
  return x;
}

}  // namespace

std::optional<ResElem> pth_root(const ResElem& c) {
  if (c.is_zero()) throw Error(ErrorKind::ZeroArgument, "p-th root test of zero residue");
  // Frobenius is the identity on F_p, so c is a p-th power iff c lies in F_p(u^p).
  auto n = deflate(c.num());
  auto d = deflate(c.den());
  if (!n || !d) return std::nullopt;
  return ResElem(*n, *d);
}

std::optional<ResElem> artin_schreier_root(const ResElem& c) {
  const long p = c.prime();
  if (c.is_zero()) return ResElem(p, 0);
  // x = a/b in lowest terms forces den(c) = b^p.
  auto b_opt = deflate(c.den());
  if (!b_opt) return std::nullopt;
  const FpPoly& b = *b_opt;
  const FpPoly& n = c.num();
  const long deg_b = b.degree();
  const long deg_n = n.degree();
  const long bound = std::max(deg_b, (deg_n + p - 1) / p);
  // a^p - a b^{p-1} = n is F_p-linear in the coefficients of a.
  FpPoly bp1 = b.pow(p - 1);
  const long unknowns = bound + 1;
  const long rows = std::max({bound * p, bound + bp1.degree(), deg_n}) + 1;
  std::vector<std::vector<long>> m(static_cast<std::size_t>(rows), std::vector<long>(static_cast<std::size_t>(unknowns), 0));
  for (long k = 0; k < unknowns; ++k) {
    auto col = static_cast<std::size_t>(k);
    m[static_cast<std::size_t>(k * p)][col] = (m[static_cast<std::size_t>(k * p)][col] + 1) % p;
    for (long j = 0; j <= bp1.degree(); ++j) {
      auto row = static_cast<std::size_t>(k + j);
      m[row][col] = ((m[row][col] - bp1.coeff(static_cast<std::size_t>(j))) % p + p) % p;
    }
  }
  std::vector<long> rhs(static_cast<std::size_t>(rows), 0);
  for (long i = 0; i <= deg_n; ++i) rhs[static_cast<std::size_t>(i)] = n.coeff(static_cast<std::size_t>(i));
  auto sol = solve_mod_p(std::move(m), std::move(rhs), p);
  if (!sol) return std::nullopt;
  return ResElem(FpPoly(p, *sol), b);
}

}  // namespace kummer
