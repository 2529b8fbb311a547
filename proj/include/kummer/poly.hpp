#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace kummer {

// p-adic valuation of a nonzero rational.
long padic_val(const mpq_class& q, long p);
long padic_val(const mpz_class& n, long p);

// Dense univariate polynomial over Q in the variable u, lowest degree first.
// Invariant: no trailing zero coefficients; the zero polynomial is empty.
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(const mpq_class& c);
  explicit QPoly(std::vector<mpq_class> coeffs);
  static QPoly monomial(const mpq_class& c, std::size_t degree);

  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  const mpq_class& lead() const { return c_.back(); }
  const std::vector<mpq_class>& coeffs() const { return c_; }
  mpq_class coeff(std::size_t i) const { return i < c_.size() ? c_[i] : mpq_class(0); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }

  QPoly operator+(const QPoly& o) const;
  QPoly operator-(const QPoly& o) const;
  QPoly operator-() const;
  QPoly operator*(const QPoly& o) const;
  QPoly operator*(const mpq_class& s) const;
  bool operator==(const QPoly& o) const { return c_ == o.c_; }

  // Euclidean division; divisor must be nonzero.
  std::pair<QPoly, QPoly> divmod(const QPoly& d) const;
  QPoly exact_div(const QPoly& d) const;
  QPoly monic() const;
  QPoly derivative() const;

  // Minimum p-adic valuation over the coefficients (Gauss valuation).
  long gauss_val(long p) const;

  std::string str() const;

 private:
  void trim();
  std::vector<mpq_class> c_;
};

QPoly gcd(QPoly a, QPoly b);  // monic gcd, gcd(0,0) = 0

// Polynomial over F_p, lowest degree first, coefficients in [0, p).
class FpPoly {
 public:
  FpPoly() = default;
  FpPoly(long p, std::vector<long> coeffs);
  static FpPoly constant(long p, long c);

  long prime() const { return p_; }
  bool is_zero() const { return c_.empty(); }
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  long lead() const { return c_.back(); }
  const std::vector<long>& coeffs() const { return c_; }
  long coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }

  FpPoly operator+(const FpPoly& o) const;
  FpPoly operator-(const FpPoly& o) const;
  FpPoly operator*(const FpPoly& o) const;
  FpPoly scaled(long s) const;
  bool operator==(const FpPoly& o) const { return p_ == o.p_ && c_ == o.c_; }

  std::pair<FpPoly, FpPoly> divmod(const FpPoly& d) const;
  FpPoly monic() const;
  FpPoly pow(long e) const;

  std::string str() const;

 private:
  void trim();
  long p_ = 2;
  std::vector<long> c_;
};

FpPoly gcd(FpPoly a, FpPoly b);

long mod_inverse(long a, long p);
bool is_prime(long n);

}  // namespace kummer
