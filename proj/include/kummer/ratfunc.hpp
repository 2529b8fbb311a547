#pragma once

#include <optional>
#include <string>

#include "kummer/poly.hpp"

namespace kummer {

// Element of Q(u) in lowest terms with monic denominator.
class RatFunc {
 public:
  RatFunc() : num_(), den_(mpq_class(1)) {}
  RatFunc(const mpq_class& c) : num_(c), den_(mpq_class(1)) {}  // NOLINT
  RatFunc(long c) : RatFunc(mpq_class(c)) {}                     // NOLINT
  RatFunc(QPoly num, QPoly den);
  static RatFunc u();

  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_one(); }
  // Constant value; only meaningful when is_constant().
  mpq_class constant() const { return num_.coeff(0); }
  const QPoly& num() const { return num_; }
  const QPoly& den() const { return den_; }

  RatFunc operator+(const RatFunc& o) const;
  RatFunc operator-(const RatFunc& o) const;
  RatFunc operator-() const;
  RatFunc operator*(const RatFunc& o) const;
  RatFunc operator/(const RatFunc& o) const;
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc inverse() const;
  bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }

  // p-adic Gauss valuation; throws ZeroArgument on zero.
  long gauss_val(long p) const { return num_.gauss_val(p) - den_.gauss_val(p); }

  std::string str() const;

 private:
  void canonicalize();
  static RatFunc from_reduced(QPoly num, QPoly den);
  QPoly num_;
  QPoly den_;
};

// Element of the residue field F_p or F_p(u): lowest terms, monic denominator.
class ResElem {
 public:
  ResElem(long p, long c);
  ResElem(FpPoly num, FpPoly den);

  long prime() const { return num_.prime(); }
  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }
  const FpPoly& num() const { return num_; }
  const FpPoly& den() const { return den_; }

  ResElem operator+(const ResElem& o) const;
  ResElem operator-(const ResElem& o) const;
  ResElem operator*(const ResElem& o) const;
  ResElem operator/(const ResElem& o) const;
  ResElem pow(long e) const;
  bool operator==(const ResElem& o) const { return num_ == o.num_ && den_ == o.den_; }

  // Lift with coefficients in [0, p).
  RatFunc lift() const;
  std::string str() const;

 private:
  void canonicalize();
  FpPoly num_;
  FpPoly den_;
};

// d with d^p = c if it exists. Throws ZeroArgument for c = 0.
std::optional<ResElem> pth_root(const ResElem& c);
// x with x^p - x = c if it exists.
std::optional<ResElem> artin_schreier_root(const ResElem& c);

}  // namespace kummer
