#pragma once

#include <memory>
#include <string>
#include <vector>

#include "kummer/field.hpp"

namespace kummer {

// Polynomial over K, lowest degree first.
using KPoly = std::vector<FieldElem>;

struct ExtData;
class ExtElem;

// L = K[X]/(X^p - h) with sigma(alpha) = zeta * alpha. Cheap to copy.
class Extension {
 public:
  // ZeroH when h = 0. No irreducibility check; see make_extension.
  static Extension make(const Field& field, const FieldElem& h);

  const Field& base() const;
  const FieldElem& h() const;
  long p() const;

  ExtElem zero() const;
  ExtElem one() const;
  ExtElem alpha() const;
  ExtElem from_base(const FieldElem& c) const;
  ExtElem from_coeffs(std::vector<FieldElem> c) const;  // sum c_i alpha^i, size p

  // sigma^power; coefficient-wise c_i -> zeta^{i power} c_i.
  ExtElem sigma(const ExtElem& x, long power = 1) const;
  // Product of the conjugates sigma^k x.
  FieldElem norm(const ExtElem& x) const;
  // Same value as Res_X(X^p - h, rep_x(X)); much slower over Q(u).
  FieldElem norm_resultant(const ExtElem& x) const;
  FieldElem trace(const ExtElem& x) const;
  // w(x) = v(N(x))/p.
  Value w(const ExtElem& x) const;
  // prod_i (T - sigma^i b), monic of degree p; (-c, 1) for b in K.
  KPoly min_poly(const ExtElem& b) const;

  const std::shared_ptr<const ExtData>& data() const { return d_; }

 private:
  explicit Extension(std::shared_ptr<const ExtData> d) : d_(std::move(d)) {}
  std::shared_ptr<const ExtData> d_;
  friend class ExtElem;
};

class ExtElem {
 public:
  ExtElem() = default;

  Extension extension() const { return Extension(d_); }
  const std::vector<FieldElem>& coeffs() const { return c_; }
  const FieldElem& coeff(std::size_t i) const { return c_[i]; }
  bool is_zero() const;
  bool in_base() const;

  ExtElem operator+(const ExtElem& o) const;
  ExtElem operator-(const ExtElem& o) const;
  ExtElem operator-() const;
  ExtElem operator*(const ExtElem& o) const;
  ExtElem operator/(const ExtElem& o) const;
  ExtElem& operator+=(const ExtElem& o) { return *this = *this + o; }
  ExtElem& operator-=(const ExtElem& o) { return *this = *this - o; }
  ExtElem& operator*=(const ExtElem& o) { return *this = *this * o; }
  ExtElem scaled(const FieldElem& c) const;
  ExtElem inverse() const;  // DivisionByZero on zero
  ExtElem pow(long e) const;
  bool operator==(const ExtElem& o) const;

  // "[c0; c1; ...; c_{p-1}]"
  std::string str() const;

 private:
  ExtElem(std::shared_ptr<const ExtData> d, std::vector<FieldElem> c) : d_(std::move(d)), c_(std::move(c)) {}
  void check_same(const ExtElem& o) const;
  std::shared_ptr<const ExtData> d_;
  std::vector<FieldElem> c_;
  friend class Extension;
};

// Polynomial helpers over K.
void trim(KPoly& f);
long degree(const KPoly& f);
KPoly derivative(const KPoly& f);
ExtElem evaluate(const KPoly& f, const ExtElem& x);
// Resultant of f and g over K via the Euclidean remainder sequence.
FieldElem resultant(KPoly f, KPoly g, const Field& field);

}  // namespace kummer
