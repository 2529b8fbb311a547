#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

#include <gmpxx.h>

namespace kummer {

// Element of the value group: an exact rational or +infinity.
// Normalization throughout is v(p) = 1.
class Value {
 public:
  Value() : inf_(false), q_(0) {}
  Value(long n) : inf_(false), q_(n) {}  // NOLINT: implicit by design of the algebra
  Value(const mpq_class& q) : inf_(false), q_(q) { q_.canonicalize(); }  // NOLINT
  Value(long num, long den);

  static Value infinity() {
    Value v;
    v.inf_ = true;
    return v;
  }

  bool is_infinite() const { return inf_; }
  bool is_finite() const { return !inf_; }
  // Throws MalformedValue on infinity.
  const mpq_class& rational() const;

  Value operator+(const Value& o) const;
  Value operator-(const Value& o) const;
  Value operator-() const;  // throws NegateInfinity on +inf
  Value& operator+=(const Value& o) { return *this = *this + o; }
  Value& operator-=(const Value& o) { return *this = *this - o; }
  // Scalar multiplication by a rational. inf * q is inf for q > 0.
  Value scaled(const mpq_class& q) const;
  Value operator*(long k) const { return scaled(mpq_class(k)); }
  Value operator/(long k) const { return scaled(mpq_class(1, k)); }

  std::strong_ordering operator<=>(const Value& o) const;
  bool operator==(const Value& o) const;

  // "num/den", integer form "n", or "inf".
  std::string str() const;
  static Value parse(const std::string& s);

 private:
  bool inf_;
  mpq_class q_;
};

inline Value min(const Value& a, const Value& b) { return b < a ? b : a; }
inline Value max(const Value& a, const Value& b) { return a < b ? b : a; }

std::ostream& operator<<(std::ostream& os, const Value& v);

// Discrete value group (1/D)Z with D = (p-1) * p^tower_level.
struct ValueGroup {
  long denominator = 1;
  int tower_level = 0;

  static ValueGroup for_backend(long p, int tower_level);

  bool contains(const Value& t) const;
  // Least element of the group that is >= t (t finite).
  Value ceil(const Value& t) const;
  // Largest element of the group that is <= t (t finite).
  Value floor(const Value& t) const;
  // t * D as an integer; throws MalformedValue when t is not in the group.
  mpz_class numerator_of(const Value& t) const;
  Value generator() const { return Value(1, denominator); }
};

// True iff t = p * g for some g in G. Throws MalformedValue if t is not in G.
bool in_p_multiple(const Value& t, const ValueGroup& group, long p);

}  // namespace kummer
