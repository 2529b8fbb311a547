#include "kummer/values.hpp"

#include "kummer/error.hpp"

namespace kummer {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::MalformedValue: return "MalformedValue";
    case ErrorKind::NegateInfinity: return "NegateInfinity";
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::Syntax: return "Syntax";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::NotAdjoined: return "NotAdjoined";
    case ErrorKind::NegativeValuation: return "NegativeValuation";
    case ErrorKind::ZeroArgument: return "ZeroArgument";
    case ErrorKind::ZeroH: return "ZeroH";
    case ErrorKind::NotInA: return "NotInA";
    case ErrorKind::IterationCap: return "IterationCap";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::SamplerExhausted: return "SamplerExhausted";
    case ErrorKind::NotBestPair: return "NotBestPair";
    case ErrorKind::NotUnitOneClass: return "NotUnitOneClass";
    case ErrorKind::NotInSPrime: return "NotInSPrime";
    case ErrorKind::GammaNotInValueGroup: return "GammaNotInValueGroup";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::MalformedFamily: return "MalformedFamily";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
  }
  return "Unknown";
}

Value::Value(long num, long den) : inf_(false), q_(num, den) {
  if (den == 0) throw Error(ErrorKind::MalformedValue, "zero denominator");
  q_.canonicalize();
}

const mpq_class& Value::rational() const {
  if (inf_) throw Error(ErrorKind::MalformedValue, "infinite value has no rational part");
  return q_;
}

Value Value::operator+(const Value& o) const {
  if (inf_ || o.inf_) return infinity();
  return Value(mpq_class(q_ + o.q_));
}

Value Value::operator-(const Value& o) const { return *this + (-o); }

Value Value::operator-() const {
  if (inf_) throw Error(ErrorKind::NegateInfinity, "cannot negate +inf");
  return Value(mpq_class(-q_));
}

Value Value::scaled(const mpq_class& q) const {
  if (inf_) {
    if (sgn(q) <= 0) throw Error(ErrorKind::MalformedValue, "inf scaled by non-positive rational");
    return infinity();
  }
  return Value(mpq_class(q_ * q));
}

std::strong_ordering Value::operator<=>(const Value& o) const {
  if (inf_ && o.inf_) return std::strong_ordering::equal;
  if (inf_) return std::strong_ordering::greater;
  if (o.inf_) return std::strong_ordering::less;
  int c = cmp(q_, o.q_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

bool Value::operator==(const Value& o) const {
  return (*this <=> o) == std::strong_ordering::equal;
}

std::string Value::str() const { return inf_ ? "inf" : q_.get_str(); }

Value Value::parse(const std::string& s) {
  if (s == "inf") return infinity();
  mpq_class q;
  if (q.set_str(s, 10) != 0 || q.get_den() == 0)
    throw Error(ErrorKind::MalformedValue, "cannot parse value '" + s + "'");
  q.canonicalize();
  return Value(q);
}

std::ostream& operator<<(std::ostream& os, const Value& v) { return os << v.str(); }

ValueGroup ValueGroup::for_backend(long p, int tower_level) {
  long d = p - 1;
  for (int i = 0; i < tower_level; ++i) d *= p;
  return ValueGroup{d, tower_level};
}

mpz_class ValueGroup::numerator_of(const Value& t) const {
  mpq_class scaled = t.rational() * denominator;
  scaled.canonicalize();
  if (scaled.get_den() != 1)
    throw Error(ErrorKind::MalformedValue, t.str() + " is not in (1/" +
                                               std::to_string(denominator) + ")Z");
  return scaled.get_num();
}

bool ValueGroup::contains(const Value& t) const {
  if (t.is_infinite()) return false;
  mpq_class scaled = t.rational() * denominator;
  scaled.canonicalize();
  return scaled.get_den() == 1;
}

Value ValueGroup::ceil(const Value& t) const {
  mpq_class scaled = t.rational() * denominator;
  mpz_class c;
  mpz_cdiv_q(c.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
  return Value(mpq_class(c, mpz_class(denominator)));
}

Value ValueGroup::floor(const Value& t) const {
  mpq_class scaled = t.rational() * denominator;
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
  return Value(mpq_class(f, mpz_class(denominator)));
}

bool in_p_multiple(const Value& t, const ValueGroup& group, long p) {
  mpz_class n = group.numerator_of(t);
  return mpz_divisible_ui_p(n.get_mpz_t(), static_cast<unsigned long>(p)) != 0;
}

}  // namespace kummer
