#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "kummer/ratfunc.hpp"
#include "kummer/values.hpp"

namespace kummer {

// K = Q(zeta_p)(u?)[s]/(s^{p^n} - p), a global model of a henselian
// mixed-characteristic field with value group (1/((p-1)p^n))Z.
struct FieldDesc {
  long p = 3;
  bool with_u = false;
  int tower_level = 0;

  bool operator==(const FieldDesc&) const = default;
  std::string str() const;
};

struct FieldData;
class FieldElem;

// Immutable handle; cheap to copy.
class Field {
 public:
  // Throws NotPrime, InvalidArgument (negative tower level).
  static Field make(const FieldDesc& desc);

  const FieldDesc& desc() const;
  long p() const { return desc().p; }
  int tower_level() const { return desc().tower_level; }
  bool with_u() const { return desc().with_u; }
  const ValueGroup& value_group() const;
  // Dimension of K over Q(u).
  std::size_t dimension() const;

  FieldElem zero() const;
  FieldElem one() const;
  FieldElem integer(long n) const;
  FieldElem rational(const mpq_class& q) const;
  FieldElem from_ratfunc(const RatFunc& f) const;
  FieldElem prime_elem() const;
  FieldElem zeta() const;
  FieldElem z() const;
  FieldElem u() const;  // NotAdjoined unless with_u
  FieldElem s() const;  // NotAdjoined unless tower_level > 0
  // Canonical monomial p^c z^a s^b of value t (0 <= a < p-1, 0 <= b < p^n).
  FieldElem monomial(const Value& t) const;
  // Build from the Q(u)-coordinates in the z^i s^j basis (index i + (p-1) j).
  FieldElem from_coords(std::vector<RatFunc> coords) const;

  // Value of z = zeta - 1, i.e. 1/(p-1).
  Value v_z() const;

  bool operator==(const Field& o) const;
  const std::shared_ptr<const FieldData>& data() const { return d_; }

 private:
  explicit Field(std::shared_ptr<const FieldData> d) : d_(std::move(d)) {}
  std::shared_ptr<const FieldData> d_;
  friend class FieldElem;
};

class FieldElem {
 public:
  FieldElem() = default;

  Field field() const { return Field(d_); }
  bool is_zero() const;
  bool is_one() const;
  // Q(u)-coordinates, materialized.
  std::vector<RatFunc> coords() const;
  // Coefficient of z^i s^j.
  RatFunc coord(std::size_t i, std::size_t j) const;
  // Stored form: Z[u] numerators over one denominator, lowest terms, primitive.
  const std::vector<QPoly>& numerators() const { return n_; }
  const QPoly& denominator() const { return den_; }
  // True when the element lies in Q(u).
  bool is_ratfunc() const;

  FieldElem operator+(const FieldElem& o) const;
  FieldElem operator-(const FieldElem& o) const;
  FieldElem operator-() const;
  FieldElem operator*(const FieldElem& o) const;
  FieldElem operator/(const FieldElem& o) const;
  FieldElem& operator+=(const FieldElem& o) { return *this = *this + o; }
  FieldElem& operator-=(const FieldElem& o) { return *this = *this - o; }
  FieldElem& operator*=(const FieldElem& o) { return *this = *this * o; }
  FieldElem scaled(const RatFunc& f) const;
  FieldElem inverse() const;  // DivisionByZero on zero
  FieldElem pow(long e) const;
  bool operator==(const FieldElem& o) const;

  // Expression string accepted back by the expression parser.
  std::string str() const;

 private:
  FieldElem(std::shared_ptr<const FieldData> d, std::vector<QPoly> n, QPoly den);
  void check_same(const FieldElem& o) const;
  void normalize(const QPoly* cancel_only = nullptr);

  std::shared_ptr<const FieldData> d_;
  std::vector<QPoly> n_;
  QPoly den_{mpq_class(1)};
  friend class Field;
  friend FieldElem embed(const FieldElem&, const Field&);
};

// v(0) = inf; v(z) = 1/(p-1), v(s) = 1/p^n, v(u) = 0.
Value valuation(const FieldElem& x);
// Image in the residue field; NegativeValuation when v(x) < 0.
ResElem residue(const FieldElem& x);
// Lift with coefficients in [0, p).
FieldElem lift(const Field& field, const ResElem& r);

struct RootResult {
  bool exists = false;
  std::optional<ResElem> root;
};
// c = d^p in k? ZeroArgument for c = 0.
RootResult is_pth_power_residue(const Field& field, const ResElem& c);
// c in {x^p - x : x in k}?
RootResult artin_schreier_solvable(const Field& field, const ResElem& c);

// Embeds x into a larger tower level of the same prime (s -> s^{p^{n'-n}}).
FieldElem embed(const FieldElem& x, const Field& target);

}  // namespace kummer
