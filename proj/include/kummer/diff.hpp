#pragma once

#include <string>
#include <vector>

#include "kummer/field.hpp"

namespace kummer {

// Formal sum of terms c * dlog(a) or c * d(a) over K.
struct DiffTerm {
  enum Kind { Dlog, D };
  Kind kind = Dlog;
  FieldElem coeff;
  FieldElem arg;
};

class DiffElem {
 public:
  DiffElem() = default;
  static DiffElem dlog(const FieldElem& coeff, const FieldElem& arg);  // ZeroArgument on arg = 0

  const std::vector<DiffTerm>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  DiffElem operator+(const DiffElem& o) const;
  DiffElem operator-(const DiffElem& o) const;
  DiffElem scaled(const FieldElem& c) const;

  // Log2 (c dlog a = (c/a) da), drop d of rationals, pull rational scalars
  // out of the arguments, merge equal arguments, drop zero coefficients.
  DiffElem normalized() const;
  // Minimum valuation of the coefficients (inf when empty).
  Value min_coeff_valuation() const;

  std::string str() const;

 private:
  std::vector<DiffTerm> terms_;
};

struct DiffComparison {
  bool equal = false;        // equal modulo the threshold
  bool exact = false;        // identical normalized forms
  Value residual_valuation;  // min coefficient valuation of the difference
};

// Normalizes both sides; equal when identical, otherwise when the difference
// has all coefficients of valuation >= threshold.
DiffComparison compare(const DiffElem& a, const DiffElem& b, const Value& threshold);

// dlog°: 0 at 1; 1 (x) dlog x on m_A; ((x-1)/x) (x) dlog(x-1) on units; -dlog°(1/x) off A.
DiffElem dlog_circ(const FieldElem& x);
// delta b = b dlog° b.
DiffElem delta(const FieldElem& b);
// H_x = (x-1)A ∩ A ∩ (1/(x-1))A as the threshold |v(x-1)|.
Value H_x_threshold(const FieldElem& x);

}  // namespace kummer
