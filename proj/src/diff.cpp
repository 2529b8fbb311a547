#include "kummer/diff.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "kummer/error.hpp"

namespace kummer {

DiffElem DiffElem::dlog(const FieldElem& coeff, const FieldElem& arg) {
  if (arg.is_zero()) throw Error(ErrorKind::ZeroArgument, "dlog of zero");
  DiffElem r;
  if (!coeff.is_zero()) r.terms_.push_back({DiffTerm::Dlog, coeff, arg});
  return r;
}

DiffElem DiffElem::operator+(const DiffElem& o) const {
  DiffElem r = *this;
  r.terms_.insert(r.terms_.end(), o.terms_.begin(), o.terms_.end());
  return r;
}

DiffElem DiffElem::scaled(const FieldElem& c) const {
  DiffElem r;
  if (c.is_zero()) return r;
  for (const auto& t : terms_) r.terms_.push_back({t.kind, t.coeff * c, t.arg});
  return r;
}

DiffElem DiffElem::operator-(const DiffElem& o) const {
  if (o.terms_.empty()) return *this;
  return *this + o.scaled(-o.terms_.front().coeff.field().one());
}

namespace {

// Removes the rational constant from the arg and makes its leading rational 1.
// Returns the factor q with arg_old = q * arg_new + const, or 0 when arg is rational.
mpq_class normalize_arg(FieldElem& arg) {
  std::vector<RatFunc> c = arg.coords();
  if (!c.empty() && !c[0].is_zero()) {
    if (c[0].is_constant()) {
      c[0] = RatFunc();
    } else if (c[0].den().is_one() && c[0].num().coeff(0) != 0) {
      c[0] = c[0] - RatFunc(c[0].num().coeff(0));
    }
  }
  mpq_class lead = 0;
  for (const auto& x : c) {
    if (x.is_zero()) continue;
    lead = x.num().lead();
    break;
  }
  if (lead == 0) return 0;
  Field f = arg.field();
  arg = f.from_coords(std::move(c)).scaled(RatFunc(mpq_class(1 / lead)));
  return lead;
}

}  // namespace

DiffElem DiffElem::normalized() const {
  std::map<std::string, DiffTerm> merged;
  for (const auto& t : terms_) {
    if (t.coeff.is_zero()) continue;
    FieldElem coeff = t.kind == DiffTerm::Dlog ? t.coeff / t.arg : t.coeff;
    FieldElem arg = t.arg;
    mpq_class q = normalize_arg(arg);
    if (q == 0) continue;
    coeff = coeff.scaled(RatFunc(q));
    std::string key = arg.str();
    auto it = merged.find(key);
    if (it == merged.end()) {
      merged.emplace(key, DiffTerm{DiffTerm::D, coeff, arg});
    } else {
      it->second.coeff += coeff;
    }
  }
  DiffElem r;
  for (auto& [key, t] : merged)
    if (!t.coeff.is_zero()) r.terms_.push_back(std::move(t));
  return r;
}

Value DiffElem::min_coeff_valuation() const {
  Value m = Value::infinity();
  for (const auto& t : terms_) m = min(m, valuation(t.coeff));
  return m;
}

std::string DiffElem::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  for (std::size_t k = 0; k < terms_.size(); ++k) {
    const auto& t = terms_[k];
    os << (k ? " + " : "") << "(" << t.coeff.str() << ")*" << (t.kind == DiffTerm::Dlog ? "dlog" : "d") << "("
       << t.arg.str() << ")";
  }
  return os.str();
}

DiffComparison compare(const DiffElem& a, const DiffElem& b, const Value& threshold) {
  DiffComparison out;
  DiffElem na = a.normalized(), nb = b.normalized();
  bool same = na.terms().size() == nb.terms().size();
  for (std::size_t k = 0; same && k < na.terms().size(); ++k)
    same = na.terms()[k].arg == nb.terms()[k].arg && na.terms()[k].coeff == nb.terms()[k].coeff;
  DiffElem diff = (na - nb).normalized();
  out.residual_valuation = diff.min_coeff_valuation();
  out.exact = same;
  out.equal = same || out.residual_valuation >= threshold;
  return out;
}

DiffElem dlog_circ(const FieldElem& x) {
  if (x.is_zero()) throw Error(ErrorKind::ZeroArgument, "dlog° of zero");
  const Field f = x.field();
  if (x.is_one()) return DiffElem();
  Value v = valuation(x);
  if (v > Value(0)) return DiffElem::dlog(f.one(), x);
  if (v == Value(0)) {
    FieldElem xm1 = x - f.one();
    return DiffElem::dlog(xm1 / x, xm1);
  }
  return dlog_circ(x.inverse()).scaled(-f.one());
}

DiffElem delta(const FieldElem& b) { return dlog_circ(b).scaled(b); }

Value H_x_threshold(const FieldElem& x) {
  Value t = valuation(x - x.field().one());
  if (t.is_infinite()) return t;
  return t < Value(0) ? -t : t;
}

}  // namespace kummer
