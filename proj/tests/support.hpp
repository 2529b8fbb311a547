#pragma once

#include <ostream>
#include <string>

#include "kummer/classify.hpp"
#include "kummer/error.hpp"
#include "kummer/expr.hpp"
#include "kummer/field.hpp"

namespace kummer {

// readable gtest output
inline void PrintTo(const Value& v, std::ostream* os) { *os << v.str(); }
inline void PrintTo(const QPoly& v, std::ostream* os) { *os << v.str(); }
inline void PrintTo(const RatFunc& v, std::ostream* os) { *os << v.str(); }
inline void PrintTo(const FieldElem& v, std::ostream* os) { *os << v.str(); }
inline void PrintTo(const ResElem& v, std::ostream* os) { *os << v.str(); }
inline void PrintTo(const FpPoly& v, std::ostream* os) { *os << v.str(); }

}  // namespace kummer

namespace kt {

inline kummer::Field F(long p, bool u = false, int n = 0) { return kummer::Field::make({p, u, n}); }

inline kummer::FieldElem E(const kummer::Field& K, const std::string& s) { return kummer::eval_expr(K, s); }

inline kummer::Value V(const std::string& s) { return kummer::Value::parse(s); }

inline kummer::ClassifiedExtension X(long p, bool u, int n, const std::string& h) {
  kummer::Field K = F(p, u, n);
  return kummer::make_extension(K, E(K, h));
}

template <class Fn>
kummer::ErrorKind kind_of(Fn&& fn) {
  try {
    fn();
  } catch (const kummer::Error& e) {
    return e.kind();
  }
  throw std::runtime_error("no kummer::Error thrown");
}

}  // namespace kt
