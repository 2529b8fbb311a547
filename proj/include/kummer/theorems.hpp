#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kummer/classify.hpp"
#include "kummer/diff.hpp"
#include "kummer/ext.hpp"

namespace kummer {

struct Witness {
  std::string label;
  std::string expr;
  Value value;
};

struct IdealDesc {
  enum Ring { A, B };
  enum Kind { Principal, Threshold };
  Ring ring = A;
  Kind kind = Principal;
  Value gen_val;
  std::vector<Witness> witnesses;
};

struct VerificationResult {
  std::string theorem;
  bool pass = true;
  int samples = 0;
  std::uint64_t seed = 0;
  bool has_min = false;
  Value min_attained;
  std::vector<Witness> witnesses;
  std::vector<std::string> failures;
  std::vector<std::string> flags;

  void fail(const std::string& why) {
    pass = false;
    failures.push_back(why);
  }
  void attain(const Value& v) {
    if (!has_min || v < min_attained) min_attained = v;
    has_min = true;
  }
};

// H = N_sigma at valuation level.
VerificationResult verify_h_eq_n(const Extension& e, const ExtensionReport& r, int samples, std::uint64_t seed);

struct GeneratorResult {
  ExtElem x;
  FieldElem h_x;
  bool fallback = false;
  bool sigma_ok = false;      // sigma(x) = zeta x
  bool in_base_ok = false;    // x^p = N(x) in K
  bool bound_ok = false;      // v(z^p/(h_x - 1)) <= p w(sigma b - b)
  Value lhs;
  Value rhs;
};

// PreconditionViolated when b is in K or not a unit, or (p = 2) when
// w(sigma b - b) >= v(2). For p > 2 out-of-range b returns the generic witness.
GeneratorResult kummer_generator_from_unit(const Extension& e, const ExtElem& b);
VerificationResult verify_generator_from_unit(const Extension& e, const ExtensionReport& r, int samples,
                                              std::uint64_t seed);

struct RswResult {
  IdealDesc H;
  DiffElem form;      // (1/(h-1)) dlog° h
  IdealDesc I;        // threshold ((p-1)/p) sw
  Value H_h_threshold;
};

RswResult rsw(const Extension& e, const ExtensionReport& r);

// NotBestPair, PreconditionViolated (a in {0, 1} or a not in A).
VerificationResult verify_rsw_well_defined(const Extension& e, const ExtensionReport& r, const FieldElem& a);
// Runs the check above on generated best pairs until `pairs` of them pass through.
VerificationResult verify_rsw_suite(const Extension& e, const ExtensionReport& r, int pairs, std::uint64_t seed);

VerificationResult verify_inclusions(const Extension& e, const ExtensionReport& r);
VerificationResult verify_diagram(const Extension& e, const ExtensionReport& r, int samples, std::uint64_t seed);

// Report for L'|K' with [K:K'] = m prime to p (p > 2).
ExtensionReport descend_invariants(const ExtensionReport& r, long m);

}  // namespace kummer
