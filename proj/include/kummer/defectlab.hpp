#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kummer/classify.hpp"
#include "kummer/theorems.hpp"

namespace kummer {

// alpha' = gamma (alpha - 1)/z, a unit of B, for alpha in S.
struct AlphaPrime {
  ExtElem alpha;
  FieldElem gamma;
  ExtElem alpha_prime;
};

// Unit-one class check for h: v(h) = 0 and v(h - 1) > 0.
bool in_unit_one_class(const FieldElem& h);

// For the ambient alpha. NotUnitOneClass unless h is a unit with v(h-1) > 0;
// GammaNotInValueGroup when v(z) - w(alpha - 1) is not a value of K.
AlphaPrime make_alpha_prime(const Extension& e);
// Same for any alpha in L with alpha^p in the unit-one class.
AlphaPrime make_alpha_prime(const Extension& e, const ExtElem& alpha);

// w(alpha') = 0, (sigma - 1)(alpha') = gamma alpha, v(gamma) < v(z).
VerificationResult check_alpha_prime(const Extension& e, const AlphaPrime& ap);

// A[alpha_a'] inside A[alpha_b'] for alpha and c*alpha ordered by w(. - 1).
// NotInSPrime when (c alpha)^p is not in the unit-one class.
VerificationResult containment_check(const Extension& e, const FieldElem& c);
// Runs containment_check on generated c = 1 + (small monomial terms).
VerificationResult verify_containment_suite(const Extension& e, int pairs, std::uint64_t seed);

// v((sigma-1)^{p-1}(alpha'^m beta^j)) >= (p-1) v(gamma) for 0 <= m, j < p,
// and F'(alpha') = (h p/alpha)(gamma/z)^{p-1} with value (p-1) v(gamma).
VerificationResult trace_bound_check(const Extension& e, const ExtElem& beta);
// trace_bound_check over sampled units beta.
VerificationResult verify_trace_bound_suite(const Extension& e, const ExtensionReport& r, int samples,
                                            std::uint64_t seed);

struct FamilyStage {
  int n = 0;
  std::string h;
};

struct FamilySpec {
  long p = 3;
  bool with_u = false;
  std::vector<int> tower_levels;
  std::vector<FamilyStage> stages;
  std::string description;
};

struct StageResult {
  int index = 0;
  int n = 0;
  std::string h;
  ExtensionReport report;
};

struct CrossStage {
  int from = 0;
  int to = 0;
  std::string status;  // pass, fail, skipped
  std::string detail;
};

struct DefectCertificate {
  std::vector<StageResult> stages;
  std::vector<Value> sws;
  bool strictly_decreasing = false;
  // Least sw when the chain does not strictly decrease; empty otherwise.
  std::optional<Value> inf_candidate;
  std::vector<CrossStage> cross;
  std::string description;
};

// MalformedFamily for an empty stage list or bad levels; stage errors are
// rethrown with the stage index in the message.
DefectCertificate family_scan(const FamilySpec& spec, int max_iter = 200);

}  // namespace kummer
