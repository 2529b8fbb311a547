#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "kummer/ext.hpp"
#include "kummer/field.hpp"

namespace kummer {

enum class CaseTag { UNRAMIFIED_I, WILD_II, WILD_III, FEROCIOUS_IV, FEROCIOUS_V };

std::string_view to_string(CaseTag tag);
bool is_wild(CaseTag tag);

struct BestH {
  FieldElem h_best;
  FieldElem multiplier;  // h_best = h * multiplier^p
  CaseTag tag = CaseTag::UNRAMIFIED_I;
  int iterations = 0;
  std::vector<Value> t_trace;  // v(h - 1) after each unit-loop step
};

// NotInA (trivial extension), IterationCap, ZeroH.
BestH best_h(const Field& field, const FieldElem& h, int max_iter = 200);

struct ExtensionReport {
  FieldDesc field;
  FieldElem h_input;
  FieldElem h_best;
  CaseTag tag = CaseTag::UNRAMIFIED_I;
  int e = 1;
  int f = 1;
  int defect = 1;
  Value t;  // v(h_best - 1)
  Value sw;
  Value j;
  Value i;
  Value H_gen_val;
  int iterations = 0;
  std::string model = "global";
  bool descended = false;
  long m = 1;

  long p() const { return field.p; }
  // Denominator of w(L^x) when normalized so that v(p) = 1.
  long value_denominator_L() const;
};

ExtensionReport classify(const Field& field, const FieldElem& h, int max_iter = 200);

struct ClassifiedExtension {
  Extension ext;
  ExtensionReport report;
};

// Classifies h and builds L with alpha^p = h_best (or h itself when use_best is false).
ClassifiedExtension make_extension(const Field& field, const FieldElem& h, int max_iter = 200,
                                   bool use_best = true);

// Generator mu of B over A used for the j oracle and the samplers:
// (i) (alpha-1)/z, (ii)/(iv) alpha, (iii) alpha-1, (v) (alpha-1)/monomial(t/p).
ExtElem case_generator(const Extension& e, const ExtensionReport& r);
// Element with sigma(x)/x - 1 of minimal value; equals case_generator except in case (i).
ExtElem j_witness(const Extension& e, const ExtensionReport& r);

}  // namespace kummer
