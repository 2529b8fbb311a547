#include "cli.hpp"

#include <algorithm>
#include <functional>
#include <optional>

#include <CLI11.hpp>

#include "kummer/classify.hpp"
#include "kummer/defectlab.hpp"
#include "kummer/error.hpp"
#include "kummer/expr.hpp"
#include "kummer/json_io.hpp"
#include "kummer/theorems.hpp"

namespace kummer::cli {

namespace {

using nlohmann::json;

struct JobConfig {
  long p = 0;
  bool with_u = false;
  int tower = 0;
  std::string h;
  std::string selector = "all";
  std::string family;
  int samples = 100;
  std::uint64_t seed = 0;
  int max_iter = 200;
  std::string output = "json";
  bool w_normalized = false;
};

const std::vector<std::string> kSuites{"h-eq-n", "gen-from-unit", "rsw-wd", "inclusions", "diagram"};

int exit_for(const Error& ex) {
  switch (ex.kind()) {
    case ErrorKind::NotInA: return kNotInA;
    case ErrorKind::IterationCap: return kIterationCap;
    case ErrorKind::Syntax:
    case ErrorKind::MalformedFamily: return kParseError;
    default: return kMisconfigured;
  }
}

void emit(std::ostream& out, json j) {
  j["schema"] = kSchemaVersion;
  out << j.dump(2) << "\n";
}

void text_report(std::ostream& out, const ExtensionReport& r, bool wn) {
  out << "field       " << r.field.str() << "\n";
  out << "h           " << r.h_input.str() << "\n";
  out << "h_best      " << r.h_best.str() << "\n";
  out << "case        " << to_string(r.tag) << "\n";
  out << "e f defect  " << r.e << " " << r.f << " " << r.defect << "\n";
  out << "t           " << r.t << "\n";
  out << "sw          " << r.sw << "\n";
  out << "j           " << r.j << "\n";
  out << "i           " << r.i << "\n";
  out << "H           (" << r.H_gen_val << ")\n";
  out << "iterations  " << r.iterations << "\n";
  if (wn) {
    json w = to_json(r, true)["w_normalized"];
    out << "normalized  D_L=" << w["D_L"].get<long>() << " sw=" << w["sw"].get<std::string>()
        << " j=" << w["j"].get<std::string>() << " i=" << w["i"].get<std::string>() << "\n";
  }
}

void text_result(std::ostream& out, const VerificationResult& r) {
  out << (r.pass ? "PASS " : "FAIL ") << r.theorem << "  samples=" << r.samples << " seed=" << r.seed;
  if (r.has_min) out << " min=" << r.min_attained;
  out << "\n";
  for (const auto& w : r.witnesses) out << "  witness " << w.label << " : " << w.value << "\n";
  for (const auto& f : r.flags) out << "  flag " << f << "\n";
  for (const auto& f : r.failures) out << "  failure " << f << "\n";
}

// Field and h from the config; parse problems map to exit 3.
struct Instance {
  Field field;
  FieldElem h;
};

Instance load_instance(const JobConfig& cfg) {
  Field K = Field::make({cfg.p, cfg.with_u, cfg.tower});
  try {
    return {K, eval_expr(K, cfg.h)};
  } catch (const Error& ex) {
    throw Error(ErrorKind::Syntax, std::string("cannot parse h: ") + ex.what());
  }
}

int cmd_classify(const JobConfig& cfg, std::ostream& out) {
  Instance in = load_instance(cfg);
  ExtensionReport r = classify(in.field, in.h, cfg.max_iter);
  if (cfg.output == "text") {
    text_report(out, r, cfg.w_normalized);
  } else {
    emit(out, {{"command", "classify"}, {"report", to_json(r, cfg.w_normalized)}});
  }
  return kOk;
}

VerificationResult run_suite(const std::string& name, const ClassifiedExtension& ce, const JobConfig& cfg) {
  const Extension& e = ce.ext;
  const ExtensionReport& r = ce.report;
  if (name == "h-eq-n") return verify_h_eq_n(e, r, cfg.samples, cfg.seed);
  if (name == "gen-from-unit") return verify_generator_from_unit(e, r, cfg.samples, cfg.seed);
  if (name == "rsw-wd") return verify_rsw_suite(e, r, cfg.samples, cfg.seed);
  if (name == "inclusions") return verify_inclusions(e, r);
  return verify_diagram(e, r, cfg.samples, cfg.seed);
}

int cmd_verify(const JobConfig& cfg, std::ostream& out, std::ostream& err) {
  std::vector<std::string> suites;
  if (cfg.selector == "all") {
    suites = kSuites;
  } else if (std::find(kSuites.begin(), kSuites.end(), cfg.selector) != kSuites.end()) {
    suites = {cfg.selector};
  } else {
    err << "unknown theorem selector '" << cfg.selector << "'\n";
    return kMisconfigured;
  }
  Instance in = load_instance(cfg);
  ClassifiedExtension ce = make_extension(in.field, in.h, cfg.max_iter);
  std::vector<VerificationResult> results;
  bool pass = true;
  for (const auto& s : suites) {
    try {
      results.push_back(run_suite(s, ce, cfg));
    } catch (const Error& ex) {
      VerificationResult r;
      r.theorem = s;
      r.samples = cfg.samples;
      r.seed = cfg.seed;
      r.fail(std::string(to_string(ex.kind())) + ": " + ex.what());
      results.push_back(r);
    }
    pass = pass && results.back().pass;
  }
  if (cfg.output == "text") {
    text_report(out, ce.report, cfg.w_normalized);
    for (const auto& r : results) text_result(out, r);
    out << (pass ? "all passed" : "some checks failed") << "\n";
  } else {
    json rs = json::array();
    for (const auto& r : results) rs.push_back(to_json(r));
    emit(out, {{"command", "verify"},
               {"selector", cfg.selector},
               {"report", to_json(ce.report, cfg.w_normalized)},
               {"results", rs},
               {"pass", pass}});
  }
  return pass ? kOk : kVerifyFailed;
}

int cmd_defect_scan(const JobConfig& cfg, std::ostream& out) {
  FamilySpec spec = load_family(cfg.family);
  DefectCertificate c = family_scan(spec, cfg.max_iter);
  if (cfg.output == "text") {
    out << "family      " << c.description << "\n";
    for (const auto& s : c.stages)
      out << "stage " << s.index << "  n=" << s.n << "  h=" << s.h << "  case=" << to_string(s.report.tag)
          << "  sw=" << s.report.sw << "\n";
    for (const auto& x : c.cross) out << "cross " << x.from << "->" << x.to << "  " << x.status << "  " << x.detail << "\n";
    out << "strictly decreasing  " << (c.strictly_decreasing ? "yes" : "no") << "\n";
    out << "inf candidate        " << (c.inf_candidate ? c.inf_candidate->str() : "none attained within stages") << "\n";
  } else {
    json j = to_json(c, cfg.w_normalized);
    j["command"] = "defect-scan";
    emit(out, j);
  }
  return kOk;
}

void add_field_options(CLI::App* sub, JobConfig& cfg) {
  sub->add_option("--p", cfg.p, "residue characteristic")->required();
  sub->add_flag("--with-u", cfg.with_u, "adjoin the transcendental u");
  sub->add_option("--tower", cfg.tower, "tower level n, adjoining p^(1/p^n)")->check(CLI::NonNegativeNumber);
  sub->add_option("--h", cfg.h, "Kummer parameter h")->required();
}

void add_common_options(CLI::App* sub, JobConfig& cfg) {
  sub->add_option("--max-iter", cfg.max_iter, "best-h iteration cap")->check(CLI::PositiveNumber);
  sub->add_option("--output", cfg.output, "json or text")->check(CLI::IsMember({"json", "text"}));
  sub->add_flag("--w-normalized", cfg.w_normalized, "add invariants scaled by the value denominator of L");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  JobConfig cfg;
  CLI::App app{"Ramification invariants of degree-p Kummer extensions"};
  app.name("kummer");
  app.require_subcommand(1);
  // -h is taken by --h
  app.set_help_flag("--help", "print help");

  CLI::App* classify_cmd = app.add_subcommand("classify", "classify L = K(h^(1/p)) and print its invariants");
  add_field_options(classify_cmd, cfg);
  add_common_options(classify_cmd, cfg);

  CLI::App* verify_cmd = app.add_subcommand("verify", "run theorem checks on one extension");
  verify_cmd->add_option("theorem", cfg.selector, "h-eq-n | gen-from-unit | rsw-wd | inclusions | diagram | all")
      ->required();
  add_field_options(verify_cmd, cfg);
  add_common_options(verify_cmd, cfg);
  verify_cmd->add_option("--samples", cfg.samples, "samples per check")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--seed", cfg.seed, "random seed");

  CLI::App* scan_cmd = app.add_subcommand("defect-scan", "scan a family of extensions across tower levels");
  scan_cmd->add_option("--family", cfg.family, "family JSON file")->required();
  add_common_options(scan_cmd, cfg);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& ex) {
    err << "error: " << ex.what() << "\n";
    return kMisconfigured;
  }

  try {
    if (*classify_cmd) return cmd_classify(cfg, out);
    if (*verify_cmd) return cmd_verify(cfg, out, err);
    return cmd_defect_scan(cfg, out);
  } catch (const Error& ex) {
    err << "error (" << to_string(ex.kind()) << "): " << ex.what() << "\n";
    return exit_for(ex);
  }
}

}  // namespace kummer::cli
