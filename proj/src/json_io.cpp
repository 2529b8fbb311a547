#include "kummer/json_io.hpp"

#include <fstream>
#include <sstream>

#include "kummer/error.hpp"

namespace kummer {

using nlohmann::json;

namespace {

std::string vs(const Value& v) { return v.str(); }

// Integer form v * D_L; every invariant here lies in (1/D_L)Z.
json scaled_int(const Value& v, long dl) {
  if (v.is_infinite()) return "inf";
  mpq_class q = v.rational() * dl;
  if (q.get_den() != 1) return vs(v) + " (not integral)";
  return q.get_num().get_str();
}

}  // namespace

json to_json(const ExtensionReport& r, bool w_normalized) {
  json j;
  j["field"] = {{"p", r.field.p},
                {"with_u", r.field.with_u},
                {"tower_level", r.field.tower_level},
                {"name", r.field.str()}};
  j["h_input"] = r.h_input.str();
  j["h_best"] = r.h_best.str();
  j["case"] = std::string(to_string(r.tag));
  j["e"] = r.e;
  j["f"] = r.f;
  j["defect"] = r.defect;
  j["t"] = vs(r.t);
  j["sw"] = vs(r.sw);
  j["j"] = vs(r.j);
  j["i"] = vs(r.i);
  j["H_gen_val"] = vs(r.H_gen_val);
  j["iterations"] = r.iterations;
  j["model"] = r.model;
  j["descended"] = r.descended;
  j["m"] = r.m;
  if (w_normalized) {
    const long dl = r.value_denominator_L();
    j["w_normalized"] = {{"D_L", dl},
                         {"sw", scaled_int(r.sw, dl)},
                         {"j", scaled_int(r.j, dl)},
                         {"i", scaled_int(r.i, dl)},
                         {"H_gen_val", scaled_int(r.H_gen_val, dl)}};
  }
  return j;
}

json to_json(const VerificationResult& r) {
  json j;
  j["theorem"] = r.theorem;
  j["pass"] = r.pass;
  j["samples"] = r.samples;
  j["seed"] = r.seed;
  j["min_attained"] = r.has_min ? json(vs(r.min_attained)) : json(nullptr);
  json w = json::array();
  for (const auto& x : r.witnesses) w.push_back({{"label", x.label}, {"expr", x.expr}, {"value", vs(x.value)}});
  j["witnesses"] = w;
  j["failures"] = r.failures;
  j["flags"] = r.flags;
  return j;
}

json to_json(const DefectCertificate& c, bool w_normalized) {
  json j;
  j["description"] = c.description;
  json stages = json::array();
  for (const auto& s : c.stages)
    stages.push_back({{"index", s.index}, {"n", s.n}, {"h", s.h}, {"report", to_json(s.report, w_normalized)}});
  j["stages"] = stages;
  json sws = json::array();
  for (const auto& s : c.sws) sws.push_back(vs(s));
  j["sws"] = sws;
  j["strictly_decreasing"] = c.strictly_decreasing;
  j["inf_candidate"] = c.inf_candidate ? vs(*c.inf_candidate) : "none attained within stages";
  json cross = json::array();
  for (const auto& x : c.cross)
    cross.push_back({{"from", x.from}, {"to", x.to}, {"status", x.status}, {"detail", x.detail}});
  j["cross_stage"] = cross;
  return j;
}

FamilySpec parse_family(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& ex) {
    throw Error(ErrorKind::MalformedFamily, std::string("family file is not valid JSON: ") + ex.what());
  }
  FamilySpec f;
  try {
    if (!j.is_object()) throw Error(ErrorKind::MalformedFamily, "family must be a JSON object");
    f.p = j.at("p").get<long>();
    const json& base = j.value("base", json::object());
    f.with_u = base.value("with_u", false);
    if (base.contains("tower_levels")) f.tower_levels = base.at("tower_levels").get<std::vector<int>>();
    for (const auto& s : j.at("stages")) f.stages.push_back({s.at("n").get<int>(), s.at("h").get<std::string>()});
    f.description = j.value("description", std::string());
  } catch (const json::exception& ex) {
    throw Error(ErrorKind::MalformedFamily, std::string("bad family: ") + ex.what());
  }
  if (f.stages.empty()) throw Error(ErrorKind::MalformedFamily, "family has no stages");
  return f;
}

FamilySpec load_family(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::MalformedFamily, "cannot read family file " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return parse_family(os.str());
}

}  // namespace kummer
