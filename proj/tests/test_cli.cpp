#include <gtest/gtest.h>

#include <cstdlib>
#include <json.hpp>
#include <sstream>

#include "cli.hpp"

using kummer::cli::run;
using json = nlohmann::json;

namespace {

std::string data_dir() {
  const char* d = std::getenv("KUMMER_DATA");
  return d ? d : "data";
}

struct Out {
  int code;
  std::string out, err;
};

Out call(const std::vector<std::string>& args) {
  std::ostringstream o, e;
  int c = run(args, o, e);
  return {c, o.str(), e.str()};
}

}  // namespace

TEST(Cli, ClassifyJson) {
  Out r = call({"classify", "--p", "3", "--h", "z"});
  ASSERT_EQ(r.code, 0) << r.err;
  json j = json::parse(r.out);
  EXPECT_EQ(j["schema"], 1);
  EXPECT_EQ(j["report"]["case"], "WILD_II");
  EXPECT_EQ(j["report"]["sw"], "3/2");
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(call({"classify", "--p", "2", "--h", "4"}).code, 2);
  EXPECT_EQ(call({"classify", "--p", "3", "--h", "1+"}).code, 3);
  EXPECT_EQ(call({"classify", "--p", "3", "--h", "w"}).code, 3);
  EXPECT_EQ(call({"classify", "--p", "3", "--with-u", "--tower", "1", "--h", "5", "--max-iter", "1"}).code, 4);
  EXPECT_EQ(call({"classify", "--p", "4", "--h", "2"}).code, 5);
  EXPECT_EQ(call({"classify", "--p", "3", "--h", "0"}).code, 5);
  EXPECT_EQ(call({"classify", "--p", "3"}).code, 5);
  EXPECT_EQ(call({"classify", "--p", "3", "--h", "z", "--max-iter", "0"}).code, 5);
  EXPECT_EQ(call({"classify", "--p", "3", "--h", "z", "--output", "xml"}).code, 5);
  EXPECT_EQ(call({"verify", "nothing", "--p", "3", "--h", "z"}).code, 5);
  EXPECT_EQ(call({}).code, 5);
  EXPECT_EQ(call({"defect-scan", "--family", "/nonexistent.json"}).code, 3);
}

TEST(Cli, VerifyPasses) {
  Out r = call({"verify", "h-eq-n", "--p", "2", "--h", "-1", "--samples", "50"});
  ASSERT_EQ(r.code, 0) << r.out << r.err;
  json j = json::parse(r.out);
  EXPECT_TRUE(j["pass"].get<bool>());
  EXPECT_EQ(j["schema"], 1);
}

TEST(Cli, RepeatRunsAreByteIdentical) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"verify", "all", "--p", "3", "--with-u", "--h", "1+u*z", "--samples", "15", "--seed", "3"},
           {"classify", "--p", "5", "--h", "1+z^5", "--output", "text"},
           {"defect-scan", "--family", data_dir() + "/families/derived_p3.json"}}) {
    Out a = call(args), b = call(args);
    EXPECT_EQ(a.code, b.code);
    EXPECT_EQ(a.out, b.out);
    EXPECT_FALSE(a.out.empty());
  }
}

TEST(Cli, SeedChangesSamplesNotVerdict) {
  Out a = call({"verify", "diagram", "--p", "3", "--h", "z", "--samples", "10", "--seed", "1"});
  Out b = call({"verify", "diagram", "--p", "3", "--h", "z", "--samples", "10", "--seed", "2"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(b.code, 0);
}

TEST(Cli, DefectScanFamilies) {
  Out c = call({"defect-scan", "--family", data_dir() + "/families/constant_p3.json"});
  ASSERT_EQ(c.code, 0) << c.err;
  json jc = json::parse(c.out);
  EXPECT_FALSE(jc["strictly_decreasing"].get<bool>());
  EXPECT_EQ(jc["schema"], 1);
  Out d = call({"defect-scan", "--family", data_dir() + "/families/derived_p3.json"});
  ASSERT_EQ(d.code, 0) << d.err;
  EXPECT_TRUE(json::parse(d.out)["strictly_decreasing"].get<bool>());
}
