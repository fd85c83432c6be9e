#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "classprod/cli.hpp"

using namespace classprod;
using nlohmann::ordered_json;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name,
                                const std::string& content) {
  std::filesystem::path p =
      std::filesystem::temp_directory_path() / ("classprod_test_" + name);
  std::ofstream f(p, std::ios::binary);
  f << content;
  return p;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::ostringstream buf;
  buf << f.rdbuf();
  return buf.str();
}

void erase_elapsed(ordered_json& j) {
  if (j.is_object()) {
    j.erase("elapsed_ms");
    for (auto& [k, v] : j.items()) erase_elapsed(v);
  } else if (j.is_array()) {
    for (auto& v : j) erase_elapsed(v);
  }
}

}  // namespace

TEST(CliEta, TextOutput) {
  CliRun r = run({"eta", "--named", "extraspecial_p3", "--p", "3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("eta(AA^-1) = 3"), std::string::npos);
  EXPECT_NE(r.out.find("dl(G/C_G(A)) = 1 <= 2*eta(AA^-1) - 1 = 5"),
            std::string::npos);
}

TEST(CliEta, JsonOutput) {
  CliRun r = run({"eta", "--named", "quaternion8", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  ordered_json j = ordered_json::parse(r.out);
  EXPECT_EQ(j["group"], "Q8");
  EXPECT_EQ(j["class_rep"], 2);
  EXPECT_EQ(j["class_size"], 2);
  EXPECT_EQ(j["eta_aa"], 2);
  EXPECT_EQ(j["dl_mod_centralizer"], 1);
  EXPECT_EQ(j["bound"], 3);
}

TEST(CliEta, ExplicitClassRep) {
  CliRun r = run({"eta", "--named", "symmetric", "--n", "4", "--class-rep",
                  "9", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  ordered_json j = ordered_json::parse(r.out);
  EXPECT_EQ(j["class_size"], 6);
  EXPECT_EQ(j["eta_aa"], 3);
  EXPECT_EQ(j["dl_mod_centralizer"], 3);
}

TEST(CliVerify, SingleGroupAllChecks) {
  CliRun r = run({"verify", "--named", "cyclic", "--n", "12"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("[PASS] theorem_B on C12"), std::string::npos);
  EXPECT_NE(r.out.find(" 0 fail"), std::string::npos);
}

TEST(CliVerify, SkipCarriesReason) {
  CliRun r =
      run({"verify", "--named", "symmetric", "--n", "4", "--suite",
           "theorem_B"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("[SKIP] theorem_B on S4 -- not supersolvable"),
            std::string::npos);
}

TEST(CliVerify, SuiteFilterKeepsRegistryOrder) {
  CliRun r = run({"verify", "--named", "symmetric", "--n", "3", "--suite",
                  "lemma_5_1,theorem_B", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  ordered_json j = ordered_json::parse(r.out);
  ASSERT_EQ(j["reports"].size(), 2u);
  EXPECT_EQ(j["reports"][0]["check_name"], "theorem_B");
  EXPECT_EQ(j["reports"][1]["check_name"], "lemma_5_1");
  EXPECT_EQ(j["summary"]["fail"], 0);
  EXPECT_EQ(j["summary"]["total"], 2);
}

TEST(CliVerify, ThreadCountDoesNotChangeJson) {
  std::filesystem::path spec = temp_file(
      "verify_threads.jsonl",
      "{\"type\":\"named\",\"name\":\"dihedral\",\"n\":6}\n"
      "{\"type\":\"named\",\"name\":\"cyclic\",\"n\":9}\n"
      "{\"type\":\"named\",\"name\":\"quaternion8\"}\n");
  auto go = [&](const char* threads) {
    CliRun r = run({"verify", "--spec", spec.string(), "--suite",
                    "theorem_B,lemma_4_2,lemma_5_1", "--format", "json",
                    "--threads", threads});
    EXPECT_EQ(r.code, 0);
    ordered_json j = ordered_json::parse(r.out);
    erase_elapsed(j);
    return j;
  };
  EXPECT_EQ(go("1"), go("2"));
  std::filesystem::remove(spec);
}

TEST(CliInspect, JsonFields) {
  CliRun r = run({"inspect", "--named", "symmetric", "--n", "4", "--format",
                  "json"});
  ASSERT_EQ(r.code, 0);
  ordered_json j = ordered_json::parse(r.out);
  EXPECT_EQ(j["order"], 24);
  EXPECT_EQ(j["abelian"], false);
  EXPECT_EQ(j["solvable"], true);
  EXPECT_EQ(j["derived_length"], 3);
  EXPECT_EQ(j["supersolvable"], false);
  EXPECT_EQ(j["center_order"], 1);
  EXPECT_EQ(j["class_count"], 5);
  EXPECT_EQ(j["chief_factor_orders"], (std::vector<int>{4, 3, 2}));
}

TEST(CliClasses, TextOutput) {
  CliRun r = run({"classes", "--named", "symmetric", "--n", "3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("3 conjugacy classes"), std::string::npos);
  EXPECT_NE(r.out.find("rep 0: size 1"), std::string::npos);
  EXPECT_NE(r.out.find("rep 1: size 3"), std::string::npos);
  EXPECT_NE(r.out.find("rep 3: size 2"), std::string::npos);
}

TEST(CliScan, StdoutCsvStderrSummary) {
  CliRun r = run({"scan", "--named", "symmetric", "--n", "3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out,
            "group,order,solvable,supersolvable,class_rep,class_size,"
            "eta_aa,dl_mod_centralizer\n"
            "S3,6,true,true,0,1,1,0\n"
            "S3,6,true,true,1,3,2,2\n"
            "S3,6,true,true,3,2,2,1\n");
  EXPECT_NE(r.err.find("scan: 1 groups"), std::string::npos);
}

TEST(CliScan, OutFileGetsCsvSummaryToStdout) {
  std::filesystem::path csv =
      std::filesystem::temp_directory_path() / "classprod_test_scan.csv";
  CliRun r = run(
      {"scan", "--named", "quaternion8", "--out", csv.string()});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("scan: 1 groups"), std::string::npos);
  EXPECT_EQ(slurp(csv),
            "group,order,solvable,supersolvable,class_rep,class_size,"
            "eta_aa,dl_mod_centralizer\n"
            "Q8,8,true,true,0,1,1,0\n"
            "Q8,8,true,true,1,1,1,0\n"
            "Q8,8,true,true,2,2,2,1\n"
            "Q8,8,true,true,4,2,2,1\n"
            "Q8,8,true,true,6,2,2,1\n");
  std::filesystem::remove(csv);
}

TEST(CliScan, JsonFormat) {
  CliRun r =
      run({"scan", "--named", "symmetric", "--n", "4", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  ordered_json j = ordered_json::parse(r.out);
  ASSERT_EQ(j["rows"].size(), 5u);
  bool found = false;
  for (const auto& row : j["rows"])
    if (row["class_rep"] == 9) {
      found = true;
      EXPECT_EQ(row["eta_aa"], 3);
      EXPECT_EQ(row["dl_mod_centralizer"], 3);
      EXPECT_EQ(row["supersolvable"], false);
    }
  EXPECT_TRUE(found);
  ASSERT_EQ(j["summary"]["least_q"].size(), 3u);
}

TEST(CliScan, ThreadsProduceIdenticalBytes) {
  std::filesystem::path spec = temp_file(
      "scan_threads.jsonl",
      "{\"type\":\"named\",\"name\":\"dihedral\",\"n\":7}\n"
      "{\"type\":\"named\",\"name\":\"symmetric\",\"n\":4}\n"
      "{\"type\":\"named\",\"name\":\"cyclic\",\"n\":10}\n");
  CliRun a = run({"scan", "--spec", spec.string(), "--threads", "1"});
  CliRun b = run({"scan", "--spec", spec.string(), "--threads", "4"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(b.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.err, b.err);
  std::filesystem::remove(spec);
}

TEST(CliSpecFile, MultipleGroups) {
  std::filesystem::path spec = temp_file(
      "multi.jsonl",
      "{\"type\":\"named\",\"name\":\"cyclic\",\"n\":6}\n"
      "\n"
      "{\"type\":\"direct\",\"components\":["
      "{\"type\":\"named\",\"name\":\"cyclic\",\"n\":2},"
      "{\"type\":\"named\",\"name\":\"symmetric\",\"n\":3}]}\n");
  CliRun r = run({"inspect", "--spec", spec.string()});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("group C6: order 6"), std::string::npos);
  EXPECT_NE(r.out.find("order 12"), std::string::npos);
  std::filesystem::remove(spec);
}

TEST(CliErrors, UsageAndBuildProblems) {
  EXPECT_EQ(run({"verify", "--named", "symmetric", "--n", "3", "--suite",
                 "bogus"})
                .code,
            2);
  EXPECT_NE(run({"verify", "--named", "symmetric", "--n", "3", "--suite",
                 "bogus"})
                .err.find("unknown check name"),
            std::string::npos);
  EXPECT_EQ(run({"eta"}).code, 2);  // no input
  CliRun abelian = run({"eta", "--named", "cyclic", "--n", "7"});
  EXPECT_EQ(abelian.code, 2);
  EXPECT_NE(abelian.err.find("abelian"), std::string::npos);
  EXPECT_EQ(
      run({"eta", "--named", "symmetric", "--n", "3", "--class-rep", "99"})
          .code,
      2);
  EXPECT_EQ(run({"inspect", "--named", "nosuch"}).code, 2);
  CliRun nofile = run({"inspect", "--spec", "/nonexistent/specs.jsonl"});
  EXPECT_EQ(nofile.code, 2);
  EXPECT_NE(nofile.err.find("cannot open spec file"), std::string::npos);
  EXPECT_EQ(run({"inspect", "--named", "symmetric", "--n", "3", "--format",
                 "yaml"})
                .code,
            2);
  EXPECT_EQ(run({}).code, 2);  // missing subcommand
  EXPECT_EQ(
      run({"inspect", "--named", "cyclic", "--n", "30", "--max-order", "10"})
          .code,
      2);
  EXPECT_EQ(run({"scan", "--named", "cyclic", "--n", "6", "--threads", "0"})
                .code,
            2);
}

TEST(CliHelp, ExitsZero) {
  CliRun r = run({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("classprod"), std::string::npos);
}
