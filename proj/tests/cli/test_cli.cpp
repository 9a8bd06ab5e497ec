#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>
#include <functional>
#include <sstream>
#include <sys/wait.h>

#include "commands.hpp"

using namespace modrep;
using namespace modrep::cli;

namespace {

std::string data(const std::string& name) { return std::string(MODREP_DATA_DIR) + "/" + name; }

Workbench parse(const std::string& text) {
  std::istringstream in(text);
  return parse_workbench(in, 20000);
}

std::size_t parse_error_line(const std::string& text) {
  try {
    parse(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 9999;
}

int run_binary(const std::string& args) {
  const std::string cmd = std::string(MODREP_BIN) + " " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

Outcome run(const std::string& command, const std::string& file, Config cfg = {}) {
  return run_command_file(command, data(file), cfg);
}

const char* kC2 = "[field]\np = 2\n[group]\ndegree = 2\ngen = (1 2)\n";

// Every leaf of a JSON tree as a pointer.
void leaves(const json& j, const json::json_pointer& at, std::vector<json::json_pointer>& out) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) leaves(v, at / k, out);
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) leaves(j[i], at / i, out);
  } else {
    out.push_back(at);
  }
}

void mutate(json& leaf) {
  if (leaf.is_boolean()) leaf = !leaf.get<bool>();
  else if (leaf.is_number_unsigned()) leaf = leaf.get<std::uint64_t>() + 1;
  else if (leaf.is_string()) leaf = leaf.get<std::string>() + "x";
  else leaf = 0;
}

}  // namespace

TEST(Parser, ReadsEveryModuleKind) {
  auto wb = parse(std::string(kC2) +
                  "[subgroup one]\n"
                  "[module t]\nkind = trivial\n"
                  "[module r]\nkind = regular\n"
                  "[module p]\nkind = permutation\ncosets = one\n"
                  "[module m]\nkind = matrices\ndim = 2\ngen = 0 1 ; 1 0\n"
                  "[module s]\nkind = sum\nparts = t r\n"
                  "[module v]\nover = one\nkind = trivial\n"
                  "[module i]\nkind = induced\nfrom = v\n"
                  "[module w]\nover = one\nkind = restricted\nfrom = r\n");
  EXPECT_EQ(wb.modules.size(), 8u);
  EXPECT_EQ(wb.module("s").module.dim(), 3u);
  EXPECT_EQ(wb.module("i").module, wb.module("r").module);
  EXPECT_EQ(wb.module("w").module.dim(), 2u);
  EXPECT_TRUE(wb.module("v").over_subgroup);
}

TEST(Parser, ReportsLineNumbers) {
  EXPECT_EQ(parse_error_line("[field]\np = 2\n[group]\ndegree = 2\ngen = (1 2\n"), 5u);
  EXPECT_EQ(parse_error_line("[field]\np = 4\n"), 1u);
  EXPECT_EQ(parse_error_line(std::string(kC2) + "[module m]\nkind = matrices\ndim = 2\ngen = 1 1 ; 0\n"), 9u);
  EXPECT_EQ(parse_error_line(std::string(kC2) + "bogus = 1\n"), 6u);
  EXPECT_EQ(parse_error_line("[field]\np = 2\n[grup]\n"), 3u);
  EXPECT_EQ(parse_error_line("p = 2\n"), 1u);
  EXPECT_EQ(parse_error_line(std::string(kC2) + "[module m]\nkind = matrices\ndim = 1\ngen = 2\n"), 9u);
  // Not a representation: (1 2) squared is the identity, [[1 1][0 1]] squared is not over GF(3).
  EXPECT_EQ(parse_error_line("[field]\np = 3\n[group]\ndegree = 2\ngen = (1 2)\n[module m]\nkind = matrices\n"
                             "dim = 2\ngen = 1 1 ; 0 1\n"),
            6u);
  EXPECT_EQ(parse_error_line(std::string(kC2) + "[module a]\nkind = sum\nparts = a\n"), 6u);
}

TEST(Parser, CanonicalFormRoundTrips) {
  for (const char* f : {"regular_c4.mr", "perm_s3_c3.mr", "cyclic_tower.mr", "green_d8.mr", "gf4_c3.mr"}) {
    const auto wb = parse_workbench_file(data(f), 20000);
    const json j = to_json(wb);
    const auto again = workbench_from_json(j, 20000);
    EXPECT_EQ(to_json(again), j) << f;
    for (const auto& [name, m] : wb.modules) EXPECT_EQ(again.module(name).module, m.module) << f << " " << name;
  }
}

TEST(Commands, DecomposeExamples) {
  auto c4 = run("decompose", "regular_c4.mr");
  ASSERT_EQ(c4.exit_code, kOk);
  const auto& r = c4.doc["result"];
  EXPECT_EQ(r["summand_count"], 1);
  EXPECT_EQ(r["summands"][0]["dim"], 4);
  EXPECT_EQ(r["classes"][0]["residue_field"], "GF(2)");

  auto s3 = run("decompose", "perm_s3_c3.mr");
  ASSERT_EQ(s3.exit_code, kOk);
  EXPECT_EQ(s3.doc["result"]["summand_count"], 2);
  EXPECT_EQ(s3.doc["result"]["classes"].size(), 2u);
  for (const auto& c : s3.doc["result"]["classes"]) EXPECT_EQ(c["dim"], 1);

  auto gf4 = run("decompose", "gf4_c3.mr");
  const auto& c = gf4.doc["result"]["classes"][0];
  EXPECT_EQ(c["residue_field"], "GF(2^2)");
  EXPECT_EQ(c["splitting_field"], "GF(2^2)");
  EXPECT_EQ(c["split_count"], 2);
  EXPECT_FALSE(c["absolutely_indecomposable"].get<bool>());
}

TEST(Commands, MalformedFileIsAParseError) {
  auto o = run("decompose", "malformed.mr");
  EXPECT_EQ(o.exit_code, kParseError);
  EXPECT_EQ(o.doc["error"]["line"], 5);
  EXPECT_EQ(run("decompose", "missing.mr").exit_code, kParseError);
}

TEST(Commands, VertexExamples) {
  auto d4 = run("vertex", "trivial_d4.mr");
  ASSERT_EQ(d4.exit_code, kOk);
  EXPECT_EQ(d4.doc["result"]["vertex"]["order"], 8);
  auto c4 = run("vertex", "regular_c4.mr");
  ASSERT_EQ(c4.exit_code, kOk);
  EXPECT_EQ(c4.doc["result"]["vertex"]["order"], 1);
  EXPECT_EQ(c4.doc["result"]["sources"][0]["multiplicity"], 4);

  auto s3 = run("vertex", "perm_s3_c3.mr");
  EXPECT_EQ(s3.exit_code, kDomainError);
  EXPECT_EQ(s3.doc["error"]["code"], "NotIndecomposable");
  EXPECT_EQ(s3.doc["error"]["decomposition"]["summand_count"], 2);
}

TEST(Commands, RelprojExample) {
  auto o = run("relproj", "trivial_c2.mr");
  ASSERT_EQ(o.exit_code, kOk);
  EXPECT_FALSE(o.doc["result"]["verdict"].get<bool>());
  EXPECT_EQ(o.doc["result"]["higman"], o.doc["result"]["summand"]);
  EXPECT_TRUE(o.doc["result"]["alpha"].is_null());
}

TEST(Commands, TowerExample) {
  auto o = run("tower", "cyclic_tower.mr");
  ASSERT_EQ(o.exit_code, kOk);
  const auto& levels = o.doc["result"]["levels"];
  ASSERT_EQ(levels.size(), 3u);
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_EQ(levels[i]["dim"], std::size_t{2} << i);
    EXPECT_EQ(levels[i]["summand_count"], 1);
  }
  EXPECT_TRUE(o.doc["result"]["kernels_p_groups"].get<bool>());
  EXPECT_EQ(o.doc["result"]["end_tower"]["stabilized_degree"], 1);
}

TEST(Commands, GreenExamples) {
  auto neg = run("green", "green_s3.mr");
  ASSERT_EQ(neg.exit_code, kOk);
  const auto& l = neg.doc["result"]["levels"][0];
  EXPECT_FALSE(l["hypothesis"].get<bool>());
  EXPECT_EQ(l["reason"], "index 2 is not a power of 3");
  EXPECT_EQ(l["summand_count"], 2);
  EXPECT_FALSE(l["summands_isomorphic"].get<bool>());

  auto pos = run("green", "green_d8.mr");
  ASSERT_EQ(pos.exit_code, kOk);
  EXPECT_TRUE(pos.doc["result"]["hypotheses_hold"].get<bool>());
  EXPECT_TRUE(pos.doc["result"]["conclusion_holds"].get<bool>());
}

TEST(Commands, ReportsAreDeterministic) {
  for (const auto& [cmd, file] : std::vector<std::pair<std::string, std::string>>{
           {"decompose", "perm_s3_c3.mr"}, {"vertex", "trivial_d4.mr"}, {"tower", "cyclic_tower.mr"}}) {
    Config cfg;
    cfg.seed = 7;
    EXPECT_EQ(run(cmd, file, cfg).doc.dump(), run(cmd, file, cfg).doc.dump()) << cmd;
  }
}

TEST(Verify, AcceptsEveryEmittedCertificate) {
  const std::vector<std::pair<std::string, std::string>> cases{
      {"decompose", "regular_c4.mr"}, {"decompose", "perm_s3_c3.mr"}, {"decompose", "gf4_c3.mr"},
      {"decompose", "trivial_d4.mr"}, {"vertex", "trivial_d4.mr"},    {"vertex", "regular_c4.mr"},
      {"vertex", "perm_s3_c3.mr"},    {"relproj", "trivial_c2.mr"},   {"tower", "cyclic_tower.mr"},
      {"green", "green_s3.mr"},       {"green", "green_d8.mr"}};
  for (const auto& [cmd, file] : cases) {
    auto o = run(cmd, file);
    auto v = run_verify(o.doc);
    EXPECT_EQ(v.exit_code, kOk) << cmd << " " << file << "\n" << v.doc.dump(2);
  }
}

TEST(Verify, RejectsEverySingleEntryMutation) {
  for (const auto& [cmd, file] : std::vector<std::pair<std::string, std::string>>{
           {"decompose", "perm_s3_c3.mr"}, {"relproj", "trivial_c2.mr"}, {"vertex", "regular_c4.mr"}}) {
    const json doc = run(cmd, file).doc;
    std::vector<json::json_pointer> ps;
    leaves(doc, {}, ps);
    for (const auto& p : ps) {
      json m = doc;
      mutate(m[p]);
      EXPECT_EQ(run_verify(m).exit_code, kVerificationFailed) << cmd << " " << p.to_string();
    }
  }
}

TEST(Verify, CertificateChecksCatchResealedMutations) {
  // With the digest recomputed, the certificate checks themselves must object.
  auto checks_fail = [](const json& doc) {
    const auto v = run_verify(doc);
    for (const auto& c : v.doc["checks"]) {
      const auto name = c["check"].get<std::string>();
      if (!c["passed"].get<bool>() && name != "report reproduces bit for bit" && name != "digest matches the report body")
        return true;
    }
    return false;
  };
  const json dec = run("decompose", "perm_s3_c3.mr").doc;
  std::vector<json::json_pointer> ps;
  leaves(dec["result"]["summands"], json::json_pointer("/result/summands"), ps);
  for (const auto& p : ps) {
    const auto s = p.to_string();
    if (s.find("inclusion") == std::string::npos && s.find("projection") == std::string::npos) continue;
    json m = dec;
    mutate(m[p]);
    if (m[p].get<std::uint64_t>() >= 3) m[p] = 0;
    seal(m);
    EXPECT_TRUE(checks_fail(m)) << s;
  }
  for (const char* key : {"/result/verdict", "/result/higman", "/result/summand"}) {
    json m = run("relproj", "trivial_c2.mr").doc;
    mutate(m[json::json_pointer(key)]);
    seal(m);
    EXPECT_TRUE(checks_fail(m)) << key;
  }
  json v = run("vertex", "trivial_d4.mr").doc;
  mutate(v["result"]["classes"][0]["relatively_projective"]);
  seal(v);
  EXPECT_TRUE(checks_fail(v));
  json g = run("decompose", "gf4_c3.mr").doc;
  mutate(g["result"]["classes"][0]["absolutely_indecomposable"]);
  seal(g);
  EXPECT_TRUE(checks_fail(g));
}

TEST(ExitCodes, MapLibraryErrors) {
  EXPECT_EQ(exit_code_for(Errc::CriteriaDisagree), kInternalAssertion);
  EXPECT_EQ(exit_code_for(Errc::InternalAssertion), kInternalAssertion);
  EXPECT_EQ(exit_code_for(Errc::SearchBudgetExceeded), kBudgetExhausted);
  EXPECT_EQ(exit_code_for(Errc::GroupTooLarge), kBudgetExhausted);
  EXPECT_EQ(exit_code_for(Errc::NotIndecomposable), kDomainError);
}

TEST(Binary, ExitCodes) {
  EXPECT_EQ(run_binary("decompose " + data("regular_c4.mr")), 0);
  EXPECT_EQ(run_binary("vertex " + data("perm_s3_c3.mr")), 1);
  EXPECT_EQ(run_binary("decompose " + data("malformed.mr")), 2);
  EXPECT_EQ(run_binary("decompose --no-such-flag " + data("regular_c4.mr")), 2);
  EXPECT_EQ(run_binary("decompose --format xml " + data("regular_c4.mr")), 2);
  EXPECT_EQ(run_binary("decompose --max-group-order 4 " + data("trivial_d4.mr")), 3);
  EXPECT_EQ(run_binary("vertex --budget-subgroups 2 " + data("trivial_d4.mr")), 3);

  const std::string cert = ::testing::TempDir() + "cert.json";
  const std::string other = ::testing::TempDir() + "cert2.json";
  ASSERT_EQ(run_binary("relproj --format structured --out " + cert + " " + data("trivial_c2.mr")), 0);
  ASSERT_EQ(run_binary("relproj --format structured --out " + other + " " + data("trivial_c2.mr")), 0);
  std::ifstream a(cert), b(other);
  std::stringstream sa, sb;
  sa << a.rdbuf();
  sb << b.rdbuf();
  EXPECT_EQ(sa.str(), sb.str());
  EXPECT_EQ(run_binary("verify " + cert), 0);

  json doc = json::parse(sa.str());
  doc["result"]["verdict"] = true;
  std::ofstream(cert) << doc.dump(2);
  EXPECT_EQ(run_binary("verify " + cert), 4);
}
