#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "thue_cli/cli.hpp"

using namespace thue;
using nlohmann::json;

namespace {

std::string fixture(const std::string& name) { return std::string(THUE_FIXTURES_DIR) + "/" + name; }

struct Outcome {
  int code;
  std::string out;
  std::string err;
  json doc() const { return json::parse(out); }
};

Outcome in_process(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::main_with_args(args, out, err);
  return {code, out.str(), err.str()};
}

// Runs the installed binary through the shell; stderr is discarded.
Outcome subprocess(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " '" + std::string(THUE_EXE) + "' " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, "", ""};
  std::string out;
  char buf[4096];
  for (std::size_t n; (n = fread(buf, 1, sizeof buf, pipe)) > 0;) out.append(buf, n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out, ""};
}

}  // namespace

TEST(Cli, FieldCheckReportsInvariants) {
  const Outcome r = in_process({"field-check", fixture("pure_cubic.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  const json d = r.doc();
  EXPECT_EQ(d["degree"], 3);
  EXPECT_EQ(d["discriminant"], "-108");
  EXPECT_EQ(d["signature"], json({1, 1}));
  EXPECT_TRUE(d["almost_totally_imaginary"].get<bool>());
  EXPECT_EQ(d["units"]["rank"], 1);
  EXPECT_TRUE(d["units"]["regulator_consistent"].get<bool>());
}

TEST(Cli, ExitCodesForEachFailureClass) {
  for (const auto& f : std::filesystem::directory_iterator(fixture("invalid"))) {
    const Outcome r = in_process({"field-check", f.path().string()});
    EXPECT_EQ(r.code, cli::kValidation) << f.path();
    EXPECT_TRUE(r.doc().contains("error")) << f.path();
    EXPECT_FALSE(r.err.empty());
  }
  EXPECT_EQ(in_process({"bounds", fixture("totally_real_cubic.json"), "--m", "5"}).doc()["error"]["code"],
            "NotAlmostTotallyImaginary");
  EXPECT_EQ(in_process({"bounds", "--D", "2", "--c", "1", "--m", "1"}).code, cli::kValidation);
  EXPECT_EQ(in_process({"solve-fixed", fixture("form_real_root.json"), "--m", "3"}).doc()["error"]["code"],
            "RealRootPresent");
  EXPECT_EQ(in_process({"stender", "coeffs", "--D", "2", "--c", "3", "--n", "1"}).code, cli::kValidation);
  EXPECT_EQ(in_process({"no-such-command"}).code, cli::kValidation);
  EXPECT_EQ(in_process({"solve-family", fixture("pure_cubic.json"), "--m", "5", "--provider", "file",
                        "--provider-file", fixture("provider_gap.json")})
                .doc()["error"]["code"],
            "ProviderMissing");
  const Outcome close = in_process({"embeddings", fixture("close_roots.json")});
  EXPECT_EQ(close.code, cli::kPrecision);
  EXPECT_EQ(close.doc()["error"]["code"], "PrecisionExhausted");
}

TEST(Cli, StenderVerifyRefutesPrintedB3) {
  const json d = in_process({"stender", "verify", "--D", "2", "--c", "1", "--nmax", "15"}).doc();
  EXPECT_TRUE(d["ok"].get<bool>());
  EXPECT_EQ(d["mismatches"], json::array());
  EXPECT_EQ(d["b3"]["printed"], "2553986");
  EXPECT_EQ(d["b3"]["direct"], "2297986");
  EXPECT_EQ(d["b3"]["printed_status"], "refuted");
}

TEST(Cli, StenderSolveMatchesOracleAndFieldFile) {
  const json solve = in_process({"stender", "solve", "--D", "2", "--c", "1", "--m", "200", "--cap-xy", "20",
                                 "--cap-n", "3"})
                         .doc();
  const json oracle = in_process({"oracle", "--D", "2", "--c", "1", "--m", "200", "--cap-xy", "20", "--cap-n", "3"})
                          .doc();
  const json family = in_process({"solve-family", fixture("stender_d2_c1.json"), "--m", "200", "--cap-xy", "20",
                                  "--cap-A", "3"})
                          .doc();
  EXPECT_EQ(solve["solutions"], oracle["solutions"]);
  EXPECT_EQ(family["solutions"], oracle["solutions"]);
  EXPECT_EQ(solve["count"], 8);
  EXPECT_EQ(solve["completeness"], "capped");
  EXPECT_EQ(solve["skipped"], oracle["skipped"]);
}

TEST(Cli, SolveFixedAgreesWithBruteForce) {
  const json d = in_process({"solve-fixed", fixture("form_sum_of_fourth_powers.json"), "--m", "20"}).doc();
  EXPECT_EQ(d["count"], 12);
  for (const auto& s : d["solutions"]) {
    const long x = std::stol(s["x"].get<std::string>()), y = std::stol(s["y"].get<std::string>());
    EXPECT_EQ(std::to_string(x * x * x * x + y * y * y * y), s["value"].get<std::string>());
  }
}

TEST(Cli, BoundsDumpIsDeterministicAndProviderSelectable) {
  const Outcome a = subprocess("bounds --D 2 --c 1 --m 10");
  const Outcome b = subprocess("bounds --D 2 --c 1 --m 10");
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  const json d = a.doc();
  EXPECT_EQ(d["provider"], "matveev-type");
  EXPECT_TRUE(d["dependency_graph"]["acyclic"].get<bool>());
  const json t = in_process({"bounds", fixture("pure_cubic.json"), "--m", "10", "--provider", "file",
                             "--provider-file", fixture("provider_table.json")})
                     .doc();
  EXPECT_NE(t["provider"].get<std::string>().find("table:"), std::string::npos);
}

TEST(Cli, SubprocessMatchesInProcess) {
  const std::string args = "twist " + fixture("cyclotomic7.json") + " --exponents 2,-1 --torsion 3";
  const Outcome sub = subprocess(args);
  const Outcome in = in_process({"twist", fixture("cyclotomic7.json"), "--exponents", "2,-1", "--torsion", "3"});
  EXPECT_EQ(sub.code, 0);
  EXPECT_EQ(sub.out, in.out);
  EXPECT_EQ(in.doc()["coeffs"].size(), 7u);
  EXPECT_EQ(subprocess("field-check " + fixture("invalid/zero_denominator.json")).code, 2);
}

TEST(Cli, PrecisionFromEnvironmentAndFlag) {
  const auto bits_of = [](const Outcome& o) { return o.doc()["precision_bits"].get<int>(); };
  const std::string input = fixture("pure_cubic.json");
  EXPECT_EQ(bits_of(subprocess("embeddings " + input)), 128);
  EXPECT_EQ(bits_of(subprocess("embeddings " + input, "THUE_PRECISION_BITS=300")), 300);
  EXPECT_EQ(bits_of(subprocess("--precision-bits 200 embeddings " + input, "THUE_PRECISION_BITS=300")), 200);
  EXPECT_EQ(subprocess("embeddings " + input, "THUE_PRECISION_BITS=32").code, 2);
  EXPECT_EQ(subprocess("embeddings " + input, "THUE_PRECISION_BITS=lots").code, 2);
}

TEST(Cli, PrettyAndOutputFile) {
  const Outcome p = in_process({"--pretty", "stender", "solve", "--D", "2", "--c", "1", "--m", "200", "--cap-xy", "5",
                                "--cap-n", "2"});
  ASSERT_EQ(p.code, 0);
  EXPECT_NE(p.out.find("solutions (8)"), std::string::npos) << p.out;
  EXPECT_THROW(json::parse(p.out), json::parse_error);
  const auto path = std::filesystem::path(THUE_SCRATCH_DIR) / "thue_cli_out.json";
  std::filesystem::remove(path);
  const Outcome o = in_process({"-o", path.string(), "stender", "coeffs", "--D", "2", "--c", "-1", "--n", "2"});
  EXPECT_EQ(o.code, 0);
  EXPECT_TRUE(o.out.empty());
  std::ifstream f(path);
  const json d = json::parse(f);
  EXPECT_EQ(d["params"]["c"], -1);
  EXPECT_EQ(d["form"].size(), 5u);
}
