#include <catch2/catch.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace {

namespace fs = std::filesystem;

struct RunResult {
  int exit_code;
  std::string output;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(FOP_CLI_PATH) + " " + args + " 2>&1";
  std::array<char, 4096> buf{};
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string scen(const std::string& name) { return std::string(FOP_SCENARIO_DIR) + "/" + name; }

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  REQUIRE(f.good());
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

fs::path fresh_dir(const std::string& tag) {
  fs::path dir = fs::temp_directory_path() / ("fop_cli_test_" + tag);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("build: bundled scenarios pass and write outputs") {
  fs::path dir = fresh_dir("build");
  for (const char* name : {"z2_4", "wreath6", "dihedral6"}) {
    RunResult r = run_cli("build " + scen(std::string(name) + ".scen") + " --out " + dir.string());
    INFO(r.output);
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("[FAIL]") == std::string::npos);
    CHECK(fs::exists(dir / (std::string(name) + "_A.mat")));
    CHECK(fs::exists(dir / (std::string(name) + "_B.mat")));
    CHECK(fs::exists(dir / (std::string(name) + "_report.json")));

    // the machine report is valid JSON carrying the same verdict states
    auto j = nlohmann::json::parse(slurp(dir / (std::string(name) + "_report.json")));
    CHECK(j["scenario"] == name);
    bool all_pass = true;
    for (const auto& v : j["verdicts"])
      if (v["state"] == "FAIL") all_pass = false;
    CHECK(all_pass);
  }
}

TEST_CASE("build: malformed scenario gives exit 2 with a diagnostic") {
  fs::path dir = fresh_dir("malformed");
  fs::path bad = dir / "bad.scen";
  std::ofstream(bad) << "scenario bad\ngroup dihedral 6\ncocycle trivial\nsubgroup H aff:*,9\ncharacter H "
                        "trivial\nsubgroup H2 aff:+,3\ncharacter H2 trivial\nsubgroup K\ncharacter K trivial\n";
  RunResult r = run_cli("build " + bad.string());
  CHECK(r.exit_code == 2);
  CHECK(r.output.find("error") != std::string::npos);
}

TEST_CASE("build: determinism, byte-identical outputs across runs") {
  fs::path d1 = fresh_dir("det1");
  fs::path d2 = fresh_dir("det2");
  for (const char* name : {"z2_4", "dihedral6", "wreath6"}) {
    run_cli("build " + scen(std::string(name) + ".scen") + " --out " + d1.string());
    run_cli("build " + scen(std::string(name) + ".scen") + " --out " + d2.string());
    for (const char* suffix : {"_A.mat", "_B.mat", "_report.txt", "_report.json"})
      CHECK(slurp(d1 / (name + std::string(suffix))) == slurp(d2 / (name + std::string(suffix))));
  }
}

TEST_CASE("build: substitution blocks") {
  fs::path dir = fresh_dir("subst");
  fs::path blocks = dir / "blocks.txt";
  {
    std::ofstream f(blocks);
    for (const char* sym : {"a", "b", "c", "d"}) f << "block " << sym << " 2 1\n1\n-1\n";
  }
  RunResult r = run_cli("build " + scen("z2_4.scen") + " --substitute " + blocks.string() + " --out " +
                        dir.string());
  INFO(r.output);
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("[PASS] substituted_orthogonal") != std::string::npos);
  CHECK(fs::exists(dir / "z2_4_A_sub.csv"));
}

TEST_CASE("family: range handling") {
  SECTION("5..6 passes with gram 32I") {
    fs::path dir = fresh_dir("family");
    RunResult r = run_cli("family 5 6 --out " + dir.string());
    INFO(r.output);
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("[PASS] n=5") != std::string::npos);
    CHECK(r.output.find("[PASS] n=6") != std::string::npos);
    CHECK(fs::exists(dir / "P_5.csv"));
    CHECK(fs::exists(dir / "P_6.csv"));
  }
  SECTION("n=4 is EXPERIMENTAL and does not fail the run") {
    RunResult r = run_cli("family 4 4");
    INFO(r.output);
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("[EXPERIMENTAL] n=4") != std::string::npos);
  }
  SECTION("n=4 under --strict fails") {
    RunResult r = run_cli("family 4 4 --strict");
    CHECK(r.exit_code == 1);
  }
  SECTION("reversed range is a usage error") {
    RunResult r = run_cli("family 6 5");
    CHECK(r.exit_code == 2);
  }
}

TEST_CASE("verify subcommand") {
  std::string fx = std::string(FOP_SCENARIO_DIR) + "/fixtures/";

  SECTION("printed pair verifies orthogonal") {
    RunResult r = run_cli("verify " + fx + "z2_4_printed_A.mat " + fx + "z2_4_printed_B.mat --mode orthogonal");
    INFO(r.output);
    CHECK(r.exit_code == 0);
  }
  SECTION("printed dihedral pair verifies amicable") {
    RunResult r =
        run_cli("verify " + fx + "dihedral6_printed_A.mat " + fx + "dihedral6_printed_B.mat --mode amicable");
    INFO(r.output);
    CHECK(r.exit_code == 0);
  }
  SECTION("A against itself fails orthogonality (and flags the symbol overlap)") {
    RunResult r = run_cli("verify " + fx + "z2_4_printed_A.mat " + fx + "z2_4_printed_A.mat --mode orthogonal");
    CHECK(r.exit_code == 1);
    CHECK(r.output.find("[FAIL] formal_orthogonal") != std::string::npos);
    CHECK(r.output.find("[FAIL] symbol_sets_disjoint") != std::string::npos);
  }
  SECTION("shape mismatch is exit 2") {
    RunResult r = run_cli("verify " + fx + "z2_4_printed_A.mat " + fx + "dihedral6_printed_B.mat");
    CHECK(r.exit_code == 2);
  }
}

TEST_CASE("verify: report files are deterministic") {
  std::string fx = std::string(FOP_SCENARIO_DIR) + "/fixtures/";
  fs::path d1 = fresh_dir("vdet1"), d2 = fresh_dir("vdet2");
  run_cli("verify " + fx + "z2_4_printed_A.mat " + fx + "z2_4_printed_B.mat --out " + d1.string());
  run_cli("verify " + fx + "z2_4_printed_A.mat " + fx + "z2_4_printed_B.mat --out " + d2.string());
  CHECK(slurp(d1 / "verify_report.json") == slurp(d2 / "verify_report.json"));
}
