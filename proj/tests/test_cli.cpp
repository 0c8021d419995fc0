// End-to-end tests of the command-line tool: exit codes, file contracts,
// reproducibility. The binary path comes from the build system.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct CmdResult {
  int exit_code;
  std::string out;
};

CmdResult run_cli(const std::string& args) {
  const std::string cmd =
      std::string(SOSGGM_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) {
    out.append(buf.data(), got);
  }
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

fs::path tmp_file(const std::string& name) {
  return fs::temp_directory_path() / ("sosggm_cli_" + name);
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("solve writes the law list and verify round-trips it") {
  const fs::path out = tmp_file("laws.json");
  const CmdResult solve =
      run_cli("solve --k 2 --tau 8 --out " + out.string());
  CHECK(solve.exit_code == 0);

  const json doc = json::parse(slurp(out));
  REQUIRE(doc.contains("laws"));
  CHECK(doc.at("laws").size() == 7);
  CHECK(doc.at("manifest").at("command") == "solve");
  int asym = 0;
  for (const auto& law : doc.at("laws")) {
    CHECK(law.at("valid").get<bool>());
    if (law.at("family") == "asymmetric") ++asym;
  }
  CHECK(asym == 4);

  const CmdResult verify = run_cli("verify " + out.string());
  CHECK(verify.exit_code == 0);
  CHECK(verify.out.find("7 laws, 7 pass, 0 fail") != std::string::npos);
  fs::remove(out);
}

TEST_CASE("solve with only the trivial law still succeeds") {
  const CmdResult r = run_cli("solve --k 2 --tau 3");
  CHECK(r.exit_code == 0);
  const json doc = json::parse(r.out);
  CHECK(doc.at("laws").size() == 1);
  CHECK(doc.at("laws").at(0).at("family") == "trivial");
}

TEST_CASE("verify flags a hand-edited law") {
  const fs::path out = tmp_file("edited.json");
  REQUIRE(run_cli("solve --k 2 --tau 8 --out " + out.string()).exit_code == 0);
  json doc = json::parse(slurp(out));
  doc["laws"][2]["a"] = doc["laws"][2]["a"].get<double>() + 0.01;
  std::ofstream(out) << doc.dump(2);

  const CmdResult verify = run_cli("verify " + out.string());
  CHECK(verify.exit_code == 1);
  CHECK(verify.out.find("FAIL") != std::string::npos);
  CHECK(verify.out.find("1 fail") != std::string::npos);
  fs::remove(out);
}

TEST_CASE("verify reports the sign contradiction for a+b above tau") {
  const fs::path out = tmp_file("contradiction.json");
  const json law = {
      {"k", 2},     {"theta", 4.0 - std::sqrt(15.0)},
      {"tau", 8.0}, {"a", 5.0},
      {"b", 5.0},   {"family", "symmetric"},
      {"multiplicity", 1},
      {"valid", false},
      {"residuals",
       {{"recursion", 0.0}, {"fixed_point", 0.0}, {"norm_identity", 0.0}}}};
  std::ofstream(out) << json{{"laws", json::array({law})}}.dump(2);
  const CmdResult verify = run_cli("verify " + out.string());
  CHECK(verify.exit_code == 1);
  CHECK(verify.out.find("sign_contradiction") != std::string::npos);
  CHECK(verify.out.find("FAIL") != std::string::npos);
  fs::remove(out);
}

TEST_CASE("verify accepts an empty law list") {
  const fs::path out = tmp_file("empty.json");
  std::ofstream(out) << R"({"laws": []})";
  const CmdResult verify = run_cli("verify " + out.string());
  CHECK(verify.exit_code == 0);
  CHECK(verify.out.find("0 laws") != std::string::npos);
  fs::remove(out);
}

TEST_CASE("malformed input exits 2") {
  const fs::path out = tmp_file("garbage.json");
  std::ofstream(out) << "this is not json";
  CHECK(run_cli("verify " + out.string()).exit_code == 2);
  fs::remove(out);
  CHECK(run_cli("verify /nonexistent/file.json").exit_code == 2);
}

TEST_CASE("parameter validation exits 2") {
  CHECK(run_cli("solve --k 1 --tau 8").exit_code == 2);
  CHECK(run_cli("solve --k 2").exit_code == 2);
  CHECK(run_cli("solve --k 2 --theta 0.5 --tau 8").exit_code == 2);
  CHECK(run_cli("solve --k 2 --theta 1.5").exit_code == 2);
  CHECK(run_cli("solve --k 2 --tau 2").exit_code == 2);
  CHECK(run_cli("nonsense").exit_code == 2);
  CHECK(run_cli("solve --k 2 --tau 8 --bogus-flag 1").exit_code == 2);
  CHECK(run_cli("sweep --k 2 --tau 9 --steps 7").exit_code == 2);
}

TEST_CASE("help and version exit 0") {
  CHECK(run_cli("--help").exit_code == 0);
  CHECK(run_cli("solve --help").exit_code == 0);
  CHECK(run_cli("--version").exit_code == 0);
}

TEST_CASE("marginal: table JSON and budget refusal") {
  const fs::path out = tmp_file("table.json");
  const CmdResult r = run_cli(
      "marginal --k 2 --theta 0.5 --radius 1 --truncation 3 --out " +
      out.string());
  CHECK(r.exit_code == 0);
  const json doc = json::parse(slurp(out));
  CHECK(doc.at("truncation") == 3);
  CHECK(doc.at("edges").size() == 3);
  CHECK(doc.at("entries").size() == 7 * 7 * 7);
  double sum = 0.0;
  for (const auto& e : doc.at("entries")) sum += e.at("p").get<double>();
  CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
  fs::remove(out);

  CHECK(run_cli("marginal --k 2 --theta 0.5 --radius 2 --truncation 20")
            .exit_code == 4);
  CHECK(run_cli("marginal --k 2 --theta 0.5 --radius 1 --truncation 8 "
                "--budget 10")
            .exit_code == 4);
}

TEST_CASE("sample: byte-identical reruns under a fixed seed") {
  const fs::path out1 = tmp_file("s1.csv");
  const fs::path out2 = tmp_file("s2.csv");
  const std::string args =
      "sample --k 2 --tau 8 --a 2.618034 --b 2.618034 --radius 2 --n 200 "
      "--seed 42 --out ";
  CHECK(run_cli(args + out1.string()).exit_code == 0);
  CHECK(run_cli(args + out2.string()).exit_code == 0);
  const std::string csv1 = slurp(out1);
  CHECK(csv1 == slurp(out2));
  CHECK(csv1.rfind("e0,e1,e2,e3,e4,e5,e6,e7,e8\n", 0) == 0);
  CHECK(std::count(csv1.begin(), csv1.end(), '\n') == 201);

  const json manifest = json::parse(slurp(out1.string() + ".manifest.json"));
  CHECK(manifest.at("seed") == 42);
  CHECK(manifest.at("command") == "sample");

  fs::remove(out1);
  fs::remove(out2);
  fs::remove(out1.string() + ".manifest.json");
  fs::remove(out2.string() + ".manifest.json");
}

TEST_CASE("sweep CSV has one symmetric transition across tau_c") {
  const CmdResult r = run_cli("sweep --k 2 --tau 3..9 --steps 7");
  CHECK(r.exit_code == 0);
  std::istringstream lines(r.out);
  std::string line;
  std::getline(lines, line);
  CHECK(line ==
        "k,theta,tau,n_sym_distinct,n_asym_pairs,n_valid,tau_c,regime,"
        "paper_discrepancy");
  int transitions = 0;
  int prev = -1;
  while (std::getline(lines, line)) {
    std::istringstream cells(line);
    std::string cell;
    std::getline(cells, cell, ',');  // k
    std::getline(cells, cell, ',');  // theta
    std::getline(cells, cell, ',');  // tau
    std::getline(cells, cell, ',');  // n_sym
    const int n_sym = std::stoi(cell);
    if (prev >= 0 && n_sym != prev) ++transitions;
    prev = n_sym;
  }
  CHECK(transitions == 1);
  CHECK(r.out.find("critical,true") != std::string::npos);
}

TEST_CASE("tauc CSV matches the closed form") {
  const CmdResult r = run_cli("tauc --k 2..5");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "k,tau_c\n2,6\n3,4\n4,3.33333333\n5,3\n");
}
