#include <filesystem>
#include <fstream>
#include <sstream>

#include "commands.hpp"
#include "doctest.h"

using namespace orbk::cli;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "orbk");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json run_json(std::vector<std::string> args) {
  args.push_back("--json");
  const Run r = run_cli(args);
  REQUIRE(r.code == 0);
  return nlohmann::json::parse(r.out);
}

const CheckResult& find_check(const Report& r, const std::string& name) {
  for (const auto& c : r.checks)
    if (c.name == name) return c;
  FAIL("no check named " << name);
  return r.checks.front();
}

std::filesystem::path temp_dir(const std::string& name) {
  auto p = std::filesystem::temp_directory_path() / ("orbk_cli_" + name);
  std::filesystem::remove_all(p);
  std::filesystem::create_directories(p);
  return p;
}

}  // namespace

TEST_CASE("verify passes on small groups") {
  const Run r = run_cli({"verify", "--group", "elemab:2,2", "--trials", "10", "--seed", "7"});
  CHECK(r.code == 0);
  CHECK(r.out.find("[FAIL]") == std::string::npos);
  CHECK(r.out.find("result: PASS (4/4 checks)") != std::string::npos);

  CHECK(run_cli({"verify", "--group", "cyclic:1", "--trials", "3"}).code == 0);
  CHECK(run_cli({"verify", "--group", "symmetric:3", "--degree", "2", "--trials", "3"}).code == 0);
}

TEST_CASE("low degrees skip checks that need more room") {
  const Run r = run_cli({"verify", "--group", "cyclic:3", "--degree", "1", "--trials", "2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("homotopy: not applicable in degree 1") != std::string::npos);
}

TEST_CASE("flipped theta sign fails the homotopy check with a replayable witness") {
  VerifyOptions o;
  o.group.spec = "elemab:2,2";
  o.trials = 4;
  o.seed = 7;
  o.theta_sign = -1;
  const Report r = cmd_verify(o);
  CHECK_FALSE(r.passed());
  const CheckResult& h = find_check(r, "homotopy");
  CHECK_FALSE(h.pass);
  REQUIRE(h.witness.size() == 2);
  CHECK(find_check(r, "delta_squared").pass);
  CHECK(find_check(r, "chain_map").pass);

  // Replaying the witness with the fixture still in place reproduces the failure,
  // and with the real theta the same tuple agrees.
  VerifyOptions replay = o;
  replay.only_check = "homotopy";
  replay.only_trial = std::stoi(h.replay.substr(h.replay.find("--trial ") + 8));
  replay.check_tuple = h.witness;
  CHECK_FALSE(cmd_verify(replay).passed());
  replay.theta_sign = 1;
  CHECK(cmd_verify(replay).passed());

  const std::string text = render_text(r, false);
  CHECK(text.find("[FAIL] homotopy") != std::string::npos);
  CHECK(text.find("--check-tuple") != std::string::npos);
  const auto j = nlohmann::json::parse(render_json(r, false));
  CHECK(j["result"] == "fail");
  CHECK(j["checks"][2]["witness"].size() == 2);
}

TEST_CASE("check-tuple replay through the command line") {
  const Run ok = run_cli({"verify", "--group", "elemab:2,2", "--check", "chain_map", "--trial", "3",
                          "--check-tuple", "1,2,3"});
  CHECK(ok.code == 0);
  CHECK(ok.out.find("[PASS] chain_map: lhs ") != std::string::npos);
  CHECK(run_cli({"verify", "--group", "elemab:2,2", "--check", "chain_map", "--check-tuple", "1,2"}).code == 2);
  CHECK(run_cli({"verify", "--group", "elemab:2,2", "--check", "nonsense", "--check-tuple", "1"}).code == 2);
  CHECK(run_cli({"verify", "--group", "elemab:2,2", "--check", "chain_map", "--check-tuple", "1,x"}).code == 2);
}

TEST_CASE("transgress of the halved xyz class") {
  const auto j = run_json({"transgress", "--group", "elemab:2,3", "--poly", "xyz", "--bockstein"});
  CHECK(j["result"] == "pass");
  CHECK(j["tables"]["nontrivial_sectors"] == 7);
  CHECK(j["tables"]["total_rank"] == 22);
  const auto& sectors = j["tables"]["sectors"];
  REQUIRE(sectors.size() == 8);
  for (const auto& s : sectors) {
    const bool identity = s["representative"] == 0;
    CHECK(s["class"] == (identity ? "trivial" : "nontrivial"));
    CHECK(s["twisted_rank"] == (identity ? 8 : 2));
  }
}

TEST_CASE("transgress of the lifted squares is trivial in every sector") {
  const auto j = run_json({"transgress", "--group", "elemab:2,2", "--poly", "x4|y4|x2y2", "--bockstein"});
  CHECK(j["tables"]["nontrivial_sectors"] == 0);
  for (const auto& s : j["tables"]["sectors"]) CHECK(s["class"] == "trivial");
}

TEST_CASE("transgress of the zero cocycle gives untwisted ranks") {
  const auto dir = temp_dir("zero");
  const auto file = dir / "zero.cochain";
  std::ofstream(file) << "degree 3\n";
  const auto j = run_json({"transgress", "--group", "symmetric:3", "--cocycle", file.string()});
  CHECK(j["tables"]["nontrivial_sectors"] == 0);
  // Untwisted rank of Z(g) is its class count: 3 for S3, 2 for Z/2, 3 for Z/3.
  std::vector<int> ranks;
  for (const auto& s : j["tables"]["sectors"]) ranks.push_back(s["twisted_rank"]);
  CHECK(ranks == std::vector<int>{3, 2, 3});
  CHECK(j["tables"]["total_rank"] == 8);
}

TEST_CASE("transgress writes readable sector files") {
  const auto dir = temp_dir("out");
  const Run r = run_cli({"transgress", "--group", "elemab:2,3", "--poly", "x2yz|xy2z|xyz2", "--bockstein", "--out-dir",
                         (dir / "sectors").string()});
  CHECK(r.code == 0);
  int files = 0;
  for (const auto& e : std::filesystem::directory_iterator(dir / "sectors")) {
    ++files;
    std::ifstream in(e.path());
    std::string line;
    std::getline(in, line);
    CHECK(line.rfind("#", 0) == 0);
    std::getline(in, line);
    CHECK(line == "degree 2");
  }
  CHECK(files == 8);
}

TEST_CASE("input errors exit with code 2") {
  CHECK(run_cli({"verify", "--group", "nope:3"}).code == 2);
  CHECK(run_cli({"verify", "--group", "cyclic:100"}).code == 2);
  CHECK(run_cli({"verify", "--group", "cyclic:6", "--max-order", "4", "--trials", "1"}).code == 2);
  CHECK(run_cli({"verify", "--group", "cyclic:6", "--max-order", "6", "--trials", "1"}).code == 0);
  CHECK(run_cli({"verify"}).code == 2);
  CHECK(run_cli({"verify", "--bogus"}).code == 2);
  CHECK(run_cli({}).code == 2);
  CHECK(run_cli({"transgress", "--group", "cyclic:2"}).code == 2);
  CHECK(run_cli({"transgress", "--group", "cyclic:2", "--cocycle", "/nonexistent/file"}).code == 2);
  CHECK(run_cli({"transgress", "--group", "cyclic:3", "--poly", "x"}).code == 2);

  const auto dir = temp_dir("bad");
  const auto file = dir / "bad.cochain";
  std::ofstream(file) << "degree 3\n1 1 0 1/4\n";
  const Run r = run_cli({"transgress", "--group", "cyclic:2", "--cocycle", file.string()});
  CHECK(r.code == 2);
  CHECK(r.err.find("not a cocycle") != std::string::npos);
  CHECK(run_cli({"fusion-table", "--group", "cyclic:2", "--cocycle", file.string()}).code == 2);
}

TEST_CASE("group files") {
  const auto dir = temp_dir("group");
  const auto table = dir / "z3.group";
  std::ofstream(table) << "order 3\n0 1 2\n1 2 0\n2 0 1\n";
  CHECK(run_cli({"verify", "--group-file", table.string(), "--trials", "2"}).code == 0);
  const auto shorthand = dir / "d.group";
  std::ofstream(shorthand) << "product\ncyclic 2\ncyclic 2\n";
  const Run r = run_cli({"transgress", "--group-file", shorthand.string(), "--poly", "x2y|xy2"});
  CHECK(r.code == 0);
  CHECK(run_cli({"verify", "--group", "cyclic:2", "--group-file", table.string()}).code == 2);
}

TEST_CASE("fusion-table on untwisted Z/2") {
  const auto j = run_json({"fusion-table", "--group", "cyclic:2"});
  CHECK(j["tables"]["rank"] == 4);
  // Z/2 x Z/2 group algebra: every product is a single basis element and each row is a permutation.
  std::vector<std::vector<int>> mult(4, std::vector<int>(4, -1));
  for (const auto& e : j["tables"]["structure_constants"]) {
    CHECK(e[3] == 1);
    const int i = e[0], k = e[1];
    CHECK(mult[i][k] == -1);
    mult[i][k] = e[2];
    mult[k][i] = e[2];
  }
  for (int i = 0; i < 4; ++i) {
    std::vector<int> row = mult[i];
    std::sort(row.begin(), row.end());
    CHECK(row == std::vector<int>{0, 1, 2, 3});
    CHECK(mult[i][i] == 0);
  }
}

TEST_CASE("fusion-table on untwisted S3 and twisted (Z/2)^3") {
  const auto s3 = run_json({"fusion-table", "--group", "symmetric:3"});
  CHECK(s3["tables"]["rank"] == 8);
  CHECK(s3["result"] == "pass");

  const auto j = run_json({"fusion-table", "--group", "elemab:2,3", "--poly", "xyz", "--bockstein"});
  CHECK(j["tables"]["rank"] == 22);
  for (const auto& c : j["checks"]) CHECK(c["status"] == "pass");
  for (const auto& e : j["tables"]["structure_constants"]) CHECK(e[3].get<long>() > 0);
}

TEST_CASE("reports do not depend on the worker count") {
  const auto a = run_cli({"verify", "--group", "symmetric:3", "--trials", "6", "--seed", "3", "--workers", "1"});
  const auto b = run_cli({"verify", "--group", "symmetric:3", "--trials", "6", "--seed", "3", "--workers", "5"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);

  const auto c = run_cli({"fusion-table", "--group", "elemab:2,3", "--poly", "xyz", "--bockstein", "--json"});
  const auto d = run_cli(
      {"fusion-table", "--group", "elemab:2,3", "--poly", "xyz", "--bockstein", "--json", "--workers", "7"});
  CHECK(c.out == d.out);

  VerifyOptions o;
  o.group.spec = "dihedral:4";
  o.trials = 5;
  o.theta_sign = -1;
  o.workers = 1;
  const std::string one = render_json(cmd_verify(o), false);
  o.workers = 4;
  CHECK(render_json(cmd_verify(o), false) == one);
}

TEST_CASE("timing is opt-in") {
  const auto a = run_cli({"verify", "--group", "cyclic:2", "--trials", "1"});
  CHECK(a.out.find("timing") == std::string::npos);
  const auto b = run_cli({"verify", "--group", "cyclic:2", "--trials", "1", "--timing"});
  CHECK(b.out.find("timing total") != std::string::npos);
}
