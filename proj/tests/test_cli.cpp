#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "json.hpp"

namespace {

struct Run {
  int code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Run run(const std::string& args) {
  auto err_path = std::filesystem::temp_directory_path() / ("nilrigid_cli_err_" + std::to_string(::getpid()));
  std::string cmd = std::string(NILRIGID_CLI_PATH) + " " + args + " 2>" + err_path.string();
  Run r;
  FILE* p = ::popen(cmd.c_str(), "r");
  REQUIRE(p);
  char buf[4096];
  std::size_t got;
  while ((got = std::fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, got);
  int status = ::pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.err = slurp(err_path);
  std::filesystem::remove(err_path);
  return r;
}

std::string data(const char* name) { return std::string(NILRIGID_TESTDATA_DIR) + "/" + name; }

nlohmann::json parse(const Run& r) {
  INFO(r.out);
  INFO(r.err);
  REQUIRE(r.code == 0);
  return nlohmann::json::parse(r.out);
}

}  // namespace

TEST_CASE("rigidity verdicts from files") {
  auto rigid = parse(run("rigidity " + data("gnla5.json")));
  CHECK(rigid["verdict"] == "rigid");
  CHECK(rigid["certificate"]["kind"] == "ideal_origin_only");
  auto inf = parse(run("rigidity " + data("gnla1.json")));
  CHECK(inf["verdict"] == "infinite");
  CHECK(inf["certificate"]["kind"] == "rank_one_witness");
  CHECK(inf["certificate"]["rank"] == 1);
  auto all = parse(run("rigidity " + data("gnla5.json") + " --method all"));
  CHECK(all["verdict"] == "rigid");
  CHECK(all["cross_check"].is_array());
  auto h = parse(run("rigidity " + data("heisenberg.json")));
  CHECK(h["certificate"]["kind"] == "small_center");
}

TEST_CASE("prolongation output") {
  auto p = parse(run("prolong " + data("h30.json") + " --max-level 6"));
  CHECK(p["terminated"] == true);
  CHECK(p["total_dim"] == 21);
  CHECK(p["level_dims"] == nlohmann::json::array({7, 4, 3, 0}));
  Run b = run("prolong " + data("gnla1.json") + " --max-level 10 --max-unknowns 50");
  auto q = parse(b);
  CHECK(q["budget_exhausted"] == true);
  CHECK(q["terminated"] == false);
  CHECK(b.err.find("unknowns") != std::string::npos);
}

TEST_CASE("a requested verdict that cannot be reached exits with 2") {
  CHECK(run("rigidity " + data("gnla1.json") + " --method prolong --max-level 2").code == 2);
  CHECK(run("rigidity " + data("free3.json") + " --method fast").code == 2);
}

TEST_CASE("usage and validation errors exit with 1") {
  Run bad = run("rigidity " + data("malformed.json"));
  CHECK(bad.code == 1);
  CHECK(bad.err.find("byte 42") != std::string::npos);
  CHECK(run("rigidity " + data("does_not_exist.json")).code == 1);
  CHECK(run("rigidity " + data("gnla1.json") + " --method magic").code == 1);
  CHECK(run("moduli 4 5").code == 1);
  CHECK(run("catalog get gnla9").code == 1);
  CHECK(run("frobnicate").code == 1);
  CHECK(run("jsquared " + data("gnla1.json")).code == 1);  // no H-type metric
}

TEST_CASE("J2 and H-type construction") {
  auto j = parse(run("jsquared " + data("h30.json")));
  CHECK(j["j2"] == true);
  CHECK(j["zero_residual_pairs"].size() == 3);
  auto f = parse(run("htype 2 1"));
  CHECK(f["n"] == 8);
  CHECK(f["m"] == 3);
  auto out = std::filesystem::temp_directory_path() / "nilrigid_cli_h70.json";
  auto w = parse(run("htype 7 0 -o " + out.string()));
  CHECK(w["n"] == 8);
  auto j70 = parse(run("jsquared " + out.string()));
  CHECK(j70["j2"] == true);
  auto j21 = parse(run("jsquared " + data("h21.json")));
  CHECK(j21["j2"] == false);
  CHECK(j21.contains("witness"));
  std::filesystem::remove(out);
}

TEST_CASE("tables, catalog, sampling and moduli") {
  auto t = parse(run("table1 --max-dim 16"));
  bool saw_12 = false;
  for (const auto& e : t["entries"])
    if (e["r"] == 1 && e["s"] == 2) {
      saw_12 = true;
      CHECK(e["dim"] == 4);
      CHECK(e["twin"] == true);
    }
  CHECK(saw_12);
  auto inv = parse(run("involutions --case 7,0"));
  CHECK(inv["P"].size() >= 3);
  auto list = parse(run("catalog list"));
  CHECK(list["entries"].size() >= 8);
  auto e = parse(run("catalog get example_35"));
  CHECK(e["n"] == 5);
  CHECK(e["m"] == 3);
  auto r1 = parse(run("random 3 4 --seed 1")), r2 = parse(run("random 3 4 --seed 1"));
  CHECK(r1 == r2);
  auto many = parse(run("random 3 4 --seed 1 --trials 3"));
  CHECK(many["algebras"].size() == 3);
  CHECK(many["algebras"][0] == r1);
  auto s = parse(run("random 3 5 --seed 1000 --trials 10 --decide"));
  CHECK(s["rigid_count"].get<int>() + s["infinite_count"].get<int>() == 10);
  CHECK(s["verdicts"].size() == 10);
  CHECK(parse(run("moduli 2 8"))["codim"] == "1");
  CHECK(parse(run("moduli 3 4"))["codim"] == "0");
}
