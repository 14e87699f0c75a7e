#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <random>
#include <sstream>

#include "builders.hpp"
#include "cli.hpp"

using namespace cadlab;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  int code;
  std::string out, err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string corpus(const char* file) { return testsupport::corpus_path(file); }

struct Scratch {
  fs::path dir;
  Scratch() {
    dir = fs::temp_directory_path() / ("cadlab-cli-" + std::to_string(std::random_device{}()));
    fs::create_directories(dir);
  }
  ~Scratch() { fs::remove_all(dir); }
  std::string file(const std::string& name, const std::string& text) const {
    std::ofstream(dir / name) << text;
    return (dir / name).string();
  }
  std::string read(const std::string& name) const {
    std::ifstream in(dir / name);
    return {std::istreambuf_iterator<char>(in), {}};
  }
};

}  // namespace

TEST_CASE("successful commands exit with 0") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"parse", corpus("circle.json")},
           {"parse", corpus("tticad_phi1.smt2"), "--format", "smt"},
           {"analyze", corpus("blowup.json"), "--heuristic", "all"},
           {"cad", corpus("two_circles.json"), "--order", "y,x", "--mode", "sign"},
           {"cad", corpus("two_circles.json"), "--mode", "ec", "--designation", "auto"},
           {"compare", corpus("blowup.json"), "--all-orders"},
           {"gb-check", corpus("gb_basis.json")},
           {"gen", "--seed", "4", "--count", "2"},
           {"--help"}}) {
    const auto r = run(args);
    CHECK_MESSAGE(r.code == 0, args[0] << ": " << r.err);
  }
}

TEST_CASE("cad output") {
  auto r = run({"cad", corpus("circle.json"), "--json", "--cells"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["cells"] == 13);
  CHECK(j["fulldim_cells"] == 5);
  CHECK(j["true_cells"] == 4);
  CHECK(j["leaves"].size() == 13);
  CHECK(j["ordering"] == "x,y");
  r = run({"cad", corpus("blowup.json"), "--order", "y,x", "--json"});
  CHECK(nlohmann::json::parse(r.out)["cells"] == 3);
  r = run({"cad", corpus("blowup.json"), "--order", "x,y", "--json"});
  CHECK(nlohmann::json::parse(r.out)["cells"] == 11);
}

TEST_CASE("parse output reads back") {
  Scratch s;
  const auto r = run({"parse", corpus("two_circles.json"), "--format", "smt"});
  REQUIRE(r.code == 0);
  const std::string path = s.file("again.smt2", r.out);
  const auto a = run({"parse", corpus("two_circles.json")});
  const auto b = run({"parse", path});
  CHECK(b.code == 0);
  // names differ only when the SMT-LIB text lacks one
  CHECK(nlohmann::json::parse(a.out)["formula"] == nlohmann::json::parse(b.out)["formula"]);
}

TEST_CASE("usage errors exit with 1") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {},
           {"frobnicate"},
           {"parse"},
           {"parse", "/no/such/file.json"},
           {"analyze", corpus("circle.json"), "--heuristic", "random"},
           {"cad", corpus("circle.json"), "--order", "x,x"},
           {"cad", corpus("circle.json"), "--order", "x"},
           {"cad", corpus("circle.json"), "--mode", "ec", "--designation", "nope"},
           {"bench"},
           {"bench", corpus("."), "--jobs", "0"}}) {
    const auto r = run(args);
    CHECK_MESSAGE(r.code == 1, (args.empty() ? std::string("(none)") : args[0]));
  }
}

TEST_CASE("malformed input exits with 2") {
  Scratch s;
  CHECK(run({"parse", s.file("a.json", "{\"vars\": [")}).code == 2);
  CHECK(run({"cad", s.file("b.smt2", "(declare-fun x () Real)\n(assert (< x")}).code == 2);
  CHECK(run({"analyze", s.file("c.smt2", "(declare-fun x () Int)")}).code == 2);
  const auto r = run({"parse", s.file("d.json", R"({"vars":["x"],"polys":[[{"coeff":"0","exps":[1]}]]})")});
  CHECK(r.code == 2);
  CHECK(r.err.find("/polys/0/0/coeff") != std::string::npos);
  CHECK(run({"gen", "--seed", "1", "--count", "1", "--profile", s.file("p.json", R"({"nvars": 0})")}).code == 2);
}

TEST_CASE("failed computations exit with 3") {
  Scratch s;
  const std::string nwo = s.file(
      "nwo.json",
      R"({"vars":["x","y","z","w"],"polys":[[{"coeff":"1","exps":[1,0,0,1]},{"coeff":"1","exps":[0,1,1,0]}]]})");
  const auto r = run({"cad", nwo});
  CHECK(r.code == 3);
  CHECK(r.err.find("well-oriented") != std::string::npos);
}

TEST_CASE("gen and bench") {
  Scratch s;
  auto r = run({"gen", "--seed", "5", "--count", "3", "--out", (s.dir / "gen").string()});
  REQUIRE(r.code == 0);
  CHECK(std::distance(fs::directory_iterator(s.dir / "gen"), fs::directory_iterator{}) == 3);
  const std::string csv = (s.dir / "r.csv").string();
  r = run({"bench", (s.dir / "gen").string(), "--out", csv, "--stable", "--jobs", "2"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("problems: 3") != std::string::npos);
  const std::string text = s.read("r.csv");
  CHECK(text.rfind("problem,heuristic,ordering,designation,mode,cells,fulldim_cells,time_ms,status\n", 0) == 0);
  const std::string again = (s.dir / "again.csv").string();
  REQUIRE(run({"bench", (s.dir / "gen").string(), "--out", again, "--stable", "--jobs", "1"}).code == 0);
  CHECK(s.read("again.csv") == text);
}
