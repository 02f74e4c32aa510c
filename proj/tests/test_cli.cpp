#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "schubert/error.hpp"
#include "schubert/json_io.hpp"
#include "schubert/smoothness.hpp"

using namespace schubert;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "schubert");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& body) {
  std::string path = "cli_test_" + name + ".json";
  std::ofstream(path) << body;
  return path;
}

const char* cycle_example =
    R"({"graph":{"kind":"cycle","n":10},"blocks":[[0,1,2,3],[7,8,9,0,1],[5,6,7],[3,4,5,6]],"covers":[[0,1],[1,2],[2,3]]})";

}  // namespace

TEST_CASE("element JSON") {
  auto w = element_from_json(Json::parse(R"({"n":4,"window":[2,5,0,3]})"));
  CHECK(element_to_json(w).dump() == R"({"n":4,"window":[2,5,0,3]})");
  auto v = element_from_json(Json::parse(R"({"n":4,"word":[0,3,2]})"));
  CHECK(v == AffinePermutation::from_word(4, {0, 3, 2}));
  CHECK_THROWS_AS(element_from_json(Json::parse(R"({"n":4,"window":[1,2,3]})")), Error);
  CHECK_THROWS_AS(element_from_json(Json::parse(R"({"n":3,"word":[3]})")), Error);
  CHECK_THROWS_AS(element_from_json(Json::parse(R"({"n":3})")), Error);
  CHECK_THROWS_AS(element_from_json(Json::parse(R"({"window":[1]})")), Error);
}

TEST_CASE("diagram JSON") {
  auto d = diagram_from_json(Json::parse(cycle_example));
  CHECK(validate(d).valid);
  CHECK(diagram_to_json(d).dump() == Json::parse(cycle_example).dump());
  CHECK(diagram_from_json(diagram_to_json(d)) == d);
  CHECK_THROWS_AS(diagram_from_json(Json::parse(R"({"graph":{"kind":"tree","n":3},"blocks":[]})")), Error);
  CHECK_THROWS_AS(
      diagram_from_json(Json::parse(R"({"graph":{"kind":"path","n":3},"blocks":[[0]],"covers":[]})")), Error);
  CHECK_THROWS_AS(diagram_from_json(Json::parse(
                      R"({"graph":{"kind":"path","n":3},"blocks":[[1],[2]],"covers":[[0,1],[1,0]]})")),
                  Error);
}

TEST_CASE("smooth") {
  auto r = run({"smooth", "--n", "4", "--window", "3,4,1,2"});
  CHECK(r.code == 0);
  auto j = Json::parse(r.out);
  CHECK(j["smooth"] == false);
  CHECK(j["length"] == 4);
  CHECK(j["window"] == Json::parse("[3,4,1,2]"));
  auto neg = run({"smooth", "--n", "3", "--window=-1,3,4"});
  CHECK(neg.code == 0);
  CHECK(Json::parse(neg.out)["window"] == Json::parse("[-1,3,4]"));
  auto t = run({"smooth", "--n", "3", "--word", "0,2,1,0,1,2,1"});
  CHECK(t.code == 0);
  auto tj = Json::parse(t.out);
  CHECK(tj["twisted_spiral"] == (is_twisted_spiral(AffinePermutation::from_word(3, {0, 2, 1, 0, 1, 2, 1}))));
  CHECK(run({"smooth", "--n", "4", "--window", "1,1,2,6"}).code == 1);
  CHECK(run({"smooth", "--n", "4", "--window", "1,x,2,6"}).code == 1);
  CHECK(run({"smooth", "--n", "4"}).code == 1);
  CHECK(run({"smooth", "--n", "4", "--window", "1,2,3,4", "--bogus"}).code == 1);
  auto tsv = run({"--format", "tsv", "smooth", "--n", "3", "--window", "1,2,3"});
  CHECK(tsv.out.find("smooth\ttrue\n") != std::string::npos);
  auto f = temp_file("elem", R"({"n":4,"word":[0,3,2]})");
  CHECK(run({"smooth", "--file", f}).code == 0);
  std::remove(f.c_str());
}

TEST_CASE("decompose") {
  auto r = run({"decompose", "--n", "4", "--word", "1,2,1"});
  CHECK(r.code == 0);
  auto j = Json::parse(r.out);
  CHECK(j["complete"] == true);
  CHECK(j["smooth"] == true);
  CHECK(j["factors"].size() == 2);
  CHECK(j["factors"][0]["maximal"] == true);
  auto p = run({"decompose", "--n", "4", "--word", "1", "--J", "2"});
  CHECK(p.code == 0);
  CHECK(Json::parse(p.out)["smooth"] == true);
  CHECK(run({"decompose", "--n", "4", "--word", "1", "--J", "1"}).code == 1);
}

TEST_CASE("enumerate") {
  auto r = run({"enumerate", "--n", "3", "--count-only"});
  CHECK(r.code == 0);
  CHECK(r.out == "31\n");
  auto d = run({"enumerate", "--n", "3", "--count-only", "--method", "diagrams"});
  CHECK(d.out == "31\n");
  auto list = run({"enumerate", "--n", "2"});
  CHECK(list.out == "0\t1,2\n1\t0,3\n1\t2,1\n2\t-1,4\n2\t3,0\n");
  auto list_d = run({"enumerate", "--n", "3", "--method", "diagrams"});
  auto list_a = run({"--workers", "3", "enumerate", "--n", "3"});
  CHECK(list_d.out == list_a.out);
  CHECK(run({"enumerate", "--n", "3"}).out == list_a.out);
  auto js = run({"--format", "json", "enumerate", "--n", "2"});
  CHECK(Json::parse(js.out).size() == 5);
  CHECK(run({"enumerate"}).code == 1);
}

TEST_CASE("series") {
  auto r = run({"series", "--which", "A", "--order", "9", "--method", "all", "--diff"});
  CHECK(r.code == 0);
  std::istringstream in(r.out);
  std::string line;
  int rows = 0;
  while (std::getline(in, line)) ++rows;
  CHECK(rows == 9);
  CHECK(r.out.find("9\t448663\t448663\t448663\n") != std::string::npos);
  auto j = Json::parse(run({"--format", "json", "series", "--which", "AM", "--order", "5"}).out);
  CHECK(j["rows"][4]["closed"] == 42);
  auto big = run({"series", "--order", "80"});
  CHECK(big.code == 0);
  for (const char* name : {"AM", "AB", "AF", "ABAR", "ASTAR"})
    CHECK(run({"series", "--which", name, "--order", "7", "--method", "all", "--diff"}).code == 0);
  CHECK(run({"series", "--which", "Q"}).code == 1);
  CHECK(run({"series", "--method", "magic"}).code == 1);
}

TEST_CASE("staircase commands") {
  auto f = temp_file("fig", cycle_example);
  auto v = run({"staircase", "validate", "--file", f});
  CHECK(v.code == 0);
  CHECK(Json::parse(v.out)["valid"] == true);
  auto pic = run({"staircase", "render", "--file", f});
  CHECK(pic.code == 0);
  CHECK(pic.out.find(" s0 s1") != std::string::npos);
  auto dec = run({"staircase", "decompose", "--file", f});
  CHECK(dec.code == 0);
  CHECK(Json::parse(dec.out)["pieces"].size() == 2);
  CHECK(run({"staircase", "dyck", "--file", f}).code == 1);
  auto dy = temp_file("dyck",
                      R"({"graph":{"kind":"path","n":6},"blocks":[[1],[2,3,4,5],[4,5,6]],"covers":[[0,1],[1,2]]})");
  auto dr = run({"staircase", "dyck", "--file", dy});
  CHECK(dr.code == 0);
  CHECK(Json::parse(dr.out)["steps"] == Json::parse("[[1,1],[4,2],[1,3]]"));
  auto bad = temp_file("bad", R"({"graph":{"kind":"path","n":3},"blocks":[[1],[3]],"covers":[[0,1]]})");
  auto bv = Json::parse(run({"staircase", "validate", "--file", bad}).out);
  CHECK(bv["valid"] == false);
  CHECK(bv["axiom"] == "axiom-1");
  CHECK(run({"staircase", "render", "--file", bad}).code == 1);
  auto cyc = temp_file("cyc", R"({"graph":{"kind":"path","n":2},"blocks":[[1],[2]],"covers":[[0,1],[1,0]]})");
  CHECK(run({"staircase", "validate", "--file", cyc}).code == 1);
  CHECK(run({"staircase", "validate", "--file", "does-not-exist.json"}).code == 1);
  for (const auto& p : {f, dy, bad, cyc}) std::remove(p.c_str());
}

TEST_CASE("determinism") {
  auto a = run({"--format", "json", "series", "--which", "AF", "--order", "6", "--method", "all"});
  auto b = run({"--format", "json", "series", "--which", "AF", "--order", "6", "--method", "all"});
  CHECK(a.out == b.out);
}
