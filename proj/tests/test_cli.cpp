#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "nscalc/cli.hpp"
#include "support.hpp"

using namespace nscalc;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("classify subcommand") {
  Result r = run({"classify", "-g", "2", "-a", "2", "-b", "1", "-c", "1"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "boundary (nef, not ample), defect 0"));

  r = run({"classify", "-g", "2", "-a", "0", "-b", "0", "-c", "0"});
  CHECK(contains(r.out, "boundary (apex)"));

  r = run({"classify", "-g", "2", "-a", "1", "-b", "1", "-c", "1"});
  CHECK(contains(r.out, "outside (defect -1)"));

  r = run({"classify", "-g", "3", "1,1,0"});
  CHECK(contains(r.out, "interior"));

  r = run({"--format", "json", "classify", "-g", "2", "2,1,1"});
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["region"] == "boundary");
  CHECK(j["defect"] == "0");
  CHECK(j["nef"] == "true");
}

TEST_CASE("pair, intersect and pullback subcommands") {
  CHECK(contains(run({"pair", "-g", "2", "1,1,1", "2,1,1"}).out, "2  [~ 2.000000]"));
  CHECK(contains(run({"intersect", "-g", "2", "0,1,0", "0,1,0", "0,1,0"}).out, "0"));
  CHECK(run({"pair", "-g", "3", "0,0,1", "0,0,1"}).out.rfind("-12", 0) == 0);
  CHECK(run({"pullback", "-g", "2", "-m", "0", "-n", "1"}).out == "(0,1,0)\n");
  CHECK(run({"pullback", "-g", "3", "-m", "2", "-n", "5"}).out == "(12,25,10)\n");
  CHECK(run({"pullback", "-g", "2", "-m", "1/2", "-n", "3"}).out == "(1/2,9,3/2)\n");
}

TEST_CASE("witness, height, minima, decompose, curve-height") {
  CHECK(run({"witness", "-g", "2", "-n", "1"}).out == "(8,1,2), degree 8, height 3/2\n");
  CHECK(contains(run({"height", "-g", "3", "27,1,3"}).out, "height 16/3, degree 27"));
  CHECK(contains(run({"curve-height", "-g", "5"}).out, "h(C_K) = 96"));
  const Result m = run({"minima", "-g", "2"});
  CHECK(contains(m.out, "infimum 3/2"));
  CHECK(contains(m.out, "t* = 1/4"));
  CHECK(contains(m.out, "f_{2,1}"));
  CHECK(contains(run({"decompose", "-g", "2", "3,1,1"}).out, "boundary part (2,1,1) + 1 * alpha_1"));
  CHECK(contains(run({"decompose", "-g", "3", "5,0,0"}).out, "degenerate"));

  const Result csv = run({"--format", "csv", "witness", "-g", "2", "-n", "1"});
  CHECK(csv.out == "g,a,b,c,degree,height\n2,8,1,2,8,3/2\n");
}

TEST_CASE("audit subcommand") {
  const Result r = run({"audit", "-g", "2"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "e1 = 3/2"));
  CHECK(contains(r.out, "h(C_K) = 1"));
  CHECK(contains(r.out, "second inequality VIOLATED by 1/2"));

  const Result j = run({"audit", "-g", "3", "--format", "json"});
  const auto obj = nlohmann::json::parse(j.out);
  CHECK(obj["margin"] == "4/3");
  CHECK(obj["second_inequality_holds"] == "false");
}

TEST_CASE("table output") {
  const std::string csv = cli::render_table(2, 4, cli::Format::Csv);
  CHECK(csv.rfind("g,e1,e2,h,mean,margin,e1_dec,h_dec\n2,3/2,3/2,1,3/2,1/2,1.500000,1.000000\n", 0) ==
        0);
  CHECK(contains(csv, "\n3,16/3,16/3,4,16/3,4/3,"));

  CHECK(run({"table", "2", "4", "--format", "csv"}).out == csv);
  CHECK(run({"table", "2", "4", "--format", "csv"}).out ==
        run({"table", "2", "4", "--format", "csv"}).out);

  const auto rows = nlohmann::json::parse(cli::render_table(2, 12, cli::Format::Json));
  REQUIRE(rows.size() == 11);
  CHECK(rows[0]["g"] == 2);
  CHECK(rows[0]["margin"] == "1/2");
  CHECK(rows[1]["e1"] == "16/3");

  // default range is 2..12
  const std::string text = run({"table"}).out;
  CHECK(contains(text, "margin"));
  CHECK(contains(text, "\n12  "));
}

TEST_CASE("every error path exits nonzero with a one-line diagnostic") {
  const std::vector<std::vector<std::string>> bad = {
      {"classify", "-g", "1", "-a", "1"},
      {"classify", "-g", "2", "-a", "1/0"},
      {"classify", "-a", "1"},
      {"pair", "-g", "2", "1,1", "2,1,1"},
      {"intersect", "-g", "2", "0,1,0", "0,1,0"},
      {"witness", "-g", "2", "-n", "0"},
      {"decompose", "-g", "2", "1,1,1"},
      {"minima", "-g", "2", "1,1,1"},
      {"height", "-g", "2", "0,1,0"},
      {"table", "5", "3"},
      {"table", "1", "3"},
      {"--format", "xml", "table"},
      {"frobnicate"},
  };
  for (const auto& args : bad) {
    const Result r = run(args);
    INFO(args.front());
    CHECK(r.code != 0);
    CHECK(r.out.empty());
    REQUIRE_FALSE(r.err.empty());
    CHECK(r.err.find('\n') == r.err.size() - 1);
  }
}

TEST_CASE("printed rationals re-parse to the same value") {
  nscalc::testing::Gen gen(41);
  for (int i = 0; i < 50; ++i) {
    const NSClass x = gen.any_class(Genus(3));
    const std::string printed = cli::render_class(x);
    const NSClass back = cli::parse_class(Genus(3), printed.substr(1, printed.size() - 2));
    CHECK(back == x);
  }
}
