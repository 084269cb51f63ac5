/* SPDX-License-Identifier: Apache-2.0 */

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "exactreal/cli/commands.hpp"

using namespace exactreal::cli;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args) {
  args.insert(args.begin(), "exactreal");
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string spec_file(const std::string& name, const std::string& text) {
  auto path = std::filesystem::temp_directory_path() / ("exactreal_test_" + name + ".spec");
  std::ofstream(path) << text;
  return path.string();
}

const char* kPair = "(tail (var 0) (add (var 0) (rat 1 1)))";
const char* kCoin = "(prob (mass 1 4 (var 0)) (mass 1 4 (var 0)) (mass 1 4 (add (var 0) (rat 1 1))) "
                    "(mass 1 4 (add (var 0) (rat 1 1))))";

}  // namespace

TEST_CASE("eval golden") {
  auto path = spec_file("chi", "(chi-pos (var 0))");
  auto r = cli({"eval", "--spec", path, "--x", "1", "--accuracy", "1/1024"});
  CHECK(r.code == 0);
  CHECK(r.out == "r=1 eps=1/1024\n");
  CHECK(cli({"eval", "--spec", path, "--x", "1", "--accuracy", "2^-10"}).out == r.out);

  auto diverge = cli({"eval", "--spec", path, "--x", "-1", "--accuracy", "1/4", "--fuel", "1000"});
  CHECK(diverge.code == 1);
  CHECK(diverge.out == "no-convergence steps=1000 all_infinite=true\n");
}

TEST_CASE("enumerate golden") {
  auto path = spec_file("pair", kPair);
  auto r = cli({"enumerate", "--spec", path, "--x", "1/2", "--accuracy", "1/1024", "--max-index", "5"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "index=0 r=1/2 eps=1/1024\n"
        "index=1 r=3/2 eps=1/1024\n"
        "index=2 r=3/2 eps=1/1024\n"
        "index=3 r=3/2 eps=1/1024\n"
        "index=4 r=3/2 eps=1/1024\n"
        "index=5 r=3/2 eps=1/1024\n"
        "clusters=2 at=1/2,3/2\n");
}

TEST_CASE("natcheck golden") {
  auto r = cli({"natcheck", "--construction", "roundtrip", "--relation", "divisibility", "--bound", "20", "--fuel",
                "1000000"});
  CHECK(r.code == 0);
  CHECK(r.out == "OK 441/441\n");
  CHECK(cli({"natcheck", "--construction", "dec-to-semi", "--relation", "geq", "--bound", "10"}).out == "OK 121/121\n");
  CHECK(cli({"natcheck", "--construction", "semi-to-enum", "--relation", "equality", "--bound", "10", "--fuel",
             "2000"})
            .out == "OK 121/121\n");
  // too little fuel to see every member
  auto starved = cli({"natcheck", "--relation", "geq", "--bound", "10", "--fuel", "5"});
  CHECK(starved.code == 1);
  CHECK(starved.out.rfind("FAIL ", 0) == 0);
}

TEST_CASE("other subcommands") {
  auto chi = spec_file("chi2", "(chi-pos (var 0))");
  auto dom = cli({"domain", "--spec", chi, "--x", "1"});
  CHECK(dom.code == 0);
  CHECK(dom.out == "arg=0 lo=1/2 hi=3/2\n");
  CHECK(cli({"domain", "--spec", chi, "--x", "0", "--fuel", "50"}).code == 1);

  auto band = cli({"eval", "--expr", "(chi-pos (mul (sub (add (var 0) (rat 1 1)) (var 1)) (sub (var 1) (var 0))))",
                   "--x", "0", "--y", "1/2", "--accuracy", "2^-8"});
  CHECK(band.code == 0);
  CHECK(band.out.rfind("r=1 ", 0) == 0);

  auto pair = spec_file("pair2", kPair);
  auto found = cli({"member", "--spec", pair, "--x", "0", "--y", "1", "--accuracy", "1/64"});
  CHECK(found.code == 0);
  CHECK(found.out == "result=found index=1\n");
  auto miss = cli({"member", "--spec", pair, "--x", "0", "--y", "1/2", "--accuracy", "2^-10", "--max-index", "4"});
  CHECK(miss.code == 1);
  CHECK(miss.out == "result=exhausted searched=5\n");

  auto coin = spec_file("coin", kCoin);
  auto mass = cli({"mass", "--spec", coin, "--x", "0", "--y", "0", "--accuracy", "2^-6"});
  CHECK(mass.code == 0);
  CHECK(mass.out == "lower=1/2 unknown=0\n");

  auto s1 = cli({"sample", "--spec", coin, "--x", "0", "--accuracy", "1/64", "--seed", "3", "--n", "5"});
  auto s2 = cli({"sample", "--spec", coin, "--x", "0", "--accuracy", "1/64", "--seed", "3", "--n", "5"});
  CHECK(s1.code == 0);
  CHECK(s1.out == s2.out);
  CHECK(std::count(s1.out.begin(), s1.out.end(), '\n') == 5);

  auto f = cli({"freq", "--spec", coin, "--x", "0", "--accuracy", "1/64", "--seed", "3", "--n", "1000"});
  CHECK(f.code == 0);
  CHECK(std::count(f.out.begin(), f.out.end(), '\n') == 4);
}

TEST_CASE("usage and parse errors exit with 2") {
  CHECK(cli({}).code == 2);
  CHECK(cli({"frobnicate"}).code == 2);
  auto unclosed = cli({"eval", "--expr", "(add (var 0", "--x", "1", "--accuracy", "1/4"});
  CHECK(unclosed.code == 2);
  CHECK(unclosed.err.find("1:6") != std::string::npos);
  CHECK(cli({"eval", "--expr", "(var 0)", "--accuracy", "1/4"}).code == 2);
  CHECK(cli({"eval", "--expr", "(var 0)", "--x", "1.5", "--accuracy", "1/4"}).code == 2);
  CHECK(cli({"eval", "--expr", "(var 0)", "--x", "1", "--accuracy", "0"}).code == 2);
  CHECK(cli({"eval", "--expr", "(var 0)", "--x", "1", "--accuracy", "1/4", "--fuel", "0"}).code == 2);
  CHECK(cli({"eval", "--spec", "/nonexistent/file", "--x", "1", "--accuracy", "1/4"}).code == 2);
  CHECK(cli({"enumerate", "--expr", "(var 0)", "--x", "1", "--accuracy", "1/4"}).code == 2);
  CHECK(cli({"mass", "--expr", "(prob (mass 1 2 (var 0)))", "--x", "0", "--y", "0", "--accuracy", "1/4"}).code == 2);
  CHECK(cli({"natcheck", "--relation", "nope"}).code == 2);
  CHECK(cli({"natcheck", "--relation", "geq", "--construction", "nope"}).code == 2);
  CHECK(cli({"--help"}).code == 0);
}

TEST_CASE("output is deterministic across runs") {
  auto coin = spec_file("coin2", kCoin);
  std::vector<std::vector<std::string>> lines = {
      {"eval", "--expr", "(chi-pos (var 0))", "--x", "1", "--accuracy", "1/1024"},
      {"enumerate", "--expr", kPair, "--x", "1/2", "--accuracy", "1/1024", "--max-index", "5"},
      {"sample", "--spec", coin, "--x", "1/3", "--accuracy", "1/128", "--seed", "11", "--n", "20"},
      {"freq", "--spec", coin, "--x", "1/3", "--accuracy", "1/128", "--seed", "11", "--n", "300"},
  };
  for (const auto& l : lines) {
    auto a = cli(l), b = cli(l);
    CHECK(a.code == b.code);
    CHECK(a.out == b.out);
  }
}
