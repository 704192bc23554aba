#include "hopftree/cli.hpp"

#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

using hopftree::run_cli;

namespace {

struct Run {
  int rc;
  std::string out, err;
};

Run run(std::vector<std::string> args, const std::string& input = "") {
  std::ostringstream out, err;
  std::istringstream in(input);
  const int rc = run_cli(args, out, err, &in);
  return {rc, out.str(), err.str()};
}

std::size_t lines(const std::string& s) {
  std::size_t n = 0;
  for (char c : s) n += c == '\n';
  return n;
}

}  // namespace

TEST_CASE("enumerate") {
  const auto r = run({"enumerate", "--family", "tree", "--degree", "3"});
  CHECK(r.rc == 0);
  CHECK(lines(r.out) == 5);
  CHECK(r.out.find("(()()())\n") != std::string::npos);
  CHECK(r.err.find("estimate") != std::string::npos);
  CHECK(lines(run({"enumerate", "--family", "stirling", "--degree", "3"}).out) == 15);
  CHECK(lines(run({"enumerate", "--family", "labelled:2", "--degree", "2"}).out) == 8);
  CHECK(lines(run({"enumerate", "--family", "binary", "--degree", "4"}).out) == 14);
  CHECK(run({"enumerate", "--family", "tree", "--degree", "20"}).rc == 2);
  CHECK(run({"--cap", "13", "enumerate", "--family", "tree", "--degree", "13"}).rc == 0);
  CHECK(run({"enumerate", "--family", "shrubs", "--degree", "2"}).rc == 2);
}

TEST_CASE("series") {
  const auto r = run({"series", "--family", "sorted", "--max", "7"});
  CHECK(r.rc == 0);
  CHECK(r.out == "1\t1\t1\n2\t2\t1\n3\t6\t3\n4\t24\t13\n5\t120\t71\n6\t720\t461\n7\t5040\t3447\n");
  const auto ranked = run({"series", "--family", "tree", "--max", "4", "--rank"});
  CHECK(ranked.rc == 0);
  CHECK(ranked.out.find("4\t14\t5\t5") != std::string::npos);
}

TEST_CASE("algebra subcommands") {
  CHECK(run({"product", "--op", "hash", "(())", "(())"}).out ==
        "1*tree:((())) + 1*tree:(()())\n");
  CHECK(run({"product", "--op", "mr", "1", "1"}).out == "1*perm:1 2 + 1*perm:2 1\n");
  CHECK(run({"coproduct", "--op", "binary", "(.,.)"}).out ==
        "1*bin:(.,.) (x) bin:. + 1*bin:. (x) bin:(.,.)\n");
  CHECK(run({"idempotent", "(())"}).out == "1*tree:(())\n");
  CHECK(run({"dual-product", "(())", "(())"}).rc == 0);
  CHECK(run({"product", "--op", "treed", "2112", "332112"}).rc == 0);
  CHECK(run({"product", "--op", "hash", "(()", "(())"}).rc == 2);
  CHECK(run({"idempotent", "()"}).rc == 2);
}

TEST_CASE("convert") {
  const auto r = run({"convert", "--map", "euler", "((1 (3))(5 (6 (4))(2)))"});
  CHECK(r.out == "((1 (3))(5 (6 (4))(2)))\t1 3 3 1 5 6 4 4 6 2 2 5\n");
  const auto s = run({"convert", "--map", "perm-to-sorted"}, "2413\n2 1\n");
  CHECK(s.out == "2413\t((1 (2)(4))(3))\n2 1\t((1 (2)))\n");
  CHECK(lines(run({"convert", "--map", "planar-to-binary", "--degree", "4"}).out) == 14);
  CHECK(run({"convert", "--map", "euler-inverse", "1212"}).rc == 2);
}

TEST_CASE("verify exit status") {
  const auto ok = run({"verify", "--suite", "hopf", "--maxdeg", "4"});
  CHECK(ok.rc == 0);
  CHECK(ok.out == "OK\n");
  const auto verbose = run({"verify", "--suite", "counts", "--maxdeg", "3", "--verbose"});
  CHECK(verbose.out.find("PASS") != std::string::npos);
  const auto broken = run({"verify", "--suite", "broken", "--maxdeg", "3", "--test-mode"});
  CHECK(broken.rc == 1);
  CHECK(broken.out.find("FAILED") != std::string::npos);
  CHECK(run({"verify", "--suite", "broken", "--maxdeg", "3"}).rc == 2);
  CHECK(run({"verify", "--suite", "nope"}).rc == 2);
  CHECK(run({"verify", "--suite", "hopf", "--maxdeg", "9"}).rc == 2);
  CHECK(run({}).rc == 2);
  CHECK(run({"--help"}).rc == 0);
}

TEST_CASE("determinism") {
  const std::vector<std::vector<std::string>> cases = {
      {"enumerate", "--family", "increasing", "--degree", "4"},
      {"product", "--op", "star", "((2)(1))", "((1 (2)))"},
      {"verify", "--suite", "all", "--maxdeg", "3", "--verbose"},
  };
  for (const auto& args : cases) {
    const auto a = run(args);
    const auto b = run(args);
    CHECK(a.out == b.out);
    CHECK(a.err == b.err);
  }
  auto serial = std::vector<std::string>{"verify", "--suite", "all", "--maxdeg", "3", "--verbose"};
  const auto par = run(serial);
  serial.push_back("--serial");
  CHECK(run(serial).out == par.out);
}
