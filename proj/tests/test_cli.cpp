#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "cubeforge/cli.hpp"
#include "cubeforge/cubeset.hpp"

using namespace cubeforge;

namespace {

struct Run {
  int exit_code;
  std::string out, err;
};

Run cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return Run{code, out.str(), err.str()};
}

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& name, const std::string& content)
      : path("/tmp/cubeforge_test_" + name) {
    std::ofstream(path) << content;
  }
  ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("hom enumeration prints maps and a count") {
  const auto r = cli({"homs", "--site", "cs", "--from", "2", "--to", "1"});
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("count 6") != std::string::npos);
  CHECK(r.out.find("2->1:[0,0,0,1]") != std::string::npos);
}

TEST_CASE("word and table forms of a map agree") {
  const auto by_word = cli({"member", "--site", "cs", "--word", "m1", "--dom", "2"});
  const auto by_table =
      cli({"member", "--site", "cs", "--table", "0,0,0,1", "--from", "2", "--to", "1"});
  CHECK(by_word.exit_code == 0);
  CHECK(by_word.out.find("is a morphism") != std::string::npos);
  CHECK(by_table.out.find("is a morphism") != std::string::npos);
}

TEST_CASE("usage errors exit with code 2") {
  CHECK(cli({"frobnicate"}).exit_code == 2);
  CHECK(cli({"homs", "--site", "cs", "--from", "2"}).exit_code == 2);  // --to missing
  CHECK(cli({"homs", "--site", "bogus", "--from", "1", "--to", "1"}).exit_code == 2);
  CHECK(cli({"member", "--site", "cs", "--word", "zz", "--dom", "1"}).exit_code == 2);
  CHECK(cli({"member", "--site", "cs"}).exit_code == 2);  // no map given
}

TEST_CASE("resource exhaustion exits with code 3") {
  const auto r = cli({"homs", "--site", "dcs", "--from", "2", "--to", "2", "--max-maps", "10"});
  CHECK(r.exit_code == 3);
  CHECK(r.err.find("resource bound") != std::string::npos);
}

TEST_CASE("failing checks exit with code 1 and carry a reproducible witness") {
  auto fixture = representable_fixture(SiteConfig::parse("cs"), 1, 2);
  std::swap(fixture["actions"]["d1+@0"], fixture["actions"]["d1-@0"]);
  TempFile file("broken.json", fixture.dump());

  const auto r = cli({"ezset", "--file", file.path, "--json", "-"});
  CHECK(r.exit_code == 1);
  CHECK(r.out.find("act differently") != std::string::npos);
  CHECK(r.out.find("\"repro\"") != std::string::npos);

  // replaying the recorded invocation reproduces the failure
  const auto again = cli({"ezset", "--file", file.path});
  CHECK(again.exit_code == 1);
}

TEST_CASE("json reports are deterministic byte for byte") {
  auto once = cli({"skeletal", "--site", "cws", "--max-dim", "2", "--json", "-"});
  auto twice = cli({"skeletal", "--site", "cws", "--max-dim", "2", "--json", "-"});
  CHECK(once.exit_code == 0);
  CHECK(once.out == twice.out);
  CHECK(once.out.find("\"schema\": 1") != std::string::npos);
  CHECK(once.out.find("wall_ms") == std::string::npos);  // timings are opt-in

  const auto timed = cli({"skeletal", "--site", "cws", "--max-dim", "2", "--json", "-",
                          "--timings"});
  CHECK(timed.out.find("wall_ms") != std::string::npos);
}

TEST_CASE("version and help are printed") {
  const auto v = cli({"--version"});
  CHECK(v.exit_code == 0);
  CHECK(v.out.find("cubeforge 0.1.0") != std::string::npos);
  CHECK(cli({"--help"}).exit_code == 0);
}

TEST_CASE("the pushout command certifies the meet/join span") {
  const auto r = cli({"pushout", "--site", "cs", "--f", "m1", "--g", "j1", "--dom", "2",
                      "--levels", "3"});
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("vertex dimension 0") != std::string::npos);
}
