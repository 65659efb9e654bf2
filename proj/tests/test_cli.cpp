#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = sigshift::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("pattern") {
  auto r = run({"pattern", "--sigma", "+--", "--word", "(00110221)", "--n", "8"});
  CHECK(r.code == 0);
  CHECK(r.out == "12453786\n");
  r = run({"pattern", "--sigma", "++", "--word", "(0)", "--n", "3"});
  CHECK(r.out == "undefined(0,1)\n");
}

TEST_CASE("decide") {
  auto r = run({"decide", "--sigma", "+-", "--perm", "591482637"});
  CHECK(r.code == 0);
  CHECK(r.out == "not allowed: dagger fails (b=2)\n");
  r = run({"decide", "--sigma", "--", "--perm", "3425617"});
  CHECK(r.out == "not allowed: no segmentation\n");
  r = run({"decide", "--sigma", "++", "--perm", "21"});
  CHECK(r.out.rfind("allowed\nsegmentation: ", 0) == 0);
  CHECK(r.out.find("witness: 1(0)\n") != std::string::npos);
}

TEST_CASE("enumerate formats") {
  auto r = run({"enumerate", "--sigma", "++", "--n", "3"});
  CHECK(r.code == 0);
  CHECK(r.out.find("count 6\n") != std::string::npos);

  r = run({"enumerate", "--sigma", "+-", "--n", "3", "--format", "json"});
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["signature"] == "+-");
  CHECK(j["n"] == 3);
  CHECK(j["count"] == 5);
  CHECK(j["patterns"].size() == 5);
  CHECK(j["patterns"][0] == "1,2,3");
  CHECK(j["bounds"].is_object());

  r = run({"enumerate", "--sigma", "++", "--n", "2", "--format", "csv"});
  CHECK(r.out == "pattern\n\"1,2\"\n\"2,1\"\n");

  // Same bytes regardless of the thread count.
  CHECK(run({"enumerate", "--sigma", "--", "--n", "6", "--jobs", "1"}).out ==
        run({"enumerate", "--sigma", "--", "--n", "6", "--jobs", "4"}).out);
}

TEST_CASE("enumerate to file") {
  const auto path = (std::filesystem::temp_directory_path() / "sigshift_cli_test.json").string();
  auto r = run({"enumerate", "--sigma", "++", "--n", "3", "--format", "json", "--out", path});
  CHECK(r.code == 0);
  std::ifstream f(path);
  const auto j = nlohmann::json::parse(f);
  CHECK(j["count"] == 6);
  std::remove(path.c_str());
}

TEST_CASE("checks and reports") {
  auto r = run({"crosscheck", "--sigma", "+-", "--n", "5"});
  CHECK(r.code == 0);
  CHECK(r.out.find("agree\n") != std::string::npos);

  r = run({"bounds", "--sigma", "--", "--n", "5"});
  CHECK(r.code == 0);
  CHECK(r.out.find("VIOLATED") == std::string::npos);

  r = run({"table", "--k", "2", "--nmax", "3"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("signature,n,count,lower_bound,upper_bound,bound_ok\n", 0) == 0);
  CHECK(r.out.find("+-,3,5,4,5,true\n") != std::string::npos);

  r = run({"scan", "--k", "2", "--nmax", "3"});
  CHECK(r.code == 0);
  r = run({"recurrence", "--k", "3", "--n", "3"});
  CHECK(r.code == 0);
  r = run({"tent-stats", "--n", "4"});
  CHECK(r.code == 0);

  r = run({"oracle", "--sigma", "+-", "--n", "3", "--pre", "3", "--per", "3"});
  CHECK(r.out.find("count 5\n") != std::string::npos);
}

TEST_CASE("invalid input exits with 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"bogus"}).code == 2);
  CHECK(run({"decide", "--sigma", "+x", "--perm", "12"}).code == 2);
  CHECK(run({"decide", "--sigma", "+-", "--perm", "113"}).code == 2);
  CHECK(run({"pattern", "--sigma", "+-", "--word", "012", "--n", "3"}).code == 2);
  CHECK(run({"enumerate", "--sigma", "+-", "--n", "0"}).code == 2);
  CHECK(run({"enumerate", "--sigma", "+-", "--n", "3", "--format", "xml"}).code == 2);
  CHECK(run({"table", "--k", "11", "--nmax", "2"}).code == 2);
  const auto r = run({"decide", "--perm", "12"});
  CHECK(r.code == 2);
  CHECK_FALSE(r.err.empty());
}

}  // TEST_SUITE
