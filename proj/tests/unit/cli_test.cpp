#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "irrforge/cli.hpp"
#include "irrforge/serialize.hpp"

using namespace irrforge;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& text) {
  auto path = std::filesystem::temp_directory_path() / ("irrforge_test_" + name);
  std::ofstream(path) << text;
  return path.string();
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("caterpillar subcommand") {
  Run r = run({"caterpillar", "--backbone", "2,4,5,7,9", "--both"});
  CHECK(r.code == kExitOk);
  CHECK(r.out == "closed-form 120\ndirect 120\n");
  CHECK(run({"caterpillar", "--backbone", "2,1,3"}).code == kExitInvalid);
  CHECK(run({"caterpillar", "--backbone", "2,4", "--direct", "--both"}).code == kExitUsage);
}

TEST_CASE("bounds on a star file") {
  std::string star = write_temp("star5.txt", "5\n1 2\n1 3\n1 4\n1 5\n");
  Run r = run({"bounds", "--tree", star, "--bounds", "B01"});
  REQUIRE(r.code == kExitOk);
  Json j = Json::parse(r.out);
  CHECK(j[0]["status"] == "VIOLATED");
  CHECK(j[0]["lhs"] == "12");
  CHECK(j[0]["rhs"] == "4");

  Run csv = run({"bounds", "--tree", star, "--bounds", "B01,B02", "--format", "csv"});
  CHECK(csv.out.rfind("bound,status,lhs,rhs,slack,mode,n,m,degrees\n", 0) == 0);
  CHECK(csv.out.find("B01,VIOLATED,12,4,-8,literal,5,4,\"1,1,1,1,4\"") != std::string::npos);

  Run md = run({"bounds", "--tree", star, "--format", "md"});
  CHECK(md.out.find("| B02 | HOLDS |") != std::string::npos);

  CHECK(run({"bounds", "--tree", star, "--degrees", "1,1,2,2"}).code == kExitInvalid);
  CHECK(run({"bounds", "--tree", "/nonexistent/file"}).code == kExitInvalid);
  CHECK(run({"bounds"}).code == kExitUsage);
}

TEST_CASE("bounds with an interpretation") {
  Run r = run({"bounds", "--backbone", "2,4,5,7,9", "--interpretation", "arrangements", "--bounds", "B03"});
  REQUIRE(r.code == kExitOk);
  Json j = Json::parse(r.out);
  CHECK(j[0]["status"] == "HOLDS");
  CHECK(j[0]["instance"]["irr_min"] == 120);
  Run s = run({"bounds", "--degrees", "1,1,1,2,3", "--interpretation", "realizations", "--bounds", "B09"});
  CHECK(s.code == kExitOk);
  CHECK(run({"bounds", "--degrees", "1,1,2,2", "--interpretation", "arrangements"}).code == kExitInvalid);
}

TEST_CASE("JSON output round-trips") {
  std::string p = write_temp("p4.txt", "4\n1 2\n2 3\n3 4\n");
  Run r = run({"bounds", "--tree", p, "--interpretation", "realizations"});
  REQUIRE(r.code == kExitOk);
  Json j = Json::parse(r.out);
  CHECK(j.dump(2) + "\n" == r.out);
  for (const auto& v : j) CHECK(Json::parse(v.dump()).dump() == v.dump());
  // Identical invocations give identical bytes.
  CHECK(run({"bounds", "--tree", p, "--interpretation", "realizations"}).out == r.out);
}

TEST_CASE("enumerate subcommand") {
  CHECK(run({"enumerate", "--degrees", "1,1,2,2", "--count-only"}).out == "2\n");
  CHECK(run({"enumerate", "--degrees", "1,1,1,1,3,3", "--unlabeled", "--count-only"}).out == "1\n");
  Run list = run({"enumerate", "--degrees", "1,1,2,2", "--labeled"});
  CHECK(list.out == "4\n1 3\n2 4\n3 4\n\n4\n1 4\n2 3\n3 4\n");
  CHECK(run({"enumerate", "--degrees", "2,4,5,7,9"}).code == kExitInvalid);
  CHECK(run({"enumerate", "--degrees", "1,1,1,1,1,1,1,1,1,1,1,1,1,1,14", "--unlabeled"}).code == kExitCap);
}

TEST_CASE("extremal subcommand") {
  Run r = run({"extremal", "--degrees", "2,4,5,7,9", "--family", "arrangements"});
  REQUIRE(r.code == kExitOk);
  Json j = Json::parse(r.out);
  CHECK(j["min"] == 120);
  CHECK(j["max"] == 132);
  CHECK(j["argmin"]["spine"] == "2,4,5,7,9");
  CHECK(run({"extremal", "--degrees", "1,1,2,2", "--family", "realizations"}).code == kExitOk);
  CHECK(run({"extremal", "--degrees", "1,1,2,2"}).code == kExitUsage);
  CHECK(run({"extremal", "--degrees", "1,1,2,2", "--family", "other"}).code == kExitUsage);
}

TEST_CASE("falsify subcommand") {
  Run r = run({"falsify", "--max-n", "6", "--bounds", "B14,B02"});
  REQUIRE(r.code == kExitOk);
  Json j = Json::parse(r.out);
  CHECK(j["bounds"]["B02"]["violated"] == 0);
  CHECK(j["bounds"]["B14"]["minimal_counterexample"]["instance"]["n"] == 2);
  CHECK(run({"falsify", "--max-n", "13"}).code == kExitCap);
  Run md = run({"falsify", "--max-n", "5", "--format", "md", "--bounds", "B08"});
  CHECK(md.out.find("| B08 | 1 |") != std::string::npos);
}

TEST_CASE("enumeration cap can be raised through the environment") {
  CHECK(run({"falsify", "--max-n", "11", "--bounds", "B02", "--min-n", "11"}).code == kExitCap);
  setenv("IRRFORGE_MAX_N", "11", 1);
  CHECK(run({"falsify", "--max-n", "11", "--min-n", "11", "--bounds", "B02"}).code == kExitOk);
  setenv("IRRFORGE_MAX_N", "40", 1);
  CHECK(run({"falsify", "--max-n", "13", "--bounds", "B02"}).code == kExitCap);
  unsetenv("IRRFORGE_MAX_N");
}

TEST_CASE("tables subcommand") {
  Run r = run({"tables", "--which", "2", "--interpretation", "arrangements", "--format", "json"});
  REQUIRE(r.code == kExitOk);
  Json j = Json::parse(r.out);
  CHECK(j["checksum_ok"] == true);
  CHECK(j["rows"][0]["findings"].dump().find("max < min in fixture") != std::string::npos);
  Run t1 = run({"tables", "--which", "1"});
  CHECK(t1.code == kExitOk);
  CHECK(t1.out.find("no interpretation selected") != std::string::npos);
  CHECK(t1.out.find("conditioned-star: ours 296, paper 228") != std::string::npos);
  CHECK(run({"tables", "--which", "3"}).code == kExitUsage);
}

TEST_CASE("series subcommand") {
  Run r = run({"series", "--n", "2", "--terms", "200000"});
  REQUIRE(r.code == kExitOk);
  CHECK(r.out.find("lhs 3\n") != std::string::npos);
  CHECK(run({"series", "--n", "2", "--terms", "0"}).code == kExitInvalid);
}

TEST_CASE("compute subcommand") {
  std::string star = write_temp("k14.txt", "5\n1 2\n1 3\n1 4\n1 5\n");
  Run r = run({"compute", star});
  CHECK(r.out == "n 5\nm 4\nalbertson 12\ntotal_irregularity 12\nvariance_form 36\nsigma 36\n");
  Run j = run({"compute", star, "--format", "json"});
  CHECK(Json::parse(j.out)["sigma"] == 36);
  std::string bad = write_temp("cycle.txt", "3\n1 2\n2 3\n3 1\n");
  CHECK(run({"compute", bad}).code == kExitInvalid);
}

TEST_CASE("config file supplies flags, command line wins") {
  std::string cfg = write_temp("cfg.toml", "[caterpillar]\nbackbone = \"1,3,1\"\n");
  CHECK(run({"--config", cfg, "caterpillar", "--closed-form"}).out == "closed-form 6\n");
  CHECK(run({"--config", cfg, "caterpillar", "--backbone", "2,2,2", "--closed-form"}).out == "closed-form 2\n");
}

TEST_CASE("usage errors and help") {
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"frobnicate"}).code == kExitUsage);
  Run h = run({"--help"});
  CHECK(h.code == kExitOk);
  CHECK(h.out.find("caterpillar") != std::string::npos);
}

}  // TEST_SUITE
