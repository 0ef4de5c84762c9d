#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "polarscope/cli.hpp"
#include "polarscope/serialize.hpp"

using namespace polarscope;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch() {
  const char* env = std::getenv("POLARSCOPE_TEST_TMP");
  fs::path dir = env ? fs::path(env) : fs::temp_directory_path() / "polarscope_cli_test";
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(f), {}};
}

void write(const fs::path& p, const std::string& text) { std::ofstream(p, std::ios::binary) << text; }

bool has(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("construct") {
  Run r = run({"construct", "parabolic", "3", "2", "1", "--enumerate"});
  CHECK(r.code == cli::kPass);
  CHECK(has(r.out, "points 63\n"));
  CHECK(has(r.out, "generators 135\n"));
  CHECK(has(r.out, "generators per point 15\n"));
  CHECK(has(r.out, "match"));

  r = run({"construct", "--family", "hyperbolic", "--rank", "3", "--p", "2", "--h", "1", "--enumerate"});
  CHECK(r.code == cli::kPass);
  CHECK(has(r.out, "points 35\n"));
  CHECK(has(r.out, "generators 30\n"));
  CHECK(has(r.out, "generators per point 6\n"));

  r = run({"construct", "hermitian-even", "3", "2", "2", "--enumerate", "--format", "json"});
  CHECK(r.code == cli::kPass);
  const json j = json::parse(r.out);
  CHECK(j["points"] == "2709");
  CHECK(j["generators"] == "38313");
  CHECK(j["matches"] == true);

  CHECK(run({"construct", "hermitian-even", "3", "2", "1"}).code == cli::kInputError);
  CHECK(run({"construct", "parabolic", "3", "4", "1"}).code == cli::kInputError);
  CHECK(run({"construct", "conic", "3", "2", "1"}).code == cli::kInputError);
  CHECK(run({"construct", "parabolic", "3", "2", "1", "--enumerate", "--budget-generators", "10"}).code ==
        cli::kInputError);
}

TEST_CASE("section, check and mutations") {
  const fs::path dir = scratch();
  const fs::path file = dir / "q62_section.json";
  Run r = run({"section", "parabolic", "3", "2", "1", "--hyperplane", "1,0,0,0,0,0,0", "--out", file.string()});
  REQUIRE(r.code == cli::kPass);
  const json doc = json::parse(slurp(file));
  CHECK(doc["generators"].size() == 30);

  r = run({"check", file.string(), "--mode", "strong"});
  CHECK(r.code == cli::kPass);
  CHECK(json::parse(r.out)["passed"] == true);
  CHECK(run({"check", "--set", file.string(), "--mode", "pseudo"}).code == cli::kPass);
  CHECK(run({"check", file.string(), "--mode", "alt"}).code == cli::kPass);
  r = run({"check", file.string(), "--mode", "embedded"});
  CHECK(r.code == cli::kPass);
  CHECK(json::parse(r.out)["point_count"] == 35);

  // round trip: the file re-read and written again is identical
  CHECK(generator_set_to_json(generator_set_from_json(doc)).dump(2) + "\n" == slurp(file));

  json less = doc;
  less["generators"].erase(less["generators"].begin() + 4);
  const fs::path less_file = dir / "q62_less.json";
  write(less_file, less.dump());
  r = run({"check", less_file.string(), "--mode", "pseudo"});
  CHECK(r.code == cli::kCheckFailed);
  bool named = false;
  const json report = json::parse(r.out);
  for (const auto& c : report["conditions"]) {
    if (c["id"] == "iii" && c["passed"] == false) {
      named = true;
      CHECK(c["observed"] == json::array({29}));
      CHECK(c["expected"] == json::array({30}));
    }
  }
  CHECK(named);

  json mismatch = doc;
  mismatch["space"] = json::parse(run({"construct", "elliptic", "3", "2", "1", "--format", "json"}).out)["space"];
  const fs::path mismatch_file = dir / "q62_mismatch.json";
  write(mismatch_file, mismatch.dump());
  CHECK(run({"check", mismatch_file.string(), "--mode", "pseudo"}).code == cli::kInputError);

  json nonsingular = doc;
  nonsingular["generators"][0][0] = json::array({1, 0, 0, 0, 0, 0, 0});
  write(mismatch_file, nonsingular.dump());
  CHECK(run({"check", mismatch_file.string(), "--mode", "strong"}).code == cli::kInputError);

  write(mismatch_file, "{ not json");
  CHECK(run({"check", mismatch_file.string()}).code == cli::kInputError);
  CHECK(run({"check", (dir / "missing.json").string()}).code == cli::kInputError);
  CHECK(run({"check", file.string(), "--mode", "weak"}).code == cli::kInputError);
}

TEST_CASE("section classification and refused hyperplanes") {
  Run r = run({"section", "parabolic", "3", "2", "1", "--all"});
  CHECK(r.code == cli::kPass);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 129);
  std::size_t tangent = 0, same = 0, drop = 0;
  std::istringstream lines(r.out);
  for (std::string line; std::getline(lines, line);) {
    tangent += has(line, ",tangent,");
    same += has(line, ",same-rank,");
    drop += has(line, ",rank-drop,");
  }
  CHECK(tangent == 63);
  CHECK(same == 36);
  CHECK(drop == 28);

  // x3 = 0 is the tangent hyperplane at e2 for the standard elliptic form on PG(7,2)
  r = run({"section", "elliptic", "3", "2", "1", "--hyperplane", "0,0,0,1,0,0,0,0"});
  CHECK(r.code == cli::kInputError);
  CHECK(has(r.err, "tangent"));
  CHECK(has(r.err, "(0,0,1,0,0,0,0,0)"));
  CHECK(run({"section", "parabolic", "3", "2", "1", "--hyperplane", "1,1,1,0,0,0,0"}).code == cli::kInputError);
  CHECK(run({"section", "parabolic", "3", "2", "1", "--hyperplane", "1,0,0"}).code == cli::kInputError);
  CHECK(run({"section", "parabolic", "3", "2", "1", "--hyperplane", "1,0,0,0,0,0,2"}).code == cli::kInputError);
  CHECK(run({"section", "parabolic", "3", "2", "1"}).code == cli::kInputError);
}

TEST_CASE("verify-theorem") {
  Run r = run({"verify-theorem", "parabolic", "3", "2", "1", "--samples", "10"});
  CHECK(r.code == cli::kPass);
  CHECK(has(r.out, "same-rank 36"));
  CHECK(has(r.out, "verdict PASS"));
  r = run({"verify-theorem", "elliptic", "3", "2", "1", "--samples", "5", "--max-sections", "2", "--format", "json"});
  CHECK(r.code == cli::kPass);
  const json j = json::parse(r.out);
  CHECK(j["positives"].size() == 2);
  CHECK(j["positives"][0]["embedded"]["param_half"] == 2);
  r = run({"verify-theorem", "symplectic", "3", "2", "1", "--samples", "5"});
  CHECK(r.code == cli::kPass);
  CHECK(has(r.out, "param_half 0"));
  CHECK(run({"verify-theorem", "hyperbolic", "3", "2", "1"}).code == cli::kInputError);
}

TEST_CASE("identical runs write identical files") {
  const fs::path dir = scratch();
  const fs::path a = dir / "verify_a.json", b = dir / "verify_b.json";
  for (const auto& p : {a, b}) {
    CHECK(run({"verify-theorem", "parabolic", "3", "2", "1", "--samples", "20", "--seed", "7", "--format", "json",
               "--out", p.string()})
              .code == cli::kPass);
  }
  CHECK(slurp(a) == slurp(b));
  CHECK_FALSE(slurp(a).empty());
}

TEST_CASE("demo-dual-hyperoval") {
  Run r = run({"demo-dual-hyperoval", "1", "4"});
  CHECK(r.code == cli::kPass);
  CHECK(has(r.out, "6 lines"));
  CHECK(has(r.out, "(i) PASS observed [3]"));
  CHECK(has(r.out, "(iv) PASS observed [0 2]"));
  CHECK(has(r.out, "span dimension"));
  r = run({"demo-dual-hyperoval", "--h", "2", "--n", "4", "--format", "json"});
  CHECK(r.code == cli::kPass);
  CHECK(json::parse(r.out)["lines"].size() == 10);
  CHECK(run({"demo-dual-hyperoval", "1", "3"}).code == cli::kInputError);
  CHECK(run({"demo-dual-hyperoval", "--p", "3", "--h", "1", "--n", "4"}).code == cli::kInputError);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == cli::kInputError);
  CHECK(run({"frobnicate"}).code == cli::kInputError);
  CHECK(run({"construct", "parabolic", "3", "2", "1", "--format", "xml"}).code == cli::kInputError);
  Run r = run({"--help"});
  CHECK(r.code == cli::kPass);
  CHECK(has(r.out, "verify-theorem"));
}

}
