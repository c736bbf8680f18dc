#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "json.hpp"
#include "latpack/corpus.hpp"

using latpack::cli::run;
namespace fs = std::filesystem;

namespace {

struct Result {
  int status;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int status = run(args, out, err);
  return {status, out.str(), err.str()};
}

fs::path temp_file(const std::string& name) { return fs::temp_directory_path() / ("latpack_cli_test_" + name); }

void write(const fs::path& p, const std::string& text) { std::ofstream(p, std::ios::binary) << text; }

}  // namespace

TEST_CASE("pack-odd json report") {
  const auto r = invoke({"pack-odd", "5", "--report", "json"});
  CHECK(r.status == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["command"] == "pack-odd");
  CHECK(j["matrix_count"] == 6);
  CHECK(j["distinct_lines"] == 120);
  CHECK(j["expected_lines"] == 120);
  CHECK(j["verdict"] == "pass");
  CHECK(j["violations"].empty());
  CHECK(j.contains("elapsed_ms"));
  CHECK(j["parameters"]["n"] == "5");
}

TEST_CASE("quartet-free orders exit with status 2") {
  for (const char* n : {"6", "7", "11", "14", "19"}) {
    const auto r = invoke({"pack-single", n});
    CHECK(r.status == 2);
    CHECK(r.err.find("prime congruent to 3 mod 4") != std::string::npos);
    CHECK(std::count(r.err.begin(), r.err.end(), '\n') == 1);
  }
}

TEST_CASE("usage errors exit with status 2") {
  CHECK(invoke({}).status == 2);
  CHECK(invoke({"frobnicate", "3"}).status == 2);
  CHECK(invoke({"pack-odd"}).status == 2);
  CHECK(invoke({"pack-odd", "five"}).status == 2);
  CHECK(invoke({"pack-odd", "5", "--report", "yaml"}).status == 2);
  CHECK(invoke({"pack-odd", "4"}).status == 2);
  CHECK(invoke({"mols", "7"}).status == 2);
  const auto capped = invoke({"pack-odd", "11"});
  CHECK(capped.status == 2);
  CHECK(capped.err.find("cap") != std::string::npos);
  CHECK(invoke({"verify", temp_file("does-not-exist").string()}).status == 2);
  CHECK(invoke({"--help"}).status == 0);
}

TEST_CASE("verify flags duplicated lines") {
  const auto path = temp_file("dup.txt");
  const auto once = invoke({"pack-single", "5", "--out", "-"});
  REQUIRE(once.status == 0);
  const auto corpus = latpack::parse_corpus(once.out);
  write(path, latpack::render_corpus({{corpus.matrices[0], corpus.matrices[0]}, ""}));

  const auto r = invoke({"verify", path.string(), "--report", "json"});
  CHECK(r.status == 1);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["verdict"] == "fail");
  CHECK(j["violations"].size() == 20);
  CHECK(j["violations"][0]["matrix"] == 2);
  CHECK(j["violations"][0]["kind"] == "row");
  CHECK(j["violations"][0]["index"] == 1);
  CHECK(j["violations"][0]["duplicate_of"]["matrix"] == 1);

  const auto text = invoke({"verify", path.string()});
  CHECK(text.out.find("violation: matrix 2 row 1 duplicates matrix 1 row 1") != std::string::npos);
  fs::remove(path);
}

TEST_CASE("malformed corpus exits 2 naming the line") {
  const auto path = temp_file("bad.txt");
  write(path, "2\n1 2\n2\n");
  const auto r = invoke({"verify", path.string()});
  CHECK(r.status == 2);
  CHECK(r.err.find("line 3") != std::string::npos);
  fs::remove(path);
}

TEST_CASE("constructions are byte-for-byte deterministic") {
  for (std::vector<std::string> cmd : {std::vector<std::string>{"pack-odd", "7"}, {"pack-even", "6"},
                                       {"pack-subgroup", "8"}, {"pack-single", "12"}, {"mols", "13"},
                                       {"min-lines", "8"}, {"subgroup-4n", "10"},
                                       {"pack-odd", "5", "--pairing", "seeded", "--seed", "4"}}) {
    cmd.insert(cmd.end(), {"--out", "-"});
    const auto a = invoke(cmd), b = invoke(cmd);
    CHECK(a.status == 0);
    CHECK(!a.out.empty());
    CHECK(a.out == b.out);
  }
}

TEST_CASE("construction verdict matches verify on the emitted corpus") {
  const auto path = temp_file("emitted.txt");
  for (std::vector<std::string> cmd : {std::vector<std::string>{"pack-odd", "5"}, {"pack-even", "6"},
                                       {"pack-subgroup", "6"}, {"pack-single", "9"}, {"mols", "13"}}) {
    cmd.insert(cmd.end(), {"--out", path.string(), "--report", "json"});
    const auto built = invoke(cmd);
    const auto checked = invoke({"verify", path.string(), "--report", "json"});
    CHECK(nlohmann::json::parse(built.out)["verdict"] == nlohmann::json::parse(checked.out)["verdict"]);
    CHECK(built.status == checked.status);
  }
  fs::remove(path);
}

TEST_CASE("report goes to stderr when the corpus goes to stdout") {
  const auto r = invoke({"min-lines", "4", "--out", "-"});
  CHECK(r.status == 0);
  CHECK(r.out == "# source: min-lines 4\n4\n1 2 4 3\n2 1 3 4\n4 3 1 2\n3 4 2 1\n");
  CHECK(r.err.find("verdict: pass") != std::string::npos);
}

TEST_CASE("seeded pairing and --no-verify") {
  const auto canonical = invoke({"pack-odd", "7", "--out", "-"});
  const auto seeded = invoke({"pack-odd", "7", "--pairing", "seeded", "--seed", "9", "--out", "-"});
  CHECK(seeded.status == 0);
  CHECK(seeded.out != canonical.out);
  CHECK(seeded.err.find("verdict: pass") != std::string::npos);

  const auto quiet = invoke({"pack-even", "8", "--no-verify", "--report", "json"});
  CHECK(quiet.status == 0);
  CHECK(nlohmann::json::parse(quiet.out)["verdict"] == "unverified");
  CHECK(nlohmann::json::parse(quiet.out)["matrix_count"] == 1260);
}

TEST_CASE("classify reports one entry per matrix") {
  const auto path = temp_file("classify.txt");
  write(path, "3\n2 3 1\n3 1 2\n1 2 3\n\n6\n2 3 1 4 6 5\n3 1 2 5 4 6\n1 2 3 6 5 4\n4 5 6 3 2 1\n6 4 5 2 1 3\n5 6 4 1 3 2\n");
  const auto r = invoke({"classify", path.string(), "--report", "json"});
  CHECK(r.status == 0);
  const auto j = nlohmann::json::parse(r.out);
  REQUIRE(j["matrices"].size() == 2);
  CHECK(j["matrices"][0]["symmetric"] == true);
  CHECK(j["matrices"][0]["hankel_symmetric"] == false);
  CHECK(j["matrices"][0]["distinct_lines"] == 6);
  CHECK(j["matrices"][1]["centrosymmetric"] == true);
  CHECK(j["matrices"][1]["distinct_lines"] == 6);
  fs::remove(path);
}

TEST_CASE("enumerate and subgroup-4n") {
  const auto e = invoke({"enumerate", "4", "--report", "json"});
  CHECK(e.status == 0);
  const auto j = nlohmann::json::parse(e.out);
  CHECK(j["matrix_count"] == 576);
  CHECK(j["distinct_lines"] == 4);
  CHECK(j["checks"]["classification"] == true);

  const auto listed = invoke({"enumerate", "3", "--out", "-"});
  CHECK(latpack::parse_corpus(listed.out).matrices.size() == 12);

  const auto g = invoke({"subgroup-4n", "10", "--out", "-"});
  CHECK(g.status == 0);
  CHECK(std::count(g.out.begin(), g.out.end(), '\n') == 40);
}
