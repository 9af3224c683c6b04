#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "oortlab/commands.hpp"
#include "oortlab/errors.hpp"
#include "oortlab/group.hpp"
#include "oortlab/manifest.hpp"

using namespace oortlab;
using nlohmann::json;

namespace {

struct TempFile {
  std::filesystem::path path;
  explicit TempFile(const std::string& name, const std::string& content = "")
      : path(std::filesystem::temp_directory_path() / name) {
    std::ofstream(path) << content;
  }
  ~TempFile() { std::filesystem::remove(path); }
};

std::vector<std::string> lines_of(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::vector<std::string> out;
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST_CASE("manifest parsing") {
  auto m = parse_manifest(
      "# comment\n"
      "\n"
      "D:18 ; p=3 ; expect=T\n"
      "  S:5 ; p=2,3,5 ; expect=T,F,F  \n"
      "PROD:(C:2)x(C:3) ; p=2\n");
  REQUIRE(m.entries.size() == 3);
  CHECK(m.entries[0].spec == "D:18");
  CHECK(m.entries[0].line == 3);
  CHECK(m.entries[1].primes == std::vector<std::uint64_t>{2, 3, 5});
  CHECK(*m.entries[1].expect == std::vector<bool>{true, false, false});
  CHECK_FALSE(m.entries[2].expect.has_value());
  CHECK(parse_manifest("").entries.empty());

  for (const char* bad : {"D:18", "D:18 ; p=", "D:18 ; p=4", "D:18 ; q=3", "D:18 ; p=3 ; expect=T,F",
                          "D:18 ; p=3 ; expect=Y", "X:1 ; p=3", "D:18 ; p=3 ; expect=T ; extra"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_manifest(bad), ParseError);
  }
  CHECK_THROWS_AS(load_manifest("/nonexistent/manifest"), IoError);
}

TEST_CASE("construct") {
  auto o = cmd_construct("PSL2:7");
  CHECK(o.exit_code == exit_code::kOk);
  auto j = json::parse(o.out);
  CHECK(j["order"] == 168);
  CHECK(j["simple"] == true);
  CHECK(json::parse(cmd_construct("C:12").out)["abelian"] == true);
  CHECK(json::parse(cmd_construct("INV:3:8:klein").out)["center_order"] == 2);
  CHECK(cmd_construct("C:").exit_code == exit_code::kInputError);
  CHECK(cmd_construct("S:4", true).out.find("order 24") != std::string::npos);
}

TEST_CASE("check exit codes and JSON") {
  auto both = cmd_check("D:18", 3, RouteChoice::Both);
  CHECK(both.exit_code == exit_code::kOk);
  auto j = json::parse(both.out);
  CHECK(j["routes_agree"] == true);
  CHECK(j["definition"]["is_o_group"] == true);
  CHECK(j["criterion"]["route"] == "criterion-odd");

  auto s5 = cmd_check("S:5", 5, RouteChoice::Definition);
  CHECK(s5.exit_code == exit_code::kNotOGroup);
  auto w = json::parse(s5.out);
  REQUIRE(w["witnesses"].size() == 1);
  CHECK(w["witnesses"][0]["order"] == 20);
  CHECK(w["witnesses"][0]["generators"].size() >= 1);
  CHECK(w.contains("timing_ms"));

  auto crit = cmd_check("PSL3_4", 5, RouteChoice::Criterion);
  CHECK(crit.exit_code == exit_code::kOk);
  CHECK(json::parse(crit.out)["witnesses"].empty());

  CHECK(cmd_check("C:", 3, RouteChoice::Both).exit_code == exit_code::kInputError);
  CHECK(cmd_check("C:6", 4, RouteChoice::Both).exit_code == exit_code::kInputError);
  CHECK(parse_route("crit") == RouteChoice::Criterion);
  CHECK_THROWS_AS(parse_route("fast"), ParseError);

  set_enum_cap(50);
  CHECK(cmd_check("S:5", 5, RouteChoice::Both).exit_code == exit_code::kCapExceeded);
  set_enum_cap(0);

  auto table = cmd_check("Q:8", 2, RouteChoice::Both, true);
  CHECK(table.exit_code == exit_code::kNotOGroup);
  CHECK(table.out.find("routes agree") != std::string::npos);
}

TEST_CASE("audit") {
  auto a = cmd_audit("DELPERM:5:S4:sign", 2);
  CHECK(a.exit_code == exit_code::kOk);
  auto j = json::parse(a.out);
  CHECK(j["report"]["case"] == "G=R:S4");
  CHECK(j["report"]["chief_factors"][0]["trace_order4"] == 1);
  CHECK(j["theorem_violations"].empty());

  CHECK(json::parse(cmd_audit("C:15", 3).out)["report"]["case"] == "G=RP");
  auto a5 = json::parse(cmd_audit("A:5", 2).out);
  CHECK(a5["report"]["quotient"]["relation"] == "consistent-with");
  CHECK(a5["report"]["quotient"]["name"] == "PSL(2,5)");

  auto neg = json::parse(cmd_audit("S:5", 5).out);
  CHECK(neg["report"].is_null());
  CHECK(neg["report_skipped"] == "not an O-group");
  CHECK(cmd_audit("PSL2:7", 3, true).out.find("case G/R almost simple") != std::string::npos);
}

TEST_CASE("validate") {
  TempFile manifest("oortlab_test_manifest.txt",
                    "S:4 ; p=2,3 ; expect=T,T\n"
                    "Q:8 ; p=2 ; expect=F\n"
                    "D:18 ; p=3,5\n");
  TempFile out("oortlab_test_out.jsonl");
  ValidateOptions opts;
  opts.jobs = 2;
  opts.out = out.path.string();
  auto o = cmd_validate(manifest.path.string(), opts);
  CHECK(o.exit_code == exit_code::kOk);
  auto summary = json::parse(o.out);
  CHECK(summary["entries"] == 3);
  CHECK(summary["checks"] == 5);
  CHECK(summary["agreements"] == 5);
  CHECK(summary["disagreements"].empty());
  auto lines = lines_of(out.path);
  REQUIRE(lines.size() == 5);
  std::vector<std::pair<std::string, int>> order;
  for (const auto& l : lines) {
    auto j = json::parse(l);
    order.emplace_back(j["spec"], j["p"]);
    CHECK(j["agree"] == true);
  }
  CHECK(order == std::vector<std::pair<std::string, int>>{{"S:4", 2}, {"S:4", 3}, {"Q:8", 2}, {"D:18", 3}, {"D:18", 5}});

  TempFile wrong("oortlab_test_wrong.txt", "Q:8 ; p=2 ; expect=T\n");
  auto w = cmd_validate(wrong.path.string(), ValidateOptions{});
  CHECK(w.exit_code != exit_code::kOk);
  CHECK(json::parse(w.out)["expect_mismatches"].size() == 1);

  TempFile empty("oortlab_test_empty.txt", "# nothing\n");
  auto e = cmd_validate(empty.path.string(), ValidateOptions{});
  CHECK(e.exit_code == exit_code::kOk);
  CHECK(json::parse(e.out)["entries"] == 0);

  CHECK(cmd_validate("/nonexistent/manifest", ValidateOptions{}).exit_code == exit_code::kInputError);
  ValidateOptions bad_out;
  bad_out.out = "/nonexistent/dir/out.jsonl";
  CHECK(cmd_validate(manifest.path.string(), bad_out).exit_code == exit_code::kInputError);
}

TEST_CASE("validate is deterministic across job counts") {
  CatalogueManifest m = parse_manifest("A:4 ; p=2,3\nS:4 ; p=2,3\nD:10 ; p=2,5\nQ:16 ; p=2\nPSL2:7 ; p=2,3,7\n");
  auto one = validate_manifest(m, 1);
  auto three = validate_manifest(m, 3);
  REQUIRE(one.results.size() == three.results.size());
  for (std::size_t i = 0; i < one.results.size(); ++i) {
    CHECK(one.results[i].spec == three.results[i].spec);
    CHECK(one.results[i].p == three.results[i].p);
    CHECK(one.results[i].definition == three.results[i].definition);
  }
  CHECK(one.ok());
}
