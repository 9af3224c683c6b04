#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "oortlab/commands.hpp"
#include "oortlab/errors.hpp"

int main(int argc, char** argv) {
  using namespace oortlab;
  CLI::App app{"Permutation-group constructions and O-group verdicts"};
  app.require_subcommand(1);
  bool table = false;
  app.add_flag("--table", table, "Print a human-readable summary instead of JSON");

  std::string spec;
  std::uint64_t p = 0;
  std::string route = "both";

  auto* construct = app.add_subcommand("construct", "Build a group and print its summary");
  construct->add_option("spec", spec, "Group spec, e.g. PSL2:7")->required();

  auto* check = app.add_subcommand("check", "Decide whether a group is an O-group for p");
  check->add_option("spec", spec, "Group spec")->required();
  check->add_option("--p", p, "Prime")->required();
  check->add_option("--route", route, "def, crit or both")
      ->check(CLI::IsMember({"def", "crit", "both"}))
      ->capture_default_str();

  auto* audit = app.add_subcommand("audit", "Structure report and per-group claim audit");
  audit->add_option("spec", spec, "Group spec")->required();
  audit->add_option("--p", p, "Prime")->required();

  std::string manifest;
  ValidateOptions vopts;
  std::string out;
  auto* validate = app.add_subcommand("validate", "Cross-validate both routes over a manifest");
  validate->add_option("manifest", manifest, "Manifest file")->required();
  validate->add_option("--jobs", vopts.jobs, "Worker threads (0 = all cores)")->capture_default_str();
  validate->add_option("--out", out, "Write one JSON line per (entry, prime) to this file");

  for (auto* sub : {construct, check, audit, validate}) {
    sub->add_flag("--table", table, "Print a human-readable summary instead of JSON");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : exit_code::kInputError;
  }

  CommandOutput result;
  if (*construct) {
    result = cmd_construct(spec, table);
  } else if (*check) {
    result = cmd_check(spec, p, parse_route(route), table);
  } else if (*audit) {
    result = cmd_audit(spec, p, table);
  } else {
    if (!out.empty()) vopts.out = out;
    vopts.table = table;
    result = cmd_validate(manifest, vopts);
  }
  std::cout << result.out;
  std::cerr << result.err;
  return result.exit_code;
}
