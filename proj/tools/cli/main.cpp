#include <fstream>
#include <iostream>

#include "CLI11.hpp"

#include "commands.hpp"
#include "modrep_version.hpp"

using namespace modrep::cli;

int main(int argc, char** argv) {
  CLI::App app{"Modular representation workbench for finite truncations of profinite groups"};
  app.set_version_flag("--version", std::string(kModrepVersion));
  app.require_subcommand(1);

  Config cfg;
  std::string format = "text";
  std::string out_path;
  std::string input;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "structured"}));
    sub->add_option("--out", out_path, "Write the report to this file");
  };
  auto add_run = [&](CLI::App* sub) {
    sub->add_option("file", input, "Input description")->required();
    sub->add_option("--seed", cfg.seed, "Seed for every random choice");
    sub->add_option("--budget-iso", cfg.budgets.iso, "Enumeration cap for isomorphism tests")
        ->check(CLI::PositiveNumber);
    sub->add_option("--budget-subgroups", cfg.budgets.subgroups, "Cap on enumerated subgroup classes")
        ->check(CLI::PositiveNumber);
    sub->add_option("--max-group-order", cfg.budgets.max_group_order, "Largest group the input may generate")
        ->check(CLI::PositiveNumber);
    sub->add_option("--module", cfg.module, "Module to work on");
    add_common(sub);
  };

  add_run(app.add_subcommand("decompose", "Krull-Schmidt decomposition and End/Rad table"));
  add_run(app.add_subcommand("vertex", "Vertex and sources of an indecomposable module"));
  auto* relproj = app.add_subcommand("relproj", "Relative projectivity with respect to a subgroup");
  add_run(relproj);
  relproj->add_option("--subgroup", cfg.subgroup, "Subgroup to test against");
  add_run(app.add_subcommand("tower", "Coinvariant tower and summand counts per level"));
  add_run(app.add_subcommand("green", "Induction of a subgroup module up a tower"));
  auto* verify = app.add_subcommand("verify", "Re-check a structured report");
  verify->add_option("certificate", input, "Structured report to check")->required();
  add_common(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kParseError;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  Outcome result = command == "verify" ? run_verify_file(input) : run_command_file(command, input, cfg);

  const std::string body = format == "structured" ? result.doc.dump(2) + "\n" : render_text(result.doc);
  if (out_path.empty()) {
    std::cout << body;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out || !(out << body)) {
      std::cerr << "cannot write '" << out_path << "'\n";
      return kDomainError;
    }
  }
  if (result.exit_code != kOk && result.doc.contains("error"))
    std::cerr << "modrep: " << result.doc["error"]["message"].get<std::string>() << "\n";
  else if (result.exit_code == kVerificationFailed)
    std::cerr << "modrep: certificate rejected\n";
  return result.exit_code;
}
