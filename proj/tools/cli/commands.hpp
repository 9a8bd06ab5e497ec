#pragma once

#include <string>

#include "report.hpp"
#include "workbench.hpp"

namespace modrep::cli {

struct Outcome {
  int exit_code = kOk;
  json doc;  // sealed
};

/// decompose, vertex, relproj, tower or green on an already-built input.
Outcome run_command(const std::string& command, const Workbench& wb, const Config& cfg);
/// As above, reading the input file first; parse failures give exit 2.
Outcome run_command_file(const std::string& command, const std::string& path, const Config& cfg);

/// Re-checks a report emitted by run_command: seal, every certificate from
/// scratch, and bit-identical reproduction.
Outcome run_verify(const json& certificate);
Outcome run_verify_file(const std::string& path);

std::string render_text(const json& doc);

}  // namespace modrep::cli
