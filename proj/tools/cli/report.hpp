#pragma once

#include <cstdint>
#include <string>

#include "json.hpp"

#include "modrep/error.hpp"

namespace modrep::cli {

using nlohmann::json;

enum ExitCode : int {
  kOk = 0,
  kDomainError = 1,
  kParseError = 2,
  kBudgetExhausted = 3,
  kVerificationFailed = 4,
  kInternalAssertion = 5,
};

int exit_code_for(Errc code);

struct Budgets {
  std::uint64_t iso = 1u << 16;
  std::size_t subgroups = 10000;
  std::size_t max_group_order = 20000;
};

struct Config {
  std::uint64_t seed = 0;
  Budgets budgets;
  std::string module;    // empty: the default module
  std::string subgroup;  // empty: the default subgroup
};

/// Lower-case hex SHA-256.
std::string sha256_hex(const std::string& data);

/// Adds "digest" over the compact dump of everything else.
void seal(json& doc);
/// Whether "digest" matches the rest of the document.
bool seal_intact(const json& doc);

json provenance(const Config& cfg);
std::string canonical(const json& doc);

}  // namespace modrep::cli
