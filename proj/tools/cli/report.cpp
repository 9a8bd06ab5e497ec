#include "report.hpp"

#include <openssl/evp.h>

#include <array>
#include <cstdio>

#include "modrep_version.hpp"

namespace modrep::cli {

int exit_code_for(Errc code) {
  switch (code) {
    case Errc::SearchBudgetExceeded:
    case Errc::GroupTooLarge:
    case Errc::TooLarge:
    case Errc::IsoUndecided:
      return kBudgetExhausted;
    case Errc::CriteriaDisagree:
    case Errc::MonotonicityViolated:
    case Errc::InternalAssertion:
      return kInternalAssertion;
    default:
      return kDomainError;
  }
}

std::string sha256_hex(const std::string& data) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
  unsigned int len = 0;
  EVP_Digest(data.data(), data.size(), md.data(), &len, EVP_sha256(), nullptr);
  std::string out;
  char buf[3];
  for (unsigned i = 0; i < len; ++i) {
    std::snprintf(buf, sizeof buf, "%02x", md[i]);
    out += buf;
  }
  return out;
}

std::string canonical(const json& doc) { return doc.dump(); }

void seal(json& doc) {
  doc.erase("digest");
  doc["digest"] = sha256_hex(canonical(doc));
}

bool seal_intact(const json& doc) {
  if (!doc.is_object() || !doc.contains("digest") || !doc["digest"].is_string()) return false;
  json body = doc;
  body.erase("digest");
  return sha256_hex(canonical(body)) == doc["digest"].get<std::string>();
}

json provenance(const Config& cfg) {
  return {{"seed", cfg.seed},
          {"budgets",
           {{"iso", cfg.budgets.iso},
            {"subgroups", cfg.budgets.subgroups},
            {"max_group_order", cfg.budgets.max_group_order}}},
          {"version", kModrepVersion}};
}

}  // namespace modrep::cli
