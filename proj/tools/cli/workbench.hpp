#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "modrep/module.hpp"
#include "modrep/tower.hpp"

namespace modrep::cli {

using nlohmann::json;

/// A problem with the input description. `line` is 1-based; 0 when the
/// input did not come from a text file.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

struct SubgroupEntry {
  std::string of;
  std::vector<Perm> generators;  // as declared
  Subgroup subgroup;
  StandaloneSubgroup standalone;
};

struct ModuleEntry {
  std::string over;  // a group or a subgroup name
  bool over_subgroup = false;
  Module module;     // over the group, or over standalone(subgroup).group
};

struct TowerEntry {
  std::vector<std::string> levels;                  // coarsest first
  std::map<std::string, std::vector<Perm>> maps;    // level -> images in the level below
  std::optional<std::string> module;
  Tower tower;
};

/// Everything one input file declares, fully built and validated.
struct Workbench {
  FieldPtr field;
  std::map<std::string, GroupPtr> groups;
  std::map<std::string, SubgroupEntry> subgroups;
  std::map<std::string, ModuleEntry> modules;
  std::optional<TowerEntry> tower;

  const ModuleEntry& module(const std::string& name) const;
  const SubgroupEntry& subgroup(const std::string& name) const;
};

/// Reads the sectioned text format. Throws ParseError.
Workbench parse_workbench(std::istream& in, std::size_t max_group_order);
Workbench parse_workbench_file(const std::string& path, std::size_t max_group_order);

/// Canonical form: every module as explicit generator matrices.
json to_json(const Workbench& wb);
Workbench workbench_from_json(const json& j, std::size_t max_group_order);

json matrix_json(const Matrix& m);
Matrix matrix_from_json(const FieldPtr& f, const json& j);
/// Generator strings of a subgroup (greedy generating set).
json subgroup_json(const Subgroup& h);
Subgroup subgroup_from_json(const GroupPtr& g, const json& j);
/// A module over an arbitrary group, with that group's generators.
json module_json(const Module& u);
Module module_from_json(const FieldPtr& f, const json& j);

}  // namespace modrep::cli
