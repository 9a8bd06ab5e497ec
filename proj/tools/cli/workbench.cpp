#include "workbench.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>

#include "modrep/error.hpp"

namespace modrep::cli {

ParseError::ParseError(std::size_t line, const std::string& what)
    : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

const ModuleEntry& Workbench::module(const std::string& name) const {
  auto it = modules.find(name);
  if (it == modules.end()) throw ParseError(0, "no module named '" + name + "'");
  return it->second;
}

const SubgroupEntry& Workbench::subgroup(const std::string& name) const {
  auto it = subgroups.find(name);
  if (it == subgroups.end()) throw ParseError(0, "no subgroup named '" + name + "'");
  return it->second;
}

namespace {

struct Entry {
  std::string key;
  std::string value;
  std::size_t line = 0;
};

struct Section {
  std::string kind;
  std::string name;
  std::size_t line = 0;
  std::vector<Entry> entries;

  std::vector<const Entry*> all(const std::string& key) const {
    std::vector<const Entry*> out;
    for (const auto& e : entries)
      if (e.key == key) out.push_back(&e);
    return out;
  }
  const Entry* one(const std::string& key) const {
    auto v = all(key);
    if (v.size() > 1) throw ParseError(v[1]->line, "duplicate key '" + key + "'");
    return v.empty() ? nullptr : v[0];
  }
  const Entry& required(const std::string& key) const {
    auto e = one(key);
    if (!e) throw ParseError(line, "[" + kind + "] section needs '" + key + "'");
    return *e;
  }
  void allow(std::initializer_list<std::string_view> keys) const {
    for (const auto& e : entries) {
      std::string head = e.key.substr(0, e.key.find(' '));
      if (std::find(keys.begin(), keys.end(), head) == keys.end())
        throw ParseError(e.line, "unknown key '" + e.key + "' in [" + kind + "]");
    }
  }
};

std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    auto pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::vector<std::string> words(std::string_view s) {
  std::istringstream is{std::string(s)};
  std::vector<std::string> out;
  for (std::string w; is >> w;) out.push_back(w);
  return out;
}

bool valid_name(const std::string& s) {
  if (s.empty()) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '.';
  });
}

unsigned long long to_uint(const std::string& s, std::size_t line, const char* what) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    throw ParseError(line, std::string("expected a non-negative integer for ") + what + ", got '" + s + "'");
  if (s.size() > 12) throw ParseError(line, std::string(what) + " is too large");
  return std::stoull(s);
}

std::vector<Section> read_sections(std::istream& in) {
  std::vector<Section> out;
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    auto hash = raw.find('#');
    const std::string text = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (text.empty()) continue;
    if (text.front() == '[') {
      if (text.back() != ']') throw ParseError(line, "unterminated section header");
      auto head = words(text.substr(1, text.size() - 2));
      if (head.empty() || head.size() > 2) throw ParseError(line, "section header must be [kind] or [kind NAME]");
      static const std::set<std::string> kinds{"field", "group", "subgroup", "module", "tower"};
      if (!kinds.count(head[0])) throw ParseError(line, "unknown section kind '" + head[0] + "'");
      if (head.size() == 2 && !valid_name(head[1])) throw ParseError(line, "invalid name '" + head[1] + "'");
      out.push_back({head[0], head.size() == 2 ? head[1] : "", line, {}});
      continue;
    }
    auto eq = text.find('=');
    if (eq == std::string::npos) throw ParseError(line, "expected 'key = value'");
    if (out.empty()) throw ParseError(line, "entry before the first section header");
    auto key = words(text.substr(0, eq));
    if (key.empty()) throw ParseError(line, "missing key before '='");
    std::string joined = key[0];
    for (std::size_t i = 1; i < key.size(); ++i) joined += " " + key[i];
    out.back().entries.push_back({joined, trim(text.substr(eq + 1)), line});
  }
  return out;
}

Matrix parse_matrix(const FieldPtr& f, std::size_t dim, const Entry& e) {
  Matrix m(f, dim, dim);
  if (dim == 0) {
    if (!trim(e.value).empty()) throw ParseError(e.line, "a 0-dimensional module takes empty matrices");
    return m;
  }
  auto rows = split(e.value, ';');
  if (rows.size() != dim) throw ParseError(e.line, "matrix needs " + std::to_string(dim) + " rows separated by ';'");
  for (std::size_t r = 0; r < dim; ++r) {
    auto w = words(rows[r]);
    if (w.size() != dim) throw ParseError(e.line, "matrix row " + std::to_string(r + 1) + " needs " +
                                                      std::to_string(dim) + " entries");
    for (std::size_t c = 0; c < dim; ++c) {
      auto v = to_uint(w[c], e.line, "a field element");
      if (v >= f->order()) throw ParseError(e.line, "field element " + w[c] + " out of range for " + f->name());
      m(r, c) = static_cast<Elem>(v);
    }
  }
  return m;
}

// Library failures while building input are reported against the section;
// an exhausted budget passes through unchanged.
template <class Fn>
auto at_line(std::size_t line, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const Error& e) {
    if (e.code() == Errc::GroupTooLarge || e.code() == Errc::SearchBudgetExceeded) throw;
    throw ParseError(line, e.what());
  }
}

class Builder {
 public:
  Builder(std::vector<Section> sections, std::size_t max_order) : sections_(std::move(sections)), max_order_(max_order) {}

  Workbench build() {
    for (const auto& s : sections_) {
      if (s.kind == "field") field_sections_.push_back(&s);
      if (s.kind == "group") add_named(group_sections_, s, "G");
      if (s.kind == "subgroup") add_named(subgroup_sections_, s, "");
      if (s.kind == "module") add_named(module_sections_, s, "");
      if (s.kind == "tower") tower_sections_.push_back(&s);
    }
    if (field_sections_.size() != 1)
      throw ParseError(field_sections_.empty() ? 0 : field_sections_[1]->line, "exactly one [field] section is required");
    build_field(*field_sections_[0]);
    if (group_sections_.empty()) throw ParseError(0, "at least one [group] section is required");
    if (tower_sections_.size() > 1) throw ParseError(tower_sections_[1]->line, "at most one [tower] section");
    for (const auto& [name, s] : group_sections_) build_group(name, *s);
    for (const auto& [name, s] : subgroup_sections_) build_subgroup(name, *s);
    for (const auto& [name, s] : module_sections_) build_module(name);
    if (!tower_sections_.empty()) build_tower(*tower_sections_[0]);
    return std::move(wb_);
  }

 private:
  void add_named(std::map<std::string, const Section*>& into, const Section& s, const std::string& fallback) {
    std::string name = s.name.empty() ? fallback : s.name;
    if (name.empty()) throw ParseError(s.line, "[" + s.kind + "] needs a name");
    if (taken_.count(name)) throw ParseError(s.line, "name '" + name + "' is already used");
    taken_.insert(name);
    into[name] = &s;
  }

  void build_field(const Section& s) {
    s.allow({"p", "deg", "modulus"});
    const auto& pe = s.required("p");
    const auto p = to_uint(pe.value, pe.line, "p");
    unsigned long long deg = 1;
    if (auto d = s.one("deg")) deg = to_uint(d->value, d->line, "deg");
    std::optional<std::vector<unsigned>> modulus;
    if (auto m = s.one("modulus")) {
      modulus.emplace();
      for (const auto& w : words(m->value)) modulus->push_back(static_cast<unsigned>(to_uint(w, m->line, "a coefficient")));
    }
    if (p > 65536 || deg > 16 || deg == 0) throw ParseError(s.line, "field order out of range");
    wb_.field = at_line(s.line, [&] { return FiniteField::make(static_cast<unsigned>(p), static_cast<unsigned>(deg), modulus); });
  }

  std::vector<Perm> perms(const std::vector<const Entry*>& es, unsigned degree) {
    std::vector<Perm> out;
    for (auto e : es) out.push_back(at_line(e->line, [&] { return Perm::parse(e->value, degree); }));
    return out;
  }

  void build_group(const std::string& name, const Section& s) {
    s.allow({"degree", "gen"});
    const auto& de = s.required("degree");
    const auto degree = to_uint(de.value, de.line, "degree");
    if (degree == 0 || degree > 65535) throw ParseError(de.line, "degree out of range");
    auto gens = perms(s.all("gen"), static_cast<unsigned>(degree));
    wb_.groups[name] = at_line(s.line, [&] { return PermGroup::make(static_cast<unsigned>(degree), gens, max_order_); });
  }

  std::string sole_group(const Section& s) {
    if (wb_.groups.size() != 1) throw ParseError(s.line, "several groups declared; name one with 'of' or 'over'");
    return wb_.groups.begin()->first;
  }

  void build_subgroup(const std::string& name, const Section& s) {
    s.allow({"of", "gen"});
    std::string of = s.one("of") ? s.one("of")->value : sole_group(s);
    auto it = wb_.groups.find(of);
    if (it == wb_.groups.end()) throw ParseError(s.one("of")->line, "no group named '" + of + "'");
    const GroupPtr& g = it->second;
    auto gens = perms(s.all("gen"), g->degree());
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      auto k = g->index_of(gens[i]);
      if (!k) throw ParseError(s.all("gen")[i]->line, "generator is not an element of '" + of + "'");
      idx.push_back(*k);
    }
    SubgroupEntry e{of, gens, subgroup_generated(g, idx), {}};
    e.standalone = standalone(e.subgroup);
    wb_.subgroups[name] = std::move(e);
  }

  const ModuleEntry& build_module(const std::string& name) {
    if (auto it = wb_.modules.find(name); it != wb_.modules.end()) return it->second;
    auto sit = module_sections_.find(name);
    if (sit == module_sections_.end()) throw ParseError(0, "no module named '" + name + "'");
    const Section& s = *sit->second;
    if (in_progress_.count(name)) throw ParseError(s.line, "module '" + name + "' depends on itself");
    in_progress_.insert(name);
    s.allow({"over", "kind", "cosets", "dim", "gen", "from", "parts"});

    ModuleEntry out;
    out.over = s.one("over") ? s.one("over")->value : sole_group(s);
    GroupPtr g;
    const SubgroupEntry* sub = nullptr;
    if (auto git = wb_.groups.find(out.over); git != wb_.groups.end()) {
      g = git->second;
    } else if (auto hit = wb_.subgroups.find(out.over); hit != wb_.subgroups.end()) {
      sub = &hit->second;
      g = sub->standalone.group;
      out.over_subgroup = true;
    } else {
      throw ParseError(s.one("over")->line, "no group or subgroup named '" + out.over + "'");
    }
    const auto& F = wb_.field;
    const auto& ke = s.required("kind");
    const std::string& kind = ke.value;
    auto need_only = [&](std::initializer_list<std::string_view> keys) {
      for (const auto& e : s.entries)
        if (e.key != "over" && e.key != "kind" && std::find(keys.begin(), keys.end(), e.key) == keys.end())
          throw ParseError(e.line, "key '" + e.key + "' does not apply to kind '" + kind + "'");
    };

    if (kind == "trivial") {
      need_only({});
      out.module = trivial_module(g, F);
    } else if (kind == "regular") {
      need_only({});
      out.module = regular_module(g, F);
    } else if (kind == "permutation") {
      need_only({"cosets"});
      const auto& ce = s.required("cosets");
      auto kit = wb_.subgroups.find(ce.value);
      if (kit == wb_.subgroups.end()) throw ParseError(ce.line, "no subgroup named '" + ce.value + "'");
      const auto& k = kit->second;
      if (!sub) {
        if (k.of != out.over) throw ParseError(ce.line, "'" + ce.value + "' is not a subgroup of '" + out.over + "'");
        out.module = permutation_module(k.subgroup, F);
      } else {
        if (k.of != sub->of || !is_subgroup_of(k.subgroup, sub->subgroup))
          throw ParseError(ce.line, "'" + ce.value + "' is not contained in '" + out.over + "'");
        out.module = permutation_module(to_standalone(k.subgroup, sub->standalone), F);
      }
    } else if (kind == "matrices") {
      need_only({"dim", "gen"});
      const auto& de = s.required("dim");
      const auto dim = to_uint(de.value, de.line, "dim");
      if (dim > 4096) throw ParseError(de.line, "dim too large");
      const auto gens = s.all("gen");
      const std::vector<Perm>& declared = sub ? sub->generators : g->generators();
      if (gens.size() != declared.size())
        throw ParseError(s.line, "expected " + std::to_string(declared.size()) + " 'gen' matrices, one per generator of '" +
                                     out.over + "'");
      std::vector<Matrix> mats;
      for (auto e : gens) mats.push_back(parse_matrix(F, dim, *e));
      out.module = at_line(s.line, [&] {
        if (!sub) return Module::from_generators(g, F, dim, mats);
        auto d = PermGroup::make(g->degree(), declared, max_order_);
        return reindex(Module::from_generators(d, F, dim, mats), g);
      });
    } else if (kind == "induced") {
      need_only({"from"});
      const auto& fe = s.required("from");
      const auto& v = build_module(fe.value);
      if (sub || !v.over_subgroup || wb_.subgroups.at(v.over).of != out.over)
        throw ParseError(fe.line, "'induced' needs a module over a subgroup of '" + out.over + "'");
      const auto& h = wb_.subgroups.at(v.over);
      out.module = induce(v.module, h.subgroup, h.standalone);
    } else if (kind == "restricted") {
      need_only({"from"});
      const auto& fe = s.required("from");
      const auto& u = build_module(fe.value);
      if (!sub || u.over_subgroup || u.over != sub->of)
        throw ParseError(fe.line, "'restricted' needs 'over' a subgroup of the group of '" + fe.value + "'");
      out.module = restrict(u.module, sub->subgroup, sub->standalone);
    } else if (kind == "sum") {
      need_only({"parts"});
      const auto& pe = s.required("parts");
      std::vector<Module> parts;
      for (const auto& w : words(pe.value)) {
        const auto& m = build_module(w);
        if (m.over != out.over) throw ParseError(pe.line, "part '" + w + "' is not over '" + out.over + "'");
        parts.push_back(m.module);
      }
      if (parts.empty()) throw ParseError(pe.line, "'parts' lists no modules");
      out.module = direct_sum(parts);
    } else {
      throw ParseError(ke.line, "unknown module kind '" + kind + "'");
    }
    in_progress_.erase(name);
    return wb_.modules[name] = std::move(out);
  }

  void build_tower(const Section& s) {
    s.allow({"levels", "map", "module"});
    const auto& le = s.required("levels");
    const auto names = words(le.value);
    std::map<std::string, std::vector<Perm>> map_perms;
    std::optional<std::string> module;
    if (names.empty()) throw ParseError(le.line, "'levels' lists no groups");
    std::vector<GroupPtr> groups;
    for (const auto& n : names) {
      auto it = wb_.groups.find(n);
      if (it == wb_.groups.end()) throw ParseError(le.line, "no group named '" + n + "'");
      groups.push_back(it->second);
    }
    std::vector<QuotientMap> maps;
    for (std::size_t i = 1; i < names.size(); ++i) {
      const auto& e = s.required("map " + names[i]);
      std::vector<std::size_t> images;
      std::vector<Perm> perms_out;
      for (const auto& w : split(e.value, ',')) {
        auto p = at_line(e.line, [&] { return Perm::parse(w, groups[i - 1]->degree()); });
        auto k = groups[i - 1]->index_of(p);
        if (!k) throw ParseError(e.line, "image " + w + " is not in '" + names[i - 1] + "'");
        images.push_back(*k);
        perms_out.push_back(p);
      }
      if (images.size() != groups[i]->generators().size())
        throw ParseError(e.line, "map needs one image per generator of '" + names[i] + "'");
      maps.push_back(at_line(e.line, [&] { return QuotientMap::from_generator_images(groups[i], groups[i - 1], images); }));
      map_perms[names[i]] = std::move(perms_out);
    }
    for (const auto& e : s.entries)
      if (e.key.rfind("map ", 0) == 0 && !map_perms.count(e.key.substr(4)))
        throw ParseError(e.line, "'" + e.key + "' does not name a level above the first");
    if (auto m = s.one("module")) {
      const auto& u = build_module(m->value);
      if (u.over != names.back()) throw ParseError(m->line, "the tower module must be over the top level");
      module = m->value;
    }
    wb_.tower.emplace(TowerEntry{names, std::move(map_perms), module, at_line(s.line, [&] { return Tower(groups, maps); })});
  }

  std::vector<Section> sections_;
  std::size_t max_order_;
  Workbench wb_;
  std::set<std::string> taken_, in_progress_;
  std::vector<const Section*> field_sections_, tower_sections_;
  std::map<std::string, const Section*> group_sections_, subgroup_sections_, module_sections_;
};

std::vector<std::string> perm_strings(const std::vector<Perm>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(p.to_string());
  return out;
}

}  // namespace

Workbench parse_workbench(std::istream& in, std::size_t max_group_order) {
  return Builder(read_sections(in), max_group_order).build();
}

Workbench parse_workbench_file(const std::string& path, std::size_t max_group_order) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  return parse_workbench(in, max_group_order);
}

json matrix_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(std::vector<Elem>(m.row(r).begin(), m.row(r).end()));
  return rows;
}

Matrix matrix_from_json(const FieldPtr& f, const json& j) {
  if (!j.is_array()) throw ParseError(0, "matrix must be an array of rows");
  const std::size_t rows = j.size();
  const std::size_t cols = rows ? j[0].size() : 0;
  Matrix m(f, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (!j[r].is_array() || j[r].size() != cols) throw ParseError(0, "matrix rows have different lengths");
    for (std::size_t c = 0; c < cols; ++c) {
      if (!j[r][c].is_number_unsigned() || j[r][c].get<std::uint64_t>() >= f->order())
        throw ParseError(0, "matrix entry is not a field element");
      m(r, c) = j[r][c].get<Elem>();
    }
  }
  return m;
}

json subgroup_json(const Subgroup& h) {
  std::vector<Perm> gens;
  for (auto x : subgroup_generators(h)) gens.push_back(h.parent()->element(x));
  return {{"order", h.order()}, {"generators", perm_strings(gens)}};
}

Subgroup subgroup_from_json(const GroupPtr& g, const json& j) {
  std::vector<std::size_t> idx;
  for (const auto& s : j.at("generators")) {
    auto k = g->index_of(Perm::parse(s.get<std::string>(), g->degree()));
    if (!k) throw ParseError(0, "subgroup generator is not in the group");
    idx.push_back(*k);
  }
  auto h = subgroup_generated(g, idx);
  if (h.order() != j.at("order").get<std::size_t>()) throw ParseError(0, "subgroup order does not match its generators");
  return h;
}

json module_json(const Module& u) {
  const auto& g = *u.group();
  json mats = json::array();
  for (auto x : g.generator_indices()) mats.push_back(matrix_json(u.rho(x)));
  return {{"group", {{"degree", g.degree()}, {"generators", perm_strings(g.generators())}}},
          {"dim", u.dim()},
          {"generators", mats}};
}

Module module_from_json(const FieldPtr& f, const json& j) {
  const auto& gj = j.at("group");
  const unsigned degree = gj.at("degree").get<unsigned>();
  std::vector<Perm> gens;
  for (const auto& s : gj.at("generators")) gens.push_back(Perm::parse(s.get<std::string>(), degree));
  auto g = PermGroup::make(degree, gens);
  const auto dim = j.at("dim").get<std::size_t>();
  std::vector<Matrix> mats;
  for (const auto& m : j.at("generators")) {
    mats.push_back(matrix_from_json(f, m));
    if (mats.back().rows() != dim || mats.back().cols() != dim) {
      if (dim != 0 || mats.back().rows() != 0) throw ParseError(0, "generator matrix has the wrong size");
      mats.back() = Matrix(f, 0, 0);
    }
  }
  return Module::from_generators(g, f, dim, mats);
}

json to_json(const Workbench& wb) {
  json j;
  const auto& F = *wb.field;
  j["field"] = {{"p", F.characteristic()}, {"deg", F.degree()}};
  if (F.degree() > 1) j["field"]["modulus"] = F.modulus();
  j["groups"] = json::object();
  for (const auto& [name, g] : wb.groups)
    j["groups"][name] = {{"degree", g->degree()}, {"generators", perm_strings(g->generators())}};
  j["subgroups"] = json::object();
  for (const auto& [name, h] : wb.subgroups)
    j["subgroups"][name] = {{"of", h.of}, {"generators", perm_strings(h.generators)}};
  j["modules"] = json::object();
  for (const auto& [name, m] : wb.modules) {
    json mats = json::array();
    if (m.over_subgroup) {
      const auto& h = wb.subgroups.at(m.over);
      const auto& parent = *h.subgroup.parent();
      for (const auto& p : h.generators) mats.push_back(matrix_json(m.module.rho(h.standalone.from_parent.at(*parent.index_of(p)))));
    } else {
      for (auto x : m.module.group()->generator_indices()) mats.push_back(matrix_json(m.module.rho(x)));
    }
    j["modules"][name] = {{"over", m.over}, {"dim", m.module.dim()}, {"generators", mats}};
  }
  if (wb.tower) {
    json maps = json::object();
    for (const auto& [name, ps] : wb.tower->maps) maps[name] = perm_strings(ps);
    j["tower"] = {{"levels", wb.tower->levels}, {"maps", maps}};
    if (wb.tower->module) j["tower"]["module"] = *wb.tower->module;
  }
  return j;
}

// The canonical JSON is turned back into sections so both inputs share one
// builder and one set of checks.
Workbench workbench_from_json(const json& j, std::size_t max_group_order) {
  try {
    std::vector<Section> sections;
    auto add = [&](std::string kind, std::string name) -> Section& {
      sections.push_back({std::move(kind), std::move(name), 0, {}});
      return sections.back();
    };
    auto& f = add("field", "");
    const auto& fj = j.at("field");
    f.entries.push_back({"p", std::to_string(fj.at("p").get<unsigned>()), 0});
    f.entries.push_back({"deg", std::to_string(fj.at("deg").get<unsigned>()), 0});
    if (fj.contains("modulus")) {
      std::string mod;
      for (const auto& c : fj.at("modulus")) mod += std::to_string(c.get<unsigned>()) + " ";
      f.entries.push_back({"modulus", mod, 0});
    }
    for (const auto& [name, g] : j.at("groups").items()) {
      auto& s = add("group", name);
      s.entries.push_back({"degree", std::to_string(g.at("degree").get<unsigned>()), 0});
      for (const auto& p : g.at("generators")) s.entries.push_back({"gen", p.get<std::string>(), 0});
    }
    for (const auto& [name, h] : j.at("subgroups").items()) {
      auto& s = add("subgroup", name);
      s.entries.push_back({"of", h.at("of").get<std::string>(), 0});
      for (const auto& p : h.at("generators")) s.entries.push_back({"gen", p.get<std::string>(), 0});
    }
    for (const auto& [name, m] : j.at("modules").items()) {
      auto& s = add("module", name);
      s.entries.push_back({"over", m.at("over").get<std::string>(), 0});
      s.entries.push_back({"kind", "matrices", 0});
      s.entries.push_back({"dim", std::to_string(m.at("dim").get<std::size_t>()), 0});
      for (const auto& g : m.at("generators")) {
        if (!g.is_array()) throw ParseError(0, "generator matrix must be an array");
        std::string text;
        for (std::size_t r = 0; r < g.size(); ++r) {
          if (r) text += " ; ";
          for (std::size_t c = 0; c < g[r].size(); ++c)
            text += (c ? " " : "") + std::to_string(g[r][c].get<std::uint64_t>());
        }
        s.entries.push_back({"gen", text, 0});
      }
    }
    if (j.contains("tower")) {
      const auto& tj = j.at("tower");
      auto& s = add("tower", "");
      std::string levels;
      for (const auto& l : tj.at("levels")) levels += l.get<std::string>() + " ";
      s.entries.push_back({"levels", levels, 0});
      for (const auto& [name, ps] : tj.at("maps").items()) {
        std::string text;
        for (const auto& p : ps) text += (text.empty() ? "" : ", ") + p.get<std::string>();
        s.entries.push_back({"map " + name, text, 0});
      }
      if (tj.contains("module")) s.entries.push_back({"module", tj.at("module").get<std::string>(), 0});
    }
    return Builder(std::move(sections), max_group_order).build();
  } catch (const json::exception& e) {
    throw ParseError(0, std::string("malformed input block: ") + e.what());
  }
}

}  // namespace modrep::cli
