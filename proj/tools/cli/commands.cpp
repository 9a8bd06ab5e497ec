#include "commands.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "modrep/endo.hpp"
#include "modrep/linalg.hpp"
#include "modrep/relproj.hpp"
#include "modrep/tower.hpp"

namespace modrep::cli {

namespace {

constexpr const char* kWindowNote =
    "counts are observed on the computed levels only; stabilization beyond the top level is not certified";

std::string gf_name(unsigned p, std::size_t k) {
  return k == 1 ? "GF(" + std::to_string(p) + ")" : "GF(" + std::to_string(p) + "^" + std::to_string(k) + ")";
}

// ---- selection -------------------------------------------------------------

struct Selection {
  std::string module_name;
  const ModuleEntry* module = nullptr;
  std::string subgroup_name;
  Subgroup subgroup;  // in the numbering of module->module.group()
};

std::string choose(const std::vector<std::string>& names, const char* what, const char* flag) {
  if (names.size() == 1) return names[0];
  std::string list;
  for (const auto& n : names) list += (list.empty() ? "" : ", ") + n;
  if (names.empty()) throw ParseError(0, std::string("no ") + what + " to work on");
  throw ParseError(0, std::string("several ") + what + "s (" + list + "); choose one with " + flag);
}

Selection select_module(const Workbench& wb, const Config& cfg, const std::string& command) {
  Selection s;
  if (!cfg.module.empty()) {
    s.module_name = cfg.module;
  } else if (command == "tower" && wb.tower && wb.tower->module) {
    s.module_name = *wb.tower->module;
  } else {
    std::vector<std::string> names;
    for (const auto& [name, m] : wb.modules) {
      if (command == "tower" && wb.tower && m.over != wb.tower->levels.back()) continue;
      if (command == "green" && wb.tower &&
          !(m.over_subgroup && wb.subgroups.at(m.over).of == wb.tower->levels.back()))
        continue;
      names.push_back(name);
    }
    s.module_name = choose(names, "module", "--module");
  }
  s.module = &wb.module(s.module_name);
  return s;
}

void select_subgroup(const Workbench& wb, const Config& cfg, Selection& s) {
  const ModuleEntry& m = *s.module;
  const std::string group = m.over_subgroup ? wb.subgroups.at(m.over).of : m.over;
  auto fits = [&](const SubgroupEntry& k) {
    if (k.of != group) return false;
    return !m.over_subgroup || is_subgroup_of(k.subgroup, wb.subgroups.at(m.over).subgroup);
  };
  if (!cfg.subgroup.empty()) {
    s.subgroup_name = cfg.subgroup;
  } else {
    std::vector<std::string> names;
    for (const auto& [name, k] : wb.subgroups)
      if (fits(k) && name != m.over) names.push_back(name);
    s.subgroup_name = choose(names, "subgroup", "--subgroup");
  }
  const auto& k = wb.subgroup(s.subgroup_name);
  if (!fits(k)) throw ParseError(0, "subgroup '" + s.subgroup_name + "' does not lie in the group of '" + s.module_name + "'");
  s.subgroup = m.over_subgroup ? to_standalone(k.subgroup, wb.subgroups.at(m.over).standalone) : k.subgroup;
}

const TowerEntry& require_tower(const Workbench& wb) {
  if (!wb.tower) throw ParseError(0, "this command needs a [tower] section");
  return *wb.tower;
}

// ---- results ---------------------------------------------------------------

json decomposition_json(const Module& u, const Decomposition& d, std::uint64_t seed) {
  const auto& F = *u.field();
  json r;
  r["dim"] = u.dim();
  r["summand_count"] = d.summands.size();
  json summands = json::array();
  for (const auto& s : d.summands) {
    EndAlgebra e(s.module);
    json gens = json::array();
    for (auto x : u.group()->generator_indices()) gens.push_back(matrix_json(s.module.rho(x)));
    summands.push_back({{"dim", s.module.dim()},
                        {"class", s.iso_class},
                        {"end_dim", e.dim()},
                        {"radical_dim", e.radical_dim()},
                        {"field_degree", e.quotient_field_degree()},
                        {"generators", gens},
                        {"inclusion", matrix_json(s.inclusion)},
                        {"projection", matrix_json(s.projection)}});
  }
  r["summands"] = summands;
  json classes = json::array();
  for (std::size_t c = 0; c < d.class_count(); ++c) {
    const Summand* rep = nullptr;
    for (const auto& s : d.summands)
      if (s.iso_class == c && !rep) rep = &s;
    auto a = is_absolutely_indecomposable(rep->module, seed);
    json cj = {{"class", c},
               {"dim", rep->module.dim()},
               {"multiplicity", d.multiplicities[c]},
               {"field_degree", a.field_degree},
               {"residue_field", gf_name(F.characteristic(), F.degree() * a.field_degree)},
               {"absolutely_indecomposable", a.absolutely_indecomposable},
               {"splitting_field", nullptr},
               {"split_count", 1}};
    if (!a.absolutely_indecomposable) {
      cj["splitting_field"] = a.splitting_field->name();
      cj["split_count"] = a.split->summands.size();
    }
    classes.push_back(cj);
  }
  r["classes"] = classes;
  EndAlgebra whole(u);
  r["end"] = {{"dim", whole.dim()}, {"radical_dim", whole.radical_dim()}};
  return r;
}

json split_json(const std::optional<SplitCertificate>& s) {
  if (!s) return nullptr;
  return {{"into", matrix_json(s->into)}, {"back", matrix_json(s->back)}};
}

json compute_decompose(const Workbench&, const Config& cfg, const Selection& sel) {
  const Module& u = sel.module->module;
  return decomposition_json(u, decompose(u, cfg.seed), cfg.seed);
}

json compute_relproj(const Workbench&, const Config& cfg, const Selection& sel) {
  const Module& u = sel.module->module;
  auto c = is_relatively_projective(u, sel.subgroup, cfg.seed);
  return {{"subgroup", subgroup_json(sel.subgroup)},
          {"verdict", c.verdict},
          {"higman", c.verdict},
          {"summand", c.cross_check},
          {"alpha", c.alpha ? matrix_json(*c.alpha) : json(nullptr)},
          {"split", split_json(c.split)}};
}

json compute_vertex(const Workbench&, const Config& cfg, const Selection& sel) {
  const Module& u = sel.module->module;
  auto r = vertex(u, cfg.seed, cfg.budgets.subgroups);
  Matrix alpha;
  check(higman_criterion(u, r.vertex, &alpha), "vertex is not a relative projectivity subgroup");
  json classes = json::array();
  for (std::size_t i = 0; i < r.classes.size(); ++i)
    classes.push_back({{"subgroup", subgroup_json(r.classes[i])},
                       {"relatively_projective", static_cast<bool>(r.relatively_projective[i])}});
  json sources = json::array();
  for (const auto& s : r.sources)
    sources.push_back({{"module", module_json(s.module)},
                       {"multiplicity", s.multiplicity},
                       {"into", matrix_json(s.split.into)},
                       {"back", matrix_json(s.split.back)}});
  return {{"vertex", subgroup_json(r.vertex)},
          {"vertex_class", r.class_id},
          {"classes", classes},
          {"witness", matrix_json(alpha)},
          {"sources", sources}};
}

json compute_tower(const Workbench& wb, const Config& cfg, const Selection& sel) {
  const auto& te = require_tower(wb);
  if (sel.module->over != te.levels.back())
    throw ParseError(0, "module '" + sel.module_name + "' is not over the top level '" + te.levels.back() + "'");
  const auto& t = te.tower;
  const auto mt = build_module_tower(t, sel.module->module);
  const auto rep = stabilization_report(mt, {cfg.seed, false});
  const unsigned p = wb.field->characteristic();
  json levels = json::array();
  bool all_indecomposable = true;
  for (std::size_t i = 0; i < t.size(); ++i) {
    const auto& l = rep.levels[i];
    levels.push_back({{"level", i},
                      {"group", te.levels[i]},
                      {"group_order", t.level(i)->order()},
                      {"kernel_order", t.from_top(i).kernel().order()},
                      {"dim", mt.levels[i].dim()},
                      {"summand_count", l.summand_count},
                      {"summand_dims", l.summand_dims},
                      {"field_degrees", l.field_degrees}});
    if (l.summand_count != 1) all_indecomposable = false;
  }
  json projections = json::array();
  for (const auto& m : mt.projections) projections.push_back(matrix_json(m));
  json r = {{"levels", levels},
            {"kernels_p_groups", t.kernels_are_p_groups(p)},
            {"stabilization_level", rep.stabilization_level},
            {"note", kWindowNote},
            {"projections", projections},
            {"end_tower", nullptr}};
  if (all_indecomposable) {
    auto e = endo_tower(mt, cfg.seed);
    json el = json::array();
    for (const auto& l : e.levels)
      el.push_back({{"dim", l.dim}, {"radical_dim", l.radical_dim}, {"field_degree", l.field_degree}});
    r["end_tower"] = {{"levels", el},
                      {"radical_into_radical", e.radical_into_radical},
                      {"stabilized_degree", e.stabilized_degree}};
  }
  return r;
}

json compute_green(const Workbench& wb, const Config& cfg, const Selection& sel) {
  const auto& te = require_tower(wb);
  const auto& m = *sel.module;
  if (!m.over_subgroup || wb.subgroups.at(m.over).of != te.levels.back())
    throw ParseError(0, "module '" + sel.module_name + "' must be over a subgroup of the top level '" +
                            te.levels.back() + "'");
  const auto& h = wb.subgroups.at(m.over);
  const auto& t = te.tower;
  const auto hs = image_tower(t, h.subgroup);
  const auto g = green_check(t, hs, m.module, false, cfg.seed, cfg.budgets.iso);
  const auto s = summands_isomorphic_check(t, hs, m.module, false, cfg.seed, cfg.budgets.iso);
  json levels = json::array();
  for (std::size_t i = 0; i < t.size(); ++i)
    levels.push_back({{"level", i},
                      {"group", te.levels[i]},
                      {"subgroup_order", hs[i].order()},
                      {"hypothesis", g.hypothesis[i].holds},
                      {"reason", g.hypothesis[i].reason},
                      {"summand_count", g.summand_counts[i]},
                      {"field_degree", g.field_degrees[i]},
                      {"exchange_holds", static_cast<bool>(g.exchange_holds[i])},
                      {"summands_isomorphic", static_cast<bool>(s.all_isomorphic[i])}});
  return {{"subgroup", m.over},
          {"levels", levels},
          {"hypotheses_hold", g.hypotheses_hold},
          {"v_absolutely_indecomposable", g.v_absolutely_indecomposable},
          {"conclusion_holds", g.conclusion_holds}};
}

const std::set<std::string> kCommands{"decompose", "vertex", "relproj", "tower", "green"};

json base_doc(const std::string& command, const Config& cfg) {
  return {{"command", command}, {"provenance", provenance(cfg)}};
}

json error_json(const std::string& code, const std::string& message) {
  return {{"code", code}, {"message", message}};
}

}  // namespace

Outcome run_command(const std::string& command, const Workbench& wb, const Config& cfg) {
  Outcome out;
  out.doc = base_doc(command, cfg);
  if (!kCommands.count(command)) {
    out.exit_code = kParseError;
    out.doc["error"] = error_json("UsageError", "unknown command '" + command + "'");
    seal(out.doc);
    return out;
  }
  out.doc["input"] = to_json(wb);
  Selection sel;
  try {
    sel = select_module(wb, cfg, command);
    json selection = {{"module", sel.module_name}};
    if (command == "relproj") {
      select_subgroup(wb, cfg, sel);
      selection["subgroup"] = sel.subgroup_name;
    }
    out.doc["selection"] = selection;
    json result;
    if (command == "decompose") result = compute_decompose(wb, cfg, sel);
    if (command == "vertex") result = compute_vertex(wb, cfg, sel);
    if (command == "relproj") result = compute_relproj(wb, cfg, sel);
    if (command == "tower") result = compute_tower(wb, cfg, sel);
    if (command == "green") result = compute_green(wb, cfg, sel);
    out.doc["result"] = std::move(result);
  } catch (const ParseError& e) {
    out.exit_code = kParseError;
    out.doc["error"] = error_json("UsageError", e.what());
  } catch (const Error& e) {
    out.exit_code = exit_code_for(e.code());
    out.doc["error"] = error_json(std::string(to_string(e.code())), e.what());
    if (command == "vertex" && e.code() == Errc::NotIndecomposable && sel.module) {
      const Module& u = sel.module->module;
      out.doc["error"]["decomposition"] = decomposition_json(u, decompose(u, cfg.seed), cfg.seed);
    }
  }
  seal(out.doc);
  return out;
}

Outcome run_command_file(const std::string& command, const std::string& path, const Config& cfg) {
  try {
    const Workbench wb = parse_workbench_file(path, cfg.budgets.max_group_order);
    return run_command(command, wb, cfg);
  } catch (const ParseError& e) {
    Outcome out;
    out.exit_code = kParseError;
    out.doc = base_doc(command, cfg);
    out.doc["error"] = error_json("ParseError", e.what());
    out.doc["error"]["line"] = e.line();
    seal(out.doc);
    return out;
  } catch (const Error& e) {
    Outcome out;
    out.exit_code = exit_code_for(e.code());
    out.doc = base_doc(command, cfg);
    out.doc["error"] = error_json(std::string(to_string(e.code())), e.what());
    seal(out.doc);
    return out;
  }
}

// ---- verification ----------------------------------------------------------

namespace {

class Checks {
 public:
  void expect(bool ok, const std::string& name) {
    list_.push_back({{"check", name}, {"passed", ok}});
    if (!ok) failed_ = true;
  }
  void fail(const std::string& name, const std::string& detail) {
    list_.push_back({{"check", name}, {"passed", false}, {"detail", detail}});
    failed_ = true;
  }
  bool failed() const { return failed_; }
  const json& list() const { return list_; }

 private:
  json list_ = json::array();
  bool failed_ = false;
};

bool split_ok(const Module& u, const Module& w, const json& j) {
  const auto& F = u.field();
  Matrix into = matrix_from_json(F, j.at("into"));
  Matrix back = matrix_from_json(F, j.at("back"));
  if (into.rows() != w.dim() || into.cols() != u.dim() || back.rows() != u.dim() || back.cols() != w.dim())
    return false;
  return is_equivariant(u, w, into) && is_equivariant(w, u, back) && (back * into).is_identity();
}

void verify_decomposition(const Module& u, const json& r, Checks& c) {
  const auto& F = u.field();
  const auto& sj = r.at("summands");
  c.expect(r.at("dim").get<std::size_t>() == u.dim(), "decomposition: module dimension");
  c.expect(r.at("summand_count").get<std::size_t>() == sj.size(), "decomposition: summand count");
  std::vector<Module> parts;
  std::vector<std::size_t> cls;
  Matrix total(F, u.dim(), u.dim());
  bool maps_ok = true, local_ok = true, total_dim_ok = true;
  std::size_t dim_sum = 0;
  for (const auto& s : sj) {
    const auto dim = s.at("dim").get<std::size_t>();
    dim_sum += dim;
    std::vector<Matrix> gens;
    for (const auto& m : s.at("generators")) gens.push_back(dim ? matrix_from_json(F, m) : Matrix(F, 0, 0));
    Module x = Module::from_generators(u.group(), F, dim, gens);
    Matrix inc = matrix_from_json(F, s.at("inclusion"));
    Matrix proj = matrix_from_json(F, s.at("projection"));
    if (inc.rows() != u.dim() || inc.cols() != dim || proj.rows() != dim || proj.cols() != u.dim()) {
      maps_ok = false;
      continue;
    }
    maps_ok = maps_ok && is_equivariant(x, u, inc) && is_equivariant(u, x, proj) && (proj * inc).is_identity();
    total += inc * proj;
    EndAlgebra e(x);
    local_ok = local_ok && e.is_local() && e.dim() == s.at("end_dim").get<std::size_t>() &&
               e.radical_dim() == s.at("radical_dim").get<std::size_t>() &&
               e.quotient_field_degree() == s.at("field_degree").get<std::size_t>();
    parts.push_back(x);
    cls.push_back(s.at("class").get<std::size_t>());
  }
  total_dim_ok = dim_sum == u.dim();
  c.expect(maps_ok, "decomposition: inclusions and projections are equivariant and split");
  c.expect(total_dim_ok && total.is_identity(), "decomposition: idempotents sum to the identity");
  c.expect(local_ok, "decomposition: every summand has a local endomorphism ring");

  bool classes_ok = true;
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (std::size_t j = i + 1; j < parts.size(); ++j)
      if ((cls[i] == cls[j]) != indecomposable_iso(parts[i], parts[j]).has_value()) classes_ok = false;
  c.expect(classes_ok, "decomposition: class labels match isomorphism");

  const auto& cj = r.at("classes");
  bool table_ok = true;
  for (std::size_t k = 0; k < cj.size(); ++k) {
    const auto& e = cj[k];
    table_ok = table_ok && e.at("class").get<std::size_t>() == k;
    const auto mult = static_cast<std::size_t>(std::count(cls.begin(), cls.end(), k));
    table_ok = table_ok && mult == e.at("multiplicity").get<std::size_t>() && mult > 0;
    if (!table_ok) break;
    const std::size_t first = static_cast<std::size_t>(std::find(cls.begin(), cls.end(), k) - cls.begin());
    const Module& x = parts[first];
    const auto f = e.at("field_degree").get<std::size_t>();
    table_ok = table_ok && e.at("dim").get<std::size_t>() == x.dim() &&
               f == EndAlgebra(x).quotient_field_degree() &&
               e.at("residue_field").get<std::string>() == gf_name(F->characteristic(), F->degree() * f) &&
               e.at("absolutely_indecomposable").get<bool>() == (f == 1);
    if (f == 1) {
      table_ok = table_ok && e.at("split_count").get<std::size_t>() == 1 && e.at("splitting_field").is_null();
    } else {
      auto emb = extension_of_degree(F, static_cast<unsigned>(f));
      const auto n = decompose(scalar_extend(x, emb)).summands.size();
      table_ok = table_ok && n == f && e.at("split_count").get<std::size_t>() == n &&
                 e.at("splitting_field").get<std::string>() == emb.target()->name();
    }
  }
  for (auto k : cls) table_ok = table_ok && k < cj.size();
  c.expect(table_ok, "decomposition: class table and scalar extension splitting");
  EndAlgebra whole(u);
  c.expect(r.at("end").at("dim").get<std::size_t>() == whole.dim() &&
               r.at("end").at("radical_dim").get<std::size_t>() == whole.radical_dim(),
           "decomposition: endomorphism ring dimensions");
}

void verify_relproj(const Module& u, const json& r, Checks& c) {
  const auto& F = u.field();
  const Subgroup h = subgroup_from_json(u.group(), r.at("subgroup"));
  const bool verdict = r.at("verdict").get<bool>();
  c.expect(r.at("higman").get<bool>() == verdict && r.at("summand").get<bool>() == verdict,
           "relproj: both criteria agree with the verdict");
  if (verdict) {
    c.expect(!r.at("alpha").is_null() && trace_map(matrix_from_json(F, r.at("alpha")), u, u, h).is_identity(),
             "relproj: witness traces to the identity");
    const Module w = induce(restrict(u, h), h);
    c.expect(!r.at("split").is_null() && split_ok(u, w, r.at("split")), "relproj: U splits off U|H|G");
  } else {
    c.expect(r.at("alpha").is_null() && !higman_criterion(u, h), "relproj: identity is not a trace");
    c.expect(r.at("split").is_null() && !summand_criterion(u, h).has_value(), "relproj: U does not split off U|H|G");
  }
}

void verify_vertex(const Module& u, const json& r, std::size_t max_classes, Checks& c) {
  const auto& F = u.field();
  c.expect(u.dim() > 0 && EndAlgebra(u).is_local(), "vertex: module is indecomposable");
  const auto classes = p_subgroups_up_to_conjugacy(u.group(), F->characteristic(), max_classes);
  const auto& cj = r.at("classes");
  bool list_ok = cj.size() == classes.size();
  for (std::size_t i = 0; list_ok && i < classes.size(); ++i)
    list_ok = cj[i].at("subgroup") == subgroup_json(classes[i]);
  c.expect(list_ok, "vertex: p-subgroup classes");
  const auto vid = r.at("vertex_class").get<std::size_t>();
  const Subgroup q = subgroup_from_json(u.group(), r.at("vertex"));
  c.expect(list_ok && vid < classes.size() && classes[vid] == q, "vertex: vertex is a listed class");
  bool verdicts_ok = list_ok;
  for (std::size_t i = 0; verdicts_ok && i < classes.size(); ++i) {
    const bool v = cj[i].at("relatively_projective").get<bool>();
    verdicts_ok = v == higman_criterion(u, classes[i]) && v == contained_up_to_conjugacy(q, classes[i]).has_value();
  }
  c.expect(verdicts_ok, "vertex: projective exactly relative to classes containing the vertex");
  c.expect(trace_map(matrix_from_json(F, r.at("witness")), u, u, q).is_identity(),
           "vertex: witness traces to the identity");
  const auto sq = standalone(q);
  const Module uq = restrict(u, q, sq);
  bool sources_ok = !r.at("sources").empty();
  for (const auto& s : r.at("sources")) {
    const Module src = reindex(module_from_json(F, s.at("module")), sq.group);
    if (!split_ok(u, induce(src, q, sq), s)) sources_ok = false;
    std::size_t mult = 0;
    for (const auto& x : decompose(uq).summands)
      if (indecomposable_iso(x.module, src)) ++mult;
    if (mult != s.at("multiplicity").get<std::size_t>() || mult == 0) sources_ok = false;
  }
  c.expect(sources_ok, "vertex: sources are summands of the restriction and U splits off their induction");
}

void verify_tower(const Workbench& wb, const Module& u, const json& r, Checks& c) {
  const auto& t = require_tower(wb).tower;
  const auto& lj = r.at("levels");
  bool dims_ok = lj.size() == t.size();
  for (std::size_t i = 0; dims_ok && i < t.size(); ++i) {
    const auto cu = coinvariants(u, t.from_top(i));
    dims_ok = lj[i].at("dim").get<std::size_t>() == cu.module.dim() &&
              lj[i].at("group_order").get<std::size_t>() == t.level(i)->order() &&
              decompose(cu.module).summands.size() == lj[i].at("summand_count").get<std::size_t>();
  }
  c.expect(dims_ok, "tower: level dimensions and summand counts from direct coinvariants");
  const auto mt = build_module_tower(t, u);
  const auto& pj = r.at("projections");
  bool proj_ok = pj.size() + 1 == t.size();
  for (std::size_t i = 0; proj_ok && i + 1 < t.size(); ++i) {
    const Matrix p = matrix_from_json(wb.field, pj[i]);
    proj_ok = p.rows() == mt.levels[i].dim() && p.cols() == mt.levels[i + 1].dim() &&
              is_equivariant(mt.levels[i + 1], inflate(mt.levels[i], t.map(i)), p) && rank(p) == p.rows();
  }
  c.expect(proj_ok, "tower: connecting maps are equivariant surjections");
  if (!r.at("end_tower").is_null()) {
    const auto& el = r.at("end_tower").at("levels");
    bool end_ok = el.size() == t.size();
    for (std::size_t i = 0; end_ok && i < t.size(); ++i) {
      EndAlgebra e(mt.levels[i]);
      end_ok = e.dim() == el[i].at("dim").get<std::size_t>() &&
               e.radical_dim() == el[i].at("radical_dim").get<std::size_t>() &&
               e.quotient_field_degree() == el[i].at("field_degree").get<std::size_t>();
    }
    c.expect(end_ok, "tower: endomorphism rings per level");
  }
  bool monotone = true;
  if (r.at("kernels_p_groups").get<bool>())
    for (std::size_t i = 0; dims_ok && i + 1 < t.size(); ++i)
      if (lj[i + 1].at("summand_count").get<std::size_t>() > lj[i].at("summand_count").get<std::size_t>())
        monotone = false;
  c.expect(r.at("kernels_p_groups").get<bool>() == t.kernels_are_p_groups(wb.field->characteristic()) && monotone,
           "tower: summand counts never grow along p-group kernels");
}

void verify_green(const Workbench& wb, const ModuleEntry& m, const json& r, Checks& c) {
  const auto& te = require_tower(wb);
  const auto hs = image_tower(te.tower, wb.subgroups.at(m.over).subgroup);
  const auto& lj = r.at("levels");
  bool ok = lj.size() == te.tower.size();
  const unsigned p = wb.field->characteristic();
  bool all_hold = true;
  for (std::size_t i = 0; ok && i < hs.size(); ++i) {
    const auto hyp = green_hypothesis(hs[i], p);
    all_hold = all_hold && hyp.holds;
    const Module w = coinvariants(induce(m.module, hs.back()), te.tower.from_top(i)).module;
    ok = hyp.holds == lj[i].at("hypothesis").get<bool>() &&
         decompose(w).summands.size() == lj[i].at("summand_count").get<std::size_t>();
  }
  c.expect(ok, "green: hypotheses and summand counts at every level");
  c.expect(r.at("hypotheses_hold").get<bool>() == all_hold, "green: overall hypothesis verdict");
}

std::string command_of(const json& doc) {
  return doc.contains("command") && doc["command"].is_string() ? doc["command"].get<std::string>() : "";
}

}  // namespace

Outcome run_verify(const json& cert) {
  Checks c;
  c.expect(seal_intact(cert), "digest matches the report body");
  const std::string command = command_of(cert);
  try {
    if (!kCommands.count(command)) throw ParseError(0, "not a report of a verifiable command");
    if (!cert.contains("input")) throw ParseError(0, "report carries no input block");
    Config cfg;
    const auto& pj = cert.at("provenance");
    cfg.seed = pj.at("seed").get<std::uint64_t>();
    cfg.budgets.iso = pj.at("budgets").at("iso").get<std::uint64_t>();
    cfg.budgets.subgroups = pj.at("budgets").at("subgroups").get<std::size_t>();
    cfg.budgets.max_group_order = pj.at("budgets").at("max_group_order").get<std::size_t>();
    const Workbench wb = workbench_from_json(cert.at("input"), cfg.budgets.max_group_order);
    const auto& sj = cert.at("selection");
    cfg.module = sj.at("module").get<std::string>();
    if (sj.contains("subgroup")) cfg.subgroup = sj.at("subgroup").get<std::string>();
    const ModuleEntry& m = wb.module(cfg.module);

    if (cert.contains("result")) {
      const auto& r = cert.at("result");
      if (command == "decompose") verify_decomposition(m.module, r, c);
      if (command == "relproj") verify_relproj(m.module, r, c);
      if (command == "vertex") verify_vertex(m.module, r, cfg.budgets.subgroups, c);
      if (command == "tower") verify_tower(wb, m.module, r, c);
      if (command == "green") verify_green(wb, m, r, c);
    } else {
      const auto& e = cert.at("error");
      if (e.contains("decomposition")) {
        verify_decomposition(m.module, e.at("decomposition"), c);
        c.expect(e.at("decomposition").at("summand_count").get<std::size_t>() != 1,
                 "error: attached decomposition shows the module is not indecomposable");
      }
    }
    const Outcome again = run_command(command, wb, cfg);
    c.expect(again.doc == cert, "report reproduces bit for bit");
  } catch (const std::exception& e) {
    c.fail("certificate is well formed", e.what());
  }

  Outcome out;
  out.doc = {{"command", "verify"},
             {"certificate", {{"command", command}, {"digest", cert.value("digest", json(nullptr))}}},
             {"checks", c.list()},
             {"verdict", c.failed() ? "rejected" : "accepted"}};
  out.exit_code = c.failed() ? kVerificationFailed : kOk;
  seal(out.doc);
  return out;
}

Outcome run_verify_file(const std::string& path) {
  std::ifstream in(path);
  json cert;
  try {
    if (!in) throw ParseError(0, "cannot open '" + path + "'");
    cert = json::parse(in);
  } catch (const std::exception& e) {
    Outcome out;
    out.exit_code = kParseError;
    out.doc = {{"command", "verify"}, {"error", error_json("ParseError", e.what())}};
    seal(out.doc);
    return out;
  }
  return run_verify(cert);
}

// ---- text rendering --------------------------------------------------------

namespace {

std::string join(const json& arr) {
  std::string out;
  for (const auto& x : arr) out += (out.empty() ? "" : " ") + (x.is_string() ? x.get<std::string>() : x.dump());
  return out;
}

std::string yes(const json& b) { return b.get<bool>() ? "yes" : "no"; }

void render_decomposition(std::ostringstream& os, const json& r) {
  os << "dim " << r["dim"] << ", " << r["summand_count"] << " indecomposable summand(s), End dim "
     << r["end"]["dim"] << " with radical dim " << r["end"]["radical_dim"] << "\n";
  os << "class  dim  mult  End/Rad      abs.indec  splits over\n";
  for (const auto& c : r["classes"]) {
    os << "  " << c["class"] << "    " << c["dim"] << "    " << c["multiplicity"] << "   "
       << c["residue_field"].get<std::string>() << "       " << yes(c["absolutely_indecomposable"]);
    if (!c["splitting_field"].is_null())
      os << "        " << c["splitting_field"].get<std::string>() << " into " << c["split_count"];
    os << "\n";
  }
}

}  // namespace

std::string render_text(const json& doc) {
  std::ostringstream os;
  const std::string command = command_of(doc);
  if (command == "verify") {
    if (doc.contains("checks")) {
      for (const auto& c : doc["checks"])
        os << (c["passed"].get<bool>() ? "ok    " : "FAIL  ") << c["check"].get<std::string>()
           << (c.contains("detail") ? " (" + c["detail"].get<std::string>() + ")" : "") << "\n";
      os << "certificate " << doc["verdict"].get<std::string>() << "\n";
    }
  } else if (doc.contains("selection")) {
    os << command << " " << doc["selection"]["module"].get<std::string>() << " over "
       << doc["input"]["modules"][doc["selection"]["module"].get<std::string>()]["over"].get<std::string>() << "\n";
  }
  if (doc.contains("error")) {
    const auto& e = doc["error"];
    os << "error: " << e["message"].get<std::string>() << "\n";
    if (e.contains("decomposition")) {
      os << "decomposition:\n";
      render_decomposition(os, e["decomposition"]);
    }
    return os.str();
  }
  if (!doc.contains("result")) return os.str();
  const auto& r = doc["result"];
  if (command == "decompose") render_decomposition(os, r);
  if (command == "relproj") {
    os << "subgroup order " << r["subgroup"]["order"] << " generated by "
       << (r["subgroup"]["generators"].empty() ? "()" : join(r["subgroup"]["generators"])) << "\n";
    os << "relatively projective: " << yes(r["verdict"]) << " (trace criterion " << yes(r["higman"])
       << ", summand criterion " << yes(r["summand"]) << ")\n";
  }
  if (command == "vertex") {
    os << "vertex order " << r["vertex"]["order"] << " generated by "
       << (r["vertex"]["generators"].empty() ? "()" : join(r["vertex"]["generators"])) << "\n";
    os << "p-subgroup classes (order: relatively projective):";
    for (const auto& c : r["classes"])
      os << " " << c["subgroup"]["order"] << ":" << (c["relatively_projective"].get<bool>() ? "y" : "n");
    os << "\nsources:";
    for (const auto& s : r["sources"]) os << " dim " << s["module"]["dim"] << " (x" << s["multiplicity"] << ")";
    os << "\n";
  }
  if (command == "tower") {
    os << "level  group  |G|  dim  summands  dims      End/Rad degrees\n";
    for (const auto& l : r["levels"])
      os << "  " << l["level"] << "    " << l["group"].get<std::string>() << "  " << l["group_order"] << "  "
         << l["dim"] << "  " << l["summand_count"] << "  [" << join(l["summand_dims"]) << "]  ["
         << join(l["field_degrees"]) << "]\n";
    os << "kernels are p-groups: " << yes(r["kernels_p_groups"]) << ", unchanged from level "
       << r["stabilization_level"] << "\n";
    if (!r["end_tower"].is_null())
      os << "End/Rad degree on the top levels: " << r["end_tower"]["stabilized_degree"] << "\n";
    os << "note: " << r["note"].get<std::string>() << "\n";
  }
  if (command == "green") {
    os << "level  group  |H_i|  hypothesis  summands  End/Rad  exchange  iso summands\n";
    for (const auto& l : r["levels"])
      os << "  " << l["level"] << "    " << l["group"].get<std::string>() << "  " << l["subgroup_order"] << "  "
         << (l["hypothesis"].get<bool>() ? "holds" : "fails: " + l["reason"].get<std::string>()) << "  "
         << l["summand_count"] << "  " << l["field_degree"] << "  " << yes(l["exchange_holds"]) << "  "
         << yes(l["summands_isomorphic"]) << "\n";
    os << "V absolutely indecomposable: " << yes(r["v_absolutely_indecomposable"])
       << ", hypotheses hold: " << yes(r["hypotheses_hold"])
       << ", induced module absolutely indecomposable at every level: " << yes(r["conclusion_holds"]) << "\n";
  }
  return os.str();
}

}  // namespace modrep::cli
