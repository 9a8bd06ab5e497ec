#include "modrep/tower.hpp"

#include <algorithm>

#include "modrep/error.hpp"
#include "modrep/linalg.hpp"

namespace modrep {

namespace {

QuotientMap identity_map(const GroupPtr& g) {
  std::vector<std::size_t> img(g->order());
  for (std::size_t i = 0; i < img.size(); ++i) img[i] = i;
  return QuotientMap(g, g, std::move(img));
}

bool is_power_of(std::size_t n, unsigned p) {
  while (n > 1 && n % p == 0) n /= p;
  return n == 1;
}

// iso_test, falling back to the exact Krull-Schmidt comparison when the
// randomized search is inconclusive.
bool certified_iso(const Module& a, const Module& b, std::uint64_t seed, std::uint64_t budget = 1u << 16) {
  try {
    IsoOptions opt;
    opt.seed = seed;
    opt.budget = budget;
    return iso_test(a, b, opt).has_value();
  } catch (const Error& e) {
    if (e.code() != Errc::IsoUndecided) throw;
    return isomorphic(a, b, seed);
  }
}

// The module V_{H cap N} induced to G/N, for N = ker(map) and V over
// standalone(h).
Module induced_from_coinvariants(const Module& v, const Subgroup& h, const QuotientMap& map) {
  auto rq = restrict_quotient(map, h);
  auto vn = coinvariants(reindex(v, rq.source.group), rq.map);
  return induce(vn.module, map.image(h), rq.target);
}

// projections[to] * ... * projections[from-1] : U_from -> U_to
Matrix composite(const std::vector<Matrix>& projections, std::size_t from, std::size_t to, const FieldPtr& f,
                 std::size_t dim_from) {
  Matrix m = Matrix::identity(f, dim_from);
  for (std::size_t i = from; i-- > to;) m = projections[i] * m;
  return m;
}

}  // namespace

Tower::Tower(std::vector<GroupPtr> levels, std::vector<QuotientMap> maps)
    : levels_(std::move(levels)), maps_(std::move(maps)) {
  if (levels_.empty()) fail(Errc::LevelMismatch, "a tower needs at least one level");
  if (maps_.size() + 1 != levels_.size()) fail(Errc::LevelMismatch, "need one map between consecutive levels");
  for (std::size_t i = 0; i < maps_.size(); ++i)
    if (!same_group(maps_[i].source(), levels_[i + 1]) || !same_group(maps_[i].target(), levels_[i]))
      fail(Errc::LevelMismatch, "map " + std::to_string(i) + " does not connect levels " + std::to_string(i + 1) +
                                    " and " + std::to_string(i));
  from_top_.resize(levels_.size(), identity_map(levels_.back()));
  for (std::size_t i = top(); i-- > 0;) from_top_[i] = maps_[i].after(from_top_[i + 1]);
}

bool Tower::kernels_are_p_groups(unsigned p) const {
  return std::all_of(maps_.begin(), maps_.end(), [p](const QuotientMap& m) { return is_p_group(m.kernel(), p); });
}

void validate_subgroup_tower(const Tower& t, const std::vector<Subgroup>& h) {
  if (h.size() != t.size()) fail(Errc::IncompatibleSubgroupTower, "one subgroup per level is required");
  for (std::size_t i = 0; i < h.size(); ++i)
    if (!same_group(h[i].parent(), t.level(i)))
      fail(Errc::IncompatibleSubgroupTower, "subgroup " + std::to_string(i) + " is not in its level");
  for (std::size_t i = 0; i + 1 < h.size(); ++i)
    if (!(t.map(i).image(h[i + 1]) == h[i]))
      fail(Errc::IncompatibleSubgroupTower, "level " + std::to_string(i + 1) + " does not map onto level " +
                                                std::to_string(i));
}

std::vector<Subgroup> image_tower(const Tower& t, const Subgroup& top) {
  if (!same_group(top.parent(), t.level(t.top())))
    fail(Errc::IncompatibleSubgroupTower, "subgroup is not in the top level");
  std::vector<Subgroup> out(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) out[i] = t.from_top(i).image(top);
  return out;
}

ModuleTower build_module_tower(const Tower& t, const Module& base) {
  if (!same_group(base.group(), t.level(t.top()))) fail(Errc::LevelMismatch, "module is not over the top level");
  const auto& F = base.field();
  const std::size_t L = t.top();
  ModuleTower mt{t, std::vector<Module>(L + 1), std::vector<Matrix>(L), std::vector<Matrix>(L)};
  mt.levels[L] = base;
  for (std::size_t i = L; i-- > 0;) {
    auto c = coinvariants(mt.levels[i + 1], t.map(i));
    mt.levels[i] = c.module;
    mt.projections[i] = c.projection;
    mt.sections[i] = c.section;
  }
  // Iterated and direct coinvariants differ by a change of basis only.
  for (std::size_t i = 0; i + 1 < L; ++i) {
    auto direct = coinvariants(base, t.from_top(i));
    const Matrix p = composite(mt.projections, L, i, F, base.dim());
    Matrix s = Matrix::identity(F, mt.levels[i].dim());
    for (std::size_t j = i; j < L; ++j) s = mt.sections[j] * s;
    const Matrix a = direct.projection * s;
    check(a * p == direct.projection, "iterated coinvariants differ from direct coinvariants");
    check(is_invertible(a) || a.rows() == 0, "iterated coinvariants have the wrong dimension");
    check(is_equivariant(mt.levels[i], direct.module, a), "coinvariant alignment is not equivariant");
  }
  return mt;
}

TowerReport stabilization_report(const ModuleTower& mt, const StabilizationOptions& opt) {
  TowerReport r;
  const std::size_t n = mt.levels.size();
  for (const auto& u : mt.levels) {
    LevelSummary s;
    auto d = decompose(u, opt.seed);
    s.summand_count = d.summands.size();
    for (const auto& x : d.summands) {
      s.summand_dims.push_back(x.module.dim());
      s.field_degrees.push_back(EndAlgebra(x.module).quotient_field_degree());
    }
    std::sort(s.summand_dims.begin(), s.summand_dims.end());
    std::sort(s.field_degrees.begin(), s.field_degrees.end());
    if (opt.with_vertex && s.summand_count == 1) s.vertex_order = vertex(u, opt.seed).vertex.order();
    r.levels.push_back(std::move(s));
  }
  if (n > 0 && mt.tower.kernels_are_p_groups(mt.levels[0].field()->characteristic())) {
    for (std::size_t i = 0; i + 1 < n; ++i)
      if (r.levels[i + 1].summand_count > r.levels[i].summand_count)
        fail(Errc::MonotonicityViolated, "level " + std::to_string(i + 1) + " has more summands than level " +
                                             std::to_string(i));
  }
  r.stabilization_level = n == 0 ? 0 : n - 1;
  while (r.stabilization_level > 0) {
    const auto& a = r.levels[r.stabilization_level - 1];
    const auto& b = r.levels.back();
    if (a.summand_count != b.summand_count || a.field_degrees != b.field_degrees) break;
    --r.stabilization_level;
  }
  return r;
}

LevelwiseRelProj levelwise_relproj(const ModuleTower& mt, const std::vector<Subgroup>& h, std::uint64_t seed) {
  validate_subgroup_tower(mt.tower, h);
  LevelwiseRelProj r;
  for (std::size_t i = 0; i < h.size(); ++i) r.verdicts.push_back(is_relatively_projective(mt.levels[i], h[i], seed).verdict);
  r.uniform = std::adjacent_find(r.verdicts.begin(), r.verdicts.end(), std::not_equal_to<>()) == r.verdicts.end();
  return r;
}

LevelHypothesis green_hypothesis(const Subgroup& h, unsigned p) {
  const auto& g = h.parent();
  if (is_p_group(whole_group(g), p)) return {true, "G is a p-group"};
  const std::size_t index = g->order() / h.order();
  if (!is_power_of(index, p))
    return {false, "index " + std::to_string(index) + " is not a power of " + std::to_string(p)};
  if (!is_subnormal(h)) return {false, "H is not subnormal"};
  return {true, "H is subnormal of p-power index"};
}

namespace {

std::vector<LevelHypothesis> check_hypotheses(const std::vector<Subgroup>& h, unsigned p, bool strict, bool& all) {
  std::vector<LevelHypothesis> out;
  all = true;
  for (std::size_t i = 0; i < h.size(); ++i) {
    out.push_back(green_hypothesis(h[i], p));
    if (!out.back().holds) {
      all = false;
      if (strict) fail(Errc::HypothesisViolated, "level " + std::to_string(i) + ": " + out.back().reason);
    }
  }
  return out;
}

void require_over_top_subgroup(const std::vector<Subgroup>& h, const Module& v) {
  if (!same_group(v.group(), standalone(h.back()).group))
    fail(Errc::GroupMismatch, "module is not over the top subgroup");
}

}  // namespace

GreenReport green_check(const Tower& t, const std::vector<Subgroup>& h, const Module& v, bool strict,
                        std::uint64_t seed, std::uint64_t iso_budget) {
  validate_subgroup_tower(t, h);
  require_over_top_subgroup(h, v);
  const unsigned p = v.field()->characteristic();
  GreenReport r;
  r.hypothesis = check_hypotheses(h, p, strict, r.hypotheses_hold);
  try {
    r.v_absolutely_indecomposable = is_absolutely_indecomposable(v, seed).absolutely_indecomposable;
  } catch (const Error& e) {
    if (e.code() != Errc::NotIndecomposable) throw;
    r.v_absolutely_indecomposable = false;
  }
  if (strict && !r.v_absolutely_indecomposable)
    fail(Errc::HypothesisViolated, "V is not absolutely indecomposable");

  const auto mt = build_module_tower(t, induce(v, h.back()));
  for (std::size_t i = 0; i < t.size(); ++i) {
    const auto d = decompose(mt.levels[i], seed);
    r.summand_counts.push_back(d.summands.size());
    r.field_degrees.push_back(d.summands.size() == 1 ? EndAlgebra(mt.levels[i]).quotient_field_degree() : 0);
    r.exchange_holds.push_back(certified_iso(mt.levels[i], induced_from_coinvariants(v, h.back(), t.from_top(i)), seed,
                                              iso_budget));
    if (r.summand_counts.back() != 1 || r.field_degrees.back() != 1) r.conclusion_holds = false;
  }
  return r;
}

SummandsReport summands_isomorphic_check(const Tower& t, const std::vector<Subgroup>& h, const Module& v,
                                         bool strict, std::uint64_t seed, std::uint64_t iso_budget) {
  validate_subgroup_tower(t, h);
  require_over_top_subgroup(h, v);
  if (v.dim() == 0 || decompose(v, seed).summands.size() != 1)
    fail(Errc::NotIndecomposable, "V is not indecomposable");
  SummandsReport r;
  r.hypothesis = check_hypotheses(h, v.field()->characteristic(), strict, r.hypotheses_hold);
  const auto mt = build_module_tower(t, induce(v, h.back()));
  for (const auto& u : mt.levels) {
    const auto d = decompose(u, seed);
    r.summand_counts.push_back(d.summands.size());
    bool same = true;
    for (std::size_t j = 1; j < d.summands.size() && same; ++j)
      same = certified_iso(d.summands[0].module, d.summands[j].module, seed, iso_budget);
    check(same == (d.class_count() <= 1), "iso test and Krull-Schmidt classes disagree");
    r.all_isomorphic.push_back(same);
  }
  return r;
}

EndTowerReport endo_tower(const ModuleTower& mt, std::uint64_t seed) {
  EndTowerReport r;
  std::vector<EndAlgebra> es;
  for (std::size_t i = 0; i < mt.levels.size(); ++i) {
    const auto& u = mt.levels[i];
    if (u.dim() == 0 || decompose(u, seed).summands.size() != 1)
      fail(Errc::NotIndecomposableAtLevel, "level " + std::to_string(i) + " is not indecomposable");
    es.emplace_back(u);
    r.levels.push_back({es.back().dim(), es.back().radical_dim(), es.back().quotient_field_degree()});
  }
  for (std::size_t i = 0; i + 1 < es.size(); ++i) {
    bool ok = true;
    for (const auto& rad : es[i + 1].radical_matrices()) {
      const Matrix img = mt.projections[i] * rad * mt.sections[i];
      check(is_equivariant(mt.levels[i], mt.levels[i], img), "coinvariant image of an endomorphism is not equivariant");
      ok = ok && es[i].radical_contains(img);
    }
    r.radical_into_radical.push_back(ok);
  }
  r.stabilized_degree = r.levels.empty() ? 0 : r.levels.back().field_degree;
  return r;
}

LiftedSplitting lift_splitting(const ModuleTower& u, const ModuleTower& w, std::uint64_t seed) {
  const std::size_t n = u.levels.size();
  if (w.levels.size() != n) fail(Errc::LevelMismatch, "towers have different lengths");
  for (std::size_t i = 0; i < n; ++i)
    if (!same_base(u.levels[i], w.levels[i])) fail(Errc::LevelMismatch, "towers differ at level " + std::to_string(i));
  for (std::size_t i = 0; i < n; ++i)
    if (!summand_maps(u.levels[i], w.levels[i], seed))
      fail(Errc::HypothesisViolated, "level " + std::to_string(i) + " is not a summand");
  const std::size_t L = n - 1;
  auto top = summand_maps(u.levels[L], w.levels[L], seed);
  LiftedSplitting out{{top->into, top->back}, {}};
  const auto& F = u.levels[L].field();
  for (std::size_t i = 0; i < n; ++i) {
    const Matrix pw = composite(w.projections, L, i, F, w.levels[L].dim());
    const Matrix pu = composite(u.projections, L, i, F, u.levels[L].dim());
    Matrix su = Matrix::identity(F, u.levels[i].dim()), sw = Matrix::identity(F, w.levels[i].dim());
    for (std::size_t j = i; j < L; ++j) {
      su = u.sections[j] * su;
      sw = w.sections[j] * sw;
    }
    SplitCertificate c{pw * top->into * su, pu * top->back * sw};
    check(is_equivariant(u.levels[i], w.levels[i], c.into) && is_equivariant(w.levels[i], u.levels[i], c.back),
          "lifted splitting is not equivariant at a level");
    check(u.levels[i].dim() == 0 || (c.back * c.into).is_identity(), "lifted splitting does not split a level");
    out.levels.push_back(std::move(c));
  }
  return out;
}

bool CoinvariantLaws::all() const {
  auto ok = [](const std::vector<bool>& v) { return std::all_of(v.begin(), v.end(), [](bool b) { return b; }); };
  return ok(transitivity) && ok(additivity) && ok(induction) && ok(restriction);
}

CoinvariantLaws check_coinvariant_laws(const Tower& t, const Module& u, const Module& w, const Subgroup& h,
                                       const Module& v, std::uint64_t seed) {
  const auto mu = build_module_tower(t, u);
  const Module uw = direct_sum(u, w);
  const Module vind = induce(v, h);
  CoinvariantLaws r;
  for (std::size_t i = 0; i < t.size(); ++i) {
    const auto& map = t.from_top(i);
    const auto cu = coinvariants(u, map);
    const auto cw = coinvariants(w, map);
    r.transitivity.push_back(certified_iso(mu.levels[i], cu.module, seed));
    r.additivity.push_back(
        certified_iso(coinvariants(uw, map).module, direct_sum(cu.module, cw.module), seed));
    r.induction.push_back(
        certified_iso(coinvariants(vind, map).module, induced_from_coinvariants(v, h, map), seed));
    const Subgroup hn = map.image(h);
    const Subgroup hn_full = map.preimage(hn);
    auto rq = restrict_quotient(map, hn_full);
    const Module lhs = reindex(restrict(cu.module, hn), rq.target.group);
    const Module rhs = coinvariants(restrict(u, hn_full, rq.source), rq.map).module;
    r.restriction.push_back(certified_iso(lhs, rhs, seed));
  }
  return r;
}

}  // namespace modrep
