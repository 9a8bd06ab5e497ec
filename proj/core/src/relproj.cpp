#include "modrep/relproj.hpp"

#include <algorithm>

#include "modrep/error.hpp"
#include "modrep/linalg.hpp"

namespace modrep {

namespace {

Matrix trace_over(const std::vector<std::size_t>& reps, const Matrix& alpha, const Module& u, const Module& w) {
  const auto& G = *u.group();
  Matrix out(u.field(), w.dim(), u.dim());
  for (auto s : reps) out += w.rho(s) * alpha * u.rho(G.inv(s));
  return out;
}

bool h_equivariant(const Matrix& alpha, const Module& u, const Module& w, const Subgroup& h) {
  for (auto x : subgroup_generators(h))
    if (!(alpha * u.rho(x) == w.rho(x) * alpha)) return false;
  return true;
}

void require_subgroup_of(const Module& u, const Subgroup& h) {
  if (!same_group(u.group(), h.parent())) fail(Errc::GroupMismatch, "subgroup is not in the module's group");
}

std::vector<Elem> flat(const Matrix& m) { return m.data(); }

}  // namespace

Matrix trace_map(const Matrix& alpha, const Module& u, const Module& w, const Subgroup& h) {
  require_subgroup_of(u, h);
  if (!same_base(u, w)) fail(Errc::GroupMismatch, "modules over different groups or fields");
  if (alpha.rows() != w.dim() || alpha.cols() != u.dim()) fail(Errc::DimensionMismatch, "map does not match modules");
  if (!h_equivariant(alpha, u, w, h)) fail(Errc::NotHEquivariant, "map does not commute with the subgroup");
  Matrix t = trace_over(left_transversal(h), alpha, u, w);
  check(t == trace_over(left_transversal_greatest(h), alpha, u, w), "trace depends on the transversal");
  check(is_equivariant(u, w, t), "trace is not G-equivariant");
  return t;
}

bool higman_criterion(const Module& u, const Subgroup& h, Matrix* alpha_out) {
  require_subgroup_of(u, h);
  const auto& F = u.field();
  const std::size_t n = u.dim();
  if (n == 0) {
    if (alpha_out) *alpha_out = Matrix(F, 0, 0);
    return true;
  }
  auto sh = standalone(h);
  const Module uh = restrict(u, h, sh);
  const auto end_h = hom_space(uh, uh);
  const std::size_t end_g = hom_space(u, u).size();
  const auto reps = left_transversal(h);

  // Keep the H-endomorphisms whose traces are independent; stop once the
  // traces span all of End_G.
  RowEchelon ech(F, n * n);
  std::vector<Matrix> kept_beta, kept_trace;
  for (const auto& b : end_h) {
    Matrix t = trace_over(reps, b, u, u);
    if (ech.insert(flat(t))) {
      kept_beta.push_back(b);
      kept_trace.push_back(std::move(t));
      if (ech.rank() == end_g) break;
    }
  }
  if (kept_trace.empty()) return false;
  Matrix a(F, n * n, kept_trace.size());
  for (std::size_t c = 0; c < kept_trace.size(); ++c)
    for (std::size_t r = 0; r < n * n; ++r) a(r, c) = kept_trace[c].data()[r];
  Matrix id = Matrix::identity(F, n);
  auto x = solve(a, Matrix(F, n * n, 1, id.data()));
  if (!x) return false;
  if (alpha_out) {
    Matrix alpha(F, n, n);
    for (std::size_t c = 0; c < kept_beta.size(); ++c)
      if ((*x)(c, 0)) alpha.add_scaled(kept_beta[c], (*x)(c, 0));
    check(trace_map(alpha, u, u, h).is_identity(), "Higman witness does not trace to the identity");
    *alpha_out = std::move(alpha);
  }
  return true;
}

std::optional<SplitCertificate> indecomposable_summand_maps(const Module& u, const Module& w) {
  if (!same_base(u, w)) fail(Errc::GroupMismatch, "modules over different groups or fields");
  const auto& F = u.field();
  if (u.dim() == 0) return SplitCertificate{Matrix(F, w.dim(), 0), Matrix(F, 0, w.dim())};
  if (u.dim() > w.dim()) return std::nullopt;
  const auto fs = hom_space(u, w);
  if (fs.empty()) return std::nullopt;
  const auto gs = hom_space(w, u);
  if (gs.empty()) return std::nullopt;
  // End(U) is local, so id lies in the ideal spanned by the g f exactly
  // when one of the basis products is a unit.
  for (const auto& f : fs)
    for (const auto& g : gs) {
      auto inv = inverse(g * f);
      if (inv) return SplitCertificate{f, *inv * g};
    }
  return std::nullopt;
}

namespace {

std::optional<SplitCertificate> summand_criterion_with(const Module& u, const Subgroup& h, const Decomposition& d) {
  const auto& F = u.field();
  auto sh = standalone(h);
  const std::size_t index = u.group()->order() / h.order();
  const std::size_t n = u.dim();
  Matrix into(F, n * index, n), back(F, n, n * index);
  for (const auto& s : d.summands) {
    const Module w = induce(restrict(s.module, h, sh), h, sh);
    auto maps = indecomposable_summand_maps(s.module, w);
    if (!maps) return std::nullopt;
    into += induce_map(s.inclusion, index) * maps->into * s.projection;
    back += s.inclusion * maps->back * induce_map(s.projection, index);
  }
  if (n > 0) {
    const Module big = induce(restrict(u, h, sh), h, sh);
    check(is_equivariant(u, big, into) && is_equivariant(big, u, back), "split maps are not equivariant");
    check((back * into).is_identity(), "split maps do not compose to the identity");
  }
  return SplitCertificate{std::move(into), std::move(back)};
}

RelProjCertificate relproj_with(const Module& u, const Subgroup& h, const Decomposition& d) {
  RelProjCertificate c;
  Matrix alpha;
  c.verdict = higman_criterion(u, h, &alpha);
  if (c.verdict) c.alpha = std::move(alpha);
  c.split = summand_criterion_with(u, h, d);
  c.cross_check = c.split.has_value();
  if (c.verdict != c.cross_check) fail(Errc::CriteriaDisagree, "Higman and summand criteria disagree");
  return c;
}

Decomposition single_summand(const Module& u) {
  const auto& F = u.field();
  Decomposition d;
  d.summands.push_back({u, Matrix::identity(F, u.dim()), Matrix::identity(F, u.dim()), 0});
  d.multiplicities = {1};
  return d;
}

}  // namespace

std::optional<SplitCertificate> summand_criterion(const Module& u, const Subgroup& h, std::uint64_t seed) {
  require_subgroup_of(u, h);
  return summand_criterion_with(u, h, decompose(u, seed));
}

RelProjCertificate is_relatively_projective(const Module& u, const Subgroup& h, std::uint64_t seed) {
  require_subgroup_of(u, h);
  return relproj_with(u, h, decompose(u, seed));
}

bool sylow_implies_relproj_check(const Module& u, const Subgroup& h) {
  require_subgroup_of(u, h);
  const auto& F = *u.field();
  const std::size_t index = u.group()->order() / h.order();
  if (index % F.characteristic() == 0) fail(Errc::IndexDivisibleByP, "p divides the index");
  const Matrix alpha = Matrix::scalar(u.field(), u.dim(), F.inv(F.from_int(static_cast<long long>(index))));
  check(trace_map(alpha, u, u, h).is_identity() || u.dim() == 0, "scaled identity does not trace to the identity");
  check(is_relatively_projective(u, h).verdict, "relative projectivity test rejects a Sylow-containing subgroup");
  return true;
}

std::vector<SourceEntry> sources(const Module& u, const Subgroup& q, std::uint64_t seed) {
  require_subgroup_of(u, q);
  auto sq = standalone(q);
  const auto d = decompose(restrict(u, q, sq), seed);
  std::vector<SourceEntry> kept;
  for (std::size_t c = 0; c < d.class_count(); ++c) {
    const Summand* rep = nullptr;
    for (const auto& s : d.summands)
      if (s.iso_class == c) {
        rep = &s;
        break;
      }
    auto maps = indecomposable_summand_maps(u, induce(rep->module, q, sq));
    if (maps) kept.push_back({rep->module, d.multiplicities[c], std::move(*maps)});
  }
  if (kept.empty()) fail(Errc::NoSourceFound, "no summand of the restriction induces back to U");

  // The kept classes are exactly the N_G(Q)-conjugates of the first.
  std::vector<bool> hit(kept.size(), false);
  const Subgroup norm = normalizer(q);
  for (auto x : norm.members()) {
    const Module c = reindex(conjugate_module(kept[0].module, q, x), sq.group);
    bool found = false;
    for (std::size_t k = 0; k < kept.size() && !found; ++k)
      if (indecomposable_iso(c, kept[k].module)) hit[k] = found = true;
    check(found, "a normalizer conjugate of a source is not a source");
  }
  check(std::all_of(hit.begin(), hit.end(), [](bool b) { return b; }), "sources are not one normalizer orbit");
  return kept;
}

VertexReport vertex(const Module& u, std::uint64_t seed, std::size_t max_classes) {
  if (u.dim() == 0 || decompose(u, seed).summands.size() != 1)
    fail(Errc::NotIndecomposable, "vertex requires an indecomposable module");
  const unsigned p = u.field()->characteristic();
  const Decomposition d = single_summand(u);
  VertexReport r;
  r.classes = p_subgroups_up_to_conjugacy(u.group(), p, max_classes);
  for (const auto& c : r.classes) r.relatively_projective.push_back(relproj_with(u, c, d).verdict);

  std::vector<std::size_t> minimal;
  for (std::size_t i = 0; i < r.classes.size(); ++i) {
    if (!r.relatively_projective[i]) continue;
    bool is_min = true;
    for (std::size_t j = 0; j < r.classes.size() && is_min; ++j)
      if (j != i && r.relatively_projective[j] && r.classes[j].order() < r.classes[i].order() &&
          contained_up_to_conjugacy(r.classes[j], r.classes[i]))
        is_min = false;
    if (is_min) minimal.push_back(i);
  }
  check(minimal.size() == 1, "vertex class is not unique");
  r.class_id = minimal[0];
  r.vertex = r.classes[r.class_id];
  for (std::size_t i = 0; i < r.classes.size(); ++i)
    check(r.relatively_projective[i] == contained_up_to_conjugacy(r.vertex, r.classes[i]).has_value(),
          "relative projectivity does not match containment of the vertex");
  r.sources = sources(u, r.vertex, seed);
  return r;
}

}  // namespace modrep
