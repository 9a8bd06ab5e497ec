#include "modrep/module.hpp"

#include <random>

#include "modrep/error.hpp"
#include "modrep/linalg.hpp"

namespace modrep {

namespace {

constexpr std::size_t kMaxStoredEntries = std::size_t{1} << 28;

void require_size(std::size_t order, std::size_t dim) {
  if (dim && order * dim * dim > kMaxStoredEntries) fail(Errc::TooLarge, "module too large to materialize");
}

void require_same_base(const Module& a, const Module& b) {
  if (!same_group(a.group(), b.group())) fail(Errc::GroupMismatch, "modules over different groups");
  if (!same_field(a.field(), b.field())) fail(Errc::FieldMismatch, "modules over different fields");
}

Matrix permutation_matrix(const FieldPtr& f, const std::vector<std::size_t>& image) {
  Matrix m(f, image.size(), image.size());
  for (std::size_t c = 0; c < image.size(); ++c) m(image[c], c) = 1;
  return m;
}

}  // namespace

Module Module::from_generators(GroupPtr group, FieldPtr field, std::size_t dim, std::vector<Matrix> gens) {
  const auto& G = *group;
  if (gens.size() != G.generators().size()) fail(Errc::InvalidModule, "one matrix per group generator required");
  for (const auto& m : gens) {
    if (m.rows() != dim || m.cols() != dim) fail(Errc::InvalidModule, "generator matrix has the wrong shape");
    if (dim && !same_field(m.field(), field)) fail(Errc::FieldMismatch, "generator matrix over another field");
    if (!is_invertible(m)) fail(Errc::InvalidModule, "generator matrix is not invertible");
  }
  require_size(G.order(), dim);
  std::vector<Matrix> rho(G.order());
  rho[0] = Matrix::identity(field, dim);
  for (std::size_t i = 1; i < G.order(); ++i) rho[i] = gens[G.word_generator(i)] * rho[G.word_parent(i)];
  // rho(s g) = rho(s) rho(g) for generators s and all g is equivalent to
  // the homomorphism property on all pairs
  for (std::size_t k = 0; k < gens.size(); ++k)
    for (std::size_t g = 0; g < G.order(); ++g)
      if (!(rho[G.mul(G.generator_indices()[k], g)] == gens[k] * rho[g]))
        fail(Errc::InvalidModule, "generator matrices do not satisfy the group relations");
  return from_elements(std::move(group), std::move(field), dim, std::move(rho));
}

Module Module::from_elements(GroupPtr group, FieldPtr field, std::size_t dim, std::vector<Matrix> rho) {
  if (rho.size() != group->order()) fail(Errc::InvalidModule, "one matrix per group element required");
  Module m;
  auto d = std::make_shared<Data>();
  d->group = std::move(group);
  d->field = std::move(field);
  d->dim = dim;
  d->rho = std::move(rho);
  m.d_ = std::move(d);
  return m;
}

std::vector<Matrix> Module::generator_matrices() const {
  std::vector<Matrix> out;
  for (auto g : d_->group->generator_indices()) out.push_back(d_->rho[g]);
  return out;
}

bool Module::satisfies_axioms(std::size_t exhaustive_limit, std::size_t samples) const {
  const auto& G = *d_->group;
  if (!d_->rho[0].is_identity() && d_->dim) return false;
  for (const auto& m : d_->rho)
    if (m.rows() != d_->dim || m.cols() != d_->dim) return false;
  if (G.order() <= exhaustive_limit) {
    for (std::size_t a = 0; a < G.order(); ++a)
      for (std::size_t b = 0; b < G.order(); ++b)
        if (!(d_->rho[a] * d_->rho[b] == d_->rho[G.mul(a, b)])) return false;
    return true;
  }
  std::mt19937_64 rng(0);
  std::uniform_int_distribution<std::size_t> pick(0, G.order() - 1);
  for (std::size_t t = 0; t < samples; ++t) {
    std::size_t a = pick(rng), b = pick(rng);
    if (!(d_->rho[a] * d_->rho[b] == d_->rho[G.mul(a, b)])) return false;
  }
  return true;
}

bool operator==(const Module& a, const Module& b) {
  if (a.d_ == b.d_) return true;
  if (!same_base(a, b) || a.dim() != b.dim()) return false;
  for (auto g : a.group()->generator_indices())
    if (!(a.rho(g) == b.rho(g))) return false;
  return true;
}

bool same_base(const Module& a, const Module& b) {
  return same_group(a.group(), b.group()) && same_field(a.field(), b.field());
}

bool is_equivariant(const Module& u, const Module& w, const Matrix& m) {
  require_same_base(u, w);
  if (m.rows() != w.dim() || m.cols() != u.dim()) return false;
  for (auto g : u.group()->generator_indices())
    if (!(m * u.rho(g) == w.rho(g) * m)) return false;
  return true;
}

Module zero_module(GroupPtr g, FieldPtr f) {
  std::vector<Matrix> rho(g->order(), Matrix(f, 0, 0));
  return Module::from_elements(std::move(g), std::move(f), 0, std::move(rho));
}

Module trivial_module(GroupPtr g, FieldPtr f) {
  std::vector<Matrix> rho(g->order(), Matrix::identity(f, 1));
  return Module::from_elements(std::move(g), std::move(f), 1, std::move(rho));
}

Module regular_module(GroupPtr g, FieldPtr f) {
  const auto& G = *g;
  require_size(G.order(), G.order());
  std::vector<Matrix> rho(G.order());
  std::vector<std::size_t> img(G.order());
  for (std::size_t x = 0; x < G.order(); ++x) {
    for (std::size_t h = 0; h < G.order(); ++h) img[h] = G.mul(x, h);
    rho[x] = permutation_matrix(f, img);
  }
  return Module::from_elements(std::move(g), std::move(f), G.order(), std::move(rho));
}

Module permutation_module(const Subgroup& h, FieldPtr f) {
  const auto& G = *h.parent();
  auto label = left_coset_labels(h);
  auto reps = left_transversal(h);
  require_size(G.order(), reps.size());
  std::vector<Matrix> rho(G.order());
  std::vector<std::size_t> img(reps.size());
  for (std::size_t x = 0; x < G.order(); ++x) {
    for (std::size_t c = 0; c < reps.size(); ++c) img[c] = label[G.mul(x, reps[c])];
    rho[x] = permutation_matrix(f, img);
  }
  return Module::from_elements(h.parent(), std::move(f), reps.size(), std::move(rho));
}

Module direct_sum(const Module& a, const Module& b) {
  require_same_base(a, b);
  std::vector<Matrix> rho(a.group()->order());
  for (std::size_t g = 0; g < rho.size(); ++g) rho[g] = modrep::direct_sum(a.rho(g), b.rho(g));
  return Module::from_elements(a.group(), a.field(), a.dim() + b.dim(), std::move(rho));
}

Module direct_sum(const std::vector<Module>& parts) {
  if (parts.empty()) fail(Errc::InvalidModule, "direct sum of no modules");
  Module acc = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) acc = direct_sum(acc, parts[i]);
  return acc;
}

Module restrict(const Module& u, const Subgroup& h) { return restrict(u, h, standalone(h)); }

Module restrict(const Module& u, const Subgroup& h, const StandaloneSubgroup& sh) {
  if (!same_group(u.group(), h.parent())) fail(Errc::GroupMismatch, "subgroup is not in the module's group");
  std::vector<Matrix> rho(sh.group->order());
  for (std::size_t i = 0; i < rho.size(); ++i) rho[i] = u.rho(sh.to_parent[i]);
  return Module::from_elements(sh.group, u.field(), u.dim(), std::move(rho));
}

Module induce(const Module& v, const Subgroup& h) { return induce(v, h, standalone(h)); }

Module induce(const Module& v, const Subgroup& h, const StandaloneSubgroup& sh) {
  if (!same_group(v.group(), sh.group)) fail(Errc::GroupMismatch, "module is not over the given subgroup");
  const auto& G = *h.parent();
  auto reps = left_transversal(h);
  auto label = left_coset_labels(h);
  const std::size_t k = reps.size(), n = v.dim();
  require_size(G.order(), k * n);
  std::vector<Matrix> rho(G.order());
  for (std::size_t g = 0; g < G.order(); ++g) {
    Matrix m(v.field(), k * n, k * n);
    for (std::size_t i = 0; i < k; ++i) {
      std::size_t y = G.mul(g, reps[i]);
      std::size_t j = label[y];
      std::size_t hp = G.mul(G.inv(reps[j]), y);
      m.set_block(j * n, i * n, v.rho(sh.from_parent.at(hp)));
    }
    rho[g] = std::move(m);
  }
  return Module::from_elements(h.parent(), v.field(), k * n, std::move(rho));
}

Matrix induce_map(const Matrix& phi, std::size_t index) {
  Matrix out(phi.field(), phi.rows() * index, phi.cols() * index);
  for (std::size_t i = 0; i < index; ++i) out.set_block(i * phi.rows(), i * phi.cols(), phi);
  return out;
}

Coinvariants coinvariants(const Module& u, const QuotientMap& map) {
  if (!same_group(u.group(), map.source())) fail(Errc::GroupMismatch, "quotient map does not start at the module's group");
  const auto& F = u.field();
  const std::size_t n = u.dim();
  const Subgroup& N = map.kernel();
  std::vector<Matrix> cols;
  for (auto x : subgroup_generators(N)) cols.push_back(u.rho(x) - Matrix::identity(F, n));
  Matrix span = hstack(cols, F, n);
  QuotientSpace qs(F, n, span);
  const Matrix& pi = qs.projection();
  const Matrix& sigma = qs.section();
  const auto& Q = *map.target();
  std::vector<Matrix> rho(Q.order());
  for (std::size_t t = 0; t < Q.order(); ++t) rho[t] = pi * u.rho(map.least_preimage(t)) * sigma;
  for (auto g : u.group()->generator_indices())
    check(pi * u.rho(g) == rho[map(g)] * pi, "coinvariant projection must be equivariant");
  if (n > 0 && is_p_group(N, F->characteristic()))
    check(qs.dim() > 0, "coinvariants by a p-group of a nonzero module cannot vanish");
  Module m = Module::from_elements(map.target(), F, qs.dim(), std::move(rho));
  return {std::move(m), map, pi, sigma};
}

Coinvariants coinvariants(const Module& u, const Subgroup& n) {
  if (!same_group(u.group(), n.parent())) fail(Errc::GroupMismatch, "subgroup is not in the module's group");
  auto q = quotient(n);
  return coinvariants(u, q.map);
}

Matrix coinvariant_map(const Matrix& alpha, const Coinvariants& cu, const Coinvariants& cw) {
  return cw.projection * alpha * cu.section;
}

Module inflate(const Module& u, const QuotientMap& map) {
  if (!same_group(u.group(), map.target())) fail(Errc::GroupMismatch, "module is not over the quotient");
  std::vector<Matrix> rho(map.source()->order());
  for (std::size_t g = 0; g < rho.size(); ++g) rho[g] = u.rho(map(g));
  return Module::from_elements(map.source(), u.field(), u.dim(), std::move(rho));
}

Module conjugate_module(const Module& v, const Subgroup& h, std::size_t x) {
  const auto& G = *h.parent();
  if (x >= G.order()) fail(Errc::BadIndex, "conjugating element out of range");
  auto sh = standalone(h);
  if (!same_group(v.group(), sh.group)) fail(Errc::GroupMismatch, "module is not over the given subgroup");
  auto sx = standalone(conjugate(h, x));
  std::vector<Matrix> rho(sx.group->order());
  const std::size_t xinv = G.inv(x);
  for (std::size_t i = 0; i < rho.size(); ++i) {
    std::size_t hp = G.conj(xinv, sx.to_parent[i]);
    rho[i] = v.rho(sh.from_parent.at(hp));
  }
  return Module::from_elements(sx.group, v.field(), v.dim(), std::move(rho));
}

Module reindex(const Module& u, const GroupPtr& target) {
  const auto& A = *u.group();
  if (A.order() != target->order() || A.degree() != target->degree())
    fail(Errc::GroupMismatch, "groups have different element sets");
  std::vector<Matrix> rho(target->order());
  for (std::size_t i = 0; i < rho.size(); ++i) {
    auto a = A.index_of(target->element(i));
    if (!a) fail(Errc::GroupMismatch, "groups have different element sets");
    rho[i] = u.rho(*a);
  }
  return Module::from_elements(target, u.field(), u.dim(), std::move(rho));
}

Module scalar_extend(const Module& u, const FieldEmbedding& e) {
  if (!same_field(u.field(), e.source())) fail(Errc::FieldMismatch, "embedding does not start at the module's field");
  const auto& T = e.target();
  std::vector<Matrix> rho(u.group()->order());
  for (std::size_t g = 0; g < rho.size(); ++g) {
    Matrix m(T, u.dim(), u.dim());
    for (std::size_t i = 0; i < u.dim(); ++i)
      for (std::size_t j = 0; j < u.dim(); ++j) m(i, j) = e(u.rho(g)(i, j));
    rho[g] = std::move(m);
  }
  return Module::from_elements(u.group(), T, u.dim(), std::move(rho));
}

Module summand_module(const Module& u, const Matrix& inclusion, const Matrix& projection) {
  const std::size_t d = inclusion.cols();
  if (inclusion.rows() != u.dim() || projection.cols() != u.dim() || projection.rows() != d)
    fail(Errc::DimensionMismatch, "inclusion/projection shapes do not match the module");
  if (!(projection * inclusion).is_identity() && d) fail(Errc::InvalidModule, "projection is not a left inverse");
  std::vector<Matrix> rho(u.group()->order());
  for (std::size_t g = 0; g < rho.size(); ++g) rho[g] = projection * u.rho(g) * inclusion;
  for (auto g : u.group()->generator_indices())
    if (!(u.rho(g) * inclusion == inclusion * rho[g])) fail(Errc::InvalidModule, "subspace is not invariant");
  return Module::from_elements(u.group(), u.field(), d, std::move(rho));
}

std::vector<Matrix> hom_space(const Module& u, const Module& w) {
  require_same_base(u, w);
  const auto& F = u.field();
  const auto& Fd = *F;
  const std::size_t n = u.dim(), m = w.dim();
  if (n == 0 || m == 0) return {};
  const auto& gens = u.group()->generator_indices();

  // Spin the standard basis vectors into a basis of U. Each basis vector is
  // either a seed or a generator applied to an earlier basis vector.
  struct Step {
    std::size_t seed;  // seed number, or npos
    std::size_t from;
    std::size_t gen;
  };
  constexpr std::size_t npos = static_cast<std::size_t>(-1);
  RowEchelon ech(F, n);
  std::vector<std::vector<Elem>> basis;
  std::vector<Step> steps;
  std::vector<std::pair<std::size_t, std::size_t>> relations;
  std::size_t seeds = 0, processed = 0;
  for (std::size_t k = 0; k < n && basis.size() < n; ++k) {
    std::vector<Elem> e(n, 0);
    e[k] = 1;
    if (!ech.insert(e)) continue;
    basis.push_back(std::move(e));
    steps.push_back({seeds++, 0, 0});
    for (; processed < basis.size(); ++processed) {
      for (std::size_t j = 0; j < gens.size(); ++j) {
        auto v = u.rho(gens[j]).apply(basis[processed]);
        if (ech.insert(v)) {
          basis.push_back(std::move(v));
          steps.push_back({npos, processed, j});
        } else {
          relations.emplace_back(processed, j);
        }
      }
    }
  }
  Matrix B = Matrix::from_columns(F, n, basis);
  auto binv = inverse(B);
  check(binv.has_value(), "spun basis must be invertible");

  // phi(b_t) = W_t x_s for the seed s that b_t descends from, where x_s is
  // the image of that seed (m unknowns per seed).
  const std::size_t width = m * seeds;
  std::vector<std::size_t> origin(n);
  std::vector<Matrix> phi(n);
  for (std::size_t t = 0; t < n; ++t) {
    if (steps[t].seed != npos) {
      origin[t] = steps[t].seed;
      phi[t] = Matrix::identity(F, m);
    } else {
      origin[t] = origin[steps[t].from];
      phi[t] = w.rho(gens[steps[t].gen]) * phi[steps[t].from];
    }
  }
  auto add_block = [&](Matrix& r, const Matrix& block, std::size_t seed, Elem scale) {
    for (std::size_t a = 0; a < m; ++a) {
      auto dst = r.row(a).subspan(seed * m, m);
      auto src = block.row(a);
      for (std::size_t b = 0; b < m; ++b) dst[b] = Fd.add(dst[b], Fd.mul(scale, src[b]));
    }
  };
  RowEchelon eq(F, width);
  for (auto [i, j] : relations) {
    if (eq.rank() == width) break;
    auto v = u.rho(gens[j]).apply(basis[i]);
    auto c = binv->apply(v);
    Matrix r(F, m, width);
    add_block(r, w.rho(gens[j]) * phi[i], origin[i], 1);
    for (std::size_t t = 0; t < n; ++t)
      if (c[t]) add_block(r, phi[t], origin[t], Fd.neg(c[t]));
    for (std::size_t row = 0; row < m; ++row) {
      auto rv = r.row(row);
      eq.insert(std::vector<Elem>(rv.begin(), rv.end()));
    }
  }
  Matrix ns = eq.nullspace();
  std::vector<Matrix> out;
  out.reserve(ns.cols());
  for (std::size_t c = 0; c < ns.cols(); ++c) {
    auto x = ns.column(c);
    Matrix spun(F, m, n);
    for (std::size_t t = 0; t < n; ++t) {
      auto y = phi[t].apply(std::span<const Elem>(x).subspan(origin[t] * m, m));
      for (std::size_t r = 0; r < m; ++r) spun(r, t) = y[r];
    }
    out.push_back(spun * *binv);
  }
  return out;
}

std::optional<Matrix> iso_test(const Module& u, const Module& w, const IsoOptions& opt) {
  require_same_base(u, w);
  const auto& F = u.field();
  if (u.dim() != w.dim()) return std::nullopt;
  const std::size_t n = u.dim();
  if (n == 0) return Matrix(F, 0, 0);
  auto basis = hom_space(u, w);
  if (basis.empty()) return std::nullopt;
  const std::size_t d = basis.size();
  const std::uint64_t q = F->order();

  auto combine = [&](const std::vector<Elem>& c) {
    Matrix f(F, n, n);
    for (std::size_t i = 0; i < d; ++i) f.add_scaled(basis[i], c[i]);
    return f;
  };

  std::mt19937_64 rng(opt.seed);
  std::uniform_int_distribution<Elem> pick(0, static_cast<Elem>(q - 1));
  for (int t = 0; t < opt.random_tries; ++t) {
    std::vector<Elem> c(d);
    for (auto& x : c) x = pick(rng);
    Matrix f = combine(c);
    if (is_invertible(f)) return f;
  }

  // If some f is invertible then id = f^-1 f lies in span{g o f_i}.
  auto back = hom_space(w, u);
  RowEchelon span(F, n * n);
  std::vector<Elem> id = Matrix::identity(F, n).flatten();
  bool id_in_span = false;
  for (const auto& g : back) {
    for (const auto& f : basis) {
      span.insert((g * f).flatten());
      if (span.contains(id)) {
        id_in_span = true;
        break;
      }
    }
    if (id_in_span) break;
  }
  if (!id_in_span) return std::nullopt;

  // q^d <= budget: enumerate every combination
  std::uint64_t total = 1;
  bool small = true;
  for (std::size_t i = 0; i < d && small; ++i) {
    total *= q;
    if (total > opt.budget) small = false;
  }
  if (!small) fail(Errc::IsoUndecided, "isomorphism search budget exhausted");
  std::vector<Elem> c(d, 0);
  for (std::uint64_t code = 1; code < total; ++code) {
    std::uint64_t x = code;
    for (std::size_t i = 0; i < d; ++i) {
      c[i] = static_cast<Elem>(x % q);
      x /= q;
    }
    Matrix f = combine(c);
    if (is_invertible(f)) return f;
  }
  return std::nullopt;
}

}  // namespace modrep
