#include "modrep/endo.hpp"

#include <algorithm>
#include <random>

#include "modrep/error.hpp"

namespace modrep {

namespace {

using IntMat = std::vector<std::uint64_t>;

IntMat int_mul(const IntMat& a, const IntMat& b, std::size_t n, std::uint64_t m) {
  IntMat c(n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::uint64_t s = 0;
      for (std::size_t k = 0; k < n; ++k) s += a[i * n + k] * b[k * n + j];
      c[i * n + j] = s % m;
    }
  return c;
}

// Trace of a^e over Z/m.
std::uint64_t int_power_trace(IntMat a, std::size_t n, std::uint64_t e, std::uint64_t m) {
  IntMat r(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) r[i * n + i] = 1 % m;
  while (e) {
    if (e & 1) r = int_mul(r, a, n, m);
    e >>= 1;
    if (e) a = int_mul(a, a, n, m);
  }
  std::uint64_t t = 0;
  for (std::size_t i = 0; i < n; ++i) t = (t + r[i * n + i]) % m;
  return t;
}

Matrix flat_column_matrix(const std::vector<Matrix>& ms, const FieldPtr& f, std::size_t len) {
  Matrix out(f, len, ms.size());
  for (std::size_t c = 0; c < ms.size(); ++c)
    for (std::size_t r = 0; r < len; ++r) out(r, c) = ms[c].data()[r];
  return out;
}

std::vector<Elem> random_vector(const FieldPtr& f, std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<Elem> pick(0, f->order() - 1);
  std::vector<Elem> v(n);
  for (auto& x : v) x = pick(rng);
  return v;
}

}  // namespace

EndAlgebra::EndAlgebra(Module u) : u_(std::move(u)) {
  const auto& F = field();
  const std::size_t n = u_.dim();
  basis_ = hom_space(u_, u_);
  const std::size_t d = basis_.size();
  if (d == 0) {
    radical_ = Matrix(F, 0, 0);
    return;
  }
  coords_.emplace(flat_column_matrix(basis_, F, n * n));
  sc_.assign(d * d * d, 0);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      auto c = coords_->coordinates((basis_[i] * basis_[j]).data());
      check(c.has_value(), "End is not closed under composition");
      std::copy(c->begin(), c->end(), sc_.begin() + (i * d + j) * d);
    }
  auto one = coords_->coordinates(Matrix::identity(F, n).data());
  check(one.has_value(), "identity is not in End");
  one_ = *one;
  compute_radical();
  compute_locality();
}

std::vector<Elem> EndAlgebra::multiply(const std::vector<Elem>& a, const std::vector<Elem>& b) const {
  const auto& F = *field();
  const std::size_t d = dim();
  std::vector<Elem> r(d, 0);
  for (std::size_t i = 0; i < d; ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (!b[j]) continue;
      F.axpy(r.data(), &sc_[(i * d + j) * d], F.mul(a[i], b[j]), d);
    }
  }
  return r;
}

Matrix EndAlgebra::element(const std::vector<Elem>& coords) const {
  const std::size_t n = u_.dim();
  Matrix m(field(), n, n);
  for (std::size_t i = 0; i < dim(); ++i)
    if (coords[i]) m.add_scaled(basis_[i], coords[i]);
  return m;
}

std::optional<std::vector<Elem>> EndAlgebra::coordinates(const Matrix& m) const {
  if (!coords_) return m.is_zero() ? std::optional<std::vector<Elem>>(std::vector<Elem>{}) : std::nullopt;
  if (m.rows() != u_.dim() || m.cols() != u_.dim()) return std::nullopt;
  return coords_->coordinates(m.data());
}

std::vector<Matrix> EndAlgebra::radical_matrices() const {
  std::vector<Matrix> out;
  for (std::size_t c = 0; c < radical_.cols(); ++c) out.push_back(element(radical_.column(c)));
  return out;
}

bool EndAlgebra::radical_contains(const Matrix& m) const {
  auto c = coordinates(m);
  if (!c) return false;
  if (radical_.cols() == 0) return std::all_of(c->begin(), c->end(), [](Elem x) { return x == 0; });
  return SpanCoordinates(radical_).contains(*c);
}

// Radical over the prime field via the trace-of-power forms
//   g_i(a) = Tr(lift(a)^(p^i)) / p^i  mod p,
// I_{-1} = E, I_i = {a in I_{i-1} : g_i(a b) = 0 for all b}, Rad = I_l.
void EndAlgebra::compute_radical() {
  const auto& F = field();
  const auto& Fd = *F;
  const std::uint64_t p = Fd.characteristic();
  const std::size_t e = Fd.degree();
  const std::size_t d = dim();
  const std::size_t D = d * e;
  const bool natural = u_.dim() <= d;
  const std::size_t rep_n = natural ? u_.dim() : d;
  const std::size_t N = rep_n * e;
  auto Fp = FiniteField::make(static_cast<unsigned>(p));

  std::vector<Elem> omega_pow(e, 1);
  for (std::size_t t = 1; t < e; ++t) omega_pow[t] = Fd.mul(omega_pow[t - 1], Fd.generator_class());

  auto to_fq = [&](const std::vector<Elem>& v) {
    std::vector<Elem> c(d);
    std::vector<unsigned> co(e);
    for (std::size_t k = 0; k < d; ++k) {
      for (std::size_t t = 0; t < e; ++t) co[t] = v[k * e + t];
      c[k] = Fd.from_coefficients(co);
    }
    return c;
  };
  auto to_fp = [&](const std::vector<Elem>& c) {
    std::vector<Elem> v(D, 0);
    for (std::size_t k = 0; k < d; ++k) {
      auto co = Fd.coefficients(c[k]);
      for (std::size_t t = 0; t < e && t < co.size(); ++t) v[k * e + t] = co[t];
    }
    return v;
  };
  auto rep = [&](const std::vector<Elem>& c) {
    if (natural) return element(c);
    Matrix L(F, d, d);
    for (std::size_t i = 0; i < d; ++i) {
      if (!c[i]) continue;
      for (std::size_t j = 0; j < d; ++j)
        for (std::size_t k = 0; k < d; ++k)
          L(k, j) = Fd.add(L(k, j), Fd.mul(c[i], sc_[(i * d + j) * d + k]));
    }
    return L;
  };
  // Matrix over F_q to an integer matrix over F_p through the regular
  // representation of F_q on its polynomial basis.
  auto expand = [&](const Matrix& m) {
    IntMat out(N * N, 0);
    for (std::size_t r = 0; r < rep_n; ++r)
      for (std::size_t c = 0; c < rep_n; ++c) {
        const Elem a = m(r, c);
        if (!a) continue;
        for (std::size_t j = 0; j < e; ++j) {
          auto co = Fd.coefficients(Fd.mul(a, omega_pow[j]));
          for (std::size_t t = 0; t < e && t < co.size(); ++t) out[(r * e + t) * N + c * e + j] = co[t];
        }
      }
    return out;
  };

  std::size_t levels = 0;
  for (std::uint64_t pw = p; pw <= N; pw *= p) ++levels;

  std::vector<std::vector<Elem>> cur;
  for (std::size_t i = 0; i < D; ++i) {
    std::vector<Elem> v(D, 0);
    v[i] = 1;
    cur.push_back(std::move(v));
  }
  std::vector<std::vector<Elem>> fp_basis = cur;

  std::uint64_t pi = 1;  // p^i
  for (std::size_t i = 0; i <= levels && !cur.empty(); ++i, pi *= p) {
    const std::uint64_t mod = pi * p;
    std::vector<Elem> g(cur.size());
    for (std::size_t l = 0; l < cur.size(); ++l) {
      const std::uint64_t t = int_power_trace(expand(rep(to_fq(cur[l]))), N, pi, mod);
      check(t % pi == 0, "trace of p-power not divisible");
      g[l] = static_cast<Elem>((t / pi) % p);
    }
    SpanCoordinates sc(Matrix::from_columns(Fp, D, cur));
    Matrix eqs(Fp, D, cur.size());
    for (std::size_t k = 0; k < cur.size(); ++k) {
      const auto xk = to_fq(cur[k]);
      for (std::size_t j = 0; j < D; ++j) {
        auto c = sc.coordinates(to_fp(multiply(xk, to_fq(fp_basis[j]))));
        check(c.has_value(), "radical filtration term is not an ideal");
        Elem s = 0;
        for (std::size_t l = 0; l < c->size(); ++l) s = Fp->add(s, Fp->mul((*c)[l], g[l]));
        eqs(j, k) = s;
      }
    }
    Matrix ker = kernel(eqs);
    std::vector<std::vector<Elem>> next;
    for (std::size_t c = 0; c < ker.cols(); ++c) {
      std::vector<Elem> v(D, 0);
      for (std::size_t k = 0; k < cur.size(); ++k)
        if (ker(k, c)) Fp->axpy(v.data(), cur[k].data(), ker(k, c), D);
      next.push_back(std::move(v));
    }
    cur = std::move(next);
  }

  std::vector<std::vector<Elem>> fq_cols;
  for (const auto& v : cur) fq_cols.push_back(to_fq(v));
  radical_ = fq_cols.empty() ? Matrix(F, d, 0) : image(Matrix::from_columns(F, d, fq_cols));
  check(radical_.cols() * e == cur.size(), "radical is not a subspace over the base field");
}

void EndAlgebra::compute_locality() {
  const auto& F = field();
  const std::size_t d = dim();
  QuotientSpace qs(F, d, radical_);
  const std::size_t qd = qs.dim();
  check(qd > 0, "identity lies in the radical");
  std::vector<std::vector<Elem>> s(qd);
  for (std::size_t a = 0; a < qd; ++a) s[a] = qs.section().column(a);
  auto proj = [&](const std::vector<Elem>& x) { return qs.projection().apply(x); };
  for (std::size_t a = 0; a < qd; ++a)
    for (std::size_t b = a + 1; b < qd; ++b)
      if (proj(multiply(s[a], s[b])) != proj(multiply(s[b], s[a]))) {
        local_ = false;
        return;
      }
  // E/R commutative semisimple: a product of fields, one per fixed line of
  // the Frobenius x -> x^q.
  const std::uint64_t q = F->order();
  Matrix frob(F, qd, qd);
  for (std::size_t a = 0; a < qd; ++a) {
    std::vector<Elem> r = one_, b = s[a];
    for (std::uint64_t k = q; k; k >>= 1) {
      if (k & 1) r = multiply(r, b);
      if (k > 1) b = multiply(b, b);
    }
    auto pr = proj(r);
    for (std::size_t i = 0; i < qd; ++i) frob(i, a) = pr[i];
  }
  const Matrix fixed = kernel(frob - Matrix::identity(F, qd));
  local_ = fixed.cols() == 1;
}

Matrix radical_oracle(const EndAlgebra& e, std::uint64_t max_elements) {
  const auto& F = e.field();
  const auto& Fd = *F;
  const std::size_t d = e.dim();
  const std::uint64_t q = Fd.order();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < d; ++i) {
    total *= q;
    if (total > max_elements) fail(Errc::TooLarge, "End algebra too large for enumeration");
  }
  if (d == 0) return Matrix(F, 0, 0);

  auto decode = [&](std::uint64_t code) {
    std::vector<Elem> v(d);
    for (std::size_t i = 0; i < d; ++i, code /= q) v[i] = static_cast<Elem>(code % q);
    return v;
  };
  auto encode = [&](const std::vector<Elem>& v) {
    std::uint64_t code = 0;
    for (std::size_t i = d; i-- > 0;) code = code * q + v[i];
    return code;
  };
  std::vector<Elem> tr(d, 0);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) tr[i] = Fd.add(tr[i], e.structure_constant(i, j, j));

  // Nilpotent iff x^d = 0 (the left regular representation is faithful).
  std::vector<std::int8_t> nil_cache(total, -1);
  auto nilpotent = [&](const std::vector<Elem>& x) {
    const auto code = encode(x);
    if (nil_cache[code] >= 0) return nil_cache[code] == 1;
    Elem t = 0;
    for (std::size_t i = 0; i < d; ++i) t = Fd.add(t, Fd.mul(x[i], tr[i]));
    bool nil = false;
    if (t == 0) {
      std::vector<Elem> y = x;
      for (std::size_t k = 1;; k *= 2) {
        if (std::all_of(y.begin(), y.end(), [](Elem c) { return c == 0; })) {
          nil = true;
          break;
        }
        if (k >= d) break;
        y = e.multiply(y, y);
      }
    }
    nil_cache[code] = nil ? 1 : 0;
    return nil;
  };

  std::mt19937_64 rng(0);
  std::uniform_int_distribution<std::uint64_t> pick(0, total - 1);
  RowEchelon found(F, d);
  for (std::uint64_t code = 1; code < total; ++code) {
    const auto x = decode(code);
    if (found.contains(x) || !nilpotent(x)) continue;
    bool witness = false;
    for (std::size_t j = 0; j < d && !witness; ++j) {
      std::vector<Elem> b(d, 0);
      b[j] = 1;
      witness = !nilpotent(e.multiply(x, b));
    }
    for (int t = 0; t < 32 && !witness; ++t) witness = !nilpotent(e.multiply(x, decode(pick(rng))));
    for (std::uint64_t y = 1; y < total && !witness; ++y) witness = !nilpotent(e.multiply(x, decode(y)));
    if (!witness) found.insert(x);
  }
  return Matrix::from_columns(F, d, found.rows());
}

namespace {

struct Piece {
  Module module;
  Matrix inclusion;
  Matrix projection;
};

std::optional<std::pair<Piece, Piece>> try_split(const Piece& pc, const std::vector<Matrix>& end_basis,
                                                 int tries, std::mt19937_64& rng) {
  const auto& F = pc.module.field();
  const std::size_t n = pc.module.dim();
  for (int t = 0; t < tries; ++t) {
    const auto c = random_vector(F, end_basis.size(), rng);
    Matrix a(F, n, n);
    for (std::size_t i = 0; i < c.size(); ++i)
      if (c[i]) a.add_scaled(end_basis[i], c[i]);
    const Poly h = coprime_factor(minimal_polynomial(a), rng);
    if (h.is_zero()) continue;
    const FittingSplit fs = fitting_split(evaluate(h, a));
    check(fs.kernel.cols() > 0 && fs.image.cols() > 0, "coprime factor gave a trivial Fitting split");
    const std::size_t k = fs.kernel.cols();
    auto pinv = inverse(hstack(fs.kernel, fs.image));
    check(pinv.has_value(), "Fitting components are not complementary");
    const Matrix top = pinv->block(0, 0, k, n), bottom = pinv->block(k, 0, n - k, n);
    Piece a1{summand_module(pc.module, fs.kernel, top), pc.inclusion * fs.kernel, top * pc.projection};
    Piece a2{summand_module(pc.module, fs.image, bottom), pc.inclusion * fs.image, bottom * pc.projection};
    return std::make_pair(std::move(a1), std::move(a2));
  }
  return std::nullopt;
}

void split_recursive(const Piece& pc, std::mt19937_64& rng, std::vector<Piece>& leaves) {
  if (pc.module.dim() == 0) return;
  const auto basis = hom_space(pc.module, pc.module);
  if (basis.size() == 1) {
    leaves.push_back(pc);
    return;
  }
  auto parts = try_split(pc, basis, 64, rng);
  if (!parts) {
    if (EndAlgebra(pc.module).is_local()) {
      leaves.push_back(pc);
      return;
    }
    parts = try_split(pc, basis, 256, rng);
    check(parts.has_value(), "no splitting element found for a decomposable module");
  }
  split_recursive(parts->first, rng, leaves);
  split_recursive(parts->second, rng, leaves);
}

}  // namespace

std::optional<Matrix> indecomposable_iso(const Module& x, const Module& y) {
  if (!same_base(x, y)) fail(Errc::GroupMismatch, "modules over different groups or fields");
  if (x.dim() != y.dim()) return std::nullopt;
  if (x.dim() == 0) return Matrix(x.field(), 0, 0);
  const auto fs = hom_space(x, y);
  const auto gs = hom_space(y, x);
  for (const auto& f : fs)
    for (const auto& g : gs)
      if (is_invertible(g * f)) return f;
  return std::nullopt;
}

Decomposition decompose(const Module& u, std::uint64_t seed) {
  const auto& F = u.field();
  const std::size_t n = u.dim();
  std::mt19937_64 rng(seed);
  std::vector<Piece> leaves;
  split_recursive({u, Matrix::identity(F, n), Matrix::identity(F, n)}, rng, leaves);

  Decomposition out;
  std::vector<Module> reps;
  for (auto& leaf : leaves) {
    std::size_t cls = reps.size();
    for (std::size_t r = 0; r < reps.size(); ++r)
      if (indecomposable_iso(reps[r], leaf.module)) {
        cls = r;
        break;
      }
    if (cls == reps.size()) {
      reps.push_back(leaf.module);
      out.multiplicities.push_back(0);
    }
    ++out.multiplicities[cls];
    out.summands.push_back({leaf.module, leaf.inclusion, leaf.projection, cls});
  }
  std::stable_sort(out.summands.begin(), out.summands.end(),
                   [](const Summand& a, const Summand& b) { return a.iso_class < b.iso_class; });

  Matrix sum(F, n, n);
  for (std::size_t i = 0; i < out.summands.size(); ++i) {
    const auto& si = out.summands[i];
    sum += si.inclusion * si.projection;
    for (std::size_t j = 0; j < out.summands.size(); ++j) {
      const Matrix pij = si.projection * out.summands[j].inclusion;
      check(i == j ? pij.is_identity() || pij.rows() == 0 : pij.is_zero(), "summand idempotents not orthogonal");
    }
  }
  check(n == 0 || sum.is_identity(), "summand idempotents do not sum to 1");
  return out;
}

bool isomorphic(const Module& a, const Module& b, std::uint64_t seed) {
  if (!same_base(a, b)) fail(Errc::GroupMismatch, "modules over different groups or fields");
  if (a.dim() != b.dim()) return false;
  const auto da = decompose(a, seed);
  const auto db = decompose(b, seed);
  if (da.class_count() != db.class_count()) return false;
  auto rep = [](const Decomposition& d, std::size_t cls) -> const Module& {
    for (const auto& s : d.summands)
      if (s.iso_class == cls) return s.module;
    check(false, "iso class without a summand");
    return d.summands.front().module;
  };
  std::vector<bool> used(db.class_count(), false);
  for (std::size_t i = 0; i < da.class_count(); ++i) {
    bool matched = false;
    for (std::size_t j = 0; j < db.class_count() && !matched; ++j) {
      if (used[j] || da.multiplicities[i] != db.multiplicities[j]) continue;
      if (indecomposable_iso(rep(da, i), rep(db, j))) used[j] = matched = true;
    }
    if (!matched) return false;
  }
  return true;
}

bool is_summand_of(const Module& x, const Module& w, std::uint64_t seed) {
  if (!same_base(x, w)) fail(Errc::GroupMismatch, "modules over different groups or fields");
  if (x.dim() > w.dim()) return false;
  for (const auto& s : decompose(w, seed).summands)
    if (indecomposable_iso(x, s.module)) return true;
  return false;
}

std::optional<SummandMaps> summand_maps(const Module& u, const Module& w, std::uint64_t seed) {
  if (!same_base(u, w)) fail(Errc::GroupMismatch, "modules over different groups or fields");
  const auto& F = u.field();
  if (u.dim() > w.dim()) return std::nullopt;
  const auto du = decompose(u, seed);
  const auto dw = decompose(w, seed);
  Matrix into(F, w.dim(), u.dim()), back(F, u.dim(), w.dim());
  std::vector<bool> used(dw.summands.size(), false);
  for (const auto& x : du.summands) {
    bool matched = false;
    for (std::size_t j = 0; j < dw.summands.size() && !matched; ++j) {
      if (used[j]) continue;
      const auto& y = dw.summands[j];
      auto iso = indecomposable_iso(x.module, y.module);
      if (!iso) continue;
      auto inv = inverse(*iso);
      check(inv.has_value(), "isomorphism witness is not invertible");
      into += y.inclusion * *iso * x.projection;
      back += x.inclusion * *inv * y.projection;
      used[j] = matched = true;
    }
    if (!matched) return std::nullopt;
  }
  check(u.dim() == 0 || (back * into).is_identity(), "summand maps do not compose to the identity");
  return SummandMaps{std::move(into), std::move(back)};
}

AbsoluteIndecomposability is_absolutely_indecomposable(const Module& u, std::uint64_t seed) {
  EndAlgebra e(u);
  if (!e.is_local()) fail(Errc::NotIndecomposable, "End(U) is not local");
  AbsoluteIndecomposability out;
  out.field_degree = e.quotient_field_degree();
  if (out.field_degree == 1) return out;
  const auto emb = extension_of_degree(u.field(), static_cast<unsigned>(out.field_degree));
  out.absolutely_indecomposable = false;
  out.splitting_field = emb.target();
  out.split = decompose(scalar_extend(u, emb), seed);
  check(out.split->summands.size() == out.field_degree, "extension did not split into Galois conjugates");
  return out;
}

ExchangeResult exchange(const Module& u, const Module& v, const Module& w, const Matrix& f, const Matrix& g) {
  if (!same_base(u, v) || !same_base(u, w)) fail(Errc::GroupMismatch, "modules over different groups or fields");
  const std::size_t n = u.dim(), a = v.dim(), b = w.dim();
  if (f.rows() != a + b || f.cols() != n || g.rows() != n || g.cols() != a + b)
    fail(Errc::DimensionMismatch, "maps do not match U and V+W");
  const Module vw = direct_sum(v, w);
  if (!is_equivariant(u, vw, f) || !is_equivariant(vw, u, g))
    fail(Errc::HypothesisViolated, "maps are not module homomorphisms");
  if (!(g * f).is_identity()) fail(Errc::HypothesisViolated, "g f is not the identity");
  for (int side = 0; side < 2; ++side) {
    const std::size_t off = side == 0 ? 0 : a, len = side == 0 ? a : b;
    const Matrix into = f.block(off, 0, len, n);
    const Matrix out = g.block(0, off, n, len);
    auto inv = inverse(out * into);
    if (inv) return {side, into, *inv * out};
  }
  if (!EndAlgebra(u).is_local()) fail(Errc::NotIndecomposable, "End(U) is not local");
  check(false, "neither component of the identity is invertible in a local ring");
  return {};
}

}  // namespace modrep
