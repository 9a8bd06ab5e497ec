#include "modrep/linalg.hpp"

#include "modrep/error.hpp"

namespace modrep {

Echelon rref(Matrix a) {
  const auto& F = *a.field();
  const std::size_t m = a.rows(), n = a.cols();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    std::size_t pr = r;
    while (pr < m && a(pr, c) == 0) ++pr;
    if (pr == m) continue;
    if (pr != r)
      for (std::size_t j = 0; j < n; ++j) std::swap(a(r, j), a(pr, j));
    Elem inv = F.inv(a(r, c));
    F.scale(a.row(r).data(), inv, n);
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r || a(i, c) == 0) continue;
      F.axpy(a.row(i).data(), a.row(r).data(), F.neg(a(i, c)), n);
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(a), std::move(pivots)};
}

std::size_t rank(const Matrix& a) {
  if (a.rows() == 0 || a.cols() == 0) return 0;
  return rref(a).pivots.size();
}

Matrix kernel(const Matrix& a) {
  const std::size_t n = a.cols();
  if (a.rows() == 0) return Matrix::identity(a.field(), n);
  auto e = rref(a);
  std::vector<bool> is_pivot(n, false);
  for (auto c : e.pivots) is_pivot[c] = true;
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < n; ++c)
    if (!is_pivot[c]) free.push_back(c);
  const auto& F = *a.field();
  Matrix k(a.field(), n, free.size());
  for (std::size_t j = 0; j < free.size(); ++j) {
    k(free[j], j) = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) k(e.pivots[r], j) = F.neg(e.reduced(r, free[j]));
  }
  return k;
}

Matrix image(const Matrix& a) {
  if (a.rows() == 0 || a.cols() == 0) return Matrix(a.field(), a.rows(), 0);
  auto e = rref(a);
  return a.select_columns(e.pivots);
}

LinearSolution solve_linear(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) fail(Errc::DimensionMismatch, "solve: A and B row counts differ");
  const std::size_t n = a.cols(), k = b.cols();
  const auto& field = a.field() ? a.field() : b.field();
  Matrix aug = hstack(a, b);
  auto e = rref(aug);
  LinearSolution out;
  std::vector<bool> is_pivot(n, false);
  bool consistent = true;
  std::size_t rank_a = 0;
  for (auto c : e.pivots) {
    if (c >= n) {
      consistent = false;
    } else {
      is_pivot[c] = true;
      ++rank_a;
    }
  }
  if (consistent) {
    Matrix x(field, n, k);
    for (std::size_t r = 0; r < rank_a; ++r)
      for (std::size_t j = 0; j < k; ++j) x(e.pivots[r], j) = e.reduced(r, n + j);
    out.solution = std::move(x);
  }
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < n; ++c)
    if (!is_pivot[c]) free.push_back(c);
  const auto& F = *field;
  Matrix ns(field, n, free.size());
  for (std::size_t j = 0; j < free.size(); ++j) {
    ns(free[j], j) = 1;
    for (std::size_t r = 0; r < rank_a; ++r) ns(e.pivots[r], j) = F.neg(e.reduced(r, free[j]));
  }
  out.nullspace = std::move(ns);
  return out;
}

std::optional<Matrix> solve(const Matrix& a, const Matrix& b) { return solve_linear(a, b).solution; }

std::optional<Matrix> inverse(const Matrix& a) {
  if (!a.is_square()) fail(Errc::NotSquare, "inverse of a non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return a;
  auto e = rref(hstack(a, Matrix::identity(a.field(), n)));
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  return e.reduced.block(0, n, n, n);
}

bool is_invertible(const Matrix& a) { return a.is_square() && rank(a) == a.rows(); }

FittingSplit fitting_split(const Matrix& f) {
  if (!f.is_square()) fail(Errc::NotSquare, "fitting_split needs a square matrix");
  const std::size_t n = f.rows();
  Matrix g = f;
  for (std::size_t k = 1; k < n; k *= 2) g = g * g;
  if (n == 0) return {Matrix(f.field(), 0, 0), Matrix(f.field(), 0, 0)};
  return {kernel(g), image(g)};
}

bool is_nilpotent(const Matrix& f) {
  if (!f.is_square()) fail(Errc::NotSquare, "nilpotency of a non-square matrix");
  Matrix g = f;
  for (std::size_t k = 1; k < f.rows(); k *= 2) {
    if (g.is_zero()) return true;
    g = g * g;
  }
  return g.is_zero();
}

Poly minimal_polynomial(const Matrix& a) {
  if (!a.is_square()) fail(Errc::NotSquare, "minimal polynomial of a non-square matrix");
  const auto& field = a.field();
  const auto& F = *field;
  const std::size_t n = a.rows();
  const std::size_t w = n * n;
  // Echelon rows carry, alongside the vectorized power, the combination of
  // powers that produced them.
  std::vector<std::vector<Elem>> rows;
  std::vector<std::vector<Elem>> combos;
  std::vector<std::size_t> pivots;
  Matrix p = Matrix::identity(field, n);
  for (std::size_t k = 0; k <= n; ++k) {
    std::vector<Elem> v = p.flatten();
    std::vector<Elem> combo(k + 1, 0);
    combo[k] = 1;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      Elem c = v[pivots[r]];
      if (c == 0) continue;
      F.axpy(v.data(), rows[r].data(), F.neg(c), w);
      F.axpy(combo.data(), combos[r].data(), F.neg(c), combos[r].size());
    }
    std::size_t piv = 0;
    while (piv < w && v[piv] == 0) ++piv;
    if (piv == w) return Poly(field, std::move(combo)).monic();
    Elem inv = F.inv(v[piv]);
    F.scale(v.data(), inv, w);
    F.scale(combo.data(), inv, combo.size());
    for (auto& c : combos) c.resize(k + 1, 0);
    rows.push_back(std::move(v));
    combos.push_back(std::move(combo));
    pivots.push_back(piv);
    p = p * a;
  }
  fail(Errc::InternalAssertion, "minimal polynomial degree exceeds dimension");
}

RowEchelon::RowEchelon(FieldPtr field, std::size_t width) : field_(std::move(field)), width_(width) {}

void RowEchelon::reduce(std::vector<Elem>& v) const {
  const auto& F = *field_;
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    Elem c = v[pivots_[r]];
    if (c) F.axpy(v.data(), rows_[r].data(), F.neg(c), width_);
  }
}

bool RowEchelon::insert(std::vector<Elem> v) {
  if (v.size() != width_) fail(Errc::DimensionMismatch, "row width mismatch");
  reduce(v);
  std::size_t piv = 0;
  while (piv < width_ && v[piv] == 0) ++piv;
  if (piv == width_) return false;
  const auto& F = *field_;
  F.scale(v.data(), F.inv(v[piv]), width_);
  for (auto& row : rows_) {
    Elem c = row[piv];
    if (c) F.axpy(row.data(), v.data(), F.neg(c), width_);
  }
  rows_.push_back(std::move(v));
  pivots_.push_back(piv);
  return true;
}

bool RowEchelon::contains(std::vector<Elem> v) const {
  reduce(v);
  for (Elem e : v)
    if (e) return false;
  return true;
}

Matrix RowEchelon::nullspace() const {
  const auto& F = *field_;
  std::vector<bool> is_pivot(width_, false);
  for (auto c : pivots_) is_pivot[c] = true;
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < width_; ++c)
    if (!is_pivot[c]) free.push_back(c);
  Matrix k(field_, width_, free.size());
  for (std::size_t j = 0; j < free.size(); ++j) {
    k(free[j], j) = 1;
    for (std::size_t r = 0; r < rows_.size(); ++r) k(pivots_[r], j) = F.neg(rows_[r][free[j]]);
  }
  return k;
}

SpanCoordinates::SpanCoordinates(Matrix basis) : basis_(std::move(basis)) {
  const std::size_t d = basis_.cols();
  if (d == 0) return;
  auto e = rref(basis_.transposed());
  if (e.pivots.size() != d) fail(Errc::InternalAssertion, "span basis is not linearly independent");
  pivot_rows_ = e.pivots;
  auto inv = inverse(basis_.select_rows(pivot_rows_));
  check(inv.has_value(), "pivot block of a span basis must be invertible");
  pivot_inverse_ = std::move(*inv);
}

std::optional<std::vector<Elem>> SpanCoordinates::coordinates(std::span<const Elem> v) const {
  if (v.size() != basis_.rows()) fail(Errc::DimensionMismatch, "vector length does not match span");
  const std::size_t d = basis_.cols();
  if (d == 0) {
    for (Elem e : v)
      if (e) return std::nullopt;
    return std::vector<Elem>{};
  }
  const auto& F = *basis_.field();
  std::vector<Elem> sel(d);
  for (std::size_t i = 0; i < d; ++i) sel[i] = v[pivot_rows_[i]];
  std::vector<Elem> c = pivot_inverse_.apply(sel);
  // confirm v is really in the span
  std::vector<Elem> recon(basis_.rows(), 0);
  for (std::size_t i = 0; i < basis_.rows(); ++i) {
    Elem acc = 0;
    auto row = basis_.row(i);
    for (std::size_t k = 0; k < d; ++k)
      if (c[k] && row[k]) acc = F.add(acc, F.mul(row[k], c[k]));
    if (acc != v[i]) return std::nullopt;
  }
  return c;
}

QuotientSpace::QuotientSpace(FieldPtr field, std::size_t ambient, const Matrix& spanning_columns)
    : ambient_(ambient) {
  if (spanning_columns.rows() != ambient) fail(Errc::DimensionMismatch, "spanning set has wrong length");
  const auto& F = *field;
  std::vector<std::size_t> pivots;
  Matrix reduced(field, 0, ambient);
  if (spanning_columns.cols() > 0) {
    auto e = rref(spanning_columns.transposed());
    pivots = e.pivots;
    reduced = e.reduced.block(0, 0, pivots.size(), ambient);
  }
  std::vector<bool> is_pivot(ambient, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::size_t> complement;
  for (std::size_t j = 0; j < ambient; ++j)
    if (!is_pivot[j]) complement.push_back(j);

  projection_ = Matrix(field, complement.size(), ambient);
  section_ = Matrix(field, ambient, complement.size());
  for (std::size_t k = 0; k < complement.size(); ++k) {
    projection_(k, complement[k]) = 1;
    section_(complement[k], k) = 1;
  }
  // e_pivot = row_r - (row_r's entries on the complement), so modulo S it
  // equals minus those entries.
  for (std::size_t r = 0; r < pivots.size(); ++r)
    for (std::size_t k = 0; k < complement.size(); ++k)
      projection_(k, pivots[r]) = F.neg(reduced(r, complement[k]));
  subspace_ = reduced.transposed();
}

}  // namespace modrep
