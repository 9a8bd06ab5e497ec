#include "modrep/matrix.hpp"

#include <sstream>

#include "modrep/error.hpp"

namespace modrep {

Matrix::Matrix(FieldPtr field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

Matrix::Matrix(FieldPtr field, std::size_t rows, std::size_t cols, std::vector<Elem> entries)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows_ * cols_) fail(Errc::DimensionMismatch, "entry count does not match shape");
  for (Elem e : data_)
    if (!field_->contains(e)) fail(Errc::FieldMismatch, "matrix entry outside the field");
}

Matrix Matrix::identity(FieldPtr field, std::size_t n) { return scalar(std::move(field), n, 1); }

Matrix Matrix::scalar(FieldPtr field, std::size_t n, Elem c) {
  Matrix m(std::move(field), n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = c;
  return m;
}

Matrix Matrix::from_rows(FieldPtr field, const std::vector<std::vector<Elem>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r ? rows[0].size() : 0;
  std::vector<Elem> data;
  data.reserve(r * c);
  for (const auto& row : rows) {
    if (row.size() != c) fail(Errc::DimensionMismatch, "ragged matrix rows");
    data.insert(data.end(), row.begin(), row.end());
  }
  return Matrix(std::move(field), r, c, std::move(data));
}

Matrix Matrix::from_columns(FieldPtr field, std::size_t rows, const std::vector<std::vector<Elem>>& cols) {
  Matrix m(std::move(field), rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows) fail(Errc::DimensionMismatch, "column length does not match");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

std::vector<Elem> Matrix::column(std::size_t c) const {
  std::vector<Elem> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, c);
  return out;
}

bool Matrix::is_zero() const {
  for (Elem e : data_)
    if (e) return false;
  return true;
}

bool Matrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if ((*this)(i, j) != (i == j ? 1u : 0u)) return false;
  return true;
}

Matrix Matrix::transposed() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix Matrix::scaled(Elem c) const {
  Matrix m = *this;
  field_->scale(m.data_.data(), c, m.data_.size());
  return m;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) fail(Errc::DimensionMismatch, "block out of range");
  Matrix b(field_, nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
  return b;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& m) {
  if (r0 + m.rows_ > rows_ || c0 + m.cols_ > cols_) fail(Errc::DimensionMismatch, "block out of range");
  for (std::size_t i = 0; i < m.rows_; ++i)
    for (std::size_t j = 0; j < m.cols_; ++j) (*this)(r0 + i, c0 + j) = m(i, j);
}

Matrix Matrix::select_columns(std::span<const std::size_t> idx) const {
  Matrix out(field_, rows_, idx.size());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < idx.size(); ++k) out(i, k) = (*this)(i, idx[k]);
  return out;
}

Matrix Matrix::select_rows(std::span<const std::size_t> idx) const {
  Matrix out(field_, idx.size(), cols_);
  for (std::size_t k = 0; k < idx.size(); ++k)
    for (std::size_t j = 0; j < cols_; ++j) out(k, j) = (*this)(idx[k], j);
  return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) fail(Errc::DimensionMismatch, "matrix product shape mismatch");
  const auto& F = a.field_ ? a.field_ : b.field_;
  Matrix c(F, a.rows_, b.cols_);
  if (b.cols_ == 0) return c;
  for (std::size_t i = 0; i < a.rows_; ++i) {
    Elem* out = c.data_.data() + i * c.cols_;
    for (std::size_t k = 0; k < a.cols_; ++k) {
      Elem x = a.data_[i * a.cols_ + k];
      if (x) F->axpy(out, b.data_.data() + k * b.cols_, x, b.cols_);
    }
  }
  return c;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  Matrix c = a;
  c += b;
  return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) fail(Errc::DimensionMismatch, "matrix difference shape mismatch");
  Matrix c = a;
  if (c.data_.empty()) return c;
  const auto& F = *a.field_;
  for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] = F.sub(c.data_[i], b.data_[i]);
  return c;
}

Matrix& Matrix::operator+=(const Matrix& b) {
  if (rows_ != b.rows_ || cols_ != b.cols_) fail(Errc::DimensionMismatch, "matrix sum shape mismatch");
  if (!data_.empty()) field_->axpy(data_.data(), b.data_.data(), 1, data_.size());
  return *this;
}

void Matrix::add_scaled(const Matrix& b, Elem c) {
  if (rows_ != b.rows_ || cols_ != b.cols_) fail(Errc::DimensionMismatch, "matrix sum shape mismatch");
  if (c && !data_.empty()) field_->axpy(data_.data(), b.data_.data(), c, data_.size());
}

std::vector<Elem> Matrix::apply(std::span<const Elem> v) const {
  if (v.size() != cols_) fail(Errc::DimensionMismatch, "vector length does not match");
  std::vector<Elem> out(rows_, 0);
  const auto& F = *field_;
  for (std::size_t i = 0; i < rows_; ++i) {
    Elem acc = 0;
    for (std::size_t j = 0; j < cols_; ++j) acc = F.add(acc, F.mul(data_[i * cols_ + j], v[j]));
    out[i] = acc;
  }
  return out;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < rows_; ++i) {
    os << '[';
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? "," : "") << field_->format((*this)(i, j));
    os << ']';
  }
  return os.str();
}

Matrix hstack(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) fail(Errc::DimensionMismatch, "hstack row mismatch");
  Matrix out(a.field() ? a.field() : b.field(), a.rows(), a.cols() + b.cols());
  out.set_block(0, 0, a);
  out.set_block(0, a.cols(), b);
  return out;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols()) fail(Errc::DimensionMismatch, "vstack column mismatch");
  Matrix out(a.field() ? a.field() : b.field(), a.rows() + b.rows(), a.cols());
  out.set_block(0, 0, a);
  out.set_block(a.rows(), 0, b);
  return out;
}

Matrix hstack(const std::vector<Matrix>& parts, FieldPtr field, std::size_t rows) {
  std::size_t cols = 0;
  for (const auto& p : parts) {
    if (p.rows() != rows) fail(Errc::DimensionMismatch, "hstack row mismatch");
    cols += p.cols();
  }
  Matrix out(std::move(field), rows, cols);
  std::size_t c = 0;
  for (const auto& p : parts) {
    out.set_block(0, c, p);
    c += p.cols();
  }
  return out;
}

Matrix direct_sum(const Matrix& a, const Matrix& b) {
  Matrix out(a.field() ? a.field() : b.field(), a.rows() + b.rows(), a.cols() + b.cols());
  out.set_block(0, 0, a);
  out.set_block(a.rows(), a.cols(), b);
  return out;
}

Matrix power(const Matrix& a, std::uint64_t e) {
  if (!a.is_square()) fail(Errc::NotSquare, "power of a non-square matrix");
  Matrix result = Matrix::identity(a.field(), a.rows());
  Matrix base = a;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

Elem trace(const Matrix& a) {
  if (!a.is_square()) fail(Errc::NotSquare, "trace of a non-square matrix");
  Elem t = 0;
  for (std::size_t i = 0; i < a.rows(); ++i) t = a.field()->add(t, a(i, i));
  return t;
}

Matrix evaluate(const Poly& f, const Matrix& a) {
  if (!a.is_square()) fail(Errc::NotSquare, "polynomial of a non-square matrix");
  const auto& F = a.field();
  Matrix acc(F, a.rows(), a.cols());
  for (int k = f.degree(); k >= 0; --k) {
    acc = acc * a;
    Elem c = f[static_cast<std::size_t>(k)];
    for (std::size_t i = 0; i < a.rows(); ++i) acc(i, i) = F->add(acc(i, i), c);
  }
  return acc;
}

}  // namespace modrep
