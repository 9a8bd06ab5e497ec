#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "modrep/field.hpp"
#include "modrep/poly.hpp"

namespace modrep {

/// Dense row-major matrix over a finite field. Zero-sized shapes (0 x n,
/// n x 0) are legal and behave as empty maps.
class Matrix {
 public:
  Matrix() = default;
  Matrix(FieldPtr field, std::size_t rows, std::size_t cols);
  Matrix(FieldPtr field, std::size_t rows, std::size_t cols, std::vector<Elem> entries);

  static Matrix identity(FieldPtr field, std::size_t n);
  static Matrix scalar(FieldPtr field, std::size_t n, Elem c);
  static Matrix from_rows(FieldPtr field, const std::vector<std::vector<Elem>>& rows);
  /// One column per input vector (each of length `rows`).
  static Matrix from_columns(FieldPtr field, std::size_t rows, const std::vector<std::vector<Elem>>& cols);

  const FieldPtr& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Elem operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Elem& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::span<const Elem> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::span<Elem> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::vector<Elem> column(std::size_t c) const;
  const std::vector<Elem>& data() const { return data_; }

  bool is_zero() const;
  bool is_identity() const;

  Matrix transposed() const;
  Matrix scaled(Elem c) const;
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const Matrix& m);
  Matrix select_columns(std::span<const std::size_t> idx) const;
  Matrix select_rows(std::span<const std::size_t> idx) const;
  /// Column-stacking vectorization (rows*cols x 1 layout as a flat vector).
  std::vector<Elem> flatten() const { return data_; }

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  Matrix& operator+=(const Matrix& b);
  /// this += c * b
  void add_scaled(const Matrix& b, Elem c);
  std::vector<Elem> apply(std::span<const Elem> v) const;

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  std::string to_string() const;

 private:
  FieldPtr field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Elem> data_;
};

Matrix hstack(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);
Matrix hstack(const std::vector<Matrix>& parts, FieldPtr field, std::size_t rows);
Matrix direct_sum(const Matrix& a, const Matrix& b);
Matrix power(const Matrix& a, std::uint64_t e);
Elem trace(const Matrix& a);
Matrix evaluate(const Poly& f, const Matrix& a);

}  // namespace modrep
