#pragma once

#include <optional>
#include <vector>

#include "modrep/matrix.hpp"
#include "modrep/poly.hpp"

namespace modrep {

/// Reduced row echelon form. Pivot choice is deterministic: columns are
/// scanned left to right and the first row with a nonzero entry wins.
struct Echelon {
  Matrix reduced;                   // same shape as the input
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

Echelon rref(Matrix a);
std::size_t rank(const Matrix& a);

/// Columns form a basis of {x : a x = 0}.
Matrix kernel(const Matrix& a);
/// Columns form a basis of the column space (the pivot columns of `a`).
Matrix image(const Matrix& a);

struct LinearSolution {
  std::optional<Matrix> solution;  // some X with A X = B, if consistent
  Matrix nullspace;                // basis of {x : A x = 0} as columns
};

LinearSolution solve_linear(const Matrix& a, const Matrix& b);
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);
std::optional<Matrix> inverse(const Matrix& a);
bool is_invertible(const Matrix& a);

/// Fitting decomposition of an endomorphism: bases (as columns) of
/// ker(f^n) and im(f^n), which are complementary.
struct FittingSplit {
  Matrix kernel;
  Matrix image;
};

FittingSplit fitting_split(const Matrix& f);
bool is_nilpotent(const Matrix& f);

Poly minimal_polynomial(const Matrix& a);

/// Rows are added one at a time and kept in reduced echelon form.
class RowEchelon {
 public:
  RowEchelon(FieldPtr field, std::size_t width);

  /// Reduces `v` against the stored rows (in place).
  void reduce(std::vector<Elem>& v) const;
  /// Returns true when `v` was independent of the stored rows.
  bool insert(std::vector<Elem> v);
  bool contains(std::vector<Elem> v) const;

  std::size_t rank() const { return rows_.size(); }
  std::size_t width() const { return width_; }
  const std::vector<std::vector<Elem>>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  /// Basis (as columns) of the solutions x of  row . x = 0  for all rows.
  Matrix nullspace() const;

 private:
  FieldPtr field_;
  std::size_t width_;
  std::vector<std::vector<Elem>> rows_;
  std::vector<std::size_t> pivots_;
};

/// Coordinates with respect to a fixed basis (the columns of `basis`,
/// which must be linearly independent).
class SpanCoordinates {
 public:
  explicit SpanCoordinates(Matrix basis);

  std::optional<std::vector<Elem>> coordinates(std::span<const Elem> v) const;
  bool contains(std::span<const Elem> v) const { return coordinates(v).has_value(); }
  std::size_t dim() const { return basis_.cols(); }
  const Matrix& basis() const { return basis_; }

 private:
  Matrix basis_;
  std::vector<std::size_t> pivot_rows_;
  Matrix pivot_inverse_;
};

/// V / S for S the span of the given columns. The complement is spanned by
/// the standard basis vectors at the non-pivot positions of S's echelon
/// form, which makes the projection and its section explicit matrices.
class QuotientSpace {
 public:
  QuotientSpace(FieldPtr field, std::size_t ambient, const Matrix& spanning_columns);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return projection_.rows(); }
  std::size_t subspace_dim() const { return ambient_ - dim(); }
  const Matrix& projection() const { return projection_; }  // dim x ambient
  const Matrix& section() const { return section_; }        // ambient x dim
  /// Columns spanning the subspace that was factored out.
  const Matrix& subspace_basis() const { return subspace_; }

 private:
  std::size_t ambient_;
  Matrix projection_;
  Matrix section_;
  Matrix subspace_;
};

}  // namespace modrep
