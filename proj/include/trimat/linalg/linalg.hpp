#pragma once

#include <cstddef>
#include <vector>

#include "trimat/linalg/matrix.hpp"

namespace trimat {

/// Reduced row echelon form. Pivots are chosen as the first nonzero entry in
/// column order, so results are deterministic.
struct Echelon {
  Matrix rref;
  std::vector<std::size_t> pivots;  // pivot column per nonzero row
  std::size_t rank() const { return pivots.size(); }
};

Echelon row_reduce(Matrix a);
std::size_t rank(const Matrix& a);

/// Basis of the null space as the columns of the result, one per free column
/// in increasing order. Each basis vector has a 1 in its free column.
Matrix kernel(const Matrix& a);

/// Solutions of A·X = B. `kernel` spans the homogeneous solutions (one column
/// each); `particular` is a solution when `feasible`.
struct SolveResult {
  bool feasible = false;
  Matrix particular;
  Matrix kernel;
};

SolveResult solve_linear(const Matrix& a, const Matrix& b);

Scalar determinant(const Matrix& a);
/// Throws InvalidInput for singular input.
Matrix inverse(const Matrix& a);

/// Columns of `a` at its pivot positions; a basis of the column space.
Matrix column_basis(const Matrix& a);
std::vector<std::size_t> pivot_columns(const Matrix& a);

/// A fixed basis of a subspace together with a left inverse, for turning
/// vectors of the subspace into coordinates.
class SubspaceBasis {
 public:
  SubspaceBasis() = default;
  /// `basis` must have linearly independent columns.
  explicit SubspaceBasis(Matrix basis);

  const Matrix& basis() const { return basis_; }
  std::size_t dim() const { return basis_.cols(); }
  std::size_t ambient() const { return basis_.rows(); }

  /// Coordinates of v. Throws InvariantViolation when v is outside the span.
  Vec coords(const Vec& v) const;
  Matrix coords(const Matrix& columns) const;
  bool contains(const Vec& v) const;

 private:
  Matrix basis_;
  Matrix left_inverse_;
};

/// Quotient of k^n by the column span of `relations`. `projection` is the
/// canonical surjection k^n → k^q and `section` a right inverse of it that
/// picks the non-pivot coordinates.
struct Quotient {
  Matrix projection;
  Matrix section;
  std::size_t dim() const { return projection.rows(); }
};

Quotient quotient_by(const Matrix& relations, std::size_t ambient, Field field);

/// Basis for the sum of column spans, dropping dependent columns.
Matrix span_union(const Matrix& a, const Matrix& b);
/// Basis of the intersection of two column spans.
Matrix span_intersection(const Matrix& a, const Matrix& b);

/// Polynomial coefficients in increasing degree order.
using Poly = std::vector<Scalar>;

/// Characteristic polynomial det(tI - A), computed via Hessenberg reduction;
/// valid over any field.
Poly charpoly(const Matrix& a);
Poly poly_trim(Poly p);
Scalar poly_eval(const Poly& p, const Scalar& x);

}  // namespace trimat
