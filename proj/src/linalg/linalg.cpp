#include "trimat/linalg/linalg.hpp"

#include <utility>

#include "trimat/error.hpp"

namespace trimat {

Echelon row_reduce(Matrix a) {
  Echelon e;
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a(p, c).is_zero()) ++p;
    if (p == rows) continue;
    if (p != r)
      for (std::size_t j = c; j < cols; ++j) std::swap(a(p, j), a(r, j));
    if (!a(r, c).is_one()) {
      Scalar inv = a(r, c).inverse();
      for (std::size_t j = c; j < cols; ++j)
        if (!a(r, j).is_zero()) a(r, j) *= inv;
    }
    std::vector<std::size_t> nz;
    for (std::size_t j = c + 1; j < cols; ++j)
      if (!a(r, j).is_zero()) nz.push_back(j);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a(i, c).is_zero()) continue;
      Scalar f = a(i, c);
      a(i, c) = Scalar::from(a.field(), 0);
      for (std::size_t j : nz) a(i, j) -= f * a(r, j);
    }
    e.pivots.push_back(c);
    ++r;
  }
  e.rref = std::move(a);
  return e;
}

std::size_t rank(const Matrix& a) { return row_reduce(a).rank(); }

Matrix kernel(const Matrix& a) {
  Echelon e = row_reduce(a);
  const std::size_t n = a.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < n; ++c)
    if (!is_pivot[c]) free.push_back(c);
  Matrix k(n, free.size(), a.field());
  for (std::size_t f = 0; f < free.size(); ++f) {
    k(free[f], f) = Scalar::from(a.field(), 1);
    for (std::size_t i = 0; i < e.pivots.size(); ++i) k(e.pivots[i], f) = -e.rref(i, free[f]);
  }
  return k;
}

SolveResult solve_linear(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw Error(ErrorCode::DimensionMismatch, "solve_linear: A and B row counts differ");
  const std::size_t n = a.cols();
  Matrix aug = hstack({a, b}, a.rows(), a.field());
  Echelon e = row_reduce(aug);
  SolveResult res;
  res.kernel = kernel(a);
  res.feasible = true;
  for (auto p : e.pivots)
    if (p >= n) res.feasible = false;
  if (!res.feasible) return res;
  res.particular = Matrix(n, b.cols(), a.field());
  for (std::size_t i = 0; i < e.pivots.size(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) res.particular(e.pivots[i], j) = e.rref(i, n + j);
  return res;
}

Scalar determinant(const Matrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::DimensionMismatch, "determinant of non-square matrix");
  Matrix a = m;
  const std::size_t n = a.rows();
  Scalar det = Scalar::from(a.field(), 1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c).is_zero()) ++p;
    if (p == n) return Scalar::from(a.field(), 0);
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(c, j));
      det = -det;
    }
    det *= a(c, c);
    Scalar inv = a(c, c).inverse();
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a(i, c).is_zero()) continue;
      Scalar f = a(i, c) * inv;
      for (std::size_t j = c; j < n; ++j)
        if (!a(c, j).is_zero()) a(i, j) -= f * a(c, j);
    }
  }
  return det;
}

Matrix inverse(const Matrix& a) {
  if (a.rows() != a.cols()) throw Error(ErrorCode::DimensionMismatch, "inverse of non-square matrix");
  SolveResult s = solve_linear(a, Matrix::identity(a.rows(), a.field()));
  if (!s.feasible || s.kernel.cols() != 0) throw Error(ErrorCode::InvalidInput, "matrix is singular");
  return s.particular;
}

std::vector<std::size_t> pivot_columns(const Matrix& a) { return row_reduce(a).pivots; }

Matrix column_basis(const Matrix& a) { return a.select_columns(pivot_columns(a)); }

SubspaceBasis::SubspaceBasis(Matrix basis) : basis_(std::move(basis)) {
  const std::size_t d = basis_.cols();
  if (d == 0) {
    left_inverse_ = Matrix(0, basis_.rows(), basis_.field());
    return;
  }
  std::vector<std::size_t> rows = pivot_columns(basis_.transpose());
  if (rows.size() != d) throw Error(ErrorCode::InvariantViolation, "SubspaceBasis: columns are dependent");
  Matrix square = basis_.select_rows(rows);
  Matrix inv = inverse(square);
  left_inverse_ = Matrix(d, basis_.rows(), basis_.field());
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) left_inverse_(i, rows[j]) = inv(i, j);
}

Vec SubspaceBasis::coords(const Vec& v) const {
  Vec c = left_inverse_.apply(v);
  if (basis_.apply(c) != v) throw Error(ErrorCode::InvariantViolation, "vector is outside the subspace");
  return c;
}

Matrix SubspaceBasis::coords(const Matrix& columns) const {
  Matrix c = left_inverse_ * columns;
  if (basis_ * c != columns) throw Error(ErrorCode::InvariantViolation, "columns are outside the subspace");
  return c;
}

bool SubspaceBasis::contains(const Vec& v) const { return basis_.apply(left_inverse_.apply(v)) == v; }

Quotient quotient_by(const Matrix& relations, std::size_t ambient, Field field) {
  Quotient q;
  if (relations.cols() == 0) {
    q.projection = Matrix::identity(ambient, field);
    q.section = Matrix::identity(ambient, field);
    return q;
  }
  if (relations.rows() != ambient) throw Error(ErrorCode::DimensionMismatch, "quotient_by: ambient mismatch");
  // Rows of the echelon form of relationsᵀ span the relation space; a vector
  // is reduced by clearing its pivot coordinates.
  Echelon e = row_reduce(relations.transpose());
  std::vector<bool> is_pivot(ambient, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<std::size_t> keep;
  for (std::size_t c = 0; c < ambient; ++c)
    if (!is_pivot[c]) keep.push_back(c);
  // reduce(v) = v - Σ v[p_i] w_i, then read off the kept coordinates.
  Matrix reduce = Matrix::identity(ambient, field);
  for (std::size_t i = 0; i < e.pivots.size(); ++i) {
    std::size_t p = e.pivots[i];
    for (std::size_t c = 0; c < ambient; ++c) reduce(c, p) -= e.rref(i, c);
  }
  q.projection = reduce.select_rows(keep);
  q.section = Matrix(ambient, keep.size(), field);
  for (std::size_t i = 0; i < keep.size(); ++i) q.section(keep[i], i) = Scalar::from(field, 1);
  return q;
}

Matrix span_union(const Matrix& a, const Matrix& b) {
  if (a.cols() == 0) return column_basis(b);
  if (b.cols() == 0) return column_basis(a);
  return column_basis(hstack({a, b}, a.rows(), a.field()));
}

Matrix span_intersection(const Matrix& a, const Matrix& b) {
  if (a.cols() == 0 || b.cols() == 0) return Matrix(a.rows(), 0, a.field());
  Matrix ab = hstack({a, b * Scalar::from(a.field(), -1)}, a.rows(), a.field());
  Matrix k = kernel(ab);
  Matrix coeffs = k.block(0, 0, a.cols(), k.cols());
  return column_basis(a * coeffs);
}

Poly poly_trim(Poly p) {
  while (p.size() > 1 && p.back().is_zero()) p.pop_back();
  return p;
}

Scalar poly_eval(const Poly& p, const Scalar& x) {
  Scalar acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly charpoly(const Matrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::DimensionMismatch, "charpoly of non-square matrix");
  const std::size_t n = m.rows();
  const Field f = m.field();
  Matrix h = m;
  // Similarity reduction to upper Hessenberg form.
  for (std::size_t j = 0; j + 2 < n; ++j) {
    std::size_t p = j + 1;
    while (p < n && h(p, j).is_zero()) ++p;
    if (p == n) continue;
    if (p != j + 1) {
      for (std::size_t c = 0; c < n; ++c) std::swap(h(p, c), h(j + 1, c));
      for (std::size_t r = 0; r < n; ++r) std::swap(h(r, p), h(r, j + 1));
    }
    Scalar inv = h(j + 1, j).inverse();
    for (std::size_t i = j + 2; i < n; ++i) {
      if (h(i, j).is_zero()) continue;
      Scalar u = h(i, j) * inv;
      for (std::size_t c = 0; c < n; ++c)
        if (!h(j + 1, c).is_zero()) h(i, c) -= u * h(j + 1, c);
      for (std::size_t r = 0; r < n; ++r)
        if (!h(r, i).is_zero()) h(r, j + 1) += u * h(r, i);
    }
  }
  // p_k = charpoly of the leading k×k block.
  std::vector<Poly> p(n + 1);
  p[0] = {Scalar::from(f, 1)};
  for (std::size_t k = 1; k <= n; ++k) {
    std::size_t mm = k - 1;
    Poly next(k + 1, Scalar::from(f, 0));
    for (std::size_t d = 0; d < p[k - 1].size(); ++d) {
      next[d + 1] += p[k - 1][d];
      next[d] -= h(mm, mm) * p[k - 1][d];
    }
    Scalar prod = Scalar::from(f, 1);
    for (std::size_t i = mm; i-- > 0;) {
      prod *= h(i + 1, i);
      if (prod.is_zero()) break;
      Scalar coef = h(i, mm) * prod;
      if (coef.is_zero()) continue;
      for (std::size_t d = 0; d < p[i].size(); ++d) next[d] -= coef * p[i][d];
    }
    p[k] = std::move(next);
  }
  return p[n];
}

}  // namespace trimat
