#include "trimat/linalg/matrix.hpp"

#include <sstream>

#include "trimat/error.hpp"

namespace trimat {

Matrix::Matrix(std::size_t rows, std::size_t cols, Field field)
    : rows_(rows), cols_(cols), field_(field), data_(rows * cols, Scalar::from(field, 0)) {}

Matrix Matrix::identity(std::size_t n, Field field) {
  Matrix m(n, n, field);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::from(field, 1);
  return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Scalar>>& rows, Field field) {
  std::size_t nr = rows.size();
  std::size_t nc = nr == 0 ? 0 : rows.front().size();
  Matrix m(nr, nc, field);
  for (std::size_t r = 0; r < nr; ++r) {
    if (rows[r].size() != nc) throw Error(ErrorCode::DimensionMismatch, "ragged matrix rows");
    for (std::size_t c = 0; c < nc; ++c) m(r, c) = Scalar::from(field, 0) + rows[r][c];
  }
  return m;
}

Matrix Matrix::from_ints(std::initializer_list<std::initializer_list<long>> rows, Field field) {
  std::vector<std::vector<Scalar>> tmp;
  for (const auto& r : rows) {
    std::vector<Scalar> row;
    for (long v : r) row.push_back(Scalar::from(field, v));
    tmp.push_back(std::move(row));
  }
  return from_rows(tmp, field);
}

Matrix Matrix::column(const Vec& v, Field field) {
  Matrix m(v.size(), 1, field);
  for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vec>& cols, std::size_t rows, Field field) {
  Matrix m(rows, cols.size(), field);
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows) throw Error(ErrorCode::DimensionMismatch, "column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
  }
  return m;
}

Vec Matrix::col(std::size_t c) const {
  Vec v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Vec Matrix::row(std::size_t r) const { return Vec(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_); }

void Matrix::set_col(std::size_t c, const Vec& v) {
  if (v.size() != rows_) throw Error(ErrorCode::DimensionMismatch, "set_col length mismatch");
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_, field_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw Error(ErrorCode::DimensionMismatch, "block out of range");
  Matrix b(nr, nc, field_);
  for (std::size_t r = 0; r < nr; ++r)
    for (std::size_t c = 0; c < nc; ++c) b(r, c) = (*this)(r0 + r, c0 + c);
  return b;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& m) {
  if (r0 + m.rows_ > rows_ || c0 + m.cols_ > cols_) throw Error(ErrorCode::DimensionMismatch, "set_block out of range");
  for (std::size_t r = 0; r < m.rows_; ++r)
    for (std::size_t c = 0; c < m.cols_; ++c) (*this)(r0 + r, c0 + c) = m(r, c);
}

Matrix Matrix::select_columns(const std::vector<std::size_t>& idx) const {
  Matrix m(rows_, idx.size(), field_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < idx.size(); ++c) m(r, c) = (*this)(r, idx[c]);
  return m;
}

Matrix Matrix::select_rows(const std::vector<std::size_t>& idx) const {
  Matrix m(idx.size(), cols_, field_);
  for (std::size_t r = 0; r < idx.size(); ++r)
    for (std::size_t c = 0; c < cols_; ++c) m(r, c) = (*this)(idx[r], c);
  return m;
}

Vec Matrix::apply(const Vec& v) const {
  if (v.size() != cols_) throw Error(ErrorCode::DimensionMismatch, "apply: vector length mismatch");
  Vec out(rows_, Scalar::from(field_, 0));
  for (std::size_t c = 0; c < cols_; ++c) {
    if (v[c].is_zero()) continue;
    for (std::size_t r = 0; r < rows_; ++r) {
      const Scalar& a = (*this)(r, c);
      if (!a.is_zero()) out[r] += a * v[c];
    }
  }
  return out;
}

bool Matrix::is_zero() const {
  for (const auto& s : data_)
    if (!s.is_zero()) return false;
  return true;
}

bool Matrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) {
      const Scalar& s = (*this)(r, c);
      if (r == c ? !s.is_one() : !s.is_zero()) return false;
    }
  return true;
}

Matrix& Matrix::operator+=(const Matrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw Error(ErrorCode::DimensionMismatch, "matrix addition");
  for (std::size_t i = 0; i < data_.size(); ++i)
    if (!rhs.data_[i].is_zero()) data_[i] += rhs.data_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw Error(ErrorCode::DimensionMismatch, "matrix subtraction");
  for (std::size_t i = 0; i < data_.size(); ++i)
    if (!rhs.data_[i].is_zero()) data_[i] -= rhs.data_[i];
  return *this;
}

Matrix& Matrix::operator*=(const Scalar& s) {
  for (auto& x : data_)
    if (!x.is_zero()) x *= s;
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) {
    throw Error(ErrorCode::DimensionMismatch, "matrix product " + std::to_string(a.rows_) + "x" +
                                                  std::to_string(a.cols_) + " * " + std::to_string(b.rows_) + "x" +
                                                  std::to_string(b.cols_));
  }
  Matrix out(a.rows_, b.cols_, a.field_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Scalar& y = b(k, j);
        if (!y.is_zero()) out(i, j) += x * y;
      }
    }
  return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
  for (std::size_t i = 0; i < a.data_.size(); ++i)
    if (a.data_[i] != b.data_[i]) return false;
  return true;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t r = 0; r < rows_; ++r) {
    os << (r ? ", [" : "[");
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? ", " : "") << (*this)(r, c);
    os << "]";
  }
  os << "]";
  return os.str();
}

Matrix hstack(const std::vector<Matrix>& blocks, std::size_t rows, Field field) {
  std::size_t cols = 0;
  for (const auto& b : blocks) {
    if (b.rows() != rows) throw Error(ErrorCode::DimensionMismatch, "hstack row mismatch");
    cols += b.cols();
  }
  Matrix m(rows, cols, field);
  std::size_t c0 = 0;
  for (const auto& b : blocks) {
    m.set_block(0, c0, b);
    c0 += b.cols();
  }
  return m;
}

Matrix vstack(const std::vector<Matrix>& blocks, std::size_t cols, Field field) {
  std::size_t rows = 0;
  for (const auto& b : blocks) {
    if (b.cols() != cols) throw Error(ErrorCode::DimensionMismatch, "vstack column mismatch");
    rows += b.rows();
  }
  Matrix m(rows, cols, field);
  std::size_t r0 = 0;
  for (const auto& b : blocks) {
    m.set_block(r0, 0, b);
    r0 += b.rows();
  }
  return m;
}

Matrix direct_sum(const Matrix& a, const Matrix& b) {
  Matrix m(a.rows() + b.rows(), a.cols() + b.cols(), a.field());
  m.set_block(0, 0, a);
  m.set_block(a.rows(), a.cols(), b);
  return m;
}

Matrix kronecker(const Matrix& a, const Matrix& b) {
  Matrix m(a.rows() * b.rows(), a.cols() * b.cols(), a.field());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Scalar& x = a(i, j);
      if (x.is_zero()) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          if (!b(k, l).is_zero()) m(i * b.rows() + k, j * b.cols() + l) = x * b(k, l);
    }
  return m;
}

Vec zero_vec(std::size_t n, Field field) { return Vec(n, Scalar::from(field, 0)); }

Vec unit_vec(std::size_t n, std::size_t i, Field field) {
  Vec v = zero_vec(n, field);
  v.at(i) = Scalar::from(field, 1);
  return v;
}

bool is_zero(const Vec& v) {
  for (const auto& s : v)
    if (!s.is_zero()) return false;
  return true;
}

Vec add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "vector addition");
  Vec r(a);
  for (std::size_t i = 0; i < r.size(); ++i)
    if (!b[i].is_zero()) r[i] += b[i];
  return r;
}

Vec sub(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "vector subtraction");
  Vec r(a);
  for (std::size_t i = 0; i < r.size(); ++i)
    if (!b[i].is_zero()) r[i] -= b[i];
  return r;
}

Vec scale(const Scalar& s, const Vec& v) {
  Vec r(v);
  for (auto& x : r)
    if (!x.is_zero()) x *= s;
  return r;
}

void axpy(Vec& a, const Scalar& s, const Vec& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "axpy length mismatch");
  if (s.is_zero()) return;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!b[i].is_zero()) a[i] += s * b[i];
}

}  // namespace trimat
