#include "trimat/linalg/int_matrix.hpp"

#include <sstream>
#include <utility>

#include "trimat/error.hpp"
#include "trimat/linalg/linalg.hpp"

namespace trimat {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  for (const auto& r : rows) {
    if (r.size() != cols_) throw Error(ErrorCode::DimensionMismatch, "ragged integer matrix");
    for (long v : r) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<mpz_class>>& rows) {
  std::size_t nr = rows.size();
  std::size_t nc = nr == 0 ? 0 : rows.front().size();
  IntMatrix m(nr, nc);
  for (std::size_t r = 0; r < nr; ++r) {
    if (rows[r].size() != nc) throw Error(ErrorCode::DimensionMismatch, "ragged integer matrix");
    for (std::size_t c = 0; c < nc; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

IntMatrix IntMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw Error(ErrorCode::DimensionMismatch, "integer block out of range");
  IntMatrix b(nr, nc);
  for (std::size_t r = 0; r < nr; ++r)
    for (std::size_t c = 0; c < nc; ++c) b(r, c) = (*this)(r0 + r, c0 + c);
  return b;
}

void IntMatrix::set_block(std::size_t r0, std::size_t c0, const IntMatrix& m) {
  if (r0 + m.rows_ > rows_ || c0 + m.cols_ > cols_) throw Error(ErrorCode::DimensionMismatch, "set_block out of range");
  for (std::size_t r = 0; r < m.rows_; ++r)
    for (std::size_t c = 0; c < m.cols_; ++c) (*this)(r0 + r, c0 + c) = m(r, c);
}

bool IntMatrix::is_diagonal() const {
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (r != c && (*this)(r, c) != 0) return false;
  return true;
}

std::vector<mpz_class> IntMatrix::column(std::size_t c) const {
  std::vector<mpz_class> v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorCode::DimensionMismatch, "integer matrix product");
  IntMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error(ErrorCode::DimensionMismatch, "integer matrix sum");
  IntMatrix out(a);
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += b.data_[i];
  return out;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error(ErrorCode::DimensionMismatch, "integer matrix difference");
  IntMatrix out(a);
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] -= b.data_[i];
  return out;
}

IntMatrix operator-(const IntMatrix& a) {
  IntMatrix out(a);
  for (auto& x : out.data_) x = -x;
  return out;
}

bool operator==(const IntMatrix& a, const IntMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

Matrix IntMatrix::to_field() const {
  Matrix m(rows_, cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) m(r, c) = Scalar(mpq_class((*this)(r, c)));
  return m;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t r = 0; r < rows_; ++r) {
    os << (r ? ", [" : "[");
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? ", " : "") << (*this)(r, c).get_str();
    os << "]";
  }
  os << "]";
  return os.str();
}

std::vector<std::vector<long>> IntMatrix::to_longs() const {
  std::vector<std::vector<long>> out(rows_, std::vector<long>(cols_));
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) {
      if (!(*this)(r, c).fits_slong_p()) throw Error(ErrorCode::InvalidInput, "integer entry too large");
      out[r][c] = (*this)(r, c).get_si();
    }
  return out;
}

mpz_class determinant(const IntMatrix& m) {
  if (!m.is_square()) throw Error(ErrorCode::DimensionMismatch, "determinant of non-square integer matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  int sign = 1;
  mpz_class prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(k, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_class num = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

bool is_unimodular(const IntMatrix& p) {
  if (!p.is_square()) return false;
  mpz_class d = determinant(p);
  return d == 1 || d == -1;
}

IntMatrix to_int_matrix(const Matrix& m) {
  IntMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const Scalar& s = m(r, c);
      if (!s.field().is_rational() || !s.is_integer()) {
        throw Error(ErrorCode::InvalidInput, "entry " + s.to_string() + " is not an integer");
      }
      out(r, c) = s.to_mpq().get_num();
    }
  return out;
}

IntMatrix unimodular_inverse(const IntMatrix& p) {
  if (!is_unimodular(p)) throw Error(ErrorCode::InvalidInput, "matrix is not unimodular");
  return to_int_matrix(inverse(p.to_field()));
}

std::vector<mpz_class> SmithForm::invariants() const {
  std::vector<mpz_class> out;
  for (std::size_t i = 0; i < d.rows() && i < d.cols(); ++i) out.push_back(d(i, i));
  return out;
}

SmithForm smith_normal_form(const IntMatrix& c) {
  const std::size_t m = c.rows();
  const std::size_t n = c.cols();
  IntMatrix d = c;
  IntMatrix u = IntMatrix::identity(m);
  IntMatrix v = IntMatrix::identity(n);

  auto swap_rows = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < n; ++k) std::swap(d(i, k), d(j, k));
    for (std::size_t k = 0; k < m; ++k) std::swap(u(i, k), u(j, k));
  };
  auto swap_cols = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < m; ++k) std::swap(d(k, i), d(k, j));
    for (std::size_t k = 0; k < n; ++k) std::swap(v(k, i), v(k, j));
  };
  // row_i += q * row_j
  auto add_row = [&](std::size_t i, std::size_t j, const mpz_class& q) {
    for (std::size_t k = 0; k < n; ++k) d(i, k) += q * d(j, k);
    for (std::size_t k = 0; k < m; ++k) u(i, k) += q * u(j, k);
  };
  auto add_col = [&](std::size_t i, std::size_t j, const mpz_class& q) {
    for (std::size_t k = 0; k < m; ++k) d(k, i) += q * d(k, j);
    for (std::size_t k = 0; k < n; ++k) v(k, i) += q * v(k, j);
  };

  const std::size_t steps = m < n ? m : n;
  for (std::size_t t = 0; t < steps; ++t) {
    while (true) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      bool found = false;
      std::size_t pr = t, pc = t;
      mpz_class best;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j) {
          if (d(i, j) == 0) continue;
          mpz_class a = abs(d(i, j));
          if (!found || a < best) {
            found = true;
            best = a;
            pr = i;
            pc = j;
          }
        }
      if (!found) break;
      swap_rows(t, pr);
      swap_cols(t, pc);
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (d(i, t) == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), d(i, t).get_mpz_t(), d(t, t).get_mpz_t());
        add_row(i, t, -q);
        if (d(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (d(t, j) == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), d(t, j).get_mpz_t(), d(t, t).get_mpz_t());
        add_col(j, t, -q);
        if (d(t, j) != 0) clean = false;
      }
      if (!clean) continue;
      bool divides = true;
      for (std::size_t i = t + 1; i < m && divides; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (!mpz_divisible_p(d(i, j).get_mpz_t(), d(t, t).get_mpz_t())) {
            add_row(t, i, 1);
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (d(t, t) < 0) {
      for (std::size_t k = 0; k < n; ++k) d(t, k) = -d(t, k);
      for (std::size_t k = 0; k < m; ++k) u(t, k) = -u(t, k);
    }
  }
  return {std::move(u), std::move(d), std::move(v)};
}

}  // namespace trimat
