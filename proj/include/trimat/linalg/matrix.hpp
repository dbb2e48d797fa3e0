#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "trimat/linalg/scalar.hpp"

namespace trimat {

using Vec = std::vector<Scalar>;

/// Dense row-major matrix over a Field. Matrices act on column vectors.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, Field field = Field::rationals());

  static Matrix identity(std::size_t n, Field field = Field::rationals());
  static Matrix from_rows(const std::vector<std::vector<Scalar>>& rows, Field field = Field::rationals());
  static Matrix from_ints(std::initializer_list<std::initializer_list<long>> rows,
                          Field field = Field::rationals());
  static Matrix column(const Vec& v, Field field);
  static Matrix from_columns(const std::vector<Vec>& cols, std::size_t rows, Field field);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Field field() const { return field_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vec col(std::size_t c) const;
  Vec row(std::size_t r) const;
  void set_col(std::size_t c, const Vec& v);

  Matrix transpose() const;
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const Matrix& m);
  Matrix select_columns(const std::vector<std::size_t>& idx) const;
  Matrix select_rows(const std::vector<std::size_t>& idx) const;

  Vec apply(const Vec& v) const;
  bool is_zero() const;
  bool is_identity() const;

  Matrix& operator+=(const Matrix& rhs);
  Matrix& operator-=(const Matrix& rhs);
  Matrix& operator*=(const Scalar& s);

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const Scalar& s) { return a *= s; }
  friend Matrix operator*(const Scalar& s, Matrix a) { return a *= s; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b);
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Field field_{};
  std::vector<Scalar> data_;
};

Matrix hstack(const std::vector<Matrix>& blocks, std::size_t rows, Field field);
Matrix vstack(const std::vector<Matrix>& blocks, std::size_t cols, Field field);
Matrix direct_sum(const Matrix& a, const Matrix& b);
/// Kronecker product a ⊗ b with index (i, j) ↦ i * b.dim + j.
Matrix kronecker(const Matrix& a, const Matrix& b);

Vec zero_vec(std::size_t n, Field field);
Vec unit_vec(std::size_t n, std::size_t i, Field field);
bool is_zero(const Vec& v);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Scalar& s, const Vec& v);
/// Accumulates a += s * b.
void axpy(Vec& a, const Scalar& s, const Vec& b);

}  // namespace trimat
