#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "trimat/linalg/matrix.hpp"

namespace trimat {

/// Dense matrix of arbitrary-precision integers (Cartan data, congruence
/// witnesses).
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);  // NOLINT

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<mpz_class>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  mpz_class& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const mpz_class& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntMatrix transpose() const;
  IntMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const IntMatrix& m);
  bool is_diagonal() const;
  std::vector<mpz_class> column(std::size_t c) const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator-(const IntMatrix& a);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b);
  friend bool operator!=(const IntMatrix& a, const IntMatrix& b) { return !(a == b); }

  Matrix to_field() const;
  std::string to_string() const;
  std::vector<std::vector<long>> to_longs() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<mpz_class> data_;
};

/// Exact determinant (fraction-free Bareiss elimination).
mpz_class determinant(const IntMatrix& a);
bool is_unimodular(const IntMatrix& p);
/// Inverse over ℤ of a unimodular matrix; throws InvalidInput otherwise.
IntMatrix unimodular_inverse(const IntMatrix& p);
/// Converts a field matrix with integral entries; throws InvalidInput otherwise.
IntMatrix to_int_matrix(const Matrix& m);

struct SmithForm {
  IntMatrix u;
  IntMatrix d;
  IntMatrix v;
  std::vector<mpz_class> invariants() const;
};

/// U·C·V = D with U, V unimodular and D diagonal, nonnegative, d₁ | d₂ | ….
SmithForm smith_normal_form(const IntMatrix& c);

}  // namespace trimat
