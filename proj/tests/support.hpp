#pragma once

// Random instance generators shared by the unit, property and acceptance
// tests. Everything is driven by an explicit std::mt19937 so runs are
// reproducible.

#include <random>
#include <vector>

#include "trimat/algebra/bimodule.hpp"
#include "trimat/algebra/fixtures.hpp"
#include "trimat/linalg/linalg.hpp"

namespace trimat::testing {

inline long rand_int(std::mt19937& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

inline Matrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, Field f, long lo = -2,
                            long hi = 2) {
  Matrix m(rows, cols, f);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = Scalar::from(f, rand_int(rng, lo, hi));
  return m;
}

inline Matrix random_invertible(std::mt19937& rng, std::size_t n, Field f) {
  while (true) {
    Matrix m = random_matrix(rng, n, n, f);
    if (rank(m) == n) return m;
  }
}

/// Same algebra in the basis given by the columns of p.
inline Algebra change_basis(const Algebra& a, const Matrix& p) {
  const std::size_t n = a.dim();
  const Field f = a.field();
  Matrix pinv = inverse(p);
  std::vector<std::vector<Vec>> products(n, std::vector<Vec>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) products[i][j] = pinv.apply(a.mul(p.col(i), p.col(j)));
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("b" + std::to_string(i));
  std::vector<Vec> idem;
  for (const auto& e : a.idempotents()) idem.push_back(pinv.apply(e));
  return Algebra::from_structure_constants(f, labels, products, pinv.apply(a.unit()), idem);
}

/// A small basic algebra drawn from a fixed menu, in a random basis.
inline Algebra random_small_algebra(std::mt19937& rng, Field f = Field::rationals(), std::size_t max_dim = 3) {
  std::vector<Algebra> menu;
  menu.push_back(Algebra::ground(f));
  menu.push_back(fixtures::truncated_polynomial(2, "x", f));
  if (max_dim >= 3) {
    menu.push_back(fixtures::truncated_polynomial(3, "x", f));
    menu.push_back(fixtures::f4(f));
  }
  menu.push_back(product_algebra(Algebra::ground(f), Algebra::ground(f)));
  if (max_dim >= 3) {
    menu.push_back(product_algebra(fixtures::truncated_polynomial(2, "x", f), Algebra::ground(f)));
  }
  Algebra a = menu[rng() % menu.size()];
  if (rng() % 2 == 0) return a;
  return change_basis(a, random_invertible(rng, a.dim(), f));
}

/// Random right module: quotient of a free module A^k by a random submodule.
inline RightModule random_module(std::mt19937& rng, const Algebra& a, std::size_t max_dim) {
  while (true) {
    std::vector<RightModule> parts;
    std::size_t copies = 1 + rng() % 2;
    for (std::size_t c = 0; c < copies; ++c) parts.push_back(projective_module(a, rng() % a.num_idempotents()));
    RightModule free = direct_sum(parts, a);
    std::size_t gens = rng() % 3;
    Matrix v = random_matrix(rng, free.dim(), gens, a.field());
    Matrix sub = generated_submodule(free, v);
    QuotientModule q = quotient_module(free, sub);
    if (q.module.dim() <= max_dim) return q.module;
  }
}

/// Random R-S-bimodule: a quotient of (R ⊗_k S) cut down by an idempotent
/// pair and a random sub-bimodule, of dimension at most max_dim.
inline Bimodule random_bimodule(std::mt19937& rng, const Algebra& r, const Algebra& s, std::size_t max_dim) {
  const Field f = r.field();
  for (int attempt = 0; attempt < 200; ++attempt) {
    if (rng() % 6 == 0) return Bimodule::zero(r, s);
    std::size_t i = rng() % r.num_idempotents();
    std::size_t j = rng() % s.num_idempotents();
    // R e_i ⊗ f_j S with left action of R and right action of S.
    Matrix re = column_basis(r.right_mult(r.idempotents()[i]));
    Matrix fs = column_basis(s.left_mult(s.idempotents()[j]));
    SubspaceBasis rb(re), sb(fs);
    std::vector<Matrix> left, right;
    for (std::size_t k = 0; k < r.dim(); ++k)
      left.push_back(kronecker(rb.coords(r.left_mult(k) * re), Matrix::identity(fs.cols(), f)));
    for (std::size_t k = 0; k < s.dim(); ++k)
      right.push_back(kronecker(Matrix::identity(re.cols(), f), sb.coords(s.right_mult(k) * fs)));
    const std::size_t n = re.cols() * fs.cols();
    // Sub-bimodule generated by random vectors.
    Matrix span = random_matrix(rng, n, rng() % 3, f);
    span = span.cols() == 0 ? span : column_basis(span);
    while (true) {
      std::vector<Matrix> parts = {span};
      for (const auto& l : left) parts.push_back(l * span);
      for (const auto& rr : right) parts.push_back(rr * span);
      Matrix next = column_basis(hstack(parts, n, f));
      if (next.cols() == span.cols()) break;
      span = next;
    }
    Quotient q = quotient_by(span, n, f);
    if (q.dim() > max_dim) continue;
    std::vector<Matrix> ql, qr;
    for (const auto& l : left) ql.push_back(q.projection * l * q.section);
    for (const auto& rr : right) qr.push_back(q.projection * rr * q.section);
    return Bimodule(r, s, ql, qr);
  }
  return Bimodule::zero(r, s);
}

}  // namespace trimat::testing
