#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <vector>

#include "trimat/algebra/module.hpp"
#include "trimat/linalg/linalg.hpp"

namespace trimat {

/// P = e_{v_1}A ⊕ … ⊕ e_{v_r}A. Summand k occupies a block of coordinates
/// in the basis of e_{v_k}A used by projective_module.
class ProjModule {
 public:
  ProjModule() = default;
  ProjModule(const Algebra& a, std::vector<std::size_t> vertices);

  const Algebra& algebra() const { return algebra_; }
  const std::vector<std::size_t>& vertices() const { return vertices_; }
  std::size_t summands() const { return vertices_.size(); }
  std::size_t dim() const { return module_.dim(); }
  const RightModule& module() const { return module_; }
  std::size_t offset(std::size_t k) const { return offsets_[k]; }
  /// Multiplicity of e_v A.
  std::size_t multiplicity(std::size_t v) const;

  /// Vector of P with component a ∈ e_{v_k}A in summand k.
  Vec embed(std::size_t k, const Vec& a) const;
  /// Component of p in summand k, as an element of A.
  Vec component(const Vec& p, std::size_t k) const;
  /// e_{v_k} in summand k.
  Vec generator(std::size_t k) const { return embed(k, algebra_.idempotents()[vertices_[k]]); }

 private:
  Algebra algebra_;
  std::vector<std::size_t> vertices_;
  std::vector<std::size_t> offsets_;
  RightModule module_;
  // Basis of e_v A inside A, one per vertex of the algebra.
  std::shared_ptr<const std::vector<SubspaceBasis>> corner_;
};

/// A map ⊕_k e_{v_k}A → ⊕_l e_{u_l}A, stored as the matrix of algebra
/// elements entry(l, k) ∈ e_{u_l} A e_{v_k}: the generator of summand k goes
/// to Σ_l entry(l, k) in summand l.
class ProjMap {
 public:
  ProjMap() = default;
  ProjMap(std::size_t rows, std::size_t cols, const Algebra& a);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Vec& operator()(std::size_t l, std::size_t k) { return entries_[l * cols_ + k]; }
  const Vec& operator()(std::size_t l, std::size_t k) const { return entries_[l * cols_ + k]; }
  bool is_zero() const;

  ProjMap& operator+=(const ProjMap& rhs);
  ProjMap& operator*=(const Scalar& s);
  friend bool operator==(const ProjMap& a, const ProjMap& b) { return a.entries_ == b.entries_; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Vec> entries_;
};

/// g ∘ f.
ProjMap compose(const Algebra& a, const ProjMap& g, const ProjMap& f);
ProjMap identity_map(const ProjModule& p);
ProjMap zero_map(const ProjModule& source, const ProjModule& target);
/// Matrix of the module homomorphism.
Matrix to_matrix(const ProjModule& source, const ProjModule& target, const ProjMap& f);
/// The ProjMap of a homomorphism given as a matrix.
ProjMap from_matrix(const ProjModule& source, const ProjModule& target, const Matrix& phi);
/// Homomorphism P → Y sending the generator of summand k to images[k].
Matrix hom_from_generators(const ProjModule& p, const RightModule& y, const std::vector<Vec>& images);
/// Checks that every entry lies in the right Peirce corner.
bool is_valid_map(const ProjModule& source, const ProjModule& target, const ProjMap& f);

/// Bounded complex of projectives with d^n : P^n → P^{n+1}. Degrees outside
/// [lo, hi] hold zero.
class ProjComplex {
 public:
  ProjComplex() = default;
  /// terms[i] sits in degree lo + i; diffs[i] : terms[i] → terms[i + 1].
  ProjComplex(const Algebra& a, int lo, std::vector<ProjModule> terms, std::vector<ProjMap> diffs);
  static ProjComplex stalk(const ProjModule& p, int degree = 0);

  const Algebra& algebra() const { return algebra_; }
  int lo() const { return lo_; }
  int hi() const { return lo_ + static_cast<int>(terms_.size()) - 1; }
  bool empty() const { return terms_.empty(); }
  const ProjModule& term(int n) const;
  /// d^n : P^n → P^{n+1}; zero outside the range.
  ProjMap d(int n) const;
  Matrix d_matrix(int n) const;

  /// P[m]: degree n holds P^{n+m}, differential (−1)^m d.
  ProjComplex shift(int m) const;
  /// Throws InvariantViolation when d∘d ≠ 0 or an entry leaves its corner.
  void validate() const;
  /// dim H^n.
  std::size_t homology_dim(int n) const;
  std::size_t total_dim() const;

 private:
  Algebra algebra_;
  int lo_ = 0;
  std::vector<ProjModule> terms_;
  std::vector<ProjMap> diffs_;
  ProjModule zero_;
};

ProjComplex direct_sum(const ProjComplex& a, const ProjComplex& b);

/// Degree-n chain families f_i : P^i → Q^{i+n}, keyed by i.
using ChainFamily = std::map<int, ProjMap>;

/// The total Hom complex Hom(P, Q) with D(f) = d_Q f − (−1)^n f d_P; its
/// n-th cohomology is Hom_{K^b}(P, Q[n]).
class HomComplex {
 public:
  HomComplex(ProjComplex p, ProjComplex q);

  std::size_t dim(int n) const;
  /// D^n as a dim(n + 1) × dim(n) matrix.
  Matrix differential(int n) const;
  std::size_t cohomology_dim(int n) const;

  Vec flatten(int n, const ChainFamily& f) const;
  ChainFamily unflatten(int n, const Vec& v) const;
  ChainFamily apply_differential(int n, const ChainFamily& f) const;

  /// Z^n / B^n with representatives and class coordinates.
  struct Cohomology {
    SubspaceBasis cycles;
    Quotient quotient;        // of cycle coordinates by boundaries
    Matrix representatives;   // one cycle per class basis vector
    std::size_t dim() const { return representatives.cols(); }
    /// Class coordinates of a cycle; throws InvariantViolation otherwise.
    Vec class_of(const Vec& cycle) const { return quotient.projection.apply(cycles.coords(cycle)); }
  };
  Cohomology cohomology(int n) const;

  const ProjComplex& source() const { return p_; }
  const ProjComplex& target() const { return q_; }

 private:
  struct Block {
    int i;              // source degree
    std::size_t l, k;   // target summand, source summand
    std::size_t offset;
    std::size_t size;
  };
  const std::vector<Block>& layout(int n) const;

  ProjComplex p_;
  ProjComplex q_;
  std::map<int, std::vector<Block>> layout_;
  std::map<int, std::size_t> dims_;
};

/// Composition of chain families of degrees m (g : Q → R) and n (f : P → Q),
/// giving a family of degree m + n on P.
ChainFamily compose(const Algebra& a, const ChainFamily& g, int g_degree, const ChainFamily& f, int f_degree);

}  // namespace trimat
