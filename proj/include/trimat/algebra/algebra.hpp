#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "trimat/linalg/linalg.hpp"

namespace trimat {

struct QuiverArrow {
  std::string name;
  std::size_t source = 0;
  std::size_t target = 0;
};

/// One term of a relation: coefficient times a path of arrows, listed in
/// traversal order.
struct PathTerm {
  Scalar coeff;
  std::vector<std::size_t> arrows;
};

struct QuiverPresentation {
  std::vector<std::string> vertices;
  std::vector<QuiverArrow> arrows;
  std::vector<std::vector<PathTerm>> relations;
  std::size_t nilpotency_bound = 2;  // paths of length >= L vanish
};

/// An arrow of the Gabriel quiver: an element of e_source · rad · e_target
/// that is independent modulo rad².
struct AlgebraArrow {
  std::size_t source = 0;
  std::size_t target = 0;
  Vec element;
};

/// Finite-dimensional associative unital algebra given by structure constants,
/// with a complete list of primitive orthogonal idempotents.
///
/// Multiplication of paths reads left to right: for an arrow a: 1 → 2 we have
/// e1·a = a = a·e2. Values share their immutable data, so copies are cheap.
class Algebra {
 public:
  Algebra() = default;

  /// products[i][j] holds the coordinates of b_i·b_j. Validates associativity,
  /// unit laws and the idempotent list (orthogonal, complete, primitive) and
  /// requires the algebra to be basic.
  static Algebra from_structure_constants(Field field, std::vector<std::string> labels,
                                          const std::vector<std::vector<Vec>>& products, Vec unit,
                                          std::vector<Vec> idempotents);
  static Algebra from_quiver(const QuiverPresentation& q, Field field = Field::rationals());
  /// The base field k as a one-dimensional algebra.
  static Algebra ground(Field field);

  bool valid() const { return data_ != nullptr; }
  Field field() const;
  std::size_t dim() const;
  const std::vector<std::string>& labels() const;
  const Vec& unit() const;
  const std::vector<Vec>& idempotents() const;
  std::size_t num_idempotents() const;

  Vec basis_vec(std::size_t i) const;
  const Vec& product(std::size_t i, std::size_t j) const;
  Vec mul(const Vec& a, const Vec& b) const;
  /// Matrix of x ↦ b_i·x.
  const Matrix& left_mult(std::size_t i) const;
  /// Matrix of x ↦ x·b_i.
  const Matrix& right_mult(std::size_t i) const;
  Matrix left_mult(const Vec& a) const;
  Matrix right_mult(const Vec& a) const;

  /// Basis of e_i·A·e_j.
  const SubspaceBasis& peirce(std::size_t i, std::size_t j) const;
  /// Radical, computed from the idempotents: off-diagonal Peirce pieces plus
  /// the maximal ideals of the local corners.
  const SubspaceBasis& radical_basis() const;
  /// Idempotents followed by arrow elements; these generate A as an algebra.
  const std::vector<Vec>& generators() const;
  const std::vector<AlgebraArrow>& arrows() const;

  const std::optional<QuiverPresentation>& quiver() const;
  /// For quiver algebras: the path (arrow list, or vertex index when the
  /// path is trivial) behind each basis element.
  bool basis_is_trivial_path(std::size_t i) const;

  /// Same underlying data, or identical structure constants and idempotents.
  bool same_as(const Algebra& other) const;

 private:
  struct Data;
  std::shared_ptr<const Data> data_;
  static Algebra build(Field field, std::vector<std::string> labels, std::vector<Vec> table, Vec unit,
                       std::vector<Vec> idempotents, std::optional<QuiverPresentation> quiver,
                       std::vector<bool> trivial_path);
};

/// Direct product A × B with basis (A basis, B basis) and idempotents
/// concatenated.
Algebra product_algebra(const Algebra& a, const Algebra& b);

/// Radical basis via the route appropriate to the input: the arrow span for
/// quiver algebras, the trace form over Q, and the idempotent route over F_p.
Matrix radical(const Algebra& a);
/// Span of the nontrivial paths; throws InvalidInput without a presentation.
Matrix radical_from_quiver(const Algebra& a);
/// Kernel of T(x, y) = tr(L_{xy}); throws UnsupportedField over F_p.
Matrix radical_from_trace_form(const Algebra& a);
Matrix radical_from_idempotents(const Algebra& a);

/// Basis of the span of all products u·v with u in span(U), v in span(V).
Matrix product_span(const Algebra& a, const Matrix& u, const Matrix& v);

}  // namespace trimat
