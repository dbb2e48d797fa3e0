#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

#include "trimat/algebra/algebra.hpp"

namespace trimat {

/// Finite-dimensional right module, stored as one matrix ρ(b_i) per basis
/// element of the algebra, acting on column vectors.
///
/// Convention: x·(ab) = (x·a)·b, so ρ(ab) = ρ(b)·ρ(a).
class RightModule {
 public:
  RightModule() = default;
  /// Validates unitality and the composition rule; throws ActionViolation.
  RightModule(Algebra algebra, std::vector<Matrix> action);
  /// Skips validation, for modules built from already validated data.
  static RightModule unchecked(Algebra algebra, std::vector<Matrix> action);
  static RightModule zero(const Algebra& algebra);

  const Algebra& algebra() const { return algebra_; }
  std::size_t dim() const { return dim_; }
  Field field() const { return algebra_.field(); }
  const Matrix& action(std::size_t i) const { return (*action_)[i]; }
  const std::vector<Matrix>& actions() const { return *action_; }
  /// ρ(a) for an arbitrary algebra element a.
  Matrix act(const Vec& a) const;

  void validate() const;

 private:
  Algebra algebra_;
  std::size_t dim_ = 0;
  std::shared_ptr<const std::vector<Matrix>> action_;
};

struct ModuleHom {
  RightModule source;
  RightModule target;
  Matrix matrix;  // target.dim × source.dim
};

bool is_homomorphism(const RightModule& x, const RightModule& y, const Matrix& phi);
void require_same_algebra(const RightModule& x, const RightModule& y);

/// Basis of Hom_A(X, Y) with coordinates for arbitrary homomorphisms.
class HomSpace {
 public:
  HomSpace() = default;
  HomSpace(std::size_t target_dim, std::size_t source_dim, Field field, std::vector<Matrix> basis);

  std::size_t dim() const { return basis_.size(); }
  const std::vector<Matrix>& basis() const { return basis_; }
  const Matrix& operator[](std::size_t i) const { return basis_[i]; }
  /// Coordinates of phi in the basis; throws InvariantViolation if phi is not
  /// in the space.
  Vec coords(const Matrix& phi) const;
  bool contains(const Matrix& phi) const;
  Matrix combine(const Vec& coeffs) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Field field_{};
  std::vector<Matrix> basis_;
  SubspaceBasis flat_;
};

/// Solves the intertwining equations over the algebra's generators.
HomSpace hom_space(const RightModule& x, const RightModule& y);

RightModule regular_module(const Algebra& a);
/// e_i·A.
RightModule projective_module(const Algebra& a, std::size_t i);
/// Top of e_i·A.
RightModule simple_module(const Algebra& a, std::size_t i);

RightModule direct_sum(const RightModule& x, const RightModule& y);
RightModule direct_sum(const std::vector<RightModule>& parts, const Algebra& a);

/// The submodule spanned by the (independent) columns of `basis`; throws
/// ActionViolation when the span is not invariant.
RightModule submodule(const RightModule& x, const Matrix& basis);

struct QuotientModule {
  RightModule module;
  Matrix projection;  // quotient.dim × x.dim
  Matrix section;     // x.dim × quotient.dim
};

/// X / span(columns of `sub`). The span must be a submodule.
QuotientModule quotient_module(const RightModule& x, const Matrix& sub);

/// Smallest submodule containing the given columns.
Matrix generated_submodule(const RightModule& x, const Matrix& vectors);
/// Basis of X·rad(A).
Matrix radical_submodule(const RightModule& x);
/// Basis of X·e_i.
Matrix idempotent_part(const RightModule& x, std::size_t i);

/// Kernel, image and cokernel of a homomorphism X → Y.
RightModule kernel_module(const RightModule& x, const Matrix& phi);
Matrix kernel_basis(const Matrix& phi);
QuotientModule cokernel_module(const RightModule& y, const Matrix& phi);

/// An isomorphism X → Y if one is found among deterministic pseudo-random
/// combinations of a Hom basis. Over Q a failure is overwhelmingly likely to
/// mean the modules are not isomorphic; for a certain answer on
/// indecomposables use indecomposables_isomorphic.
std::optional<Matrix> find_isomorphism(const RightModule& x, const RightModule& y);
/// Exact test for modules with local endomorphism rings.
bool indecomposables_isomorphic(const RightModule& x, const RightModule& y);
/// True when End(X) is local with residue field k.
bool has_local_endomorphism_ring(const RightModule& x);

/// End_A(X) as a structure-constant algebra with product φ·ψ = φ∘ψ. The
/// idempotent list defaults to the identity alone, which makes construction
/// fail unless End(X) is local.
struct EndomorphismAlgebra {
  Algebra algebra;
  HomSpace space;
};
EndomorphismAlgebra endomorphism_algebra(const RightModule& x, const std::vector<Matrix>& idempotents);

/// The nilpotent elements test used for local rings: ψ is nilpotent iff ψ^dim = 0.
bool is_nilpotent(const Matrix& m);

}  // namespace trimat
