#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "trimat/algebra/bimodule.hpp"

namespace trimat {

/// A triplet (R, S, M) with M an R-S-bimodule.
struct TriangularData {
  Algebra r;
  Algebra s;
  Bimodule m;

  void validate() const;
};

/// Λ = [[R, M], [0, S]] with basis (R basis, M basis, S basis) and
/// multiplication (r, m, s)(r', m', s') = (rr', rm' + ms', ss'). The
/// idempotent list is (e_1, …, e_n, f_1, …, f_m).
struct TriangularAlgebra {
  TriangularData data;
  Algebra lambda;
  Vec e_r;
  Vec e_s;

  std::size_t r_dim() const { return data.r.dim(); }
  std::size_t m_dim() const { return data.m.dim(); }
  std::size_t s_dim() const { return data.s.dim(); }
  std::size_t m_offset() const { return r_dim(); }
  std::size_t s_offset() const { return r_dim() + m_dim(); }

  Vec embed_r(const Vec& r) const;
  Vec embed_m(const Vec& m) const;
  Vec embed_s(const Vec& s) const;
  /// Index in Λ of the k-th idempotent of S.
  std::size_t s_vertex(std::size_t k) const { return data.r.num_idempotents() + k; }
};

TriangularAlgebra build_triangular(const TriangularData& d);

/// Comma-category object (X, Y, f) with f : X ⊗_k M → Y stored on the
/// k-tensor basis x_i ⊗ m_j (index i·dim M + j). f must be balanced over R
/// and S-linear.
struct TripleModule {
  RightModule x;  // over R
  RightModule y;  // over S
  Matrix f;       // y.dim × (x.dim · dim M)
};

/// (α, β) with β∘f = f'∘(α ⊗ id_M).
struct TripleHom {
  Matrix alpha;
  Matrix beta;
};

/// Throws ActionViolation (balance or S-linearity) or DimensionMismatch.
void validate_triple(const TriangularData& d, const TripleModule& t);
bool is_triple_hom(const TriangularData& d, const TripleModule& source, const TripleModule& target,
                   const TripleHom& h);

/// Z = X ⊕ Y with (x, y)·(r, m, s) = (xr, f(x ⊗ m) + ys).
RightModule triple_to_lambda(const TriangularAlgebra& t, const TripleModule& c);

struct TripleView {
  TripleModule triple;
  /// Isomorphism triple_to_lambda(triple) → Z: columns are the chosen bases
  /// of Z·e_R followed by Z·e_S.
  Matrix to_lambda;
};

/// X = Z·e_R, Y = Z·e_S and f from the action of the M-block.
TripleView lambda_to_triple(const TriangularAlgebra& t, const RightModule& z);

/// Lifts a pair (α, β) to the Λ-module map on X ⊕ Y.
Matrix triple_hom_to_lambda(const TripleHom& h);

/// Hom space in the comma category, computed on the Λ side and split into
/// (α, β) blocks.
std::vector<TripleHom> triple_hom_space(const TriangularAlgebra& t, const TripleModule& source,
                                        const TripleModule& target);

// The functors. Objects first, then their action on morphisms; names follow
// the usual gluing notation (i^{-1} = i_inv, i_* = i_star, …).
RightModule i_inv(const TripleModule& c);
RightModule j_inv(const TripleModule& c);
TripleModule i_star(const TriangularData& d, const RightModule& a);
TripleModule j_shriek(const TriangularData& d, const RightModule& b);
TripleModule i_shriek(const TriangularData& d, const RightModule& a);
/// coker f as an S-module, with the projection Y → coker f.
QuotientModule j_natural(const TriangularData& d, const TripleModule& c);
/// ker(f♯ : X → Hom_S(M, Y)) as an R-module, with its basis in X.
struct KernelPart {
  RightModule module;
  Matrix basis;
};
KernelPart i_upper_shriek(const TriangularData& d, const TripleModule& c);

/// j_*(B) = (Hom_S(M, B), B, evaluation) together with the Hom basis.
struct JStar {
  TripleModule triple;
  HomSpace hom;
};
JStar j_star(const TriangularData& d, const RightModule& b);

Matrix i_inv(const TripleHom& h);
Matrix j_inv(const TripleHom& h);
TripleHom i_star(const TriangularData& d, const Matrix& alpha, const RightModule& a, const RightModule& a2);
TripleHom j_shriek(const TriangularData& d, const Matrix& beta, const RightModule& b, const RightModule& b2);
TripleHom i_shriek(const TriangularData& d, const RightModule& a, const RightModule& a2, const Matrix& alpha);
Matrix j_natural(const TriangularData& d, const TripleModule& c, const TripleModule& c2, const TripleHom& h);
Matrix i_upper_shriek(const TriangularData& d, const TripleModule& c, const TripleModule& c2, const TripleHom& h);
TripleHom j_star(const TriangularData& d, const RightModule& b, const RightModule& b2, const Matrix& beta);

/// Outcome of the gluing axiom checks on concrete samples.
struct GluingCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct GluingReport {
  std::vector<GluingCheck> checks;
  bool all_pass() const;
  std::size_t failures() const;
};

/// Runs the extension sequence, adjunction, orthogonality and functor
/// identity checks for each sample C against every test module A over R and
/// B over S.
GluingReport verify_gluing(const TriangularAlgebra& t, const std::vector<TripleModule>& samples,
                           const std::vector<RightModule>& r_modules, const std::vector<RightModule>& s_modules);
/// Same, with the indecomposable projectives and simples of R and S as test
/// modules.
GluingReport verify_gluing(const TriangularAlgebra& t, const std::vector<TripleModule>& samples);

}  // namespace trimat
