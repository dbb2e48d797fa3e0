#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "trimat/glue/triangular.hpp"
#include "trimat/homological/resolution.hpp"

namespace trimat {

/// Projective S-modules, maps and complexes carried into Λ by j_!
/// (f_v S ↦ f_v Λ) and projective R-modules by i_! (e_u R ↦ e_u Λ).
ProjModule shriek_s(const TriangularAlgebra& t, const ProjModule& p);
ProjMap shriek_s(const TriangularAlgebra& t, const ProjMap& f);
ProjComplex shriek_s(const TriangularAlgebra& t, const ProjComplex& c);
ProjModule shriek_r(const TriangularAlgebra& t, const ProjModule& p);
ProjMap shriek_r(const TriangularAlgebra& t, const ProjMap& f);

/// T = (R, 0, 0) ⊕ (0, T_S, 0)[1] as a complex of projective Λ-modules.
///
/// part_r resolves (R, 0, 0) by ⋯ → j_!Q_1 → j_!Q_0 → i_!R with Q a
/// projective resolution of M_S; part_s is j_!(res T_S)[1].
struct TiltingComplexData {
  TriangularAlgebra lambda;
  RightModule t_s;
  Resolution res_m;
  Resolution res_t;
  ProjComplex part_r;
  ProjComplex part_s;
  ProjComplex complex;  // part_r ⊕ part_s, part_r summands first in each degree
  /// dim H^n(complex) for n in [complex.lo(), complex.hi()].
  std::vector<std::size_t> homology;
};

/// Throws NotPerfect when M_S or T_S has no projective resolution of length
/// at most `bound`, and InvariantViolation when the homology of the result is
/// not dim R in degree 0 and dim T_S in degree −1.
TiltingComplexData build_tilting_complex(const TriangularData& d, const RightModule& t_s,
                                         std::size_t bound = kDefaultBound);

struct HomWindow {
  int lo = 0;
  std::vector<std::size_t> dims;  // dim Hom_K(T, T[n]) for n = lo, lo + 1, …
  /// Degree-0 blocks: End(part_r), End(part_s), Hom(part_r, part_s) and
  /// Hom(part_s, part_r).
  std::size_t end_r = 0;
  std::size_t end_s = 0;
  std::size_t corner = 0;
  std::size_t opposite = 0;
  bool pass = false;

  std::size_t at(int n) const { return dims.at(static_cast<std::size_t>(n - lo)); }
};

/// Hom(T, T[n]) for n in [−window, window]; passes when only n = 0 survives.
HomWindow verify_tilting_complex(const TiltingComplexData& t, int window);

struct IdentificationReport {
  std::size_t mate_dim = 0;
  std::size_t end_dim = 0;  // dim Hom_K(T, T)
  std::size_t products_checked = 0;
  bool pass = false;
};

/// Where the mate's basis goes before lifting: mate.r basis elements to
/// endomorphisms of T_S and mate.m basis elements to maps M_S → T_S.
struct MateRealization {
  std::vector<Matrix> end_images;
  std::vector<Matrix> hom_images;
};

/// The realization behind mate_general: the bases of hom_space(T, T) and
/// hom_space(M_S, T_S).
MateRealization hom_basis_realization(const TiltingComplexData& t);

/// For T_S = D(S) and the mate (S, R, DM): s acts on DS from the left and
/// ξ ∈ DM goes to m ↦ (s ↦ ξ(ms)).
MateRealization artin_realization(const TriangularData& d);

/// Sends the mate Λ' = (R', R, M') to chain maps on T: the images of R' in
/// End_S(T_S) and of M' in Hom_S(M, T_S) by lifting along the resolutions, and
/// r ∈ R by left multiplication on i_!R together with a lift of m ↦ rm.
/// Checks that the classes form a basis of End_K(T) and that
/// Φ(xy) = Φ(x)∘Φ(y) up to homotopy for all basis pairs.
///
/// Throws IdentificationFailure naming the first failing basis pair, or the
/// dimension mismatch.
IdentificationReport end_ring_identification(const TiltingComplexData& t, const TriangularData& mate,
                                             const MateRealization& realization);
/// With hom_basis_realization, for mates built by mate_general.
IdentificationReport end_ring_identification(const TiltingComplexData& t, const TriangularData& mate);

enum class Verdict { Pass, Fail, Unknown };
std::string to_string(Verdict v);

struct HypothesisReport {
  PerMembership per_m;
  PerMembership per_t;
  TiltingCertificate tilting;
  ExtTable ext_mt;  // Ext^n_S(M_S, T_S), n = 0 … bound
  Verdict verdict = Verdict::Unknown;
  std::vector<std::string> failures;  // definite violations
  std::vector<std::string> unknowns;  // checks the bound left open
};

/// M_S perfect, T_S tilting and Ext^n(M_S, T_S) = 0 for n ≥ 1. Fail when a
/// violation is certain (including infinite projective dimension shown by a
/// repeated syzygy), Unknown when only the bound prevents a conclusion.
HypothesisReport check_hypotheses(const TriangularData& d, const RightModule& t_s,
                                  std::size_t bound = kDefaultBound);

/// (End_S(T_S), R, Hom_S(M, T_S)). End_S(T_S) has the Hom basis of
/// hom_space(T, T) with product φ·ψ = φ∘ψ and one idempotent per
/// indecomposable summand of T_S; the bimodule basis is that of
/// hom_space(M_S, T_S), with End acting by composition on the left and R by
/// composition with m ↦ rm on the right.
///
/// Throws HypothesisFailure unless check_hypotheses passes, and NonBasic when
/// T_S has repeated summands (basic_part gives a replacement).
TriangularData mate_general(const TriangularData& d, const RightModule& t_s, std::size_t bound = kDefaultBound);

/// (S, R, DM). Throws GldimUnknown unless gldim S is finite within `bound`.
TriangularData mate_artin(const TriangularData& d, std::size_t bound = kDefaultBound);

/// R[N] = (k, R, N) and [N]R = (R, k, DN) for a k-R-bimodule N. Throws
/// NotDivisionCase when the left algebra of N is not the ground field.
TriangularData one_point_extension(const Algebra& r, const Bimodule& n);
TriangularData one_point_coextension(const Algebra& r, const Bimodule& n);

}  // namespace trimat
