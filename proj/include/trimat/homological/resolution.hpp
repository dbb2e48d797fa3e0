#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "trimat/homological/complex.hpp"

namespace trimat {

constexpr std::size_t kDefaultBound = 12;

struct ProjectiveCover {
  ProjModule cover;
  Matrix epi;  // X.dim × cover.dim
};

/// Minimal projective cover: one summand e_vA per copy of the simple S_v in
/// the top of X.
ProjectiveCover projective_cover(const RightModule& x);

/// ⋯ → P^{-1} → P^0 → X → 0 as a complex in degrees −length … 0.
struct Resolution {
  RightModule module;
  ProjComplex complex;
  Matrix augmentation;               // X.dim × P^0.dim
  bool finite = false;               // a zero syzygy was reached
  std::size_t length = 0;            // pd X when finite, the bound otherwise
  std::vector<std::size_t> syzygy_dims;  // dim Ω^1 X, dim Ω^2 X, …
  /// (i, j) with i < j and Ω^i X ≅ Ω^j X ≠ 0 (Ω^0 = X), found among the
  /// computed syzygies of an unfinished resolution. Certifies pd X = ∞.
  std::optional<std::pair<std::size_t, std::size_t>> repeat;
  /// P_n = complex.term(-n).
  const ProjModule& term(std::size_t n) const { return complex.term(-static_cast<int>(n)); }
};

/// Iterated projective covers of syzygies. Stops with finite = true when
/// a syzygy vanishes; otherwise computes P_0 … P_bound and reports
/// length = bound.
Resolution projective_resolution(const RightModule& x, std::size_t bound = kDefaultBound);

/// Comparison maps c_k : P_k → Q_k over f : X → Y, with ε_Q c_0 = f ε_P and
/// d_Q c_k = c_{k−1} d_P, one for each computed term of P. Throws
/// InvariantViolation when Q runs out before a nonzero target is reached.
std::vector<ProjMap> lift_map(const Resolution& p, const Resolution& q, const Matrix& f);

struct ExtTable {
  std::vector<std::size_t> dims;  // Ext^0 … Ext^bound
  bool exact_beyond = false;      // Ext^n = 0 for all n > bound is certain
};

ExtTable ext_groups(const RightModule& x, const RightModule& y, std::size_t bound = kDefaultBound);
/// Same, reusing a resolution of X computed with bound ≥ `bound` + 1.
ExtTable ext_groups(const Resolution& res, const RightModule& y, std::size_t bound);

/// dim Hom_{K^b}(P, Q[n]) for n in [lo, hi].
std::vector<std::size_t> hom_complex_cohomology(const ProjComplex& p, const ProjComplex& q, int lo, int hi);

/// Finite(n) when the projective resolution ends by the bound; Unknown
/// otherwise, which is not a proof of infinite projective dimension.
struct PerMembership {
  bool finite = false;
  std::size_t value = 0;  // pd when finite, the bound otherwise
  bool infinite = false;  // a syzygy repeated, so X is not perfect
  std::string to_string() const;
};
PerMembership per_membership(const RightModule& x, std::size_t bound = kDefaultBound);

/// Evidence for T being a tilting module: finite projective dimension,
/// Ext^n(T, T) = 0 for n ≥ 1, and 0 → A → T_0 → ⋯ → T_r → 0 with T_i in
/// add T.
struct TiltingCertificate {
  PerMembership pd;
  std::vector<std::size_t> self_ext;  // Ext^n(T, T) for n = 0 … bound
  bool rigid = false;
  /// Hom-multiplicities of the universal approximations T^{h_i}, then the
  /// last cokernel (a summand of T^{h_r}) as its dimension.
  std::vector<std::size_t> coresolution;
  std::size_t last_cokernel_dim = 0;
  bool coresolved = false;
  std::string failure;

  bool tilting() const { return pd.finite && rigid && coresolved; }
};

/// Throws ApproximationNotInjective when some approximation A_i → T^h is
/// not injective.
TiltingCertificate is_tilting_module(const RightModule& t, std::size_t bound = kDefaultBound);

/// True when X is a direct summand of a direct sum of copies of T.
bool in_add(const RightModule& x, const RightModule& t);

/// Global dimension probe: max pd of the simples when all are finite.
struct GldimProbe {
  bool finite = false;
  std::size_t value = 0;  // gldim when finite, the bound otherwise
  std::vector<PerMembership> simples;
  std::string to_string() const;
};
GldimProbe gldim_probe(const Algebra& a, std::size_t bound = kDefaultBound);

}  // namespace trimat
