#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

#include "trimat/glue/triangular.hpp"
#include "trimat/linalg/int_matrix.hpp"

namespace trimat {

/// C_ij = dim e_j A e_i = dim Hom(e_i A, e_j A) for the algebra's idempotents.
IntMatrix cartan_matrix(const Algebra& a);

/// C_Λ next to the blocks predicted from R, S and the dimensions
/// (C_M)_ji = dim e_i M f_j.
struct CartanBlockCheck {
  IntMatrix lambda;
  IntMatrix predicted;  // [[C_R, 0], [C_M, C_S]]
  IntMatrix c_m;
  bool pass = false;
};
CartanBlockCheck cartan_block_check(const TriangularData& d);

/// vᵗ·C·w.
mpz_class euler_pairing(const IntMatrix& c, const std::vector<mpz_class>& v, const std::vector<mpz_class>& w);

/// P with Pᵗ·[[A, 0], [C, B]]·P = [[B, 0], [Cᵗ, A]], built from B⁻¹ when B is
/// unimodular and from A⁻¹ otherwise. Throws NeitherBlockInvertible.
IntMatrix congruence_witness_blockswap(const IntMatrix& a, const IntMatrix& b, const IntMatrix& c);

struct CongruenceOptions {
  long search_bound = 2;               // entry bound for the indefinite case
  std::size_t max_candidates = 200000;  // per column, before giving up
};

struct CongruenceResult {
  enum class Kind { Congruent, NotCongruent, Unknown };
  Kind kind = Kind::Unknown;
  IntMatrix witness;  // Pᵗ·C1·P = C2 when Congruent
  /// "identity", "block swap", "enumeration", "search", or the failing screen
  /// ("determinant", "smith C", "smith C+Ct", "smith C-Ct").
  std::string method;
  std::vector<std::size_t> candidate_counts;  // per column of P, when enumerated
  long search_bound = 0;

  std::string kind_name() const;
};

/// Screens by invariants, then the block-swap witness when C1 and C2 have
/// the shapes [[A, 0], [C, B]] and [[B, 0], [Cᵗ, A]], then a complete enumeration of columns when
/// C1 + C1ᵗ is positive definite, otherwise a bounded search.
CongruenceResult congruent_over_z(const IntMatrix& c1, const IntMatrix& c2, const CongruenceOptions& options = {});

/// Leading principal minors all positive.
bool is_positive_definite(const IntMatrix& s);

/// Integer vectors x with xᵗ·Q·x = value for positive definite Q, in
/// lexicographic order. Stops after `limit` + 1 vectors.
std::vector<std::vector<mpz_class>> vectors_of_norm(const IntMatrix& q, const mpz_class& value, std::size_t limit);

/// Characteristic polynomial of −C⁻ᵗ·C scaled to primitive integer
/// coefficients with positive leading term, lowest degree first. Throws
/// SingularCartan.
std::vector<mpz_class> coxeter_polynomial(const IntMatrix& c);

}  // namespace trimat
