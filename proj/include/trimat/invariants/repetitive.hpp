#pragma once

#include <cstddef>
#include <string>

#include "trimat/glue/triangular.hpp"
#include "trimat/homological/resolution.hpp"

namespace trimat {

/// A ⋉ M with basis (A basis, M basis) and (a, m)(a', m') = (aa', am' + ma').
Algebra trivial_extension(const Algebra& a, const Bimodule& m);

/// The repetitive algebra of A folded to p copies: A_0 ⊕ DA_0 ⊕ … ⊕
/// A_{p−1} ⊕ DA_{p−1}, where DA_i joins copy i to copy i + 1 (mod p), A acts
/// on DA through the bimodule structure and DA·DA = 0. For p = 1 this is
/// A ⋉ DA.
Algebra repetitive_truncation(const Algebra& a, std::size_t p);

struct ShiftCheck {
  std::size_t dim = 0;
  std::size_t pairs_checked = 0;
  bool pass = false;
  std::string failure;
};

/// Compares the p-fold repetitive algebras of Λ = (R, S, M) and of its mate
/// (S, R, DM) through the map that moves every block one diagonal slot
/// (R_i ↦ R_{i−1}, S_i ↦ S_i and so on) and checks it is multiplicative on
/// all basis pairs and sends 1 to 1.
ShiftCheck repetitive_shift_isomorphism(const TriangularData& d, std::size_t p);

/// Same as gldim_probe.
GldimProbe global_dimension(const Algebra& a, std::size_t bound = kDefaultBound);

}  // namespace trimat
