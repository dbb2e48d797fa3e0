#pragma once

#include <vector>

#include "trimat/algebra/module.hpp"

namespace trimat {

struct Summand {
  RightModule module;
  Matrix inclusion;   // X.dim × summand.dim
  Matrix projection;  // summand.dim × X.dim, projection ∘ inclusion = id
};

/// X = ⊕ X_i found by Fitting decompositions of endomorphisms φ − λ with
/// small rational λ. `complete` is true when every X_i has a local
/// endomorphism ring; otherwise some summand could not be split.
struct Decomposition {
  std::vector<Summand> summands;
  bool complete = false;
};

Decomposition decompose_module(const RightModule& x);

/// Groups summands into isomorphism classes; class[i] is the class index of
/// summands[i]. Requires a complete decomposition.
std::vector<std::size_t> isomorphism_classes(const Decomposition& d);

/// The direct sum of one summand per isomorphism class, with its inclusion
/// into X. Throws NonBasic if the decomposition is incomplete.
Summand basic_part(const RightModule& x);

}  // namespace trimat
