#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include "trimat/algebra/module.hpp"

namespace trimat {

/// R-S-bimodule: a left R-action λ with λ(rr') = λ(r)λ(r') and a right
/// S-action ρ with ρ(ss') = ρ(s')ρ(s), commuting with each other.
class Bimodule {
 public:
  Bimodule() = default;
  /// Validates both actions and that they commute; throws ActionViolation.
  Bimodule(Algebra left, Algebra right, std::vector<Matrix> left_action, std::vector<Matrix> right_action);
  static Bimodule unchecked(Algebra left, Algebra right, std::vector<Matrix> left_action,
                            std::vector<Matrix> right_action);
  static Bimodule zero(const Algebra& left, const Algebra& right);

  const Algebra& left_algebra() const { return left_; }
  const Algebra& right_algebra() const { return right_; }
  std::size_t dim() const { return dim_; }
  Field field() const { return left_.field(); }
  const Matrix& left_action(std::size_t i) const { return data_->left[i]; }
  const Matrix& right_action(std::size_t i) const { return data_->right[i]; }
  const std::vector<Matrix>& left_actions() const { return data_->left; }
  const std::vector<Matrix>& right_actions() const { return data_->right; }
  Matrix left_act(const Vec& r) const;
  Matrix right_act(const Vec& s) const;

  /// M viewed as a right module over its right algebra.
  RightModule as_right_module() const;
  void validate() const;

 private:
  struct Data {
    std::vector<Matrix> left;
    std::vector<Matrix> right;
  };
  Algebra left_;
  Algebra right_;
  std::size_t dim_ = 0;
  std::shared_ptr<const Data> data_;
};

/// A as an A-A-bimodule.
Bimodule regular_bimodule(const Algebra& a);
/// A right A-module as a k-A-bimodule.
Bimodule bimodule_from_right_module(const RightModule& x);

/// D(M) = Hom_k(M, k) as an S-R-bimodule: (sφ)(m) = φ(ms), (φr)(m) = φ(rm).
/// On coordinates the actions are transposes of the original ones.
Bimodule dual_bimodule(const Bimodule& m);

/// X ⊗_R M as a quotient of X ⊗_k M, whose basis is x_i ⊗ m_j at index
/// i·dim M + j.
struct TensorProduct {
  RightModule module;
  Quotient quotient;
};

TensorProduct tensor_over(const RightModule& x, const Bimodule& m);
/// α ⊗ id_M between two tensor products.
Matrix tensor_map(const TensorProduct& source, const TensorProduct& target, const Matrix& alpha,
                  std::size_t bimodule_dim);

}  // namespace trimat
