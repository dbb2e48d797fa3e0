#include "trimat/algebra/bimodule.hpp"

#include <utility>

#include "trimat/error.hpp"

namespace trimat {

Bimodule Bimodule::unchecked(Algebra left, Algebra right, std::vector<Matrix> left_action,
                             std::vector<Matrix> right_action) {
  if (!(left.field() == right.field())) throw Error(ErrorCode::FieldMismatch, "bimodule algebras over different fields");
  if (left_action.size() != left.dim() || right_action.size() != right.dim()) {
    throw Error(ErrorCode::DimensionMismatch, "bimodule needs one matrix per basis element on each side");
  }
  Bimodule b;
  b.dim_ = left_action.empty() ? 0 : left_action.front().rows();
  for (const auto* side : {&left_action, &right_action})
    for (const auto& a : *side)
      if (a.rows() != b.dim_ || a.cols() != b.dim_) throw Error(ErrorCode::DimensionMismatch, "bimodule action is not square");
  b.left_ = std::move(left);
  b.right_ = std::move(right);
  b.data_ = std::make_shared<const Data>(Data{std::move(left_action), std::move(right_action)});
  return b;
}

Bimodule::Bimodule(Algebra left, Algebra right, std::vector<Matrix> left_action, std::vector<Matrix> right_action) {
  *this = unchecked(std::move(left), std::move(right), std::move(left_action), std::move(right_action));
  validate();
}

Bimodule Bimodule::zero(const Algebra& left, const Algebra& right) {
  return unchecked(left, right, std::vector<Matrix>(left.dim(), Matrix(0, 0, left.field())),
                   std::vector<Matrix>(right.dim(), Matrix(0, 0, left.field())));
}

Matrix Bimodule::left_act(const Vec& r) const {
  Matrix m(dim_, dim_, field());
  for (std::size_t i = 0; i < r.size(); ++i)
    if (!r[i].is_zero()) m += data_->left[i] * r[i];
  return m;
}

Matrix Bimodule::right_act(const Vec& s) const {
  Matrix m(dim_, dim_, field());
  for (std::size_t i = 0; i < s.size(); ++i)
    if (!s[i].is_zero()) m += data_->right[i] * s[i];
  return m;
}

RightModule Bimodule::as_right_module() const { return RightModule::unchecked(right_, data_->right); }

void Bimodule::validate() const {
  if (!left_act(left_.unit()).is_identity()) throw Error(ErrorCode::ActionViolation, "left unit does not act as identity");
  if (!right_act(right_.unit()).is_identity()) {
    throw Error(ErrorCode::ActionViolation, "right unit does not act as identity");
  }
  const auto& rl = left_.labels();
  for (std::size_t i = 0; i < left_.dim(); ++i)
    for (std::size_t j = 0; j < left_.dim(); ++j)
      if (data_->left[i] * data_->left[j] != left_act(left_.product(i, j))) {
        throw Error(ErrorCode::ActionViolation, "left action fails on " + rl[i] + "*" + rl[j]);
      }
  as_right_module().validate();
  for (std::size_t i = 0; i < left_.dim(); ++i)
    for (std::size_t j = 0; j < right_.dim(); ++j)
      if (data_->left[i] * data_->right[j] != data_->right[j] * data_->left[i]) {
        throw Error(ErrorCode::ActionViolation,
                    "left action of " + rl[i] + " does not commute with right action of " + right_.labels()[j]);
      }
}

Bimodule regular_bimodule(const Algebra& a) {
  std::vector<Matrix> left, right;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    left.push_back(a.left_mult(i));
    right.push_back(a.right_mult(i));
  }
  return Bimodule::unchecked(a, a, std::move(left), std::move(right));
}

Bimodule bimodule_from_right_module(const RightModule& x) {
  Algebra k = Algebra::ground(x.field());
  return Bimodule::unchecked(k, x.algebra(), {Matrix::identity(x.dim(), x.field())}, x.actions());
}

Bimodule dual_bimodule(const Bimodule& m) {
  std::vector<Matrix> left, right;
  for (const auto& r : m.right_actions()) left.push_back(r.transpose());
  for (const auto& l : m.left_actions()) right.push_back(l.transpose());
  return Bimodule::unchecked(m.right_algebra(), m.left_algebra(), std::move(left), std::move(right));
}

TensorProduct tensor_over(const RightModule& x, const Bimodule& m) {
  if (!x.algebra().same_as(m.left_algebra())) {
    throw Error(ErrorCode::AlgebraMismatch, "tensor product: module algebra differs from the bimodule's left algebra");
  }
  const Field f = x.field();
  const std::size_t n = x.dim() * m.dim();
  const Matrix ix = Matrix::identity(x.dim(), f);
  const Matrix im = Matrix::identity(m.dim(), f);
  // Balancing over generators suffices: xr ⊗ m ~ x ⊗ rm propagates to products.
  std::vector<Matrix> rels;
  for (const auto& g : x.algebra().generators()) {
    rels.push_back(kronecker(x.act(g), im) - kronecker(ix, m.left_act(g)));
  }
  Matrix relations = rels.empty() || n == 0 ? Matrix(n, 0, f) : hstack(rels, n, f);
  Quotient q = quotient_by(relations, n, f);
  std::vector<Matrix> action;
  for (std::size_t s = 0; s < m.right_algebra().dim(); ++s) {
    action.push_back(q.projection * kronecker(ix, m.right_action(s)) * q.section);
  }
  return {RightModule::unchecked(m.right_algebra(), std::move(action)), std::move(q)};
}

Matrix tensor_map(const TensorProduct& source, const TensorProduct& target, const Matrix& alpha,
                  std::size_t bimodule_dim) {
  Matrix id = Matrix::identity(bimodule_dim, alpha.field());
  return target.quotient.projection * kronecker(alpha, id) * source.quotient.section;
}

}  // namespace trimat
