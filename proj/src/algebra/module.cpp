#include "trimat/algebra/module.hpp"

#include <random>
#include <utility>

#include "trimat/error.hpp"

namespace trimat {

RightModule::RightModule(Algebra algebra, std::vector<Matrix> action) {
  *this = unchecked(std::move(algebra), std::move(action));
  validate();
}

RightModule RightModule::unchecked(Algebra algebra, std::vector<Matrix> action) {
  if (action.size() != algebra.dim()) {
    throw Error(ErrorCode::DimensionMismatch, "module needs one action matrix per algebra basis element");
  }
  RightModule m;
  m.dim_ = action.empty() ? 0 : action.front().rows();
  for (const auto& a : action) {
    if (a.rows() != m.dim_ || a.cols() != m.dim_) throw Error(ErrorCode::DimensionMismatch, "action matrix is not square");
    if (!(a.field() == algebra.field())) throw Error(ErrorCode::FieldMismatch, "action matrix over the wrong field");
  }
  m.algebra_ = std::move(algebra);
  m.action_ = std::make_shared<const std::vector<Matrix>>(std::move(action));
  return m;
}

RightModule RightModule::zero(const Algebra& algebra) {
  return unchecked(algebra, std::vector<Matrix>(algebra.dim(), Matrix(0, 0, algebra.field())));
}

Matrix RightModule::act(const Vec& a) const {
  Matrix m(dim_, dim_, field());
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!a[i].is_zero()) m += (*action_)[i] * a[i];
  return m;
}

void RightModule::validate() const {
  if (!act(algebra_.unit()).is_identity()) throw Error(ErrorCode::ActionViolation, "unit does not act as identity");
  const std::size_t n = algebra_.dim();
  const auto& labels = algebra_.labels();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if ((*action_)[j] * (*action_)[i] != act(algebra_.product(i, j))) {
        throw Error(ErrorCode::ActionViolation,
                    "rho(" + labels[i] + "*" + labels[j] + ") != rho(" + labels[j] + ") rho(" + labels[i] + ")");
      }
    }
}

void require_same_algebra(const RightModule& x, const RightModule& y) {
  if (!x.algebra().same_as(y.algebra())) throw Error(ErrorCode::AlgebraMismatch, "modules over different algebras");
}

bool is_homomorphism(const RightModule& x, const RightModule& y, const Matrix& phi) {
  if (phi.rows() != y.dim() || phi.cols() != x.dim()) return false;
  for (std::size_t i = 0; i < x.algebra().dim(); ++i)
    if (phi * x.action(i) != y.action(i) * phi) return false;
  return true;
}

namespace {

Vec flatten(const Matrix& m) {
  Vec v;
  v.reserve(m.rows() * m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) v.push_back(m(r, c));
  return v;
}

}  // namespace

HomSpace::HomSpace(std::size_t target_dim, std::size_t source_dim, Field field, std::vector<Matrix> basis)
    : rows_(target_dim), cols_(source_dim), field_(field), basis_(std::move(basis)) {
  std::vector<Vec> cols;
  for (const auto& b : basis_) cols.push_back(flatten(b));
  flat_ = SubspaceBasis(Matrix::from_columns(cols, rows_ * cols_, field_));
}

Vec HomSpace::coords(const Matrix& phi) const { return flat_.coords(flatten(phi)); }
bool HomSpace::contains(const Matrix& phi) const { return flat_.contains(flatten(phi)); }

Matrix HomSpace::combine(const Vec& coeffs) const {
  Matrix m(rows_, cols_, field_);
  for (std::size_t i = 0; i < basis_.size(); ++i)
    if (!coeffs[i].is_zero()) m += basis_[i] * coeffs[i];
  return m;
}

Matrix idempotent_part(const RightModule& x, std::size_t i) {
  Matrix e = x.act(x.algebra().idempotents()[i]);
  return column_basis(e);
}

HomSpace hom_space(const RightModule& x, const RightModule& y) {
  require_same_algebra(x, y);
  const Algebra& a = x.algebra();
  const Field f = a.field();
  const std::size_t dx = x.dim(), dy = y.dim();
  // Maps commuting with the idempotents send X·e_v into Y·e_v.
  std::vector<Matrix> basis;
  for (std::size_t v = 0; v < a.num_idempotents(); ++v) {
    Matrix px = x.act(a.idempotents()[v]);
    Matrix ex = column_basis(px);
    Matrix ey = idempotent_part(y, v);
    if (ex.cols() == 0 || ey.cols() == 0) continue;
    Matrix coords_x = SubspaceBasis(ex).coords(px);  // X → X·e_v coordinates
    for (std::size_t p = 0; p < ey.cols(); ++p)
      for (std::size_t q = 0; q < ex.cols(); ++q) {
        Matrix phi(dy, dx, f);
        for (std::size_t r = 0; r < dy; ++r) {
          if (ey(r, p).is_zero()) continue;
          for (std::size_t c = 0; c < dx; ++c)
            if (!coords_x(q, c).is_zero()) phi(r, c) = ey(r, p) * coords_x(q, c);
        }
        basis.push_back(std::move(phi));
      }
  }
  for (const auto& arrow : a.arrows()) {
    if (basis.empty()) break;
    Matrix rx = x.act(arrow.element);
    Matrix ry = y.act(arrow.element);
    std::vector<Vec> cols;
    cols.reserve(basis.size());
    for (const auto& phi : basis) cols.push_back(flatten(phi * rx - ry * phi));
    Matrix k = kernel(Matrix::from_columns(cols, dx * dy, f));
    std::vector<Matrix> next;
    for (std::size_t c = 0; c < k.cols(); ++c) {
      Matrix phi(dy, dx, f);
      for (std::size_t t = 0; t < basis.size(); ++t)
        if (!k(t, c).is_zero()) phi += basis[t] * k(t, c);
      next.push_back(std::move(phi));
    }
    basis = std::move(next);
  }
  return HomSpace(dy, dx, f, std::move(basis));
}

RightModule regular_module(const Algebra& a) {
  std::vector<Matrix> action;
  for (std::size_t i = 0; i < a.dim(); ++i) action.push_back(a.right_mult(i));
  return RightModule::unchecked(a, std::move(action));
}

RightModule submodule(const RightModule& x, const Matrix& basis) {
  const Algebra& a = x.algebra();
  SubspaceBasis sb(basis);
  std::vector<Matrix> action;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    Matrix img = x.action(i) * basis;
    for (std::size_t c = 0; c < img.cols(); ++c)
      if (!sb.contains(img.col(c))) throw Error(ErrorCode::ActionViolation, "subspace is not a submodule");
    action.push_back(sb.coords(img));
  }
  return RightModule::unchecked(a, std::move(action));
}

RightModule projective_module(const Algebra& a, std::size_t i) {
  if (i >= a.num_idempotents()) throw Error(ErrorCode::InvalidInput, "idempotent index out of range");
  return submodule(regular_module(a), column_basis(a.left_mult(a.idempotents()[i])));
}

QuotientModule quotient_module(const RightModule& x, const Matrix& sub) {
  const Algebra& a = x.algebra();
  Quotient q = quotient_by(sub, x.dim(), x.field());
  std::vector<Matrix> action;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    Matrix img = q.projection * x.action(i) * sub;
    if (!img.is_zero()) throw Error(ErrorCode::ActionViolation, "quotient by a non-submodule");
    action.push_back(q.projection * x.action(i) * q.section);
  }
  return {RightModule::unchecked(a, std::move(action)), q.projection, q.section};
}

Matrix generated_submodule(const RightModule& x, const Matrix& vectors) {
  const Algebra& a = x.algebra();
  Matrix span = vectors.cols() == 0 ? Matrix(x.dim(), 0, x.field()) : column_basis(vectors);
  std::vector<Matrix> gens;
  for (const auto& g : a.generators()) gens.push_back(x.act(g));
  while (true) {
    std::vector<Matrix> parts = {span};
    for (const auto& g : gens) parts.push_back(g * span);
    Matrix next = column_basis(hstack(parts, x.dim(), x.field()));
    if (next.cols() == span.cols()) return span;
    span = std::move(next);
  }
}

Matrix radical_submodule(const RightModule& x) {
  const Matrix& rad = x.algebra().radical_basis().basis();
  std::vector<Matrix> parts;
  for (std::size_t c = 0; c < rad.cols(); ++c) parts.push_back(x.act(rad.col(c)));
  if (parts.empty() || x.dim() == 0) return Matrix(x.dim(), 0, x.field());
  return column_basis(hstack(parts, x.dim(), x.field()));
}

RightModule simple_module(const Algebra& a, std::size_t i) {
  RightModule p = projective_module(a, i);
  return quotient_module(p, radical_submodule(p)).module;
}

RightModule direct_sum(const RightModule& x, const RightModule& y) {
  require_same_algebra(x, y);
  std::vector<Matrix> action;
  for (std::size_t i = 0; i < x.algebra().dim(); ++i) action.push_back(trimat::direct_sum(x.action(i), y.action(i)));
  return RightModule::unchecked(x.algebra(), std::move(action));
}

RightModule direct_sum(const std::vector<RightModule>& parts, const Algebra& a) {
  RightModule out = RightModule::zero(a);
  for (const auto& p : parts) out = direct_sum(out, p);
  return out;
}

Matrix kernel_basis(const Matrix& phi) { return kernel(phi); }

RightModule kernel_module(const RightModule& x, const Matrix& phi) { return submodule(x, kernel(phi)); }

QuotientModule cokernel_module(const RightModule& y, const Matrix& phi) {
  Matrix img = phi.cols() == 0 ? Matrix(y.dim(), 0, y.field()) : column_basis(phi);
  return quotient_module(y, img);
}

bool is_nilpotent(const Matrix& m) {
  Matrix p = m;
  for (std::size_t i = 0; i < m.rows() && !p.is_zero(); ++i) p = p * m;
  return p.is_zero();
}

std::optional<Matrix> find_isomorphism(const RightModule& x, const RightModule& y) {
  require_same_algebra(x, y);
  if (x.dim() != y.dim()) return std::nullopt;
  if (x.dim() == 0) return Matrix(0, 0, x.field());
  HomSpace h = hom_space(x, y);
  if (h.dim() == 0) return std::nullopt;
  for (const auto& b : h.basis())
    if (rank(b) == x.dim()) return b;
  std::mt19937_64 rng(0x5eed);
  std::uniform_int_distribution<long> coeff(-1000, 1000);
  for (int attempt = 0; attempt < 24; ++attempt) {
    Vec c;
    for (std::size_t i = 0; i < h.dim(); ++i) c.push_back(Scalar::from(x.field(), coeff(rng)));
    Matrix m = h.combine(c);
    if (rank(m) == x.dim()) return m;
  }
  return std::nullopt;
}

EndomorphismAlgebra endomorphism_algebra(const RightModule& x, const std::vector<Matrix>& idempotents) {
  HomSpace end = hom_space(x, x);
  const std::size_t n = end.dim();
  const Field f = x.field();
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("phi" + std::to_string(i));
  std::vector<std::vector<Vec>> products(n, std::vector<Vec>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) products[i][j] = end.coords(end[i] * end[j]);
  Vec unit = end.coords(Matrix::identity(x.dim(), f));
  std::vector<Vec> idem;
  if (idempotents.empty()) {
    idem.push_back(unit);
  } else {
    for (const auto& e : idempotents) idem.push_back(end.coords(e));
  }
  Algebra alg = Algebra::from_structure_constants(f, std::move(labels), products, std::move(unit), std::move(idem));
  return {std::move(alg), std::move(end)};
}

bool has_local_endomorphism_ring(const RightModule& x) {
  if (x.dim() == 0) return false;
  try {
    endomorphism_algebra(x, {});
    return true;
  } catch (const Error& e) {
    if (e.code() == ErrorCode::IdempotentViolation || e.code() == ErrorCode::NonBasic) return false;
    throw;
  }
}

bool indecomposables_isomorphic(const RightModule& x, const RightModule& y) {
  require_same_algebra(x, y);
  if (x.dim() != y.dim()) return false;
  if (x.dim() == 0) return true;
  HomSpace xy = hom_space(x, y);
  HomSpace yx = hom_space(y, x);
  // With End(X) local, X ≅ Y iff some composite X → Y → X is invertible, and
  // the composites span an ideal of End(X), so basis products decide it.
  for (const auto& f : xy.basis())
    for (const auto& g : yx.basis())
      if (!is_nilpotent(g * f)) return true;
  return false;
}

}  // namespace trimat
