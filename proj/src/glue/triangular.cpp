#include "trimat/glue/triangular.hpp"

#include <utility>

#include "trimat/error.hpp"
#include "trimat/linalg/linalg.hpp"

namespace trimat {

namespace {

// F_j : X → Y, the action of the basis element m_j read off f.
Matrix f_slice(const Matrix& f, std::size_t dx, std::size_t dm, std::size_t j) {
  Matrix out(f.rows(), dx, f.field());
  for (std::size_t i = 0; i < dx; ++i)
    for (std::size_t r = 0; r < f.rows(); ++r) out(r, i) = f(r, i * dm + j);
  return out;
}

}  // namespace

void TriangularData::validate() const {
  if (!m.left_algebra().same_as(r)) throw Error(ErrorCode::AlgebraMismatch, "M is not a left R-module");
  if (!m.right_algebra().same_as(s)) throw Error(ErrorCode::AlgebraMismatch, "M is not a right S-module");
  if (!(r.field() == s.field())) throw Error(ErrorCode::FieldMismatch, "R and S over different fields");
}

Vec TriangularAlgebra::embed_r(const Vec& r) const {
  Vec v = zero_vec(lambda.dim(), lambda.field());
  for (std::size_t i = 0; i < r.size(); ++i) v[i] = r[i];
  return v;
}

Vec TriangularAlgebra::embed_m(const Vec& m) const {
  Vec v = zero_vec(lambda.dim(), lambda.field());
  for (std::size_t i = 0; i < m.size(); ++i) v[m_offset() + i] = m[i];
  return v;
}

Vec TriangularAlgebra::embed_s(const Vec& s) const {
  Vec v = zero_vec(lambda.dim(), lambda.field());
  for (std::size_t i = 0; i < s.size(); ++i) v[s_offset() + i] = s[i];
  return v;
}

TriangularAlgebra build_triangular(const TriangularData& d) {
  d.validate();
  const Field f = d.r.field();
  const std::size_t nr = d.r.dim(), nm = d.m.dim(), ns = d.s.dim();
  const std::size_t n = nr + nm + ns;
  const std::size_t mo = nr, so = nr + nm;

  std::vector<std::vector<Vec>> products(n, std::vector<Vec>(n, zero_vec(n, f)));
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nr; ++j) {
      const Vec& p = d.r.product(i, j);
      for (std::size_t k = 0; k < nr; ++k) products[i][j][k] = p[k];
    }
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nm; ++j)
      for (std::size_t k = 0; k < nm; ++k) products[i][mo + j][mo + k] = d.m.left_action(i)(k, j);
  for (std::size_t j = 0; j < nm; ++j)
    for (std::size_t s = 0; s < ns; ++s)
      for (std::size_t k = 0; k < nm; ++k) products[mo + j][so + s][mo + k] = d.m.right_action(s)(k, j);
  for (std::size_t i = 0; i < ns; ++i)
    for (std::size_t j = 0; j < ns; ++j) {
      const Vec& p = d.s.product(i, j);
      for (std::size_t k = 0; k < ns; ++k) products[so + i][so + j][so + k] = p[k];
    }

  std::vector<std::string> labels;
  for (const auto& l : d.r.labels()) labels.push_back("R:" + l);
  for (std::size_t j = 0; j < nm; ++j) labels.push_back("M:m" + std::to_string(j));
  for (const auto& l : d.s.labels()) labels.push_back("S:" + l);

  TriangularAlgebra t;
  t.data = d;
  auto put = [&](std::size_t off, const Vec& v) {
    Vec out = zero_vec(n, f);
    for (std::size_t i = 0; i < v.size(); ++i) out[off + i] = v[i];
    return out;
  };
  t.e_r = put(0, d.r.unit());
  t.e_s = put(so, d.s.unit());
  Vec unit = add(t.e_r, t.e_s);
  std::vector<Vec> idem;
  for (const auto& e : d.r.idempotents()) idem.push_back(put(0, e));
  for (const auto& e : d.s.idempotents()) idem.push_back(put(so, e));
  t.lambda = Algebra::from_structure_constants(f, std::move(labels), std::move(products), std::move(unit),
                                               std::move(idem));
  return t;
}

void validate_triple(const TriangularData& d, const TripleModule& t) {
  if (!t.x.algebra().same_as(d.r)) throw Error(ErrorCode::AlgebraMismatch, "triple: X is not an R-module");
  if (!t.y.algebra().same_as(d.s)) throw Error(ErrorCode::AlgebraMismatch, "triple: Y is not an S-module");
  const std::size_t dm = d.m.dim();
  if (t.f.rows() != t.y.dim() || t.f.cols() != t.x.dim() * dm) {
    throw Error(ErrorCode::DimensionMismatch, "triple: f must be dim Y × (dim X · dim M)");
  }
  const Field fld = d.r.field();
  const Matrix ix = Matrix::identity(t.x.dim(), fld);
  const Matrix im = Matrix::identity(dm, fld);
  for (const auto& g : d.r.generators()) {
    if (t.f * kronecker(t.x.act(g), im) != t.f * kronecker(ix, d.m.left_act(g))) {
      throw Error(ErrorCode::ActionViolation, "triple: f is not balanced over R");
    }
  }
  for (const auto& g : d.s.generators()) {
    if (t.y.act(g) * t.f != t.f * kronecker(ix, d.m.right_act(g))) {
      throw Error(ErrorCode::ActionViolation, "triple: f is not S-linear");
    }
  }
}

bool is_triple_hom(const TriangularData& d, const TripleModule& source, const TripleModule& target,
                   const TripleHom& h) {
  if (h.alpha.rows() != target.x.dim() || h.alpha.cols() != source.x.dim()) return false;
  if (h.beta.rows() != target.y.dim() || h.beta.cols() != source.y.dim()) return false;
  if (!is_homomorphism(source.x, target.x, h.alpha) || !is_homomorphism(source.y, target.y, h.beta)) return false;
  return h.beta * source.f == target.f * kronecker(h.alpha, Matrix::identity(d.m.dim(), d.r.field()));
}

RightModule triple_to_lambda(const TriangularAlgebra& t, const TripleModule& c) {
  validate_triple(t.data, c);
  const Field f = t.lambda.field();
  const std::size_t dx = c.x.dim(), dy = c.y.dim(), dz = dx + dy, dm = t.m_dim();
  std::vector<Matrix> action;
  action.reserve(t.lambda.dim());
  for (std::size_t i = 0; i < t.r_dim(); ++i) {
    Matrix a(dz, dz, f);
    a.set_block(0, 0, c.x.action(i));
    action.push_back(std::move(a));
  }
  for (std::size_t j = 0; j < dm; ++j) {
    Matrix a(dz, dz, f);
    a.set_block(dx, 0, f_slice(c.f, dx, dm, j));
    action.push_back(std::move(a));
  }
  for (std::size_t k = 0; k < t.s_dim(); ++k) {
    Matrix a(dz, dz, f);
    a.set_block(dx, dx, c.y.action(k));
    action.push_back(std::move(a));
  }
  return RightModule::unchecked(t.lambda, std::move(action));
}

TripleView lambda_to_triple(const TriangularAlgebra& t, const RightModule& z) {
  if (!z.algebra().same_as(t.lambda)) throw Error(ErrorCode::AlgebraMismatch, "module is not over Λ");
  const Field f = z.field();
  const std::size_t dm = t.m_dim();
  Matrix bx = column_basis(z.act(t.e_r));
  Matrix by = column_basis(z.act(t.e_s));
  SubspaceBasis sx(bx), sy(by);
  const std::size_t dx = bx.cols(), dy = by.cols();

  std::vector<Matrix> xa, ya;
  for (std::size_t i = 0; i < t.r_dim(); ++i) xa.push_back(sx.coords(z.action(i) * bx));
  for (std::size_t k = 0; k < t.s_dim(); ++k) ya.push_back(sy.coords(z.action(t.s_offset() + k) * by));
  Matrix fm(dy, dx * dm, f);
  for (std::size_t j = 0; j < dm; ++j) {
    Matrix img = sy.coords(z.action(t.m_offset() + j) * bx);
    for (std::size_t i = 0; i < dx; ++i)
      for (std::size_t r = 0; r < dy; ++r) fm(r, i * dm + j) = img(r, i);
  }
  TripleView v{{RightModule::unchecked(t.data.r, std::move(xa)), RightModule::unchecked(t.data.s, std::move(ya)),
                std::move(fm)},
               hstack({bx, by}, z.dim(), f)};
  return v;
}

Matrix triple_hom_to_lambda(const TripleHom& h) { return direct_sum(h.alpha, h.beta); }

std::vector<TripleHom> triple_hom_space(const TriangularAlgebra& t, const TripleModule& source,
                                        const TripleModule& target) {
  HomSpace h = hom_space(triple_to_lambda(t, source), triple_to_lambda(t, target));
  const std::size_t dx = source.x.dim(), dy = source.y.dim();
  const std::size_t ex = target.x.dim(), ey = target.y.dim();
  std::vector<TripleHom> out;
  for (const auto& phi : h.basis()) out.push_back({phi.block(0, 0, ex, dx), phi.block(ex, dx, ey, dy)});
  return out;
}

RightModule i_inv(const TripleModule& c) { return c.x; }
RightModule j_inv(const TripleModule& c) { return c.y; }

TripleModule i_star(const TriangularData& d, const RightModule& a) {
  return {a, RightModule::zero(d.s), Matrix(0, a.dim() * d.m.dim(), a.field())};
}

TripleModule j_shriek(const TriangularData& d, const RightModule& b) {
  return {RightModule::zero(d.r), b, Matrix(b.dim(), 0, b.field())};
}

TripleModule i_shriek(const TriangularData& d, const RightModule& a) {
  TensorProduct tp = tensor_over(a, d.m);
  return {a, tp.module, tp.quotient.projection};
}

QuotientModule j_natural(const TriangularData&, const TripleModule& c) { return cokernel_module(c.y, c.f); }

KernelPart i_upper_shriek(const TriangularData& d, const TripleModule& c) {
  const std::size_t dx = c.x.dim(), dm = d.m.dim();
  Matrix basis;
  if (dm == 0 || c.y.dim() == 0) {
    basis = Matrix::identity(dx, c.x.field());
  } else {
    std::vector<Matrix> slices;
    for (std::size_t j = 0; j < dm; ++j) slices.push_back(f_slice(c.f, dx, dm, j));
    basis = kernel(vstack(slices, dx, c.x.field()));
  }
  return {submodule(c.x, basis), basis};
}

JStar j_star(const TriangularData& d, const RightModule& b) {
  HomSpace h = hom_space(d.m.as_right_module(), b);
  const Field f = b.field();
  const std::size_t n = h.dim(), dm = d.m.dim();
  // (φ·r)(m) = φ(r·m).
  std::vector<Matrix> action;
  for (std::size_t i = 0; i < d.r.dim(); ++i) {
    Matrix a(n, n, f);
    for (std::size_t k = 0; k < n; ++k) a.set_col(k, h.coords(h[k] * d.m.left_action(i)));
    action.push_back(std::move(a));
  }
  Matrix counit(b.dim(), n * dm, f);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t j = 0; j < dm; ++j)
      for (std::size_t r = 0; r < b.dim(); ++r) counit(r, k * dm + j) = h[k](r, j);
  return {{RightModule::unchecked(d.r, std::move(action)), b, std::move(counit)}, std::move(h)};
}

Matrix i_inv(const TripleHom& h) { return h.alpha; }
Matrix j_inv(const TripleHom& h) { return h.beta; }

TripleHom i_star(const TriangularData&, const Matrix& alpha, const RightModule&, const RightModule&) {
  return {alpha, Matrix(0, 0, alpha.field())};
}

TripleHom j_shriek(const TriangularData&, const Matrix& beta, const RightModule&, const RightModule&) {
  return {Matrix(0, 0, beta.field()), beta};
}

TripleHom i_shriek(const TriangularData& d, const RightModule& a, const RightModule& a2, const Matrix& alpha) {
  TensorProduct t1 = tensor_over(a, d.m);
  TensorProduct t2 = tensor_over(a2, d.m);
  return {alpha, tensor_map(t1, t2, alpha, d.m.dim())};
}

Matrix j_natural(const TriangularData& d, const TripleModule& c, const TripleModule& c2, const TripleHom& h) {
  QuotientModule q1 = j_natural(d, c);
  QuotientModule q2 = j_natural(d, c2);
  return q2.projection * h.beta * q1.section;
}

Matrix i_upper_shriek(const TriangularData& d, const TripleModule& c, const TripleModule& c2, const TripleHom& h) {
  KernelPart k1 = i_upper_shriek(d, c);
  KernelPart k2 = i_upper_shriek(d, c2);
  return SubspaceBasis(k2.basis).coords(h.alpha * k1.basis);
}

TripleHom j_star(const TriangularData& d, const RightModule& b, const RightModule& b2, const Matrix& beta) {
  JStar s1 = j_star(d, b);
  JStar s2 = j_star(d, b2);
  Matrix a(s2.hom.dim(), s1.hom.dim(), b.field());
  for (std::size_t k = 0; k < s1.hom.dim(); ++k) a.set_col(k, s2.hom.coords(beta * s1.hom[k]));
  return {a, beta};
}

}  // namespace trimat
