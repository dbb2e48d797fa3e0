#include <algorithm>
#include <utility>

#include "trimat/error.hpp"
#include "trimat/mate/mate.hpp"

namespace trimat {

ProjModule shriek_s(const TriangularAlgebra& t, const ProjModule& p) {
  std::vector<std::size_t> v;
  for (std::size_t u : p.vertices()) v.push_back(t.s_vertex(u));
  return ProjModule(t.lambda, std::move(v));
}

ProjMap shriek_s(const TriangularAlgebra& t, const ProjMap& f) {
  ProjMap out(f.rows(), f.cols(), t.lambda);
  for (std::size_t l = 0; l < f.rows(); ++l)
    for (std::size_t k = 0; k < f.cols(); ++k) out(l, k) = t.embed_s(f(l, k));
  return out;
}

ProjComplex shriek_s(const TriangularAlgebra& t, const ProjComplex& c) {
  if (c.empty()) return ProjComplex(t.lambda, 0, {}, {});
  std::vector<ProjModule> terms;
  std::vector<ProjMap> diffs;
  for (int n = c.lo(); n <= c.hi(); ++n) {
    terms.push_back(shriek_s(t, c.term(n)));
    if (n < c.hi()) diffs.push_back(shriek_s(t, c.d(n)));
  }
  return ProjComplex(t.lambda, c.lo(), std::move(terms), std::move(diffs));
}

ProjModule shriek_r(const TriangularAlgebra& t, const ProjModule& p) {
  return ProjModule(t.lambda, p.vertices());
}

ProjMap shriek_r(const TriangularAlgebra& t, const ProjMap& f) {
  ProjMap out(f.rows(), f.cols(), t.lambda);
  for (std::size_t l = 0; l < f.rows(); ++l)
    for (std::size_t k = 0; k < f.cols(); ++k) out(l, k) = t.embed_r(f(l, k));
  return out;
}

namespace {

std::vector<std::size_t> r_vertices(const TriangularAlgebra& t) {
  std::vector<std::size_t> v(t.data.r.num_idempotents());
  for (std::size_t u = 0; u < v.size(); ++u) v[u] = u;
  return v;
}

// ⋯ → j_!Q_1 → j_!Q_0 → i_!R, the last map sending the generator of summand
// k to the augmentation image in M ⊆ e_R Λ split along the e_u.
ProjComplex resolve_r_part(const TriangularAlgebra& t, const Resolution& res_m) {
  const Algebra& lam = t.lambda;
  ProjModule top(lam, r_vertices(t));
  if (res_m.module.dim() == 0) return ProjComplex::stalk(top, 0);
  const ProjComplex& q = res_m.complex;
  std::vector<ProjModule> terms;
  std::vector<ProjMap> diffs;
  for (int n = q.lo(); n <= 0; ++n) {
    terms.push_back(shriek_s(t, q.term(n)));
    if (n < 0) diffs.push_back(shriek_s(t, q.d(n)));
  }
  const ProjModule& q0 = q.term(0);
  const Bimodule& m = t.data.m;
  ProjMap delta(top.summands(), q0.summands(), lam);
  for (std::size_t k = 0; k < q0.summands(); ++k) {
    Vec image = res_m.augmentation.apply(q0.generator(k));
    for (std::size_t u = 0; u < top.summands(); ++u)
      delta(u, k) = t.embed_m(m.left_act(t.data.r.idempotents()[u]).apply(image));
  }
  diffs.push_back(std::move(delta));
  terms.push_back(std::move(top));
  return ProjComplex(lam, q.lo() - 1, std::move(terms), std::move(diffs));
}

}  // namespace

TiltingComplexData build_tilting_complex(const TriangularData& d, const RightModule& t_s, std::size_t bound) {
  d.validate();
  if (!t_s.algebra().same_as(d.s)) throw Error(ErrorCode::AlgebraMismatch, "T_S is not a module over S");
  TiltingComplexData out;
  out.lambda = build_triangular(d);
  out.t_s = t_s;
  out.res_m = projective_resolution(d.m.as_right_module(), bound);
  if (!out.res_m.finite) {
    throw Error(ErrorCode::NotPerfect, "M_S: " + PerMembership{false, bound, out.res_m.repeat.has_value()}.to_string());
  }
  out.res_t = projective_resolution(t_s, bound);
  if (!out.res_t.finite) {
    throw Error(ErrorCode::NotPerfect, "T_S: " + PerMembership{false, bound, out.res_t.repeat.has_value()}.to_string());
  }
  out.part_r = resolve_r_part(out.lambda, out.res_m);
  out.part_s = shriek_s(out.lambda, out.res_t.complex).shift(1);
  out.complex = direct_sum(out.part_r, out.part_s);
  out.complex.validate();
  for (int n = out.complex.lo(); n <= out.complex.hi(); ++n) {
    const std::size_t h = out.complex.homology_dim(n);
    out.homology.push_back(h);
    const std::size_t expected = n == 0 ? d.r.dim() : n == -1 ? t_s.dim() : 0;
    if (h != expected) {
      throw Error(ErrorCode::InvariantViolation, "H^" + std::to_string(n) + " has dimension " + std::to_string(h) +
                                                     ", expected " + std::to_string(expected));
    }
  }
  return out;
}

HomWindow verify_tilting_complex(const TiltingComplexData& t, int window) {
  HomWindow w;
  w.lo = -window;
  HomComplex h(t.complex, t.complex);
  w.pass = true;
  for (int n = -window; n <= window; ++n) {
    w.dims.push_back(h.cohomology_dim(n));
    if (n != 0 && w.dims.back() != 0) w.pass = false;
  }
  w.end_r = HomComplex(t.part_r, t.part_r).cohomology_dim(0);
  w.end_s = HomComplex(t.part_s, t.part_s).cohomology_dim(0);
  w.corner = HomComplex(t.part_r, t.part_s).cohomology_dim(0);
  w.opposite = HomComplex(t.part_s, t.part_r).cohomology_dim(0);
  return w;
}

}  // namespace trimat
