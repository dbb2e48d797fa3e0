#include "trimat/homological/resolution.hpp"

#include <algorithm>
#include <utility>

#include "trimat/error.hpp"

namespace trimat {

ProjectiveCover projective_cover(const RightModule& x) {
  const Algebra& a = x.algebra();
  QuotientModule top = quotient_module(x, radical_submodule(x));
  std::vector<std::size_t> vertices;
  std::vector<Vec> gens;
  for (std::size_t v = 0; v < a.num_idempotents(); ++v) {
    Matrix e = idempotent_part(x, v);
    if (e.cols() == 0) continue;
    for (std::size_t p : pivot_columns(top.projection * e)) {
      vertices.push_back(v);
      gens.push_back(e.col(p));
    }
  }
  ProjModule cover(a, std::move(vertices));
  Matrix epi = hom_from_generators(cover, x, gens);
  if (rank(epi) != x.dim()) throw Error(ErrorCode::InvariantViolation, "projective cover is not surjective");
  return {std::move(cover), std::move(epi)};
}

Resolution projective_resolution(const RightModule& x, std::size_t bound) {
  const Algebra& a = x.algebra();
  Resolution res;
  res.module = x;
  if (x.dim() == 0) {
    res.finite = true;
    res.complex = ProjComplex(a, 0, {}, {});
    res.augmentation = Matrix(0, 0, x.field());
    return res;
  }
  ProjectiveCover c0 = projective_cover(x);
  res.augmentation = c0.epi;
  std::vector<ProjModule> terms = {c0.cover};  // P_0, P_1, …
  std::vector<ProjMap> maps;                   // d_n : P_n → P_{n-1}
  Matrix syzygy = kernel(c0.epi);              // Ω^1 inside P_0
  std::vector<RightModule> syzygies = {x};
  for (std::size_t n = 1;; ++n) {
    if (syzygy.cols() == 0) {
      res.finite = true;
      res.length = n - 1;
      break;
    }
    res.syzygy_dims.push_back(syzygy.cols());
    if (n > bound) {
      res.length = bound;
      break;
    }
    const ProjModule& prev = terms.back();
    syzygies.push_back(submodule(prev.module(), syzygy));
    ProjectiveCover c = projective_cover(syzygies.back());
    maps.push_back(from_matrix(c.cover, prev, syzygy * c.epi));
    syzygy = kernel(c.epi);
    terms.push_back(std::move(c.cover));
  }
  if (!res.finite) {
    for (std::size_t j = 1; j < syzygies.size() && !res.repeat; ++j)
      for (std::size_t i = 0; i < j; ++i)
        if (syzygies[i].dim() == syzygies[j].dim() && find_isomorphism(syzygies[i], syzygies[j])) {
          res.repeat = std::make_pair(i, j);
          break;
        }
  }
  const int lo = -static_cast<int>(terms.size()) + 1;
  std::reverse(terms.begin(), terms.end());
  std::reverse(maps.begin(), maps.end());
  res.complex = ProjComplex(a, lo, std::move(terms), std::move(maps));
  return res;
}

std::vector<ProjMap> lift_map(const Resolution& p, const Resolution& q, const Matrix& f) {
  const Field fld = f.field();
  std::vector<ProjMap> out;
  if (p.module.dim() == 0) return out;
  const std::size_t len = static_cast<std::size_t>(-p.complex.lo());
  for (std::size_t k = 0; k <= len; ++k) {
    const ProjModule& pk = p.term(k);
    const ProjModule& qk = q.term(k);
    if (qk.summands() == 0) {
      // Q has ended; the lift exists only if the map to lift is zero.
      bool zero = k == 0 ? (f * p.augmentation).is_zero() : out.back().is_zero();
      if (!zero) throw Error(ErrorCode::InvariantViolation, "comparison map has no target term");
      out.push_back(ProjMap(0, pk.summands(), p.complex.algebra()));
      continue;
    }
    Matrix target_map;  // P_k → Y or P_k → Q_{k−1}, to be factored through `cover`
    Matrix cover;
    if (k == 0) {
      target_map = f * p.augmentation;
      cover = q.augmentation;
    } else {
      target_map = to_matrix(p.term(k - 1), q.term(k - 1), out.back()) *
                   to_matrix(pk, p.term(k - 1), p.complex.d(-static_cast<int>(k)));
      cover = to_matrix(qk, q.term(k - 1), q.complex.d(-static_cast<int>(k)));
    }
    std::vector<Vec> images;
    for (std::size_t j = 0; j < pk.summands(); ++j) {
      Vec want = target_map.apply(pk.generator(j));
      Matrix basis = idempotent_part(qk.module(), pk.vertices()[j]);
      SolveResult s = solve_linear(cover * basis, Matrix::column(want, fld));
      if (!s.feasible) throw Error(ErrorCode::InvariantViolation, "comparison map does not lift");
      images.push_back((basis * s.particular).col(0));
    }
    out.push_back(from_matrix(pk, qk, hom_from_generators(pk, qk.module(), images)));
  }
  return out;
}

namespace {

// Hom(P, Y) ⊆ Y^r as the span of Y·e_{v_k} in each slot.
Matrix hom_ambient_basis(const ProjModule& p, const RightModule& y) {
  const std::size_t dy = y.dim();
  std::vector<Matrix> cols;
  for (std::size_t k = 0; k < p.summands(); ++k) {
    Matrix e = idempotent_part(y, p.vertices()[k]);
    Matrix placed(dy * p.summands(), e.cols(), y.field());
    placed.set_block(k * dy, 0, e);
    cols.push_back(std::move(placed));
  }
  if (cols.empty()) return Matrix(0, 0, y.field());
  return hstack(cols, dy * p.summands(), y.field());
}

// f ↦ f∘d for d : Q → P, in the ambient coordinates Y^{r_P} → Y^{r_Q}.
Matrix precompose(const ProjMap& d, const RightModule& y) {
  const std::size_t dy = y.dim();
  Matrix out(dy * d.cols(), dy * d.rows(), y.field());
  for (std::size_t l = 0; l < d.rows(); ++l)
    for (std::size_t k = 0; k < d.cols(); ++k)
      if (!is_zero(d(l, k))) out.set_block(k * dy, l * dy, y.act(d(l, k)));
  return out;
}

}  // namespace

ExtTable ext_groups(const Resolution& res, const RightModule& y, std::size_t bound) {
  require_same_algebra(res.module, y);
  if (!res.finite && res.length < bound + 1) {
    throw Error(ErrorCode::InvalidInput, "resolution too short for the requested Ext range");
  }
  // rank of δ^n : Hom(P_n, Y) → Hom(P_{n+1}, Y), and dim Hom(P_n, Y).
  auto hom_dim = [&](std::size_t n) { return hom_ambient_basis(res.term(n), y).cols(); };
  auto delta_rank = [&](std::size_t n) -> std::size_t {
    const ProjModule& pn = res.term(n);
    const ProjModule& pn1 = res.term(n + 1);
    if (pn.summands() == 0 || pn1.summands() == 0) return 0;
    Matrix basis = hom_ambient_basis(pn, y);
    if (basis.cols() == 0) return 0;
    ProjMap d = res.complex.d(-static_cast<int>(n) - 1);
    return rank(precompose(d, y) * basis);
  };
  ExtTable t;
  std::size_t prev_rank = 0;
  for (std::size_t n = 0; n <= bound; ++n) {
    std::size_t r = delta_rank(n);
    t.dims.push_back(hom_dim(n) - r - prev_rank);
    prev_rank = r;
  }
  t.exact_beyond = res.finite;
  return t;
}

ExtTable ext_groups(const RightModule& x, const RightModule& y, std::size_t bound) {
  require_same_algebra(x, y);
  return ext_groups(projective_resolution(x, bound + 1), y, bound);
}

std::vector<std::size_t> hom_complex_cohomology(const ProjComplex& p, const ProjComplex& q, int lo, int hi) {
  HomComplex h(p, q);
  std::vector<std::size_t> out;
  for (int n = lo; n <= hi; ++n) out.push_back(h.cohomology_dim(n));
  return out;
}

std::string PerMembership::to_string() const {
  return (finite ? "Finite(" : "Unknown(") + std::to_string(value) + ")";
}

PerMembership per_membership(const RightModule& x, std::size_t bound) {
  Resolution r = projective_resolution(x, bound);
  return {r.finite, r.length, r.repeat.has_value()};
}

bool in_add(const RightModule& x, const RightModule& t) {
  require_same_algebra(x, t);
  if (x.dim() == 0) return true;
  const Field f = x.field();
  HomSpace to_t = hom_space(x, t);
  HomSpace from_t = hom_space(t, x);
  // X is a summand of T^h iff id_X = Σ ψ_j φ_i for some coefficients.
  std::vector<Vec> cols;
  for (const auto& phi : to_t.basis())
    for (const auto& psi : from_t.basis()) {
      Matrix c = psi * phi;
      Vec v;
      for (std::size_t r = 0; r < c.rows(); ++r)
        for (std::size_t s = 0; s < c.cols(); ++s) v.push_back(c(r, s));
      cols.push_back(std::move(v));
    }
  if (cols.empty()) return false;
  const std::size_t n = x.dim() * x.dim();
  Matrix id = Matrix::identity(x.dim(), f);
  Vec rhs;
  for (std::size_t r = 0; r < x.dim(); ++r)
    for (std::size_t s = 0; s < x.dim(); ++s) rhs.push_back(id(r, s));
  return solve_linear(Matrix::from_columns(cols, n, f), Matrix::column(rhs, f)).feasible;
}

TiltingCertificate is_tilting_module(const RightModule& t, std::size_t bound) {
  TiltingCertificate cert;
  const Algebra& a = t.algebra();
  if (t.dim() == 0) {
    cert.failure = "zero module";
    return cert;
  }
  Resolution res = projective_resolution(t, bound + 1);
  cert.pd = {res.finite && res.length <= bound, res.finite ? res.length : bound, res.repeat.has_value()};
  if (!cert.pd.finite) cert.pd.value = bound;
  ExtTable ext = ext_groups(res, t, bound);
  cert.self_ext = ext.dims;
  cert.rigid = ext.exact_beyond && std::all_of(ext.dims.begin() + 1, ext.dims.end(), [](std::size_t d) { return d == 0; });
  if (!cert.pd.finite) {
    cert.failure = "projective dimension not finite within " + std::to_string(bound);
    return cert;
  }
  if (!cert.rigid) {
    for (std::size_t n = 1; n < ext.dims.size(); ++n)
      if (ext.dims[n] != 0) {
        cert.failure = "Ext^" + std::to_string(n) + "(T,T) has dimension " + std::to_string(ext.dims[n]);
        break;
      }
    return cert;
  }
  RightModule c = regular_module(a);
  for (std::size_t stage = 0; stage <= cert.pd.value; ++stage) {
    if (in_add(c, t)) {
      cert.coresolved = true;
      cert.last_cokernel_dim = c.dim();
      return cert;
    }
    HomSpace h = hom_space(c, t);
    if (h.dim() == 0) {
      throw Error(ErrorCode::ApproximationNotInjective, "stage " + std::to_string(stage) + ": Hom(-, T) vanishes");
    }
    Matrix ev = vstack(h.basis(), c.dim(), t.field());
    if (rank(ev) != c.dim()) {
      throw Error(ErrorCode::ApproximationNotInjective,
                  "stage " + std::to_string(stage) + ": evaluation map into T^" + std::to_string(h.dim()) +
                      " is not injective");
    }
    cert.coresolution.push_back(h.dim());
    RightModule th = direct_sum(std::vector<RightModule>(h.dim(), t), a);
    c = cokernel_module(th, ev).module;
  }
  cert.failure = "cokernel not in add T after " + std::to_string(cert.pd.value + 1) + " steps";
  return cert;
}

std::string GldimProbe::to_string() const {
  return (finite ? "Finite(" : "AtLeast(") + std::to_string(value) + ")";
}

GldimProbe gldim_probe(const Algebra& a, std::size_t bound) {
  GldimProbe g;
  g.finite = true;
  for (std::size_t v = 0; v < a.num_idempotents(); ++v) {
    PerMembership p = per_membership(simple_module(a, v), bound);
    g.simples.push_back(p);
    if (!p.finite) g.finite = false;
    if (p.finite) g.value = std::max(g.value, p.value);
  }
  if (!g.finite) g.value = bound;
  return g;
}

}  // namespace trimat
