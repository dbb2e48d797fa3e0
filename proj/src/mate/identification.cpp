#include <utility>

#include "trimat/error.hpp"
#include "trimat/mate/mate.hpp"

namespace trimat {

namespace {

enum class Part { R, S };

// Degree-0 chain family on T with the given blocks between the two parts.
class FamilyBuilder {
 public:
  explicit FamilyBuilder(const TiltingComplexData& t) : t_(t) {}

  void place(ChainFamily& f, int degree, Part from, Part to, const ProjMap& block) const {
    const ProjModule& term = t_.complex.term(degree);
    auto it = f.find(degree);
    if (it == f.end()) it = f.emplace(degree, zero_map(term, term)).first;
    const std::size_t row0 = to == Part::S ? t_.part_r.term(degree).summands() : 0;
    const std::size_t col0 = from == Part::S ? t_.part_r.term(degree).summands() : 0;
    for (std::size_t l = 0; l < block.rows(); ++l)
      for (std::size_t k = 0; k < block.cols(); ++k) it->second(row0 + l, col0 + k) = block(l, k);
  }

  // Lifts c_k : P_k → Q_k placed at degree −1 − k with sign (−1)^k when
  // `alternate`.
  void place_lifts(ChainFamily& f, const std::vector<ProjMap>& lifts, Part from, Part to, bool alternate) const {
    const Field fld = t_.lambda.lambda.field();
    for (std::size_t k = 0; k < lifts.size(); ++k) {
      if (lifts[k].rows() == 0 || lifts[k].cols() == 0) continue;
      ProjMap block = shriek_s(t_.lambda, lifts[k]);
      if (alternate && k % 2 == 1) block *= Scalar::from(fld, -1);
      place(f, -1 - static_cast<int>(k), from, to, block);
    }
  }

 private:
  const TiltingComplexData& t_;
};

}  // namespace

MateRealization hom_basis_realization(const TiltingComplexData& t) {
  return {hom_space(t.t_s, t.t_s).basis(), hom_space(t.lambda.data.m.as_right_module(), t.t_s).basis()};
}

MateRealization artin_realization(const TriangularData& d) {
  const Algebra& s = d.s;
  const Bimodule ds = dual_bimodule(regular_bimodule(s));
  MateRealization out;
  for (std::size_t i = 0; i < s.dim(); ++i) out.end_images.push_back(ds.left_action(i));
  const Field f = s.field();
  for (std::size_t j = 0; j < d.m.dim(); ++j) {
    Matrix psi(s.dim(), d.m.dim(), f);
    for (std::size_t k = 0; k < s.dim(); ++k)
      for (std::size_t c = 0; c < d.m.dim(); ++c) psi(k, c) = d.m.right_action(k)(j, c);
    out.hom_images.push_back(std::move(psi));
  }
  return out;
}

IdentificationReport end_ring_identification(const TiltingComplexData& t, const TriangularData& mate) {
  return end_ring_identification(t, mate, hom_basis_realization(t));
}

IdentificationReport end_ring_identification(const TiltingComplexData& t, const TriangularData& mate,
                                             const MateRealization& realization) {
  const TriangularData& d = t.lambda.data;
  const RightModule m = d.m.as_right_module();
  if (mate.r.dim() != realization.end_images.size() || mate.m.dim() != realization.hom_images.size() ||
      !mate.s.same_as(d.r)) {
    throw Error(ErrorCode::InvalidInput, "mate does not have the shape (End_S(T_S), R, Hom_S(M, T_S))");
  }
  for (const auto& e : realization.end_images)
    if (!is_homomorphism(t.t_s, t.t_s, e)) throw Error(ErrorCode::InvalidInput, "image is not an endomorphism of T_S");
  for (const auto& h : realization.hom_images)
    if (!is_homomorphism(m, t.t_s, h)) throw Error(ErrorCode::InvalidInput, "image is not a map M_S → T_S");
  TriangularAlgebra mt = build_triangular(mate);
  const Algebra& lam = t.lambda.lambda;
  const Algebra& r = d.r;
  FamilyBuilder fb(t);

  std::vector<ChainFamily> phi;
  for (const auto& e : realization.end_images) {
    ChainFamily f;
    fb.place_lifts(f, lift_map(t.res_t, t.res_t, e), Part::S, Part::S, false);
    phi.push_back(std::move(f));
  }
  for (const auto& h : realization.hom_images) {
    ChainFamily f;
    fb.place_lifts(f, lift_map(t.res_m, t.res_t, h), Part::R, Part::S, true);
    phi.push_back(std::move(f));
  }
  const std::size_t nr = r.num_idempotents();
  for (std::size_t b = 0; b < r.dim(); ++b) {
    ChainFamily f;
    ProjMap left(nr, nr, lam);
    const Vec rb = r.basis_vec(b);
    for (std::size_t u = 0; u < nr; ++u)
      for (std::size_t v = 0; v < nr; ++v)
        left(u, v) = t.lambda.embed_r(r.mul(r.mul(r.idempotents()[u], rb), r.idempotents()[v]));
    fb.place(f, 0, Part::R, Part::R, left);
    fb.place_lifts(f, lift_map(t.res_m, t.res_m, d.m.left_action(b)), Part::R, Part::R, false);
    phi.push_back(std::move(f));
  }

  HomComplex h(t.complex, t.complex);
  HomComplex::Cohomology h0 = h.cohomology(0);
  IdentificationReport rep;
  rep.mate_dim = mt.lambda.dim();
  rep.end_dim = h0.dim();
  if (rep.mate_dim != rep.end_dim) {
    throw Error(ErrorCode::IdentificationFailure, "dim of mate is " + std::to_string(rep.mate_dim) +
                                                      " but dim End(T) is " + std::to_string(rep.end_dim));
  }
  const Field fld = lam.field();
  std::vector<Vec> classes;
  for (std::size_t i = 0; i < phi.size(); ++i) {
    Vec flat = h.flatten(0, phi[i]);
    if (!is_zero(h.differential(0).apply(flat))) {
      throw Error(ErrorCode::IdentificationFailure, "image of basis element " + mt.lambda.labels()[i] +
                                                        " is not a chain map");
    }
    classes.push_back(h0.class_of(flat));
  }
  Matrix class_matrix = Matrix::from_columns(classes, h0.dim(), fld);
  if (rank(class_matrix) != rep.mate_dim) {
    throw Error(ErrorCode::IdentificationFailure, "images of the mate basis are linearly dependent in End(T)");
  }
  for (std::size_t i = 0; i < phi.size(); ++i)
    for (std::size_t j = 0; j < phi.size(); ++j) {
      Vec composite = h0.class_of(h.flatten(0, compose(lam, phi[i], 0, phi[j], 0)));
      Vec expected = class_matrix.apply(mt.lambda.product(i, j));
      if (composite != expected) {
        throw Error(ErrorCode::IdentificationFailure, "Φ(xy) ≠ Φ(x)∘Φ(y) for x = " + mt.lambda.labels()[i] +
                                                          ", y = " + mt.lambda.labels()[j]);
      }
      ++rep.products_checked;
    }
  rep.pass = true;
  return rep;
}

}  // namespace trimat
