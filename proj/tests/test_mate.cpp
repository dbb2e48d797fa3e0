#include <functional>

#include "doctest.h"
#include "support.hpp"
#include "trimat/algebra/decompose.hpp"
#include "trimat/error.hpp"
#include "trimat/mate/mate.hpp"

using namespace trimat;
using namespace trimat::testing;

namespace {

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::InvalidInput;
}

// A right S-module as an F1-S-bimodule on which x acts as zero.
Bimodule over_f1(const RightModule& x) {
  const Field f = x.field();
  Matrix id = Matrix::identity(x.dim(), f);
  return Bimodule(fixtures::f1(f), x.algebra(), {id, Matrix(x.dim(), x.dim(), f)}, x.actions());
}

// (F1, F4, simple at vertex 2).
TriangularData f1_f4_simple() { return {fixtures::f1(), fixtures::f4(), over_f1(simple_module(fixtures::f4(), 1))}; }

TriangularData f1_f2_f3() { return {fixtures::f1(), fixtures::f2(), fixtures::f3()}; }

RightModule dual_regular(const Algebra& s) { return dual_bimodule(regular_bimodule(s)).as_right_module(); }

std::size_t total_dim(const TriangularData& d) { return d.r.dim() + d.m.dim() + d.s.dim(); }

// Builds, verifies and identifies the tilting complex for (d, T).
IdentificationReport pipeline(const TriangularData& d, const RightModule& t, const TriangularData& mate) {
  TiltingComplexData tc = build_tilting_complex(d, t);
  HomWindow w = verify_tilting_complex(tc, 4);
  CHECK(w.pass);
  CHECK(w.opposite == 0);
  IdentificationReport rep = end_ring_identification(tc, mate);
  CHECK(w.corner == mate.m.dim());
  CHECK(w.end_s == mate.r.dim());
  CHECK(w.end_r == mate.s.dim());
  return rep;
}

TriangularData random_hereditary_instance(std::mt19937& rng) {
  Algebra r = random_small_algebra(rng);
  Algebra s = rng() % 3 == 0 ? fixtures::kronecker() : fixtures::f4();
  return {r, s, random_bimodule(rng, r, s, 3)};
}

}  // namespace

TEST_CASE("tilting complex for (F1, F4, simple_2) with T = F4") {
  TriangularData d = f1_f4_simple();
  TiltingComplexData tc = build_tilting_complex(d, regular_module(d.s));
  // M is projective, so both parts live in degrees -1 and 0.
  CHECK(tc.complex.lo() == -1);
  CHECK(tc.complex.hi() == 0);
  CHECK(tc.homology == std::vector<std::size_t>{3, 2});
  CHECK(tc.part_r.lo() == -1);
  CHECK(tc.part_s.lo() == -1);
  CHECK(tc.part_s.hi() == -1);
  CHECK(tc.complex.total_dim() == tc.part_r.total_dim() + tc.part_s.total_dim());
}

TEST_CASE("tilting complex needs perfect M and T") {
  TriangularData d = f1_f2_f3();
  CHECK(code_of([&] { build_tilting_complex(d, regular_module(d.s)); }) == ErrorCode::NotPerfect);
  TriangularData e{fixtures::f1(), fixtures::f2(), Bimodule::zero(fixtures::f1(), fixtures::f2())};
  CHECK(code_of([&] { build_tilting_complex(e, fixtures::f5()); }) == ErrorCode::NotPerfect);
}

TEST_CASE("tilting complex with M = 0 has no interaction") {
  Algebra r = fixtures::f1(), s = fixtures::f4();
  TriangularData d{r, s, Bimodule::zero(r, s)};
  RightModule t = dual_regular(s);
  TiltingComplexData tc = build_tilting_complex(d, t);
  CHECK(tc.part_r.lo() == 0);
  HomWindow w = verify_tilting_complex(tc, 3);
  CHECK(w.pass);
  CHECK(w.corner == 0);
  CHECK(w.opposite == 0);
  CHECK(w.end_r == r.dim());
  CHECK(w.end_s == hom_space(t, t).dim());
  CHECK(w.at(0) == w.end_r + w.end_s);
  TriangularData mate = mate_general(d, t);
  CHECK(mate.m.dim() == 0);
  CHECK(end_ring_identification(tc, mate).pass);
}

TEST_CASE("(F1, F4, simple_2) with T = D(F4)") {
  TriangularData d = f1_f4_simple();
  RightModule t = dual_regular(d.s);
  TiltingComplexData tc = build_tilting_complex(d, t);
  HomWindow w = verify_tilting_complex(tc, 4);
  CHECK(w.pass);
  // Hom_S(M, DS) ≅ DM.
  CHECK(w.corner == 1);
  TriangularData mate = mate_general(d, t);
  CHECK(mate.r.dim() == 3);
  CHECK(mate.m.dim() == 1);
  CHECK(mate.s.dim() == 2);
  CHECK(total_dim(mate) == 6);
  IdentificationReport rep = end_ring_identification(tc, mate);
  CHECK(rep.pass);
  CHECK(rep.mate_dim == 6);
  CHECK(rep.products_checked == 36);
}

TEST_CASE("identification rejects a mate of the wrong shape") {
  TriangularData d = f1_f4_simple();
  TiltingComplexData tc = build_tilting_complex(d, regular_module(d.s));
  TriangularData wrong{d.s, d.r, Bimodule::zero(d.s, d.r)};
  CHECK(code_of([&] { end_ring_identification(tc, wrong); }) == ErrorCode::InvalidInput);
}

TEST_CASE("mate with T = S is (S, R, Hom_S(M, S))") {
  TriangularData d = f1_f4_simple();
  TriangularData mate = mate_general(d, regular_module(d.s));
  CHECK(mate.r.dim() == d.s.dim());
  CHECK(mate.r.num_idempotents() == d.s.num_idempotents());
  CHECK(mate.m.dim() == hom_space(d.m.as_right_module(), regular_module(d.s)).dim());
  CHECK(mate.s.same_as(d.r));
  CHECK(pipeline(d, regular_module(d.s), mate).pass);
}

TEST_CASE("mate with T = D(S) matches (S, R, DM) in dimension") {
  TriangularData d = f1_f4_simple();
  TriangularData general = mate_general(d, dual_regular(d.s));
  TriangularData artin = mate_artin(d);
  CHECK(general.r.dim() == artin.r.dim());
  CHECK(general.m.dim() == artin.m.dim());
  CHECK(general.s.dim() == artin.s.dim());
  CHECK(general.r.num_idempotents() == artin.r.num_idempotents());
}

TEST_CASE("mate_artin") {
  TriangularData d = f1_f4_simple();
  TriangularData mate = mate_artin(d);
  CHECK(mate.r.same_as(d.s));
  CHECK(mate.s.same_as(d.r));
  CHECK(mate.m.dim() == 1);
  for (std::size_t i = 0; i < d.s.dim(); ++i) CHECK(mate.m.left_action(i) == d.m.right_action(i).transpose());
  for (std::size_t i = 0; i < d.r.dim(); ++i) CHECK(mate.m.right_action(i) == d.m.left_action(i).transpose());

  CHECK(code_of([] { mate_artin(f1_f2_f3()); }) == ErrorCode::GldimUnknown);

  Algebra r = fixtures::f2(), s = fixtures::f4();
  TriangularData z{r, s, Bimodule::zero(r, s)};
  TriangularData swapped = mate_artin(z);
  CHECK(swapped.r.same_as(s));
  CHECK(swapped.s.same_as(r));
  CHECK(swapped.m.dim() == 0);
}

TEST_CASE("mate_artin transposes actions on random data") {
  std::mt19937 rng(41);
  for (int trial = 0; trial < 10; ++trial) {
    TriangularData d = random_hereditary_instance(rng);
    TriangularData mate = mate_artin(d);
    for (std::size_t i = 0; i < d.s.dim(); ++i) CHECK(mate.m.left_action(i) == d.m.right_action(i).transpose());
    for (std::size_t i = 0; i < d.r.dim(); ++i) CHECK(mate.m.right_action(i) == d.m.left_action(i).transpose());
    CHECK(total_dim(mate) == total_dim(d));
  }
}

TEST_CASE("hypothesis checks") {
  TriangularData d = f1_f2_f3();
  HypothesisReport bad = check_hypotheses(d, regular_module(d.s));
  CHECK(bad.verdict == Verdict::Fail);
  CHECK(bad.per_m.infinite);
  CHECK_FALSE(bad.per_m.finite);
  CHECK(code_of([&] { mate_general(d, regular_module(d.s)); }) == ErrorCode::HypothesisFailure);

  HypothesisReport rigid_fail = check_hypotheses(d, fixtures::f5());
  CHECK(rigid_fail.verdict == Verdict::Fail);
  CHECK(rigid_fail.tilting.self_ext.at(1) == 1);
  bool named = false;
  for (const auto& f : rigid_fail.failures) named = named || f.find("Ext^1(T_S, T_S)") != std::string::npos;
  CHECK(named);

  std::mt19937 rng(7);
  for (int trial = 0; trial < 8; ++trial) {
    TriangularData h = random_hereditary_instance(rng);
    HypothesisReport ok = check_hypotheses(h, dual_regular(h.s));
    CHECK(ok.verdict == Verdict::Pass);
    CHECK(ok.tilting.tilting());
  }
}

TEST_CASE("a non-tilting T is refused") {
  // S_1 over F4 is rigid of projective dimension 1 but not tilting.
  Algebra r = Algebra::ground(Field::rationals()), s = fixtures::f4();
  TriangularData d{r, s, Bimodule::zero(r, s)};
  HypothesisReport rep = check_hypotheses(d, simple_module(s, 0));
  CHECK(rep.verdict == Verdict::Fail);
}

TEST_CASE("non-basic T is reported") {
  Algebra s = fixtures::f4();
  TriangularData d{Algebra::ground(s.field()), s, Bimodule::zero(Algebra::ground(s.field()), s)};
  RightModule t = direct_sum(std::vector<RightModule>{regular_module(s), projective_module(s, 1)}, s);
  CHECK(code_of([&] { mate_general(d, t); }) == ErrorCode::NonBasic);
  Summand b = basic_part(t);
  CHECK(b.module.dim() == 3);
  CHECK(mate_general(d, b.module).r.dim() == 3);
}

TEST_CASE("double mate with regular T returns the original dimensions") {
  Algebra f4 = fixtures::f4();
  TriangularData d{f4, f4, regular_bimodule(f4)};
  TriangularData once = mate_general(d, regular_module(d.s));
  TriangularData twice = mate_general(once, regular_module(once.s));
  CHECK(twice.r.dim() == d.r.dim());
  CHECK(twice.m.dim() == d.m.dim());
  CHECK(twice.s.dim() == d.s.dim());
  CHECK(pipeline(d, regular_module(d.s), once).pass);
  CHECK(pipeline(once, regular_module(once.s), twice).pass);
}

TEST_CASE("dim of the mate equals dim of the original for T = S and T = D(S)") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 8; ++trial) {
    TriangularData d = random_hereditary_instance(rng);
    for (const RightModule& t : {regular_module(d.s), dual_regular(d.s)}) {
      TriangularData mate = mate_general(d, t);
      CHECK(total_dim(mate) == total_dim(d));
      IdentificationReport rep = pipeline(d, t, mate);
      CHECK(rep.pass);
      CHECK(rep.end_dim == total_dim(mate));
    }
  }
}

TEST_CASE("comparison lifts are chain maps") {
  std::mt19937 rng(5);
  Algebra s = fixtures::kronecker();
  for (int trial = 0; trial < 6; ++trial) {
    RightModule x = random_module(rng, s, 4), y = random_module(rng, s, 4);
    HomSpace h = hom_space(x, y);
    if (h.dim() == 0) continue;
    Resolution px = projective_resolution(x), py = projective_resolution(y);
    Matrix f = h[rng() % h.dim()];
    std::vector<ProjMap> c = lift_map(px, py, f);
    CHECK(py.augmentation * to_matrix(px.term(0), py.term(0), c[0]) == f * px.augmentation);
    for (std::size_t k = 1; k < c.size(); ++k) {
      if (py.term(k).summands() == 0) {
        CHECK(c[k - 1].is_zero());
        continue;
      }
      Matrix lhs = to_matrix(py.term(k), py.term(k - 1), py.complex.d(-static_cast<int>(k))) *
                   to_matrix(px.term(k), py.term(k), c[k]);
      Matrix rhs = to_matrix(px.term(k - 1), py.term(k - 1), c[k - 1]) *
                   to_matrix(px.term(k), px.term(k - 1), px.complex.d(-static_cast<int>(k)));
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("one-point extension and coextension") {
  Field q = Field::rationals();
  Algebra k = Algebra::ground(q);
  Algebra r = fixtures::f1();
  Bimodule n = bimodule_from_right_module(simple_module(r, 0));
  TriangularData ext = one_point_extension(r, n);
  TriangularData coext = one_point_coextension(r, n);
  CHECK(total_dim(ext) == 4);
  CHECK(total_dim(coext) == 4);
  CHECK(ext.r.dim() == 1);
  CHECK(coext.s.dim() == 1);

  Bimodule zero = Bimodule::zero(k, r);
  CHECK(build_triangular(one_point_extension(r, zero)).lambda.dim() == product_algebra(k, r).dim());
  CHECK(build_triangular(one_point_coextension(r, zero)).lambda.dim() == product_algebra(r, k).dim());

  Bimodule wrong = over_f1(simple_module(fixtures::f4(), 1));
  CHECK(code_of([&] { one_point_extension(fixtures::f4(), wrong); }) == ErrorCode::NotDivisionCase);
}

TEST_CASE("[N]R and R[N] are related by the mate construction") {
  Algebra r = fixtures::f4();
  for (std::size_t v = 0; v < 2; ++v) {
    Bimodule n = bimodule_from_right_module(simple_module(r, v));
    TriangularData coext = one_point_coextension(r, n);
    TriangularData ext = one_point_extension(r, n);
    RightModule t = regular_module(coext.s);
    TriangularData mate = mate_general(coext, t);
    CHECK(mate.r.dim() == ext.r.dim());
    CHECK(mate.m.dim() == ext.m.dim());
    CHECK(mate.s.same_as(ext.s));
    // Hom_k(DN, k) recovers N with the same right R-action.
    for (std::size_t i = 0; i < r.dim(); ++i) CHECK(mate.m.right_action(i) == ext.m.right_action(i));
    IdentificationReport rep = pipeline(coext, t, mate);
    CHECK(rep.pass);
  }
}

TEST_CASE("End of the tilting complex for T = D(S) is the mate (S, R, DM)") {
  TriangularData d = f1_f4_simple();
  TiltingComplexData tc = build_tilting_complex(d, dual_regular(d.s));
  TriangularData mate = mate_artin(d);
  IdentificationReport rep = end_ring_identification(tc, mate, artin_realization(d));
  CHECK(rep.pass);
  CHECK(rep.mate_dim == 6);

  std::mt19937 rng(77);
  for (int trial = 0; trial < 6; ++trial) {
    TriangularData h = random_hereditary_instance(rng);
    TiltingComplexData th = build_tilting_complex(h, dual_regular(h.s));
    CHECK(end_ring_identification(th, mate_artin(h), artin_realization(h)).pass);
  }
}

TEST_CASE("a wrong realization is caught") {
  TriangularData d = f1_f4_simple();
  TiltingComplexData tc = build_tilting_complex(d, dual_regular(d.s));
  MateRealization bad = artin_realization(d);
  std::swap(bad.end_images[0], bad.end_images[1]);
  CHECK(code_of([&] { end_ring_identification(tc, mate_artin(d), bad); }) == ErrorCode::IdentificationFailure);
}
