#include <functional>

#include "doctest.h"
#include "support.hpp"
#include "trimat/error.hpp"
#include "trimat/homological/resolution.hpp"

using namespace trimat;
using namespace trimat::testing;

namespace {

Algebra a3(bool with_relation, Field f = Field::rationals()) {
  QuiverPresentation q;
  q.vertices = {"1", "2", "3"};
  q.arrows = {{"a", 0, 1}, {"b", 1, 2}};
  if (with_relation) q.relations = {{{Scalar(1), {0, 1}}}};
  q.nilpotency_bound = 3;
  return Algebra::from_quiver(q, f);
}

// Ext^1(X, Y) from 0 → Hom(X, Y) → Hom(P_0, Y) → Hom(ΩX, Y) → Ext^1 → 0,
// using nothing but hom_space, and Ext^n by dimension shifting.
std::size_t ext_by_shifting(const RightModule& x, const RightModule& y, std::size_t n) {
  if (x.dim() == 0) return 0;
  if (n == 0) return hom_space(x, y).dim();
  ProjectiveCover c = projective_cover(x);
  RightModule omega = kernel_module(c.cover.module(), c.epi);
  if (n > 1) return ext_by_shifting(omega, y, n - 1);
  return hom_space(omega, y).dim() + hom_space(x, y).dim() - hom_space(c.cover.module(), y).dim();
}

Algebra finite_gldim_algebra(std::mt19937& rng) {
  std::vector<Algebra> menu = {fixtures::f4(), a3(false), a3(true), fixtures::kronecker(),
                               product_algebra(fixtures::f4(), Algebra::ground(Field::rationals()))};
  return menu[rng() % menu.size()];
}

bool surjection_exists(std::mt19937& rng, const RightModule& x, const std::vector<std::size_t>& vertices) {
  ProjModule p(x.algebra(), vertices);
  for (int trial = 0; trial < 6; ++trial) {
    std::vector<Vec> images;
    for (std::size_t v : vertices) {
      Matrix e = idempotent_part(x, v);
      images.push_back(e.apply(random_matrix(rng, e.cols(), 1, x.field(), -5, 5).col(0)));
    }
    if (rank(hom_from_generators(p, x, images)) == x.dim()) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("ProjModule coordinates and ProjMap matrices") {
  Algebra a = fixtures::f4();
  ProjModule p(a, {0, 1, 0});
  CHECK(p.dim() == 5);
  CHECK(p.multiplicity(0) == 2);
  for (std::size_t k = 0; k < p.summands(); ++k) {
    CHECK(p.component(p.generator(k), k) == a.idempotents()[p.vertices()[k]]);
  }
  // The arrow a ∈ e_1 A e_2 gives P_2 → P_1; composite with identities.
  ProjModule p2(a, {1});
  ProjModule p1(a, {0});
  ProjMap f(1, 1, a);
  f(0, 0) = a.arrows()[0].element;
  CHECK(is_valid_map(p2, p1, f));
  Matrix m = to_matrix(p2, p1, f);
  CHECK(is_homomorphism(p2.module(), p1.module(), m));
  CHECK(from_matrix(p2, p1, m) == f);
  CHECK(compose(a, identity_map(p1), f) == f);
  ProjMap bad(1, 1, a);
  bad(0, 0) = a.arrows()[0].element;
  CHECK_FALSE(is_valid_map(p1, p2, bad));
}

TEST_CASE("projective covers") {
  SUBCASE("indecomposable projective covers itself") {
    Algebra a = fixtures::f4();
    for (std::size_t i = 0; i < 2; ++i) {
      ProjectiveCover c = projective_cover(projective_module(a, i));
      CHECK(c.cover.vertices() == std::vector<std::size_t>{i});
      CHECK(rank(c.epi) == c.cover.dim());
      CHECK(c.epi.rows() == c.epi.cols());
    }
  }
  SUBCASE("simple over k[y]/(y^3)") {
    ProjectiveCover c = projective_cover(fixtures::f5());
    CHECK(c.cover.dim() == 3);
    CHECK(kernel(c.epi).cols() == 2);
  }
  SUBCASE("simple at vertex 1 of 1 -> 2") {
    Algebra a = fixtures::f4();
    ProjectiveCover c = projective_cover(simple_module(a, 0));
    CHECK(c.cover.vertices() == std::vector<std::size_t>{0});
    CHECK(c.cover.dim() == 2);
    RightModule k = kernel_module(c.cover.module(), c.epi);
    CHECK(find_isomorphism(k, simple_module(a, 1)).has_value());
  }
}

TEST_CASE("projective covers are minimal") {
  std::mt19937 rng(21);
  for (int trial = 0; trial < 15; ++trial) {
    Algebra a = trial % 2 == 0 ? finite_gldim_algebra(rng) : random_small_algebra(rng);
    RightModule x = random_module(rng, a, 4);
    if (x.dim() == 0) continue;
    ProjectiveCover c = projective_cover(x);
    CHECK(kernel(c.epi).cols() + x.dim() == c.cover.dim());
    // Brute force over multiplicity vectors bounded by dim X.
    const std::size_t n = a.num_idempotents();
    std::size_t best = SIZE_MAX;
    std::vector<std::size_t> m(n, 0);
    std::function<void(std::size_t)> rec = [&](std::size_t v) {
      if (v == n) {
        std::vector<std::size_t> vertices;
        std::size_t dim = 0;
        for (std::size_t u = 0; u < n; ++u)
          for (std::size_t c2 = 0; c2 < m[u]; ++c2) {
            vertices.push_back(u);
            dim += projective_module(a, u).dim();
          }
        if (dim < best && surjection_exists(rng, x, vertices)) best = dim;
        return;
      }
      for (m[v] = 0; m[v] <= x.dim(); ++m[v]) rec(v + 1);
      m[v] = 0;
    };
    rec(0);
    CHECK(best == c.cover.dim());
  }
}

TEST_CASE("projective resolutions") {
  SUBCASE("projective module") {
    Resolution r = projective_resolution(projective_module(fixtures::f4(), 0));
    CHECK(r.finite);
    CHECK(r.length == 0);
  }
  SUBCASE("simple over k[y]/(y^3) is periodic") {
    Resolution r = projective_resolution(fixtures::f5());
    CHECK_FALSE(r.finite);
    CHECK(r.length == kDefaultBound);
    for (std::size_t i = 0; i < r.syzygy_dims.size(); ++i) CHECK(r.syzygy_dims[i] == (i % 2 == 0 ? 2u : 1u));
    CHECK_NOTHROW(r.complex.validate());
  }
  SUBCASE("simple at the source of 1 -> 2") {
    Algebra a = fixtures::f4();
    Resolution r = projective_resolution(simple_module(a, 0));
    CHECK(r.finite);
    CHECK(r.length == 1);
    CHECK(r.term(0).vertices() == std::vector<std::size_t>{0});
    CHECK(r.term(1).vertices() == std::vector<std::size_t>{1});
  }
  SUBCASE("A3 with a zero relation has a simple of pd 2") {
    Resolution r = projective_resolution(simple_module(a3(true), 0));
    CHECK(r.finite);
    CHECK(r.length == 2);
  }
}

TEST_CASE("resolutions are exact complexes on random modules") {
  std::mt19937 rng(22);
  for (int trial = 0; trial < 20; ++trial) {
    Algebra a = random_small_algebra(rng);
    RightModule x = random_module(rng, a, 5);
    Resolution r = projective_resolution(x, 6);
    CHECK_NOTHROW(r.complex.validate());
    // Exact in negative degrees; H^0 is X.
    for (int n = r.complex.lo() + 1; n < 0; ++n) CHECK(r.complex.homology_dim(n) == 0);
    if (!r.complex.empty()) {
      CHECK(r.complex.homology_dim(0) == x.dim());
      CHECK(rank(r.augmentation) == x.dim());
      CHECK((r.augmentation * r.complex.d_matrix(-1)).is_zero());
    }
  }
}

TEST_CASE("Ext examples") {
  Algebra a = fixtures::f4();
  RightModule s1 = simple_module(a, 0), s2 = simple_module(a, 1);
  CHECK(ext_groups(s1, s2, 3).dims == std::vector<std::size_t>{0, 1, 0, 0});
  CHECK(ext_groups(s2, s1, 3).dims == std::vector<std::size_t>{0, 0, 0, 0});
  CHECK(ext_groups(s1, s1, 3).dims == std::vector<std::size_t>{1, 0, 0, 0});
  CHECK(ext_groups(s1, s2, 3).exact_beyond);

  ExtTable t = ext_groups(fixtures::f5(), fixtures::f5(), 6);
  CHECK_FALSE(t.exact_beyond);
  for (std::size_t n = 0; n <= 6; ++n) CHECK(t.dims[n] == 1);
}

TEST_CASE("Ext agrees with dimension shifting and Ext^0 with Hom") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 25; ++trial) {
    Algebra a = random_small_algebra(rng);
    RightModule x = random_module(rng, a, 4), y = random_module(rng, a, 4);
    ExtTable t = ext_groups(x, y, 3);
    CHECK(t.dims[0] == hom_space(x, y).dim());
    for (std::size_t n = 1; n <= 3; ++n) CHECK(t.dims[n] == ext_by_shifting(x, y, n));
  }
}

TEST_CASE("Ext over a prime field") {
  Field f2 = Field::prime(2);
  Algebra a = a3(true, f2);
  RightModule s1 = simple_module(a, 0), s3 = simple_module(a, 2);
  CHECK(ext_groups(s1, s3, 3).dims == std::vector<std::size_t>{0, 0, 1, 0});
}

TEST_CASE("Hom in the homotopy category") {
  Algebra a = fixtures::f4();
  for (std::size_t i = 0; i < 2; ++i) {
    ProjComplex p = ProjComplex::stalk(ProjModule(a, {i}));
    std::vector<std::size_t> dims = hom_complex_cohomology(p, p, -2, 2);
    CHECK(dims == std::vector<std::size_t>{0, 0, a.peirce(i, i).dim(), 0, 0});
  }
  ProjComplex p1 = ProjComplex::stalk(ProjModule(a, {1}));
  ProjComplex q = ProjComplex::stalk(ProjModule(a, {0})).shift(5);
  std::vector<std::size_t> dims = hom_complex_cohomology(p1, q, -8, 8);
  // Hom(P_2, P_1) = e_1 A e_2 is spanned by the arrow.
  for (int n = -8; n <= 8; ++n) CHECK(dims[static_cast<std::size_t>(n + 8)] == (n == -5 ? 1u : 0u));
  // Hom(P_1, P_2) = e_2 A e_1 = 0.
  ProjComplex q1 = ProjComplex::stalk(ProjModule(a, {1})).shift(5);
  ProjComplex p0 = ProjComplex::stalk(ProjModule(a, {0}));
  dims = hom_complex_cohomology(p0, q1, -8, 8);
  for (int n = -8; n <= 8; ++n) CHECK(dims[static_cast<std::size_t>(n + 8)] == 0);
}

TEST_CASE("Hom between resolutions reproduces Ext") {
  std::mt19937 rng(24);
  for (int trial = 0; trial < 15; ++trial) {
    Algebra a = finite_gldim_algebra(rng);
    RightModule x = random_module(rng, a, 5), y = random_module(rng, a, 5);
    Resolution rx = projective_resolution(x), ry = projective_resolution(y);
    REQUIRE(rx.finite);
    REQUIRE(ry.finite);
    ExtTable t = ext_groups(x, y, 4);
    std::vector<std::size_t> dims = hom_complex_cohomology(rx.complex, ry.complex, 0, 4);
    CHECK(dims == t.dims);
  }
}

TEST_CASE("shifting the target shifts Hom dimensions") {
  std::mt19937 rng(25);
  for (int trial = 0; trial < 10; ++trial) {
    Algebra a = finite_gldim_algebra(rng);
    ProjComplex p = projective_resolution(random_module(rng, a, 4)).complex;
    ProjComplex q = projective_resolution(random_module(rng, a, 4)).complex;
    const int m = static_cast<int>(rng() % 5) - 2;
    std::vector<std::size_t> base = hom_complex_cohomology(p, q, -6, 6);
    std::vector<std::size_t> shifted = hom_complex_cohomology(p, q.shift(m), -6 - m, 6 - m);
    CHECK(base == shifted);
  }
}

TEST_CASE("cohomology classes and composition") {
  Algebra a = a3(false);
  ProjComplex p = projective_resolution(simple_module(a, 0)).complex;
  HomComplex h(p, p);
  HomComplex::Cohomology c = h.cohomology(0);
  CHECK(c.dim() == 1);
  // Identity chain map is a cycle in the class of a nonzero multiple.
  ChainFamily id;
  for (int i = p.lo(); i <= p.hi(); ++i) id.emplace(i, identity_map(p.term(i)));
  Vec v = h.flatten(0, id);
  CHECK(is_zero(h.differential(0).apply(v)));
  CHECK_FALSE(is_zero(c.class_of(v)));
  ChainFamily sq = compose(a, id, 0, id, 0);
  CHECK(h.flatten(0, sq) == v);
}

TEST_CASE("direct sums of complexes") {
  Algebra a = a3(true);
  ProjComplex p = projective_resolution(simple_module(a, 0)).complex;
  ProjComplex q = projective_resolution(simple_module(a, 1)).complex.shift(1);
  ProjComplex s = direct_sum(p, q);
  CHECK_NOTHROW(s.validate());
  CHECK(s.total_dim() == p.total_dim() + q.total_dim());
  for (int n = -4; n <= 2; ++n) CHECK(s.homology_dim(n) == p.homology_dim(n) + q.homology_dim(n));
}

TEST_CASE("perfect membership") {
  CHECK(per_membership(projective_module(fixtures::f4(), 1)).to_string() == "Finite(0)");
  RightModule m = fixtures::f3().as_right_module();
  CHECK(per_membership(m).to_string() == "Unknown(12)");
  CHECK(per_membership(simple_module(fixtures::f4(), 0)).to_string() == "Finite(1)");
}

TEST_CASE("tilting modules") {
  SUBCASE("regular module") {
    TiltingCertificate c = is_tilting_module(regular_module(fixtures::f2()));
    CHECK(c.tilting());
    CHECK(c.pd.value == 0);
    CHECK(c.coresolution.empty());
  }
  SUBCASE("dual of k[y]/(y^3)") {
    RightModule d = dual_bimodule(regular_bimodule(fixtures::f2())).as_right_module();
    CHECK(find_isomorphism(d, regular_module(fixtures::f2())).has_value());
    TiltingCertificate c = is_tilting_module(d);
    CHECK(c.tilting());
    CHECK(c.pd.value == 0);
  }
  SUBCASE("APR tilt P_1 + S_1 of 1 -> 2") {
    Algebra a = fixtures::f4();
    RightModule t = direct_sum(projective_module(a, 0), simple_module(a, 0));
    TiltingCertificate c = is_tilting_module(t);
    CHECK(c.tilting());
    CHECK(c.pd.value == 1);
    CHECK(c.coresolution.size() == 1);
  }
  SUBCASE("P_1 + S_2 is just the regular module") {
    Algebra a = fixtures::f4();
    TiltingCertificate c = is_tilting_module(direct_sum(projective_module(a, 0), simple_module(a, 1)));
    CHECK(c.tilting());
    CHECK(c.pd.value == 0);
  }
  SUBCASE("a simple that is not faithful") {
    Algebra a = fixtures::f4();
    try {
      is_tilting_module(simple_module(a, 0));
      FAIL("expected ApproximationNotInjective");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::ApproximationNotInjective);
    }
  }
  SUBCASE("non-rigid or non-perfect modules") {
    TiltingCertificate c = is_tilting_module(fixtures::f5());
    CHECK_FALSE(c.tilting());
    CHECK_FALSE(c.pd.finite);
    CHECK(c.self_ext[1] == 1);
  }
}

TEST_CASE("global dimension probe") {
  CHECK(gldim_probe(fixtures::f4()).to_string() == "Finite(1)");
  CHECK(gldim_probe(a3(true)).to_string() == "Finite(2)");
  CHECK(gldim_probe(fixtures::f2()).to_string() == "AtLeast(12)");
  CHECK(gldim_probe(Algebra::ground(Field::rationals())).to_string() == "Finite(0)");
}
