#include <functional>

#include "doctest.h"
#include "support.hpp"
#include "trimat/error.hpp"
#include "trimat/homological/resolution.hpp"
#include "trimat/invariants/cartan.hpp"
#include "trimat/invariants/repetitive.hpp"

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

TriangularData f1_f2_f3() { return {fixtures::f1(), fixtures::f2(), fixtures::f3()}; }

IntMatrix random_int_matrix(std::mt19937& rng, std::size_t r, std::size_t c, long lo, long hi) {
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rand_int(rng, lo, hi);
  return m;
}

// Product of random elementary matrices.
IntMatrix random_unimodular(std::mt19937& rng, std::size_t n) {
  IntMatrix p = IntMatrix::identity(n);
  for (int step = 0; step < 6; ++step) {
    std::size_t i = rng() % n, j = rng() % n;
    if (i == j) {
      for (std::size_t c = 0; c < n; ++c) p(i, c) = -p(i, c);
      continue;
    }
    long f = rand_int(rng, -1, 1);
    for (std::size_t c = 0; c < n; ++c) p(i, c) += f * p(j, c);
  }
  return p;
}

IntMatrix blocks(const IntMatrix& a, const IntMatrix& b, const IntMatrix& c) {
  IntMatrix out(a.rows() + b.rows(), a.rows() + b.rows());
  out.set_block(0, 0, a);
  out.set_block(a.rows(), 0, c);
  out.set_block(a.rows(), a.rows(), b);
  return out;
}

std::vector<mpz_class> unit(std::size_t n, std::size_t i) {
  std::vector<mpz_class> v(n, 0);
  v[i] = 1;
  return v;
}

// A = F4 and the one-dimensional bimodule e_1 M e_2.
Bimodule corner_bimodule(const Algebra& a) {
  const Field f = a.field();
  auto scalar = [&](long v) { return Matrix::from_ints({{v}}, f); };
  // Basis of F4 is (e_1, e_2, a).
  return Bimodule(a, a, {scalar(1), scalar(0), scalar(0)}, {scalar(0), scalar(1), scalar(0)});
}

}  // namespace

TEST_CASE("Cartan matrices of the fixtures") {
  CHECK(cartan_matrix(fixtures::f1()) == IntMatrix{{2}});
  CHECK(cartan_matrix(fixtures::f2()) == IntMatrix{{3}});
  CHECK(cartan_matrix(build_triangular(f1_f2_f3()).lambda) == IntMatrix{{2, 0}, {1, 3}});
  CHECK(cartan_matrix(fixtures::f4()) == IntMatrix{{1, 0}, {1, 1}});
}

TEST_CASE("Cartan entries are Hom dimensions between projectives") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    Algebra r = random_small_algebra(rng), s = random_small_algebra(rng);
    Algebra a = build_triangular({r, s, random_bimodule(rng, r, s, 3)}).lambda;
    IntMatrix c = cartan_matrix(a);
    for (std::size_t i = 0; i < a.num_idempotents(); ++i)
      for (std::size_t j = 0; j < a.num_idempotents(); ++j)
        CHECK(c(i, j) == static_cast<unsigned long>(hom_space(projective_module(a, i), projective_module(a, j)).dim()));
  }
}

TEST_CASE("Cartan block structure") {
  CartanBlockCheck ex = cartan_block_check(f1_f2_f3());
  CHECK(ex.pass);
  CHECK(ex.c_m == IntMatrix{{1}});

  Algebra r = fixtures::f1(), s = fixtures::f4();
  CartanBlockCheck split = cartan_block_check({r, s, Bimodule::zero(r, s)});
  CHECK(split.pass);
  CHECK(split.c_m == IntMatrix(2, 1));

  Algebra f4 = fixtures::f4();
  CartanBlockCheck reg = cartan_block_check({f4, f4, regular_bimodule(f4)});
  CHECK(reg.pass);
  // (C_M)_ji = dim e_i F4 e_j.
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) CHECK(reg.c_m(j, i) == static_cast<unsigned long>(f4.peirce(i, j).dim()));

  std::mt19937 rng(11);
  for (int trial = 0; trial < 25; ++trial) {
    Algebra a = random_small_algebra(rng), b = random_small_algebra(rng);
    CHECK(cartan_block_check({a, b, random_bimodule(rng, a, b, 4)}).pass);
  }
}

TEST_CASE("Euler pairing") {
  IntMatrix c = cartan_matrix(fixtures::f4());
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) CHECK(euler_pairing(c, unit(2, i), unit(2, j)) == c(i, j));
  CHECK(euler_pairing(c, {1, 1}, {1, 1}) == 3);

  // Alternating sum of Hom(P_i, P_j[n]) for stalk complexes.
  Algebra a = build_triangular(f1_f2_f3()).lambda;
  IntMatrix ca = cartan_matrix(a);
  for (std::size_t i = 0; i < a.num_idempotents(); ++i)
    for (std::size_t j = 0; j < a.num_idempotents(); ++j) {
      ProjComplex pi = ProjComplex::stalk(ProjModule(a, {i}));
      ProjComplex pj = ProjComplex::stalk(ProjModule(a, {j}));
      std::vector<std::size_t> dims = hom_complex_cohomology(pi, pj, -3, 3);
      long sum = 0;  // index k holds degree k - 3
      for (std::size_t k = 0; k < dims.size(); ++k) sum += ((k + 3) % 2 == 1 ? -1 : 1) * static_cast<long>(dims[k]);
      CHECK(euler_pairing(ca, unit(2, i), unit(2, j)) == sum);
    }
}

TEST_CASE("block-swap witness") {
  IntMatrix p = congruence_witness_blockswap({{2}}, {{1}}, {{1}});
  CHECK(is_unimodular(p));
  CHECK(p.transpose() * IntMatrix{{2, 0}, {1, 1}} * p == IntMatrix{{1, 0}, {1, 2}});

  // Cartan matrix of the one-point coextension of F4 by the simple at 1.
  Algebra f4 = fixtures::f4();
  Algebra k = Algebra::ground(f4.field());
  Bimodule n = bimodule_from_right_module(simple_module(f4, 0));
  TriangularData coext{f4, k, dual_bimodule(n)};
  CartanBlockCheck cb = cartan_block_check(coext);
  REQUIRE(cb.pass);
  IntMatrix a = cartan_matrix(f4), b = cartan_matrix(k);
  IntMatrix q = congruence_witness_blockswap(a, b, cb.c_m);
  CHECK(q.transpose() * cb.lambda * q == blocks(b, a, cb.c_m.transpose()));

  CHECK(code_of([] { congruence_witness_blockswap({{2}}, {{2}}, {{1}}); }) == ErrorCode::NeitherBlockInvertible);
  // A unimodular, B not: the alternate formula.
  IntMatrix alt = congruence_witness_blockswap({{1}}, {{3}}, {{2}});
  CHECK(alt.transpose() * IntMatrix{{1, 0}, {2, 3}} * alt == IntMatrix{{3, 0}, {2, 1}});
}

TEST_CASE("congruence over Z") {
  IntMatrix c{{2, 0}, {1, 3}};
  CongruenceResult same = congruent_over_z(c, c);
  CHECK(same.kind == CongruenceResult::Kind::Congruent);
  CHECK(same.witness == IntMatrix::identity(2));

  CongruenceResult mates = congruent_over_z(c, {{3, 0}, {1, 2}});
  CHECK(mates.kind == CongruenceResult::Kind::NotCongruent);
  CHECK(mates.method == "enumeration");
  CHECK(mates.candidate_counts.size() == 2);
  CHECK(is_positive_definite(c + c.transpose()));

  CHECK(congruent_over_z({{1}}, {{2}}).kind == CongruenceResult::Kind::NotCongruent);
}

TEST_CASE("congruence finds witnesses for block swaps and random transforms") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t n = 1 + rng() % 2, m = 1 + rng() % 2;
    IntMatrix a = random_int_matrix(rng, n, n, -2, 3);
    IntMatrix b = random_unimodular(rng, m);
    IntMatrix c = random_int_matrix(rng, m, n, -2, 2);
    IntMatrix c1 = blocks(a, b, c), c2 = blocks(b, a, c.transpose());
    CongruenceResult r = congruent_over_z(c1, c2);
    REQUIRE(r.kind == CongruenceResult::Kind::Congruent);
    CHECK(is_unimodular(r.witness));
    CHECK(r.witness.transpose() * c1 * r.witness == c2);
  }
  for (int trial = 0; trial < 20; ++trial) {
    IntMatrix c = random_int_matrix(rng, 3, 3, -1, 2);
    for (std::size_t i = 0; i < 3; ++i) c(i, i) = 3;  // positive definite symmetric part
    IntMatrix p = random_unimodular(rng, 3);
    IntMatrix c2 = p.transpose() * c * p;
    CongruenceResult r = congruent_over_z(c, c2);
    REQUIRE(r.kind == CongruenceResult::Kind::Congruent);
    CHECK(r.witness.transpose() * c * r.witness == c2);
  }
}

TEST_CASE("vectors of a given norm match a box search") {
  IntMatrix q{{4, 1, 0}, {1, 6, 2}, {0, 2, 5}};
  for (long value = 0; value <= 12; ++value) {
    std::vector<std::vector<mpz_class>> box;
    for (long x = -3; x <= 3; ++x)
      for (long y = -3; y <= 3; ++y)
        for (long z = -3; z <= 3; ++z) {
          std::vector<mpz_class> v{x, y, z};
          mpz_class norm = 0;
          for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) norm += v[i] * q(i, j) * v[j];
          if (norm == value) box.push_back(v);
        }
    CHECK(vectors_of_norm(q, value, 100000) == box);
  }
}

TEST_CASE("Coxeter polynomial") {
  CHECK(coxeter_polynomial(IntMatrix::identity(3)) == std::vector<mpz_class>{1, 3, 3, 1});
  CHECK(coxeter_polynomial({{2, 0}, {1, 3}}) == coxeter_polynomial({{3, 0}, {1, 2}}));
  CHECK(code_of([] { coxeter_polynomial({{1, 1}, {1, 1}}); }) == ErrorCode::SingularCartan);

  std::mt19937 rng(100);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t n = 1 + rng() % 3;
    IntMatrix c = random_int_matrix(rng, n, n, -2, 3);
    if (determinant(c) == 0) continue;
    IntMatrix p = random_unimodular(rng, n);
    CHECK(coxeter_polynomial(c) == coxeter_polynomial(p.transpose() * c * p));
  }
  IntMatrix a{{1, 0}, {1, 1}}, b{{2}}, c{{1, 1}};
  CHECK(coxeter_polynomial(blocks(a, b, c)) == coxeter_polynomial(blocks(b, a, c.transpose())));
}

TEST_CASE("trivial extensions") {
  Algebra f4 = fixtures::f4();
  Bimodule m = corner_bimodule(f4);
  Algebra ext = trivial_extension(f4, m);
  CHECK(ext.dim() == 4);
  CHECK(cartan_matrix(ext) == cartan_matrix(fixtures::kronecker()));
  CHECK(global_dimension(ext).to_string() == "Finite(1)");

  Algebra ext_dual = trivial_extension(f4, dual_bimodule(m));
  CHECK(ext_dual.dim() == 4);
  CHECK(cartan_matrix(ext_dual) == cartan_matrix(fixtures::two_cycle_zero()));
  CHECK(global_dimension(ext_dual).to_string() == "AtLeast(12)");

  Algebra plain = trivial_extension(f4, Bimodule::zero(f4, f4));
  CHECK(plain.dim() == f4.dim());
  for (std::size_t i = 0; i < f4.dim(); ++i)
    for (std::size_t j = 0; j < f4.dim(); ++j) CHECK(plain.product(i, j) == f4.product(i, j));
}

TEST_CASE("the triangular algebra is a trivial extension of R x S") {
  std::mt19937 rng(8);
  for (int trial = 0; trial < 6; ++trial) {
    Algebra r = random_small_algebra(rng), s = random_small_algebra(rng);
    Bimodule m = random_bimodule(rng, r, s, 3);
    Algebra rs = product_algebra(r, s);
    // M as an (R × S)-bimodule: (r, s)m = rm and m(r, s) = ms.
    std::vector<Matrix> left, right;
    const Field f = r.field();
    for (std::size_t i = 0; i < rs.dim(); ++i) {
      left.push_back(i < r.dim() ? m.left_action(i) : Matrix(m.dim(), m.dim(), f));
      right.push_back(i < r.dim() ? Matrix(m.dim(), m.dim(), f) : m.right_action(i - r.dim()));
    }
    Algebra ext = trivial_extension(rs, Bimodule(rs, rs, left, right));
    CHECK(ext.dim() == build_triangular({r, s, m}).lambda.dim());
    CHECK(cartan_matrix(ext).rows() == rs.num_idempotents());
  }
}

TEST_CASE("global dimension probe") {
  Field q = Field::rationals();
  CHECK(global_dimension(product_algebra(Algebra::ground(q), Algebra::ground(q))).to_string() == "Finite(0)");
  CHECK(global_dimension(fixtures::f4()).to_string() == "Finite(1)");
  CHECK(global_dimension(fixtures::f1()).to_string() == "AtLeast(12)");
}

TEST_CASE("repetitive truncations") {
  Algebra lam = build_triangular(f1_f2_f3()).lambda;
  Algebra one = repetitive_truncation(lam, 1);
  Algebra te = trivial_extension(lam, dual_bimodule(regular_bimodule(lam)));
  REQUIRE(one.dim() == te.dim());
  for (std::size_t i = 0; i < one.dim(); ++i)
    for (std::size_t j = 0; j < one.dim(); ++j) CHECK(one.product(i, j) == te.product(i, j));
  CHECK(repetitive_truncation(lam, 3).dim() == 3 * 2 * lam.dim());

  Algebra r = fixtures::f1(), s = fixtures::f4();
  Algebra split = repetitive_truncation(build_triangular({r, s, Bimodule::zero(r, s)}).lambda, 2);
  CHECK(split.dim() == 2 * 2 * (r.dim() + s.dim()));
  CHECK(cartan_matrix(split).rows() == 2 * (r.num_idempotents() + s.num_idempotents()));
}

TEST_CASE("repetitive algebras of a triangular algebra and its mate agree") {
  ShiftCheck ex = repetitive_shift_isomorphism(f1_f2_f3(), 3);
  CHECK(ex.pass);
  CHECK(ex.failure == "");
  CHECK(ex.pairs_checked == ex.dim * ex.dim);

  std::mt19937 rng(31);
  for (int trial = 0; trial < 6; ++trial) {
    Algebra r = random_small_algebra(rng), s = random_small_algebra(rng);
    TriangularData d{r, s, random_bimodule(rng, r, s, 3)};
    for (std::size_t p : {1, 2}) CHECK(repetitive_shift_isomorphism(d, p).pass);
  }
}
