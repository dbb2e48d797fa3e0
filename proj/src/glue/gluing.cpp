#include <string>
#include <utility>

#include "trimat/error.hpp"
#include "trimat/glue/triangular.hpp"
#include "trimat/linalg/linalg.hpp"

namespace trimat {

bool GluingReport::all_pass() const { return failures() == 0; }

std::size_t GluingReport::failures() const {
  std::size_t n = 0;
  for (const auto& c : checks) n += c.pass ? 0 : 1;
  return n;
}

namespace {

class Checker {
 public:
  explicit Checker(const TriangularAlgebra& t) : t_(t), d_(t.data) {}

  void expect(std::string name, bool ok, std::string detail = {}) {
    report_.checks.push_back({std::move(name), ok, std::move(detail)});
  }

  void expect_eq(std::string name, std::size_t a, std::size_t b) {
    expect(std::move(name), a == b, std::to_string(a) + (a == b ? " == " : " != ") + std::to_string(b));
  }

  std::size_t hom_c(const TripleModule& a, const TripleModule& b) {
    return hom_space(triple_to_lambda(t_, a), triple_to_lambda(t_, b)).dim();
  }

  void sample(std::size_t index, const TripleModule& c) {
    const std::string tag = "C" + std::to_string(index) + ": ";
    const Field f = d_.r.field();
    const std::size_t dx = c.x.dim(), dy = c.y.dim();

    // 0 → j_! j^{-1} C → C → i_* i^{-1} C → 0.
    TripleModule sub = j_shriek(d_, c.y);
    TripleModule quo = i_star(d_, c.x);
    TripleHom in{Matrix(dx, 0, f), Matrix::identity(dy, f)};
    TripleHom out{Matrix::identity(dx, f), Matrix(0, dy, f)};
    Matrix in_l = triple_hom_to_lambda(in);
    Matrix out_l = triple_hom_to_lambda(out);
    expect(tag + "counit j_!j^{-1}C -> C is a morphism", is_triple_hom(d_, sub, c, in));
    expect(tag + "unit C -> i_*i^{-1}C is a morphism", is_triple_hom(d_, c, quo, out));
    expect_eq(tag + "j_!j^{-1}C -> C injective", rank(in_l), dy);
    expect_eq(tag + "C -> i_*i^{-1}C surjective", rank(out_l), dx);
    expect(tag + "composite is zero", (out_l * in_l).is_zero());
    expect_eq(tag + "exact in the middle", kernel(out_l).cols(), rank(in_l));

    for (std::size_t ai = 0; ai < r_modules_->size(); ++ai) {
      const RightModule& a = (*r_modules_)[ai];
      const std::string at = tag + "A" + std::to_string(ai) + ": ";
      TripleModule ia = i_star(d_, a);
      TripleModule la = i_shriek(d_, a);
      expect_eq(at + "i^{-1} -| i_*", hom_space(c.x, a).dim(), hom_c(c, ia));
      expect_eq(at + "i_! -| i^{-1}", hom_c(la, c), hom_space(a, c.x).dim());
      KernelPart k = i_upper_shriek(d_, c);
      expect_eq(at + "i_* -| i^!", hom_c(ia, c), hom_space(a, k.module).dim());
    }
    for (std::size_t bi = 0; bi < s_modules_->size(); ++bi) {
      const RightModule& b = (*s_modules_)[bi];
      const std::string bt = tag + "B" + std::to_string(bi) + ": ";
      TripleModule jb = j_shriek(d_, b);
      expect_eq(bt + "j_! -| j^{-1}", hom_space(b, c.y).dim(), hom_c(jb, c));
      expect_eq(bt + "j^natural -| j_!", hom_space(j_natural(d_, c).module, b).dim(), hom_c(c, jb));
      expect_eq(bt + "j^{-1} -| j_*", hom_c(c, j_star(d_, b).triple), hom_space(c.y, b).dim());
    }
  }

  void pairs() {
    const Field f = d_.r.field();
    for (std::size_t ai = 0; ai < r_modules_->size(); ++ai) {
      const RightModule& a = (*r_modules_)[ai];
      const std::string at = "A" + std::to_string(ai) + ": ";
      TripleModule ia = i_star(d_, a);
      TripleModule la = i_shriek(d_, a);
      TensorProduct fa = tensor_over(a, d_.m);
      expect(at + "i^{-1}i_* = Id", ia.x.actions() == a.actions());
      expect(at + "j^{-1}i_* = 0", ia.y.dim() == 0);
      expect(at + "i^{-1}i_! = Id", la.x.actions() == a.actions());
      expect(at + "j^{-1}i_! = F", find_isomorphism(la.y, fa.module).has_value());
      expect_eq(at + "j^natural i_! = 0", j_natural(d_, la).module.dim(), 0);
      expect_eq(at + "j^natural i_* = 0", j_natural(d_, ia).module.dim(), 0);
      // Triangle identities for i^{-1} -| i_*: unit (id, 0), counit id.
      TripleHom unit_ia{Matrix::identity(a.dim(), f), Matrix(0, 0, f)};
      expect(at + "triangle i_*", is_triple_hom(d_, ia, ia, unit_ia) &&
                                      triple_hom_to_lambda(unit_ia).is_identity());
      for (std::size_t bi = 0; bi < s_modules_->size(); ++bi) {
        const RightModule& b = (*s_modules_)[bi];
        const std::string pt = at + "B" + std::to_string(bi) + ": ";
        TripleModule jb = j_shriek(d_, b);
        expect_eq(pt + "Hom(i_*A, j_!B) = 0", hom_c(ia, jb), 0);
        expect_eq(pt + "Hom(j_!B, i_*A) = 0", hom_c(jb, ia), 0);
        expect_eq(pt + "Hom_S(A(x)M, B) = Hom_R(A, Hom_S(M, B))", hom_space(fa.module, b).dim(),
                  hom_space(a, j_star(d_, b).triple.x).dim());
      }
    }
    for (std::size_t bi = 0; bi < s_modules_->size(); ++bi) {
      const RightModule& b = (*s_modules_)[bi];
      const std::string bt = "B" + std::to_string(bi) + ": ";
      TripleModule jb = j_shriek(d_, b);
      expect(bt + "j^{-1}j_! = Id", jb.y.actions() == b.actions());
      expect(bt + "i^{-1}j_! = 0", jb.x.dim() == 0);
      QuotientModule nb = j_natural(d_, jb);
      expect(bt + "j^natural j_! = Id", nb.module.dim() == b.dim() && nb.projection.is_identity());
      // Triangle identities for j_! -| j^{-1}: unit id, counit (0, id).
      TripleHom counit{Matrix(0, 0, f), Matrix::identity(b.dim(), f)};
      expect(bt + "triangle j_!", is_triple_hom(d_, jb, jb, counit) &&
                                      triple_hom_to_lambda(counit).is_identity());
    }
  }

  GluingReport run(const std::vector<TripleModule>& samples, const std::vector<RightModule>& r_modules,
                   const std::vector<RightModule>& s_modules) {
    r_modules_ = &r_modules;
    s_modules_ = &s_modules;
    for (std::size_t i = 0; i < samples.size(); ++i) {
      validate_triple(d_, samples[i]);
      sample(i, samples[i]);
    }
    pairs();
    return std::move(report_);
  }

 private:
  const TriangularAlgebra& t_;
  const TriangularData& d_;
  const std::vector<RightModule>* r_modules_ = nullptr;
  const std::vector<RightModule>* s_modules_ = nullptr;
  GluingReport report_;
};

std::vector<RightModule> projectives_and_simples(const Algebra& a) {
  std::vector<RightModule> out;
  for (std::size_t i = 0; i < a.num_idempotents(); ++i) {
    out.push_back(projective_module(a, i));
    out.push_back(simple_module(a, i));
  }
  return out;
}

}  // namespace

GluingReport verify_gluing(const TriangularAlgebra& t, const std::vector<TripleModule>& samples,
                           const std::vector<RightModule>& r_modules, const std::vector<RightModule>& s_modules) {
  return Checker(t).run(samples, r_modules, s_modules);
}

GluingReport verify_gluing(const TriangularAlgebra& t, const std::vector<TripleModule>& samples) {
  return verify_gluing(t, samples, projectives_and_simples(t.data.r), projectives_and_simples(t.data.s));
}

}  // namespace trimat
