#include <algorithm>
#include <utility>

#include "trimat/algebra/decompose.hpp"
#include "trimat/error.hpp"
#include "trimat/mate/mate.hpp"

namespace trimat {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Unknown: return "unknown";
  }
  return "unknown";
}

HypothesisReport check_hypotheses(const TriangularData& d, const RightModule& t_s, std::size_t bound) {
  d.validate();
  if (!t_s.algebra().same_as(d.s)) throw Error(ErrorCode::AlgebraMismatch, "T_S is not a module over S");
  HypothesisReport rep;
  const RightModule m = d.m.as_right_module();
  rep.per_m = per_membership(m, bound);
  rep.per_t = per_membership(t_s, bound);
  if (rep.per_m.infinite) rep.failures.push_back("M_S is not perfect: a syzygy repeats");
  else if (!rep.per_m.finite) rep.unknowns.push_back("M_S: " + rep.per_m.to_string());
  if (rep.per_t.infinite) rep.failures.push_back("T_S has infinite projective dimension: a syzygy repeats");
  else if (!rep.per_t.finite) rep.unknowns.push_back("T_S: " + rep.per_t.to_string());

  try {
    rep.tilting = is_tilting_module(t_s, bound);
    for (std::size_t n = 1; n < rep.tilting.self_ext.size(); ++n)
      if (rep.tilting.self_ext[n] != 0) {
        rep.failures.push_back("Ext^" + std::to_string(n) + "(T_S, T_S) has dimension " +
                               std::to_string(rep.tilting.self_ext[n]));
        break;
      }
    if (rep.tilting.pd.finite && rep.tilting.rigid && !rep.tilting.coresolved) {
      rep.failures.push_back("T_S: " + rep.tilting.failure);
    }
  } catch (const Error& e) {
    if (e.code() != ErrorCode::ApproximationNotInjective) throw;
    rep.failures.push_back(std::string("T_S: ") + e.what());
  }

  rep.ext_mt = ext_groups(m, t_s, bound);
  for (std::size_t n = 1; n < rep.ext_mt.dims.size(); ++n)
    if (rep.ext_mt.dims[n] != 0) {
      rep.failures.push_back("Ext^" + std::to_string(n) + "(M_S, T_S) has dimension " +
                             std::to_string(rep.ext_mt.dims[n]));
      break;
    }

  if (!rep.failures.empty()) rep.verdict = Verdict::Fail;
  else if (!rep.unknowns.empty()) rep.verdict = Verdict::Unknown;
  else rep.verdict = Verdict::Pass;
  return rep;
}

namespace {

std::vector<Matrix> summand_idempotents(const RightModule& t) {
  Decomposition dec = decompose_module(t);
  std::vector<std::size_t> cls = isomorphism_classes(dec);
  std::vector<std::size_t> sorted = cls;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error(ErrorCode::NonBasic, "T_S has isomorphic indecomposable summands");
  }
  std::vector<Matrix> out;
  if (dec.summands.size() == 1) return out;
  for (const auto& s : dec.summands) out.push_back(s.inclusion * s.projection);
  return out;
}

}  // namespace

TriangularData mate_general(const TriangularData& d, const RightModule& t_s, std::size_t bound) {
  HypothesisReport rep = check_hypotheses(d, t_s, bound);
  if (rep.verdict != Verdict::Pass) {
    std::string detail = to_string(rep.verdict);
    for (const auto& f : rep.failures) detail += "; " + f;
    for (const auto& u : rep.unknowns) detail += "; " + u;
    throw Error(ErrorCode::HypothesisFailure, detail);
  }
  EndomorphismAlgebra end = endomorphism_algebra(t_s, summand_idempotents(t_s));
  HomSpace h = hom_space(d.m.as_right_module(), t_s);
  const Field f = t_s.field();
  std::vector<Matrix> left, right;
  for (std::size_t a = 0; a < end.space.dim(); ++a) {
    std::vector<Vec> cols;
    for (std::size_t c = 0; c < h.dim(); ++c) cols.push_back(h.coords(end.space[a] * h[c]));
    left.push_back(Matrix::from_columns(cols, h.dim(), f));
  }
  for (std::size_t b = 0; b < d.r.dim(); ++b) {
    std::vector<Vec> cols;
    for (std::size_t c = 0; c < h.dim(); ++c) cols.push_back(h.coords(h[c] * d.m.left_action(b)));
    right.push_back(Matrix::from_columns(cols, h.dim(), f));
  }
  Bimodule m2(end.algebra, d.r, std::move(left), std::move(right));
  return {end.algebra, d.r, std::move(m2)};
}

TriangularData mate_artin(const TriangularData& d, std::size_t bound) {
  d.validate();
  GldimProbe g = gldim_probe(d.s, bound);
  if (!g.finite) throw Error(ErrorCode::GldimUnknown, "gldim S is " + g.to_string());
  return {d.s, d.r, dual_bimodule(d.m)};
}

namespace {

void require_division_case(const Bimodule& n) {
  const Algebra& k = n.left_algebra();
  if (k.dim() != 1) {
    throw Error(ErrorCode::NotDivisionCase, "left algebra of N has dimension " + std::to_string(k.dim()) + ", not 1");
  }
}

}  // namespace

TriangularData one_point_extension(const Algebra& r, const Bimodule& n) {
  require_division_case(n);
  if (!n.right_algebra().same_as(r)) throw Error(ErrorCode::AlgebraMismatch, "N is not a right R-module");
  return {n.left_algebra(), r, n};
}

TriangularData one_point_coextension(const Algebra& r, const Bimodule& n) {
  require_division_case(n);
  if (!n.right_algebra().same_as(r)) throw Error(ErrorCode::AlgebraMismatch, "N is not a right R-module");
  return {r, n.left_algebra(), dual_bimodule(n)};
}

}  // namespace trimat
