#include "trimat/invariants/repetitive.hpp"

#include <utility>

#include "trimat/error.hpp"

namespace trimat {

Algebra trivial_extension(const Algebra& a, const Bimodule& m) {
  if (!m.left_algebra().same_as(a) || !m.right_algebra().same_as(a)) {
    throw Error(ErrorCode::AlgebraMismatch, "trivial extension needs an A-A-bimodule");
  }
  const Field f = a.field();
  const std::size_t na = a.dim(), nm = m.dim(), n = na + nm;
  std::vector<std::string> labels = a.labels();
  for (std::size_t j = 0; j < nm; ++j) labels.push_back("M:m" + std::to_string(j));
  std::vector<std::vector<Vec>> products(n, std::vector<Vec>(n, zero_vec(n, f)));
  for (std::size_t i = 0; i < na; ++i) {
    for (std::size_t j = 0; j < na; ++j) {
      const Vec& p = a.product(i, j);
      std::copy(p.begin(), p.end(), products[i][j].begin());
    }
    for (std::size_t j = 0; j < nm; ++j) {
      Vec left = m.left_action(i).col(j), right = m.right_action(i).col(j);
      std::copy(left.begin(), left.end(), products[i][na + j].begin() + static_cast<long>(na));
      std::copy(right.begin(), right.end(), products[na + j][i].begin() + static_cast<long>(na));
    }
  }
  auto extend = [&](const Vec& v) {
    Vec out = zero_vec(n, f);
    std::copy(v.begin(), v.end(), out.begin());
    return out;
  };
  std::vector<Vec> idem;
  for (const auto& e : a.idempotents()) idem.push_back(extend(e));
  return Algebra::from_structure_constants(f, std::move(labels), products, extend(a.unit()), std::move(idem));
}

Algebra repetitive_truncation(const Algebra& a, std::size_t p) {
  if (p == 0) throw Error(ErrorCode::InvalidInput, "repetitive truncation needs at least one copy");
  const Field f = a.field();
  const Bimodule da = dual_bimodule(regular_bimodule(a));
  const std::size_t n = a.dim(), block = 2 * n, total = p * block;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < p; ++i) {
    for (const auto& l : a.labels()) labels.push_back("A" + std::to_string(i) + ":" + l);
    for (const auto& l : a.labels()) labels.push_back("D" + std::to_string(i) + ":" + l + "*");
  }
  std::vector<std::vector<Vec>> products(total, std::vector<Vec>(total, zero_vec(total, f)));
  auto place = [&](Vec& dst, std::size_t offset, const Vec& v) {
    for (std::size_t t = 0; t < v.size(); ++t) dst[offset + t] = v[t];
  };
  for (std::size_t i = 0; i < p; ++i) {
    const std::size_t ai = i * block, di = ai + n, next = ((i + 1) % p) * block;
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) {
        place(products[ai + x][ai + y], ai, a.product(x, y));
        place(products[ai + x][di + y], di, da.left_action(x).col(y));
        place(products[di + y][next + x], di, da.right_action(x).col(y));
      }
  }
  Vec unit = zero_vec(total, f);
  std::vector<Vec> idem;
  for (std::size_t i = 0; i < p; ++i) {
    place(unit, i * block, a.unit());
    for (const auto& e : a.idempotents()) {
      Vec v = zero_vec(total, f);
      place(v, i * block, e);
      idem.push_back(std::move(v));
    }
  }
  return Algebra::from_structure_constants(f, std::move(labels), products, std::move(unit), std::move(idem));
}

ShiftCheck repetitive_shift_isomorphism(const TriangularData& d, std::size_t p) {
  d.validate();
  const TriangularData mate{d.s, d.r, dual_bimodule(d.m)};
  Algebra rep = repetitive_truncation(build_triangular(d).lambda, p);
  Algebra rep_mate = repetitive_truncation(build_triangular(mate).lambda, p);
  const std::size_t nr = d.r.dim(), nm = d.m.dim(), ns = d.s.dim(), n = nr + nm + ns;
  // Each block moves one diagonal slot: R_i and everything starting in the
  // R-row of copy i lands in copy i − 1 of the mate.
  std::vector<std::size_t> to(rep.dim());
  for (std::size_t i = 0; i < p; ++i) {
    const std::size_t here = i * 2 * n, prev = ((i + p - 1) % p) * 2 * n;
    for (std::size_t k = 0; k < nr; ++k) {
      to[here + k] = prev + ns + nm + k;          // R
      to[here + n + k] = prev + n + ns + nm + k;  // DR
    }
    for (std::size_t k = 0; k < nm; ++k) {
      to[here + nr + k] = prev + n + ns + k;  // M into D(mate)
      to[here + n + nr + k] = here + ns + k;  // DM into the mate's bimodule
    }
    for (std::size_t k = 0; k < ns; ++k) {
      to[here + nr + nm + k] = here + k;          // S
      to[here + n + nr + nm + k] = here + n + k;  // DS
    }
  }
  ShiftCheck out;
  out.dim = rep.dim();
  if (rep_mate.dim() != rep.dim()) {
    out.failure = "dimensions differ";
    return out;
  }
  const Field f = rep.field();
  auto image = [&](const Vec& v) {
    Vec w = zero_vec(v.size(), f);
    for (std::size_t t = 0; t < v.size(); ++t) w[to[t]] = v[t];
    return w;
  };
  if (image(rep.unit()) != rep_mate.unit()) {
    out.failure = "unit is not preserved";
    return out;
  }
  for (std::size_t x = 0; x < rep.dim(); ++x)
    for (std::size_t y = 0; y < rep.dim(); ++y) {
      ++out.pairs_checked;
      if (image(rep.product(x, y)) != rep_mate.product(to[x], to[y])) {
        out.failure = "product of " + rep.labels()[x] + " and " + rep.labels()[y] + " is not preserved";
        return out;
      }
    }
  out.pass = true;
  return out;
}

GldimProbe global_dimension(const Algebra& a, std::size_t bound) { return gldim_probe(a, bound); }

}  // namespace trimat
