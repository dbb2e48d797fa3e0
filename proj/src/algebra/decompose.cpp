#include "trimat/algebra/decompose.hpp"

#include <optional>
#include <random>
#include <utility>

#include "trimat/error.hpp"

namespace trimat {

namespace {

Matrix power(const Matrix& m, std::size_t e) {
  Matrix result = Matrix::identity(m.rows(), m.field());
  Matrix base = m;
  while (e > 0) {
    if (e & 1U) result = result * base;
    base = base * base;
    e >>= 1U;
  }
  return result;
}

// A nontrivial split X = ker ψ^n ⊕ im ψ^n, as bases of the two parts.
std::optional<std::pair<Matrix, Matrix>> fitting_split(const RightModule& x) {
  const Field f = x.field();
  const std::size_t n = x.dim();
  HomSpace end = hom_space(x, x);
  std::vector<Matrix> candidates = end.basis();
  std::mt19937_64 rng(0x5eed);
  std::uniform_int_distribution<long> coeff(-2, 2);
  for (int i = 0; i < 16; ++i) {
    Vec c;
    for (std::size_t j = 0; j < end.dim(); ++j) c.push_back(Scalar::from(f, coeff(rng)));
    candidates.push_back(end.combine(c));
  }
  const std::vector<Scalar> shifts = {Scalar::from(f, 0), Scalar::from(f, 1), Scalar::from(f, -1),
                                      Scalar::from(f, 2), Scalar::from(f, -2), Scalar::from(f, 3),
                                      Scalar::from(f, -3)};
  const Matrix id = Matrix::identity(n, f);
  for (const auto& phi : candidates) {
    for (const auto& lambda : shifts) {
      Matrix psi = power(phi - id * lambda, n);
      Matrix k = kernel(psi);
      if (k.cols() == 0 || k.cols() == n) continue;
      return std::make_pair(std::move(k), column_basis(psi));
    }
  }
  return std::nullopt;
}

void split(const RightModule& x, const Matrix& inclusion, const Matrix& projection, Decomposition& out) {
  if (x.dim() == 0) return;
  if (has_local_endomorphism_ring(x)) {
    out.summands.push_back({x, inclusion, projection});
    return;
  }
  auto parts = fitting_split(x);
  if (!parts) {
    out.complete = false;
    out.summands.push_back({x, inclusion, projection});
    return;
  }
  const auto& [k, im] = *parts;
  Matrix both = hstack({k, im}, x.dim(), x.field());
  Matrix inv = inverse(both);
  Matrix pk = inv.block(0, 0, k.cols(), x.dim());
  Matrix pi = inv.block(k.cols(), 0, im.cols(), x.dim());
  split(submodule(x, k), inclusion * k, pk * projection, out);
  split(submodule(x, im), inclusion * im, pi * projection, out);
}

}  // namespace

Decomposition decompose_module(const RightModule& x) {
  Decomposition d;
  d.complete = true;
  Matrix id = Matrix::identity(x.dim(), x.field());
  split(x, id, id, d);
  return d;
}

std::vector<std::size_t> isomorphism_classes(const Decomposition& d) {
  if (!d.complete) throw Error(ErrorCode::NonBasic, "decomposition into indecomposables is incomplete");
  std::vector<std::size_t> cls(d.summands.size());
  std::vector<std::size_t> reps;
  for (std::size_t i = 0; i < d.summands.size(); ++i) {
    std::size_t c = 0;
    for (; c < reps.size(); ++c)
      if (indecomposables_isomorphic(d.summands[reps[c]].module, d.summands[i].module)) break;
    if (c == reps.size()) reps.push_back(i);
    cls[i] = c;
  }
  return cls;
}

Summand basic_part(const RightModule& x) {
  Decomposition d = decompose_module(x);
  std::vector<std::size_t> cls = isomorphism_classes(d);
  std::vector<Matrix> inc, proj;
  std::vector<RightModule> mods;
  std::size_t seen = 0;
  for (std::size_t i = 0; i < d.summands.size(); ++i) {
    if (cls[i] != seen) continue;
    ++seen;
    inc.push_back(d.summands[i].inclusion);
    proj.push_back(d.summands[i].projection);
    mods.push_back(d.summands[i].module);
  }
  const Field f = x.field();
  if (mods.empty()) return {RightModule::zero(x.algebra()), Matrix(x.dim(), 0, f), Matrix(0, x.dim(), f)};
  Matrix inclusion = hstack(inc, x.dim(), f);
  Matrix projection = vstack(proj, x.dim(), f);
  return {submodule(x, inclusion), inclusion, projection};
}

}  // namespace trimat
