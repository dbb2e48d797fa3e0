#include "trimat/algebra/fixtures.hpp"

namespace trimat::fixtures {

Algebra truncated_polynomial(std::size_t n, const std::string& var, Field field) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(i == 0 ? "1" : i == 1 ? var : var + "^" + std::to_string(i));
  std::vector<std::vector<Vec>> products(n, std::vector<Vec>(n, zero_vec(n, field)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; i + j < n; ++j) products[i][j][i + j] = Scalar::from(field, 1);
  Vec unit = unit_vec(n, 0, field);
  return Algebra::from_structure_constants(field, std::move(labels), products, unit, {unit});
}

Algebra f1(Field field) { return truncated_polynomial(2, "x", field); }
Algebra f2(Field field) { return truncated_polynomial(3, "y", field); }

Bimodule f3(Field field) {
  Algebra r = f1(field), s = f2(field);
  Matrix one = Matrix::identity(1, field), zero(1, 1, field);
  return Bimodule(r, s, {one, zero}, {one, zero, zero});
}

Algebra f4(Field field) {
  QuiverPresentation q;
  q.vertices = {"1", "2"};
  q.arrows = {{"a", 0, 1}};
  q.nilpotency_bound = 2;
  return Algebra::from_quiver(q, field);
}

RightModule f5(Field field) { return simple_module(f2(field), 0); }

Algebra kronecker(Field field) {
  QuiverPresentation q;
  q.vertices = {"1", "2"};
  q.arrows = {{"a", 0, 1}, {"b", 0, 1}};
  q.nilpotency_bound = 2;
  return Algebra::from_quiver(q, field);
}

Algebra two_cycle_zero(Field field) {
  QuiverPresentation q;
  q.vertices = {"1", "2"};
  q.arrows = {{"a", 0, 1}, {"b", 1, 0}};
  q.relations = {{{Scalar(1), {0, 1}}}, {{Scalar(1), {1, 0}}}};
  q.nilpotency_bound = 3;
  return Algebra::from_quiver(q, field);
}

}  // namespace trimat::fixtures
