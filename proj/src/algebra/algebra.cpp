#include "trimat/algebra/algebra.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "trimat/error.hpp"

namespace trimat {

struct Algebra::Data {
  Field field;
  std::vector<std::string> labels;
  std::size_t dim = 0;
  std::vector<Vec> table;  // dim * dim
  Vec unit;
  std::vector<Vec> idempotents;
  std::vector<Matrix> left;
  std::vector<Matrix> right;
  std::vector<SubspaceBasis> peirce;  // n * n
  SubspaceBasis radical;
  std::vector<AlgebraArrow> arrows;
  std::vector<Vec> generators;
  std::optional<QuiverPresentation> quiver;
  std::vector<bool> trivial_path;
};

namespace {

Vec coerce(const Vec& v, Field f) {
  Vec out;
  out.reserve(v.size());
  for (const auto& s : v) out.push_back(Scalar::from(f, 0) + s);
  return out;
}

Poly poly_mul(const Poly& a, const Poly& b, Field f) {
  Poly out(a.size() + b.size() - 1, Scalar::from(f, 0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

// The eigenvalue λ with charpoly(t) = (t - λ)^d, if there is one in k.
std::optional<Scalar> single_eigenvalue(const Poly& cp, Field f) {
  const std::size_t d = cp.size() - 1;
  if (d == 0) return std::nullopt;
  std::size_t q = 1;
  const std::uint64_t p = f.characteristic();
  if (p != 0)
    while ((d / q) % p == 0) q *= p;
  const std::size_t m = d / q;
  // Over F_p the Frobenius fixes k, so (t - λ)^d = (t^q - λ)^m there.
  Scalar lambda = -cp[d - q] / Scalar::from(f, static_cast<long>(m));
  Poly expect = {Scalar::from(f, 1)};
  Poly lin = {-lambda, Scalar::from(f, 1)};
  for (std::size_t i = 0; i < d; ++i) expect = poly_mul(expect, lin, f);
  for (std::size_t i = 0; i <= d; ++i)
    if (expect[i] != cp[i]) return std::nullopt;
  return lambda;
}

bool span_contains(const Matrix& basis, const Vec& v) {
  if (is_zero(v)) return true;
  if (basis.cols() == 0) return false;
  return rank(hstack({basis, Matrix::column(v, basis.field())}, basis.rows(), basis.field())) == basis.cols();
}

}  // namespace

Algebra Algebra::build(Field field, std::vector<std::string> labels, std::vector<Vec> table, Vec unit,
                       std::vector<Vec> idempotents, std::optional<QuiverPresentation> quiver,
                       std::vector<bool> trivial_path) {
  auto d = std::make_shared<Data>();
  const std::size_t n = labels.size();
  d->field = field;
  d->dim = n;
  if (table.size() != n * n) throw Error(ErrorCode::DimensionMismatch, "structure table must be dim x dim");
  for (auto& v : table) {
    if (v.size() != n) throw Error(ErrorCode::DimensionMismatch, "product vector has wrong length");
    v = coerce(v, field);
  }
  if (unit.size() != n) throw Error(ErrorCode::DimensionMismatch, "unit vector has wrong length");
  unit = coerce(unit, field);
  for (auto& e : idempotents) {
    if (e.size() != n) throw Error(ErrorCode::DimensionMismatch, "idempotent vector has wrong length");
    e = coerce(e, field);
  }
  d->labels = std::move(labels);
  d->table = std::move(table);
  d->unit = std::move(unit);
  d->idempotents = std::move(idempotents);
  d->quiver = std::move(quiver);
  d->trivial_path = std::move(trivial_path);

  d->left.assign(n, Matrix(n, n, field));
  d->right.assign(n, Matrix(n, n, field));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      d->left[i].set_col(j, d->table[i * n + j]);
      d->right[j].set_col(i, d->table[i * n + j]);
    }

  auto left_of = [&](const Vec& a) {
    Matrix m(n, n, field);
    for (std::size_t i = 0; i < n; ++i)
      if (!a[i].is_zero()) m += d->left[i] * a[i];
    return m;
  };
  auto right_of = [&](const Vec& a) {
    Matrix m(n, n, field);
    for (std::size_t i = 0; i < n; ++i)
      if (!a[i].is_zero()) m += d->right[i] * a[i];
    return m;
  };

  Matrix lu = left_of(d->unit);
  Matrix ru = right_of(d->unit);
  for (std::size_t i = 0; i < n; ++i) {
    if (lu.col(i) != unit_vec(n, i, field) || ru.col(i) != unit_vec(n, i, field)) {
      throw Error(ErrorCode::UnitViolation, "unit does not fix basis element " + d->labels[i]);
    }
  }

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vec& ij = d->table[i * n + j];
      for (std::size_t l = 0; l < n; ++l) {
        if (d->right[l].apply(ij) != d->left[i].apply(d->table[j * n + l])) {
          throw Error(ErrorCode::AssociativityViolation, "(" + d->labels[i] + "*" + d->labels[j] + ")*" +
                                                             d->labels[l] + " != " + d->labels[i] + "*(" +
                                                             d->labels[j] + "*" + d->labels[l] + ")");
        }
      }
    }

  const std::size_t k = d->idempotents.size();
  if (k == 0 && n > 0) throw Error(ErrorCode::IdempotentViolation, "idempotent list is empty");
  auto mul = [&](const Vec& a, const Vec& b) { return left_of(a).apply(b); };
  Vec sum = zero_vec(n, field);
  for (std::size_t i = 0; i < k; ++i) {
    const Vec& e = d->idempotents[i];
    if (is_zero(e)) throw Error(ErrorCode::IdempotentViolation, "idempotent " + std::to_string(i) + " is zero");
    for (std::size_t j = 0; j < k; ++j) {
      Vec p = mul(e, d->idempotents[j]);
      if (i == j && p != e) throw Error(ErrorCode::IdempotentViolation, "e" + std::to_string(i) + " is not idempotent");
      if (i != j && !is_zero(p)) {
        throw Error(ErrorCode::IdempotentViolation,
                    "e" + std::to_string(i) + " * e" + std::to_string(j) + " is nonzero");
      }
    }
    sum = add(sum, e);
  }
  if (sum != d->unit) throw Error(ErrorCode::IdempotentViolation, "idempotents do not sum to the unit");

  std::vector<Matrix> le(k), re(k);
  for (std::size_t i = 0; i < k; ++i) {
    le[i] = left_of(d->idempotents[i]);
    re[i] = right_of(d->idempotents[i]);
  }
  d->peirce.resize(k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) d->peirce[i * k + j] = SubspaceBasis(column_basis(le[i] * re[j]));

  // Each corner e·A·e must be local with residue field k: every basis element
  // is λ·e plus a nilpotent, and those nilpotent parts span an ideal.
  std::vector<Matrix> pieces;
  for (std::size_t i = 0; i < k; ++i) {
    const SubspaceBasis& corner = d->peirce[i * k + i];
    const std::size_t cd = corner.dim();
    const Vec& e = d->idempotents[i];
    std::vector<Vec> nil;
    for (std::size_t c = 0; c < cd; ++c) {
      Vec b = corner.basis().col(c);
      Matrix lb = left_of(b);
      Matrix restricted = corner.coords(lb * corner.basis());
      auto lambda = single_eigenvalue(charpoly(restricted), field);
      if (!lambda) {
        throw Error(ErrorCode::IdempotentViolation,
                    "idempotent " + std::to_string(i) + " is not primitive: e A e is not local (basis element " +
                        std::to_string(c) + ")");
      }
      Vec r = b;
      axpy(r, -*lambda, e);
      nil.push_back(std::move(r));
    }
    Matrix nspan = column_basis(Matrix::from_columns(nil, n, field));
    if (nspan.cols() + 1 != cd) {
      throw Error(ErrorCode::IdempotentViolation, "idempotent " + std::to_string(i) + " is not primitive");
    }
    pieces.push_back(nspan);
  }

  // Product spans without an Algebra value yet.
  auto span_products = [&](const Matrix& u, const Matrix& v) {
    std::vector<Vec> cols;
    for (std::size_t a = 0; a < u.cols(); ++a) {
      Matrix lu2 = left_of(u.col(a));
      for (std::size_t b = 0; b < v.cols(); ++b) {
        Vec p = lu2.apply(v.col(b));
        if (!is_zero(p)) cols.push_back(std::move(p));
      }
    }
    if (cols.empty()) return Matrix(n, 0, field);
    return column_basis(Matrix::from_columns(cols, n, field));
  };
  for (std::size_t i = 0; i < k; ++i) {
    const Matrix& nspan = pieces[i];
    Matrix sq = span_products(nspan, nspan);
    if (sq.cols() > 0 && rank(hstack({nspan, sq}, n, field)) != nspan.cols()) {
      throw Error(ErrorCode::IdempotentViolation, "idempotent " + std::to_string(i) + " is not primitive");
    }
    Matrix power = nspan;
    std::size_t steps = 0;
    while (power.cols() > 0 && steps <= n) {
      power = span_products(power, nspan);
      ++steps;
    }
    if (power.cols() > 0) {
      throw Error(ErrorCode::IdempotentViolation, "idempotent " + std::to_string(i) + " is not primitive");
    }
  }

  std::vector<Matrix> rad_parts;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) rad_parts.push_back(i == j ? pieces[i] : d->peirce[i * k + j].basis());
  Matrix rad = rad_parts.empty() ? Matrix(n, 0, field) : hstack(rad_parts, n, field);
  if (rad.cols() > 0) rad = column_basis(rad);
  for (std::size_t c = 0; c < rad.cols(); ++c) {
    Vec v = rad.col(c);
    for (std::size_t b = 0; b < n; ++b) {
      if (!span_contains(rad, d->left[b].apply(v)) || !span_contains(rad, d->right[b].apply(v))) {
        throw Error(ErrorCode::NonBasic, "algebra is not basic: the idempotent radical is not an ideal");
      }
    }
  }
  Matrix power = rad;
  std::size_t steps = 0;
  while (power.cols() > 0 && steps <= n) {
    power = span_products(power, rad);
    ++steps;
  }
  if (power.cols() > 0) throw Error(ErrorCode::NonBasic, "algebra is not basic: radical is not nilpotent");
  d->radical = SubspaceBasis(rad);

  Matrix rad2 = span_products(rad, rad);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      Matrix proj = le[i] * re[j];
      Matrix chosen = rad2.cols() > 0 ? column_basis(proj * rad2) : Matrix(n, 0, field);
      Matrix piece = rad.cols() > 0 ? column_basis(proj * rad) : Matrix(n, 0, field);
      for (std::size_t c = 0; c < piece.cols(); ++c) {
        Vec v = piece.col(c);
        if (span_contains(chosen, v)) continue;
        chosen = chosen.cols() == 0 ? Matrix::column(v, field) : hstack({chosen, Matrix::column(v, field)}, n, field);
        d->arrows.push_back({i, j, v});
      }
    }
  d->generators = d->idempotents;
  for (const auto& a : d->arrows) d->generators.push_back(a.element);

  Algebra out;
  out.data_ = std::move(d);
  return out;
}

Algebra Algebra::from_structure_constants(Field field, std::vector<std::string> labels,
                                          const std::vector<std::vector<Vec>>& products, Vec unit,
                                          std::vector<Vec> idempotents) {
  const std::size_t n = labels.size();
  if (products.size() != n) throw Error(ErrorCode::DimensionMismatch, "product table must have dim rows");
  std::vector<Vec> table;
  table.reserve(n * n);
  for (const auto& row : products) {
    if (row.size() != n) throw Error(ErrorCode::DimensionMismatch, "product table must have dim columns");
    for (const auto& v : row) table.push_back(v);
  }
  return build(field, std::move(labels), std::move(table), std::move(unit), std::move(idempotents), std::nullopt,
               {});
}

Algebra Algebra::ground(Field field) {
  return from_structure_constants(field, {"1"}, {{{Scalar(1)}}}, {Scalar(1)}, {{Scalar(1)}});
}

namespace {

struct PathKey {
  std::size_t vertex = 0;  // meaningful for trivial paths
  std::vector<std::size_t> arrows;
  bool operator<(const PathKey& o) const {
    if (arrows.size() != o.arrows.size()) return arrows.size() < o.arrows.size();
    if (arrows.empty()) return vertex < o.vertex;
    return arrows < o.arrows;
  }
};

}  // namespace

Algebra Algebra::from_quiver(const QuiverPresentation& q, Field field) {
  const std::size_t nv = q.vertices.size();
  if (nv == 0) throw Error(ErrorCode::InvalidInput, "quiver has no vertices");
  if (q.nilpotency_bound < 1) throw Error(ErrorCode::InvalidInput, "nilpotency bound must be at least 1");
  for (const auto& a : q.arrows) {
    if (a.source >= nv || a.target >= nv) throw Error(ErrorCode::InvalidRelation, "arrow " + a.name + " has unknown endpoint");
  }
  auto src = [&](const PathKey& p) { return p.arrows.empty() ? p.vertex : q.arrows[p.arrows.front()].source; };
  auto tgt = [&](const PathKey& p) { return p.arrows.empty() ? p.vertex : q.arrows[p.arrows.back()].target; };

  for (std::size_t r = 0; r < q.relations.size(); ++r) {
    for (const auto& term : q.relations[r]) {
      if (term.arrows.empty()) {
        throw Error(ErrorCode::InvalidRelation, "relation " + std::to_string(r) + " contains a trivial path");
      }
      for (std::size_t t = 0; t < term.arrows.size(); ++t) {
        if (term.arrows[t] >= q.arrows.size()) {
          throw Error(ErrorCode::InvalidRelation, "relation " + std::to_string(r) + " references an unknown arrow");
        }
        if (t > 0 && q.arrows[term.arrows[t - 1]].target != q.arrows[term.arrows[t]].source) {
          throw Error(ErrorCode::InvalidRelation, "relation " + std::to_string(r) + " contains a non-composable path");
        }
      }
    }
  }

  // Paths of length < L: vertices, arrows in input order, then longer paths
  // ordered by their label sequence.
  std::vector<PathKey> paths;
  for (std::size_t v = 0; v < nv; ++v) paths.push_back({v, {}});
  std::vector<PathKey> layer;
  if (q.nilpotency_bound > 1)
    for (std::size_t a = 0; a < q.arrows.size(); ++a) layer.push_back({0, {a}});
  for (std::size_t len = 1; len < q.nilpotency_bound && !layer.empty(); ++len) {
    if (len > 1) {
      std::sort(layer.begin(), layer.end(), [&](const PathKey& x, const PathKey& y) {
        return std::lexicographical_compare(x.arrows.begin(), x.arrows.end(), y.arrows.begin(), y.arrows.end(),
                                            [&](std::size_t u, std::size_t w) {
                                              return q.arrows[u].name < q.arrows[w].name;
                                            });
      });
    }
    paths.insert(paths.end(), layer.begin(), layer.end());
    std::vector<PathKey> next;
    for (const auto& p : layer)
      for (std::size_t a = 0; a < q.arrows.size(); ++a)
        if (q.arrows[a].source == tgt(p)) {
          PathKey e = p;
          e.arrows.push_back(a);
          next.push_back(std::move(e));
        }
    layer = std::move(next);
  }
  const std::size_t np = paths.size();
  std::map<PathKey, std::size_t> index;
  for (std::size_t i = 0; i < np; ++i) index[paths[i]] = i;

  // Index of a·b, or nothing when not composable or of length >= L.
  auto concat = [&](const PathKey& a, const PathKey& b) -> std::optional<std::size_t> {
    if (tgt(a) != src(b)) return std::nullopt;
    PathKey c = a.arrows.empty() ? b : a;
    if (!a.arrows.empty()) c.arrows.insert(c.arrows.end(), b.arrows.begin(), b.arrows.end());
    auto it = index.find(c);
    if (it == index.end()) return std::nullopt;
    return it->second;
  };

  // Two-sided ideal: p·r·p' over all paths p, p' and relations r.
  std::vector<Vec> ideal;
  for (const auto& rel : q.relations) {
    for (std::size_t a = 0; a < np; ++a)
      for (std::size_t b = 0; b < np; ++b) {
        Vec v = zero_vec(np, field);
        bool any = false;
        for (const auto& term : rel) {
          if (tgt(paths[a]) != q.arrows[term.arrows.front()].source) continue;
          PathKey t = paths[a];
          t.arrows.insert(t.arrows.end(), term.arrows.begin(), term.arrows.end());
          auto full = concat(t, paths[b]);
          if (!full) continue;
          v[*full] += Scalar::from(field, 0) + term.coeff;
          any = true;
        }
        if (any && !is_zero(v)) ideal.push_back(std::move(v));
      }
  }

  // Eliminate the largest paths first so the kept basis favours short ones.
  Matrix rel_rev(np, ideal.size(), field);
  for (std::size_t c = 0; c < ideal.size(); ++c)
    for (std::size_t r = 0; r < np; ++r) rel_rev(np - 1 - r, c) = ideal[c][r];
  Quotient quo = quotient_by(rel_rev, np, field);
  const std::size_t dim = quo.dim();
  Matrix proj(dim, np, field);
  for (std::size_t t = 0; t < dim; ++t)
    for (std::size_t idx = 0; idx < np; ++idx) proj(t, idx) = quo.projection(dim - 1 - t, np - 1 - idx);
  std::vector<std::size_t> kept;
  for (std::size_t t = 0; t < dim; ++t) {
    std::size_t rev = 0;
    for (std::size_t r = 0; r < np; ++r)
      if (quo.section(r, dim - 1 - t).is_one()) rev = r;
    kept.push_back(np - 1 - rev);
  }

  std::vector<std::string> labels;
  std::vector<bool> trivial;
  for (std::size_t idx : kept) {
    const PathKey& p = paths[idx];
    trivial.push_back(p.arrows.empty());
    if (p.arrows.empty()) {
      labels.push_back("e_" + q.vertices[p.vertex]);
    } else {
      std::string s;
      for (std::size_t t = 0; t < p.arrows.size(); ++t) s += (t ? "*" : "") + q.arrows[p.arrows[t]].name;
      labels.push_back(s);
    }
  }
  std::vector<Vec> table;
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) {
      auto c = concat(paths[kept[i]], paths[kept[j]]);
      table.push_back(c ? proj.col(*c) : zero_vec(dim, field));
    }
  Vec unit = zero_vec(dim, field);
  std::vector<Vec> idem;
  for (std::size_t v = 0; v < nv; ++v) {
    std::size_t pos = std::find(kept.begin(), kept.end(), index.at(paths[v])) - kept.begin();
    unit[pos] = Scalar::from(field, 1);
    idem.push_back(unit_vec(dim, pos, field));
  }
  return build(field, std::move(labels), std::move(table), std::move(unit), std::move(idem), q, std::move(trivial));
}

Field Algebra::field() const { return data_->field; }
std::size_t Algebra::dim() const { return data_ ? data_->dim : 0; }
const std::vector<std::string>& Algebra::labels() const { return data_->labels; }
const Vec& Algebra::unit() const { return data_->unit; }
const std::vector<Vec>& Algebra::idempotents() const { return data_->idempotents; }
std::size_t Algebra::num_idempotents() const { return data_->idempotents.size(); }
Vec Algebra::basis_vec(std::size_t i) const { return unit_vec(data_->dim, i, data_->field); }
const Vec& Algebra::product(std::size_t i, std::size_t j) const { return data_->table[i * data_->dim + j]; }

Vec Algebra::mul(const Vec& a, const Vec& b) const {
  const std::size_t n = data_->dim;
  if (a.size() != n || b.size() != n) throw Error(ErrorCode::DimensionMismatch, "algebra element has wrong length");
  Vec out = zero_vec(n, data_->field);
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (b[j].is_zero()) continue;
      axpy(out, a[i] * b[j], data_->table[i * n + j]);
    }
  }
  return out;
}

const Matrix& Algebra::left_mult(std::size_t i) const { return data_->left[i]; }
const Matrix& Algebra::right_mult(std::size_t i) const { return data_->right[i]; }

Matrix Algebra::left_mult(const Vec& a) const {
  Matrix m(data_->dim, data_->dim, data_->field);
  for (std::size_t i = 0; i < data_->dim; ++i)
    if (!a[i].is_zero()) m += data_->left[i] * a[i];
  return m;
}

Matrix Algebra::right_mult(const Vec& a) const {
  Matrix m(data_->dim, data_->dim, data_->field);
  for (std::size_t i = 0; i < data_->dim; ++i)
    if (!a[i].is_zero()) m += data_->right[i] * a[i];
  return m;
}

const SubspaceBasis& Algebra::peirce(std::size_t i, std::size_t j) const {
  return data_->peirce[i * data_->idempotents.size() + j];
}
const SubspaceBasis& Algebra::radical_basis() const { return data_->radical; }
const std::vector<Vec>& Algebra::generators() const { return data_->generators; }
const std::vector<AlgebraArrow>& Algebra::arrows() const { return data_->arrows; }
const std::optional<QuiverPresentation>& Algebra::quiver() const { return data_->quiver; }

bool Algebra::basis_is_trivial_path(std::size_t i) const {
  return i < data_->trivial_path.size() && data_->trivial_path[i];
}

bool Algebra::same_as(const Algebra& other) const {
  if (data_ == other.data_) return true;
  if (!data_ || !other.data_) return false;
  return data_->field == other.data_->field && data_->dim == other.data_->dim &&
         data_->table == other.data_->table && data_->idempotents == other.data_->idempotents;
}

Algebra product_algebra(const Algebra& a, const Algebra& b) {
  if (!(a.field() == b.field())) throw Error(ErrorCode::FieldMismatch, "product of algebras over different fields");
  const std::size_t na = a.dim(), nb = b.dim(), n = na + nb;
  const Field f = a.field();
  std::vector<std::string> labels = a.labels();
  labels.insert(labels.end(), b.labels().begin(), b.labels().end());
  std::vector<std::vector<Vec>> products(n, std::vector<Vec>(n, zero_vec(n, f)));
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < na; ++j)
      for (std::size_t k = 0; k < na; ++k) products[i][j][k] = a.product(i, j)[k];
  for (std::size_t i = 0; i < nb; ++i)
    for (std::size_t j = 0; j < nb; ++j)
      for (std::size_t k = 0; k < nb; ++k) products[na + i][na + j][na + k] = b.product(i, j)[k];
  Vec unit = zero_vec(n, f);
  std::vector<Vec> idem;
  for (const auto& e : a.idempotents()) {
    Vec v = zero_vec(n, f);
    for (std::size_t k = 0; k < na; ++k) v[k] = e[k];
    unit = add(unit, v);
    idem.push_back(std::move(v));
  }
  for (const auto& e : b.idempotents()) {
    Vec v = zero_vec(n, f);
    for (std::size_t k = 0; k < nb; ++k) v[na + k] = e[k];
    unit = add(unit, v);
    idem.push_back(std::move(v));
  }
  return Algebra::from_structure_constants(f, std::move(labels), products, std::move(unit), std::move(idem));
}

Matrix product_span(const Algebra& a, const Matrix& u, const Matrix& v) {
  const std::size_t n = a.dim();
  std::vector<Vec> cols;
  for (std::size_t i = 0; i < u.cols(); ++i) {
    Matrix lu = a.left_mult(u.col(i));
    for (std::size_t j = 0; j < v.cols(); ++j) {
      Vec p = lu.apply(v.col(j));
      if (!is_zero(p)) cols.push_back(std::move(p));
    }
  }
  if (cols.empty()) return Matrix(n, 0, a.field());
  return column_basis(Matrix::from_columns(cols, n, a.field()));
}

namespace {

void require_nilpotent_ideal(const Algebra& a, const Matrix& rad, const char* route) {
  const std::size_t n = a.dim();
  for (std::size_t c = 0; c < rad.cols(); ++c)
    for (std::size_t b = 0; b < n; ++b) {
      Vec v = rad.col(c);
      if (!span_contains(rad, a.left_mult(b).apply(v)) || !span_contains(rad, a.right_mult(b).apply(v))) {
        throw Error(ErrorCode::RadicalUnavailable, std::string(route) + " radical is not an ideal");
      }
    }
  Matrix power = rad;
  for (std::size_t s = 0; s <= n && power.cols() > 0; ++s) power = product_span(a, power, rad);
  if (power.cols() > 0) throw Error(ErrorCode::RadicalUnavailable, std::string(route) + " radical is not nilpotent");
  // A/rad is semisimple iff its own radical vanishes; for basic algebras that
  // means rad has codimension equal to the number of idempotents.
  if (n - rad.cols() != a.num_idempotents()) {
    throw Error(ErrorCode::RadicalUnavailable, std::string(route) + " radical has the wrong codimension");
  }
}

}  // namespace

Matrix radical_from_quiver(const Algebra& a) {
  if (!a.quiver()) throw Error(ErrorCode::InvalidInput, "algebra has no quiver presentation");
  std::vector<Vec> cols;
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (!a.basis_is_trivial_path(i)) cols.push_back(a.basis_vec(i));
  Matrix rad = Matrix::from_columns(cols, a.dim(), a.field());
  require_nilpotent_ideal(a, rad, "quiver");
  return rad;
}

Matrix radical_from_trace_form(const Algebra& a) {
  if (!a.field().is_rational()) {
    throw Error(ErrorCode::UnsupportedField, "trace-form radical needs characteristic zero");
  }
  const std::size_t n = a.dim();
  Vec traces(n);
  for (std::size_t k = 0; k < n; ++k) {
    Scalar t = 0;
    for (std::size_t i = 0; i < n; ++i) t += a.left_mult(k)(i, i);
    traces[k] = t;
  }
  Matrix form(n, n, a.field());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Scalar t = 0;
      const Vec& p = a.product(i, j);
      for (std::size_t k = 0; k < n; ++k)
        if (!p[k].is_zero()) t += p[k] * traces[k];
      form(i, j) = t;
    }
  Matrix rad = kernel(form);
  require_nilpotent_ideal(a, rad, "trace-form");
  return rad;
}

Matrix radical_from_idempotents(const Algebra& a) { return a.radical_basis().basis(); }

Matrix radical(const Algebra& a) {
  if (a.quiver()) return radical_from_quiver(a);
  if (a.field().is_rational()) return radical_from_trace_form(a);
  return radical_from_idempotents(a);
}

}  // namespace trimat
