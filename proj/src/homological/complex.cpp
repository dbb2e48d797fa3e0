#include "trimat/homological/complex.hpp"

#include <algorithm>
#include <utility>

#include "trimat/error.hpp"

namespace trimat {

ProjModule::ProjModule(const Algebra& a, std::vector<std::size_t> vertices)
    : algebra_(a), vertices_(std::move(vertices)) {
  auto corner = std::make_shared<std::vector<SubspaceBasis>>();
  for (const auto& e : a.idempotents()) corner->emplace_back(column_basis(a.left_mult(e)));
  corner_ = std::move(corner);
  std::vector<RightModule> parts;
  std::size_t off = 0;
  for (std::size_t v : vertices_) {
    if (v >= a.num_idempotents()) throw Error(ErrorCode::InvalidInput, "projective summand: vertex out of range");
    offsets_.push_back(off);
    off += (*corner_)[v].dim();
    parts.push_back(projective_module(a, v));
  }
  module_ = direct_sum(parts, a);
}

std::size_t ProjModule::multiplicity(std::size_t v) const {
  return static_cast<std::size_t>(std::count(vertices_.begin(), vertices_.end(), v));
}

Vec ProjModule::embed(std::size_t k, const Vec& a) const {
  Vec out = zero_vec(dim(), algebra_.field());
  Vec c = (*corner_)[vertices_[k]].coords(a);
  for (std::size_t i = 0; i < c.size(); ++i) out[offsets_[k] + i] = c[i];
  return out;
}

Vec ProjModule::component(const Vec& p, std::size_t k) const {
  const SubspaceBasis& sb = (*corner_)[vertices_[k]];
  Vec c(p.begin() + static_cast<long>(offsets_[k]), p.begin() + static_cast<long>(offsets_[k] + sb.dim()));
  return sb.basis().apply(c);
}

ProjMap::ProjMap(std::size_t rows, std::size_t cols, const Algebra& a)
    : rows_(rows), cols_(cols), entries_(rows * cols, zero_vec(a.dim(), a.field())) {}

bool ProjMap::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Vec& v) { return trimat::is_zero(v); });
}

ProjMap& ProjMap::operator+=(const ProjMap& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw Error(ErrorCode::DimensionMismatch, "ProjMap sum");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] = add(entries_[i], rhs.entries_[i]);
  return *this;
}

ProjMap& ProjMap::operator*=(const Scalar& s) {
  for (auto& e : entries_) e = scale(s, e);
  return *this;
}

ProjMap compose(const Algebra& a, const ProjMap& g, const ProjMap& f) {
  if (g.cols() != f.rows()) throw Error(ErrorCode::DimensionMismatch, "ProjMap composition");
  ProjMap out(g.rows(), f.cols(), a);
  for (std::size_t m = 0; m < g.rows(); ++m)
    for (std::size_t l = 0; l < g.cols(); ++l) {
      if (is_zero(g(m, l))) continue;
      for (std::size_t k = 0; k < f.cols(); ++k) {
        if (is_zero(f(l, k))) continue;
        out(m, k) = add(out(m, k), a.mul(g(m, l), f(l, k)));
      }
    }
  return out;
}

ProjMap identity_map(const ProjModule& p) {
  ProjMap id(p.summands(), p.summands(), p.algebra());
  for (std::size_t k = 0; k < p.summands(); ++k) id(k, k) = p.algebra().idempotents()[p.vertices()[k]];
  return id;
}

ProjMap zero_map(const ProjModule& source, const ProjModule& target) {
  return ProjMap(target.summands(), source.summands(), source.algebra());
}

Matrix to_matrix(const ProjModule& source, const ProjModule& target, const ProjMap& f) {
  const Algebra& a = source.algebra();
  Matrix out(target.dim(), source.dim(), a.field());
  for (std::size_t k = 0; k < source.summands(); ++k) {
    const std::size_t begin = source.offset(k);
    const std::size_t end = k + 1 < source.summands() ? source.offset(k + 1) : source.dim();
    for (std::size_t c = begin; c < end; ++c) {
      Vec b = source.component(unit_vec(source.dim(), c, a.field()), k);
      Vec img = zero_vec(target.dim(), a.field());
      for (std::size_t l = 0; l < target.summands(); ++l) {
        if (is_zero(f(l, k))) continue;
        img = add(img, target.embed(l, a.mul(f(l, k), b)));
      }
      out.set_col(c, img);
    }
  }
  return out;
}

ProjMap from_matrix(const ProjModule& source, const ProjModule& target, const Matrix& phi) {
  ProjMap out(target.summands(), source.summands(), source.algebra());
  for (std::size_t k = 0; k < source.summands(); ++k) {
    Vec img = phi.apply(source.generator(k));
    for (std::size_t l = 0; l < target.summands(); ++l) out(l, k) = target.component(img, l);
  }
  return out;
}

Matrix hom_from_generators(const ProjModule& p, const RightModule& y, const std::vector<Vec>& images) {
  const Field f = y.field();
  Matrix out(y.dim(), p.dim(), f);
  for (std::size_t k = 0; k < p.summands(); ++k) {
    const std::size_t begin = p.offset(k);
    const std::size_t end = k + 1 < p.summands() ? p.offset(k + 1) : p.dim();
    for (std::size_t c = begin; c < end; ++c) {
      Vec b = p.component(unit_vec(p.dim(), c, f), k);
      out.set_col(c, y.act(b).apply(images[k]));
    }
  }
  return out;
}

bool is_valid_map(const ProjModule& source, const ProjModule& target, const ProjMap& f) {
  if (f.rows() != target.summands() || f.cols() != source.summands()) return false;
  const Algebra& a = source.algebra();
  for (std::size_t l = 0; l < f.rows(); ++l)
    for (std::size_t k = 0; k < f.cols(); ++k)
      if (!a.peirce(target.vertices()[l], source.vertices()[k]).contains(f(l, k))) return false;
  return true;
}

ProjComplex::ProjComplex(const Algebra& a, int lo, std::vector<ProjModule> terms, std::vector<ProjMap> diffs)
    : algebra_(a), lo_(lo), terms_(std::move(terms)), diffs_(std::move(diffs)), zero_(a, {}) {
  if (terms_.empty() ? !diffs_.empty() : diffs_.size() + 1 != terms_.size()) {
    throw Error(ErrorCode::DimensionMismatch, "complex needs one differential between consecutive terms");
  }
  for (std::size_t i = 0; i < diffs_.size(); ++i) {
    if (diffs_[i].cols() != terms_[i].summands() || diffs_[i].rows() != terms_[i + 1].summands()) {
      throw Error(ErrorCode::DimensionMismatch, "differential does not match its terms");
    }
  }
}

ProjComplex ProjComplex::stalk(const ProjModule& p, int degree) { return ProjComplex(p.algebra(), degree, {p}, {}); }

const ProjModule& ProjComplex::term(int n) const {
  if (n < lo_ || n > hi()) return zero_;
  return terms_[static_cast<std::size_t>(n - lo_)];
}

ProjMap ProjComplex::d(int n) const {
  if (n >= lo_ && n < hi()) return diffs_[static_cast<std::size_t>(n - lo_)];
  return zero_map(term(n), term(n + 1));
}

Matrix ProjComplex::d_matrix(int n) const { return to_matrix(term(n), term(n + 1), d(n)); }

ProjComplex ProjComplex::shift(int m) const {
  std::vector<ProjMap> diffs = diffs_;
  if (m % 2 != 0)
    for (auto& d : diffs) d *= Scalar::from(algebra_.field(), -1);
  return ProjComplex(algebra_, lo_ - m, terms_, std::move(diffs));
}

void ProjComplex::validate() const {
  for (int n = lo_; n < hi(); ++n) {
    if (!is_valid_map(term(n), term(n + 1), d(n))) {
      throw Error(ErrorCode::InvariantViolation, "differential in degree " + std::to_string(n) + " leaves its corner");
    }
  }
  for (int n = lo_; n + 1 < hi(); ++n) {
    if (!compose(algebra_, d(n + 1), d(n)).is_zero()) {
      throw Error(ErrorCode::InvariantViolation, "d∘d ≠ 0 at degree " + std::to_string(n));
    }
  }
}

std::size_t ProjComplex::homology_dim(int n) const {
  return term(n).dim() - rank(d_matrix(n)) - rank(d_matrix(n - 1));
}

std::size_t ProjComplex::total_dim() const {
  std::size_t s = 0;
  for (const auto& t : terms_) s += t.dim();
  return s;
}

ProjComplex direct_sum(const ProjComplex& a, const ProjComplex& b) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  const Algebra& alg = a.algebra();
  const int lo = std::min(a.lo(), b.lo());
  const int hi = std::max(a.hi(), b.hi());
  std::vector<ProjModule> terms;
  for (int n = lo; n <= hi; ++n) {
    std::vector<std::size_t> v = a.term(n).vertices();
    const auto& w = b.term(n).vertices();
    v.insert(v.end(), w.begin(), w.end());
    terms.emplace_back(alg, std::move(v));
  }
  std::vector<ProjMap> diffs;
  for (int n = lo; n < hi; ++n) {
    const std::size_t i = static_cast<std::size_t>(n - lo);
    ProjMap d = zero_map(terms[i], terms[i + 1]);
    ProjMap da = a.d(n), db = b.d(n);
    const std::size_t ra = a.term(n + 1).summands(), ca = a.term(n).summands();
    for (std::size_t l = 0; l < da.rows(); ++l)
      for (std::size_t k = 0; k < da.cols(); ++k) d(l, k) = da(l, k);
    for (std::size_t l = 0; l < db.rows(); ++l)
      for (std::size_t k = 0; k < db.cols(); ++k) d(ra + l, ca + k) = db(l, k);
    diffs.push_back(std::move(d));
  }
  return ProjComplex(alg, lo, std::move(terms), std::move(diffs));
}

HomComplex::HomComplex(ProjComplex p, ProjComplex q) : p_(std::move(p)), q_(std::move(q)) {
  if (!p_.algebra().same_as(q_.algebra())) throw Error(ErrorCode::AlgebraMismatch, "Hom complex over two algebras");
  if (p_.empty() || q_.empty()) return;
  const Algebra& a = p_.algebra();
  for (int n = q_.lo() - p_.hi(); n <= q_.hi() - p_.lo(); ++n) {
    std::vector<Block> blocks;
    std::size_t off = 0;
    for (int i = p_.lo(); i <= p_.hi(); ++i) {
      const ProjModule& src = p_.term(i);
      const ProjModule& dst = q_.term(i + n);
      for (std::size_t l = 0; l < dst.summands(); ++l)
        for (std::size_t k = 0; k < src.summands(); ++k) {
          std::size_t size = a.peirce(dst.vertices()[l], src.vertices()[k]).dim();
          if (size == 0) continue;
          blocks.push_back({i, l, k, off, size});
          off += size;
        }
    }
    dims_[n] = off;
    layout_[n] = std::move(blocks);
  }
}

const std::vector<HomComplex::Block>& HomComplex::layout(int n) const {
  static const std::vector<Block> none;
  auto it = layout_.find(n);
  return it == layout_.end() ? none : it->second;
}

std::size_t HomComplex::dim(int n) const {
  auto it = dims_.find(n);
  return it == dims_.end() ? 0 : it->second;
}

Vec HomComplex::flatten(int n, const ChainFamily& f) const {
  const Algebra& a = p_.algebra();
  Vec out = zero_vec(dim(n), a.field());
  for (const auto& b : layout(n)) {
    auto it = f.find(b.i);
    if (it == f.end()) continue;
    const ProjModule& dst = q_.term(b.i + n);
    const ProjModule& src = p_.term(b.i);
    Vec c = a.peirce(dst.vertices()[b.l], src.vertices()[b.k]).coords(it->second(b.l, b.k));
    for (std::size_t t = 0; t < b.size; ++t) out[b.offset + t] = c[t];
  }
  return out;
}

ChainFamily HomComplex::unflatten(int n, const Vec& v) const {
  const Algebra& a = p_.algebra();
  ChainFamily f;
  if (p_.empty()) return f;
  for (int i = p_.lo(); i <= p_.hi(); ++i) {
    const ProjModule& dst = q_.term(i + n);
    if (dst.summands() == 0) continue;
    f.emplace(i, zero_map(p_.term(i), dst));
  }
  for (const auto& b : layout(n)) {
    const ProjModule& dst = q_.term(b.i + n);
    const ProjModule& src = p_.term(b.i);
    Vec c(v.begin() + static_cast<long>(b.offset), v.begin() + static_cast<long>(b.offset + b.size));
    f.at(b.i)(b.l, b.k) = a.peirce(dst.vertices()[b.l], src.vertices()[b.k]).basis().apply(c);
  }
  return f;
}

ChainFamily HomComplex::apply_differential(int n, const ChainFamily& f) const {
  const Algebra& a = p_.algebra();
  ChainFamily out;
  if (p_.empty()) return out;
  const Scalar sign = Scalar::from(a.field(), n % 2 == 0 ? -1 : 1);
  for (int i = p_.lo(); i <= p_.hi(); ++i) {
    const ProjModule& dst = q_.term(i + n + 1);
    if (dst.summands() == 0) continue;
    ProjMap g = zero_map(p_.term(i), dst);
    auto fi = f.find(i);
    if (fi != f.end()) g += compose(a, q_.d(i + n), fi->second);
    auto fn = f.find(i + 1);
    if (fn != f.end()) {
      ProjMap t = compose(a, fn->second, p_.d(i));
      t *= sign;
      g += t;
    }
    out.emplace(i, std::move(g));
  }
  return out;
}

Matrix HomComplex::differential(int n) const {
  const Field f = p_.algebra().field();
  const std::size_t rows = dim(n + 1), cols = dim(n);
  Matrix out(rows, cols, f);
  for (std::size_t c = 0; c < cols; ++c) {
    out.set_col(c, flatten(n + 1, apply_differential(n, unflatten(n, unit_vec(cols, c, f)))));
  }
  return out;
}

std::size_t HomComplex::cohomology_dim(int n) const {
  return dim(n) - rank(differential(n)) - rank(differential(n - 1));
}

HomComplex::Cohomology HomComplex::cohomology(int n) const {
  const Field f = p_.algebra().field();
  Matrix z = kernel(differential(n));
  if (z.rows() != dim(n)) z = Matrix(dim(n), 0, f);
  Matrix dprev = differential(n - 1);
  Matrix b = dprev.cols() == 0 ? Matrix(dim(n), 0, f) : column_basis(dprev);
  SubspaceBasis cycles(z);
  Quotient q = quotient_by(cycles.coords(b), z.cols(), f);
  Matrix reps = z * q.section;
  return {std::move(cycles), std::move(q), std::move(reps)};
}

ChainFamily compose(const Algebra& a, const ChainFamily& g, int, const ChainFamily& f, int f_degree) {
  ChainFamily out;
  for (const auto& [i, fi] : f) {
    auto gi = g.find(i + f_degree);
    if (gi == g.end()) continue;
    out.emplace(i, compose(a, gi->second, fi));
  }
  return out;
}

}  // namespace trimat
