#include "trimat/invariants/cartan.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <utility>

#include "trimat/error.hpp"

namespace trimat {

IntMatrix cartan_matrix(const Algebra& a) {
  const std::size_t n = a.num_idempotents();
  IntMatrix c(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) c(i, j) = static_cast<unsigned long>(a.peirce(j, i).dim());
  return c;
}

CartanBlockCheck cartan_block_check(const TriangularData& d) {
  CartanBlockCheck out;
  const std::size_t n = d.r.num_idempotents(), m = d.s.num_idempotents();
  out.lambda = cartan_matrix(build_triangular(d).lambda);
  out.c_m = IntMatrix(m, n);
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t i = 0; i < n; ++i)
      out.c_m(j, i) = static_cast<unsigned long>(
          rank(d.m.left_act(d.r.idempotents()[i]) * d.m.right_act(d.s.idempotents()[j])));
  out.predicted = IntMatrix(n + m, n + m);
  out.predicted.set_block(0, 0, cartan_matrix(d.r));
  out.predicted.set_block(n, 0, out.c_m);
  out.predicted.set_block(n, n, cartan_matrix(d.s));
  out.pass = out.predicted == out.lambda;
  return out;
}

mpz_class euler_pairing(const IntMatrix& c, const std::vector<mpz_class>& v, const std::vector<mpz_class>& w) {
  if (v.size() != c.rows() || w.size() != c.cols()) throw Error(ErrorCode::DimensionMismatch, "euler_pairing");
  mpz_class s = 0;
  for (std::size_t i = 0; i < c.rows(); ++i)
    for (std::size_t j = 0; j < c.cols(); ++j) s += v[i] * c(i, j) * w[j];
  return s;
}

namespace {

IntMatrix lower_triangular_blocks(const IntMatrix& a, const IntMatrix& b, const IntMatrix& c) {
  const std::size_t n = a.rows(), m = b.rows();
  IntMatrix out(n + m, n + m);
  out.set_block(0, 0, a);
  out.set_block(n, 0, c);
  out.set_block(n, n, b);
  return out;
}

}  // namespace

IntMatrix congruence_witness_blockswap(const IntMatrix& a, const IntMatrix& b, const IntMatrix& c) {
  const std::size_t n = a.rows(), m = b.rows();
  if (!a.is_square() || !b.is_square() || c.rows() != m || c.cols() != n) {
    throw Error(ErrorCode::DimensionMismatch, "blocks do not form [[A, 0], [C, B]]");
  }
  IntMatrix p(n + m, n + m);
  if (is_unimodular(b)) {
    IntMatrix bi = unimodular_inverse(b);
    p.set_block(0, m, IntMatrix::identity(n));
    p.set_block(n, 0, -(bi * b.transpose()));
    p.set_block(n, m, -(bi * c));
  } else if (is_unimodular(a)) {
    IntMatrix ait = unimodular_inverse(a).transpose();
    p.set_block(0, 0, -(ait * c.transpose()));
    p.set_block(0, m, -(ait * a));
    p.set_block(n, 0, IntMatrix::identity(m));
  } else {
    throw Error(ErrorCode::NeitherBlockInvertible, "neither diagonal block is unimodular");
  }
  IntMatrix target = lower_triangular_blocks(b, a, c.transpose());
  if (p.transpose() * lower_triangular_blocks(a, b, c) * p != target || !is_unimodular(p)) {
    throw Error(ErrorCode::InvariantViolation, "block-swap witness does not transform the matrix");
  }
  return p;
}

std::string CongruenceResult::kind_name() const {
  switch (kind) {
    case Kind::Congruent: return "Congruent";
    case Kind::NotCongruent: return "NotCongruent";
    case Kind::Unknown: return "Unknown";
  }
  return "Unknown";
}

bool is_positive_definite(const IntMatrix& s) {
  for (std::size_t k = 1; k <= s.rows(); ++k)
    if (determinant(s.block(0, 0, k, k)) <= 0) return false;
  return true;
}

std::vector<std::vector<mpz_class>> vectors_of_norm(const IntMatrix& q0, const mpz_class& value, std::size_t limit) {
  const std::size_t n = q0.rows();
  std::vector<std::vector<mpq_class>> q(n, std::vector<mpq_class>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) q[i][j] = q0(i, j);
  // Q(x) = Σ_i q_ii (x_i + Σ_{j>i} q_ij x_j)².
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      q[j][i] = q[i][j];
      q[i][j] /= q[i][i];
    }
    for (std::size_t k = i + 1; k < n; ++k)
      for (std::size_t l = k; l < n; ++l) q[k][l] -= q[k][i] * q[i][l];
  }
  std::vector<std::vector<mpz_class>> out;
  std::vector<mpz_class> x(n);
  std::function<void(std::size_t, const mpq_class&)> walk = [&](std::size_t level, const mpq_class& budget) {
    if (out.size() > limit) return;
    if (level == 0) {
      if (budget == 0) out.push_back(x);
      return;
    }
    const std::size_t i = level - 1;
    mpq_class c = 0;
    for (std::size_t j = i + 1; j < n; ++j) c += q[i][j] * x[j];
    auto cost = [&](const mpz_class& xi) {
      mpq_class t = xi + c;
      return mpq_class(q[i][i] * t * t);
    };
    mpz_class start;
    mpz_fdiv_q(start.get_mpz_t(), mpq_class(-c).get_num_mpz_t(), mpq_class(-c).get_den_mpz_t());
    std::vector<mpz_class> values;
    for (mpz_class v = start; cost(v) <= budget; --v) values.push_back(v);
    for (mpz_class v = start + 1; cost(v) <= budget; ++v) values.push_back(v);
    std::sort(values.begin(), values.end());
    for (const auto& v : values) {
      x[i] = v;
      walk(level - 1, budget - cost(v));
    }
  };
  if (n > 0) walk(n, mpq_class(value));
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

using IntVec = std::vector<mpz_class>;

bool same_smith(const IntMatrix& a, const IntMatrix& b) {
  return smith_normal_form(a).invariants() == smith_normal_form(b).invariants();
}

IntVec times(const IntMatrix& m, const IntVec& v) {
  IntVec out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i] += m(i, j) * v[j];
  return out;
}

mpz_class dot(const IntVec& a, const IntVec& b) {
  mpz_class s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Columns p_0 … p_{n−1} from the candidate lists with p_iᵗ C1 p_j = C2_ij.
std::optional<IntMatrix> assemble(const IntMatrix& c1, const IntMatrix& c2,
                                  const std::vector<std::vector<IntVec>>& candidates) {
  const std::size_t n = c1.rows();
  std::vector<std::vector<IntVec>> left(n), right(n);  // C1ᵗ p and C1 p
  const IntMatrix c1t = c1.transpose();
  for (std::size_t j = 0; j < n; ++j)
    for (const auto& p : candidates[j]) {
      left[j].push_back(times(c1t, p));
      right[j].push_back(times(c1, p));
    }
  std::vector<std::size_t> pick(n);
  std::optional<IntMatrix> found;
  std::function<void(std::size_t)> walk = [&](std::size_t j) {
    if (found) return;
    if (j == n) {
      IntMatrix p(n, n);
      for (std::size_t col = 0; col < n; ++col)
        for (std::size_t row = 0; row < n; ++row) p(row, col) = candidates[col][pick[col]][row];
      if (is_unimodular(p) && p.transpose() * c1 * p == c2) found = p;
      return;
    }
    for (std::size_t t = 0; t < candidates[j].size(); ++t) {
      const IntVec& pj = candidates[j][t];
      bool ok = true;
      for (std::size_t i = 0; i < j && ok; ++i) {
        // p_iᵗ C1 p_j and p_jᵗ C1 p_i.
        ok = dot(left[i][pick[i]], pj) == c2(i, j) && dot(right[i][pick[i]], pj) == c2(j, i);
      }
      if (!ok) continue;
      pick[j] = t;
      walk(j + 1);
      if (found) return;
    }
  };
  walk(0);
  return found;
}

}  // namespace

CongruenceResult congruent_over_z(const IntMatrix& c1, const IntMatrix& c2, const CongruenceOptions& options) {
  if (!c1.is_square() || !c2.is_square() || c1.rows() != c2.rows()) {
    throw Error(ErrorCode::DimensionMismatch, "congruence needs square matrices of one size");
  }
  const std::size_t n = c1.rows();
  CongruenceResult res;
  if (c1 == c2) {
    res.kind = CongruenceResult::Kind::Congruent;
    res.witness = IntMatrix::identity(n);
    res.method = "identity";
    return res;
  }
  auto refuted = [&](std::string method) {
    res.kind = CongruenceResult::Kind::NotCongruent;
    res.method = std::move(method);
    return res;
  };
  const IntMatrix s1 = c1 + c1.transpose(), s2 = c2 + c2.transpose();
  if (determinant(c1) != determinant(c2)) return refuted("determinant");
  if (!same_smith(c1, c2)) return refuted("smith C");
  if (!same_smith(s1, s2)) return refuted("smith C+Ct");
  if (!same_smith(c1 - c1.transpose(), c2 - c2.transpose())) return refuted("smith C-Ct");

  // C1 = [[A, 0], [C, B]] and C2 = [[B, 0], [Cᵗ, A]] for some split.
  for (std::size_t k = 1; k < n; ++k) {
    const std::size_t m = n - k;
    if (c1.block(0, k, k, m) != IntMatrix(k, m)) continue;
    IntMatrix a = c1.block(0, 0, k, k), b = c1.block(k, k, m, m), c = c1.block(k, 0, m, k);
    if (c2 != lower_triangular_blocks(b, a, c.transpose())) continue;
    try {
      res.witness = congruence_witness_blockswap(a, b, c);
      res.kind = CongruenceResult::Kind::Congruent;
      res.method = "block swap";
      return res;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NeitherBlockInvertible) throw;
    }
  }

  std::vector<std::vector<IntVec>> candidates(n);
  if (is_positive_definite(s1)) {
    for (std::size_t j = 0; j < n; ++j) {
      candidates[j] = vectors_of_norm(s1, s2(j, j), options.max_candidates);
      res.candidate_counts.push_back(candidates[j].size());
      if (candidates[j].size() > options.max_candidates) {
        res.method = "enumeration exceeded the candidate limit";
        return res;
      }
    }
    if (auto p = assemble(c1, c2, candidates)) {
      res.kind = CongruenceResult::Kind::Congruent;
      res.witness = *p;
      res.method = "enumeration";
      return res;
    }
    return refuted("enumeration");
  }

  // Indefinite or degenerate symmetric part: bounded search only.
  res.search_bound = options.search_bound;
  const long b = options.search_bound;
  std::size_t box = 1;
  for (std::size_t i = 0; i < n && box <= options.max_candidates; ++i) box *= static_cast<std::size_t>(2 * b + 1);
  res.method = "search";
  if (box > options.max_candidates) return res;
  IntVec v(n, mpz_class(-b));
  for (std::size_t count = 0; count < box; ++count) {
    IntVec c1v = times(c1, v);
    const mpz_class norm = dot(v, c1v);
    for (std::size_t j = 0; j < n; ++j)
      if (norm == c2(j, j)) candidates[j].push_back(v);
    for (std::size_t i = n; i-- > 0;) {
      if (v[i] < b) {
        ++v[i];
        break;
      }
      v[i] = -b;
    }
  }
  for (const auto& c : candidates) res.candidate_counts.push_back(c.size());
  if (auto p = assemble(c1, c2, candidates)) {
    res.kind = CongruenceResult::Kind::Congruent;
    res.witness = *p;
  }
  return res;
}

std::vector<mpz_class> coxeter_polynomial(const IntMatrix& c) {
  if (!c.is_square() || determinant(c) == 0) throw Error(ErrorCode::SingularCartan, "Cartan matrix is singular");
  Matrix cf = c.to_field();
  Matrix phi = inverse(cf.transpose()) * cf * Scalar::from(cf.field(), -1);
  Poly chi = charpoly(phi);
  mpz_class den = 1;
  for (const auto& s : chi) den = lcm(den, s.to_mpq().get_den());
  std::vector<mpz_class> out;
  mpz_class g = 0;
  for (const auto& s : chi) {
    mpq_class v = s.to_mpq() * den;
    out.push_back(v.get_num());
    g = gcd(g, v.get_num());
  }
  if (g != 0)
    for (auto& v : out) v /= g;
  return out;
}

}  // namespace trimat
