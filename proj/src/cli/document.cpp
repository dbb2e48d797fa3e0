#include "trimat/cli/document.hpp"

#include <fstream>
#include <sstream>
#include <utility>

#include "trimat/error.hpp"
#include "trimat/invariants/repetitive.hpp"
#include "trimat/mate/mate.hpp"

namespace trimat::cli {

namespace {

[[noreturn]] void schema_error(const std::string& path, const std::string& what) {
  throw Error(ErrorCode::SchemaError, (path.empty() ? std::string("/") : path) + ": " + what);
}

std::string child(const std::string& path, const std::string& key) { return path + "/" + key; }
std::string child(const std::string& path, std::size_t i) { return path + "/" + std::to_string(i); }

const json& member(const json& obj, const std::string& key, const std::string& path) {
  if (!obj.is_object()) schema_error(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) schema_error(path, "missing field '" + key + "'");
  return *it;
}

std::string get_string(const json& j, const std::string& path) {
  if (!j.is_string()) schema_error(path, "expected a string");
  return j.get<std::string>();
}

std::size_t get_index(const json& j, const std::string& path) {
  if (!j.is_number_integer() || j.get<long long>() < 0) schema_error(path, "expected a nonnegative integer");
  return j.get<std::size_t>();
}

const json& get_array(const json& j, const std::string& path) {
  if (!j.is_array()) schema_error(path, "expected an array");
  return j;
}

Scalar parse_scalar(const json& j, Field f, const std::string& path) {
  try {
    if (j.is_number_integer()) return Scalar::parse(std::to_string(j.get<long long>()), f);
    if (j.is_string()) return Scalar::parse(j.get<std::string>(), f);
  } catch (const Error& e) {
    schema_error(path, e.what());
  }
  schema_error(path, "expected an integer or a \"p/q\" string");
}

Vec parse_vec(const json& j, Field f, std::size_t expected, const std::string& path) {
  get_array(j, path);
  if (j.size() != expected) {
    schema_error(path, "expected " + std::to_string(expected) + " entries, found " + std::to_string(j.size()));
  }
  Vec v;
  for (std::size_t i = 0; i < j.size(); ++i) v.push_back(parse_scalar(j[i], f, child(path, i)));
  return v;
}

Matrix parse_matrix(const json& j, Field f, std::size_t rows, std::size_t cols, const std::string& path) {
  get_array(j, path);
  if (j.size() != rows) schema_error(path, "expected " + std::to_string(rows) + " rows, found " + std::to_string(j.size()));
  Matrix m(rows, cols, f);
  for (std::size_t r = 0; r < rows; ++r) {
    Vec row = parse_vec(j[r], f, cols, child(path, r));
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = row[c];
  }
  return m;
}

std::vector<Matrix> parse_actions(const json& j, Field f, std::size_t count, std::size_t dim, const std::string& path) {
  get_array(j, path);
  if (j.size() != count) {
    schema_error(path, "expected " + std::to_string(count) + " action matrices, one per basis element");
  }
  std::vector<Matrix> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(parse_matrix(j[i], f, dim, dim, child(path, i)));
  return out;
}

// Runs a constructor and reports its validation failures at `path`.
template <typename Fn>
auto checked(const std::string& path, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const Error& e) {
    if (e.code() == ErrorCode::SchemaError) throw;
    schema_error(path, e.what());
  }
}

std::size_t vertex_index(const json& j, const std::vector<std::string>& names, const std::string& path) {
  if (j.is_number_integer()) {
    std::size_t v = get_index(j, path);
    if (v >= names.size()) schema_error(path, "vertex index out of range");
    return v;
  }
  std::string name = get_string(j, path);
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return i;
  schema_error(path, "unknown vertex '" + name + "'");
}

}  // namespace

Workspace::Workspace(json doc, std::optional<Field> field_override) : doc_(std::move(doc)) {
  if (!doc_.is_object()) schema_error("", "document must be an object");
  if (get_string(member(doc_, "schema", ""), "/schema") != kSchema) {
    schema_error("/schema", std::string("expected \"") + kSchema + "\"");
  }
  if (field_override) {
    field_ = *field_override;
  } else if (doc_.contains("field")) {
    field_ = checked("/field", [&] { return Field::parse(get_string(doc_["field"], "/field")); });
  } else {
    field_ = Field::rationals();
  }
  for (const char* section : {"algebras", "bimodules", "modules", "triplets", "matrices"}) {
    if (doc_.contains(section) && !doc_[section].is_object()) schema_error(std::string("/") + section, "expected an object");
  }
  for (const auto& [key, value] : doc_.items()) {
    static const std::set<std::string> known = {"schema", "field", "algebras", "bimodules", "modules",
                                                "triplets", "matrices", "description"};
    (void)value;
    if (!known.count(key)) schema_error("/" + key, "unknown top-level field");
  }
}

Workspace Workspace::from_text(const std::string& text, std::optional<Field> field_override) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::SchemaError, std::string("parse error: ") + e.what());
  }
  return Workspace(std::move(doc), field_override);
}

Workspace Workspace::from_file(const std::string& path, std::optional<Field> field_override) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::SchemaError, "cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return from_text(ss.str(), field_override);
}

bool Workspace::has(const std::string& section, const std::string& name) const {
  return doc_.contains(section) && doc_[section].contains(name);
}

const json& Workspace::entry(const std::string& section, const std::string& name) const {
  if (!has(section, name)) schema_error("/" + section, "no entry named '" + name + "'");
  return doc_[section][name];
}

void Workspace::enter(const std::string& key) {
  if (!in_progress_.insert(key).second) schema_error("/" + key, "circular reference");
}

void Workspace::leave(const std::string& key) { in_progress_.erase(key); }

const Algebra& Workspace::algebra(const std::string& name) {
  if (auto it = algebras_.find(name); it != algebras_.end()) return it->second;
  const std::string key = "algebras/" + name;
  enter(key);
  Algebra a = build_algebra(name, entry("algebras", name), "/" + key);
  leave(key);
  return algebras_.emplace(name, std::move(a)).first->second;
}

const Bimodule& Workspace::bimodule(const std::string& name) {
  if (auto it = bimodules_.find(name); it != bimodules_.end()) return it->second;
  const std::string key = "bimodules/" + name;
  enter(key);
  Bimodule m = build_bimodule(entry("bimodules", name), "/" + key);
  leave(key);
  return bimodules_.emplace(name, std::move(m)).first->second;
}

const RightModule& Workspace::module(const std::string& name) {
  if (auto it = modules_.find(name); it != modules_.end()) return it->second;
  const std::string key = "modules/" + name;
  enter(key);
  RightModule x = build_module(entry("modules", name), "/" + key);
  leave(key);
  return modules_.emplace(name, std::move(x)).first->second;
}

const TriangularData& Workspace::triplet(const std::string& name) {
  if (auto it = triplets_.find(name); it != triplets_.end()) return it->second;
  const std::string key = "triplets/" + name;
  enter(key);
  TriangularData d = build_triplet(entry("triplets", name), "/" + key);
  leave(key);
  return triplets_.emplace(name, std::move(d)).first->second;
}

const IntMatrix& Workspace::matrix(const std::string& name) {
  if (auto it = matrices_.find(name); it != matrices_.end()) return it->second;
  const std::string path = "/matrices/" + name;
  const json& j = get_array(entry("matrices", name), path);
  std::vector<std::vector<mpz_class>> rows;
  for (std::size_t r = 0; r < j.size(); ++r) {
    const std::string rp = child(path, r);
    get_array(j[r], rp);
    if (j[r].size() != j.size()) schema_error(rp, "matrix must be square");
    std::vector<mpz_class> row;
    for (std::size_t c = 0; c < j[r].size(); ++c) {
      const json& v = j[r][c];
      const std::string vp = child(rp, c);
      if (v.is_number_integer()) {
        row.emplace_back(std::to_string(v.get<long long>()));
      } else if (v.is_string() && v.get<std::string>().find_first_not_of("-0123456789") == std::string::npos &&
                 !v.get<std::string>().empty()) {
        row.emplace_back(v.get<std::string>());
      } else {
        schema_error(vp, "expected an integer");
      }
    }
    rows.push_back(std::move(row));
  }
  return matrices_.emplace(name, IntMatrix::from_rows(rows)).first->second;
}

Algebra Workspace::build_algebra(const std::string& name, const json& spec, const std::string& path) {
  if (!spec.is_object() || spec.size() != 1) schema_error(path, "an algebra has exactly one constructor field");
  const auto& [kind, body] = *spec.items().begin();
  const std::string bp = child(path, kind);
  const Field f = field_;
  if (kind == "structure") {
    const json& labels_j = get_array(member(body, "labels", bp), child(bp, "labels"));
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < labels_j.size(); ++i) labels.push_back(get_string(labels_j[i], child(child(bp, "labels"), i)));
    const std::size_t n = labels.size();
    const std::string pp = child(bp, "products");
    const json& prod = get_array(member(body, "products", bp), pp);
    if (prod.size() != n) schema_error(pp, "expected " + std::to_string(n) + " rows");
    std::vector<std::vector<Vec>> products(n);
    for (std::size_t i = 0; i < n; ++i) {
      get_array(prod[i], child(pp, i));
      if (prod[i].size() != n) schema_error(child(pp, i), "expected " + std::to_string(n) + " products");
      for (std::size_t j = 0; j < n; ++j) products[i].push_back(parse_vec(prod[i][j], f, n, child(child(pp, i), j)));
    }
    Vec unit = parse_vec(member(body, "unit", bp), f, n, child(bp, "unit"));
    const std::string ip = child(bp, "idempotents");
    const json& idem_j = get_array(member(body, "idempotents", bp), ip);
    std::vector<Vec> idem;
    for (std::size_t i = 0; i < idem_j.size(); ++i) idem.push_back(parse_vec(idem_j[i], f, n, child(ip, i)));
    return checked(bp, [&] { return Algebra::from_structure_constants(f, labels, products, unit, idem); });
  }
  if (kind == "quiver") {
    QuiverPresentation q;
    const std::string vp = child(bp, "vertices");
    const json& verts = get_array(member(body, "vertices", bp), vp);
    for (std::size_t i = 0; i < verts.size(); ++i) q.vertices.push_back(get_string(verts[i], child(vp, i)));
    const std::string ap = child(bp, "arrows");
    const json& arrows = body.contains("arrows") ? get_array(body["arrows"], ap) : json::array();
    for (std::size_t i = 0; i < arrows.size(); ++i) {
      const std::string p = child(ap, i);
      q.arrows.push_back({get_string(member(arrows[i], "name", p), child(p, "name")),
                          vertex_index(member(arrows[i], "source", p), q.vertices, child(p, "source")),
                          vertex_index(member(arrows[i], "target", p), q.vertices, child(p, "target"))});
    }
    const std::string rp = child(bp, "relations");
    const json& rels = body.contains("relations") ? get_array(body["relations"], rp) : json::array();
    for (std::size_t i = 0; i < rels.size(); ++i) {
      std::vector<PathTerm> rel;
      get_array(rels[i], child(rp, i));
      for (std::size_t t = 0; t < rels[i].size(); ++t) {
        const std::string tp = child(child(rp, i), t);
        PathTerm term{parse_scalar(member(rels[i][t], "coeff", tp), f, child(tp, "coeff")), {}};
        const json& path_j = get_array(member(rels[i][t], "path", tp), child(tp, "path"));
        for (std::size_t s = 0; s < path_j.size(); ++s) {
          std::string a = get_string(path_j[s], child(child(tp, "path"), s));
          std::size_t idx = q.arrows.size();
          for (std::size_t k = 0; k < q.arrows.size(); ++k)
            if (q.arrows[k].name == a) idx = k;
          if (idx == q.arrows.size()) schema_error(child(child(tp, "path"), s), "unknown arrow '" + a + "'");
          term.arrows.push_back(idx);
        }
        rel.push_back(std::move(term));
      }
      q.relations.push_back(std::move(rel));
    }
    q.nilpotency_bound = body.contains("nilpotency_bound")
                             ? get_index(body["nilpotency_bound"], child(bp, "nilpotency_bound"))
                             : q.nilpotency_bound;
    return checked(bp, [&] { return Algebra::from_quiver(q, f); });
  }
  if (kind == "ground") return Algebra::ground(f);
  if (kind == "product") {
    const json& parts = get_array(body, bp);
    if (parts.size() != 2) schema_error(bp, "expected two algebra names");
    Algebra a = algebra(get_string(parts[0], child(bp, 0)));
    Algebra b = algebra(get_string(parts[1], child(bp, 1)));
    return checked(bp, [&] { return product_algebra(a, b); });
  }
  if (kind == "trivial_extension") {
    Algebra a = algebra(get_string(member(body, "algebra", bp), child(bp, "algebra")));
    Bimodule m = bimodule(get_string(member(body, "bimodule", bp), child(bp, "bimodule")));
    return checked(bp, [&] { return trivial_extension(a, m); });
  }
  if (kind == "triangular") {
    TriangularData d = triplet(get_string(body, bp));
    return checked(bp, [&] { return build_triangular(d).lambda; });
  }
  (void)name;
  schema_error(bp, "unknown algebra constructor '" + kind + "'");
}

Bimodule Workspace::build_bimodule(const json& spec, const std::string& path) {
  if (!spec.is_object() || spec.size() != 1) schema_error(path, "a bimodule has exactly one constructor field");
  const auto& [kind, body] = *spec.items().begin();
  const std::string bp = child(path, kind);
  if (kind == "actions") {
    Algebra l = algebra(get_string(member(body, "left", bp), child(bp, "left")));
    Algebra r = algebra(get_string(member(body, "right", bp), child(bp, "right")));
    std::size_t dim = get_index(member(body, "dim", bp), child(bp, "dim"));
    auto left = parse_actions(member(body, "left_action", bp), field_, l.dim(), dim, child(bp, "left_action"));
    auto right = parse_actions(member(body, "right_action", bp), field_, r.dim(), dim, child(bp, "right_action"));
    return checked(bp, [&] { return Bimodule(l, r, left, right); });
  }
  if (kind == "dual") return dual_bimodule(bimodule(get_string(body, bp)));
  if (kind == "regular") return regular_bimodule(algebra(get_string(body, bp)));
  if (kind == "from_module") return bimodule_from_right_module(module(get_string(body, bp)));
  if (kind == "zero") {
    Algebra l = algebra(get_string(member(body, "left", bp), child(bp, "left")));
    Algebra r = algebra(get_string(member(body, "right", bp), child(bp, "right")));
    return Bimodule::zero(l, r);
  }
  schema_error(bp, "unknown bimodule constructor '" + kind + "'");
}

RightModule Workspace::build_module(const json& spec, const std::string& path) {
  if (!spec.is_object() || spec.size() != 1) schema_error(path, "a module has exactly one constructor field");
  const auto& [kind, body] = *spec.items().begin();
  const std::string bp = child(path, kind);
  if (kind == "actions") {
    Algebra a = algebra(get_string(member(body, "algebra", bp), child(bp, "algebra")));
    std::size_t dim = get_index(member(body, "dim", bp), child(bp, "dim"));
    auto act = parse_actions(member(body, "action", bp), field_, a.dim(), dim, child(bp, "action"));
    return checked(bp, [&] { return RightModule(a, act); });
  }
  if (kind == "simple" || kind == "projective") {
    Algebra a = algebra(get_string(member(body, "algebra", bp), child(bp, "algebra")));
    std::size_t v = get_index(member(body, "vertex", bp), child(bp, "vertex"));
    if (v >= a.num_idempotents()) schema_error(child(bp, "vertex"), "vertex out of range");
    return kind == "simple" ? simple_module(a, v) : projective_module(a, v);
  }
  if (kind == "regular") return regular_module(algebra(get_string(body, bp)));
  if (kind == "dual_regular") return dual_bimodule(regular_bimodule(algebra(get_string(body, bp)))).as_right_module();
  if (kind == "bimodule") return bimodule(get_string(body, bp)).as_right_module();
  if (kind == "direct_sum") {
    const json& parts = get_array(body, bp);
    if (parts.empty()) schema_error(bp, "expected at least one module name");
    std::vector<RightModule> mods;
    for (std::size_t i = 0; i < parts.size(); ++i) mods.push_back(module(get_string(parts[i], child(bp, i))));
    return checked(bp, [&] { return direct_sum(mods, mods.front().algebra()); });
  }
  schema_error(bp, "unknown module constructor '" + kind + "'");
}

TriangularData Workspace::build_triplet(const json& spec, const std::string& path) {
  if (!spec.is_object()) schema_error(path, "expected an object");
  if (spec.contains("one_point_extension") || spec.contains("one_point_coextension")) {
    const bool ext = spec.contains("one_point_extension");
    const std::string kind = ext ? "one_point_extension" : "one_point_coextension";
    const std::string bp = child(path, kind);
    const json& body = spec[kind];
    Algebra r = algebra(get_string(member(body, "r", bp), child(bp, "r")));
    Bimodule n = bimodule(get_string(member(body, "n", bp), child(bp, "n")));
    return checked(bp, [&] { return ext ? one_point_extension(r, n) : one_point_coextension(r, n); });
  }
  TriangularData d{algebra(get_string(member(spec, "r", path), child(path, "r"))),
                   algebra(get_string(member(spec, "s", path), child(path, "s"))),
                   bimodule(get_string(member(spec, "m", path), child(path, "m")))};
  checked(path, [&] {
    d.validate();
    return 0;
  });
  return d;
}

std::map<std::string, std::size_t> Workspace::build_all() {
  std::map<std::string, std::size_t> counts;
  auto each = [&](const char* section, auto&& build) {
    counts[section] = 0;
    if (!doc_.contains(section)) return;
    for (const auto& [name, value] : doc_[section].items()) {
      (void)value;
      build(name);
      ++counts[section];
    }
  };
  each("algebras", [&](const std::string& n) { algebra(n); });
  each("bimodules", [&](const std::string& n) { bimodule(n); });
  each("modules", [&](const std::string& n) { module(n); });
  each("triplets", [&](const std::string& n) { triplet(n); });
  each("matrices", [&](const std::string& n) { matrix(n); });
  return counts;
}

json to_json(const Scalar& s) { return s.to_string(); }

json to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json to_json(const IntMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const mpz_class& v = m(r, c);
      if (v.fits_slong_p()) row.push_back(v.get_si());
      else row.push_back(v.get_str());
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

namespace {

json vec_to_json(const Vec& v) {
  json out = json::array();
  for (const auto& s : v) out.push_back(to_json(s));
  return out;
}

json actions_to_json(const std::vector<Matrix>& actions) {
  json out = json::array();
  for (const auto& m : actions) out.push_back(to_json(m));
  return out;
}

}  // namespace

json algebra_to_json(const Algebra& a) {
  json products = json::array();
  for (std::size_t i = 0; i < a.dim(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < a.dim(); ++j) row.push_back(vec_to_json(a.product(i, j)));
    products.push_back(std::move(row));
  }
  json idem = json::array();
  for (const auto& e : a.idempotents()) idem.push_back(vec_to_json(e));
  return {{"structure",
           {{"labels", a.labels()}, {"products", products}, {"unit", vec_to_json(a.unit())}, {"idempotents", idem}}}};
}

json bimodule_to_json(const Bimodule& m, const std::string& left, const std::string& right) {
  return {{"actions",
           {{"left", left},
            {"right", right},
            {"dim", m.dim()},
            {"left_action", actions_to_json(m.left_actions())},
            {"right_action", actions_to_json(m.right_actions())}}}};
}

json module_to_json(const RightModule& x, const std::string& algebra) {
  return {{"actions", {{"algebra", algebra}, {"dim", x.dim()}, {"action", actions_to_json(x.actions())}}}};
}

}  // namespace trimat::cli
