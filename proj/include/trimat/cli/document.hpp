#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>

#include "json.hpp"
#include "trimat/glue/triangular.hpp"
#include "trimat/linalg/int_matrix.hpp"

namespace trimat::cli {

using json = nlohmann::json;

constexpr const char* kSchema = "trimat-doc/1";

/// A parsed "trimat-doc/1" document. Objects are built on first use and
/// cached; references between them are resolved by name. Problems throw
/// Error(SchemaError) with the JSON pointer of the offending field.
class Workspace {
 public:
  /// `field_override` replaces the document's field specification.
  explicit Workspace(json doc, std::optional<Field> field_override = std::nullopt);
  static Workspace from_text(const std::string& text, std::optional<Field> field_override = std::nullopt);
  static Workspace from_file(const std::string& path, std::optional<Field> field_override = std::nullopt);

  Field field() const { return field_; }
  const json& document() const { return doc_; }

  bool has(const std::string& section, const std::string& name) const;
  const Algebra& algebra(const std::string& name);
  const Bimodule& bimodule(const std::string& name);
  const RightModule& module(const std::string& name);
  const TriangularData& triplet(const std::string& name);
  const IntMatrix& matrix(const std::string& name);

  /// Builds every object; returns the number built per section.
  std::map<std::string, std::size_t> build_all();

 private:
  Algebra build_algebra(const std::string& name, const json& spec, const std::string& path);
  Bimodule build_bimodule(const json& spec, const std::string& path);
  RightModule build_module(const json& spec, const std::string& path);
  TriangularData build_triplet(const json& spec, const std::string& path);

  const json& entry(const std::string& section, const std::string& name) const;
  void enter(const std::string& key);
  void leave(const std::string& key);

  json doc_;
  Field field_;
  std::map<std::string, Algebra> algebras_;
  std::map<std::string, Bimodule> bimodules_;
  std::map<std::string, RightModule> modules_;
  std::map<std::string, TriangularData> triplets_;
  std::map<std::string, IntMatrix> matrices_;
  std::set<std::string> in_progress_;
};

/// The bundled examples as a document.
const std::string& bundled_fixtures();

json to_json(const Scalar& s);
json to_json(const Matrix& m);
json to_json(const IntMatrix& m);
/// Explicit structure-constant form, readable back by Workspace.
json algebra_to_json(const Algebra& a);
/// Explicit action form; `left` and `right` name the two algebras.
json bimodule_to_json(const Bimodule& m, const std::string& left, const std::string& right);
json module_to_json(const RightModule& x, const std::string& algebra);

}  // namespace trimat::cli
