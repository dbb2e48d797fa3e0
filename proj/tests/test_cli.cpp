#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "trimat/cli/commands.hpp"
#include "trimat/error.hpp"

using namespace trimat;
using namespace trimat::cli;

namespace {

Outcome exec(std::vector<std::string> args) { return execute(args); }

json details(const Outcome& o) { return o.report.at("details"); }

std::string error_message(const Outcome& o) { return details(o).at("error").at("message").get<std::string>(); }

// Writes `doc` to a fresh file in the temp directory.
std::string write_doc(const json& doc, const std::string& name) {
  auto path = std::filesystem::temp_directory_path() / ("trimat_test_" + name + ".json");
  std::ofstream(path) << doc.dump(2);
  return path.string();
}

json bundled() { return json::parse(bundled_fixtures()); }

ErrorCode schema_code(const json& doc) {
  try {
    Workspace(doc).build_all();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::InvalidInput;
}

std::string schema_message(const json& doc) {
  try {
    Workspace(doc).build_all();
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("bundled fixtures validate") {
  Outcome o = exec({"validate"});
  CHECK(o.exit_code == kPass);
  CHECK(details(o)["built"]["triplets"] == 6);
  CHECK(details(o)["built"]["algebras"] == 9);

  std::string path = write_doc(bundled(), "bundled");
  CHECK(exec({"validate", "--doc", path}).exit_code == kPass);
  CHECK(exec({"validate", "--field", "fp:3"}).exit_code == kPass);
  CHECK(exec({"validate", "--field", "fp:5", "--doc", path}).exit_code == kPass);
}

TEST_CASE("fixtures prints the bundled document") {
  Outcome o = exec({"fixtures"});
  CHECK(o.exit_code == kPass);
  CHECK(json::parse(o.raw) == bundled());
}

TEST_CASE("documented command examples") {
  Outcome cong = exec({"congruent", "fixtures:ex-matenoneq"});
  CHECK(cong.exit_code == kRefuted);
  CHECK(details(cong)["congruence"]["verdict"] == "NotCongruent");
  CHECK(details(cong)["congruence"]["method"] == "enumeration");
  CHECK(details(cong)["first"]["cartan"] == json::parse("[[2,0],[1,3]]"));
  CHECK(details(cong)["second"]["cartan"] == json::parse("[[3,0],[1,2]]"));

  Outcome mate = exec({"mate", "fixtures:onepoint", "--mode", "projective"});
  CHECK(mate.exit_code == kPass);
  CHECK(details(mate)["dims"]["total"] == 4);
  Outcome tilt = exec({"tilt-verify", "fixtures:onepoint"});
  CHECK(tilt.exit_code == kPass);
  CHECK(details(tilt)["identification"]["pass"] == true);

  Outcome gl = exec({"gldim", "fixtures:trivext-DM", "--bound", "12"});
  CHECK(gl.exit_code == kUnknown);
  CHECK(details(gl)["verdict"] == "AtLeast(12)");
  CHECK(exec({"gldim", "fixtures:trivext-M"}).exit_code == kPass);
}

TEST_CASE("exit codes of the other commands") {
  CHECK(exec({"check", "fixtures:ex-matenoneq"}).exit_code == kRefuted);
  CHECK(exec({"check", "fixtures:artin-desk", "--tilting", "fixtures:DF4"}).exit_code == kPass);
  CHECK(exec({"mate", "fixtures:ex-matenoneq"}).exit_code == kRefuted);
  // gldim F2 is infinite, so the Artin mate is out of reach at any bound.
  CHECK(exec({"mate", "fixtures:ex-matenoneq", "--mode", "artin"}).exit_code == kUnknown);
  CHECK(exec({"mate", "fixtures:artin-desk", "--mode", "artin"}).exit_code == kPass);
  // M = simple₂ over F4 is projective.
  CHECK(exec({"mate", "fixtures:artin-desk", "--mode", "projective"}).exit_code == kPass);
  CHECK(exec({"mate", "fixtures:onepoint-ext", "--mode", "projective"}).exit_code == kRefuted);
  CHECK(exec({"tilt-verify", "fixtures:artin-desk", "--against", "artin"}).exit_code == kPass);
  CHECK(exec({"tilt-verify", "fixtures:ex-matenoneq"}).exit_code == kUnknown);
  CHECK(exec({"repetitive", "fixtures:ex-matenoneq", "--periods", "3"}).exit_code == kPass);
  CHECK(exec({"cartan", "fixtures:ex-matenoneq"}).exit_code == kPass);
  CHECK(exec({"cartan", "fixtures:F2"}).exit_code == kPass);
  CHECK(exec({"congruent", "fixtures:artin-desk"}).exit_code == kPass);
  CHECK(exec({"congruent", "fixtures:kronecker", "fixtures:trivext-M"}).exit_code == kPass);
  CHECK(exec({"congruent", "fixtures:C-lambda", "fixtures:C-mate"}).exit_code == kRefuted);
  CHECK(exec({"trivext", "fixtures:F4", "fixtures:corner"}).exit_code == kPass);
}

TEST_CASE("input errors exit with 2") {
  CHECK(exec({}).exit_code == kInputError);
  CHECK(exec({"bogus"}).exit_code == kInputError);
  Outcome no_doc = exec({"mate", "ex-matenoneq"});
  CHECK(no_doc.exit_code == kInputError);
  CHECK(error_message(no_doc).find("--doc") != std::string::npos);
  CHECK(exec({"mate", "fixtures:nothing"}).exit_code == kInputError);
  CHECK(exec({"mate", "fixtures:ex-matenoneq", "--mode", "sideways"}).exit_code == kInputError);
  CHECK(exec({"cartan", "fixtures:F3"}).exit_code == kInputError);
  CHECK(exec({"validate", "--field", "fp:4"}).exit_code == kInputError);
  CHECK(exec({"validate", "--doc", "/nonexistent/doc.json"}).exit_code == kInputError);
  CHECK(exec({"repetitive", "fixtures:ex-matenoneq", "--periods", "0"}).exit_code == kInputError);
  CHECK(exec({"trivext", "fixtures:F4", "fixtures:F3"}).exit_code == kInputError);
}

TEST_CASE("schema errors name the offending field") {
  json doc = bundled();
  doc["bimodules"]["F3"]["actions"]["left_action"][1] = json::parse("[[1]]");
  CHECK(schema_code(doc) == ErrorCode::SchemaError);
  CHECK(schema_message(doc).find("/bimodules/F3/actions") != std::string::npos);

  doc = bundled();
  doc["algebras"]["F2"]["structure"]["products"][1][1] = json::parse("[0, 1]");
  CHECK(schema_message(doc).find("/algebras/F2/structure/products/1/1") != std::string::npos);

  doc = bundled();
  doc["algebras"]["F4"]["quiver"]["arrows"][0]["target"] = "3";
  CHECK(schema_message(doc).find("unknown vertex") != std::string::npos);

  doc = bundled();
  doc["algebras"]["loop"] = {{"product", {"loop", "k"}}};
  CHECK(schema_message(doc).find("circular") != std::string::npos);

  doc = bundled();
  doc["algebras"]["bad"] = {{"structure",
                             {{"labels", {"1", "x"}},
                              {"products", json::parse(R"([[[1,0],[0,1]],[[0,1],[1,0]]])")},
                              {"unit", {1, 0}},
                              {"idempotents", json::parse("[[1, 0]]")}}}};
  // x² = 1 makes the algebra semisimple with a non-primitive idempotent.
  CHECK(schema_code(doc) == ErrorCode::SchemaError);

  doc = bundled();
  doc["schema"] = "trimat-doc/0";
  CHECK(schema_code(doc) == ErrorCode::SchemaError);

  doc = bundled();
  doc["extra"] = 1;
  CHECK(schema_code(doc) == ErrorCode::SchemaError);

  doc = bundled();
  doc["triplets"]["mixed"] = {{"r", "F1"}, {"s", "F4"}, {"m", "F3"}};
  CHECK(schema_message(doc).find("/triplets/mixed") != std::string::npos);

  CHECK_THROWS_AS(Workspace::from_text("{ not json"), Error);
}

TEST_CASE("serialization round-trips") {
  Field f3 = Field::prime(3);
  Workspace ws = Workspace::from_text(bundled_fixtures());
  for (const char* name : {"F1", "F2", "F4", "kronecker", "trivext-DM", "lambda-ex"}) {
    const Algebra& a = ws.algebra(name);
    json doc = {{"schema", kSchema}, {"algebras", {{"A", algebra_to_json(a)}}}};
    Workspace back(doc);
    const Algebra& b = back.algebra("A");
    REQUIRE(b.dim() == a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
      for (std::size_t j = 0; j < a.dim(); ++j) CHECK(a.product(i, j) == b.product(i, j));
    CHECK(algebra_to_json(b) == algebra_to_json(a));
  }

  const Bimodule& m = ws.bimodule("DM-desk");
  json doc = {{"schema", kSchema},
              {"algebras", {{"R", algebra_to_json(m.left_algebra())}, {"S", algebra_to_json(m.right_algebra())}}},
              {"bimodules", {{"M", bimodule_to_json(m, "R", "S")}}},
              {"modules", {{"X", module_to_json(ws.module("DF4"), "R")}}}};
  Workspace back(doc);
  CHECK(bimodule_to_json(back.bimodule("M"), "R", "S") == bimodule_to_json(m, "R", "S"));
  CHECK(module_to_json(back.module("X"), "R") == module_to_json(ws.module("DF4"), "R"));

  Matrix q = Matrix::from_ints({{1, -2}, {0, 5}}, Field::rationals());
  q(0, 1) = Scalar::parse("-3/4");
  CHECK(to_json(q) == json::parse(R"([["1","-3/4"],["0","5"]])"));
  Matrix p = Matrix::from_ints({{4, -1}}, f3);
  CHECK(to_json(p) == json::parse(R"([["1","2"]])"));

  // The mate document of `mate` feeds back into the tool.
  Outcome o = exec({"mate", "fixtures:artin-desk", "--mode", "artin"});
  REQUIRE(o.exit_code == kPass);
  std::string path = write_doc(details(o)["document"], "mate");
  Outcome again = exec({"cartan", "T", "--doc", path});
  CHECK(again.exit_code == kPass);
  CHECK(details(again)["cartan"] == details(o)["cartan"]);
}

TEST_CASE("reports are deterministic apart from timing") {
  for (std::vector<std::string> args : {std::vector<std::string>{"congruent", "fixtures:artin-desk"},
                                        {"tilt-verify", "fixtures:artin-desk", "--tilting", "fixtures:DF4"},
                                        {"mate", "fixtures:onepoint", "--mode", "projective"},
                                        {"check", "fixtures:ex-matenoneq"}}) {
    json a = exec(args).report, b = exec(args).report;
    CHECK(a.contains("timing_ms"));
    a.erase("timing_ms");
    b.erase("timing_ms");
    CHECK(a.dump() == b.dump());
  }
}

TEST_CASE("run prints the report") {
  std::ostringstream out, err;
  CHECK(run({"cartan", "fixtures:F1"}, out, err) == kPass);
  json r = json::parse(out.str());
  CHECK(r["status"] == "pass");
  CHECK(r["details"]["cartan"] == json::parse("[[2]]"));
  CHECK(err.str().empty());

  std::ostringstream out2, err2;
  CHECK(run({"cartan"}, out2, err2) == kInputError);
  CHECK(!err2.str().empty());

  std::ostringstream help, err3;
  CHECK(run({"--help"}, help, err3) == kPass);
  CHECK(help.str().find("tilt-verify") != std::string::npos);
}
