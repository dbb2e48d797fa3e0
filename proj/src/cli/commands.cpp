#include "trimat/cli/commands.hpp"

#include <chrono>
#include <functional>
#include <memory>
#include <sstream>

#include "CLI11.hpp"
#include "trimat/algebra/decompose.hpp"
#include "trimat/error.hpp"
#include "trimat/invariants/cartan.hpp"
#include "trimat/invariants/repetitive.hpp"
#include "trimat/mate/mate.hpp"

namespace trimat::cli {

namespace {

constexpr const char* kFixturePrefix = "fixtures:";

int exit_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::HypothesisFailure:
    case ErrorCode::IdentificationFailure:
    case ErrorCode::InvariantViolation:
    case ErrorCode::ApproximationNotInjective:
      return kRefuted;
    case ErrorCode::GldimUnknown:
    case ErrorCode::NotPerfect:
    case ErrorCode::RadicalUnavailable:
      return kUnknown;
    default:
      return kInputError;
  }
}

// Resolves object names against --doc or, with the "fixtures:" prefix, the
// bundled document.
class Names {
 public:
  Names(std::optional<std::string> doc_path, std::optional<Field> field)
      : doc_path_(std::move(doc_path)), field_(field) {}

  Workspace& workspace_for(const std::string& name, std::string& local) {
    if (name.rfind(kFixturePrefix, 0) == 0) {
      local = name.substr(std::string(kFixturePrefix).size());
      if (!bundled_) bundled_ = std::make_unique<Workspace>(Workspace::from_text(bundled_fixtures(), field_));
      return *bundled_;
    }
    local = name;
    return document();
  }

  Workspace& document() {
    if (!doc_path_) throw Error(ErrorCode::InvalidInput, "no --doc given; use a \"fixtures:\" name or pass --doc");
    if (!doc_) doc_ = std::make_unique<Workspace>(Workspace::from_file(*doc_path_, field_));
    return *doc_;
  }

  bool has_document() const { return doc_path_.has_value(); }

  std::string kind_of(const std::string& name) {
    std::string local;
    Workspace& ws = workspace_for(name, local);
    for (const char* section : {"matrices", "triplets", "algebras", "bimodules", "modules"})
      if (ws.has(section, local)) return section;
    throw Error(ErrorCode::SchemaError, "no object named '" + name + "'");
  }

  const Algebra& algebra(const std::string& name) {
    std::string local;
    return workspace_for(name, local).algebra(local);
  }
  const Bimodule& bimodule(const std::string& name) {
    std::string local;
    return workspace_for(name, local).bimodule(local);
  }
  const RightModule& module(const std::string& name) {
    std::string local;
    return workspace_for(name, local).module(local);
  }
  const TriangularData& triplet(const std::string& name) {
    std::string local;
    return workspace_for(name, local).triplet(local);
  }
  const IntMatrix& matrix(const std::string& name) {
    std::string local;
    return workspace_for(name, local).matrix(local);
  }

 private:
  std::optional<std::string> doc_path_;
  std::optional<Field> field_;
  std::unique_ptr<Workspace> doc_;
  std::unique_ptr<Workspace> bundled_;
};

json dims_json(const TriangularData& d) {
  return {{"r", d.r.dim()}, {"s", d.s.dim()}, {"m", d.m.dim()}, {"total", d.r.dim() + d.s.dim() + d.m.dim()}};
}

json per_json(const PerMembership& p) {
  return {{"verdict", p.to_string()}, {"finite", p.finite}, {"infinite", p.infinite}, {"value", p.value}};
}

json hypotheses_json(const HypothesisReport& h) {
  return {{"verdict", to_string(h.verdict)},
          {"per_m", per_json(h.per_m)},
          {"per_t", per_json(h.per_t)},
          {"t_rigid", h.tilting.rigid},
          {"t_coresolved", h.tilting.coresolved},
          {"t_self_ext", h.tilting.self_ext},
          {"ext_mt", h.ext_mt.dims},
          {"ext_mt_exact_beyond", h.ext_mt.exact_beyond},
          {"failures", h.failures},
          {"unknowns", h.unknowns}};
}

int verdict_exit(Verdict v) { return v == Verdict::Pass ? kPass : v == Verdict::Fail ? kRefuted : kUnknown; }

// A document holding the triplet and everything it refers to.
json triplet_document(const TriangularData& d, Field field) {
  json doc = {{"schema", kSchema}, {"field", field.to_string()}};
  doc["algebras"]["R"] = algebra_to_json(d.r);
  doc["algebras"]["S"] = algebra_to_json(d.s);
  doc["bimodules"]["M"] = bimodule_to_json(d.m, "R", "S");
  doc["triplets"]["T"] = {{"r", "R"}, {"s", "S"}, {"m", "M"}};
  return doc;
}

json congruence_json(const CongruenceResult& c) {
  json out = {{"verdict", c.kind_name()}, {"method", c.method}};
  if (c.kind == CongruenceResult::Kind::Congruent) out["witness"] = to_json(c.witness);
  if (!c.candidate_counts.empty()) out["candidate_counts"] = c.candidate_counts;
  if (c.kind == CongruenceResult::Kind::Unknown) out["search_bound"] = c.search_bound;
  return out;
}

int congruence_exit(const CongruenceResult& c) {
  switch (c.kind) {
    case CongruenceResult::Kind::Congruent:
      return kPass;
    case CongruenceResult::Kind::NotCongruent:
      return kRefuted;
    default:
      return kUnknown;
  }
}

// (S, R, DM), with no hypotheses checked.
TriangularData formal_mate(const TriangularData& d) { return {d.s, d.r, dual_bimodule(d.m)}; }

struct Settings {
  std::optional<std::string> doc;
  std::string field;
  std::size_t bound = kDefaultBound;
  int window = 6;
  long search_bound = 2;
  std::size_t periods = 1;
  std::string mode = "general";
  std::string against = "general";
  std::string tilting;
  std::vector<std::string> names;
};

using Handler = std::function<int(Names&, const Settings&, json&)>;

RightModule tilting_of(Names& names, const Settings& s, const TriangularData& d) {
  if (s.tilting.empty()) return regular_module(d.s);
  RightModule t = names.module(s.tilting);
  if (!t.algebra().same_as(d.s)) {
    // Same structure constants under another name is fine; anything else is not.
    if (t.algebra().dim() != d.s.dim()) throw Error(ErrorCode::AlgebraMismatch, "--tilting is not a module over S");
    std::vector<Matrix> acts = t.actions();
    t = RightModule(d.s, acts);
  }
  return t;
}

int cmd_validate(Names& names, const Settings&, json& details) {
  Workspace& ws = names.has_document() ? names.document() : [&]() -> Workspace& {
    std::string local;
    return names.workspace_for(std::string(kFixturePrefix), local);
  }();
  details["source"] = names.has_document() ? "document" : "bundled fixtures";
  details["field"] = ws.field().to_string();
  details["built"] = ws.build_all();
  return kPass;
}

int cmd_cartan(Names& names, const Settings& s, json& details) {
  const std::string& name = s.names.at(0);
  const std::string kind = names.kind_of(name);
  if (kind == "triplets") {
    CartanBlockCheck check = cartan_block_check(names.triplet(name));
    details["cartan"] = to_json(check.lambda);
    details["predicted"] = to_json(check.predicted);
    details["c_m"] = to_json(check.c_m);
    details["block_structure"] = check.pass ? "pass" : "fail";
    return check.pass ? kPass : kRefuted;
  }
  if (kind != "algebras") throw Error(ErrorCode::InvalidInput, "cartan expects an algebra or a triplet");
  details["cartan"] = to_json(cartan_matrix(names.algebra(name)));
  return kPass;
}

int cmd_check(Names& names, const Settings& s, json& details) {
  const TriangularData& d = names.triplet(s.names.at(0));
  HypothesisReport h = check_hypotheses(d, tilting_of(names, s, d), s.bound);
  details = hypotheses_json(h);
  details["bound"] = s.bound;
  return verdict_exit(h.verdict);
}

int cmd_mate(Names& names, const Settings& s, json& details) {
  const TriangularData& d = names.triplet(s.names.at(0));
  details["mode"] = s.mode;
  TriangularData mate;
  if (s.mode == "artin") {
    if (!s.tilting.empty()) throw Error(ErrorCode::InvalidInput, "--tilting is fixed to D(S) in artin mode");
    mate = mate_artin(d, s.bound);
  } else {
    RightModule t = tilting_of(names, s, d);
    if (s.mode == "projective") {
      if (!s.tilting.empty()) throw Error(ErrorCode::InvalidInput, "--tilting is fixed to S in projective mode");
      PerMembership pm = per_membership(d.m.as_right_module(), s.bound);
      details["pd_m"] = per_json(pm);
      if (!(pm.finite && pm.value == 0)) {
        details["reason"] = "M_S is not projective";
        return pm.finite || pm.infinite ? kRefuted : kUnknown;
      }
    }
    HypothesisReport h = check_hypotheses(d, t, s.bound);
    details["hypotheses"] = hypotheses_json(h);
    if (h.verdict != Verdict::Pass) return verdict_exit(h.verdict);
    mate = mate_general(d, t, s.bound);
  }
  details["dims"] = dims_json(mate);
  details["cartan"] = to_json(cartan_matrix(build_triangular(mate).lambda));
  details["cartan_original"] = to_json(cartan_matrix(build_triangular(d).lambda));
  details["document"] = triplet_document(mate, d.r.field());
  return kPass;
}

int cmd_tilt_verify(Names& names, const Settings& s, json& details) {
  const TriangularData& d = names.triplet(s.names.at(0));
  RightModule t;
  if (s.against == "artin") {
    if (!s.tilting.empty()) throw Error(ErrorCode::InvalidInput, "--tilting is fixed to D(S) with --against artin");
    t = dual_bimodule(regular_bimodule(d.s)).as_right_module();
  } else {
    t = tilting_of(names, s, d);
  }
  TiltingComplexData tc = build_tilting_complex(d, t, s.bound);
  HomWindow w = verify_tilting_complex(tc, s.window);
  details["degrees"] = {tc.complex.lo(), tc.complex.hi()};
  details["homology"] = tc.homology;
  details["window"] = {{"lo", w.lo}, {"dims", w.dims}, {"pass", w.pass}};
  details["end_blocks"] = {{"end_r", w.end_r}, {"end_s", w.end_s}, {"corner", w.corner}, {"opposite", w.opposite}};
  if (!w.pass) return kRefuted;

  TriangularData mate;
  IdentificationReport rep;
  if (s.against == "artin") {
    mate = mate_artin(d, s.bound);
    rep = end_ring_identification(tc, mate, artin_realization(d));
  } else {
    HypothesisReport h = check_hypotheses(d, t, s.bound);
    if (h.verdict != Verdict::Pass) {
      details["hypotheses"] = hypotheses_json(h);
      return verdict_exit(h.verdict);
    }
    mate = mate_general(d, t, s.bound);
    rep = end_ring_identification(tc, mate);
  }
  details["identification"] = {{"against", s.against},
                               {"mate_dims", dims_json(mate)},
                               {"end_dim", rep.end_dim},
                               {"products_checked", rep.products_checked},
                               {"pass", rep.pass}};
  return rep.pass ? kPass : kRefuted;
}

IntMatrix cartan_for(Names& names, const std::string& name, json& echo) {
  const std::string kind = names.kind_of(name);
  echo = {{"name", name}, {"kind", kind}};
  if (kind == "matrices") return names.matrix(name);
  if (kind == "triplets") return cartan_matrix(build_triangular(names.triplet(name)).lambda);
  if (kind == "algebras") return cartan_matrix(names.algebra(name));
  throw Error(ErrorCode::InvalidInput, "'" + name + "' is not a matrix, algebra or triplet");
}

int cmd_congruent(Names& names, const Settings& s, json& details) {
  IntMatrix c1, c2;
  json a, b;
  if (s.names.size() == 1) {
    if (names.kind_of(s.names[0]) != "triplets")
      throw Error(ErrorCode::InvalidInput, "with one argument, congruent expects a triplet");
    const TriangularData& d = names.triplet(s.names[0]);
    c1 = cartan_matrix(build_triangular(d).lambda);
    c2 = cartan_matrix(build_triangular(formal_mate(d)).lambda);
    a = {{"name", s.names[0]}, {"kind", "triangular algebra"}};
    b = {{"name", s.names[0]}, {"kind", "mate (S, R, DM)"}};
  } else if (s.names.size() == 2) {
    c1 = cartan_for(names, s.names[0], a);
    c2 = cartan_for(names, s.names[1], b);
  } else {
    throw Error(ErrorCode::InvalidInput, "congruent takes one or two names");
  }
  a["cartan"] = to_json(c1);
  b["cartan"] = to_json(c2);
  details["first"] = a;
  details["second"] = b;
  CongruenceOptions opts;
  opts.search_bound = s.search_bound;
  CongruenceResult res = congruent_over_z(c1, c2, opts);
  details["congruence"] = congruence_json(res);
  if (c1.rows() == c2.rows()) {
    details["coxeter"] = {{"first", std::vector<std::string>{}}, {"second", std::vector<std::string>{}}};
    try {
      for (const auto& c : coxeter_polynomial(c1)) details["coxeter"]["first"].push_back(c.get_str());
      for (const auto& c : coxeter_polynomial(c2)) details["coxeter"]["second"].push_back(c.get_str());
    } catch (const Error& e) {
      if (e.code() != ErrorCode::SingularCartan) throw;
      details.erase("coxeter");
    }
  }
  return congruence_exit(res);
}

json gldim_json(const GldimProbe& g) {
  json simples = json::array();
  bool certified = false;
  for (const auto& p : g.simples) {
    simples.push_back(p.to_string());
    certified = certified || p.infinite;
  }
  return {{"verdict", g.to_string()}, {"simples", simples}, {"infinite_certified", certified}};
}

int cmd_gldim(Names& names, const Settings& s, json& details) {
  GldimProbe g = global_dimension(names.algebra(s.names.at(0)), s.bound);
  details = gldim_json(g);
  details["bound"] = s.bound;
  return g.finite ? kPass : kUnknown;
}

int cmd_repetitive(Names& names, const Settings& s, json& details) {
  const TriangularData& d = names.triplet(s.names.at(0));
  if (s.periods == 0) throw Error(ErrorCode::InvalidInput, "--periods must be positive");
  ShiftCheck c = repetitive_shift_isomorphism(d, s.periods);
  details = {{"periods", s.periods}, {"dim", c.dim}, {"pairs_checked", c.pairs_checked}, {"pass", c.pass}};
  if (!c.pass) details["failure"] = c.failure;
  return c.pass ? kPass : kRefuted;
}

int cmd_trivext(Names& names, const Settings& s, json& details) {
  if (s.names.size() != 2) throw Error(ErrorCode::InvalidInput, "trivext takes an algebra and a bimodule");
  const Algebra& a = names.algebra(s.names[0]);
  const Bimodule& m = names.bimodule(s.names[1]);
  Algebra ext = trivial_extension(a, m);
  details["dim"] = ext.dim();
  details["cartan"] = to_json(cartan_matrix(ext));
  details["gldim"] = gldim_json(global_dimension(ext, s.bound));
  details["algebra"] = algebra_to_json(ext);
  return kPass;
}

}  // namespace

std::string status_name(int exit_code) {
  switch (exit_code) {
    case kPass:
      return "pass";
    case kRefuted:
      return "refuted";
    case kUnknown:
      return "unknown";
    default:
      return "input-error";
  }
}

Outcome execute(const std::vector<std::string>& args) {
  const auto start = std::chrono::steady_clock::now();
  Settings s;
  CLI::App app{"Triangular matrix algebras, tilting complexes and their mates", "trimat"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--doc", s.doc, "trimat-doc/1 document with the named objects");
  app.add_option("--field", s.field, "rational or fp:<p>; overrides the document");
  app.add_option("--bound", s.bound, "resolution length bound");

  std::vector<std::pair<CLI::App*, Handler>> subs;
  auto sub = [&](const char* name, const char* help, Handler h) {
    CLI::App* c = app.add_subcommand(name, help);
    subs.emplace_back(c, std::move(h));
    return c;
  };
  sub("validate", "build every object of the document (bundled fixtures without --doc)", cmd_validate);
  sub("cartan", "Cartan matrix of an algebra or of Λ for a triplet", cmd_cartan)
      ->add_option("name", s.names, "algebra or triplet")->required()->expected(1);
  {
    CLI::App* c = sub("mate", "build the mate of a triplet", cmd_mate);
    c->add_option("triplet", s.names)->required()->expected(1);
    c->add_option("--mode", s.mode)->check(CLI::IsMember({"general", "artin", "projective"}));
    c->add_option("--tilting", s.tilting, "tilting S-module (default S)");
  }
  {
    CLI::App* c = sub("check", "hypotheses of the general mate construction", cmd_check);
    c->add_option("triplet", s.names)->required()->expected(1);
    c->add_option("--tilting", s.tilting, "tilting S-module (default S)");
  }
  {
    CLI::App* c = sub("tilt-verify", "build T, check Hom(T, T[n]) and identify End(T)", cmd_tilt_verify);
    c->add_option("triplet", s.names)->required()->expected(1);
    c->add_option("--tilting", s.tilting, "tilting S-module (default S)");
    c->add_option("--window", s.window, "check shifts 0 < |n| <= window");
    c->add_option("--against", s.against, "mate to identify with")->check(CLI::IsMember({"general", "artin"}));
  }
  {
    CLI::App* c = sub("congruent", "unimodular congruence of Cartan matrices", cmd_congruent);
    c->add_option("names", s.names, "one triplet, or two matrices, algebras or triplets")->required()->expected(1, 2);
    c->add_option("--search-bound", s.search_bound, "entry bound for the indefinite case");
  }
  sub("gldim", "global dimension probe", cmd_gldim)->add_option("algebra", s.names)->required()->expected(1);
  {
    CLI::App* c = sub("repetitive", "shift isomorphism of repetitive truncations", cmd_repetitive);
    c->add_option("triplet", s.names)->required()->expected(1);
    c->add_option("--periods", s.periods);
  }
  sub("trivext", "trivial extension algebra", cmd_trivext)->add_option("names", s.names)->required()->expected(2);
  CLI::App* fixtures = app.add_subcommand("fixtures", "print the bundled example document");

  Outcome out;
  json details = json::object();
  std::string command;
  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
    if (fixtures->parsed()) {
      out.raw = bundled_fixtures();
      return out;
    }
    std::optional<Field> field;
    if (!s.field.empty()) field = Field::parse(s.field);
    Names names(s.doc, field);
    for (auto& [c, h] : subs) {
      if (!c->parsed()) continue;
      command = c->get_name();
      out.exit_code = h(names, s, details);
    }
  } catch (const CLI::CallForHelp&) {
    out.raw = app.help();
    return out;
  } catch (const CLI::ParseError& e) {
    out.exit_code = kInputError;
    details = {{"error", {{"code", "UsageError"}, {"message", e.what()}}}};
  } catch (const Error& e) {
    out.exit_code = exit_for(e.code());
    details["error"] = {{"code", std::string(to_string(e.code()))}, {"message", e.what()}};
  } catch (const std::exception& e) {
    out.exit_code = kInputError;
    details["error"] = {{"code", "Internal"}, {"message", e.what()}};
  }
  const double ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  out.report = {{"command", args},
                {"subcommand", command},
                {"status", status_name(out.exit_code)},
                {"exit_code", out.exit_code},
                {"details", details},
                {"timing_ms", ms}};
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Outcome o = execute(args);
  if (!o.raw.empty()) {
    out << o.raw;
    if (o.raw.back() != '\n') out << '\n';
    return o.exit_code;
  }
  out << o.report.dump(2) << '\n';
  if (o.exit_code == kInputError && o.report["details"].contains("error"))
    err << "trimat: " << o.report["details"]["error"]["message"].get<std::string>() << '\n';
  return o.exit_code;
}

}  // namespace trimat::cli
