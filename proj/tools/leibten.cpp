#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "leibten/freelie.hpp"
#include "leibten/io.hpp"

using namespace leibten;

namespace {

enum Exit { kOk = 0, kViolation = 1, kInputError = 2 };

struct Outcome {
  Json report = Json::object();
  int exit = kOk;
};

std::string read_input(const std::string& path) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::SchemaError, "cannot read input file", path);
    buf << in.rdbuf();
  }
  return buf.str();
}

Json tuple_json(const Tuple& t) {
  Json a = Json::array();
  for (Index i : t) a.push_back(i + 1);
  return a;
}

Json tuple_json(const std::vector<std::size_t>& t) {
  Json a = Json::array();
  for (std::size_t i : t) a.push_back(i + 1);
  return a;
}

Json validation_json(const char* object, const ValidationReport& r) {
  Json ws = Json::array();
  for (const auto& w : r.witnesses) {
    ws.push_back(Json{{"identity", w.identity}, {"tuple", tuple_json(w.tuple)}, {"lhs", to_json(w.lhs)},
                      {"rhs", to_json(w.rhs)}});
  }
  return Json{{"object", object}, {"ok", r.ok}, {"witnesses", ws}};
}

Json graded_json(const char* object, const GradedReport& r) {
  Json vs = Json::array();
  for (const auto& v : r.violations)
    vs.push_back(Json{{"identity", v.identity}, {"inputs", tuple_json(v.inputs)}, {"value", to_json(v.value)}});
  return Json{{"object", object}, {"ok", r.ok}, {"checked_arity", r.checked_arity}, {"violations", vs}};
}

// All checks of the classical parts of a document.
Json classical_checks(const InputDocument& doc, bool& ok) {
  Json checks = Json::array();
  auto push = [&](const char* name, const ValidationReport& r) {
    ok = ok && r.ok;
    checks.push_back(validation_json(name, r));
  };
  if (doc.lie) push("lie_algebra", validate(*doc.lie));
  if (doc.rep) push("representation", validate(*doc.lie, *doc.rep));
  if (doc.tensor) push("embedding_tensor", validate_embedding_tensor(*doc.lie, *doc.rep, *doc.tensor));
  if (doc.two_term_rep && doc.has_triple()) push("two_term_rep", validate_rep(doc.triple(), *doc.two_term_rep));
  if (doc.leibniz) push("leibniz_algebra", validate(*doc.leibniz));
  return checks;
}

// The validated triple, or a violation report in `out`.
std::optional<LieLeibnizTriple> require_triple(const InputDocument& doc, Outcome& out) {
  const LieLeibnizTriple t = doc.triple();
  bool ok = true;
  Json checks = Json::array();
  checks.push_back(validation_json("lie_algebra", validate(t.g)));
  checks.push_back(validation_json("representation", validate(t.g, t.rho)));
  checks.push_back(validation_json("embedding_tensor", validate_embedding_tensor(t.g, t.rho, t.T)));
  for (const auto& c : checks) ok = ok && c["ok"].get<bool>();
  if (ok) return t;
  out.report["status"] = "violation";
  out.report["checks"] = checks;
  out.exit = kViolation;
  return std::nullopt;
}

Outcome cmd_validate(const InputDocument& doc) {
  Outcome out;
  bool ok = true;
  Json checks = classical_checks(doc, ok);
  if (checks.empty()) throw Error(ErrorCode::SchemaError, "no lie_algebra or leibniz_algebra to validate", "");
  out.report["status"] = ok ? "ok" : "violation";
  out.report["checks"] = checks;
  out.exit = ok ? kOk : kViolation;
  return out;
}

Outcome cmd_induce(const InputDocument& doc) {
  Outcome out;
  const auto t = require_triple(doc, out);
  if (!t) return out;
  InputDocument l;
  l.leibniz = induced_leibniz(*t);
  for (std::size_t i = 0; i < t->dim_v(); ++i) l.leibniz_basis.push_back("v" + std::to_string(i + 1));
  out.report["status"] = "ok";
  out.report["leibniz_algebra"] = to_json(l)["leibniz_algebra"];
  return out;
}

Json cohomology_json(const CohomologyReport& r) {
  Json reps = Json::array();
  for (const auto& v : r.representatives) reps.push_back(to_json(v));
  return Json{{"kind", complex_kind_name(r.kind)}, {"degree", r.degree},       {"dim_cochain", r.dim_cochain},
              {"dim_kernel", r.dim_kernel},         {"dim_image", r.dim_image}, {"betti", r.betti},
              {"representatives", reps}};
}

Matrix coefficient_target(const InputDocument& doc) {
  if (doc.two_term_rep) return doc.two_term_rep->frak_t;
  if (doc.extension) return doc.extension->frak_t;
  throw Error(ErrorCode::SchemaError, "trivial coefficients need \"two_term_rep\" or \"extension\" for frak_t", "");
}

Outcome cmd_cohomology(const InputDocument& doc, const std::string& complex, std::size_t degree) {
  Outcome out;
  const auto t = require_triple(doc, out);
  if (!t) return out;
  if (degree > kMaxDegree)
    throw Error(ErrorCode::SizeLimit, "degree above " + std::to_string(kMaxDegree), "--degree");
  CochainComplex c;
  if (complex == "et") {
    c = et_complex(*t);
  } else if (complex == "pair") {
    c = pair_complex(t->pair());
  } else if (complex == "reg") {
    c = reg_complex(*t);
  } else if (complex == "coeff") {
    if (!doc.two_term_rep) throw Error(ErrorCode::SchemaError, "--complex coeff needs \"two_term_rep\"", "");
    c = coeff_complex(*t, *doc.two_term_rep);
  } else {
    c = coeff_complex(*t, trivial_coefficients(*t, coefficient_target(doc)));
  }
  out.report["status"] = "ok";
  out.report["complex"] = complex;
  out.report["cohomology"] = cohomology_json(cohomology(c, degree));
  return out;
}

Outcome cmd_les(const InputDocument& doc, std::size_t max_degree) {
  Outcome out;
  const auto t = require_triple(doc, out);
  if (!t) return out;
  if (max_degree > kMaxDegree - 1)
    throw Error(ErrorCode::SizeLimit, "max degree above " + std::to_string(kMaxDegree - 1), "--max-degree");
  const LesReport r = les_check(*t, max_degree);
  Json nodes = Json::array();
  for (const auto& n : r.nodes) {
    nodes.push_back(Json{{"name", n.name},
                         {"degree", n.degree},
                         {"dim_image", n.dim_image},
                         {"dim_kernel", n.dim_kernel},
                         {"contained", n.contained},
                         {"exact", n.exact}});
  }
  out.report["status"] = r.exact ? "ok" : "violation";
  out.report["exact"] = r.exact;
  out.report["nodes"] = nodes;
  out.exit = r.exact ? kOk : kViolation;
  return out;
}

Outcome cmd_deform_check(const InputDocument& doc) {
  Outcome out;
  const auto t = require_triple(doc, out);
  if (!t) return out;
  if (doc.deformations.empty()) throw Error(ErrorCode::SchemaError, "no deformations given", "/deformations");
  bool all = true;
  Json results = Json::array();
  for (std::size_t i = 0; i < doc.deformations.size(); ++i) {
    const bool ok = is_deformation(*t, doc.deformations[i]);
    all = all && ok;
    results.push_back(Json{{"index", i + 1}, {"is_deformation", ok}});
  }
  out.report["status"] = all ? "ok" : "violation";
  out.report["deformations"] = results;
  out.exit = all ? kOk : kViolation;
  return out;
}

Outcome cmd_deform_equiv(const InputDocument& doc) {
  Outcome out;
  const auto t = require_triple(doc, out);
  if (!t) return out;
  if (doc.deformations.size() != 2)
    throw Error(ErrorCode::SchemaError, "deform-equiv needs exactly two deformations", "/deformations");
  const auto& d1 = doc.deformations[0];
  const auto& d2 = doc.deformations[1];
  const auto w = deformations_equivalent(*t, d1, d2);
  out.report["status"] = "ok";
  out.report["equivalent"] = w.has_value();
  out.report["same_class"] = same_reg_class(*t, d1, d2);
  out.report["witness"] = w ? Json{{"N", to_json(w->N)}, {"S", to_json(w->S)}, {"x", to_json(w->x)}} : Json();
  return out;
}

Outcome cmd_extend(const InputDocument& doc) {
  Outcome out;
  const auto t = require_triple(doc, out);
  if (!t) return out;
  if (!doc.extension) throw Error(ErrorCode::SchemaError, "extend needs \"extension\"", "/extension");
  const auto& e = *doc.extension;
  const CentralExtension ext = build_central_extension(*t, e.frak_t, e.cocycle);
  const ExtensionCocycle back = extract_cocycle(*t, ext, canonical_section(ext, t->dim_g(), t->dim_v()));
  const bool round_trip = back.omega == e.cocycle.omega && back.varpi == e.cocycle.varpi &&
                          back.calT == e.cocycle.calT;
  InputDocument tri;
  tri.lie = ext.triple.g;
  for (std::size_t i = 0; i < ext.triple.dim_g(); ++i) tri.lie_basis.push_back("e" + std::to_string(i + 1));
  tri.rep = ext.triple.rho;
  tri.tensor = ext.triple.T;
  out.report["status"] = round_trip ? "ok" : "violation";
  out.report["round_trip"] = round_trip;
  out.report["extension"] = to_json(tri);
  out.report["maps"] = Json{{"incl_h", to_json(ext.incl_h)},
                            {"incl_w", to_json(ext.incl_w)},
                            {"proj_g", to_json(ext.proj_g)},
                            {"proj_v", to_json(ext.proj_v)}};
  out.exit = round_trip ? kOk : kViolation;
  return out;
}

GradedFamily leibniz_inf_input(const InputDocument& doc) {
  if (doc.graded) {
    if (doc.graded->kind != "leibniz_inf")
      throw Error(ErrorCode::SchemaError, "ks needs a Leibniz_infty algebra", "/graded/kind");
    return doc.graded->brackets;
  }
  if (doc.leibniz) return encode_classical(doc.leibniz->bracket);
  throw Error(ErrorCode::SchemaError, "ks needs \"leibniz_algebra\" or \"graded\"", "");
}

Outcome cmd_ks(const InputDocument& doc, std::size_t weight, std::size_t arity) {
  Outcome out;
  const TruncationBounds bounds{arity, weight};
  const KsTransfer ks = ks_transfer(leibniz_inf_input(doc), bounds);
  const LyndonBasis& basis = ks.envelope.basis();
  Json elems = Json::array();
  for (std::size_t i = 0; i < basis.size(); ++i) {
    elems.push_back(Json{{"word", basis.word_name(i)},
                         {"bracket", basis.bracket_name(i)},
                         {"weight", basis.element(i).weight},
                         {"degree", basis.element(i).degree}});
  }
  // Graded-symmetric brackets, listed on weakly increasing inputs.
  Json brackets = Json::array();
  for (const auto& [k, m] : ks.brackets.components()) {
    Json current;
    Tuple current_in;
    bool open = false;
    for (const auto& [key, c] : m.table()) {
      const Tuple in(key.begin(), key.end() - 1);
      if (!std::is_sorted(in.begin(), in.end())) continue;
      if (!open || in != current_in) {
        if (open) brackets.push_back(current);
        Json names = Json::array();
        for (Index i : in) names.push_back(basis.word_name(i));
        current = Json{{"inputs", names}, {"output", Json::object()}};
        current_in = in;
        open = true;
      }
      current["output"][basis.word_name(key.back())] = to_string(c);
    }
    if (open) brackets.push_back(current);
  }
  const bool square_zero = (ks.codifferential * ks.codifferential).is_zero();
  const GradedReport linf = check_linf(ks.brackets, bounds, ks.weights());
  const bool ok = square_zero && linf.ok;
  out.report["status"] = ok ? "ok" : "violation";
  out.report["weight"] = weight;
  out.report["arity"] = arity;
  out.report["basis"] = elems;
  out.report["brackets"] = brackets;
  out.report["checks"] = Json{{"square_zero", square_zero}, {"linf", graded_json("brackets", linf)}};
  out.exit = ok ? kOk : kViolation;
  return out;
}

HomotopyEtPayload classical_homotopy_et(const LieLeibnizTriple& t) {
  HomotopyEtPayload p;
  p.et.g = GradedVectorSpace::concentrated(-1, t.dim_g());
  p.et.v = GradedVectorSpace::concentrated(-1, t.dim_v());
  MultilinearMap theta({t.dim_v()}, t.dim_g());
  for (std::size_t o = 0; o < t.dim_g(); ++o)
    for (std::size_t v = 0; v < t.dim_v(); ++v) theta.add({static_cast<Index>(v)}, o, t.T(o, v));
  p.et.theta.emplace(1, theta);
  p.l = encode_classical(t.g.bracket);
  p.rho = {{2, t.rho.as_map()}};
  return p;
}

Outcome cmd_homotopy_check(const InputDocument& doc, std::size_t arity, std::size_t weight) {
  Outcome out;
  const TruncationBounds bounds{arity, weight};
  bool ok = true;
  Json checks = Json::array();
  auto push = [&](const char* name, const GradedReport& r) {
    ok = ok && r.ok;
    checks.push_back(graded_json(name, r));
  };
  if (doc.graded) {
    if (doc.graded->kind == "linf")
      push("graded", check_linf(doc.graded->brackets, bounds));
    else
      push("graded", check_leibniz_inf(doc.graded->brackets, bounds));
  }
  if (doc.leibniz) push("leibniz_algebra", check_leibniz_inf(encode_classical(doc.leibniz->bracket), bounds));
  std::optional<HomotopyEtPayload> het = doc.homotopy_et;
  const char* het_name = "homotopy_et";
  if (!het && doc.has_triple()) {
    het = classical_homotopy_et(doc.triple());
    het_name = "embedding_tensor";
  } else if (!het && doc.lie) {
    push("lie_algebra", check_linf(encode_classical(doc.lie->bracket), bounds));
  }
  if (het) {
    if (doc.lie && !doc.has_triple()) push("lie_algebra", check_linf(encode_classical(doc.lie->bracket), bounds));
    const GradedReport r = check_homotopy_et(het->et, het->l, het->rho, bounds);
    push(het_name, r);
    if (r.ok) {
      const GradedFamily induced = induced_leibniz_inf(het->et, het->l, het->rho, bounds);
      push("induced_leibniz_inf", check_leibniz_inf(induced, bounds));
      out.report["induced"] = Json{{"space", to_json(induced.space())}, {"brackets", family_to_json(induced)}};
    }
  }
  if (checks.empty()) throw Error(ErrorCode::SchemaError, "nothing to check", "");
  out.report["status"] = ok ? "ok" : "violation";
  out.report["checks"] = checks;
  out.exit = ok ? kOk : kViolation;
  return out;
}

bool is_violation(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidInputData:
    case ErrorCode::InvalidRepresentation:
    case ErrorCode::NotACocycle:
    case ErrorCode::NotCentral:
    case ErrorCode::NotASection:
    case ErrorCode::NotHomotopyET:
    case ErrorCode::NotSquareZero:
    case ErrorCode::NotAHomomorphism:
    case ErrorCode::ComplexNotComposable:
      return true;
    default:
      return false;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations for embedding tensors, Lie-Leibniz triples and their homotopy versions."};
  app.require_subcommand(1);
  bool timing = false;
  app.add_flag("--timing", timing, "Add wall-clock timing to the report");

  std::string input = "-";
  auto with_input = [&](CLI::App* sub) {
    sub->add_option("input", input, "Input document (default: stdin)");
    return sub;
  };
  auto* validate_cmd = with_input(app.add_subcommand("validate", "Validate the structures in a document"));
  auto* induce_cmd = with_input(app.add_subcommand("induce", "Leibniz algebra induced by an embedding tensor"));
  auto* coh_cmd = with_input(app.add_subcommand("cohomology", "Cohomology of one complex in one degree"));
  std::string complex = "et";
  std::size_t degree = 1;
  coh_cmd->add_option("--complex", complex, "et, pair, reg, coeff or tri")
      ->check(CLI::IsMember({"et", "pair", "reg", "coeff", "tri"}));
  coh_cmd->add_option("--degree", degree, "Cochain degree")->required();
  auto* les_cmd = with_input(app.add_subcommand("les", "Exactness of the long exact sequence"));
  std::size_t max_degree = 2;
  les_cmd->add_option("--max-degree", max_degree, "Highest degree")->required();
  auto* dcheck_cmd = with_input(app.add_subcommand("deform-check", "Are the given data infinitesimal deformations"));
  auto* dequiv_cmd = with_input(app.add_subcommand("deform-equiv", "Equivalence of two infinitesimal deformations"));
  auto* extend_cmd = with_input(app.add_subcommand("extend", "Central extension from a cocycle"));
  auto* ks_cmd = with_input(app.add_subcommand("ks", "L_infty algebra on the free Lie algebra of a Leibniz_infty algebra"));
  std::size_t weight = 3, arity = 3;
  ks_cmd->add_option("--weight", weight, "Weight bound W")->check(CLI::Range(1, int(kMaxFreeWeight)));
  ks_cmd->add_option("--arity", arity, "Arity bound A")->check(CLI::Range(1, int(kMaxGradedArity)));
  auto* hc_cmd = with_input(app.add_subcommand("homotopy-check", "Homotopy identities up to an arity"));
  hc_cmd->add_option("--arity", arity, "Arity bound A")->check(CLI::Range(1, int(kMaxGradedArity)));
  hc_cmd->add_option("--weight", weight, "Weight bound");
  auto* example_cmd = app.add_subcommand("example", "Print a built-in input document");
  std::string example;
  example_cmd->add_option("name", example, "Example name")->required()->check(CLI::IsMember(example_names()));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    Json err{{"status", "error"}, {"error", Json{{"code", "SchemaError"}, {"message", e.what()}, {"location", "argv"}}}};
    std::cout << err.dump(2) << '\n';
    return kInputError;
  }

  CLI::App* sub = app.get_subcommands().front();
  const auto start = std::chrono::steady_clock::now();
  Outcome out;
  out.report["command"] = sub->get_name();
  try {
    if (sub == example_cmd) {
      std::cout << to_json(example_document(example)).dump(2) << '\n';
      return kOk;
    }
    const InputDocument doc = parse_document_text(read_input(input));
    Outcome r;
    if (sub == validate_cmd) r = cmd_validate(doc);
    else if (sub == induce_cmd) r = cmd_induce(doc);
    else if (sub == coh_cmd) r = cmd_cohomology(doc, complex, degree);
    else if (sub == les_cmd) r = cmd_les(doc, max_degree);
    else if (sub == dcheck_cmd) r = cmd_deform_check(doc);
    else if (sub == dequiv_cmd) r = cmd_deform_equiv(doc);
    else if (sub == extend_cmd) r = cmd_extend(doc);
    else if (sub == ks_cmd) r = cmd_ks(doc, weight, arity);
    else r = cmd_homotopy_check(doc, arity, weight);
    for (auto& [k, v] : r.report.items()) out.report[k] = v;
    out.exit = r.exit;
  } catch (const Error& e) {
    out.exit = is_violation(e.code()) ? kViolation : kInputError;
    out.report["status"] = out.exit == kViolation ? "violation" : "error";
    out.report["error"] = error_json(e);
  }
  if (timing) {
    const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start;
    out.report["timing"] = Json{{"seconds", dt.count()}};
  }
  std::cout << out.report.dump(2) << '\n';
  return out.exit;
}
