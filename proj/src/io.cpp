#include "leibten/io.hpp"

#include <functional>
#include <set>
#include <utility>

#include "leibten/examples.hpp"

namespace leibten {

namespace {

[[noreturn]] void schema(const std::string& loc, const std::string& message) {
  throw Error(ErrorCode::SchemaError, message, loc);
}

const Json& require(const Json& obj, const char* key, const std::string& loc) {
  if (!obj.is_object()) schema(loc, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) schema(loc, std::string("missing field \"") + key + "\"");
  return *it;
}

const Json* optional_field(const Json& obj, const char* key) {
  auto it = obj.find(key);
  return it == obj.end() || it->is_null() ? nullptr : &*it;
}

std::size_t count_from_json(const Json& j, const std::string& loc) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0))
    schema(loc, "expected a non-negative integer");
  return j.get<std::size_t>();
}

std::vector<std::string> names_from_json(const Json* j, std::size_t dim, const std::string& loc,
                                         const std::string& prefix) {
  std::vector<std::string> names;
  if (j == nullptr) {
    for (std::size_t i = 0; i < dim; ++i) names.push_back(prefix + std::to_string(i + 1));
    return names;
  }
  if (!j->is_array() || j->size() != dim) schema(loc, "basis must list " + std::to_string(dim) + " names");
  for (std::size_t i = 0; i < dim; ++i) {
    if (!(*j)[i].is_string()) schema(loc + "/" + std::to_string(i), "basis names are strings");
    names.push_back((*j)[i].get<std::string>());
  }
  return names;
}

std::string at(const std::string& loc, std::size_t i) { return loc + "/" + std::to_string(i); }
std::string at(const std::string& loc, const char* key) { return loc + "/" + key; }

Json names_json(const std::vector<std::string>& names) {
  Json a = Json::array();
  for (const auto& n : names) a.push_back(n);
  return a;
}

}  // namespace

Rational rational_from_json(const Json& j, const std::string& loc) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) schema(loc, "rationals are strings \"p/q\" or integers");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const Error&) {
    schema(loc, "malformed rational \"" + j.get<std::string>() + "\"");
  }
}

Json to_json(const Rational& r) { return to_string(r); }

Json to_json(const Vector& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

Json to_json(const Matrix& m) {
  Json a = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) a.push_back(to_json(m.row(r)));
  return a;
}

Json to_json(const GradedVectorSpace& s) {
  Json comps = Json::object();
  for (const auto& [deg, n] : s.components()) comps[std::to_string(deg)] = n;
  // Degrees in basis order when they are not already sorted.
  bool sorted = true;
  for (std::size_t i = 1; i < s.dim(); ++i) sorted = sorted && s.degrees[i - 1] <= s.degrees[i];
  if (sorted) return Json{{"degrees", comps}};
  Json list = Json::array();
  for (int d : s.degrees) list.push_back(d);
  return Json{{"degrees", list}};
}

Matrix matrix_from_json(const Json& j, const std::string& loc, std::size_t rows, std::size_t cols) {
  if (!j.is_array()) schema(loc, "matrices are row-major nested arrays");
  const std::size_t r = j.size();
  if (rows != kAnySize && r != rows)
    schema(loc, "expected " + std::to_string(rows) + " rows, found " + std::to_string(r));
  std::size_t c = cols;
  if (r > 0) {
    if (!j[0].is_array()) schema(at(loc, std::size_t{0}), "expected a row array");
    if (c == kAnySize) c = j[0].size();
  }
  if (c == kAnySize) c = 0;
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    const Json& row = j[i];
    if (!row.is_array() || row.size() != c)
      schema(at(loc, i), "expected a row of " + std::to_string(c) + " entries");
    for (std::size_t k = 0; k < c; ++k) m(i, k) = rational_from_json(row[k], at(at(loc, i), k));
  }
  return m;
}

std::vector<Matrix> matrices_from_json(const Json& j, const std::string& loc, std::size_t count, std::size_t rows,
                                       std::size_t cols) {
  if (!j.is_array() || j.size() != count) schema(loc, "expected a list of " + std::to_string(count) + " matrices");
  std::vector<Matrix> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(matrix_from_json(j[i], at(loc, i), rows, cols));
  return out;
}

GradedVectorSpace space_from_json(const Json& j, const std::string& loc) {
  const Json& d = require(j, "degrees", loc);
  const std::string dloc = at(loc, "degrees");
  if (d.is_array()) {
    GradedVectorSpace s;
    for (std::size_t i = 0; i < d.size(); ++i) {
      if (!d[i].is_number_integer()) schema(at(dloc, i), "degrees are integers");
      s.degrees.push_back(d[i].get<int>());
    }
    return s;
  }
  if (!d.is_object()) schema(dloc, "degrees is an object {\"degree\": dim} or a list");
  std::map<int, std::size_t> comps;
  for (const auto& [key, value] : d.items()) {
    int deg = 0;
    try {
      std::size_t used = 0;
      deg = std::stoi(key, &used);
      if (used != key.size()) throw std::invalid_argument(key);
    } catch (const std::exception&) {
      schema(dloc, "degree keys are integers, found \"" + key + "\"");
    }
    comps[deg] += count_from_json(value, dloc + "/" + key);
  }
  return GradedVectorSpace::from_components(comps);
}

namespace {

// Adds one entry [i, .., {"k": "c"}] to m.
void add_entry(MultilinearMap& m, const Json& entry, const std::string& eloc, bool antisymmetric,
               std::set<Tuple>& seen) {
  const auto& domain = m.domain();
  if (!entry.is_array() || entry.empty() || !entry.back().is_object())
    schema(eloc, "an entry is [i, .., {\"k\": \"c\"}]");
  const std::size_t arity = entry.size() - 1;
  if (arity != domain.size()) schema(eloc, "expected " + std::to_string(domain.size()) + " input indices");
  Tuple in;
  for (std::size_t s = 0; s < arity; ++s) {
    const Json& x = entry[s];
    if (!x.is_number_integer() || x.get<long long>() < 1 || static_cast<std::size_t>(x.get<long long>()) > domain[s])
      schema(at(eloc, s), "index out of range 1.." + std::to_string(domain[s]));
    in.push_back(static_cast<Index>(x.get<long long>() - 1));
  }
  Tuple canon = in;
  if (antisymmetric && canon[0] > canon[1]) std::swap(canon[0], canon[1]);
  if (!seen.insert(canon).second) schema(eloc, "repeated input tuple");
  for (const auto& [key, value] : entry.back().items()) {
    std::size_t out = 0;
    try {
      std::size_t used = 0;
      out = std::stoul(key, &used);
      if (used != key.size()) throw std::invalid_argument(key);
    } catch (const std::exception&) {
      schema(at(eloc, arity), "output keys are 1-based indices");
    }
    if (out < 1 || out > m.codomain())
      schema(at(eloc, arity), "output index out of range 1.." + std::to_string(m.codomain()));
    const Rational c = rational_from_json(value, at(eloc, arity) + "/" + key);
    m.add(in, out - 1, c);
    if (antisymmetric && in[0] != in[1]) m.add({in[1], in[0]}, out - 1, -c);
  }
}

// Entries of mixed arity; domain(k) gives the slot dimensions of arity k.
std::map<std::size_t, MultilinearMap> grouped_from_json(
    const Json& j, const std::string& loc, const std::function<std::vector<std::size_t>(std::size_t)>& domain,
    std::size_t codomain) {
  if (!j.is_array()) schema(loc, "expected a list of entries");
  std::map<std::size_t, MultilinearMap> out;
  std::map<std::size_t, std::set<Tuple>> seen;
  for (std::size_t e = 0; e < j.size(); ++e) {
    const Json& entry = j[e];
    if (!entry.is_array() || entry.size() < 2) schema(at(loc, e), "an entry is [i, .., {\"k\": \"c\"}]");
    const std::size_t arity = entry.size() - 1;
    auto it = out.try_emplace(arity, domain(arity), codomain).first;
    add_entry(it->second, entry, at(loc, e), false, seen[arity]);
  }
  return out;
}

}  // namespace

MultilinearMap map_from_json(const Json& j, const std::string& loc, const std::vector<std::size_t>& domain,
                             std::size_t codomain, bool antisymmetric) {
  if (!j.is_array()) schema(loc, "expected a list of entries [i, .., {\"k\": \"c\"}]");
  MultilinearMap m(domain, codomain);
  std::set<Tuple> seen;
  for (std::size_t e = 0; e < j.size(); ++e) add_entry(m, j[e], at(loc, e), antisymmetric, seen);
  return m;
}

Json map_to_json(const MultilinearMap& m, bool antisymmetric) {
  Json entries = Json::array();
  Json current;
  Tuple current_in;
  bool open = false;
  for (const auto& [key, c] : m.table()) {
    Tuple in(key.begin(), key.end() - 1);
    if (antisymmetric && in.size() == 2 && in[0] > in[1]) continue;
    if (!open || in != current_in) {
      if (open) entries.push_back(current);
      current = Json::array();
      for (Index i : in) current.push_back(i + 1);
      current.push_back(Json::object());
      current_in = in;
      open = true;
    }
    current.back()[std::to_string(key.back() + 1)] = to_string(c);
  }
  if (open) entries.push_back(current);
  return entries;
}

GradedFamily family_from_json(const Json& j, const std::string& loc, const GradedVectorSpace& space, int degree) {
  const std::size_t n = space.dim();
  GradedFamily f(space, degree);
  for (auto& [arity, m] : grouped_from_json(j, loc, [n](std::size_t k) { return std::vector<std::size_t>(k, n); }, n)) {
    try {
      f.add(m);
    } catch (const Error& err) {
      throw Error(err.code(), err.what(), loc);
    }
  }
  return f;
}

Json family_to_json(const GradedFamily& f) {
  Json entries = Json::array();
  for (const auto& [arity, m] : f.components())
    for (auto& e : map_to_json(m)) entries.push_back(std::move(e));
  return entries;
}

LieLeibnizTriple InputDocument::triple() const {
  if (!lie) schema("", "a triple needs \"lie_algebra\"");
  if (!rep) schema("", "a triple needs \"representation\"");
  if (!tensor) schema("", "a triple needs \"embedding_tensor\"");
  return LieLeibnizTriple{*lie, *rep, *tensor};
}

namespace {

LieAlgebra parse_lie(const Json& j, const std::string& loc, std::vector<std::string>& names) {
  const std::size_t dim = count_from_json(require(j, "dim", loc), at(loc, "dim"));
  names = names_from_json(optional_field(j, "basis"), dim, at(loc, "basis"), "e");
  const Json* b = optional_field(j, "brackets");
  return LieAlgebra(b ? map_from_json(*b, at(loc, "brackets"), {dim, dim}, dim, true)
                      : MultilinearMap::on_space(dim, 2));
}

Representation parse_rep(const Json& j, const std::string& loc, const LieAlgebra& g) {
  if (j.is_string()) {
    if (j.get<std::string>() != "adjoint") schema(loc, "the only named representation is \"adjoint\"");
    return Representation::adjoint(g);
  }
  const Json& mats = require(j, "matrices", loc);
  std::size_t dv = 0;
  if (const Json* d = optional_field(j, "dim")) {
    dv = count_from_json(*d, at(loc, "dim"));
  } else if (mats.is_array() && !mats.empty() && mats[0].is_array()) {
    dv = mats[0].size();
  } else if (g.dim() > 0) {
    schema(loc, "cannot infer the representation dimension");
  }
  return Representation(matrices_from_json(mats, at(loc, "matrices"), g.dim(), dv, dv), dv);
}

TwoTermRep parse_two_term(const Json& j, const std::string& loc, std::size_t dg, std::size_t dv) {
  TwoTermRep r;
  r.dim_h = count_from_json(require(j, "dim_h", loc), at(loc, "dim_h"));
  r.dim_w = count_from_json(require(j, "dim_w", loc), at(loc, "dim_w"));
  r.frak_t = optional_field(j, "frak_t") ? matrix_from_json(j["frak_t"], at(loc, "frak_t"), r.dim_h, r.dim_w)
                                         : Matrix(r.dim_h, r.dim_w);
  auto list = [&](const char* key, std::size_t count, std::size_t rows, std::size_t cols) {
    if (const Json* x = optional_field(j, key)) return matrices_from_json(*x, at(loc, key), count, rows, cols);
    return std::vector<Matrix>(count, Matrix(rows, cols));
  };
  r.phi_h = list("phi_h", dg, r.dim_h, r.dim_h);
  r.phi_w = list("phi_w", dg, r.dim_w, r.dim_w);
  r.varphi = list("varphi", dv, r.dim_w, r.dim_h);
  return r;
}

DeformationDatum parse_deformation(const Json& j, const std::string& loc, std::size_t dg, std::size_t dv) {
  DeformationDatum d;
  auto entries = [&](const char* key) -> const Json& {
    static const Json empty = Json::array();
    const Json* x = optional_field(j, key);
    return x ? *x : empty;
  };
  d.omega = map_from_json(entries("omega"), at(loc, "omega"), {dg, dg}, dg, true);
  d.varrho = map_from_json(entries("varrho"), at(loc, "varrho"), {dg, dv}, dv);
  d.calT = optional_field(j, "calT") ? matrix_from_json(j["calT"], at(loc, "calT"), dg, dv) : Matrix(dg, dv);
  return d;
}

Json deformation_json(const DeformationDatum& d) {
  return Json{{"omega", map_to_json(d.omega, true)}, {"varrho", map_to_json(d.varrho)}, {"calT", to_json(d.calT)}};
}

ExtensionPayload parse_extension(const Json& j, const std::string& loc, std::size_t dg, std::size_t dv) {
  const std::size_t dh = count_from_json(require(j, "dim_h", loc), at(loc, "dim_h"));
  const std::size_t dw = count_from_json(require(j, "dim_w", loc), at(loc, "dim_w"));
  ExtensionPayload e;
  e.frak_t = optional_field(j, "frak_t") ? matrix_from_json(j["frak_t"], at(loc, "frak_t"), dh, dw) : Matrix(dh, dw);
  const Json empty = Json::object();
  const Json* cp = optional_field(j, "cocycle");
  const Json& c = cp ? *cp : empty;
  const std::string cloc = at(loc, "cocycle");
  const Json none = Json::array();
  const Json* om = optional_field(c, "omega");
  const Json* vp = optional_field(c, "varpi");
  e.cocycle.omega = map_from_json(om ? *om : none, at(cloc, "omega"), {dg, dg}, dh, true);
  e.cocycle.varpi = map_from_json(vp ? *vp : none, at(cloc, "varpi"), {dg, dv}, dw);
  e.cocycle.calT = optional_field(c, "calT") ? matrix_from_json(c["calT"], at(cloc, "calT"), dh, dv) : Matrix(dh, dv);
  return e;
}

HomotopyEtPayload parse_homotopy_et(const Json& j, const std::string& loc) {
  HomotopyEtPayload p;
  p.et.g = space_from_json(require(j, "g", loc), at(loc, "g"));
  p.et.v = space_from_json(require(j, "v", loc), at(loc, "v"));
  const std::size_t dg = p.et.g.dim(), dv = p.et.v.dim();
  const Json none = Json::array();
  const Json* l = optional_field(j, "l");
  p.l = family_from_json(l ? *l : none, at(loc, "l"), p.et.g, 1);
  const Json* rho = optional_field(j, "rho");
  p.rho = grouped_from_json(rho ? *rho : none, at(loc, "rho"),
                            [&](std::size_t k) {
                              std::vector<std::size_t> d(k, dg);
                              d.back() = dv;
                              return d;
                            },
                            dv);
  const Json* theta = optional_field(j, "theta");
  p.et.theta = grouped_from_json(theta ? *theta : none, at(loc, "theta"),
                                 [&](std::size_t k) { return std::vector<std::size_t>(k, dv); }, dg);
  return p;
}

Json grouped_json(const std::map<std::size_t, MultilinearMap>& maps) {
  Json entries = Json::array();
  for (const auto& [arity, m] : maps)
    for (auto& e : map_to_json(m)) entries.push_back(std::move(e));
  return entries;
}

}  // namespace

InputDocument parse_document(const Json& j) {
  if (!j.is_object()) schema("", "the document is a JSON object");
  InputDocument doc;
  if (const Json* v = optional_field(j, "version")) {
    if (!v->is_string() || v->get<std::string>() != kDocumentVersion)
      schema("/version", std::string("unsupported version; expected \"") + kDocumentVersion + "\"");
  }
  static const std::set<std::string> known = {"version",     "lie_algebra",  "representation", "embedding_tensor",
                                              "leibniz_algebra", "two_term_rep", "graded",        "homotopy_et",
                                              "deformations", "extension",    "description"};
  for (const auto& [key, value] : j.items())
    if (!known.count(key)) schema("/" + key, "unknown field");

  if (const Json* l = optional_field(j, "lie_algebra")) doc.lie = parse_lie(*l, "/lie_algebra", doc.lie_basis);
  if (const Json* r = optional_field(j, "representation")) {
    if (!doc.lie) schema("/representation", "a representation needs \"lie_algebra\"");
    doc.rep = parse_rep(*r, "/representation", *doc.lie);
  }
  if (const Json* t = optional_field(j, "embedding_tensor")) {
    if (!doc.rep) schema("/embedding_tensor", "an embedding tensor needs \"representation\"");
    doc.tensor = matrix_from_json(require(*t, "matrix", "/embedding_tensor"), "/embedding_tensor/matrix",
                                  doc.lie->dim(), doc.rep->dim_v());
  }
  if (const Json* l = optional_field(j, "leibniz_algebra")) {
    const std::size_t dim = count_from_json(require(*l, "dim", "/leibniz_algebra"), "/leibniz_algebra/dim");
    doc.leibniz_basis = names_from_json(optional_field(*l, "basis"), dim, "/leibniz_algebra/basis", "e");
    const Json* b = optional_field(*l, "brackets");
    doc.leibniz = LeibnizAlgebra(b ? map_from_json(*b, "/leibniz_algebra/brackets", {dim, dim}, dim)
                                   : MultilinearMap::on_space(dim, 2));
  }
  const std::size_t dg = doc.lie ? doc.lie->dim() : 0;
  const std::size_t dv = doc.rep ? doc.rep->dim_v() : 0;
  if (const Json* r = optional_field(j, "two_term_rep")) {
    if (!doc.rep) schema("/two_term_rep", "coefficients need \"lie_algebra\" and \"representation\"");
    doc.two_term_rep = parse_two_term(*r, "/two_term_rep", dg, dv);
  }
  if (const Json* g = optional_field(j, "graded")) {
    GradedPayload p;
    const Json& kind = require(*g, "kind", "/graded");
    if (!kind.is_string() || (kind != "linf" && kind != "leibniz_inf"))
      schema("/graded/kind", "kind is \"linf\" or \"leibniz_inf\"");
    p.kind = kind.get<std::string>();
    const GradedVectorSpace space = space_from_json(require(*g, "space", "/graded"), "/graded/space");
    p.brackets = family_from_json(require(*g, "brackets", "/graded"), "/graded/brackets", space, 1);
    doc.graded = std::move(p);
  }
  if (const Json* h = optional_field(j, "homotopy_et")) doc.homotopy_et = parse_homotopy_et(*h, "/homotopy_et");
  if (const Json* d = optional_field(j, "deformations")) {
    if (!doc.rep) schema("/deformations", "deformations need \"lie_algebra\" and \"representation\"");
    if (!d->is_array()) schema("/deformations", "expected a list");
    for (std::size_t i = 0; i < d->size(); ++i)
      doc.deformations.push_back(parse_deformation((*d)[i], at("/deformations", i), dg, dv));
  }
  if (const Json* e = optional_field(j, "extension")) {
    if (!doc.rep) schema("/extension", "an extension needs \"lie_algebra\" and \"representation\"");
    doc.extension = parse_extension(*e, "/extension", dg, dv);
  }
  return doc;
}

InputDocument parse_document_text(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::SchemaError, e.what(), "byte " + std::to_string(e.byte));
  }
  return parse_document(j);
}

Json to_json(const InputDocument& doc) {
  Json j = Json::object();
  j["version"] = doc.version;
  if (doc.lie) {
    j["lie_algebra"] = Json{{"dim", doc.lie->dim()},
                            {"basis", names_json(doc.lie_basis)},
                            {"brackets", map_to_json(doc.lie->bracket, true)}};
  }
  if (doc.rep) {
    Json mats = Json::array();
    for (const auto& m : doc.rep->matrices()) mats.push_back(to_json(m));
    j["representation"] = Json{{"dim", doc.rep->dim_v()}, {"matrices", mats}};
  }
  if (doc.tensor) j["embedding_tensor"] = Json{{"matrix", to_json(*doc.tensor)}};
  if (doc.leibniz) {
    j["leibniz_algebra"] = Json{{"dim", doc.leibniz->dim()},
                                {"basis", names_json(doc.leibniz_basis)},
                                {"brackets", map_to_json(doc.leibniz->bracket)}};
  }
  if (doc.two_term_rep) {
    const TwoTermRep& r = *doc.two_term_rep;
    auto list = [](const std::vector<Matrix>& ms) {
      Json a = Json::array();
      for (const auto& m : ms) a.push_back(to_json(m));
      return a;
    };
    j["two_term_rep"] = Json{{"dim_h", r.dim_h}, {"dim_w", r.dim_w},       {"frak_t", to_json(r.frak_t)},
                             {"phi_h", list(r.phi_h)}, {"phi_w", list(r.phi_w)}, {"varphi", list(r.varphi)}};
  }
  if (doc.graded) {
    j["graded"] = Json{{"kind", doc.graded->kind},
                       {"space", to_json(doc.graded->brackets.space())},
                       {"brackets", family_to_json(doc.graded->brackets)}};
  }
  if (doc.homotopy_et) {
    const auto& h = *doc.homotopy_et;
    j["homotopy_et"] = Json{{"g", to_json(h.et.g)},
                            {"v", to_json(h.et.v)},
                            {"l", family_to_json(h.l)},
                            {"rho", grouped_json(h.rho)},
                            {"theta", grouped_json(h.et.theta)}};
  }
  if (!doc.deformations.empty()) {
    Json a = Json::array();
    for (const auto& d : doc.deformations) a.push_back(deformation_json(d));
    j["deformations"] = a;
  }
  if (doc.extension) {
    const auto& e = *doc.extension;
    j["extension"] = Json{{"dim_h", e.frak_t.rows()},
                          {"dim_w", e.frak_t.cols()},
                          {"frak_t", to_json(e.frak_t)},
                          {"cocycle", Json{{"omega", map_to_json(e.cocycle.omega, true)},
                                           {"varpi", map_to_json(e.cocycle.varpi)},
                                           {"calT", to_json(e.cocycle.calT)}}}};
  }
  return j;
}

Json error_json(const Error& e) {
  return Json{{"code", error_code_name(e.code())}, {"message", e.what()}, {"location", e.location()}};
}

namespace {

InputDocument triple_document(const LieLeibnizTriple& t, std::vector<std::string> basis = {}) {
  InputDocument doc;
  doc.lie = t.g;
  if (basis.empty())
    for (std::size_t i = 0; i < t.dim_g(); ++i) basis.push_back("e" + std::to_string(i + 1));
  doc.lie_basis = std::move(basis);
  doc.rep = t.rho;
  doc.tensor = t.T;
  return doc;
}

LieLeibnizTriple heisenberg_grid(const std::array<std::array<int, 3>, 3>& r) {
  std::array<std::array<Rational, 3>, 3> q{};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) q[i][j] = r[i][j];
  return heisenberg_family(q);
}

std::vector<std::string> so8_basis() {
  std::vector<std::string> names;
  for (int i = 1; i <= 8; ++i)
    for (int j = i + 1; j <= 8; ++j) names.push_back("E" + std::to_string(i) + std::to_string(j));
  return names;
}

}  // namespace

std::vector<std::string> example_names() {
  return {"heisenberg-i", "heisenberg-ii", "so8", "omni", "crossed-module", "diff-lie", "endo-triple", "leibniz-aa-b"};
}

InputDocument example_document(const std::string& name) {
  if (name == "heisenberg-i") return triple_document(heisenberg_grid({{{1, 1, 0}, {1, 1, 0}, {0, 0, 0}}}));
  if (name == "heisenberg-ii") return triple_document(heisenberg_grid({{{1, 0, 0}, {0, 1, 0}, {1, 2, 1}}}));
  if (name == "so8") return triple_document(so8_56(), so8_basis());
  if (name == "omni") return triple_document(omni(2), {"E11", "E12", "E21", "E22"});
  if (name == "crossed-module") return triple_document(crossed_module_heisenberg());
  if (name == "diff-lie") return triple_document(differential_lie_heisenberg());
  if (name == "endo-triple") {
    Matrix ft(2, 1);
    ft(0, 0) = 1;
    const EndomorphismTriple e = endomorphism_triple(ft);
    InputDocument doc = triple_document(e.triple);
    doc.two_term_rep = endomorphism_rep(e, ft);
    return doc;
  }
  if (name == "leibniz-aa-b") {
    InputDocument doc;
    doc.leibniz = leibniz_aa_b();
    doc.leibniz_basis = {"a", "b"};
    return doc;
  }
  throw Error(ErrorCode::SchemaError, "unknown example \"" + name + "\"", "example");
}

}  // namespace leibten
