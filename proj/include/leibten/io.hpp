#ifndef LEIBTEN_IO_HPP
#define LEIBTEN_IO_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "leibten/deformext.hpp"
#include "leibten/error.hpp"
#include "leibten/graded.hpp"

namespace leibten {

using Json = nlohmann::ordered_json;

inline constexpr const char* kDocumentVersion = "leibten/1";

// Schema errors carry a JSON-pointer location such as "/lie_algebra/brackets/2".
Rational rational_from_json(const Json& j, const std::string& loc);
Json to_json(const Rational& r);
Json to_json(const Vector& v);
Json to_json(const Matrix& m);
Json to_json(const GradedVectorSpace& s);

// `rows`/`cols` of npos accept any shape; an empty array is a 0-row matrix.
inline constexpr std::size_t kAnySize = static_cast<std::size_t>(-1);
Matrix matrix_from_json(const Json& j, const std::string& loc, std::size_t rows = kAnySize,
                        std::size_t cols = kAnySize);
std::vector<Matrix> matrices_from_json(const Json& j, const std::string& loc, std::size_t count, std::size_t rows,
                                       std::size_t cols);
GradedVectorSpace space_from_json(const Json& j, const std::string& loc);

// Sparse entries [i_1, .., i_k, {"o": "c", ..}] with 1-based indices. With
// `antisymmetric`, an off-diagonal entry (i,j) also sets (j,i) to the negative
// and each unordered pair may appear once.
MultilinearMap map_from_json(const Json& j, const std::string& loc, const std::vector<std::size_t>& domain,
                             std::size_t codomain, bool antisymmetric = false);
// Inverse of map_from_json; antisymmetric maps are written on i <= j only.
Json map_to_json(const MultilinearMap& m, bool antisymmetric = false);
// Entries of mixed arity on one graded space, as a family of the given degree.
GradedFamily family_from_json(const Json& j, const std::string& loc, const GradedVectorSpace& space, int degree);
Json family_to_json(const GradedFamily& f);

struct GradedPayload {
  std::string kind;  // "linf" or "leibniz_inf"
  GradedFamily brackets;
};

struct HomotopyEtPayload {
  HomotopyET et;
  GradedFamily l;
  GradedRepFamily rho;
};

struct ExtensionPayload {
  Matrix frak_t;
  ExtensionCocycle cocycle;
};

struct InputDocument {
  std::string version = kDocumentVersion;
  std::optional<LieAlgebra> lie;
  std::vector<std::string> lie_basis;
  std::optional<Representation> rep;
  std::optional<Matrix> tensor;
  std::optional<LeibnizAlgebra> leibniz;
  std::vector<std::string> leibniz_basis;
  std::optional<TwoTermRep> two_term_rep;
  std::optional<GradedPayload> graded;
  std::optional<HomotopyEtPayload> homotopy_et;
  std::vector<DeformationDatum> deformations;
  std::optional<ExtensionPayload> extension;

  bool has_triple() const { return lie && rep && tensor; }
  // The triple without validation; SchemaError when a part is missing.
  LieLeibnizTriple triple() const;
};

// Shapes are checked here; mathematical identities are left to the validators.
InputDocument parse_document(const Json& j);
InputDocument parse_document_text(const std::string& text);
Json to_json(const InputDocument& doc);

// {"code", "message", "location"}.
Json error_json(const Error& e);

// Names of the built-in example documents, and the documents themselves.
std::vector<std::string> example_names();
InputDocument example_document(const std::string& name);

}  // namespace leibten

#endif
