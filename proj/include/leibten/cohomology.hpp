#ifndef LEIBTEN_COHOMOLOGY_HPP
#define LEIBTEN_COHOMOLOGY_HPP

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "leibten/cochains.hpp"

namespace leibten {

enum class ComplexKind { ET, Pair, Reg, Coeff };
const char* complex_kind_name(ComplexKind kind);

// Highest degree accepted by the coboundary builders.
inline constexpr std::size_t kMaxDegree = 4;

struct CochainComplexSlice {
  ComplexKind kind;
  std::size_t degree = 0;
  Matrix d;  // C^degree -> C^{degree+1}
};

// Cochain spaces C^n (C^0 = 0) with a coboundary emitter d(n): C^n -> C^{n+1}.
struct CochainComplex {
  ComplexKind kind;
  std::function<std::size_t(std::size_t)> dim;
  std::function<void(std::size_t, const EntrySink&)> emit;

  // Dense matrix of d(n); SizeLimit above kMaxDegree or the size caps.
  Matrix d(std::size_t n) const;
  // d(n) x without assembling the matrix.
  Vector apply(std::size_t n, const Vector& x) const;
};

// Hom(V^{n-1}, g) with the embedding-tensor coboundary.
CochainComplex et_complex(const LieLeibnizTriple& t);
// Hom(wedge^n g, g) (+) Hom(wedge^{n-1} g (x) V, V) with delta.
CochainComplex pair_complex(const LieRepPair& p);
// PAIR (+) ET with D = [[delta, 0], [Omega, d_T]].
CochainComplex reg_complex(const LieLeibnizTriple& t);
// The complex with coefficients in a representation; throws InvalidRepresentation.
CochainComplex coeff_complex(const LieLeibnizTriple& t, const TwoTermRep& r);
// Same without validating r. Used for the regular coefficients, which need not
// form a representation but still produce D.
CochainComplex coeff_complex_unchecked(const LieLeibnizTriple& t, const TwoTermRep& r);

// Pair coefficients (h = g, W = V) of a LieRep pair; frak_t is zero.
TwoTermRep pair_regular_coefficients(const LieRepPair& p);

CochainComplexSlice coboundary_et(const LieLeibnizTriple& t, std::size_t n);
CochainComplexSlice coboundary_pair(const LieRepPair& p, std::size_t n);
CochainComplexSlice coboundary_reg(const LieLeibnizTriple& t, std::size_t n);
CochainComplexSlice coboundary_coeff(const LieLeibnizTriple& t, const TwoTermRep& r, std::size_t n);
// Omega_T: PAIR(n) -> ET(n+1).
Matrix omega_t(const LieLeibnizTriple& t, std::size_t n);

// Second routes through the graded Lie algebra (C(g (+) V), [.,.]_B).
//   d_T theta = (-1)^{k-1} [[mu+rho, T], theta]_B restricted, theta of arity k >= 1.
//   delta f   = (-1)^{n-1} [mu+rho, f-hat]_B.
//   Omega_T f = (-1)^n / n! [..[f-hat, T-hat]_B .. T-hat]_B restricted to V^n -> g.
Matrix coboundary_et_balavoine(const LieLeibnizTriple& t, std::size_t n);
Matrix coboundary_pair_balavoine(const LieRepPair& p, std::size_t n);
Matrix omega_t_balavoine(const LieLeibnizTriple& t, std::size_t n);

// Phi: ET(n) = Hom(V^{n-1}, g) -> Hom(V^n, V), Phi(f)(u_1..u_n) = -rho(f(u_1..u_{n-1}))u_n.
Matrix phi_matrix(const LieLeibnizTriple& t, std::size_t n);
// Loday-Pirashvili coboundary of (V, [.,.]_T) with regular coefficients,
// Hom(V^k, V) -> Hom(V^{k+1}, V).
Matrix leibniz_reg_coboundary(const LieLeibnizTriple& t, std::size_t k);

struct CohomologyReport {
  ComplexKind kind;
  std::size_t degree = 0;
  std::size_t dim_cochain = 0;
  std::size_t dim_kernel = 0;
  std::size_t dim_image = 0;
  std::size_t betti = 0;
  // Reduced-echelon basis of the cocycles reduced modulo the coboundaries.
  std::vector<Vector> representatives;
};

CohomologyReport cohomology(const CochainComplex& c, std::size_t n);

// Exactness of H^n(T) -> H^n_reg -> H^n(g,rho) -> H^{n+1}(T) -> ...
struct LesNode {
  std::string name;  // "H(T)", "H_reg" or "H(g,rho)"
  std::size_t degree = 0;
  std::size_t dim_image = 0;   // image of the incoming map in cohomology
  std::size_t dim_kernel = 0;  // kernel of the outgoing map in cohomology
  bool contained = false;      // image inside kernel
  bool exact = false;
};
struct LesReport {
  bool exact = true;
  std::vector<LesNode> nodes;
};
LesReport les_check(const LieLeibnizTriple& t, std::size_t max_n);

// Embedding of coefficient cochains into the regular cochains of the
// semidirect product (extension by zero).
Matrix coeff_embedding(const LieLeibnizTriple& t, const TwoTermRep& r, std::size_t n);
// D_semidirect(n) E_n == E_{n+1} D_R(n).
bool coeff_subcomplex_check(const LieLeibnizTriple& t, const TwoTermRep& r, std::size_t n);

}  // namespace leibten

#endif
