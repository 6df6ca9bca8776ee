#ifndef LEIBTEN_GRADED_HPP
#define LEIBTEN_GRADED_HPP

#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "leibten/cohomology.hpp"

namespace leibten {

// Graded vector space given by the degree of every basis element.
struct GradedVectorSpace {
  std::vector<int> degrees;

  static GradedVectorSpace concentrated(int degree, std::size_t dim);
  // Basis ordered by ascending degree.
  static GradedVectorSpace from_components(const std::map<int, std::size_t>& components);

  std::size_t dim() const { return degrees.size(); }
  int degree(std::size_t i) const { return degrees.at(i); }
  std::map<int, std::size_t> components() const;
  int degree_of(const Tuple& t) const;

  friend bool operator==(const GradedVectorSpace&, const GradedVectorSpace&) = default;
};

// a first, then b.
GradedVectorSpace direct_sum(const GradedVectorSpace& a, const GradedVectorSpace& b);

inline constexpr std::size_t kMaxGradedDim = 48;
inline constexpr std::size_t kMaxGradedArity = 4;

struct TruncationBounds {
  std::size_t arity = 4;
  std::size_t weight = 3;
};
// SizeLimit / InvalidInputData on bounds outside [1, kMaxGradedArity] or an oversized space.
void check_bounds(const TruncationBounds& b, const GradedVectorSpace& space);

// Graded maps f_k: V^{(x)k} -> V of one common map degree, keyed by arity.
// Every stored entry satisfies deg(out) = sum deg(in) + degree.
class GradedFamily {
 public:
  GradedFamily() = default;
  GradedFamily(GradedVectorSpace space, int degree);

  const GradedVectorSpace& space() const { return space_; }
  int degree() const { return degree_; }
  std::size_t dim() const { return space_.dim(); }
  const std::map<std::size_t, MultilinearMap>& components() const { return comps_; }
  // Zero map of the right shape when absent.
  MultilinearMap component(std::size_t arity) const;
  std::size_t max_arity() const { return comps_.empty() ? 0 : comps_.rbegin()->first; }
  bool is_zero() const { return comps_.empty(); }

  // NotHomogeneous on an entry of the wrong degree; DimensionMismatch on shape.
  void add(const MultilinearMap& m);
  void add_entry(const Tuple& in, std::size_t out, const Rational& c);

  GradedFamily truncated(std::size_t arity) const;
  GradedFamily& operator+=(const GradedFamily& other);
  GradedFamily& operator-=(const GradedFamily& other);
  GradedFamily& operator*=(const Rational& s);

  friend bool operator==(const GradedFamily&, const GradedFamily&) = default;

 private:
  void insert(std::size_t arity, MultilinearMap m);

  GradedVectorSpace space_;
  int degree_ = 0;
  std::map<std::size_t, MultilinearMap> comps_;
};

GradedFamily operator+(GradedFamily a, const GradedFamily& b);
GradedFamily operator-(GradedFamily a, const GradedFamily& b);
GradedFamily operator*(const Rational& s, GradedFamily a);

// Ungraded map on a single space placed in degree -1: arity k gives map degree k-1.
GradedFamily encode_classical(const MultilinearMap& m);
GradedFamily encode_classical(const GradedVectorSpace& space, const MultilinearMap& m);

// f o-bar_k g for single components; g may have arity 0.
// Sign (-1)^{deg_g (|v_s(1)|+..+|v_s(k-1)|)} eps(sigma) over (k-1, arity(g)-1)-shuffles.
MultilinearMap graded_compose_at(const GradedVectorSpace& space, const MultilinearMap& f, const MultilinearMap& g,
                                 int deg_g, std::size_t k);
// f o-bar g summed over components and slots, keeping arities <= max_arity.
GradedFamily graded_circle(const GradedFamily& f, const GradedFamily& g, std::size_t max_arity);
// [f,g]_B = f o-bar g - (-1)^{mn} g o-bar f, components above max_arity dropped.
GradedFamily graded_bracket_truncated(const GradedFamily& f, const GradedFamily& g, std::size_t max_arity);
// Same, every arity kept.
GradedFamily graded_bracket(const GradedFamily& f, const GradedFamily& g);
// Components up to bounds.arity; TruncationOverflow if a higher one is nonzero.
GradedFamily graded_balavoine(const GradedFamily& f, const GradedFamily& g, const TruncationBounds& bounds);

struct GradedViolation {
  std::string identity;
  Tuple inputs;  // 0-based basis indices
  Vector value;
};

struct GradedReport {
  bool ok = true;
  std::size_t checked_arity = 0;
  std::vector<GradedViolation> violations;  // at most kMaxViolations kept
  void fail(GradedViolation v);
};
inline constexpr std::size_t kMaxViolations = 32;

// Degree-1 graded-symmetric brackets with the generalized Jacobi identity.
GradedReport check_linf(const GradedFamily& l, const TruncationBounds& bounds);
// Only input tuples of total weight <= bounds.weight are checked.
GradedReport check_linf(const GradedFamily& l, const TruncationBounds& bounds, const std::vector<std::size_t>& weights);
// (sum theta_k) o-bar (sum theta_k) = 0 through arity bounds.arity.
GradedReport check_leibniz_inf(const GradedFamily& theta, const TruncationBounds& bounds);

// rho_k: g^{k-1} (x) V -> V as maps with domain (dg,..,dg,dv) and codomain dv.
using GradedRepFamily = std::map<std::size_t, MultilinearMap>;

// (l_k [+] rho_k) on g (+) V, g first.
GradedFamily hemisemidirect_graded(const GradedFamily& l, const GradedVectorSpace& v, const GradedRepFamily& rho);

// Theta_k: V^{(x)k} -> g, all of degree 0.
struct HomotopyET {
  GradedVectorSpace g;
  GradedVectorSpace v;
  std::map<std::size_t, MultilinearMap> theta;  // domain (dv x k), codomain dg
};

// Theta-hat on g (+) V.
GradedFamily lift_homotopy_et(const HomotopyET& t);
// Entries with all inputs in V and output in g (the projection P), still on g (+) V.
GradedFamily project_h(const GradedFamily& f, std::size_t dg);
// Entries with all inputs and the output in V, reindexed onto V.
GradedFamily restrict_to_v(const GradedFamily& f, std::size_t dg, const GradedVectorSpace& v);

// e^{[.,Theta]_B} X = sum_n 1/n! [..[X,Theta]..Theta]; TruncationOverflow if it fails to terminate.
GradedFamily exp_adjoint(const GradedFamily& x, const GradedFamily& theta, const TruncationBounds& bounds);

// P(e^{[.,Theta]_B} sum (l_k [+] rho_k)) = 0 through bounds.arity.
GradedReport check_homotopy_et(const HomotopyET& t, const GradedFamily& l, const GradedRepFamily& rho,
                               const TruncationBounds& bounds);
// The induced Leibniz_infty brackets on V; NotHomotopyET when the check fails.
GradedFamily induced_leibniz_inf(const HomotopyET& t, const GradedFamily& l, const GradedRepFamily& rho,
                                 const TruncationBounds& bounds);

// f theta'_k = theta_k (f (x) .. (x) f) on basis tuples, f a degree-0 matrix.
GradedReport check_strict_homomorphism(const GradedFamily& source, const GradedFamily& target, const Matrix& f,
                                       const TruncationBounds& bounds);
// phi_g strict L_infty endomorphism of l, phi_g Theta' = Theta phi_V, phi_V rho = rho (phi_g, .., phi_V).
GradedReport check_homotopy_et_homomorphism(const GradedFamily& l, const GradedRepFamily& rho,
                                            const HomotopyET& source, const HomotopyET& target,
                                            const Matrix& phi_g, const Matrix& phi_v, const TruncationBounds& bounds);

// V-data (L, h, P, Delta) with L = C(g (+) V), h the maps V^{(x)n} -> g, P the projection and Delta = 0.
struct VData {
  GradedVectorSpace g;
  GradedVectorSpace v;

  GradedVectorSpace sum() const { return direct_sum(g, v); }
  std::size_t dg() const { return g.dim(); }
  bool in_h(const GradedFamily& f) const;
};

// s^{-1}Q (shifted, degree |Q|-1) or an element of h (degree |theta|).
struct VoronovElement {
  bool shifted = false;
  GradedFamily value;

  int degree() const { return shifted ? value.degree() - 1 : value.degree(); }
};
// Homogeneous terms of one element; equal (shifted, degree) pairs are merged.
using VoronovSum = std::vector<VoronovElement>;
void accumulate(VoronovSum& acc, const VoronovElement& term, const Rational& c = Rational(1));
bool is_zero(const VoronovSum& s);

// l_k on homogeneous inputs; NotHomogeneous for an unshifted input outside h.
VoronovSum voronov_bracket(const VData& vd, const std::vector<VoronovElement>& inputs);
// l_k^alpha(x) = sum_m 1/m! l_{k+m}(alpha^m, x); alpha given by its terms.
VoronovSum voronov_twisted(const VData& vd, const VoronovSum& alpha, const std::vector<VoronovElement>& inputs,
                           const TruncationBounds& bounds);
// sum_{k>=1} 1/k! l_k(alpha^k).
VoronovSum voronov_mc_sum(const VData& vd, const VoronovSum& alpha, const TruncationBounds& bounds);

struct MCTripleReport {
  bool ok = false;
  bool pair_part_zero = false;  // [mu+rho, mu+rho]_B = 0
  bool et_part_zero = false;    // [[mu+rho, T]_B, T]_B = 0
};
// (s^{-1}(mu [+] rho), T) is a Maurer-Cartan element.
MCTripleReport mc_check_triple(const MultilinearMap& mu, const MultilinearMap& rho, const Matrix& T);

// Encodings of a triple: V-data in degree -1, s^{-1}(mu [+] rho) and T-hat.
VData classical_vdata(std::size_t dg, std::size_t dv);
VoronovElement shifted_hemisemidirect(const MultilinearMap& mu, const MultilinearMap& rho);
VoronovElement lifted_T(const Matrix& T);

// (-1)^{n-2} l_1^alpha at alpha = (s^{-1}(mu [+] rho), T) on REG(n), in REG coordinates.
Matrix twisted_l1_matrix(const LieLeibnizTriple& t, std::size_t n);

// l_k^alpha(x) = sum_m 1/m! l_{k+m}(alpha^m, x) for a family on a finite space; alpha of degree 0.
GradedFamily twist(const GradedFamily& l, const Vector& alpha, const TruncationBounds& bounds);
// sum_k 1/k! l_k(alpha^k).
Vector mc_curvature(const GradedFamily& l, const Vector& alpha);

// Sparse combinations of words (tuples of basis indices).
using WordCombination = std::map<Tuple, Rational>;
using WordTensor = std::map<std::pair<Tuple, Tuple>, Rational>;
void add_to(WordCombination& acc, const WordCombination& x, const Rational& c = Rational(1));
void add_to(WordTensor& acc, const WordTensor& x, const Rational& c = Rational(1));

// Graded associative algebra with a degree-1 map nabla. `basis` is the finite
// set of basis words used by the checks.
struct DiffGradedAlgebra {
  std::function<int(const Tuple&)> degree;
  std::function<WordCombination(const Tuple&, const Tuple&)> product;
  std::function<WordCombination(const Tuple&)> nabla;
  std::vector<Tuple> basis;
};
WordCombination product(const DiffGradedAlgebra& a, const WordCombination& x, const WordCombination& y);
WordCombination nabla(const DiffGradedAlgebra& a, const WordCombination& x);

// Finite-dimensional algebra: basis element i is the word (i).
DiffGradedAlgebra finite_algebra(const GradedVectorSpace& space, const MultilinearMap& mult, const Matrix& nabla);

// NotSquareZero unless nabla o nabla vanishes on the basis.
void check_square_zero(const DiffGradedAlgebra& a);
// b_k^nabla on homogeneous inputs.
WordCombination borjeson(const DiffGradedAlgebra& a, std::size_t k, const std::vector<WordCombination>& inputs);
// Stasheff identities for the Borjeson products on all basis tuples of arity <= max_arity.
GradedReport stasheff_check(const DiffGradedAlgebra& a, std::size_t max_arity);

// Bar construction of a Leibniz_infty algebra: T-bar(lambda) with the coZinbiel
// coproduct and the codifferential d = sum d_k.
struct BarConstruction {
  GradedFamily theta;

  int degree(const Tuple& w) const { return theta.space().degree_of(w); }
  WordCombination d_k(std::size_t k, const Tuple& w) const;
  WordCombination d(const Tuple& w) const;
  WordCombination d(const WordCombination& x) const;
  WordTensor coproduct(const Tuple& w) const;
  // coproduct + tau_12 o coproduct.
  WordTensor coshuffle(const Tuple& w) const;
  // Concatenation with d; basis = all words of length <= max_length.
  DiffGradedAlgebra algebra(std::size_t max_length) const;
};
BarConstruction bar_construction(const GradedFamily& theta);
std::vector<Tuple> words_up_to(std::size_t letters, std::size_t max_length);

struct BarReport {
  bool square_zero = true;
  bool coderivation = true;  // for the coZinbiel coproduct
  bool coshuffle = true;     // for coproduct + tau_12 o coproduct
  std::size_t words_checked = 0;
  bool ok() const { return square_zero && coderivation && coshuffle; }
};
BarReport bar_check(const BarConstruction& bar, const TruncationBounds& bounds);

}  // namespace leibten

#endif
