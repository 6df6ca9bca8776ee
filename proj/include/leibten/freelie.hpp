#ifndef LEIBTEN_FREELIE_HPP
#define LEIBTEN_FREELIE_HPP

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "leibten/graded.hpp"

namespace leibten {

inline constexpr std::size_t kMaxFreeGenerators = 3;
inline constexpr std::size_t kMaxFreeWeight = 4;

// a (x) b - (-1)^{|a||b|} b (x) a on homogeneous tensors over a graded alphabet.
WordCombination graded_commutator(const GradedVectorSpace& alphabet, const WordCombination& a,
                                  const WordCombination& b);
// Concatenation product in T(V).
WordCombination concat(const WordCombination& a, const WordCombination& b);
// Unreduced coshuffle coproduct of a single word; the empty word is the unit.
WordTensor coshuffle_coproduct(const GradedVectorSpace& alphabet, const Tuple& w);

// One basis element of Lie(V): a Lyndon word, or w w for an odd Lyndon word w.
struct LieBasisElement {
  Tuple word;
  bool square = false;
  // Standard factorization [left, right]; both npos for a letter.
  std::size_t left = static_cast<std::size_t>(-1);
  std::size_t right = static_cast<std::size_t>(-1);
  std::size_t weight = 0;
  int degree = 0;
};

// Basis of the free graded Lie algebra up to a weight bound, ordered by
// (weight, word). Every element is stored with its image in T(V).
class LyndonBasis {
 public:
  LyndonBasis() = default;
  LyndonBasis(GradedVectorSpace alphabet, std::size_t weight_bound);

  const GradedVectorSpace& alphabet() const { return alphabet_; }
  std::size_t weight_bound() const { return weight_bound_; }
  std::size_t size() const { return elems_.size(); }
  const LieBasisElement& element(std::size_t i) const { return elems_.at(i); }
  const std::vector<LieBasisElement>& elements() const { return elems_; }
  const WordCombination& tensor(std::size_t i) const { return tensors_.at(i); }
  std::vector<std::size_t> of_weight(std::size_t w) const;
  // Degrees of the elements, as a graded space.
  GradedVectorSpace space() const;
  std::vector<std::size_t> weights() const;
  // "aab", or "aa" for the square of a; letters are a, b, c, ...
  std::string word_name(std::size_t i) const;
  // "[a,[a,b]]".
  std::string bracket_name(std::size_t i) const;
  std::size_t find(const std::string& word_name) const;

  // Coordinates of a Lie element of T(V) of homogeneous weight <= bound.
  // InvalidInputData if x is not in Lie(V); TruncationOverflow above the bound.
  SparseVector express(const WordCombination& x) const;
  // [y_i, y_j] rewritten in the basis.
  SparseVector bracket(std::size_t i, std::size_t j) const;

 private:
  GradedVectorSpace alphabet_;
  std::size_t weight_bound_ = 0;
  std::vector<LieBasisElement> elems_;
  std::vector<WordCombination> tensors_;
  // Per weight: tensor coordinates of the basis elements of that weight as columns.
  std::vector<Matrix> columns_;
};

// SizeLimit above kMaxFreeGenerators or kMaxFreeWeight.
LyndonBasis lyndon_basis(const GradedVectorSpace& alphabet, std::size_t weight_bound);

// Dimension of the primitive elements of T(V) in one weight, from the kernel
// of the reduced coshuffle coproduct.
std::size_t primitive_dimension(const GradedVectorSpace& alphabet, std::size_t weight);

// Weakly increasing basis indices, odd elements at most once. Indexes both the
// PBW basis of U(Lie(V)) and the basis of S(Lie(V)).
using Monomial = std::vector<std::size_t>;
using MonomialCombination = std::map<Monomial, Rational>;
using MonomialTensor = std::map<std::pair<Monomial, Monomial>, Rational>;

// U(Lie(V)) in the PBW basis, with Phi: T(V) -> U and Psi: S(Lie(V)) -> U.
class FreeEnvelope {
 public:
  FreeEnvelope() = default;
  explicit FreeEnvelope(LyndonBasis basis);

  const LyndonBasis& basis() const { return basis_; }
  std::size_t weight_bound() const { return basis_.weight_bound(); }
  std::size_t weight(const Monomial& m) const;
  int degree(const Monomial& m) const;
  const std::vector<Monomial>& monomials(std::size_t weight) const { return monomials_.at(weight); }
  // Monomials of weights 1..bound in order.
  std::vector<Monomial> all_monomials() const;

  // Sign and canonical monomial of x_{i_1} . ... . x_{i_m} in S(Lie(V));
  // sign 0 when an odd element repeats.
  std::pair<int, Monomial> normalize(const std::vector<std::size_t>& ids) const;

  // Product of the tensor images, i.e. the PBW monomial seen in T(V).
  WordCombination monomial_tensor(const Monomial& m) const;
  MonomialCombination phi(const WordCombination& x) const;
  WordCombination phi_inverse(const MonomialCombination& u) const;
  MonomialCombination psi(const MonomialCombination& s) const;
  MonomialCombination psi_inverse(const MonomialCombination& u) const;

  MonomialCombination product(const MonomialCombination& a, const MonomialCombination& b) const;
  // Delta(y_1 * .. * y_m) = prod (y_i (x) 1 + 1 (x) y_i), expanded on subsequences.
  MonomialTensor coproduct(const Monomial& m) const;

 private:
  LyndonBasis basis_;
  std::vector<std::vector<Monomial>> monomials_;
  std::vector<std::map<Monomial, std::size_t>> position_;
  std::vector<Matrix> pbw_;       // tensor coordinates <- PBW coordinates
  std::vector<Matrix> pbw_inv_;
  std::vector<Matrix> psi_;       // PBW coordinates <- symmetric coordinates
  std::vector<Matrix> psi_inv_;
};

// The transferred L_infty structure on Lie(lambda) truncated to weight <= W.
struct KsTransfer {
  GradedFamily theta;
  FreeEnvelope envelope;
  GradedFamily brackets;         // inputs of total weight <= W and arity <= A
  std::vector<Monomial> sym_basis;  // S-bar(Lie(lambda)) in weights 1..W
  Matrix codifferential;         // Psi^{-1} Phi d Phi^{-1} Psi on sym_basis
  std::vector<std::size_t> weights() const { return envelope.basis().weights(); }
};

// bounds.weight is W, bounds.arity is A. Rejects an invalid Leibniz_infty
// algebra with InvalidInputData.
KsTransfer ks_transfer(const GradedFamily& theta, const TruncationBounds& bounds);

// Coderivation of S-bar(L) generated by the brackets, on the given basis.
Matrix linf_codifferential(const FreeEnvelope& env, const GradedFamily& brackets,
                           const std::vector<Monomial>& sym_basis);

// Degree-0 components f_k: lambda^{(x)k} -> lambda'.
struct LeibnizInfMorphism {
  GradedVectorSpace source;
  GradedVectorSpace target;
  std::map<std::size_t, MultilinearMap> f;
};

LeibnizInfMorphism strict_morphism(const GradedVectorSpace& source, const GradedVectorSpace& target,
                                   const Matrix& f1);
LeibnizInfMorphism identity_morphism(const GradedVectorSpace& space);
// The coalgebra map F on a word.
WordCombination bar_morphism(const LeibnizInfMorphism& f, const Tuple& w);
WordCombination bar_morphism(const LeibnizInfMorphism& f, const WordCombination& x);
// d' F = F d on all words of length <= bounds.weight.
GradedReport check_leibniz_inf_morphism(const GradedFamily& source, const GradedFamily& target,
                                        const LeibnizInfMorphism& f, const TruncationBounds& bounds);
// Components of G o F through arity max_arity.
LeibnizInfMorphism compose(const LeibnizInfMorphism& g, const LeibnizInfMorphism& f, std::size_t max_arity);

struct KsMorphism {
  std::map<std::size_t, MultilinearMap> components;  // S^k(L) -> L', arity <= A
  Matrix matrix;  // Psi'^{-1} Phi' F Phi^{-1} Psi from source.sym_basis to target.sym_basis
};

// NotAHomomorphism unless f passes check_leibniz_inf_morphism.
KsMorphism ks_morphism(const KsTransfer& source, const KsTransfer& target, const LeibnizInfMorphism& f,
                       const TruncationBounds& bounds);

}  // namespace leibten

#endif
