#ifndef LEIBTEN_STRUCTURES_HPP
#define LEIBTEN_STRUCTURES_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "leibten/matrix.hpp"
#include "leibten/multilinear.hpp"

namespace leibten {

Vector basis_vector(std::size_t n, std::size_t i);

// Lie algebra given by its bracket g x g -> g.
struct LieAlgebra {
  MultilinearMap bracket;

  LieAlgebra() = default;
  explicit LieAlgebra(MultilinearMap b);
  static LieAlgebra abelian(std::size_t dim);

  std::size_t dim() const { return bracket.codomain(); }
  Vector operator()(const Vector& x, const Vector& y) const { return bracket.evaluate({x, y}); }
  // ad_x as a matrix.
  Matrix ad(const Vector& x) const;
};

// rho: g -> gl(V), one matrix per basis element of g.
class Representation {
 public:
  Representation() = default;
  Representation(std::size_t dim_g, std::size_t dim_v);
  explicit Representation(std::vector<Matrix> matrices, std::size_t dim_v);
  static Representation from_map(const MultilinearMap& rho);
  static Representation adjoint(const LieAlgebra& g);

  std::size_t dim_g() const { return map_.domain().empty() ? 0 : map_.domain()[0]; }
  std::size_t dim_v() const { return map_.codomain(); }
  const std::vector<Matrix>& matrices() const { return matrices_; }
  const MultilinearMap& as_map() const { return map_; }

  Matrix operator()(const Vector& x) const;
  Vector act(const Vector& x, const Vector& v) const { return map_.evaluate({x, v}); }

  friend bool operator==(const Representation& a, const Representation& b) { return a.map_ == b.map_; }

 private:
  std::vector<Matrix> matrices_;
  MultilinearMap map_;
};

struct LieRepPair {
  LieAlgebra g;
  Representation rho;
};

struct LeibnizAlgebra {
  MultilinearMap bracket;

  LeibnizAlgebra() = default;
  explicit LeibnizAlgebra(MultilinearMap b) : bracket(std::move(b)) {}
  std::size_t dim() const { return bracket.codomain(); }
  Vector operator()(const Vector& x, const Vector& y) const { return bracket.evaluate({x, y}); }
  // L_x as a matrix.
  Matrix left(const Vector& x) const;
};

// T: V -> g stored as a dim_g x dim_v matrix; column v is T(e_v).
struct LieLeibnizTriple {
  LieAlgebra g;
  Representation rho;
  Matrix T;

  std::size_t dim_g() const { return g.dim(); }
  std::size_t dim_v() const { return rho.dim_v(); }
  LieRepPair pair() const { return {g, rho}; }
  SumLayout layout() const { return {dim_g(), dim_v()}; }
  Vector apply_T(const Vector& v) const { return T.apply(v); }
  MultilinearMap T_map() const;  // V -> g
};

struct Witness {
  std::string identity;
  std::vector<std::size_t> tuple;  // 0-based basis indices
  Vector lhs;
  Vector rhs;
};

struct ValidationReport {
  bool ok = true;
  std::vector<Witness> witnesses;
  void fail(Witness w) {
    ok = false;
    witnesses.push_back(std::move(w));
  }
  void merge(const ValidationReport& other) {
    for (const auto& w : other.witnesses) fail(w);
  }
};

ValidationReport validate(const LieAlgebra& g);
ValidationReport validate(const LieAlgebra& g, const Representation& rho);
ValidationReport validate(const LeibnizAlgebra& l);
ValidationReport validate_embedding_tensor(const LieAlgebra& g, const Representation& rho, const Matrix& T);
ValidationReport validate(const LieLeibnizTriple& t);

bool is_embedding_tensor(const LieAlgebra& g, const Representation& rho, const Matrix& T);

// Builds a triple and throws Error(InvalidInputData) if it does not validate.
LieLeibnizTriple make_triple(LieAlgebra g, Representation rho, Matrix T);

// (phi, varphi) from `source` (g', V', T') to `target` (g, V, T).
struct TripleHomomorphism {
  Matrix phi;     // dim_g x dim_g'
  Matrix varphi;  // dim_v x dim_v'
};

ValidationReport validate_homomorphism(const LieLeibnizTriple& source, const LieLeibnizTriple& target,
                                       const TripleHomomorphism& h);

// [u,v]_T = rho(Tu)v.
LeibnizAlgebra induced_leibniz(const LieLeibnizTriple& t);

// Derived bracket on Hom(V^m, g) x Hom(V^n, g); both routes are computed
// and compared, a mismatch throws std::logic_error.
MultilinearMap derived_bracket(const LieRepPair& pair, const MultilinearMap& theta, const MultilinearMap& phi);
MultilinearMap derived_bracket_balavoine(const LieRepPair& pair, const MultilinearMap& theta,
                                         const MultilinearMap& phi);
MultilinearMap derived_bracket_explicit(const LieRepPair& pair, const MultilinearMap& theta,
                                        const MultilinearMap& phi);

// Phi(f)(u_1..u_{k+1}) = -rho(f(u_1..u_k)) u_{k+1}.
MultilinearMap phi_rep_map(const LieRepPair& pair, const MultilinearMap& f);

// gl(V) (+) V with [A+u, B+v] = [A,B] + Av and (A+u, B+v)_+ = Av + Bu.
// gl(V) coordinates: E_rc at index r*dim_v + c.
struct OmniLie {
  std::size_t dim_v = 0;

  std::size_t dim() const { return dim_v * dim_v + dim_v; }
  Vector bracket(const Vector& a, const Vector& b) const;
  Vector pairing(const Vector& a, const Vector& b) const;
  LeibnizAlgebra as_leibniz() const;
};

// T: V -> gl(V) given as a dim_v^2 x dim_v matrix. True iff the graph
// {Tu + u} is closed under the omni-Lie bracket.
bool graph_integrable(const Matrix& T);

}  // namespace leibten

#endif
