#ifndef LEIBTEN_EXAMPLES_HPP
#define LEIBTEN_EXAMPLES_HPP

#include <array>
#include <cstddef>

#include "leibten/cochains.hpp"
#include "leibten/structures.hpp"

namespace leibten {

// Structure constants [e_i,e_j] = sum_k c_ijk e_k given by a callback-free
// list of (i, j, k, c) with i < j; antisymmetry is filled in.
struct BracketEntry {
  std::size_t i, j, k;
  Rational c;
};
LieAlgebra lie_from_entries(std::size_t dim, const std::vector<BracketEntry>& entries);
LeibnizAlgebra leibniz_from_entries(std::size_t dim, const std::vector<BracketEntry>& entries);

LieAlgebra heisenberg();
// gl(n), E_rc at index r*n + c.
LieAlgebra gl(std::size_t n);
// Natural representation of gl(n) on Q^n.
Representation gl_natural(std::size_t n);

// Heisenberg with the adjoint action and T e_j = sum_i r[i][j] e_i. Not validated.
LieLeibnizTriple heisenberg_triple(const std::array<std::array<Rational, 3>, 3>& r);
// Validating variant.
LieLeibnizTriple heisenberg_family(const std::array<std::array<Rational, 3>, 3>& r);
// The closed-form classification of embedding tensors on the Heisenberg algebra.
bool heisenberg_condition(const std::array<std::array<Rational, 3>, 3>& r);

// so(8) on (wedge^2 Q^8) + dual with T(e_i ^ e_j) = E_ij, T(dual) = 0.
// so(8) basis E_ij (i<j) in lexicographic order; V has the 28 wedge pairs
// first, then the 28 dual pairs.
LieLeibnizTriple so8_56();
// Index of the pair (i<j) among lexicographic pairs of [0,n).
std::size_t pair_index(std::size_t i, std::size_t j, std::size_t n);

LieLeibnizTriple adjoint_coadjoint(const LieAlgebra& g);
LieLeibnizTriple differential_lie(const LieAlgebra& g, const Matrix& d);

// End(W -> h) with its basis of kernel vectors in gl(h) (+) gl(W) coordinates
// (gl(h) first, E_rc at r*dim + c). V = Hom(h, W) with Phi_{wr} at w*dim_h + r.
struct EndomorphismTriple {
  LieLeibnizTriple triple;
  std::vector<Vector> basis;  // coordinates of the g basis in gl(h) (+) gl(W)
  std::size_t dim_h = 0;
  std::size_t dim_w = 0;
};
EndomorphismTriple endomorphism_triple(const Matrix& frak_t);
// The defining representation of End(W -> h) on W -> h: phi_h(A) = A0,
// phi_W(A) = A1, varphi(Phi) = Phi.
TwoTermRep endomorphism_rep(const EndomorphismTriple& e, const Matrix& frak_t);

// g0 acting on g1, d: g1 -> g0.
LieLeibnizTriple strict_lie2(const LieAlgebra& g0, const Representation& rho, const Matrix& d);
// Crossed module (g0, g1, d, rho); checks the crossed-module axioms.
LieLeibnizTriple crossed_module(const LieAlgebra& g0, const LieAlgebra& g1, const Matrix& d,
                                const Representation& rho);
// Checks T(rho(x)v) = [x, Tv] before building.
LieLeibnizTriple equivariant_map(const LieRepPair& pair, const Matrix& T);

struct AnnihilatorQuotient {
  LieLeibnizTriple triple;   // (lambda / ann, lambda, pi)
  std::vector<Vector> ideal;  // reduced-echelon basis of the annihilator ideal
};
AnnihilatorQuotient annihilator_projection(const LeibnizAlgebra& l);
LieLeibnizTriple left_mult(const LeibnizAlgebra& l);
// P: gl(V) (+) V -> gl(V) with gl(V) acting naturally.
LieLeibnizTriple omni(std::size_t dim_v);
// Two-dimensional Leibniz algebra with [a,a] = b.
LeibnizAlgebra leibniz_aa_b();

// Heisenberg with ideal span{e2,e3} acting by ad, d the inclusion.
LieLeibnizTriple crossed_module_heisenberg();
// Heisenberg with the square-zero derivation e2 -> e3.
LieLeibnizTriple differential_lie_heisenberg();

}  // namespace leibten

#endif
