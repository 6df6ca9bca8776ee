#ifndef LEIBTEN_COCHAINS_HPP
#define LEIBTEN_COCHAINS_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <utility>

#include "leibten/structures.hpp"

namespace leibten {

// Coefficients (W -T-> h, phi_h, phi_W, varphi) for a triple.
struct TwoTermRep {
  std::size_t dim_h = 0;
  std::size_t dim_w = 0;
  Matrix frak_t;               // dim_h x dim_w
  std::vector<Matrix> phi_h;   // one dim_h x dim_h matrix per basis of g
  std::vector<Matrix> phi_w;   // one dim_w x dim_w matrix per basis of g
  std::vector<Matrix> varphi;  // one dim_w x dim_h matrix per basis of V
};

// h = g, W = V, frak_t = T, phi_h = ad, phi_W = rho, varphi(u)a = -rho(a)u.
TwoTermRep regular_coefficients(const LieLeibnizTriple& t);
// phi = 0, varphi = 0.
TwoTermRep trivial_coefficients(const LieLeibnizTriple& t, const Matrix& frak_t);

ValidationReport validate_rep(const LieLeibnizTriple& t, const TwoTermRep& r);

// ((g + h, [.,.]_phi_h), (V + W, rho + phi_W + varphi), T + frak_t), g and V first.
LieLeibnizTriple semidirect(const LieLeibnizTriple& t, const TwoTermRep& r);

// Flattened cochain coordinates.
//   ET(n)   = Hom(V^{n-1}, h): tensor_index(tuple) * dh + out.
//   PAIR(n) = Hom(wedge^n g, h) then Hom(wedge^{n-1} g (x) V, W):
//             wedge_rank * dh + out, then mixed_rank * dw + out.
// Degree 0 spaces are zero.
std::size_t et_dim(std::size_t dv, std::size_t dh, std::size_t n);
std::size_t pair_dim(std::size_t dg, std::size_t dv, std::size_t dh, std::size_t dw, std::size_t n);
std::size_t pair_wedge_dim(std::size_t dg, std::size_t dh, std::size_t n);
// Lexicographic rank of a strictly increasing tuple among n-subsets of [0,dim).
std::size_t wedge_rank(const Tuple& t, std::size_t dim);
// Sorts a tuple of distinct indices; returns the permutation sign, or 0 on a repeat.
int sort_with_sign(Tuple& t);

// Conversions between coordinates and full multilinear tables (alternating
// slots expanded by sign).
MultilinearMap et_to_map(const Vector& c, std::size_t dv, std::size_t dh, std::size_t n);
Vector map_to_et(const MultilinearMap& m, std::size_t n);
struct PairCochain {
  MultilinearMap fg;  // g^n -> h
  MultilinearMap fv;  // g^{n-1} x V -> W
};
PairCochain pair_to_maps(const Vector& c, std::size_t dg, std::size_t dv, std::size_t dh, std::size_t dw,
                         std::size_t n);
Vector maps_to_pair(const PairCochain& f, std::size_t dg, std::size_t dv, std::size_t dh, std::size_t dw,
                    std::size_t n);

// Receives matrix entries (row, col, value); repeated positions add up.
using EntrySink = std::function<void(std::size_t, std::size_t, const Rational&)>;

// Loday-Pirashvili coboundary Hom(L^k, M) -> Hom(L^{k+1}, M) of a Leibniz
// algebra with coefficients (M; rho_L, rho_R).
struct LeibnizModule {
  MultilinearMap bracket;         // L x L -> L
  std::vector<Matrix> rho_left;   // per basis of L, dim_m x dim_m
  std::vector<Matrix> rho_right;  // per basis of L, dim_m x dim_m
  std::size_t dim_l() const { return bracket.codomain(); }
  std::size_t dim_m() const { return rho_left.empty() ? 0 : rho_left.front().rows(); }
};
void emit_lp_coboundary(const LeibnizModule& mod, std::size_t k, const EntrySink& sink);

// (V, [.,.]_T) with coefficients in g: rho_L(u) = ad_{Tu}, rho_R(u)x = [x,Tu] - T(rho(x)u).
LeibnizModule et_module(const LieLeibnizTriple& t);
// (V, [.,.]_T) with coefficients in h: rho_L(u) = phi_h(Tu), rho_R(u) = -phi_h(Tu) + frak_t varphi(u).
LeibnizModule coeff_module(const LieLeibnizTriple& t, const TwoTermRep& r);
// Regular representation of (V, [.,.]_T): rho_L(u)w = [u,w]_T, rho_R(u)w = [w,u]_T.
LeibnizModule regular_module(const LieLeibnizTriple& t);

// delta on PAIR(n) -> PAIR(n+1) and Omega on PAIR(n) -> ET(n+1) with coefficients.
void emit_pair_coboundary(const LieAlgebra& g, const Representation& rho, const TwoTermRep& r, std::size_t n,
                          const EntrySink& sink);
void emit_omega(const LieLeibnizTriple& t, const TwoTermRep& r, std::size_t n, const EntrySink& sink);

// Dense assembly and matrix-free application of an emitter.
Matrix assemble(std::size_t rows, std::size_t cols, const std::function<void(const EntrySink&)>& emitter);
Vector apply_emitter(std::size_t rows, const Vector& x, const std::function<void(const EntrySink&)>& emitter);

// Cap on cochain-space dimension (LEIBTEN_MAX_CELLS, default 200000).
std::size_t max_cochain_dim();
// Throws SizeLimit when a cochain space or a dense matrix is too large.
void guard_cochain_dim(std::size_t dim, const char* what);
void guard_dense(std::size_t rows, std::size_t cols, const char* what);

}  // namespace leibten

#endif
