#ifndef LEIBTEN_DEFORMEXT_HPP
#define LEIBTEN_DEFORMEXT_HPP

#include <optional>

#include "leibten/cohomology.hpp"

namespace leibten {

// (omega, varrho, calT) with omega: wedge^2 g -> g, varrho: g x V -> V, calT: V -> g.
struct DeformationDatum {
  MultilinearMap omega;  // domain (dg, dg), codomain dg; must be antisymmetric
  MultilinearMap varrho;  // domain (dg, dv), codomain dv
  Matrix calT;            // dg x dv
};

DeformationDatum zero_deformation(const LieLeibnizTriple& t);
// REG(2) coordinates and back.
Vector flatten_deformation(const LieLeibnizTriple& t, const DeformationDatum& d);
DeformationDatum unflatten_deformation(const LieLeibnizTriple& t, const Vector& c);

// First-order deformation equations evaluated on basis elements.
bool deformation_equations_hold(const LieLeibnizTriple& t, const DeformationDatum& d);
// D(d) = 0; the brute-force equations are evaluated too and must agree.
bool is_deformation(const LieLeibnizTriple& t, const DeformationDatum& d);

// (Id + tN + t ad_x, Id + tS + t rho(x)) from the d2-deformation to the d1-deformation.
struct EquivalenceWitness {
  Matrix N;  // dg x dg
  Matrix S;  // dv x dv
  Vector x;  // dg
};
Vector flatten_witness(const LieLeibnizTriple& t, const EquivalenceWitness& w);
EquivalenceWitness unflatten_witness(const LieLeibnizTriple& t, const Vector& c);

// Solves d2 - d1 = D(N,S,x); NotACocycle if either datum is not a deformation.
std::optional<EquivalenceWitness> deformations_equivalent(const LieLeibnizTriple& t, const DeformationDatum& d1,
                                                          const DeformationDatum& d2);
// [d1] == [d2] in H^2_reg, decided by reduction modulo the coboundaries.
bool same_reg_class(const LieLeibnizTriple& t, const DeformationDatum& d1, const DeformationDatum& d2);
// Checks the three first-order homomorphism equations for a witness directly.
bool check_equivalence_witness(const LieLeibnizTriple& t, const DeformationDatum& d1, const DeformationDatum& d2,
                               const EquivalenceWitness& w);

// (omega, varpi, calT) with values in an abelian target W -frak_t-> h.
struct ExtensionCocycle {
  MultilinearMap omega;  // (dg, dg) -> dh, antisymmetric
  MultilinearMap varpi;  // (dg, dv) -> dw
  Matrix calT;           // dh x dv
};

ExtensionCocycle zero_extension_cocycle(const LieLeibnizTriple& t, const Matrix& frak_t);
// COEFF(2) coordinates for the trivial representation on frak_t, and back.
Vector flatten_extension(const LieLeibnizTriple& t, const Matrix& frak_t, const ExtensionCocycle& c);
ExtensionCocycle unflatten_extension(const LieLeibnizTriple& t, const Matrix& frak_t, const Vector& v);

// A central extension W -> hatV -> V over h -> hatg -> g.
struct CentralExtension {
  LieLeibnizTriple triple;
  Matrix incl_h;  // frak_i: h -> hatg
  Matrix incl_w;  // i: W -> hatV
  Matrix proj_g;  // frak_p: hatg -> g
  Matrix proj_v;  // p: hatV -> V
};

struct Section {
  Matrix frak_s;  // g -> hatg
  Matrix s;       // V -> hatV
};

// g (+) h and V (+) W with the cocycle added; NotACocycle unless D_R c = 0.
CentralExtension build_central_extension(const LieLeibnizTriple& t, const Matrix& frak_t, const ExtensionCocycle& c);
// The section x -> x, u -> u of a built extension.
Section canonical_section(const CentralExtension& e, std::size_t dg, std::size_t dv);
// NotCentral, NotASection, InvalidInputData if the maps do not form an extension.
ExtensionCocycle extract_cocycle(const LieLeibnizTriple& t, const CentralExtension& e, const Section& sec);

// For c' = c + D_R(N,S,0): (Id + frak_i N frak_p, Id + i S p) from ext(c') to ext(c).
TripleHomomorphism extension_isomorphism(const CentralExtension& target, const Matrix& N, const Matrix& S);
// Homomorphism identities plus compatibility with inclusions and projections.
bool verify_extension_isomorphism(const CentralExtension& source, const CentralExtension& target,
                                  const TripleHomomorphism& h);

}  // namespace leibten

#endif
