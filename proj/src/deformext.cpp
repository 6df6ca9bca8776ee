#include "leibten/deformext.hpp"

#include <stdexcept>

#include "leibten/error.hpp"

namespace leibten {

namespace {

void check_antisymmetric(const MultilinearMap& m, const char* what) {
  for (const auto& [key, c] : m.table()) {
    if (key[0] == key[1] || m.coeff({key[1], key[0]}, key[2]) != -c) {
      throw Error(ErrorCode::InvalidInputData, std::string(what) + " is not antisymmetric");
    }
  }
}

void check_shape(const MultilinearMap& m, std::size_t a, std::size_t b, std::size_t out, const char* what) {
  if (m.arity() != 2 || m.domain()[0] != a || m.domain()[1] != b || m.codomain() != out) {
    throw Error(ErrorCode::DimensionMismatch, std::string(what) + " has the wrong shape");
  }
}

void check_shape(const Matrix& m, std::size_t rows, std::size_t cols, const char* what) {
  if (m.rows() != rows || m.cols() != cols) {
    throw Error(ErrorCode::DimensionMismatch, std::string(what) + " has the wrong shape");
  }
}

Index ix(std::size_t i) { return static_cast<Index>(i); }

// m(x, .) as a matrix on the second slot.
Matrix second_slot(const MultilinearMap& m, const Vector& x) {
  const std::size_t n = m.domain()[1], out = m.codomain();
  Matrix r(out, n);
  for (std::size_t v = 0; v < n; ++v) r.set_column(v, m.evaluate({x, basis_vector(n, v)}));
  return r;
}

Vector sub(Vector a, const Vector& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

Vector add(Vector a, const Vector& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

Vector solve_in_image(const Matrix& incl, const Vector& v, const char* what) {
  const auto sol = solve(incl, v);
  if (!sol) throw Error(ErrorCode::InvalidInputData, std::string(what) + " does not lie in the kernel of the projection");
  return *sol;
}

}  // namespace

DeformationDatum zero_deformation(const LieLeibnizTriple& t) {
  const std::size_t dg = t.dim_g(), dv = t.dim_v();
  return {MultilinearMap({dg, dg}, dg), MultilinearMap({dg, dv}, dv), Matrix(dg, dv)};
}

Vector flatten_deformation(const LieLeibnizTriple& t, const DeformationDatum& d) {
  const std::size_t dg = t.dim_g(), dv = t.dim_v();
  check_shape(d.omega, dg, dg, dg, "omega");
  check_shape(d.varrho, dg, dv, dv, "varrho");
  check_shape(d.calT, dg, dv, "calT");
  check_antisymmetric(d.omega, "omega");
  const std::size_t p2 = pair_dim(dg, dv, dg, dv, 2), off = pair_wedge_dim(dg, dg, 2);
  Vector c = zero_vector(p2 + et_dim(dv, dg, 2));
  for (std::size_t i = 0; i < dg; ++i)
    for (std::size_t j = i + 1; j < dg; ++j)
      for (std::size_t o = 0; o < dg; ++o) c[wedge_rank({ix(i), ix(j)}, dg) * dg + o] = d.omega.coeff({ix(i), ix(j)}, o);
  for (std::size_t i = 0; i < dg; ++i)
    for (std::size_t v = 0; v < dv; ++v)
      for (std::size_t w = 0; w < dv; ++w) c[off + (i * dv + v) * dv + w] = d.varrho.coeff({ix(i), ix(v)}, w);
  for (std::size_t v = 0; v < dv; ++v)
    for (std::size_t o = 0; o < dg; ++o) c[p2 + v * dg + o] = d.calT(o, v);
  return c;
}

DeformationDatum unflatten_deformation(const LieLeibnizTriple& t, const Vector& c) {
  const std::size_t dg = t.dim_g(), dv = t.dim_v();
  const std::size_t p2 = pair_dim(dg, dv, dg, dv, 2), off = pair_wedge_dim(dg, dg, 2);
  if (c.size() != p2 + et_dim(dv, dg, 2)) throw Error(ErrorCode::DimensionMismatch, "deformation coordinates");
  DeformationDatum d = zero_deformation(t);
  for (std::size_t i = 0; i < dg; ++i)
    for (std::size_t j = i + 1; j < dg; ++j)
      for (std::size_t o = 0; o < dg; ++o) {
        const Rational& x = c[wedge_rank({ix(i), ix(j)}, dg) * dg + o];
        d.omega.add({ix(i), ix(j)}, o, x);
        d.omega.add({ix(j), ix(i)}, o, -x);
      }
  for (std::size_t i = 0; i < dg; ++i)
    for (std::size_t v = 0; v < dv; ++v)
      for (std::size_t w = 0; w < dv; ++w) d.varrho.add({ix(i), ix(v)}, w, c[off + (i * dv + v) * dv + w]);
  for (std::size_t v = 0; v < dv; ++v)
    for (std::size_t o = 0; o < dg; ++o) d.calT(o, v) = c[p2 + v * dg + o];
  return d;
}

bool deformation_equations_hold(const LieLeibnizTriple& t, const DeformationDatum& d) {
  const std::size_t dg = t.dim_g(), dv = t.dim_v();
  auto br = [&](const Vector& x, const Vector& y) { return t.g(x, y); };
  auto om = [&](const Vector& x, const Vector& y) { return d.omega.evaluate({x, y}); };
  // First-order part of the Jacobi identity of [.,.] + t omega.
  for (std::size_t a = 0; a < dg; ++a)
    for (std::size_t b = a + 1; b < dg; ++b)
      for (std::size_t c = b + 1; c < dg; ++c) {
        const Vector x = basis_vector(dg, a), y = basis_vector(dg, b), z = basis_vector(dg, c);
        Vector j = zero_vector(dg);
        const Vector* cyc[3][3] = {{&x, &y, &z}, {&y, &z, &x}, {&z, &x, &y}};
        for (auto& p : cyc) {
          j = add(j, br(*p[0], om(*p[1], *p[2])));
          j = add(j, om(*p[0], br(*p[1], *p[2])));
        }
        if (!is_zero(j)) return false;
      }
  for (std::size_t a = 0; a < dg; ++a)
    for (std::size_t b = 0; b < dg; ++b) {
      const Vector x = basis_vector(dg, a), y = basis_vector(dg, b);
      const Matrix lhs = t.rho(om(x, y)) + second_slot(d.varrho, br(x, y));
      const Matrix rhs =
          commutator(t.rho(x), second_slot(d.varrho, y)) + commutator(second_slot(d.varrho, x), t.rho(y));
      if (lhs != rhs) return false;
    }
  for (std::size_t a = 0; a < dv; ++a)
    for (std::size_t b = 0; b < dv; ++b) {
      const Vector u = basis_vector(dv, a), v = basis_vector(dv, b);
      const Vector tu = t.apply_T(u), tv = t.apply_T(v), cu = d.calT.apply(u), cv = d.calT.apply(v);
      const Vector lhs = add(add(br(cu, tv), br(tu, cv)), om(tu, tv));
      const Vector inner = add(t.rho.act(cu, v), d.varrho.evaluate({tu, v}));
      const Vector rhs = add(t.apply_T(inner), d.calT.apply(t.rho.act(tu, v)));
      if (lhs != rhs) return false;
    }
  return true;
}

bool is_deformation(const LieLeibnizTriple& t, const DeformationDatum& d) {
  const bool matrix_route = is_zero(reg_complex(t).apply(2, flatten_deformation(t, d)));
  if (matrix_route != deformation_equations_hold(t, d)) {
    throw std::logic_error("cocycle condition and deformation equations disagree");
  }
  return matrix_route;
}

Vector flatten_witness(const LieLeibnizTriple& t, const EquivalenceWitness& w) {
  const std::size_t dg = t.dim_g(), dv = t.dim_v();
  check_shape(w.N, dg, dg, "N");
  check_shape(w.S, dv, dv, "S");
  if (w.x.size() != dg) throw Error(ErrorCode::DimensionMismatch, "x has the wrong length");
  Vector c = zero_vector(dg * dg + dv * dv + dg);
  for (std::size_t a = 0; a < dg; ++a)
    for (std::size_t o = 0; o < dg; ++o) c[a * dg + o] = w.N(o, a);
  for (std::size_t v = 0; v < dv; ++v)
    for (std::size_t u = 0; u < dv; ++u) c[dg * dg + v * dv + u] = w.S(u, v);
  for (std::size_t o = 0; o < dg; ++o) c[dg * dg + dv * dv + o] = w.x[o];
  return c;
}

EquivalenceWitness unflatten_witness(const LieLeibnizTriple& t, const Vector& c) {
  const std::size_t dg = t.dim_g(), dv = t.dim_v();
  if (c.size() != dg * dg + dv * dv + dg) throw Error(ErrorCode::DimensionMismatch, "witness coordinates");
  EquivalenceWitness w{Matrix(dg, dg), Matrix(dv, dv), zero_vector(dg)};
  for (std::size_t a = 0; a < dg; ++a)
    for (std::size_t o = 0; o < dg; ++o) w.N(o, a) = c[a * dg + o];
  for (std::size_t v = 0; v < dv; ++v)
    for (std::size_t u = 0; u < dv; ++u) w.S(u, v) = c[dg * dg + v * dv + u];
  for (std::size_t o = 0; o < dg; ++o) w.x[o] = c[dg * dg + dv * dv + o];
  return w;
}

std::optional<EquivalenceWitness> deformations_equivalent(const LieLeibnizTriple& t, const DeformationDatum& d1,
                                                          const DeformationDatum& d2) {
  if (!is_deformation(t, d1)) throw Error(ErrorCode::NotACocycle, "the first datum is not a deformation");
  if (!is_deformation(t, d2)) throw Error(ErrorCode::NotACocycle, "the second datum is not a deformation");
  const Vector diff = sub(flatten_deformation(t, d2), flatten_deformation(t, d1));
  const auto sol = solve(reg_complex(t).d(1), diff);
  if (!sol) return std::nullopt;
  EquivalenceWitness w = unflatten_witness(t, *sol);
  if (!check_equivalence_witness(t, d1, d2, w)) throw std::logic_error("solved witness fails the equivalence equations");
  return w;
}

bool same_reg_class(const LieLeibnizTriple& t, const DeformationDatum& d1, const DeformationDatum& d2) {
  const Vector diff = sub(flatten_deformation(t, d2), flatten_deformation(t, d1));
  const RowEchelon img = reduced_echelon(reg_complex(t).d(1).transpose());
  return is_zero(reduce_modulo(diff, img));
}

bool check_equivalence_witness(const LieLeibnizTriple& t, const DeformationDatum& d1, const DeformationDatum& d2,
                               const EquivalenceWitness& w) {
  const std::size_t dg = t.dim_g(), dv = t.dim_v();
  // First-order parts of the homomorphism (Id + tM, Id + tS') with M = N + ad_x, S' = S + rho(x).
  const Matrix M = w.N + t.g.ad(w.x);
  const Matrix Sp = w.S + t.rho(w.x);
  for (std::size_t a = 0; a < dg; ++a)
    for (std::size_t b = 0; b < dg; ++b) {
      const Vector x = basis_vector(dg, a), y = basis_vector(dg, b);
      const Vector lhs = add(M.apply(t.g(x, y)), d2.omega.evaluate({x, y}));
      const Vector rhs = add(add(t.g(M.apply(x), y), t.g(x, M.apply(y))), d1.omega.evaluate({x, y}));
      if (lhs != rhs) return false;
    }
  for (std::size_t a = 0; a < dg; ++a) {
    const Vector y = basis_vector(dg, a);
    const Matrix lhs = Sp * t.rho(y) + second_slot(d2.varrho, y);
    const Matrix rhs = t.rho(M.apply(y)) + t.rho(y) * Sp + second_slot(d1.varrho, y);
    if (lhs != rhs) return false;
  }
  (void)dv;
  return M * t.T + d2.calT == d1.calT + t.T * Sp;
}

ExtensionCocycle zero_extension_cocycle(const LieLeibnizTriple& t, const Matrix& frak_t) {
  const std::size_t dg = t.dim_g(), dv = t.dim_v();
  return {MultilinearMap({dg, dg}, frak_t.rows()), MultilinearMap({dg, dv}, frak_t.cols()), Matrix(frak_t.rows(), dv)};
}

Vector flatten_extension(const LieLeibnizTriple& t, const Matrix& frak_t, const ExtensionCocycle& c) {
  const std::size_t dg = t.dim_g(), dv = t.dim_v(), dh = frak_t.rows(), dw = frak_t.cols();
  check_shape(c.omega, dg, dg, dh, "omega");
  check_shape(c.varpi, dg, dv, dw, "varpi");
  check_shape(c.calT, dh, dv, "calT");
  check_antisymmetric(c.omega, "omega");
  const std::size_t p2 = pair_dim(dg, dv, dh, dw, 2), off = pair_wedge_dim(dg, dh, 2);
  Vector v = zero_vector(p2 + et_dim(dv, dh, 2));
  for (std::size_t i = 0; i < dg; ++i)
    for (std::size_t j = i + 1; j < dg; ++j)
      for (std::size_t o = 0; o < dh; ++o) v[wedge_rank({ix(i), ix(j)}, dg) * dh + o] = c.omega.coeff({ix(i), ix(j)}, o);
  for (std::size_t i = 0; i < dg; ++i)
    for (std::size_t u = 0; u < dv; ++u)
      for (std::size_t w = 0; w < dw; ++w) v[off + (i * dv + u) * dw + w] = c.varpi.coeff({ix(i), ix(u)}, w);
  for (std::size_t u = 0; u < dv; ++u)
    for (std::size_t o = 0; o < dh; ++o) v[p2 + u * dh + o] = c.calT(o, u);
  return v;
}

ExtensionCocycle unflatten_extension(const LieLeibnizTriple& t, const Matrix& frak_t, const Vector& v) {
  const std::size_t dg = t.dim_g(), dv = t.dim_v(), dh = frak_t.rows(), dw = frak_t.cols();
  const std::size_t p2 = pair_dim(dg, dv, dh, dw, 2), off = pair_wedge_dim(dg, dh, 2);
  if (v.size() != p2 + et_dim(dv, dh, 2)) throw Error(ErrorCode::DimensionMismatch, "cocycle coordinates");
  ExtensionCocycle c = zero_extension_cocycle(t, frak_t);
  for (std::size_t i = 0; i < dg; ++i)
    for (std::size_t j = i + 1; j < dg; ++j)
      for (std::size_t o = 0; o < dh; ++o) {
        const Rational& x = v[wedge_rank({ix(i), ix(j)}, dg) * dh + o];
        c.omega.add({ix(i), ix(j)}, o, x);
        c.omega.add({ix(j), ix(i)}, o, -x);
      }
  for (std::size_t i = 0; i < dg; ++i)
    for (std::size_t u = 0; u < dv; ++u)
      for (std::size_t w = 0; w < dw; ++w) c.varpi.add({ix(i), ix(u)}, w, v[off + (i * dv + u) * dw + w]);
  for (std::size_t u = 0; u < dv; ++u)
    for (std::size_t o = 0; o < dh; ++o) c.calT(o, u) = v[p2 + u * dh + o];
  return c;
}

CentralExtension build_central_extension(const LieLeibnizTriple& t, const Matrix& frak_t, const ExtensionCocycle& c) {
  const std::size_t dg = t.dim_g(), dv = t.dim_v(), dh = frak_t.rows(), dw = frak_t.cols();
  const Vector flat = flatten_extension(t, frak_t, c);
  const CochainComplex cx = coeff_complex(t, trivial_coefficients(t, frak_t));
  if (!is_zero(cx.apply(2, flat))) throw Error(ErrorCode::NotACocycle, "extension data is not a 2-cocycle");
  const std::size_t ng = dg + dh, nv = dv + dw;

  MultilinearMap b = MultilinearMap::on_space(ng, 2);
  for (const auto& [key, x] : t.g.bracket.table()) b.add_key(key, x);
  for (const auto& [key, x] : c.omega.table()) b.add({key[0], key[1]}, dg + key[2], x);
  std::vector<Matrix> mats(ng, Matrix(nv, nv));
  for (std::size_t a = 0; a < dg; ++a) {
    mats[a].paste(t.rho.matrices()[a], 0, 0);
    for (std::size_t u = 0; u < dv; ++u)
      for (std::size_t w = 0; w < dw; ++w) mats[a](dv + w, u) = c.varpi.coeff({ix(a), ix(u)}, w);
  }
  Matrix T(ng, nv);
  T.paste(t.T, 0, 0);
  T.paste(c.calT, dg, 0);
  T.paste(frak_t, dg, dv);

  CentralExtension e;
  e.triple = make_triple(LieAlgebra(std::move(b)), Representation(std::move(mats), nv), std::move(T));
  e.incl_h = Matrix(ng, dh);
  e.incl_h.paste(Matrix::identity(dh), dg, 0);
  e.incl_w = Matrix(nv, dw);
  e.incl_w.paste(Matrix::identity(dw), dv, 0);
  e.proj_g = Matrix(dg, ng);
  e.proj_g.paste(Matrix::identity(dg), 0, 0);
  e.proj_v = Matrix(dv, nv);
  e.proj_v.paste(Matrix::identity(dv), 0, 0);
  return e;
}

Section canonical_section(const CentralExtension& e, std::size_t dg, std::size_t dv) {
  Section s{Matrix(e.triple.dim_g(), dg), Matrix(e.triple.dim_v(), dv)};
  s.frak_s.paste(Matrix::identity(dg), 0, 0);
  s.s.paste(Matrix::identity(dv), 0, 0);
  return s;
}

ExtensionCocycle extract_cocycle(const LieLeibnizTriple& t, const CentralExtension& e, const Section& sec) {
  const std::size_t dg = t.dim_g(), dv = t.dim_v();
  const std::size_t ng = e.triple.dim_g(), nv = e.triple.dim_v();
  const std::size_t dh = e.incl_h.cols(), dw = e.incl_w.cols();
  check_shape(e.incl_h, ng, dh, "inclusion of h");
  check_shape(e.incl_w, nv, dw, "inclusion of W");
  check_shape(e.proj_g, dg, ng, "projection to g");
  check_shape(e.proj_v, dv, nv, "projection to V");
  check_shape(sec.frak_s, ng, dg, "section of g");
  check_shape(sec.s, nv, dv, "section of V");
  if (e.proj_g * sec.frak_s != Matrix::identity(dg) || e.proj_v * sec.s != Matrix::identity(dv)) {
    throw Error(ErrorCode::NotASection, "the given maps are not a section of the projections");
  }
  const LieLeibnizTriple& h = e.triple;
  for (std::size_t a = 0; a < dh; ++a) {
    const Vector al = e.incl_h.column(a);
    for (std::size_t x = 0; x < ng; ++x)
      if (!is_zero(h.g(al, basis_vector(ng, x)))) throw Error(ErrorCode::NotCentral, "h is not central in the extension");
    for (std::size_t u = 0; u < nv; ++u)
      if (!is_zero(h.rho.act(al, basis_vector(nv, u)))) throw Error(ErrorCode::NotCentral, "h acts nontrivially");
  }
  for (std::size_t w = 0; w < dw; ++w) {
    const Vector xi = e.incl_w.column(w);
    for (std::size_t x = 0; x < ng; ++x)
      if (!is_zero(h.rho.act(basis_vector(ng, x), xi))) throw Error(ErrorCode::NotCentral, "W is not annihilated");
  }

  ExtensionCocycle c{MultilinearMap({dg, dg}, dh), MultilinearMap({dg, dv}, dw), Matrix(dh, dv)};
  for (std::size_t a = 0; a < dg; ++a)
    for (std::size_t b = 0; b < dg; ++b) {
      const Vector x = basis_vector(dg, a), y = basis_vector(dg, b);
      const Vector val = sub(h.g(sec.frak_s.apply(x), sec.frak_s.apply(y)), sec.frak_s.apply(t.g(x, y)));
      const Vector co = solve_in_image(e.incl_h, val, "omega");
      for (std::size_t o = 0; o < dh; ++o) c.omega.add({ix(a), ix(b)}, o, co[o]);
    }
  for (std::size_t a = 0; a < dg; ++a)
    for (std::size_t u = 0; u < dv; ++u) {
      const Vector x = basis_vector(dg, a), v = basis_vector(dv, u);
      const Vector val = sub(h.rho.act(sec.frak_s.apply(x), sec.s.apply(v)), sec.s.apply(t.rho.act(x, v)));
      const Vector co = solve_in_image(e.incl_w, val, "varpi");
      for (std::size_t w = 0; w < dw; ++w) c.varpi.add({ix(a), ix(u)}, w, co[w]);
    }
  for (std::size_t u = 0; u < dv; ++u) {
    const Vector v = basis_vector(dv, u);
    const Vector val = sub(h.apply_T(sec.s.apply(v)), sec.frak_s.apply(t.apply_T(v)));
    c.calT.set_column(u, solve_in_image(e.incl_h, val, "calT"));
  }
  return c;
}

TripleHomomorphism extension_isomorphism(const CentralExtension& target, const Matrix& N, const Matrix& S) {
  const std::size_t ng = target.triple.dim_g(), nv = target.triple.dim_v();
  return {Matrix::identity(ng) + target.incl_h * N * target.proj_g,
          Matrix::identity(nv) + target.incl_w * S * target.proj_v};
}

bool verify_extension_isomorphism(const CentralExtension& source, const CentralExtension& target,
                                  const TripleHomomorphism& h) {
  if (!validate_homomorphism(source.triple, target.triple, h).ok) return false;
  if (rank(h.phi) != h.phi.rows() || rank(h.varphi) != h.varphi.rows()) return false;
  return h.phi * source.incl_h == target.incl_h && target.proj_g * h.phi == source.proj_g &&
         h.varphi * source.incl_w == target.incl_w && target.proj_v * h.varphi == source.proj_v;
}

}  // namespace leibten
