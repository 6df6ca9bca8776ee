#include "leibten/cohomology.hpp"

#include <memory>
#include <stdexcept>
#include <string>

#include "leibten/error.hpp"

namespace leibten {

const char* complex_kind_name(ComplexKind kind) {
  switch (kind) {
    case ComplexKind::ET: return "ET";
    case ComplexKind::Pair: return "PAIR";
    case ComplexKind::Reg: return "REG";
    case ComplexKind::Coeff: return "COEFF";
  }
  return "?";
}

namespace {

void check_degree(std::size_t n) {
  if (n > kMaxDegree) {
    throw Error(ErrorCode::SizeLimit,
                "degree " + std::to_string(n) + " exceeds the maximum of " + std::to_string(kMaxDegree));
  }
}

std::vector<Vector> columns(const Matrix& m) {
  std::vector<Vector> out;
  out.reserve(m.cols());
  for (std::size_t c = 0; c < m.cols(); ++c) out.push_back(m.column(c));
  return out;
}

Matrix from_columns_or_empty(const std::vector<Vector>& cols, std::size_t rows) {
  if (cols.empty()) return Matrix(rows, 0);
  return Matrix::from_columns(cols, rows);
}

}  // namespace

Matrix CochainComplex::d(std::size_t n) const {
  check_degree(n);
  const std::size_t rows = dim(n + 1), cols = dim(n);
  guard_cochain_dim(rows, "target cochain space");
  guard_cochain_dim(cols, "source cochain space");
  return assemble(rows, cols, [&](const EntrySink& s) { emit(n, s); });
}

Vector CochainComplex::apply(std::size_t n, const Vector& x) const {
  check_degree(n);
  if (x.size() != dim(n)) throw Error(ErrorCode::DimensionMismatch, "cochain length");
  return apply_emitter(dim(n + 1), x, [&](const EntrySink& s) { emit(n, s); });
}

TwoTermRep pair_regular_coefficients(const LieRepPair& p) {
  const std::size_t dg = p.g.dim(), dv = p.rho.dim_v();
  TwoTermRep r;
  r.dim_h = dg;
  r.dim_w = dv;
  r.frak_t = Matrix(dg, dv);
  for (std::size_t a = 0; a < dg; ++a) {
    r.phi_h.push_back(p.g.ad(basis_vector(dg, a)));
    r.phi_w.push_back(p.rho.matrices()[a]);
  }
  for (std::size_t u = 0; u < dv; ++u) {
    Matrix m(dv, dg);
    for (std::size_t a = 0; a < dg; ++a)
      for (std::size_t w = 0; w < dv; ++w) m(w, a) = -p.rho.matrices()[a](w, u);
    r.varphi.push_back(std::move(m));
  }
  return r;
}

CochainComplex et_complex(const LieLeibnizTriple& t) {
  auto mod = std::make_shared<LeibnizModule>(et_module(t));
  const std::size_t dg = t.dim_g(), dv = t.dim_v();
  return {ComplexKind::ET, [=](std::size_t n) { return et_dim(dv, dg, n); },
          [mod](std::size_t n, const EntrySink& s) {
            if (n > 0) emit_lp_coboundary(*mod, n - 1, s);
          }};
}

CochainComplex pair_complex(const LieRepPair& p) {
  auto data = std::make_shared<std::pair<LieRepPair, TwoTermRep>>(p, pair_regular_coefficients(p));
  const std::size_t dg = p.g.dim(), dv = p.rho.dim_v();
  return {ComplexKind::Pair, [=](std::size_t n) { return pair_dim(dg, dv, dg, dv, n); },
          [data](std::size_t n, const EntrySink& s) {
            emit_pair_coboundary(data->first.g, data->first.rho, data->second, n, s);
          }};
}

namespace {

struct CoeffData {
  LieLeibnizTriple t;
  TwoTermRep r;
  LeibnizModule mod;
};

CochainComplex block_complex(ComplexKind kind, std::shared_ptr<const CoeffData> data) {
  const std::size_t dg = data->t.dim_g(), dv = data->t.dim_v(), dh = data->r.dim_h, dw = data->r.dim_w;
  auto dim = [=](std::size_t n) { return pair_dim(dg, dv, dh, dw, n) + et_dim(dv, dh, n); };
  auto emit = [=](std::size_t n, const EntrySink& s) {
    if (n == 0) return;
    const std::size_t pn = pair_dim(dg, dv, dh, dw, n), pn1 = pair_dim(dg, dv, dh, dw, n + 1);
    emit_pair_coboundary(data->t.g, data->t.rho, data->r, n, s);
    emit_omega(data->t, data->r, n, [&](std::size_t r, std::size_t c, const Rational& v) { s(pn1 + r, c, v); });
    emit_lp_coboundary(data->mod, n - 1,
                       [&](std::size_t r, std::size_t c, const Rational& v) { s(pn1 + r, pn + c, v); });
  };
  return {kind, dim, emit};
}

}  // namespace

CochainComplex reg_complex(const LieLeibnizTriple& t) {
  return block_complex(ComplexKind::Reg,
                       std::make_shared<const CoeffData>(CoeffData{t, regular_coefficients(t), et_module(t)}));
}

CochainComplex coeff_complex_unchecked(const LieLeibnizTriple& t, const TwoTermRep& r) {
  return block_complex(ComplexKind::Coeff, std::make_shared<const CoeffData>(CoeffData{t, r, coeff_module(t, r)}));
}

CochainComplex coeff_complex(const LieLeibnizTriple& t, const TwoTermRep& r) {
  const ValidationReport rep = validate_rep(t, r);
  if (!rep.ok) throw Error(ErrorCode::InvalidRepresentation, "invalid representation: " + rep.witnesses[0].identity);
  return coeff_complex_unchecked(t, r);
}

CochainComplexSlice coboundary_et(const LieLeibnizTriple& t, std::size_t n) {
  return {ComplexKind::ET, n, et_complex(t).d(n)};
}

CochainComplexSlice coboundary_pair(const LieRepPair& p, std::size_t n) {
  return {ComplexKind::Pair, n, pair_complex(p).d(n)};
}

CochainComplexSlice coboundary_reg(const LieLeibnizTriple& t, std::size_t n) {
  return {ComplexKind::Reg, n, reg_complex(t).d(n)};
}

CochainComplexSlice coboundary_coeff(const LieLeibnizTriple& t, const TwoTermRep& r, std::size_t n) {
  return {ComplexKind::Coeff, n, coeff_complex(t, r).d(n)};
}

Matrix omega_t(const LieLeibnizTriple& t, std::size_t n) {
  check_degree(n);
  const std::size_t dg = t.dim_g(), dv = t.dim_v();
  const std::size_t rows = et_dim(dv, dg, n + 1), cols = pair_dim(dg, dv, dg, dv, n);
  guard_cochain_dim(rows, "target cochain space");
  guard_cochain_dim(cols, "source cochain space");
  const TwoTermRep r = regular_coefficients(t);
  return assemble(rows, cols, [&](const EntrySink& s) { emit_omega(t, r, n, s); });
}

Matrix coboundary_et_balavoine(const LieLeibnizTriple& t, std::size_t n) {
  check_degree(n);
  const std::size_t dg = t.dim_g(), dv = t.dim_v();
  const std::size_t rows = et_dim(dv, dg, n + 1), cols = et_dim(dv, dg, n);
  guard_dense(rows, cols, "coboundary matrix");
  Matrix m(rows, cols);
  if (n == 0) return m;
  if (n == 1) {
    // x in g: (d_T x)(u) = -[x,Tu] + T(rho(x)u), evaluated pointwise.
    for (std::size_t a = 0; a < dg; ++a) {
      const Vector x = basis_vector(dg, a);
      for (std::size_t u = 0; u < dv; ++u) {
        const Vector ev = basis_vector(dv, u);
        const Vector br = t.g(x, t.apply_T(ev));
        const Vector tr = t.apply_T(t.rho.act(x, ev));
        for (std::size_t o = 0; o < dg; ++o) m(u * dg + o, a) = tr[o] - br[o];
      }
    }
    return m;
  }
  const std::size_t k = n - 1;
  const LieRepPair pair = t.pair();
  const MultilinearMap tm = t.T_map();
  const Rational sign = parity_sign(static_cast<long long>(k - 1));
  const auto tuples = enumerate_basis(dv, k, TupleKind::Tensor);
  for (std::size_t p = 0; p < tuples.size(); ++p)
    for (std::size_t a = 0; a < dg; ++a) {
      MultilinearMap theta(std::vector<std::size_t>(k, dv), dg);
      theta.add(tuples[p], a, Rational(1));
      const MultilinearMap res = sign * derived_bracket(pair, tm, theta);
      m.set_column(p * dg + a, map_to_et(res, n + 1));
    }
  return m;
}

Matrix coboundary_pair_balavoine(const LieRepPair& p, std::size_t n) {
  check_degree(n);
  const std::size_t dg = p.g.dim(), dv = p.rho.dim_v();
  const std::size_t rows = pair_dim(dg, dv, dg, dv, n + 1), cols = pair_dim(dg, dv, dg, dv, n);
  guard_dense(rows, cols, "coboundary matrix");
  Matrix m(rows, cols);
  if (n == 0) return m;
  const SumLayout lay{dg, dv};
  const MultilinearMap mr = hemisemidirect(p.g.bracket, p.rho.as_map());
  std::vector<Block> sg(n, Block::G), sv(n - 1, Block::G);
  sv.push_back(Block::V);
  std::vector<Block> og(n + 1, Block::G), ov(n, Block::G);
  ov.push_back(Block::V);
  const std::vector<std::pair<std::vector<Block>, Block>> allowed{{og, Block::G}, {ov, Block::V}};
  const Rational sign = parity_sign(static_cast<long long>(n - 1));
  for (std::size_t c = 0; c < cols; ++c) {
    Vector e = zero_vector(cols);
    e[c] = 1;
    const PairCochain f = pair_to_maps(e, dg, dv, dg, dv, n);
    const MultilinearMap fhat = horizontal_lift(f.fg, sg, Block::G, lay) + horizontal_lift(f.fv, sv, Block::V, lay);
    const MultilinearMap F = sign * balavoine(mr, fhat);
    if (!supported_on(F, allowed, lay)) throw std::logic_error("delta leaves the cochain signatures");
    const PairCochain out{restrict_block(F, og, Block::G, lay), restrict_block(F, ov, Block::V, lay)};
    m.set_column(c, maps_to_pair(out, dg, dv, dg, dv, n + 1));
  }
  return m;
}

Matrix omega_t_balavoine(const LieLeibnizTriple& t, std::size_t n) {
  check_degree(n);
  const std::size_t dg = t.dim_g(), dv = t.dim_v();
  const std::size_t rows = et_dim(dv, dg, n + 1), cols = pair_dim(dg, dv, dg, dv, n);
  guard_dense(rows, cols, "Omega matrix");
  Matrix m(rows, cols);
  if (n == 0) return m;
  const SumLayout lay{dg, dv};
  const MultilinearMap that = horizontal_lift(t.T_map(), {Block::V}, Block::G, lay);
  std::vector<Block> sg(n, Block::G), sv(n - 1, Block::G);
  sv.push_back(Block::V);
  const std::vector<Block> out_sig(n, Block::V);
  const Rational scale = Rational(parity_sign(static_cast<long long>(n))) / factorial(static_cast<unsigned>(n));
  for (std::size_t c = 0; c < cols; ++c) {
    Vector e = zero_vector(cols);
    e[c] = 1;
    const PairCochain f = pair_to_maps(e, dg, dv, dg, dv, n);
    MultilinearMap acc = horizontal_lift(f.fg, sg, Block::G, lay) + horizontal_lift(f.fv, sv, Block::V, lay);
    for (std::size_t i = 0; i < n; ++i) acc = balavoine(acc, that);
    m.set_column(c, map_to_et(scale * restrict_block(acc, out_sig, Block::G, lay), n + 1));
  }
  return m;
}

Matrix phi_matrix(const LieLeibnizTriple& t, std::size_t n) {
  check_degree(n);
  const std::size_t dg = t.dim_g(), dv = t.dim_v();
  if (n == 0) return Matrix(0, 0);
  const std::size_t cols = et_dim(dv, dg, n);
  std::size_t rows = dv;
  for (std::size_t i = 0; i < n; ++i) rows *= dv;
  guard_dense(rows, cols, "Phi matrix");
  Matrix m(rows, cols);
  const auto tuples = enumerate_basis(dv, n - 1, TupleKind::Tensor);
  for (std::size_t p = 0; p < tuples.size(); ++p)
    for (std::size_t a = 0; a < dg; ++a) {
      const Matrix& ra = t.rho.matrices()[a];
      for (std::size_t u = 0; u < dv; ++u) {
        Tuple q = tuples[p];
        q.push_back(static_cast<Index>(u));
        const std::size_t base = tensor_index(q, dv) * dv;
        for (std::size_t w = 0; w < dv; ++w)
          if (ra(w, u) != 0) m(base + w, p * dg + a) = -ra(w, u);
      }
    }
  return m;
}

Matrix leibniz_reg_coboundary(const LieLeibnizTriple& t, std::size_t k) {
  check_degree(k);
  const std::size_t dv = t.dim_v();
  std::size_t cols = dv;
  for (std::size_t i = 0; i < k; ++i) cols *= dv;
  const LeibnizModule mod = regular_module(t);
  return assemble(cols * dv, cols, [&](const EntrySink& s) { emit_lp_coboundary(mod, k, s); });
}

CohomologyReport cohomology(const CochainComplex& c, std::size_t n) {
  check_degree(n);
  CohomologyReport rep{c.kind, n, c.dim(n), 0, 0, 0, {}};
  if (n == 0 || rep.dim_cochain == 0) return rep;
  const std::vector<Vector> ker = kernel_basis(c.d(n));
  rep.dim_kernel = ker.size();
  RowEchelon img{Matrix(0, rep.dim_cochain), {}};
  if (n >= 2) {
    img = reduced_echelon(c.d(n - 1).transpose());
    rep.dim_image = img.pivot_cols.size();
  }
  std::vector<Vector> reduced;
  reduced.reserve(ker.size());
  for (const auto& v : ker) reduced.push_back(reduce_modulo(v, img));
  rep.representatives = span_basis(reduced, rep.dim_cochain);
  rep.betti = rep.representatives.size();
  if (rep.betti + rep.dim_image != rep.dim_kernel) throw std::logic_error("coboundaries are not cocycles");
  return rep;
}

LesReport les_check(const LieLeibnizTriple& t, std::size_t max_n) {
  check_degree(max_n);
  const CochainComplex et = et_complex(t), pr = pair_complex(t.pair()), reg = reg_complex(t);
  const std::size_t dg = t.dim_g(), dv = t.dim_v();

  auto iota = [&](std::size_t n) {
    const std::size_t p = pair_dim(dg, dv, dg, dv, n), e = et_dim(dv, dg, n);
    Matrix m(p + e, e);
    for (std::size_t i = 0; i < e; ++i) m(p + i, i) = 1;
    return m;
  };
  auto proj = [&](std::size_t n) {
    const std::size_t p = pair_dim(dg, dv, dg, dv, n), e = et_dim(dv, dg, n);
    Matrix m(p, p + e);
    for (std::size_t i = 0; i < p; ++i) m(i, i) = 1;
    return m;
  };

  LesReport report;
  // X has differential dx_prev into degree n and dx out of it; A comes from
  // the previous space's cocycles z_prev; B goes to a space whose
  // coboundaries are the columns of im_next.
  auto node = [&](const std::string& name, std::size_t n, const Matrix& A, const std::vector<Vector>& z_prev,
                  const Matrix& dx_prev, const Matrix& dx, const Matrix& B, const Matrix& im_next) {
    const std::size_t dim = dx.cols();
    const std::vector<Vector> bx = columns(dx_prev);
    const std::size_t rb = span_rank(bx, dim);

    std::vector<Vector> sa = bx;
    for (const auto& z : z_prev) sa.push_back(A.apply(z));

    const std::vector<Vector> zx = kernel_basis(dx);
    const Matrix zmat = from_columns_or_empty(zx, dim);
    const Matrix bz = B * zmat;
    const Matrix sys = hstack(bz, im_next);
    std::vector<Vector> sb = bx;
    for (const auto& k : kernel_basis(sys)) {
      const Vector c(k.begin(), k.begin() + static_cast<std::ptrdiff_t>(zx.size()));
      sb.push_back(zmat.apply(c));
    }
    LesNode nd;
    nd.name = name;
    nd.degree = n;
    const std::size_t ra = span_rank(sa, dim), rk = span_rank(sb, dim);
    nd.dim_image = ra - rb;
    nd.dim_kernel = rk - rb;
    std::vector<Vector> both = sa;
    both.insert(both.end(), sb.begin(), sb.end());
    nd.contained = span_rank(both, dim) == rk;
    nd.exact = nd.contained && ra == rk;
    report.exact = report.exact && nd.exact;
    report.nodes.push_back(std::move(nd));
  };

  for (std::size_t n = 1; n <= max_n; ++n) {
    const Matrix dE0 = et.d(n - 1), dE1 = et.d(n);
    const Matrix dP0 = pr.d(n - 1), dP1 = pr.d(n);
    const Matrix dR0 = reg.d(n - 1), dR1 = reg.d(n);
    const Matrix om0 = omega_t(t, n - 1), om1 = omega_t(t, n);
    const Matrix io = iota(n), pj = proj(n);
    node("H(T)", n, om0, kernel_basis(dP0), dE0, dE1, io, dR0);
    node("H_reg", n, io, kernel_basis(dE1), dR0, dR1, pj, dP0);
    node("H(g,rho)", n, pj, kernel_basis(dR1), dP0, dP1, om1, dE1);
  }
  return report;
}

Matrix coeff_embedding(const LieLeibnizTriple& t, const TwoTermRep& r, std::size_t n) {
  const std::size_t dg = t.dim_g(), dv = t.dim_v(), dh = r.dim_h, dw = r.dim_w;
  const std::size_t ng = dg + dh, nv = dv + dw;
  const std::size_t pw = pair_wedge_dim(dg, dh, n), pc = pair_dim(dg, dv, dh, dw, n);
  const std::size_t pws = pair_wedge_dim(ng, ng, n), ps = pair_dim(ng, nv, ng, nv, n);
  Matrix m(ps + et_dim(nv, ng, n), pc + et_dim(dv, dh, n));
  if (n == 0) return m;
  for (const Tuple& p : enumerate_basis(dg, n, TupleKind::Wedge))
    for (std::size_t o = 0; o < dh; ++o) m(wedge_rank(p, ng) * ng + dg + o, wedge_rank(p, dg) * dh + o) = 1;
  for (const Tuple& q : enumerate_basis(dg, n - 1, TupleKind::Wedge))
    for (std::size_t v = 0; v < dv; ++v)
      for (std::size_t w = 0; w < dw; ++w)
        m(pws + (wedge_rank(q, ng) * nv + v) * nv + dv + w, pw + (wedge_rank(q, dg) * dv + v) * dw + w) = 1;
  for (const Tuple& p : enumerate_basis(dv, n - 1, TupleKind::Tensor))
    for (std::size_t o = 0; o < dh; ++o) m(ps + tensor_index(p, nv) * ng + dg + o, pc + tensor_index(p, dv) * dh + o) = 1;
  return m;
}

bool coeff_subcomplex_check(const LieLeibnizTriple& t, const TwoTermRep& r, std::size_t n) {
  const LieLeibnizTriple s = semidirect(t, r);
  const Matrix ds = reg_complex(s).d(n);
  const Matrix dr = coeff_complex(t, r).d(n);
  return ds * coeff_embedding(t, r, n) == coeff_embedding(t, r, n + 1) * dr;
}

}  // namespace leibten
