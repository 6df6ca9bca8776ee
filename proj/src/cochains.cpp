#include "leibten/cochains.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <string>

#include "leibten/error.hpp"

namespace leibten {

namespace {

using SparseRow = std::vector<std::pair<std::size_t, Rational>>;
// rows[o] lists the nonzero (column, value) pairs of row o.
using RowSparse = std::vector<SparseRow>;

RowSparse row_sparse(const Matrix& m) {
  RowSparse out(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (m(r, c) != 0) out[r].emplace_back(c, m(r, c));
  return out;
}

std::vector<RowSparse> row_sparse_all(const std::vector<Matrix>& ms) {
  std::vector<RowSparse> out;
  out.reserve(ms.size());
  for (const auto& m : ms) out.push_back(row_sparse(m));
  return out;
}

// Nonzero structure constants per ordered basis pair.
std::vector<std::vector<SparseRow>> bracket_table(const MultilinearMap& b) {
  std::vector<std::vector<SparseRow>> out(b.domain()[0], std::vector<SparseRow>(b.domain()[1]));
  for (const auto& [key, c] : b.table()) out[key[0]][key[1]].emplace_back(key[2], c);
  return out;
}

Tuple drop(const Tuple& t, std::size_t i) {
  Tuple r;
  r.reserve(t.size() - 1);
  for (std::size_t a = 0; a < t.size(); ++a)
    if (a != i) r.push_back(t[a]);
  return r;
}

Matrix combine(const std::vector<Matrix>& mats, const Vector& x, std::size_t rows, std::size_t cols) {
  Matrix out(rows, cols);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    out = out + x[i] * mats[i];
  }
  return out;
}

Vector flat(const Matrix& m) { return m.entries(); }

std::size_t ipow(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < e; ++i) r *= b;
  return r;
}

}  // namespace

TwoTermRep regular_coefficients(const LieLeibnizTriple& t) {
  const std::size_t dg = t.dim_g(), dv = t.dim_v();
  TwoTermRep r;
  r.dim_h = dg;
  r.dim_w = dv;
  r.frak_t = t.T;
  for (std::size_t a = 0; a < dg; ++a) {
    r.phi_h.push_back(t.g.ad(basis_vector(dg, a)));
    r.phi_w.push_back(t.rho.matrices()[a]);
  }
  for (std::size_t u = 0; u < dv; ++u) {
    Matrix m(dv, dg);
    for (std::size_t a = 0; a < dg; ++a)
      for (std::size_t w = 0; w < dv; ++w) m(w, a) = -t.rho.matrices()[a](w, u);
    r.varphi.push_back(std::move(m));
  }
  return r;
}

TwoTermRep trivial_coefficients(const LieLeibnizTriple& t, const Matrix& frak_t) {
  TwoTermRep r;
  r.dim_h = frak_t.rows();
  r.dim_w = frak_t.cols();
  r.frak_t = frak_t;
  r.phi_h.assign(t.dim_g(), Matrix(r.dim_h, r.dim_h));
  r.phi_w.assign(t.dim_g(), Matrix(r.dim_w, r.dim_w));
  r.varphi.assign(t.dim_v(), Matrix(r.dim_w, r.dim_h));
  return r;
}

ValidationReport validate_rep(const LieLeibnizTriple& t, const TwoTermRep& r) {
  const std::size_t dg = t.dim_g(), dv = t.dim_v();
  if (r.frak_t.rows() != r.dim_h || r.frak_t.cols() != r.dim_w || r.phi_h.size() != dg || r.phi_w.size() != dg ||
      r.varphi.size() != dv) {
    throw Error(ErrorCode::DimensionMismatch, "representation data has the wrong shape");
  }
  for (std::size_t a = 0; a < dg; ++a) {
    if (r.phi_h[a].rows() != r.dim_h || r.phi_h[a].cols() != r.dim_h || r.phi_w[a].rows() != r.dim_w ||
        r.phi_w[a].cols() != r.dim_w) {
      throw Error(ErrorCode::DimensionMismatch, "phi matrix shape");
    }
  }
  for (std::size_t u = 0; u < dv; ++u) {
    if (r.varphi[u].rows() != r.dim_w || r.varphi[u].cols() != r.dim_h) {
      throw Error(ErrorCode::DimensionMismatch, "varphi matrix shape");
    }
  }
  ValidationReport rep;
  auto phi_h = [&](const Vector& x) { return combine(r.phi_h, x, r.dim_h, r.dim_h); };
  auto phi_w = [&](const Vector& x) { return combine(r.phi_w, x, r.dim_w, r.dim_w); };
  auto varphi = [&](const Vector& u) { return combine(r.varphi, u, r.dim_w, r.dim_h); };
  for (std::size_t a = 0; a < dg; ++a) {
    const Matrix lhs = r.phi_h[a] * r.frak_t, rhs = r.frak_t * r.phi_w[a];
    if (lhs != rhs) {
      rep.fail({"phi_in_end", {a}, flat(lhs), flat(rhs)});
      return rep;
    }
  }
  for (std::size_t a = 0; a < dg; ++a)
    for (std::size_t b = 0; b < dg; ++b) {
      const Vector br = t.g(basis_vector(dg, a), basis_vector(dg, b));
      const Matrix lh = phi_h(br), rh = r.phi_h[a] * r.phi_h[b] - r.phi_h[b] * r.phi_h[a];
      const Matrix lw = phi_w(br), rw = r.phi_w[a] * r.phi_w[b] - r.phi_w[b] * r.phi_w[a];
      if (lh != rh) {
        rep.fail({"phi_h_homomorphism", {a, b}, flat(lh), flat(rh)});
        return rep;
      }
      if (lw != rw) {
        rep.fail({"phi_w_homomorphism", {a, b}, flat(lw), flat(rw)});
        return rep;
      }
    }
  for (std::size_t u = 0; u < dv; ++u) {
    const Vector tu = t.T.column(u);
    const Matrix l0 = r.frak_t * r.varphi[u], r0 = phi_h(tu);
    const Matrix l1 = r.varphi[u] * r.frak_t, r1 = phi_w(tu);
    if (l0 != r0 || l1 != r1) {
      rep.fail({"tensor_intertwining", {u}, flat(l0 != r0 ? l0 : l1), flat(l0 != r0 ? r0 : r1)});
      return rep;
    }
  }
  for (std::size_t a = 0; a < dg; ++a)
    for (std::size_t u = 0; u < dv; ++u) {
      const Matrix lhs = varphi(t.rho.act(basis_vector(dg, a), basis_vector(dv, u)));
      const Matrix rhs = r.phi_w[a] * r.varphi[u] - r.varphi[u] * r.phi_h[a];
      if (lhs != rhs) {
        rep.fail({"action_intertwining", {a, u}, flat(lhs), flat(rhs)});
        return rep;
      }
    }
  return rep;
}

LieLeibnizTriple semidirect(const LieLeibnizTriple& t, const TwoTermRep& r) {
  const ValidationReport rep = validate_rep(t, r);
  if (!rep.ok) throw Error(ErrorCode::InvalidRepresentation, "invalid representation: " + rep.witnesses[0].identity);
  const std::size_t dg = t.dim_g(), dv = t.dim_v(), dh = r.dim_h, dw = r.dim_w;
  const std::size_t ng = dg + dh, nv = dv + dw;
  MultilinearMap b = MultilinearMap::on_space(ng, 2);
  for (const auto& [key, c] : t.g.bracket.table()) b.add_key(key, c);
  for (std::size_t x = 0; x < dg; ++x)
    for (std::size_t be = 0; be < dh; ++be)
      for (std::size_t o = 0; o < dh; ++o) {
        const Rational& c = r.phi_h[x](o, be);
        if (c == 0) continue;
        b.add({static_cast<Index>(x), static_cast<Index>(dg + be)}, dg + o, c);
        b.add({static_cast<Index>(dg + be), static_cast<Index>(x)}, dg + o, -c);
      }
  std::vector<Matrix> mats;
  for (std::size_t x = 0; x < dg; ++x) {
    Matrix m(nv, nv);
    m.paste(t.rho.matrices()[x], 0, 0);
    m.paste(r.phi_w[x], dv, dv);
    mats.push_back(std::move(m));
  }
  for (std::size_t al = 0; al < dh; ++al) {
    Matrix m(nv, nv);
    for (std::size_t u = 0; u < dv; ++u)
      for (std::size_t w = 0; w < dw; ++w) m(dv + w, u) = -r.varphi[u](w, al);
    mats.push_back(std::move(m));
  }
  Matrix T(ng, nv);
  T.paste(t.T, 0, 0);
  T.paste(r.frak_t, dg, dv);
  return make_triple(LieAlgebra(std::move(b)), Representation(std::move(mats), nv), std::move(T));
}

std::size_t et_dim(std::size_t dv, std::size_t dh, std::size_t n) { return n == 0 ? 0 : ipow(dv, n - 1) * dh; }

std::size_t pair_wedge_dim(std::size_t dg, std::size_t dh, std::size_t n) { return binomial(dg, n) * dh; }

std::size_t pair_dim(std::size_t dg, std::size_t dv, std::size_t dh, std::size_t dw, std::size_t n) {
  if (n == 0) return 0;
  return pair_wedge_dim(dg, dh, n) + binomial(dg, n - 1) * dv * dw;
}

std::size_t wedge_rank(const Tuple& t, std::size_t dim) {
  const std::size_t n = t.size();
  std::size_t rank = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t c = start; c < t[i]; ++c) rank += binomial(dim - c - 1, n - i - 1);
    start = t[i] + 1;
  }
  return rank;
}

int sort_with_sign(Tuple& t) {
  int sign = 1;
  for (std::size_t a = 1; a < t.size(); ++a) {
    for (std::size_t b = a; b > 0 && t[b - 1] >= t[b]; --b) {
      if (t[b - 1] == t[b]) return 0;
      std::swap(t[b - 1], t[b]);
      sign = -sign;
    }
  }
  return sign;
}

MultilinearMap et_to_map(const Vector& c, std::size_t dv, std::size_t dh, std::size_t n) {
  if (n == 0) throw Error(ErrorCode::DimensionMismatch, "degree-0 cochains are zero");
  if (c.size() != et_dim(dv, dh, n)) throw Error(ErrorCode::DimensionMismatch, "cochain length");
  MultilinearMap m(std::vector<std::size_t>(n - 1, dv), dh);
  const auto tuples = enumerate_basis(dv, n - 1, TupleKind::Tensor);
  for (std::size_t p = 0; p < tuples.size(); ++p)
    for (std::size_t o = 0; o < dh; ++o) m.add(tuples[p], o, c[p * dh + o]);
  return m;
}

Vector map_to_et(const MultilinearMap& m, std::size_t n) {
  if (m.arity() + 1 != n) throw Error(ErrorCode::DimensionMismatch, "map arity does not match degree");
  const std::size_t dv = m.arity() == 0 ? 1 : m.domain()[0];
  const std::size_t dh = m.codomain();
  Vector c = zero_vector(et_dim(dv, dh, n));
  for (const auto& [key, v] : m.table()) {
    const Tuple in(key.begin(), key.end() - 1);
    c[tensor_index(in, dv) * dh + key.back()] = v;
  }
  return c;
}

namespace {

// Every permutation of a sorted tuple with its sign.
std::vector<std::pair<Tuple, int>> signed_permutations(const Tuple& sorted) {
  std::vector<std::size_t> idx(sorted.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::vector<std::pair<Tuple, int>> out;
  do {
    Tuple t;
    for (auto i : idx) t.push_back(sorted[i]);
    out.emplace_back(std::move(t), permutation_sign(idx));
  } while (std::next_permutation(idx.begin(), idx.end()));
  return out;
}

}  // namespace

PairCochain pair_to_maps(const Vector& c, std::size_t dg, std::size_t dv, std::size_t dh, std::size_t dw,
                         std::size_t n) {
  if (n == 0) throw Error(ErrorCode::DimensionMismatch, "degree-0 cochains are zero");
  if (c.size() != pair_dim(dg, dv, dh, dw, n)) throw Error(ErrorCode::DimensionMismatch, "cochain length");
  PairCochain f{MultilinearMap(std::vector<std::size_t>(n, dg), dh), MultilinearMap({}, dw)};
  std::vector<std::size_t> fv_dom(n - 1, dg);
  fv_dom.push_back(dv);
  f.fv = MultilinearMap(fv_dom, dw);
  const auto wedges = enumerate_basis(dg, n, TupleKind::Wedge);
  for (std::size_t p = 0; p < wedges.size(); ++p)
    for (std::size_t o = 0; o < dh; ++o) {
      const Rational& v = c[p * dh + o];
      if (v == 0) continue;
      for (const auto& [t, s] : signed_permutations(wedges[p])) f.fg.add(t, o, s * v);
    }
  const std::size_t off = pair_wedge_dim(dg, dh, n);
  const auto prefixes = enumerate_basis(dg, n - 1, TupleKind::Wedge);
  for (std::size_t p = 0; p < prefixes.size(); ++p)
    for (std::size_t u = 0; u < dv; ++u)
      for (std::size_t o = 0; o < dw; ++o) {
        const Rational& v = c[off + (p * dv + u) * dw + o];
        if (v == 0) continue;
        for (auto [t, s] : signed_permutations(prefixes[p])) {
          t.push_back(static_cast<Index>(u));
          f.fv.add(t, o, s * v);
        }
      }
  return f;
}

Vector maps_to_pair(const PairCochain& f, std::size_t dg, std::size_t dv, std::size_t dh, std::size_t dw,
                    std::size_t n) {
  Vector c = zero_vector(pair_dim(dg, dv, dh, dw, n));
  const auto wedges = enumerate_basis(dg, n, TupleKind::Wedge);
  for (std::size_t p = 0; p < wedges.size(); ++p)
    for (std::size_t o = 0; o < dh; ++o) c[p * dh + o] = f.fg.coeff(wedges[p], o);
  const std::size_t off = pair_wedge_dim(dg, dh, n);
  const auto prefixes = enumerate_basis(dg, n - 1, TupleKind::Wedge);
  for (std::size_t p = 0; p < prefixes.size(); ++p)
    for (std::size_t u = 0; u < dv; ++u) {
      Tuple t = prefixes[p];
      t.push_back(static_cast<Index>(u));
      for (std::size_t o = 0; o < dw; ++o) c[off + (p * dv + u) * dw + o] = f.fv.coeff(t, o);
    }
  return c;
}

void emit_lp_coboundary(const LeibnizModule& mod, std::size_t k, const EntrySink& sink) {
  const std::size_t dl = mod.dim_l(), dm = mod.dim_m();
  const auto left = row_sparse_all(mod.rho_left);
  const auto right = row_sparse_all(mod.rho_right);
  const auto br = bracket_table(mod.bracket);
  for (const Tuple& t : enumerate_basis(dl, k + 1, TupleKind::Tensor)) {
    const std::size_t base = tensor_index(t, dl) * dm;
    std::vector<std::size_t> drop_idx(k + 1);
    for (std::size_t i = 0; i <= k; ++i) drop_idx[i] = tensor_index(drop(t, i), dl) * dm;
    for (std::size_t o = 0; o < dm; ++o) {
      const std::size_t row = base + o;
      for (std::size_t i = 0; i < k; ++i) {
        const Rational s = parity_sign(static_cast<long long>(i));  // (-1)^{(i+1)+1}
        for (const auto& [a, c] : left[t[i]][o]) sink(row, drop_idx[i] + a, s * c);
      }
      {
        const Rational s = parity_sign(static_cast<long long>(k + 1));
        for (const auto& [a, c] : right[t[k]][o]) sink(row, drop_idx[k] + a, s * c);
      }
      for (std::size_t i = 0; i < k + 1; ++i)
        for (std::size_t j = i + 1; j < k + 1; ++j) {
          const auto& entries = br[t[i]][t[j]];
          if (entries.empty()) continue;
          const Rational s = parity_sign(static_cast<long long>(i + 1));
          Tuple r = drop(t, i);
          for (const auto& [c, lam] : entries) {
            r[j - 1] = static_cast<Index>(c);
            sink(row, tensor_index(r, dl) * dm + o, s * lam);
          }
        }
    }
  }
}

LeibnizModule et_module(const LieLeibnizTriple& t) {
  const std::size_t dg = t.dim_g(), dv = t.dim_v();
  LeibnizModule m;
  m.bracket = induced_leibniz(t).bracket;
  for (std::size_t u = 0; u < dv; ++u) {
    const Vector tu = t.T.column(u);
    const Matrix ad = t.g.ad(tu);
    m.rho_left.push_back(ad);
    Matrix r(dg, dg);
    for (std::size_t a = 0; a < dg; ++a) {
      Vector col = t.g(basis_vector(dg, a), tu);
      const Vector corr = t.T.apply(t.rho.act(basis_vector(dg, a), basis_vector(dv, u)));
      for (std::size_t o = 0; o < dg; ++o) col[o] -= corr[o];
      r.set_column(a, col);
    }
    m.rho_right.push_back(std::move(r));
  }
  return m;
}

LeibnizModule coeff_module(const LieLeibnizTriple& t, const TwoTermRep& r) {
  const std::size_t dv = t.dim_v();
  LeibnizModule m;
  m.bracket = induced_leibniz(t).bracket;
  for (std::size_t u = 0; u < dv; ++u) {
    const Matrix ph = combine(r.phi_h, t.T.column(u), r.dim_h, r.dim_h);
    m.rho_left.push_back(ph);
    m.rho_right.push_back(r.frak_t * r.varphi[u] - ph);
  }
  return m;
}

LeibnizModule regular_module(const LieLeibnizTriple& t) {
  const std::size_t dv = t.dim_v();
  LeibnizModule m;
  m.bracket = induced_leibniz(t).bracket;
  for (std::size_t u = 0; u < dv; ++u) {
    m.rho_left.push_back(t.rho(t.T.column(u)));
    Matrix r(dv, dv);
    for (std::size_t w = 0; w < dv; ++w) r.set_column(w, t.rho.act(t.T.column(w), basis_vector(dv, u)));
    m.rho_right.push_back(std::move(r));
  }
  return m;
}

void emit_pair_coboundary(const LieAlgebra& g, const Representation& rho, const TwoTermRep& r, std::size_t n,
                          const EntrySink& sink) {
  if (n == 0) return;
  const std::size_t dg = g.dim(), dv = rho.dim_v(), dh = r.dim_h, dw = r.dim_w;
  const auto br = bracket_table(g.bracket);
  const auto ph = row_sparse_all(r.phi_h);
  const auto pw = row_sparse_all(r.phi_w);
  const auto vp = row_sparse_all(r.varphi);
  const std::size_t in_off = pair_wedge_dim(dg, dh, n);
  const std::size_t out_off = pair_wedge_dim(dg, dh, n + 1);

  // (delta f)_g: Chevalley-Eilenberg with coefficients in (h, phi_h).
  for (const Tuple& t : enumerate_basis(dg, n + 1, TupleKind::Wedge)) {
    const std::size_t base = wedge_rank(t, dg) * dh;
    for (std::size_t o = 0; o < dh; ++o) {
      const std::size_t row = base + o;
      for (std::size_t i = 0; i <= n; ++i) {
        const Rational s = parity_sign(static_cast<long long>(i));
        const std::size_t col0 = wedge_rank(drop(t, i), dg) * dh;
        for (const auto& [a, c] : ph[t[i]][o]) sink(row, col0 + a, s * c);
      }
      for (std::size_t i = 0; i <= n; ++i)
        for (std::size_t j = i + 1; j <= n; ++j) {
          const Rational s = parity_sign(static_cast<long long>(i + j));
          for (const auto& [c, lam] : br[t[i]][t[j]]) {
            Tuple u = drop(drop(t, j), i);
            u.insert(u.begin(), static_cast<Index>(c));
            const int sg = sort_with_sign(u);
            if (sg == 0) continue;
            sink(row, wedge_rank(u, dg) * dh + o, s * sg * lam);
          }
        }
    }
  }
  // (delta f)_V
  for (const Tuple& t : enumerate_basis(dg, n, TupleKind::Wedge)) {
    const std::size_t prank = wedge_rank(t, dg);
    for (std::size_t v = 0; v < dv; ++v)
      for (std::size_t w = 0; w < dw; ++w) {
        const std::size_t row = out_off + (prank * dv + v) * dw + w;
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = i + 1; j < n; ++j) {
            const Rational s = parity_sign(static_cast<long long>(i + 1));
            for (const auto& [c, lam] : br[t[i]][t[j]]) {
              Tuple p = drop(t, i);
              p[j - 1] = static_cast<Index>(c);
              const int sg = sort_with_sign(p);
              if (sg == 0) continue;
              sink(row, in_off + (wedge_rank(p, dg) * dv + v) * dw + w, s * sg * lam);
            }
          }
        {
          const Rational s = parity_sign(static_cast<long long>(n));
          for (const auto& [a, c] : vp[v][w]) sink(row, prank * dh + a, s * c);
        }
        for (std::size_t i = 0; i < n; ++i) {
          const Rational s = parity_sign(static_cast<long long>(i));
          const std::size_t q = wedge_rank(drop(t, i), dg);
          for (const auto& [w2, c] : pw[t[i]][w]) sink(row, in_off + (q * dv + v) * dw + w2, s * c);
          const Matrix& rx = rho.matrices()[t[i]];
          for (std::size_t v2 = 0; v2 < dv; ++v2) {
            if (rx(v2, v) == 0) continue;
            sink(row, in_off + (q * dv + v2) * dw + w, -s * rx(v2, v));
          }
        }
      }
  }
}

void emit_omega(const LieLeibnizTriple& t, const TwoTermRep& r, std::size_t n, const EntrySink& sink) {
  if (n == 0) return;
  const std::size_t dg = t.dim_g(), dv = t.dim_v(), dh = r.dim_h, dw = r.dim_w;
  const std::size_t in_off = pair_wedge_dim(dg, dh, n);
  std::vector<SparseRow> tcols(dv);
  for (std::size_t u = 0; u < dv; ++u)
    for (std::size_t a = 0; a < dg; ++a)
      if (t.T(a, u) != 0) tcols[u].emplace_back(a, t.T(a, u));
  const auto ft = row_sparse(r.frak_t);
  const Rational sn = parity_sign(static_cast<long long>(n));

  // Walks every choice of T-components for the first `len` inputs.
  auto expand = [&](const Tuple& vt, std::size_t len, const std::function<void(const Tuple&, const Rational&)>& f) {
    Tuple cur;
    std::function<void(std::size_t, const Rational&)> rec = [&](std::size_t i, const Rational& c) {
      if (i == len) {
        Tuple s = cur;
        const int sg = sort_with_sign(s);
        if (sg != 0) f(s, sg * c);
        return;
      }
      for (const auto& [a, x] : tcols[vt[i]]) {
        cur.push_back(static_cast<Index>(a));
        rec(i + 1, c * x);
        cur.pop_back();
      }
    };
    rec(0, Rational(1));
  };

  for (const Tuple& vt : enumerate_basis(dv, n, TupleKind::Tensor)) {
    const std::size_t base = tensor_index(vt, dv) * dh;
    expand(vt, n, [&](const Tuple& a, const Rational& c) {
      const std::size_t col0 = wedge_rank(a, dg) * dh;
      for (std::size_t o = 0; o < dh; ++o) sink(base + o, col0 + o, sn * c);
    });
    expand(vt, n - 1, [&](const Tuple& a, const Rational& c) {
      const std::size_t col0 = in_off + (wedge_rank(a, dg) * dv + vt[n - 1]) * dw;
      for (std::size_t o = 0; o < dh; ++o)
        for (const auto& [w, x] : ft[o]) sink(base + o, col0 + w, -sn * c * x);
    });
  }
}

Matrix assemble(std::size_t rows, std::size_t cols, const std::function<void(const EntrySink&)>& emitter) {
  guard_dense(rows, cols, "coboundary matrix");
  Matrix m(rows, cols);
  emitter([&](std::size_t r, std::size_t c, const Rational& v) { m(r, c) += v; });
  return m;
}

Vector apply_emitter(std::size_t rows, const Vector& x, const std::function<void(const EntrySink&)>& emitter) {
  Vector out = zero_vector(rows);
  emitter([&](std::size_t r, std::size_t c, const Rational& v) {
    if (x[c] != 0) out[r] += v * x[c];
  });
  return out;
}

std::size_t max_cochain_dim() {
  if (const char* env = std::getenv("LEIBTEN_MAX_CELLS")) {
    try {
      const unsigned long long v = std::stoull(env);
      if (v > 0) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
  }
  return 200000;
}

void guard_cochain_dim(std::size_t dim, const char* what) {
  if (dim > max_cochain_dim()) {
    throw Error(ErrorCode::SizeLimit, std::string(what) + " has " + std::to_string(dim) +
                                          " coordinates, above the cap of " + std::to_string(max_cochain_dim()));
  }
}

void guard_dense(std::size_t rows, std::size_t cols, const char* what) {
  constexpr std::size_t kMaxDenseCells = 20000000;
  if (rows != 0 && cols > kMaxDenseCells / rows) {
    throw Error(ErrorCode::SizeLimit, std::string(what) + " of size " + std::to_string(rows) + "x" +
                                          std::to_string(cols) + " is too large to assemble densely");
  }
}

}  // namespace leibten
