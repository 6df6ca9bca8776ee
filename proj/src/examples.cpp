#include "leibten/examples.hpp"

#include "leibten/error.hpp"

namespace leibten {

namespace {

Index ix(std::size_t i) { return static_cast<Index>(i); }

// Coordinates of v in the span of `basis` (columns of b).
Vector coordinates_in(const Matrix& b, const Vector& v) {
  auto x = solve(b, v);
  if (!x) throw Error(ErrorCode::InvalidInputData, "vector outside the expected subspace");
  return *x;
}

Matrix unit(std::size_t rows, std::size_t cols, std::size_t r, std::size_t c) {
  Matrix m(rows, cols);
  m(r, c) = 1;
  return m;
}

Vector flatten(const Matrix& m) { return m.entries(); }

Matrix unflatten(const Vector& v, std::size_t rows, std::size_t cols, std::size_t offset = 0) {
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = v[offset + r * cols + c];
  return m;
}

LieLeibnizTriple checked(LieAlgebra g, Representation rho, Matrix T) {
  return make_triple(std::move(g), std::move(rho), std::move(T));
}

}  // namespace

LieAlgebra lie_from_entries(std::size_t dim, const std::vector<BracketEntry>& entries) {
  MultilinearMap b = MultilinearMap::on_space(dim, 2);
  for (const auto& e : entries) {
    b.add({ix(e.i), ix(e.j)}, e.k, e.c);
    b.add({ix(e.j), ix(e.i)}, e.k, -e.c);
  }
  return LieAlgebra(std::move(b));
}

LeibnizAlgebra leibniz_from_entries(std::size_t dim, const std::vector<BracketEntry>& entries) {
  MultilinearMap b = MultilinearMap::on_space(dim, 2);
  for (const auto& e : entries) b.add({ix(e.i), ix(e.j)}, e.k, e.c);
  return LeibnizAlgebra(std::move(b));
}

LieAlgebra heisenberg() { return lie_from_entries(3, {{0, 1, 2, 1}}); }

LieAlgebra gl(std::size_t n) {
  MultilinearMap b = MultilinearMap::on_space(n * n, 2);
  // [E_ab, E_cd] = delta_bc E_ad - delta_da E_cb
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t bb = 0; bb < n; ++bb)
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t d = 0; d < n; ++d) {
          const Tuple in{ix(a * n + bb), ix(c * n + d)};
          if (bb == c) b.add(in, a * n + d, 1);
          if (d == a) b.add(in, c * n + bb, -1);
        }
  return LieAlgebra(std::move(b));
}

Representation gl_natural(std::size_t n) {
  std::vector<Matrix> mats;
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) mats.push_back(unit(n, n, r, c));
  return Representation(std::move(mats), n);
}

LieLeibnizTriple heisenberg_triple(const std::array<std::array<Rational, 3>, 3>& r) {
  LieAlgebra h = heisenberg();
  Representation ad = Representation::adjoint(h);
  Matrix T(3, 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) T(i, j) = r[i][j];
  return LieLeibnizTriple{std::move(h), std::move(ad), std::move(T)};
}

LieLeibnizTriple heisenberg_family(const std::array<std::array<Rational, 3>, 3>& r) {
  LieLeibnizTriple t = heisenberg_triple(r);
  return checked(std::move(t.g), std::move(t.rho), std::move(t.T));
}

bool heisenberg_condition(const std::array<std::array<Rational, 3>, 3>& r) {
  if (r[0][2] != 0 || r[1][2] != 0) return false;
  if (r[2][2] == 0) return r[0][0] * r[1][1] == r[0][1] * r[1][0];
  if (r[0][1] != 0 || r[1][0] != 0) return false;
  const Rational a = r[0][0] * r[1][1], b = r[1][1] * r[2][2], c = r[0][0] * r[2][2];
  return a == b && b == c;
}

std::size_t pair_index(std::size_t i, std::size_t j, std::size_t n) {
  // Pairs (a,b), a<b, lexicographic: a contributes n-1 + n-2 + ... entries.
  return i * (2 * n - i - 1) / 2 + (j - i - 1);
}

LieLeibnizTriple so8_56() {
  constexpr std::size_t n = 8;
  const std::size_t d = n * (n - 1) / 2;
  auto E = [&](std::size_t i, std::size_t j) {
    Matrix m(n, n);
    m(i, j) = 1;
    m(j, i) = -1;
    return m;
  };
  auto skew_coords = [&](const Matrix& m) {
    Vector v = zero_vector(d);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) v[pair_index(i, j, n)] = m(i, j);
    return v;
  };
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);

  MultilinearMap bracket = MultilinearMap::on_space(d, 2);
  std::vector<Matrix> mats;
  for (std::size_t p = 0; p < d; ++p) {
    const Matrix A = E(pairs[p].first, pairs[p].second);
    for (std::size_t q = 0; q < d; ++q) {
      const Matrix B = E(pairs[q].first, pairs[q].second);
      const Vector c = skew_coords(A * B - B * A);
      for (std::size_t k = 0; k < d; ++k) bracket.add({ix(p), ix(q)}, k, c[k]);
    }
    // rho-bar(A)(e_k ^ e_l) = Ae_k ^ e_l + e_k ^ Ae_l
    Matrix wedge_rep(d, d);
    for (std::size_t q = 0; q < d; ++q) {
      const auto [k, l] = pairs[q];
      Vector w = zero_vector(d);
      for (std::size_t a = 0; a < n; ++a) {
        // A e_k = sum_a A(a,k) e_a
        if (A(a, k) != 0 && a != l) {
          w[a < l ? pair_index(a, l, n) : pair_index(l, a, n)] += (a < l ? 1 : -1) * A(a, k);
        }
        if (A(a, l) != 0 && a != k) {
          w[k < a ? pair_index(k, a, n) : pair_index(a, k, n)] += (k < a ? 1 : -1) * A(a, l);
        }
      }
      wedge_rep.set_column(q, w);
    }
    Matrix full(2 * d, 2 * d);
    full.paste(wedge_rep, 0, 0);
    full.paste(Rational(-1) * wedge_rep.transpose(), d, d);
    mats.push_back(std::move(full));
  }
  Matrix T(d, 2 * d);
  for (std::size_t p = 0; p < d; ++p) T(p, p) = 1;
  return checked(LieAlgebra(std::move(bracket)), Representation(std::move(mats), 2 * d), std::move(T));
}

LieLeibnizTriple adjoint_coadjoint(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  std::vector<Matrix> mats;
  for (std::size_t i = 0; i < n; ++i) {
    const Matrix ad = g.ad(basis_vector(n, i));
    Matrix full(2 * n, 2 * n);
    full.paste(ad, 0, 0);
    full.paste(Rational(-1) * ad.transpose(), n, n);
    mats.push_back(std::move(full));
  }
  Matrix T(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) T(i, i) = 1;
  return checked(g, Representation(std::move(mats), 2 * n), std::move(T));
}

LieLeibnizTriple differential_lie(const LieAlgebra& g, const Matrix& d) {
  return checked(g, Representation::adjoint(g), d);
}

EndomorphismTriple endomorphism_triple(const Matrix& frak_t) {
  const std::size_t dh = frak_t.rows(), dw = frak_t.cols();
  const std::size_t nh = dh * dh, nw = dw * dw;
  // A0 T - T A1 = 0 as a linear system on (A0, A1).
  Matrix constraint(dh * dw, nh + nw);
  for (std::size_t r = 0; r < dh; ++r)
    for (std::size_t c = 0; c < dw; ++c) {
      const std::size_t row = r * dw + c;
      for (std::size_t k = 0; k < dh; ++k) constraint(row, r * dh + k) += frak_t(k, c);
      for (std::size_t k = 0; k < dw; ++k) constraint(row, nh + k * dw + c) -= frak_t(r, k);
    }
  std::vector<Vector> basis = kernel_basis(constraint);
  const std::size_t dg = basis.size();
  const Matrix bmat = Matrix::from_columns(basis, nh + nw);
  auto split = [&](const Vector& v) {
    return std::make_pair(unflatten(v, dh, dh, 0), unflatten(v, dw, dw, nh));
  };
  auto join = [&](const Matrix& a0, const Matrix& a1) {
    Vector v = flatten(a0);
    const Vector w = flatten(a1);
    v.insert(v.end(), w.begin(), w.end());
    return v;
  };

  MultilinearMap bracket = MultilinearMap::on_space(dg, 2);
  for (std::size_t i = 0; i < dg; ++i) {
    const auto [a0, a1] = split(basis[i]);
    for (std::size_t j = 0; j < dg; ++j) {
      const auto [b0, b1] = split(basis[j]);
      const Vector c = coordinates_in(bmat, join(a0 * b0 - b0 * a0, a1 * b1 - b1 * a1));
      for (std::size_t k = 0; k < dg; ++k) bracket.add({ix(i), ix(j)}, k, c[k]);
    }
  }
  const std::size_t dv = dw * dh;
  std::vector<Matrix> mats;
  for (std::size_t i = 0; i < dg; ++i) {
    const auto [a0, a1] = split(basis[i]);
    Matrix m(dv, dv);
    for (std::size_t p = 0; p < dv; ++p) {
      const Matrix phi = unit(dw, dh, p / dh, p % dh);
      m.set_column(p, flatten(a1 * phi - phi * a0));
    }
    mats.push_back(std::move(m));
  }
  Matrix T(dg, dv);
  for (std::size_t p = 0; p < dv; ++p) {
    const Matrix phi = unit(dw, dh, p / dh, p % dh);
    T.set_column(p, coordinates_in(bmat, join(frak_t * phi, phi * frak_t)));
  }
  EndomorphismTriple out;
  out.triple = checked(LieAlgebra(std::move(bracket)), Representation(std::move(mats), dv), std::move(T));
  out.basis = std::move(basis);
  out.dim_h = dh;
  out.dim_w = dw;
  return out;
}

TwoTermRep endomorphism_rep(const EndomorphismTriple& e, const Matrix& frak_t) {
  const std::size_t dh = e.dim_h, dw = e.dim_w;
  TwoTermRep r;
  r.dim_h = dh;
  r.dim_w = dw;
  r.frak_t = frak_t;
  for (const Vector& b : e.basis) {
    r.phi_h.push_back(unflatten(b, dh, dh, 0));
    r.phi_w.push_back(unflatten(b, dw, dw, dh * dh));
  }
  for (std::size_t p = 0; p < dw * dh; ++p) r.varphi.push_back(unit(dw, dh, p / dh, p % dh));
  return r;
}

LieLeibnizTriple strict_lie2(const LieAlgebra& g0, const Representation& rho, const Matrix& d) {
  return checked(g0, rho, d);
}

LieLeibnizTriple crossed_module(const LieAlgebra& g0, const LieAlgebra& g1, const Matrix& d,
                                const Representation& rho) {
  const std::size_t n0 = g0.dim(), n1 = g1.dim();
  if (d.rows() != n0 || d.cols() != n1 || rho.dim_g() != n0 || rho.dim_v() != n1) {
    throw Error(ErrorCode::DimensionMismatch, "crossed module shapes");
  }
  for (std::size_t i = 0; i < n0; ++i)
    for (std::size_t m = 0; m < n1; ++m) {
      const Vector x = basis_vector(n0, i), u = basis_vector(n1, m);
      if (d.apply(rho.act(x, u)) != g0(x, d.apply(u))) {
        throw Error(ErrorCode::InvalidInputData, "crossed module: d is not equivariant");
      }
    }
  for (std::size_t m = 0; m < n1; ++m)
    for (std::size_t k = 0; k < n1; ++k) {
      const Vector u = basis_vector(n1, m), w = basis_vector(n1, k);
      if (rho.act(d.apply(u), w) != g1(u, w)) {
        throw Error(ErrorCode::InvalidInputData, "crossed module: Peiffer identity fails");
      }
      if (d.apply(g1(u, w)) != g0(d.apply(u), d.apply(w))) {
        throw Error(ErrorCode::InvalidInputData, "crossed module: d is not a homomorphism");
      }
    }
  return checked(g0, rho, d);
}

LieLeibnizTriple equivariant_map(const LieRepPair& pair, const Matrix& T) {
  const std::size_t dg = pair.g.dim(), dv = pair.rho.dim_v();
  if (T.rows() != dg || T.cols() != dv) throw Error(ErrorCode::DimensionMismatch, "T shape");
  for (std::size_t i = 0; i < dg; ++i)
    for (std::size_t v = 0; v < dv; ++v) {
      const Vector x = basis_vector(dg, i), u = basis_vector(dv, v);
      if (T.apply(pair.rho.act(x, u)) != pair.g(x, T.apply(u))) {
        throw Error(ErrorCode::InvalidInputData, "T is not g-equivariant");
      }
    }
  return checked(pair.g, pair.rho, T);
}

AnnihilatorQuotient annihilator_projection(const LeibnizAlgebra& l) {
  const std::size_t n = l.dim();
  std::vector<Vector> gens;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      const Vector x = basis_vector(n, i), y = basis_vector(n, j);
      if (i == j) {
        gens.push_back(l(x, x));
      } else {
        Vector s = l(x, y);
        axpy(s, 1, l(y, x));
        gens.push_back(std::move(s));
      }
    }
  std::vector<Vector> ideal = span_basis(gens, n);
  while (true) {
    std::vector<Vector> grown = ideal;
    for (const auto& s : ideal)
      for (std::size_t k = 0; k < n; ++k) {
        grown.push_back(l(basis_vector(n, k), s));
        grown.push_back(l(s, basis_vector(n, k)));
      }
    std::vector<Vector> next = span_basis(grown, n);
    if (next.size() == ideal.size()) break;
    ideal = std::move(next);
  }
  RowEchelon ech;
  ech.rref = ideal.empty() ? Matrix(0, n) : Matrix::from_rows(ideal, n);
  for (const auto& r : ideal) {
    std::size_t c = 0;
    while (r[c] == 0) ++c;
    ech.pivot_cols.push_back(c);
  }
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < n; ++c) {
    bool pivot = false;
    for (auto p : ech.pivot_cols) pivot = pivot || p == c;
    if (!pivot) free_cols.push_back(c);
  }
  const std::size_t q = free_cols.size();
  auto pi = [&](const Vector& v) {
    const Vector red = reduce_modulo(v, ech);
    Vector out = zero_vector(q);
    for (std::size_t a = 0; a < q; ++a) out[a] = red[free_cols[a]];
    return out;
  };
  MultilinearMap bracket = MultilinearMap::on_space(q, 2);
  std::vector<Matrix> mats;
  for (std::size_t a = 0; a < q; ++a) {
    const Vector xa = basis_vector(n, free_cols[a]);
    for (std::size_t b = 0; b < q; ++b) {
      const Vector c = pi(l(xa, basis_vector(n, free_cols[b])));
      for (std::size_t k = 0; k < q; ++k) bracket.add({ix(a), ix(b)}, k, c[k]);
    }
    mats.push_back(l.left(xa));
  }
  Matrix T(q, n);
  for (std::size_t v = 0; v < n; ++v) T.set_column(v, pi(basis_vector(n, v)));
  AnnihilatorQuotient out;
  out.triple = checked(LieAlgebra(std::move(bracket)), Representation(std::move(mats), n), std::move(T));
  out.ideal = std::move(ideal);
  return out;
}

LieLeibnizTriple left_mult(const LeibnizAlgebra& l) {
  const std::size_t n = l.dim();
  Matrix T(n * n, n);
  for (std::size_t v = 0; v < n; ++v) T.set_column(v, flatten(l.left(basis_vector(n, v))));
  return checked(gl(n), gl_natural(n), std::move(T));
}

LieLeibnizTriple omni(std::size_t dim_v) {
  const std::size_t n = dim_v, nn = n * n;
  const LieAlgebra g = gl(n);
  std::vector<Matrix> mats;
  for (std::size_t i = 0; i < nn; ++i) {
    Matrix m(nn + n, nn + n);
    m.paste(g.ad(basis_vector(nn, i)), 0, 0);
    m.paste(unit(n, n, i / n, i % n), nn, nn);
    mats.push_back(std::move(m));
  }
  Matrix T(nn, nn + n);
  for (std::size_t i = 0; i < nn; ++i) T(i, i) = 1;
  return checked(g, Representation(std::move(mats), nn + n), std::move(T));
}

LeibnizAlgebra leibniz_aa_b() { return leibniz_from_entries(2, {{0, 0, 1, 1}}); }

LieLeibnizTriple crossed_module_heisenberg() {
  const LieAlgebra h = heisenberg();
  const LieAlgebra ideal = LieAlgebra::abelian(2);
  Matrix d(3, 2);
  d(1, 0) = 1;
  d(2, 1) = 1;
  // ad restricted to span{e2, e3}: only ad_{e1} e2 = e3 survives.
  std::vector<Matrix> mats(3, Matrix(2, 2));
  mats[0](1, 0) = 1;
  return crossed_module(h, ideal, d, Representation(std::move(mats), 2));
}

LieLeibnizTriple differential_lie_heisenberg() {
  Matrix d(3, 3);
  d(2, 1) = 1;
  return differential_lie(heisenberg(), d);
}

}  // namespace leibten
