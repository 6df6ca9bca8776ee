#include "leibten/structures.hpp"

#include <stdexcept>

#include "leibten/error.hpp"

namespace leibten {

Vector basis_vector(std::size_t n, std::size_t i) {
  Vector v = zero_vector(n);
  v.at(i) = 1;
  return v;
}

LieAlgebra::LieAlgebra(MultilinearMap b) : bracket(std::move(b)) {
  if (bracket.arity() != 2) throw Error(ErrorCode::DimensionMismatch, "Lie bracket must be binary");
  common_dimension(bracket);
}

LieAlgebra LieAlgebra::abelian(std::size_t dim) { return LieAlgebra(MultilinearMap::on_space(dim, 2)); }

Matrix LieAlgebra::ad(const Vector& x) const {
  const std::size_t n = dim();
  Matrix m(n, n);
  for (std::size_t c = 0; c < n; ++c) m.set_column(c, (*this)(x, basis_vector(n, c)));
  return m;
}

Representation::Representation(std::size_t dim_g, std::size_t dim_v)
    : matrices_(dim_g, Matrix(dim_v, dim_v)), map_({dim_g, dim_v}, dim_v) {}

Representation::Representation(std::vector<Matrix> matrices, std::size_t dim_v)
    : matrices_(std::move(matrices)), map_({matrices_.size(), dim_v}, dim_v) {
  for (std::size_t i = 0; i < matrices_.size(); ++i) {
    const Matrix& m = matrices_[i];
    if (m.rows() != dim_v || m.cols() != dim_v) throw Error(ErrorCode::DimensionMismatch, "representation matrix shape");
    for (std::size_t r = 0; r < dim_v; ++r)
      for (std::size_t c = 0; c < dim_v; ++c)
        if (m(r, c) != 0) map_.add({static_cast<Index>(i), static_cast<Index>(c)}, r, m(r, c));
  }
}

Representation Representation::from_map(const MultilinearMap& rho) {
  if (rho.arity() != 2 || rho.domain()[1] != rho.codomain()) {
    throw Error(ErrorCode::DimensionMismatch, "rho must be a map g x V -> V");
  }
  const std::size_t dg = rho.domain()[0];
  const std::size_t dv = rho.codomain();
  std::vector<Matrix> mats(dg, Matrix(dv, dv));
  for (const auto& [key, c] : rho.table()) mats[key[0]](key[2], key[1]) = c;
  return Representation(std::move(mats), dv);
}

Representation Representation::adjoint(const LieAlgebra& g) { return from_map(g.bracket); }

Matrix Representation::operator()(const Vector& x) const {
  const std::size_t n = dim_v();
  Matrix m(n, n);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c)
        if (matrices_[i](r, c) != 0) m(r, c) += x[i] * matrices_[i](r, c);
  }
  return m;
}

Matrix LeibnizAlgebra::left(const Vector& x) const {
  const std::size_t n = dim();
  Matrix m(n, n);
  for (std::size_t c = 0; c < n; ++c) m.set_column(c, (*this)(x, basis_vector(n, c)));
  return m;
}

MultilinearMap LieLeibnizTriple::T_map() const {
  MultilinearMap m({dim_v()}, dim_g());
  for (std::size_t r = 0; r < T.rows(); ++r)
    for (std::size_t c = 0; c < T.cols(); ++c)
      if (T(r, c) != 0) m.add({static_cast<Index>(c)}, r, T(r, c));
  return m;
}

namespace {

// Values of a binary map on basis pairs, for sparse evaluation.
class BinaryTable {
 public:
  explicit BinaryTable(const MultilinearMap& m)
      : cols_(m.domain()[1]), values_(m.domain()[0] * m.domain()[1]) {
    for (const auto& [key, c] : m.table()) add_to(values_[key[0] * cols_ + key[1]], key[2], c);
  }
  const SparseVector& at(std::size_t i, std::size_t j) const { return values_[i * cols_ + j]; }
  SparseVector operator()(const SparseVector& x, const SparseVector& y) const {
    SparseVector acc;
    for (const auto& [i, a] : x)
      for (const auto& [j, b] : y)
        for (const auto& [k, c] : at(i, j)) add_to(acc, k, a * b * c);
    return acc;
  }
  SparseVector operator()(std::size_t i, const SparseVector& y) const {
    SparseVector acc;
    for (const auto& [j, b] : y)
      for (const auto& [k, c] : at(i, j)) add_to(acc, k, b * c);
    return acc;
  }

 private:
  std::size_t cols_;
  std::vector<SparseVector> values_;
};

SparseVector combine(const SparseVector& a, const SparseVector& b, const Rational& sb) {
  SparseVector r = a;
  for (const auto& [k, c] : b) add_to(r, k, sb * c);
  return r;
}

// [x,[y,z]] = [[x,y],z] + [y,[x,z]] on basis triples; first failure only.
void check_leibniz_identity(const MultilinearMap& m, const char* identity, ValidationReport& rep) {
  const std::size_t n = m.codomain();
  const BinaryTable b(m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const SparseVector lhs = b(i, b.at(j, k));
        const SparseVector rhs = combine(b(b.at(i, j), SparseVector{{k, Rational(1)}}), b(j, b.at(i, k)), 1);
        if (lhs != rhs) {
          rep.fail({identity, {i, j, k}, to_dense(lhs, n), to_dense(rhs, n)});
          return;
        }
      }
}

}  // namespace

ValidationReport validate(const LieAlgebra& g) {
  ValidationReport rep;
  const std::size_t n = g.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const Vector a = g.bracket.value({static_cast<Index>(i), static_cast<Index>(j)});
      Vector b = g.bracket.value({static_cast<Index>(j), static_cast<Index>(i)});
      for (auto& x : b) x = -x;
      if (a != b) {
        rep.fail({"antisymmetry", {i, j}, a, b});
        goto jacobi;
      }
    }
  }
jacobi:
  check_leibniz_identity(g.bracket, "jacobi", rep);
  return rep;
}

ValidationReport validate(const LieAlgebra& g, const Representation& rho) {
  if (rho.dim_g() != g.dim()) throw Error(ErrorCode::DimensionMismatch, "representation dimension differs from algebra");
  ValidationReport rep;
  const std::size_t n = g.dim();
  const std::size_t m = rho.dim_v();
  const BinaryTable br(g.bracket), act(rho.as_map());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t v = 0; v < m; ++v) {
        // rho([x,y])u = rho(x)rho(y)u - rho(y)rho(x)u
        const SparseVector lhs = act(br.at(i, j), SparseVector{{v, Rational(1)}});
        const SparseVector rhs = combine(act(i, act.at(j, v)), act(j, act.at(i, v)), -1);
        if (lhs != rhs) {
          rep.fail({"representation", {i, j, v}, to_dense(lhs, m), to_dense(rhs, m)});
          return rep;
        }
      }
  return rep;
}

ValidationReport validate(const LeibnizAlgebra& l) {
  ValidationReport rep;
  check_leibniz_identity(l.bracket, "leibniz", rep);
  return rep;
}

ValidationReport validate_embedding_tensor(const LieAlgebra& g, const Representation& rho, const Matrix& T) {
  if (T.rows() != g.dim() || T.cols() != rho.dim_v()) {
    throw Error(ErrorCode::DimensionMismatch, "embedding tensor shape must be dim_g x dim_v");
  }
  ValidationReport rep;
  const std::size_t n = g.dim();
  const std::size_t m = rho.dim_v();
  const BinaryTable br(g.bracket), act(rho.as_map());
  std::vector<SparseVector> cols;
  for (std::size_t u = 0; u < m; ++u) cols.push_back(to_sparse(T.column(u)));
  auto apply_T = [&](const SparseVector& v) {
    SparseVector r;
    for (const auto& [k, c] : v)
      for (const auto& [o, t] : cols[k]) add_to(r, o, c * t);
    return r;
  };
  for (std::size_t u = 0; u < m; ++u)
    for (std::size_t v = 0; v < m; ++v) {
      // [Tu,Tv] = T(rho(Tu)v)
      const SparseVector lhs = br(cols[u], cols[v]);
      const SparseVector rhs = apply_T(act(cols[u], SparseVector{{v, Rational(1)}}));
      if (lhs != rhs) {
        rep.fail({"embedding_tensor", {u, v}, to_dense(lhs, n), to_dense(rhs, n)});
        return rep;
      }
    }
  return rep;
}

bool is_embedding_tensor(const LieAlgebra& g, const Representation& rho, const Matrix& T) {
  return validate_embedding_tensor(g, rho, T).ok;
}

ValidationReport validate(const LieLeibnizTriple& t) {
  ValidationReport rep = validate(t.g);
  rep.merge(validate(t.g, t.rho));
  rep.merge(validate_embedding_tensor(t.g, t.rho, t.T));
  return rep;
}

LieLeibnizTriple make_triple(LieAlgebra g, Representation rho, Matrix T) {
  LieLeibnizTriple t{std::move(g), std::move(rho), std::move(T)};
  const ValidationReport rep = validate(t);
  if (!rep.ok) {
    throw Error(ErrorCode::InvalidInputData, "not a Lie-Leibniz triple: " + rep.witnesses.front().identity + " fails");
  }
  return t;
}

ValidationReport validate_homomorphism(const LieLeibnizTriple& source, const LieLeibnizTriple& target,
                                       const TripleHomomorphism& h) {
  const std::size_t dg1 = source.dim_g(), dv1 = source.dim_v();
  const std::size_t dg = target.dim_g(), dv = target.dim_v();
  if (h.phi.rows() != dg || h.phi.cols() != dg1 || h.varphi.rows() != dv || h.varphi.cols() != dv1) {
    throw Error(ErrorCode::DimensionMismatch, "homomorphism matrix shapes");
  }
  ValidationReport rep;
  for (std::size_t i = 0; i < dg1; ++i)
    for (std::size_t j = 0; j < dg1; ++j) {
      const Vector x = basis_vector(dg1, i), y = basis_vector(dg1, j);
      const Vector lhs = h.phi.apply(source.g(x, y));
      const Vector rhs = target.g(h.phi.apply(x), h.phi.apply(y));
      if (lhs != rhs) {
        rep.fail({"lie_homomorphism", {i, j}, lhs, rhs});
        goto tensor;
      }
    }
tensor:
  for (std::size_t u = 0; u < dv1; ++u) {
    const Vector e = basis_vector(dv1, u);
    const Vector lhs = target.T.apply(h.varphi.apply(e));
    const Vector rhs = h.phi.apply(source.T.apply(e));
    if (lhs != rhs) {
      rep.fail({"tensor_intertwining", {u}, lhs, rhs});
      break;
    }
  }
  for (std::size_t i = 0; i < dg1; ++i)
    for (std::size_t u = 0; u < dv1; ++u) {
      const Vector x = basis_vector(dg1, i), e = basis_vector(dv1, u);
      const Vector lhs = h.varphi.apply(source.rho.act(x, e));
      const Vector rhs = target.rho.act(h.phi.apply(x), h.varphi.apply(e));
      if (lhs != rhs) {
        rep.fail({"action_intertwining", {i, u}, lhs, rhs});
        return rep;
      }
    }
  return rep;
}

LeibnizAlgebra induced_leibniz(const LieLeibnizTriple& t) {
  const std::size_t m = t.dim_v();
  MultilinearMap b = MultilinearMap::on_space(m, 2);
  for (std::size_t u = 0; u < m; ++u) {
    const Vector tu = t.T.column(u);
    for (std::size_t v = 0; v < m; ++v) {
      const Vector w = t.rho.act(tu, basis_vector(m, v));
      for (std::size_t k = 0; k < m; ++k) b.add({static_cast<Index>(u), static_cast<Index>(v)}, k, w[k]);
    }
  }
  return LeibnizAlgebra(std::move(b));
}

namespace {

void check_v_to_g(const LieRepPair& pair, const MultilinearMap& f) {
  if (f.codomain() != pair.g.dim()) throw Error(ErrorCode::DimensionMismatch, "cochain must take values in g");
  for (auto d : f.domain()) {
    if (d != pair.rho.dim_v()) throw Error(ErrorCode::DimensionMismatch, "cochain inputs must lie in V");
  }
}

Vector eval_with(const MultilinearMap& f, const std::vector<Vector>& basis_args) { return f.evaluate(basis_args); }

}  // namespace

MultilinearMap derived_bracket_balavoine(const LieRepPair& pair, const MultilinearMap& theta,
                                         const MultilinearMap& phi) {
  check_v_to_g(pair, theta);
  check_v_to_g(pair, phi);
  const SumLayout layout{pair.g.dim(), pair.rho.dim_v()};
  const std::size_t m = theta.arity(), n = phi.arity();
  const MultilinearMap h = hemisemidirect(pair.g.bracket, pair.rho.as_map());
  const MultilinearMap th = horizontal_lift(theta, std::vector<Block>(m, Block::V), Block::G, layout);
  const MultilinearMap ph = horizontal_lift(phi, std::vector<Block>(n, Block::V), Block::G, layout);
  MultilinearMap full = balavoine(balavoine(h, th), ph);
  if (m % 2 == 0) full *= Rational(-1);
  if (!supported_on(full, {{std::vector<Block>(m + n, Block::V), Block::G}}, layout)) {
    throw std::logic_error("derived bracket left Hom(V^{m+n}, g)");
  }
  return restrict_block(full, std::vector<Block>(m + n, Block::V), Block::G, layout);
}

MultilinearMap derived_bracket_explicit(const LieRepPair& pair, const MultilinearMap& theta,
                                        const MultilinearMap& phi) {
  check_v_to_g(pair, theta);
  check_v_to_g(pair, phi);
  const std::size_t dv = pair.rho.dim_v();
  const std::size_t dg = pair.g.dim();
  const std::size_t m = theta.arity(), n = phi.arity();
  MultilinearMap out(std::vector<std::size_t>(m + n, dv), dg);
  for (const Tuple& t : enumerate_basis(dv, m + n, TupleKind::Tensor)) {
    std::vector<Vector> v;
    for (auto i : t) v.push_back(basis_vector(dv, i));
    Vector acc = zero_vector(dg);
    // theta with rho(phi(...)) inserted at slot k
    for (std::size_t k = 1; k <= m; ++k) {
      const int base = parity_sign(static_cast<long long>((k - 1) * n + 1));
      for (const auto& s : shuffles(k - 1, n)) {
        std::vector<Vector> pargs;
        for (std::size_t b = 0; b < n; ++b) pargs.push_back(v[s.perm[k - 1 + b]]);
        const Vector inner = pair.rho.act(eval_with(phi, pargs), v[k + n - 1]);
        std::vector<Vector> targs;
        for (std::size_t a = 0; a + 1 < k; ++a) targs.push_back(v[s.perm[a]]);
        targs.push_back(inner);
        for (std::size_t r = k + n; r < m + n; ++r) targs.push_back(v[r]);
        axpy(acc, Rational(base * s.sign), eval_with(theta, targs));
      }
    }
    // [theta(...), phi(...)]
    {
      const int base = parity_sign(static_cast<long long>(m * n + 1));
      for (const auto& s : shuffles(m, n)) {
        std::vector<Vector> targs, pargs;
        for (std::size_t a = 0; a < m; ++a) targs.push_back(v[s.perm[a]]);
        for (std::size_t b = 0; b < n; ++b) pargs.push_back(v[s.perm[m + b]]);
        axpy(acc, Rational(base * s.sign), pair.g(eval_with(theta, targs), eval_with(phi, pargs)));
      }
    }
    // phi with rho(theta(...)) inserted at slot k
    for (std::size_t k = 1; k <= n; ++k) {
      const int base = parity_sign(static_cast<long long>(m * (k + n - 1)));
      for (const auto& s : shuffles(k - 1, m)) {
        std::vector<Vector> targs;
        for (std::size_t b = 0; b < m; ++b) targs.push_back(v[s.perm[k - 1 + b]]);
        const Vector inner = pair.rho.act(eval_with(theta, targs), v[k + m - 1]);
        std::vector<Vector> pargs;
        for (std::size_t a = 0; a + 1 < k; ++a) pargs.push_back(v[s.perm[a]]);
        pargs.push_back(inner);
        for (std::size_t r = k + m; r < m + n; ++r) pargs.push_back(v[r]);
        axpy(acc, Rational(base * s.sign), eval_with(phi, pargs));
      }
    }
    for (std::size_t o = 0; o < dg; ++o) out.add(t, o, acc[o]);
  }
  return out;
}

MultilinearMap derived_bracket(const LieRepPair& pair, const MultilinearMap& theta, const MultilinearMap& phi) {
  MultilinearMap a = derived_bracket_balavoine(pair, theta, phi);
  const MultilinearMap b = derived_bracket_explicit(pair, theta, phi);
  if (!(a == b)) throw std::logic_error("derived bracket routes disagree");
  return a;
}

MultilinearMap phi_rep_map(const LieRepPair& pair, const MultilinearMap& f) {
  check_v_to_g(pair, f);
  const std::size_t dv = pair.rho.dim_v();
  const std::size_t k = f.arity();
  MultilinearMap out(std::vector<std::size_t>(k + 1, dv), dv);
  for (const auto& [key, c] : f.table()) {
    const Index x = key.back();
    // -rho(e_x) applied to each basis u_{k+1}
    for (const auto& [rk, rc] : pair.rho.as_map().table()) {
      if (rk[0] != x) continue;
      Tuple in(key.begin(), key.end() - 1);
      in.push_back(rk[1]);
      out.add(in, rk[2], -c * rc);
    }
  }
  return out;
}

Vector OmniLie::bracket(const Vector& a, const Vector& b) const {
  const std::size_t n = dim_v;
  if (a.size() != dim() || b.size() != dim()) throw Error(ErrorCode::DimensionMismatch, "omni-Lie element size");
  Vector out = zero_vector(dim());
  auto A = [&](std::size_t r, std::size_t c) -> const Rational& { return a[r * n + c]; };
  auto B = [&](std::size_t r, std::size_t c) -> const Rational& { return b[r * n + c]; };
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      Rational s = 0;
      for (std::size_t k = 0; k < n; ++k) s += A(r, k) * B(k, c) - B(r, k) * A(k, c);
      out[r * n + c] = s;
    }
  for (std::size_t r = 0; r < n; ++r) {
    Rational s = 0;
    for (std::size_t k = 0; k < n; ++k) s += A(r, k) * b[n * n + k];
    out[n * n + r] = s;
  }
  return out;
}

Vector OmniLie::pairing(const Vector& a, const Vector& b) const {
  const std::size_t n = dim_v;
  Vector out = zero_vector(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t k = 0; k < n; ++k)
      out[r] += a[r * n + k] * b[n * n + k] + b[r * n + k] * a[n * n + k];
  return out;
}

LeibnizAlgebra OmniLie::as_leibniz() const {
  const std::size_t d = dim();
  MultilinearMap b = MultilinearMap::on_space(d, 2);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      const Vector w = bracket(basis_vector(d, i), basis_vector(d, j));
      for (std::size_t k = 0; k < d; ++k) b.add({static_cast<Index>(i), static_cast<Index>(j)}, k, w[k]);
    }
  return LeibnizAlgebra(std::move(b));
}

bool graph_integrable(const Matrix& T) {
  const std::size_t n = T.cols();
  if (T.rows() != n * n) throw Error(ErrorCode::DimensionMismatch, "T must map V into gl(V)");
  const OmniLie ol{n};
  auto graph_point = [&](std::size_t u) {
    Vector p = zero_vector(ol.dim());
    const Vector tu = T.column(u);
    for (std::size_t i = 0; i < n * n; ++i) p[i] = tu[i];
    p[n * n + u] = 1;
    return p;
  };
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v) {
      const Vector z = ol.bracket(graph_point(u), graph_point(v));
      // z lies in the graph iff its gl(V) part equals T of its V part.
      Vector zv(z.begin() + static_cast<std::ptrdiff_t>(n * n), z.end());
      const Vector tz = T.apply(zv);
      for (std::size_t i = 0; i < n * n; ++i)
        if (tz[i] != z[i]) return false;
    }
  return true;
}

}  // namespace leibten
