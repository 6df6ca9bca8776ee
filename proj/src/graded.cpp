#include "leibten/graded.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "leibten/error.hpp"

namespace leibten {

namespace {

bool odd(int d) { return (d & 1) != 0; }

Rational signed_value(const Rational& c, int sign) { return sign > 0 ? c : Rational(-c); }

std::vector<int> degrees_of(const GradedVectorSpace& space, const Tuple& key, std::size_t count) {
  std::vector<int> d(count);
  for (std::size_t a = 0; a < count; ++a) d[a] = space.degree(key[a]);
  return d;
}

// Nonzero entries of m grouped by input tuple.
using InputFilter = std::function<bool(const Tuple&)>;

void collect_violations(GradedReport& r, const std::string& identity, const MultilinearMap& m,
                        const InputFilter& keep = nullptr) {
  const Tuple* last = nullptr;
  for (const auto& [key, c] : m.table()) {
    if (last != nullptr && std::equal(key.begin(), key.end() - 1, last->begin())) continue;
    last = &key;
    const Tuple in(key.begin(), key.end() - 1);
    if (keep && !keep(in)) continue;
    r.fail({identity, in, m.value(in)});
  }
}

void check_same_space(const GradedFamily& a, const GradedFamily& b) {
  if (!(a.space() == b.space())) throw Error(ErrorCode::DimensionMismatch, "families live on different spaces");
}

}  // namespace

// ---------------------------------------------------------------- spaces

GradedVectorSpace GradedVectorSpace::concentrated(int degree, std::size_t dim) {
  return GradedVectorSpace{std::vector<int>(dim, degree)};
}

GradedVectorSpace GradedVectorSpace::from_components(const std::map<int, std::size_t>& components) {
  GradedVectorSpace s;
  for (const auto& [deg, dim] : components) s.degrees.insert(s.degrees.end(), dim, deg);
  return s;
}

std::map<int, std::size_t> GradedVectorSpace::components() const {
  std::map<int, std::size_t> c;
  for (int d : degrees) ++c[d];
  return c;
}

int GradedVectorSpace::degree_of(const Tuple& t) const {
  int s = 0;
  for (auto i : t) s += degree(i);
  return s;
}

GradedVectorSpace direct_sum(const GradedVectorSpace& a, const GradedVectorSpace& b) {
  GradedVectorSpace s = a;
  s.degrees.insert(s.degrees.end(), b.degrees.begin(), b.degrees.end());
  return s;
}

void check_bounds(const TruncationBounds& b, const GradedVectorSpace& space) {
  if (b.arity < 1 || b.weight < 1) throw Error(ErrorCode::InvalidInputData, "truncation bounds must be positive");
  if (b.arity > kMaxGradedArity) throw Error(ErrorCode::SizeLimit, "arity bound above the supported maximum");
  if (space.dim() > kMaxGradedDim) throw Error(ErrorCode::SizeLimit, "graded space above the supported dimension");
}

// ---------------------------------------------------------------- families

GradedFamily::GradedFamily(GradedVectorSpace space, int degree) : space_(std::move(space)), degree_(degree) {}

MultilinearMap GradedFamily::component(std::size_t arity) const {
  auto it = comps_.find(arity);
  return it == comps_.end() ? MultilinearMap::on_space(dim(), arity) : it->second;
}

void GradedFamily::insert(std::size_t arity, MultilinearMap m) {
  auto it = comps_.find(arity);
  if (it == comps_.end()) {
    if (!m.is_zero()) comps_.emplace(arity, std::move(m));
    return;
  }
  it->second += m;
  if (it->second.is_zero()) comps_.erase(it);
}

void GradedFamily::add(const MultilinearMap& m) {
  if (m.codomain() != dim()) throw Error(ErrorCode::DimensionMismatch, "graded map codomain differs from the space");
  for (auto d : m.domain()) {
    if (d != dim()) throw Error(ErrorCode::DimensionMismatch, "graded map domain differs from the space");
  }
  for (const auto& [key, c] : m.table()) {
    int in = 0;
    for (std::size_t a = 0; a + 1 < key.size(); ++a) in += space_.degree(key[a]);
    if (space_.degree(key.back()) != in + degree_) {
      throw Error(ErrorCode::NotHomogeneous, "entry violates deg(out) = sum deg(in) + " + std::to_string(degree_));
    }
  }
  insert(m.arity(), m);
}

void GradedFamily::add_entry(const Tuple& in, std::size_t out, const Rational& c) {
  MultilinearMap m = MultilinearMap::on_space(dim(), in.size());
  m.add(in, out, c);
  add(m);
}

GradedFamily GradedFamily::truncated(std::size_t arity) const {
  GradedFamily r(space_, degree_);
  for (const auto& [k, m] : comps_)
    if (k <= arity) r.comps_.emplace(k, m);
  return r;
}

GradedFamily& GradedFamily::operator+=(const GradedFamily& other) {
  check_same_space(*this, other);
  if (other.degree_ != degree_) throw Error(ErrorCode::NotHomogeneous, "sum of families of different degrees");
  for (const auto& [k, m] : other.comps_) insert(k, m);
  return *this;
}

GradedFamily& GradedFamily::operator-=(const GradedFamily& other) {
  check_same_space(*this, other);
  if (other.degree_ != degree_) throw Error(ErrorCode::NotHomogeneous, "difference of families of different degrees");
  for (const auto& [k, m] : other.comps_) insert(k, Rational(-1) * m);
  return *this;
}

GradedFamily& GradedFamily::operator*=(const Rational& s) {
  if (s == 0) {
    comps_.clear();
    return *this;
  }
  for (auto& [k, m] : comps_) m *= s;
  return *this;
}

GradedFamily operator+(GradedFamily a, const GradedFamily& b) { return a += b; }
GradedFamily operator-(GradedFamily a, const GradedFamily& b) { return a -= b; }
GradedFamily operator*(const Rational& s, GradedFamily a) { return a *= s; }

GradedFamily encode_classical(const MultilinearMap& m) {
  return encode_classical(GradedVectorSpace::concentrated(-1, m.codomain()), m);
}

GradedFamily encode_classical(const GradedVectorSpace& space, const MultilinearMap& m) {
  GradedFamily f(space, static_cast<int>(m.arity()) - 1);
  f.add(m);
  return f;
}

// ---------------------------------------------------------------- bracket

MultilinearMap graded_compose_at(const GradedVectorSpace& space, const MultilinearMap& f, const MultilinearMap& g,
                                 int deg_g, std::size_t k) {
  const std::size_t n = space.dim();
  const std::size_t i = f.arity(), j = g.arity();
  if (k < 1 || k > i) throw Error(ErrorCode::SlotOutOfRange, "slot index out of range");
  const std::size_t s = i + j - 1;
  MultilinearMap out = MultilinearMap::on_space(n, s);
  if (f.is_zero() || g.is_zero()) return out;

  std::vector<std::vector<const MultilinearMap::Table::value_type*>> bucket(n);
  for (const auto& e : f.table()) bucket[e.first[k - 1]].push_back(&e);

  Tuple key(s + 1);
  for (const auto& [tg, cg] : g.table()) {
    const Index og = tg.back();
    for (const auto* fe : bucket[og]) {
      const Tuple& tf = fe->first;
      const Rational c = cg * fe->second;
      int pre = 0;
      for (std::size_t a = 0; a + 1 < k; ++a) pre += space.degree(tf[a]);
      const int beta = parity_sign(static_cast<long long>(deg_g) * pre);
      if (j == 0) {
        // A constant enters the first slot only; this reproduces d_T x = -[x,T.] + T rho(x).
        if (k != 1) continue;
        for (std::size_t a = 0; a + 1 < k; ++a) key[a] = tf[a];
        for (std::size_t r = k; r < i; ++r) key[r - 1] = tf[r];
        key[s] = tf.back();
        out.add_key(key, signed_value(c, beta));
        continue;
      }
      for (const auto& sh : shuffles(k - 1, j - 1)) {
        for (std::size_t a = 0; a + 1 < k; ++a) key[sh.perm[a]] = tf[a];
        for (std::size_t b = 0; b + 1 < j; ++b) key[sh.perm[k - 1 + b]] = tg[b];
        key[k + j - 2] = tg[j - 1];
        for (std::size_t r = k; r < i; ++r) key[j - 1 + r] = tf[r];
        key[s] = tf.back();
        const int eps = koszul_sign(sh.perm, degrees_of(space, key, k + j - 2));
        out.add_key(key, signed_value(c, beta * eps));
      }
    }
  }
  return out;
}

GradedFamily graded_circle(const GradedFamily& f, const GradedFamily& g, std::size_t max_arity) {
  check_same_space(f, g);
  GradedFamily out(f.space(), f.degree() + g.degree());
  for (const auto& [i, fi] : f.components()) {
    if (i == 0) continue;
    for (const auto& [j, gj] : g.components()) {
      if (i + j - 1 > max_arity) continue;
      for (std::size_t k = 1; k <= i; ++k) out.add(graded_compose_at(f.space(), fi, gj, g.degree(), k));
    }
  }
  return out;
}

GradedFamily graded_bracket_truncated(const GradedFamily& f, const GradedFamily& g, std::size_t max_arity) {
  GradedFamily out = graded_circle(f, g, max_arity);
  const GradedFamily back = graded_circle(g, f, max_arity);
  if (odd(f.degree()) && odd(g.degree())) {
    out += back;
  } else {
    out -= back;
  }
  return out;
}

GradedFamily graded_bracket(const GradedFamily& f, const GradedFamily& g) {
  return graded_bracket_truncated(f, g, f.max_arity() + g.max_arity());
}

GradedFamily graded_balavoine(const GradedFamily& f, const GradedFamily& g, const TruncationBounds& bounds) {
  check_bounds(bounds, f.space());
  const GradedFamily full = graded_bracket(f, g);
  for (const auto& [k, m] : full.components()) {
    if (k > bounds.arity) {
      throw Error(ErrorCode::TruncationOverflow,
                  "bracket has a nonzero component of arity " + std::to_string(k) + " above the bound");
    }
  }
  return full;
}

// ---------------------------------------------------------------- checks

void GradedReport::fail(GradedViolation v) {
  ok = false;
  if (violations.size() < kMaxViolations) violations.push_back(std::move(v));
}

namespace {

// sum over (i, n-i)-shuffles of eps(sigma) outer(inner(x_s(1..i)), x_s(i+1..n)).
void linf_compose(const GradedVectorSpace& space, const MultilinearMap& outer, const MultilinearMap& inner,
                  MultilinearMap& acc) {
  const std::size_t i = inner.arity();
  const std::size_t r = outer.arity() - 1;
  const std::size_t n = i + r;
  std::vector<std::vector<const MultilinearMap::Table::value_type*>> bucket(space.dim());
  for (const auto& e : outer.table()) bucket[e.first[0]].push_back(&e);
  Tuple key(n + 1);
  for (const auto& [ti, ci] : inner.table()) {
    for (const auto* oe : bucket[ti.back()]) {
      const Tuple& to = oe->first;
      const Rational c = ci * oe->second;
      for (const auto& sh : shuffles(i, r)) {
        for (std::size_t a = 0; a < i; ++a) key[sh.perm[a]] = ti[a];
        for (std::size_t b = 0; b < r; ++b) key[sh.perm[i + b]] = to[1 + b];
        key[n] = to.back();
        acc.add_key(key, signed_value(c, koszul_sign(sh.perm, degrees_of(space, key, n))));
      }
    }
  }
}

}  // namespace

namespace {

GradedReport check_linf_filtered(const GradedFamily& l, const TruncationBounds& bounds, const InputFilter& keep) {
  check_bounds(bounds, l.space());
  GradedReport r;
  r.checked_arity = bounds.arity;
  const GradedVectorSpace& sp = l.space();
  if (l.degree() != 1) r.fail({"degree_one", {}, {}});
  for (const auto& [k, m] : l.components()) {
    if (k == 0) {
      r.fail({"no_curvature", {}, m.value({})});
      continue;
    }
    for (const auto& [key, c] : m.table()) {
      const Tuple in(key.begin(), key.end() - 1);
      for (std::size_t a = 0; a + 1 < k; ++a) {
        Tuple sw = in;
        std::swap(sw[a], sw[a + 1]);
        const bool both_odd = odd(sp.degree(in[a])) && odd(sp.degree(in[a + 1]));
        const Rational expected = both_odd ? Rational(-c) : c;
        if (m.coeff(sw, key.back()) != expected) {
          r.fail({"graded_symmetry", in, m.value(in)});
          break;
        }
      }
    }
  }
  for (std::size_t n = 1; n <= bounds.arity; ++n) {
    MultilinearMap jac = MultilinearMap::on_space(sp.dim(), n);
    for (std::size_t i = 1; i <= n; ++i) {
      auto inner = l.components().find(i);
      auto outer = l.components().find(n - i + 1);
      if (inner == l.components().end() || outer == l.components().end()) continue;
      linf_compose(sp, outer->second, inner->second, jac);
    }
    collect_violations(r, "generalized_jacobi", jac, keep);
  }
  return r;
}

}  // namespace

GradedReport check_linf(const GradedFamily& l, const TruncationBounds& bounds) {
  return check_linf_filtered(l, bounds, nullptr);
}

GradedReport check_linf(const GradedFamily& l, const TruncationBounds& bounds, const std::vector<std::size_t>& weights) {
  if (weights.size() != l.dim()) throw Error(ErrorCode::DimensionMismatch, "one weight per basis element expected");
  return check_linf_filtered(l, bounds, [&](const Tuple& in) {
    std::size_t w = 0;
    for (auto i : in) w += weights[i];
    return w <= bounds.weight;
  });
}

GradedReport check_leibniz_inf(const GradedFamily& theta, const TruncationBounds& bounds) {
  check_bounds(bounds, theta.space());
  GradedReport r;
  r.checked_arity = bounds.arity;
  if (theta.degree() != 1) r.fail({"degree_one", {}, {}});
  const GradedFamily t = theta.truncated(bounds.arity);
  const GradedFamily sq = graded_circle(t, t, bounds.arity);
  for (const auto& [k, m] : sq.components()) collect_violations(r, "leibniz_inf", m);
  return r;
}

GradedFamily hemisemidirect_graded(const GradedFamily& l, const GradedVectorSpace& v, const GradedRepFamily& rho) {
  const std::size_t dg = l.dim(), dv = v.dim();
  GradedFamily out(direct_sum(l.space(), v), l.degree());
  for (const auto& [k, m] : l.components()) {
    MultilinearMap lifted = MultilinearMap::on_space(dg + dv, k);
    for (const auto& [key, c] : m.table()) lifted.add_key(key, c);
    out.add(lifted);
  }
  for (const auto& [k, m] : rho) {
    if (k == 0 || m.arity() != k) throw Error(ErrorCode::SignatureMismatch, "rho_k arity mismatch");
    for (std::size_t a = 0; a + 1 < k; ++a) {
      if (m.domain()[a] != dg) throw Error(ErrorCode::SignatureMismatch, "rho_k slot is not g");
    }
    if (m.domain().back() != dv || m.codomain() != dv) throw Error(ErrorCode::SignatureMismatch, "rho_k must end in V");
    MultilinearMap lifted = MultilinearMap::on_space(dg + dv, k);
    for (const auto& [key, c] : m.table()) {
      Tuple k2 = key;
      k2[k - 1] += static_cast<Index>(dg);
      k2.back() += static_cast<Index>(dg);
      lifted.add_key(std::move(k2), c);
    }
    out.add(lifted);
  }
  return out;
}

GradedFamily lift_homotopy_et(const HomotopyET& t) {
  const std::size_t dg = t.g.dim(), dv = t.v.dim();
  GradedFamily out(direct_sum(t.g, t.v), 0);
  for (const auto& [k, m] : t.theta) {
    if (k == 0 || m.arity() != k || m.codomain() != dg) throw Error(ErrorCode::SignatureMismatch, "Theta_k shape");
    for (auto d : m.domain()) {
      if (d != dv) throw Error(ErrorCode::SignatureMismatch, "Theta_k inputs must lie in V");
    }
    MultilinearMap lifted = MultilinearMap::on_space(dg + dv, k);
    for (const auto& [key, c] : m.table()) {
      Tuple k2 = key;
      for (std::size_t a = 0; a < k; ++a) k2[a] += static_cast<Index>(dg);
      lifted.add_key(std::move(k2), c);
    }
    out.add(lifted);
  }
  return out;
}

GradedFamily project_h(const GradedFamily& f, std::size_t dg) {
  GradedFamily out(f.space(), f.degree());
  for (const auto& [k, m] : f.components()) {
    MultilinearMap p = MultilinearMap::on_space(f.dim(), k);
    for (const auto& [key, c] : m.table()) {
      bool keep = key.back() < dg;
      for (std::size_t a = 0; a < k && keep; ++a) keep = key[a] >= dg;
      if (keep) p.add_key(key, c);
    }
    out.add(p);
  }
  return out;
}

GradedFamily restrict_to_v(const GradedFamily& f, std::size_t dg, const GradedVectorSpace& v) {
  GradedFamily out(v, f.degree());
  for (const auto& [k, m] : f.components()) {
    MultilinearMap p = MultilinearMap::on_space(v.dim(), k);
    for (const auto& [key, c] : m.table()) {
      bool keep = key.back() >= dg;
      for (std::size_t a = 0; a < k && keep; ++a) keep = key[a] >= dg;
      if (!keep) continue;
      Tuple k2 = key;
      for (auto& x : k2) x -= static_cast<Index>(dg);
      p.add_key(std::move(k2), c);
    }
    out.add(p);
  }
  return out;
}

GradedFamily exp_adjoint(const GradedFamily& x, const GradedFamily& theta, const TruncationBounds& bounds) {
  check_bounds(bounds, x.space());
  GradedFamily result = x.truncated(bounds.arity);
  GradedFamily term = result;
  // Each bracket with a V -> g map lowers (#g inputs + [output in V]) by one.
  const std::size_t limit = bounds.arity + 2;
  for (std::size_t n = 1;; ++n) {
    term = Rational(1, n) * graded_bracket_truncated(term, theta, bounds.arity);
    if (term.is_zero()) break;
    if (n > limit) throw Error(ErrorCode::TruncationOverflow, "adjoint series does not terminate within the bound");
    result += term;
  }
  return result;
}

namespace {

GradedFamily twisted_hemisemidirect(const HomotopyET& t, const GradedFamily& l, const GradedRepFamily& rho,
                                    const TruncationBounds& bounds) {
  if (!(l.space() == t.g)) throw Error(ErrorCode::DimensionMismatch, "l and Theta use different g");
  const GradedFamily x = hemisemidirect_graded(l, t.v, rho);
  return exp_adjoint(x, lift_homotopy_et(t), bounds);
}

}  // namespace

GradedReport check_homotopy_et(const HomotopyET& t, const GradedFamily& l, const GradedRepFamily& rho,
                               const TruncationBounds& bounds) {
  GradedReport r;
  r.checked_arity = bounds.arity;
  const GradedFamily y = twisted_hemisemidirect(t, l, rho, bounds);
  const GradedFamily p = project_h(y, t.g.dim());
  for (const auto& [k, m] : p.components()) collect_violations(r, "homotopy_embedding_tensor", m);
  return r;
}

GradedFamily induced_leibniz_inf(const HomotopyET& t, const GradedFamily& l, const GradedRepFamily& rho,
                                 const TruncationBounds& bounds) {
  const GradedFamily y = twisted_hemisemidirect(t, l, rho, bounds);
  if (!project_h(y, t.g.dim()).is_zero()) throw Error(ErrorCode::NotHomotopyET, "Theta is not a homotopy embedding tensor");
  return restrict_to_v(y, t.g.dim(), t.v);
}

namespace {

std::vector<Vector> images(const Matrix& f) {
  std::vector<Vector> cols;
  for (std::size_t c = 0; c < f.cols(); ++c) cols.push_back(f.column(c));
  return cols;
}

bool preserves_degree(const Matrix& f, const GradedVectorSpace& src, const GradedVectorSpace& tgt) {
  for (std::size_t r = 0; r < f.rows(); ++r)
    for (std::size_t c = 0; c < f.cols(); ++c)
      if (f(r, c) != 0 && tgt.degree(r) != src.degree(c)) return false;
  return true;
}

}  // namespace

GradedReport check_strict_homomorphism(const GradedFamily& source, const GradedFamily& target, const Matrix& f,
                                       const TruncationBounds& bounds) {
  check_bounds(bounds, source.space());
  GradedReport r;
  r.checked_arity = bounds.arity;
  if (f.rows() != target.dim() || f.cols() != source.dim()) throw Error(ErrorCode::DimensionMismatch, "map shape");
  if (!preserves_degree(f, source.space(), target.space())) r.fail({"degree_zero", {}, {}});
  const auto fx = images(f);
  for (std::size_t k = 1; k <= bounds.arity; ++k) {
    const MultilinearMap s = source.component(k), t = target.component(k);
    if (s.is_zero() && t.is_zero()) continue;
    for (const auto& tup : enumerate_basis(source.dim(), k, TupleKind::Tensor)) {
      std::vector<Vector> args;
      for (auto i : tup) args.push_back(fx[i]);
      const Vector lhs = f.apply(s.value(tup));
      const Vector rhs = t.evaluate(args);
      if (lhs != rhs) r.fail({"strict_homomorphism", tup, lhs});
    }
  }
  return r;
}

GradedReport check_homotopy_et_homomorphism(const GradedFamily& l, const GradedRepFamily& rho,
                                            const HomotopyET& source, const HomotopyET& target,
                                            const Matrix& phi_g, const Matrix& phi_v, const TruncationBounds& bounds) {
  GradedReport r = check_strict_homomorphism(l, l, phi_g, bounds);
  if (!preserves_degree(phi_v, source.v, target.v)) r.fail({"degree_zero", {}, {}});
  const auto gx = images(phi_g);
  const auto vx = images(phi_v);
  const std::size_t dv = source.v.dim();
  for (std::size_t n = 1; n <= bounds.arity; ++n) {
    auto si = source.theta.find(n);
    auto ti = target.theta.find(n);
    const MultilinearMap s = si == source.theta.end() ? MultilinearMap(std::vector<std::size_t>(n, dv), l.dim()) : si->second;
    const MultilinearMap t = ti == target.theta.end() ? MultilinearMap(std::vector<std::size_t>(n, dv), l.dim()) : ti->second;
    for (const auto& tup : enumerate_basis(dv, n, TupleKind::Tensor)) {
      std::vector<Vector> args;
      for (auto i : tup) args.push_back(vx[i]);
      const Vector lhs = phi_g.apply(s.value(tup));
      if (lhs != t.evaluate(args)) r.fail({"theta_intertwining", tup, lhs});
    }
  }
  for (const auto& [n, m] : rho) {
    for (const auto& tup : enumerate_product(m.domain())) {
      std::vector<Vector> args;
      for (std::size_t a = 0; a + 1 < n; ++a) args.push_back(gx[tup[a]]);
      args.push_back(vx[tup.back()]);
      const Vector lhs = phi_v.apply(m.value(tup));
      if (lhs != m.evaluate(args)) r.fail({"rho_intertwining", tup, lhs});
    }
  }
  return r;
}

// ---------------------------------------------------------------- V-data

bool VData::in_h(const GradedFamily& f) const { return project_h(f, dg()) == f; }

void accumulate(VoronovSum& acc, const VoronovElement& term, const Rational& c) {
  if (term.value.is_zero() || c == 0) return;
  for (auto& e : acc) {
    if (e.shifted == term.shifted && e.degree() == term.degree()) {
      e.value += c * term.value;
      return;
    }
  }
  acc.push_back({term.shifted, c * term.value});
}

bool is_zero(const VoronovSum& s) {
  return std::all_of(s.begin(), s.end(), [](const VoronovElement& e) { return e.value.is_zero(); });
}

VoronovSum voronov_bracket(const VData& vd, const std::vector<VoronovElement>& inputs) {
  if (inputs.empty()) throw Error(ErrorCode::InvalidInputData, "l_k needs at least one input");
  const GradedVectorSpace sum = vd.sum();
  std::size_t shifted = 0, pos = 0;
  for (std::size_t a = 0; a < inputs.size(); ++a) {
    if (!(inputs[a].value.space() == sum)) throw Error(ErrorCode::DimensionMismatch, "input on the wrong space");
    if (inputs[a].shifted) {
      ++shifted;
      pos = a;
    } else if (!vd.in_h(inputs[a].value)) {
      throw Error(ErrorCode::NotHomogeneous, "unshifted input does not lie in h");
    }
  }
  VoronovSum out;
  const std::size_t k = inputs.size();
  if (shifted == 2 && k == 2) {
    const GradedFamily& q = inputs[0].value;
    GradedFamily b = graded_bracket(q, inputs[1].value);
    if (odd(q.degree())) b *= Rational(-1);
    accumulate(out, {true, b});
    return out;
  }
  if (shifted != 1) return out;
  int before = 0;
  for (std::size_t a = 0; a < pos; ++a) before += inputs[a].degree();
  const int sign = parity_sign(static_cast<long long>(inputs[pos].degree()) * before);
  GradedFamily acc = inputs[pos].value;
  for (std::size_t a = 0; a < k; ++a) {
    if (a == pos) continue;
    acc = graded_bracket(acc, inputs[a].value);
    if (acc.is_zero()) return out;
  }
  accumulate(out, {false, project_h(acc, vd.dg())}, Rational(sign));
  return out;
}

namespace {

// sum over all assignments of alpha terms to m leading slots.
VoronovSum alpha_power_bracket(const VData& vd, const VoronovSum& alpha, std::size_t m,
                               const std::vector<VoronovElement>& inputs) {
  VoronovSum out;
  std::size_t in_shifted = 0;
  for (const auto& x : inputs) in_shifted += x.shifted ? 1 : 0;
  const std::size_t k = m + inputs.size();
  std::vector<std::size_t> choice(m, 0);
  while (true) {
    std::size_t sh = in_shifted;
    for (auto c : choice) sh += alpha[c].shifted ? 1 : 0;
    if (sh == 1 || (sh == 2 && k == 2)) {
      std::vector<VoronovElement> args;
      for (auto c : choice) args.push_back(alpha[c]);
      args.insert(args.end(), inputs.begin(), inputs.end());
      for (const auto& e : voronov_bracket(vd, args)) accumulate(out, e);
    }
    std::size_t a = 0;
    while (a < m && ++choice[a] == alpha.size()) choice[a++] = 0;
    if (a == m) break;
  }
  return out;
}

std::size_t series_length(const VoronovSum& alpha, const std::vector<VoronovElement>& inputs) {
  std::size_t a = 0;
  for (const auto& e : alpha)
    if (e.shifted) a = std::max(a, e.value.max_arity());
  for (const auto& e : inputs)
    if (e.shifted) a = std::max(a, e.value.max_arity());
  return a + 1;
}

}  // namespace

VoronovSum voronov_twisted(const VData& vd, const VoronovSum& alpha, const std::vector<VoronovElement>& inputs,
                           const TruncationBounds& bounds) {
  check_bounds(bounds, vd.sum());
  for (const auto& e : alpha) {
    if (e.degree() != 0) throw Error(ErrorCode::NotHomogeneous, "alpha must have degree 0");
  }
  VoronovSum out;
  if (alpha.empty()) {
    if (inputs.empty()) return out;
    return voronov_bracket(vd, inputs);
  }
  const std::size_t len = series_length(alpha, inputs);
  for (std::size_t m = 0; m <= len + 1; ++m) {
    if (m + inputs.size() == 0) continue;
    const VoronovSum term = alpha_power_bracket(vd, alpha, m, inputs);
    if (m == len + 1) {
      if (!is_zero(term)) throw Error(ErrorCode::TruncationOverflow, "twisted series does not terminate");
      break;
    }
    const Rational w = Rational(1) / factorial(static_cast<unsigned>(m));
    for (const auto& e : term) accumulate(out, e, w);
  }
  return out;
}

VoronovSum voronov_mc_sum(const VData& vd, const VoronovSum& alpha, const TruncationBounds& bounds) {
  return voronov_twisted(vd, alpha, {}, bounds);
}

VData classical_vdata(std::size_t dg, std::size_t dv) {
  return {GradedVectorSpace::concentrated(-1, dg), GradedVectorSpace::concentrated(-1, dv)};
}

VoronovElement shifted_hemisemidirect(const MultilinearMap& mu, const MultilinearMap& rho) {
  return {true, encode_classical(hemisemidirect(mu, rho))};
}

VoronovElement lifted_T(const Matrix& T) {
  const std::size_t dg = T.rows(), dv = T.cols();
  MultilinearMap m = MultilinearMap::on_space(dg + dv, 1);
  for (std::size_t o = 0; o < dg; ++o)
    for (std::size_t v = 0; v < dv; ++v)
      if (T(o, v) != 0) m.add({static_cast<Index>(dg + v)}, o, T(o, v));
  return {false, encode_classical(m)};
}

MCTripleReport mc_check_triple(const MultilinearMap& mu, const MultilinearMap& rho, const Matrix& T) {
  const std::size_t dg = mu.codomain(), dv = rho.codomain();
  if (T.rows() != dg || T.cols() != dv) throw Error(ErrorCode::DimensionMismatch, "T must be dim_g x dim_v");
  MCTripleReport r;
  const VData vd = classical_vdata(dg, dv);
  const VoronovElement q = shifted_hemisemidirect(mu, rho);
  const VoronovElement t = lifted_T(T);
  r.pair_part_zero = graded_bracket(q.value, q.value).is_zero();
  r.et_part_zero = graded_bracket(graded_bracket(q.value, t.value), t.value).is_zero();
  r.ok = is_zero(voronov_mc_sum(vd, {q, t}, TruncationBounds{}));
  if (r.ok != (r.pair_part_zero && r.et_part_zero)) throw std::logic_error("MC sum disagrees with its two components");
  return r;
}

Matrix twisted_l1_matrix(const LieLeibnizTriple& t, std::size_t n) {
  if (n < 1 || n > kMaxDegree) throw Error(ErrorCode::SizeLimit, "degree outside the supported range");
  const std::size_t dg = t.dim_g(), dv = t.dim_v();
  const std::size_t p_in = pair_dim(dg, dv, dg, dv, n), e_in = et_dim(dv, dg, n);
  const std::size_t p_out = pair_dim(dg, dv, dg, dv, n + 1), e_out = et_dim(dv, dg, n + 1);
  guard_dense(p_out + e_out, p_in + e_in, "twisted l1 matrix");
  const SumLayout lay{dg, dv};
  const VData vd = classical_vdata(dg, dv);
  const GradedVectorSpace sum = vd.sum();
  const VoronovSum alpha{shifted_hemisemidirect(t.g.bracket, t.rho.as_map()), lifted_T(t.T)};

  std::vector<Block> sg(n, Block::G), sv(n - 1, Block::G);
  sv.push_back(Block::V);
  std::vector<Block> og(n + 1, Block::G), ov(n, Block::G);
  ov.push_back(Block::V);
  const std::vector<Block> ev(n - 1, Block::V), eo(n, Block::V);
  const std::vector<std::pair<std::vector<Block>, Block>> pair_sig{{og, Block::G}, {ov, Block::V}};
  const Rational sign = parity_sign(static_cast<long long>(n));

  Matrix m(p_out + e_out, p_in + e_in);
  for (std::size_t c = 0; c < p_in + e_in; ++c) {
    VoronovElement x;
    if (c < p_in) {
      Vector e = zero_vector(p_in);
      e[c] = 1;
      const PairCochain f = pair_to_maps(e, dg, dv, dg, dv, n);
      x = {true, encode_classical(sum, horizontal_lift(f.fg, sg, Block::G, lay) + horizontal_lift(f.fv, sv, Block::V, lay))};
    } else {
      Vector e = zero_vector(e_in);
      e[c - p_in] = 1;
      x = {false, encode_classical(sum, horizontal_lift(et_to_map(e, dv, dg, n), ev, Block::G, lay))};
    }
    Vector col = zero_vector(p_out + e_out);
    for (const auto& term : voronov_twisted(vd, alpha, {x}, TruncationBounds{})) {
      for (const auto& [k, F] : term.value.components()) {
        if (term.shifted) {
          if (k != n + 1 || !supported_on(F, pair_sig, lay)) throw std::logic_error("shifted part leaves PAIR");
          const PairCochain out{restrict_block(F, og, Block::G, lay), restrict_block(F, ov, Block::V, lay)};
          const Vector v = maps_to_pair(out, dg, dv, dg, dv, n + 1);
          for (std::size_t i = 0; i < p_out; ++i) col[i] += v[i];
        } else {
          if (k != n) throw std::logic_error("h part has the wrong arity");
          const Vector v = map_to_et(restrict_block(F, eo, Block::G, lay), n + 1);
          for (std::size_t i = 0; i < e_out; ++i) col[p_out + i] += v[i];
        }
      }
    }
    for (auto& v : col) v *= sign;
    m.set_column(c, col);
  }
  return m;
}

// ---------------------------------------------------------------- twisting on a finite space

GradedFamily twist(const GradedFamily& l, const Vector& alpha, const TruncationBounds& bounds) {
  check_bounds(bounds, l.space());
  if (alpha.size() != l.dim()) throw Error(ErrorCode::DimensionMismatch, "alpha length differs from the space");
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    if (alpha[i] != 0 && l.space().degree(i) != 0) throw Error(ErrorCode::NotHomogeneous, "alpha must have degree 0");
  }
  if (l.max_arity() > bounds.arity) throw Error(ErrorCode::TruncationOverflow, "family exceeds the arity bound");
  GradedFamily out(l.space(), l.degree());
  for (const auto& [total, m] : l.components()) {
    for (std::size_t lead = 0; lead < total; ++lead) {
      const std::size_t k = total - lead;
      const Rational w = Rational(1) / factorial(static_cast<unsigned>(lead));
      MultilinearMap part = MultilinearMap::on_space(l.dim(), k);
      for (const auto& [key, c] : m.table()) {
        Rational coef = c * w;
        for (std::size_t a = 0; a < lead && coef != 0; ++a) coef *= alpha[key[a]];
        if (coef == 0) continue;
        part.add_key(Tuple(key.begin() + static_cast<std::ptrdiff_t>(lead), key.end()), coef);
      }
      out.add(part);
    }
  }
  return out;
}

Vector mc_curvature(const GradedFamily& l, const Vector& alpha) {
  Vector out = zero_vector(l.dim());
  for (const auto& [k, m] : l.components()) {
    const Rational w = Rational(1) / factorial(static_cast<unsigned>(k));
    const Vector v = m.evaluate(std::vector<Vector>(k, alpha));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += w * v[i];
  }
  return out;
}

// ---------------------------------------------------------------- Borjeson products

void add_to(WordCombination& acc, const WordCombination& x, const Rational& c) {
  if (c == 0) return;
  for (const auto& [w, v] : x) {
    auto [it, ins] = acc.try_emplace(w, c * v);
    if (!ins) {
      it->second += c * v;
      if (it->second == 0) acc.erase(it);
    }
  }
}

void add_to(WordTensor& acc, const WordTensor& x, const Rational& c) {
  if (c == 0) return;
  for (const auto& [w, v] : x) {
    auto [it, ins] = acc.try_emplace(w, c * v);
    if (!ins) {
      it->second += c * v;
      if (it->second == 0) acc.erase(it);
    }
  }
}

WordCombination product(const DiffGradedAlgebra& a, const WordCombination& x, const WordCombination& y) {
  WordCombination out;
  for (const auto& [u, cu] : x)
    for (const auto& [v, cv] : y) add_to(out, a.product(u, v), cu * cv);
  return out;
}

WordCombination nabla(const DiffGradedAlgebra& a, const WordCombination& x) {
  WordCombination out;
  for (const auto& [u, c] : x) add_to(out, a.nabla(u), c);
  return out;
}

DiffGradedAlgebra finite_algebra(const GradedVectorSpace& space, const MultilinearMap& mult, const Matrix& nab) {
  const std::size_t n = space.dim();
  GradedFamily check_mult(space, 0);
  check_mult.add(mult);
  if (mult.arity() != 2) throw Error(ErrorCode::DimensionMismatch, "product must be binary");
  if (nab.rows() != n || nab.cols() != n) throw Error(ErrorCode::DimensionMismatch, "nabla must be square");
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      if (nab(r, c) != 0 && space.degree(r) != space.degree(c) + 1) {
        throw Error(ErrorCode::NotHomogeneous, "nabla must have degree 1");
      }
  DiffGradedAlgebra a;
  a.degree = [space](const Tuple& w) { return space.degree_of(w); };
  a.product = [mult](const Tuple& u, const Tuple& v) {
    WordCombination out;
    const Vector val = mult.value({u.at(0), v.at(0)});
    for (std::size_t i = 0; i < val.size(); ++i)
      if (val[i] != 0) out[{static_cast<Index>(i)}] = val[i];
    return out;
  };
  a.nabla = [nab](const Tuple& u) {
    WordCombination out;
    for (std::size_t i = 0; i < nab.rows(); ++i)
      if (nab(i, u.at(0)) != 0) out[{static_cast<Index>(i)}] = nab(i, u.at(0));
    return out;
  };
  for (std::size_t i = 0; i < n; ++i) a.basis.push_back({static_cast<Index>(i)});
  return a;
}

void check_square_zero(const DiffGradedAlgebra& a) {
  for (const auto& w : a.basis) {
    if (!nabla(a, a.nabla(w)).empty()) throw Error(ErrorCode::NotSquareZero, "nabla o nabla is not zero");
  }
}

namespace {

WordCombination product_range(const DiffGradedAlgebra& a, const std::vector<WordCombination>& x, std::size_t from,
                              std::size_t to) {
  WordCombination acc = x[from];
  for (std::size_t i = from + 1; i < to; ++i) acc = product(a, acc, x[i]);
  return acc;
}

}  // namespace

WordCombination borjeson(const DiffGradedAlgebra& a, std::size_t k, const std::vector<WordCombination>& inputs) {
  if (k == 0 || inputs.size() != k) throw Error(ErrorCode::InvalidInputData, "b_k needs exactly k inputs");
  if (k == 1) return nabla(a, inputs[0]);
  WordCombination out = nabla(a, product_range(a, inputs, 0, k));
  add_to(out, product(a, nabla(a, product_range(a, inputs, 0, k - 1)), inputs[k - 1]), Rational(-1));
  const WordCombination tail = nabla(a, product_range(a, inputs, 1, k));
  WordCombination mid;
  if (k >= 3) mid = product(a, nabla(a, product_range(a, inputs, 1, k - 1)), inputs[k - 1]);
  for (const auto& [w, c] : inputs[0]) {
    const Rational s = parity_sign(a.degree(w)) * c;
    const WordCombination one{{w, Rational(1)}};
    add_to(out, product(a, one, tail), -s);
    if (k >= 3) add_to(out, product(a, one, mid), s);
  }
  return out;
}

GradedReport stasheff_check(const DiffGradedAlgebra& a, std::size_t max_arity) {
  check_square_zero(a);
  GradedReport r;
  r.checked_arity = max_arity;
  const std::size_t nb = a.basis.size();
  for (std::size_t n = 1; n <= max_arity; ++n) {
    for (const auto& pick : enumerate_product(std::vector<std::size_t>(n, nb))) {
      std::vector<WordCombination> x;
      for (auto p : pick) x.push_back(WordCombination{{a.basis[p], Rational(1)}});
      WordCombination total;
      for (std::size_t i = 1; i <= n; ++i) {
        int pre = 0;
        for (std::size_t k = 1; k + i - 1 <= n; ++k) {
          if (k > 1) pre += a.degree(a.basis[pick[k - 2]]);
          const std::vector<WordCombination> inner(x.begin() + static_cast<std::ptrdiff_t>(k - 1),
                                                   x.begin() + static_cast<std::ptrdiff_t>(k + i - 1));
          const WordCombination mi = borjeson(a, i, inner);
          if (mi.empty()) continue;
          std::vector<WordCombination> outer(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(k - 1));
          outer.push_back(mi);
          outer.insert(outer.end(), x.begin() + static_cast<std::ptrdiff_t>(k + i - 1), x.end());
          add_to(total, borjeson(a, n - i + 1, outer), Rational(parity_sign(pre)));
        }
      }
      if (!total.empty()) r.fail({"stasheff", pick, {}});
    }
  }
  return r;
}

// ---------------------------------------------------------------- bar construction

BarConstruction bar_construction(const GradedFamily& theta) {
  if (theta.degree() != 1) throw Error(ErrorCode::NotHomogeneous, "Leibniz_infty brackets have degree 1");
  return BarConstruction{theta};
}

std::vector<Tuple> words_up_to(std::size_t letters, std::size_t max_length) {
  std::vector<Tuple> out;
  for (std::size_t len = 1; len <= max_length; ++len) {
    const auto w = enumerate_basis(letters, len, TupleKind::Tensor);
    out.insert(out.end(), w.begin(), w.end());
  }
  return out;
}

WordCombination BarConstruction::d_k(std::size_t k, const Tuple& w) const {
  WordCombination out;
  const std::size_t n = w.size();
  auto it = theta.components().find(k);
  if (k == 0 || n < k || it == theta.components().end()) return out;
  const MultilinearMap& th = it->second;
  const GradedVectorSpace& sp = theta.space();
  for (std::size_t j = 1; j + k <= n + 1; ++j) {
    const std::size_t head = j + k - 2;
    for (const auto& sh : shuffles(j - 1, k - 1)) {
      Tuple prefix, args;
      int pre = 0;
      for (std::size_t a = 0; a + 1 < j; ++a) {
        prefix.push_back(w[sh.perm[a]]);
        pre += sp.degree(w[sh.perm[a]]);
      }
      for (std::size_t b = 0; b + 1 < k; ++b) args.push_back(w[sh.perm[j - 1 + b]]);
      args.push_back(w[head]);
      const int sign = parity_sign(pre) * koszul_sign(sh.perm, degrees_of(sp, w, head));
      const Vector val = th.value(args);
      for (std::size_t o = 0; o < val.size(); ++o) {
        if (val[o] == 0) continue;
        Tuple word = prefix;
        word.push_back(static_cast<Index>(o));
        word.insert(word.end(), w.begin() + static_cast<std::ptrdiff_t>(head + 1), w.end());
        add_to(out, WordCombination{{word, Rational(1)}}, signed_value(val[o], sign));
      }
    }
  }
  return out;
}

WordCombination BarConstruction::d(const Tuple& w) const {
  WordCombination out;
  for (const auto& [k, m] : theta.components()) add_to(out, d_k(k, w));
  return out;
}

WordCombination BarConstruction::d(const WordCombination& x) const {
  WordCombination out;
  for (const auto& [w, c] : x) add_to(out, d(w), c);
  return out;
}

WordTensor BarConstruction::coproduct(const Tuple& w) const {
  WordTensor out;
  const std::size_t n = w.size();
  if (n < 2) return out;
  const GradedVectorSpace& sp = theta.space();
  const auto degs = degrees_of(sp, w, n - 1);
  for (std::size_t i = 1; i < n; ++i) {
    for (const auto& sh : shuffles(i, n - 1 - i)) {
      Tuple left, right;
      for (std::size_t a = 0; a < i; ++a) left.push_back(w[sh.perm[a]]);
      for (std::size_t a = i; a + 1 < n; ++a) right.push_back(w[sh.perm[a]]);
      right.push_back(w[n - 1]);
      add_to(out, WordTensor{{{left, right}, Rational(1)}}, Rational(koszul_sign(sh.perm, degs)));
    }
  }
  return out;
}

WordTensor BarConstruction::coshuffle(const Tuple& w) const {
  WordTensor out = coproduct(w);
  for (const auto& [lr, c] : coproduct(w)) {
    const int s = parity_sign(static_cast<long long>(degree(lr.first)) * degree(lr.second));
    add_to(out, WordTensor{{{lr.second, lr.first}, Rational(1)}}, signed_value(c, s));
  }
  return out;
}

DiffGradedAlgebra BarConstruction::algebra(std::size_t max_length) const {
  DiffGradedAlgebra a;
  const BarConstruction self = *this;
  a.degree = [self](const Tuple& w) { return self.degree(w); };
  a.product = [](const Tuple& u, const Tuple& v) {
    Tuple w = u;
    w.insert(w.end(), v.begin(), v.end());
    return WordCombination{{w, Rational(1)}};
  };
  a.nabla = [self](const Tuple& w) { return self.d(w); };
  a.basis = words_up_to(theta.dim(), max_length);
  return a;
}

namespace {

// (d (x) Id + Id (x) d) with the Koszul sign on the second factor.
WordTensor apply_d_tensor(const BarConstruction& bar, const WordTensor& t) {
  WordTensor out;
  for (const auto& [lr, c] : t) {
    for (const auto& [u, cu] : bar.d(lr.first)) add_to(out, WordTensor{{{u, lr.second}, Rational(1)}}, c * cu);
    const int s = parity_sign(bar.degree(lr.first));
    for (const auto& [v, cv] : bar.d(lr.second))
      add_to(out, WordTensor{{{lr.first, v}, Rational(1)}}, signed_value(c * cv, s));
  }
  return out;
}

}  // namespace

BarReport bar_check(const BarConstruction& bar, const TruncationBounds& bounds) {
  check_bounds(bounds, bar.theta.space());
  BarReport r;
  for (const auto& w : words_up_to(bar.theta.dim(), bounds.weight)) {
    ++r.words_checked;
    const WordCombination dw = bar.d(w);
    if (!bar.d(dw).empty()) r.square_zero = false;
    WordTensor lhs, lhs_c;
    for (const auto& [u, c] : dw) {
      add_to(lhs, bar.coproduct(u), c);
      add_to(lhs_c, bar.coshuffle(u), c);
    }
    if (lhs != apply_d_tensor(bar, bar.coproduct(w))) r.coderivation = false;
    if (lhs_c != apply_d_tensor(bar, bar.coshuffle(w))) r.coshuffle = false;
  }
  return r;
}

}  // namespace leibten
