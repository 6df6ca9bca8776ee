#include "leibten/freelie.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <tuple>

#include "leibten/error.hpp"

namespace leibten {

namespace {

constexpr std::size_t npos = static_cast<std::size_t>(-1);

bool odd(int d) { return (d & 1) != 0; }

std::size_t ipow(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

Tuple slice(const Tuple& w, std::size_t from, std::size_t to) { return Tuple(w.begin() + from, w.begin() + to); }

bool is_lyndon(const Tuple& w) {
  for (std::size_t i = 1; i < w.size(); ++i) {
    if (!std::lexicographical_compare(w.begin(), w.end(), w.begin() + i, w.end())) return false;
  }
  return !w.empty();
}

Vector word_vector(const WordCombination& x, std::size_t letters, std::size_t length) {
  Vector v = zero_vector(ipow(letters, length));
  for (const auto& [w, c] : x) {
    if (w.size() != length) throw std::logic_error("word of unexpected length");
    v[tensor_index(w, letters)] += c;
  }
  return v;
}

WordCombination vector_words(const Vector& v, std::size_t letters, std::size_t length) {
  WordCombination out;
  const auto words = enumerate_basis(letters, length, TupleKind::Tensor);
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] != 0) out[words[i]] = v[i];
  }
  return out;
}

std::map<std::size_t, WordCombination> split_by_length(const WordCombination& x) {
  std::map<std::size_t, WordCombination> out;
  for (const auto& [w, c] : x) {
    if (c != 0) out[w.size()][w] += c;
  }
  return out;
}

std::vector<int> letter_degrees(const GradedVectorSpace& space, const Tuple& w) {
  std::vector<int> d(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) d[i] = space.degree(w[i]);
  return d;
}

void check_morphism_shape(const LeibnizInfMorphism& f) {
  for (const auto& [k, m] : f.f) {
    if (k == 0 || m.arity() != k) throw Error(ErrorCode::SignatureMismatch, "morphism component arity mismatch");
    for (auto d : m.domain()) {
      if (d != f.source.dim()) throw Error(ErrorCode::DimensionMismatch, "morphism domain differs from the source");
    }
    if (m.codomain() != f.target.dim()) throw Error(ErrorCode::DimensionMismatch, "morphism codomain differs");
    for (const auto& [key, c] : m.table()) {
      const Tuple in(key.begin(), key.end() - 1);
      if (f.target.degree(key.back()) != f.source.degree_of(in))
        throw Error(ErrorCode::NotHomogeneous, "morphism components have degree 0");
    }
  }
}

// All compositions of n into positive parts.
void compositions(std::size_t n, std::vector<std::size_t>& cur, std::vector<std::vector<std::size_t>>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (std::size_t k = 1; k <= n; ++k) {
    cur.push_back(k);
    compositions(n - k, cur, out);
    cur.pop_back();
  }
}

// Entries of a matrix column restricted to single-element monomials, spread
// over every ordering of the symmetric input.
void spread_symmetric(const FreeEnvelope& env, const Monomial& s, const std::vector<std::pair<std::size_t, Rational>>& out,
                      MultilinearMap& m) {
  Monomial t = s;
  do {
    const int sign = env.normalize(t).first;
    Tuple in(t.begin(), t.end());
    for (const auto& [j, c] : out) m.add(in, j, sign > 0 ? c : Rational(-c));
  } while (std::next_permutation(t.begin(), t.end()));
}

std::map<Monomial, std::size_t> positions(const std::vector<Monomial>& basis) {
  std::map<Monomial, std::size_t> pos;
  for (std::size_t i = 0; i < basis.size(); ++i) pos[basis[i]] = i;
  return pos;
}

}  // namespace

// ---------------------------------------------------------------- tensors

WordCombination concat(const WordCombination& a, const WordCombination& b) {
  WordCombination out;
  for (const auto& [wa, ca] : a)
    for (const auto& [wb, cb] : b) {
      Tuple w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      add_to(out, WordCombination{{w, ca * cb}});
    }
  return out;
}

WordCombination graded_commutator(const GradedVectorSpace& alphabet, const WordCombination& a,
                                  const WordCombination& b) {
  WordCombination out = concat(a, b);
  for (const auto& [wa, ca] : a)
    for (const auto& [wb, cb] : b) {
      Tuple w = wb;
      w.insert(w.end(), wa.begin(), wa.end());
      const int s = parity_sign(static_cast<long long>(alphabet.degree_of(wa)) * alphabet.degree_of(wb));
      add_to(out, WordCombination{{w, Rational(-s) * ca * cb}});
    }
  return out;
}

WordTensor coshuffle_coproduct(const GradedVectorSpace& alphabet, const Tuple& w) {
  WordTensor out;
  const std::size_t n = w.size();
  const std::vector<int> deg = letter_degrees(alphabet, w);
  for (std::size_t i = 0; i <= n; ++i) {
    for (const auto& sh : shuffles(i, n - i)) {
      Tuple l, r;
      for (std::size_t a = 0; a < i; ++a) l.push_back(w[sh.perm[a]]);
      for (std::size_t a = i; a < n; ++a) r.push_back(w[sh.perm[a]]);
      add_to(out, WordTensor{{{l, r}, Rational(koszul_sign(sh.perm, deg))}});
    }
  }
  return out;
}

// ---------------------------------------------------------------- Lyndon basis

LyndonBasis::LyndonBasis(GradedVectorSpace alphabet, std::size_t weight_bound)
    : alphabet_(std::move(alphabet)), weight_bound_(weight_bound) {
  const std::size_t N = alphabet_.dim();
  if (N == 0 || weight_bound == 0) throw Error(ErrorCode::InvalidInputData, "free Lie algebra needs letters and a weight");
  if (N > kMaxFreeGenerators) throw Error(ErrorCode::SizeLimit, "too many generators for the free Lie algebra");
  if (weight_bound > kMaxFreeWeight) throw Error(ErrorCode::SizeLimit, "weight bound above the supported maximum");

  std::vector<LieBasisElement> raw;
  for (std::size_t n = 1; n <= weight_bound; ++n) {
    for (const auto& w : enumerate_basis(N, n, TupleKind::Tensor)) {
      if (is_lyndon(w)) raw.push_back({w, false, npos, npos, n, alphabet_.degree_of(w)});
    }
  }
  const std::size_t lyndon_count = raw.size();
  for (std::size_t i = 0; i < lyndon_count; ++i) {
    const LieBasisElement e = raw[i];
    if (!odd(e.degree) || 2 * e.weight > weight_bound) continue;
    Tuple ww = e.word;
    ww.insert(ww.end(), e.word.begin(), e.word.end());
    raw.push_back({ww, true, npos, npos, 2 * e.weight, 2 * e.degree});
  }
  std::sort(raw.begin(), raw.end(), [](const LieBasisElement& a, const LieBasisElement& b) {
    return std::tie(a.weight, a.word) < std::tie(b.weight, b.word);
  });

  std::map<Tuple, std::size_t> lyndon_index;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (!raw[i].square) lyndon_index[raw[i].word] = i;
  }
  for (auto& e : raw) {
    const std::size_t n = e.word.size();
    if (e.square) {
      e.left = e.right = lyndon_index.at(slice(e.word, 0, n / 2));
    } else if (n > 1) {
      for (std::size_t i = 1; i < n; ++i) {
        if (is_lyndon(slice(e.word, i, n))) {
          e.left = lyndon_index.at(slice(e.word, 0, i));
          e.right = lyndon_index.at(slice(e.word, i, n));
          break;
        }
      }
    }
  }
  elems_ = std::move(raw);

  for (const auto& e : elems_) {
    if (e.left == npos) {
      tensors_.push_back(WordCombination{{e.word, Rational(1)}});
    } else {
      tensors_.push_back(graded_commutator(alphabet_, tensors_[e.left], tensors_[e.right]));
    }
  }

  columns_.resize(weight_bound + 1);
  for (std::size_t n = 1; n <= weight_bound; ++n) {
    std::vector<Vector> cols;
    for (auto i : of_weight(n)) cols.push_back(word_vector(tensors_[i], N, n));
    columns_[n] = Matrix::from_columns(cols, ipow(N, n));
    if (rank(columns_[n]) != cols.size()) throw std::logic_error("Lyndon bracketings are linearly dependent");
  }
}

std::vector<std::size_t> LyndonBasis::of_weight(std::size_t w) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < elems_.size(); ++i) {
    if (elems_[i].weight == w) out.push_back(i);
  }
  return out;
}

GradedVectorSpace LyndonBasis::space() const {
  GradedVectorSpace s;
  for (const auto& e : elems_) s.degrees.push_back(e.degree);
  return s;
}

std::vector<std::size_t> LyndonBasis::weights() const {
  std::vector<std::size_t> out;
  for (const auto& e : elems_) out.push_back(e.weight);
  return out;
}

std::string LyndonBasis::word_name(std::size_t i) const {
  std::string s;
  for (auto l : element(i).word) s.push_back(static_cast<char>('a' + l));
  return s;
}

std::string LyndonBasis::bracket_name(std::size_t i) const {
  const LieBasisElement& e = element(i);
  if (e.left == npos) return word_name(i);
  return "[" + bracket_name(e.left) + "," + bracket_name(e.right) + "]";
}

std::size_t LyndonBasis::find(const std::string& name) const {
  for (std::size_t i = 0; i < elems_.size(); ++i) {
    if (word_name(i) == name) return i;
  }
  throw Error(ErrorCode::InvalidInputData, "no free Lie basis element named " + name);
}

SparseVector LyndonBasis::express(const WordCombination& x) const {
  SparseVector out;
  for (const auto& [n, part] : split_by_length(x)) {
    if (n == 0) throw Error(ErrorCode::InvalidInputData, "the unit is not a Lie element");
    if (n > weight_bound_) throw Error(ErrorCode::TruncationOverflow, "Lie element above the weight bound");
    const auto c = solve(columns_[n], word_vector(part, alphabet_.dim(), n));
    if (!c) throw Error(ErrorCode::InvalidInputData, "tensor is not in the free Lie algebra");
    const auto idx = of_weight(n);
    for (std::size_t j = 0; j < idx.size(); ++j) {
      if ((*c)[j] != 0) add_to(out, idx[j], (*c)[j]);
    }
  }
  return out;
}

SparseVector LyndonBasis::bracket(std::size_t i, std::size_t j) const {
  return express(graded_commutator(alphabet_, tensor(i), tensor(j)));
}

LyndonBasis lyndon_basis(const GradedVectorSpace& alphabet, std::size_t weight_bound) {
  return LyndonBasis(alphabet, weight_bound);
}

std::size_t primitive_dimension(const GradedVectorSpace& alphabet, std::size_t weight) {
  const std::size_t N = alphabet.dim();
  if (N > kMaxFreeGenerators || weight > kMaxFreeWeight) throw Error(ErrorCode::SizeLimit, "alphabet or weight too large");
  const auto words = enumerate_basis(N, weight, TupleKind::Tensor);
  std::map<std::pair<Tuple, Tuple>, std::size_t> row;
  std::vector<SparseVector> cols;
  for (const auto& w : words) {
    SparseVector col;
    for (const auto& [lr, c] : coshuffle_coproduct(alphabet, w)) {
      if (lr.first.empty() || lr.second.empty()) continue;
      auto it = row.emplace(lr, row.size()).first;
      add_to(col, it->second, c);
    }
    cols.push_back(std::move(col));
  }
  Matrix m(row.size(), words.size());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (const auto& [r, c] : cols[j]) m(r, j) = c;
  return words.size() - (row.empty() ? 0 : rank(m));
}

// ---------------------------------------------------------------- envelope

FreeEnvelope::FreeEnvelope(LyndonBasis basis) : basis_(std::move(basis)) {
  const std::size_t W = basis_.weight_bound(), N = basis_.alphabet().dim();
  monomials_.assign(W + 1, {});
  position_.assign(W + 1, {});
  pbw_.assign(W + 1, Matrix());
  pbw_inv_.assign(W + 1, Matrix());
  psi_.assign(W + 1, Matrix());
  psi_inv_.assign(W + 1, Matrix());

  Monomial cur;
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start, std::size_t remaining) {
    if (remaining == 0) {
      monomials_[weight(cur)].push_back(cur);
      return;
    }
    for (std::size_t i = start; i < basis_.size(); ++i) {
      const LieBasisElement& e = basis_.element(i);
      if (e.weight > remaining) break;
      cur.push_back(i);
      rec(odd(e.degree) ? i + 1 : i, remaining - e.weight);
      cur.pop_back();
    }
  };
  for (std::size_t n = 1; n <= W; ++n) rec(0, n);

  for (std::size_t n = 1; n <= W; ++n) {
    const auto& mons = monomials_[n];
    position_[n] = positions(mons);
    if (mons.size() != ipow(N, n)) throw std::logic_error("PBW monomial count differs from dim T(V)");
    std::vector<Vector> cols;
    for (const auto& m : mons) cols.push_back(word_vector(monomial_tensor(m), N, n));
    pbw_[n] = Matrix::from_columns(cols, mons.size());
    auto inv = inverse(pbw_[n]);
    if (!inv) throw std::logic_error("PBW monomials are not a basis");
    pbw_inv_[n] = *inv;

    std::vector<Vector> sym;
    for (const auto& m : mons) {
      const std::size_t k = m.size();
      std::vector<int> deg(k);
      for (std::size_t a = 0; a < k; ++a) deg[a] = basis_.element(m[a]).degree;
      std::vector<std::size_t> perm(k);
      std::iota(perm.begin(), perm.end(), 0);
      WordCombination t;
      do {
        WordCombination term{{Tuple{}, Rational(koszul_sign(perm, deg))}};
        for (auto a : perm) term = concat(term, basis_.tensor(m[a]));
        add_to(t, term);
      } while (std::next_permutation(perm.begin(), perm.end()));
      Vector v = pbw_inv_[n].apply(word_vector(t, N, n));
      const Rational scale = Rational(1) / factorial(static_cast<unsigned>(k));
      for (auto& x : v) x *= scale;
      sym.push_back(std::move(v));
    }
    psi_[n] = Matrix::from_columns(sym, mons.size());
    auto pinv = inverse(psi_[n]);
    if (!pinv) throw std::logic_error("symmetrization is not invertible");
    psi_inv_[n] = *pinv;
  }
}

std::size_t FreeEnvelope::weight(const Monomial& m) const {
  std::size_t w = 0;
  for (auto i : m) w += basis_.element(i).weight;
  return w;
}

int FreeEnvelope::degree(const Monomial& m) const {
  int d = 0;
  for (auto i : m) d += basis_.element(i).degree;
  return d;
}

std::vector<Monomial> FreeEnvelope::all_monomials() const {
  std::vector<Monomial> out;
  for (std::size_t n = 1; n < monomials_.size(); ++n) out.insert(out.end(), monomials_[n].begin(), monomials_[n].end());
  return out;
}

std::pair<int, Monomial> FreeEnvelope::normalize(const std::vector<std::size_t>& ids) const {
  Monomial m = ids;
  int sign = 1;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] >= basis_.size()) throw Error(ErrorCode::DimensionMismatch, "free Lie basis index out of range");
  }
  for (std::size_t pass = 0; pass < m.size(); ++pass)
    for (std::size_t a = 0; a + 1 < m.size(); ++a) {
      if (m[a] > m[a + 1]) {
        if (odd(basis_.element(m[a]).degree) && odd(basis_.element(m[a + 1]).degree)) sign = -sign;
        std::swap(m[a], m[a + 1]);
      }
    }
  for (std::size_t a = 0; a + 1 < m.size(); ++a) {
    if (m[a] == m[a + 1] && odd(basis_.element(m[a]).degree)) return {0, m};
  }
  return {sign, m};
}

WordCombination FreeEnvelope::monomial_tensor(const Monomial& m) const {
  WordCombination t{{Tuple{}, Rational(1)}};
  for (auto i : m) t = concat(t, basis_.tensor(i));
  return t;
}

MonomialCombination FreeEnvelope::phi(const WordCombination& x) const {
  MonomialCombination out;
  const std::size_t N = basis_.alphabet().dim();
  for (const auto& [n, part] : split_by_length(x)) {
    if (n == 0) {
      out[Monomial{}] += part.begin()->second;
      continue;
    }
    if (n > weight_bound()) throw Error(ErrorCode::TruncationOverflow, "tensor above the weight bound");
    const Vector c = pbw_inv_[n].apply(word_vector(part, N, n));
    for (std::size_t j = 0; j < c.size(); ++j) {
      if (c[j] != 0) out[monomials_[n][j]] += c[j];
    }
  }
  return out;
}

namespace {

std::map<std::size_t, Vector> split_monomials(const FreeEnvelope& env, const MonomialCombination& u,
                                              const std::vector<std::map<Monomial, std::size_t>>& pos,
                                              Rational& unit) {
  std::map<std::size_t, Vector> out;
  unit = 0;
  for (const auto& [m, c] : u) {
    if (m.empty()) {
      unit += c;
      continue;
    }
    const std::size_t n = env.weight(m);
    if (n >= pos.size()) throw Error(ErrorCode::TruncationOverflow, "monomial above the weight bound");
    auto it = pos[n].find(m);
    if (it == pos[n].end()) throw Error(ErrorCode::InvalidInputData, "not a canonical monomial");
    auto [slot, fresh] = out.try_emplace(n, zero_vector(pos[n].size()));
    slot->second[it->second] += c;
  }
  return out;
}

}  // namespace

WordCombination FreeEnvelope::phi_inverse(const MonomialCombination& u) const {
  Rational unit;
  WordCombination out;
  for (const auto& [n, v] : split_monomials(*this, u, position_, unit))
    add_to(out, vector_words(pbw_[n].apply(v), basis_.alphabet().dim(), n));
  if (unit != 0) out[Tuple{}] = unit;
  return out;
}

MonomialCombination FreeEnvelope::psi(const MonomialCombination& s) const {
  Rational unit;
  MonomialCombination out;
  for (const auto& [n, v] : split_monomials(*this, s, position_, unit)) {
    const Vector c = psi_[n].apply(v);
    for (std::size_t j = 0; j < c.size(); ++j) {
      if (c[j] != 0) out[monomials_[n][j]] += c[j];
    }
  }
  if (unit != 0) out[Monomial{}] = unit;
  return out;
}

MonomialCombination FreeEnvelope::psi_inverse(const MonomialCombination& u) const {
  Rational unit;
  MonomialCombination out;
  for (const auto& [n, v] : split_monomials(*this, u, position_, unit)) {
    const Vector c = psi_inv_[n].apply(v);
    for (std::size_t j = 0; j < c.size(); ++j) {
      if (c[j] != 0) out[monomials_[n][j]] += c[j];
    }
  }
  if (unit != 0) out[Monomial{}] = unit;
  return out;
}

MonomialCombination FreeEnvelope::product(const MonomialCombination& a, const MonomialCombination& b) const {
  return phi(concat(phi_inverse(a), phi_inverse(b)));
}

MonomialTensor FreeEnvelope::coproduct(const Monomial& m) const {
  MonomialTensor out;
  const std::size_t k = m.size();
  std::vector<int> deg(k);
  for (std::size_t a = 0; a < k; ++a) deg[a] = basis_.element(m[a]).degree;
  for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
    std::vector<std::size_t> perm;
    Monomial l, r;
    for (std::size_t a = 0; a < k; ++a) {
      if (mask >> a & 1) {
        perm.push_back(a);
        l.push_back(m[a]);
      }
    }
    for (std::size_t a = 0; a < k; ++a) {
      if (!(mask >> a & 1)) {
        perm.push_back(a);
        r.push_back(m[a]);
      }
    }
    out[{l, r}] += koszul_sign(perm, deg);
  }
  std::erase_if(out, [](const auto& e) { return e.second == 0; });
  return out;
}

// ---------------------------------------------------------------- transfer

KsTransfer ks_transfer(const GradedFamily& theta, const TruncationBounds& bounds) {
  if (bounds.arity < 1 || bounds.weight < 1) throw Error(ErrorCode::InvalidInputData, "truncation bounds must be positive");
  if (bounds.arity > kMaxGradedArity || bounds.weight > kMaxFreeWeight)
    throw Error(ErrorCode::SizeLimit, "truncation bounds above the supported maximum");
  if (theta.degree() != 1) throw Error(ErrorCode::NotHomogeneous, "Leibniz_infty brackets have degree 1");
  if (theta.components().count(0) != 0) throw Error(ErrorCode::InvalidInputData, "curved brackets are not supported");

  KsTransfer out;
  out.theta = theta;
  out.envelope = FreeEnvelope(lyndon_basis(theta.space(), bounds.weight));
  const BarConstruction bar = bar_construction(theta);
  for (const auto& w : words_up_to(theta.dim(), bounds.weight)) {
    if (!bar.d(bar.d(w)).empty()) throw Error(ErrorCode::InvalidInputData, "brackets are not a Leibniz_infty algebra");
  }

  const FreeEnvelope& env = out.envelope;
  out.sym_basis = env.all_monomials();
  const auto pos = positions(out.sym_basis);
  const std::size_t n = out.sym_basis.size();
  out.codifferential = Matrix(n, n);
  for (std::size_t col = 0; col < n; ++col) {
    const WordCombination x = env.phi_inverse(env.psi({{out.sym_basis[col], Rational(1)}}));
    const MonomialCombination c = env.psi_inverse(env.phi(bar.d(x)));
    for (const auto& [m, v] : c) {
      auto it = pos.find(m);
      if (it == pos.end()) throw Error(ErrorCode::TruncationOverflow, "transferred codifferential leaves the truncation");
      out.codifferential(it->second, col) = v;
    }
  }

  const LyndonBasis& lb = env.basis();
  out.brackets = GradedFamily(lb.space(), 1);
  std::map<std::size_t, MultilinearMap> comps;
  for (std::size_t col = 0; col < n; ++col) {
    const Monomial& s = out.sym_basis[col];
    if (s.size() > bounds.arity) continue;
    std::vector<std::pair<std::size_t, Rational>> vals;
    for (std::size_t j = 0; j < lb.size(); ++j) {
      const Rational& v = out.codifferential(pos.at(Monomial{j}), col);
      if (v != 0) vals.emplace_back(j, v);
    }
    if (vals.empty()) continue;
    auto it = comps.try_emplace(s.size(), MultilinearMap::on_space(lb.size(), s.size())).first;
    spread_symmetric(env, s, vals, it->second);
  }
  for (const auto& [k, m] : comps) out.brackets.add(m);
  return out;
}

Matrix linf_codifferential(const FreeEnvelope& env, const GradedFamily& brackets, const std::vector<Monomial>& sym_basis) {
  const auto pos = positions(sym_basis);
  Matrix d(sym_basis.size(), sym_basis.size());
  for (std::size_t col = 0; col < sym_basis.size(); ++col) {
    const Monomial& s = sym_basis[col];
    const std::size_t n = s.size();
    std::vector<int> deg(n);
    for (std::size_t a = 0; a < n; ++a) deg[a] = env.basis().element(s[a]).degree;
    for (const auto& [i, li] : brackets.components()) {
      if (i == 0 || i > n) continue;
      for (const auto& sh : shuffles(i, n - i)) {
        const int eps = koszul_sign(sh.perm, deg);
        Tuple in;
        for (std::size_t a = 0; a < i; ++a) in.push_back(static_cast<Index>(s[sh.perm[a]]));
        const Vector val = li.value(in);
        for (std::size_t j = 0; j < val.size(); ++j) {
          if (val[j] == 0) continue;
          std::vector<std::size_t> ids{j};
          for (std::size_t a = i; a < n; ++a) ids.push_back(s[sh.perm[a]]);
          const auto [sg, m] = env.normalize(ids);
          if (sg == 0) continue;
          auto it = pos.find(m);
          if (it == pos.end()) throw Error(ErrorCode::TruncationOverflow, "coderivation leaves the truncation");
          d(it->second, col) += Rational(eps * sg) * val[j];
        }
      }
    }
  }
  return d;
}

// ---------------------------------------------------------------- morphisms

LeibnizInfMorphism strict_morphism(const GradedVectorSpace& source, const GradedVectorSpace& target, const Matrix& f1) {
  if (f1.rows() != target.dim() || f1.cols() != source.dim())
    throw Error(ErrorCode::DimensionMismatch, "linear part has the wrong shape");
  LeibnizInfMorphism f{source, target, {}};
  MultilinearMap m({source.dim()}, target.dim());
  for (std::size_t r = 0; r < f1.rows(); ++r)
    for (std::size_t c = 0; c < f1.cols(); ++c) {
      if (f1(r, c) != 0) m.add({static_cast<Index>(c)}, r, f1(r, c));
    }
  if (!m.is_zero()) f.f.emplace(1, std::move(m));
  check_morphism_shape(f);
  return f;
}

LeibnizInfMorphism identity_morphism(const GradedVectorSpace& space) {
  return strict_morphism(space, space, Matrix::identity(space.dim()));
}

WordCombination bar_morphism(const LeibnizInfMorphism& f, const Tuple& w) {
  WordCombination out;
  const std::size_t n = w.size();
  if (n == 0) return WordCombination{{Tuple{}, Rational(1)}};
  const std::vector<int> deg = letter_degrees(f.source, w);
  std::vector<std::vector<std::size_t>> comps;
  std::vector<std::size_t> cur;
  compositions(n, cur, comps);
  for (const auto& blocks : comps) {
    bool present = true;
    for (auto k : blocks) present = present && f.f.count(k) != 0;
    if (!present) continue;
    for (const auto& sh : e_shuffles(blocks)) {
      WordCombination partial{{Tuple{}, Rational(koszul_sign(sh.perm, deg))}};
      std::size_t off = 0;
      for (auto k : blocks) {
        Tuple in;
        for (std::size_t a = 0; a < k; ++a) in.push_back(w[sh.perm[off + a]]);
        off += k;
        const Vector val = f.f.at(k).value(in);
        WordCombination next;
        for (const auto& [t, c] : partial)
          for (std::size_t j = 0; j < val.size(); ++j) {
            if (val[j] == 0) continue;
            Tuple t2 = t;
            t2.push_back(static_cast<Index>(j));
            next[t2] += c * val[j];
          }
        partial = std::move(next);
      }
      add_to(out, partial);
    }
  }
  std::erase_if(out, [](const auto& e) { return e.second == 0; });
  return out;
}

WordCombination bar_morphism(const LeibnizInfMorphism& f, const WordCombination& x) {
  WordCombination out;
  for (const auto& [w, c] : x) add_to(out, bar_morphism(f, w), c);
  return out;
}

GradedReport check_leibniz_inf_morphism(const GradedFamily& source, const GradedFamily& target,
                                        const LeibnizInfMorphism& f, const TruncationBounds& bounds) {
  if (!(source.space() == f.source) || !(target.space() == f.target))
    throw Error(ErrorCode::DimensionMismatch, "morphism spaces differ from the algebras");
  check_morphism_shape(f);
  const BarConstruction d = bar_construction(source), dp = bar_construction(target);
  GradedReport r;
  r.checked_arity = bounds.weight;
  for (const auto& w : words_up_to(source.dim(), bounds.weight)) {
    WordCombination diff = dp.d(bar_morphism(f, w));
    add_to(diff, bar_morphism(f, d.d(w)), Rational(-1));
    std::erase_if(diff, [](const auto& e) { return e.second == 0; });
    if (diff.empty()) continue;
    Vector v = zero_vector(target.dim());
    for (const auto& [t, c] : diff) {
      if (t.size() == 1) v[t[0]] += c;
    }
    r.fail({"leibniz_inf_morphism", w, v});
  }
  return r;
}

LeibnizInfMorphism compose(const LeibnizInfMorphism& g, const LeibnizInfMorphism& f, std::size_t max_arity) {
  if (!(g.source == f.target)) throw Error(ErrorCode::DimensionMismatch, "morphisms are not composable");
  LeibnizInfMorphism out{f.source, g.target, {}};
  for (std::size_t k = 1; k <= max_arity; ++k) {
    MultilinearMap m(std::vector<std::size_t>(k, f.source.dim()), g.target.dim());
    for (const auto& w : enumerate_basis(f.source.dim(), k, TupleKind::Tensor)) {
      for (const auto& [t, c] : bar_morphism(g, bar_morphism(f, w))) {
        if (t.size() == 1) m.add(w, t[0], c);
      }
    }
    if (!m.is_zero()) out.f.emplace(k, std::move(m));
  }
  return out;
}

KsMorphism ks_morphism(const KsTransfer& source, const KsTransfer& target, const LeibnizInfMorphism& f,
                       const TruncationBounds& bounds) {
  const std::size_t W = source.envelope.weight_bound();
  if (target.envelope.weight_bound() != W) throw Error(ErrorCode::InvalidInputData, "transfers use different weights");
  if (!check_leibniz_inf_morphism(source.theta, target.theta, f, {bounds.arity, W}).ok)
    throw Error(ErrorCode::NotAHomomorphism, "components do not form a Leibniz_infty homomorphism");

  const FreeEnvelope& se = source.envelope;
  const FreeEnvelope& te = target.envelope;
  const auto tpos = positions(target.sym_basis);
  KsMorphism out;
  out.matrix = Matrix(target.sym_basis.size(), source.sym_basis.size());
  for (std::size_t col = 0; col < source.sym_basis.size(); ++col) {
    const WordCombination x = se.phi_inverse(se.psi({{source.sym_basis[col], Rational(1)}}));
    for (const auto& [m, v] : te.psi_inverse(te.phi(bar_morphism(f, x)))) {
      auto it = tpos.find(m);
      if (it == tpos.end()) throw Error(ErrorCode::TruncationOverflow, "morphism leaves the truncation");
      out.matrix(it->second, col) = v;
    }
  }
  if (!(target.codifferential * out.matrix == out.matrix * source.codifferential))
    throw std::logic_error("transferred morphism does not intertwine the codifferentials");

  const std::size_t dl = te.basis().size();
  for (std::size_t col = 0; col < source.sym_basis.size(); ++col) {
    const Monomial& s = source.sym_basis[col];
    if (s.size() > bounds.arity) continue;
    std::vector<std::pair<std::size_t, Rational>> vals;
    for (std::size_t j = 0; j < dl; ++j) {
      const Rational& v = out.matrix(tpos.at(Monomial{j}), col);
      if (v != 0) vals.emplace_back(j, v);
    }
    if (vals.empty()) continue;
    auto it = out.components
                  .try_emplace(s.size(), MultilinearMap(std::vector<std::size_t>(s.size(), se.basis().size()), dl))
                  .first;
    spread_symmetric(se, s, vals, it->second);
  }
  return out;
}

}  // namespace leibten
