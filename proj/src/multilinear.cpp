#include "leibten/multilinear.hpp"

#include <utility>

#include "leibten/error.hpp"

namespace leibten {

MultilinearMap::MultilinearMap(std::vector<std::size_t> domain, std::size_t codomain)
    : domain_(std::move(domain)), codomain_(codomain) {}

MultilinearMap MultilinearMap::on_space(std::size_t dim, std::size_t arity) {
  return MultilinearMap(std::vector<std::size_t>(arity, dim), dim);
}

void MultilinearMap::check_tuple(const Tuple& in, std::size_t out) const {
  if (in.size() != domain_.size()) throw Error(ErrorCode::DimensionMismatch, "tuple arity mismatch");
  for (std::size_t i = 0; i < in.size(); ++i) {
    if (in[i] >= domain_[i]) throw Error(ErrorCode::DimensionMismatch, "tuple index out of range");
  }
  if (out >= codomain_) throw Error(ErrorCode::DimensionMismatch, "output index out of range");
}

void MultilinearMap::add(const Tuple& in, std::size_t out, const Rational& c) {
  if (c == 0) return;
  check_tuple(in, out);
  Tuple key = in;
  key.push_back(static_cast<Index>(out));
  add_key(std::move(key), c);
}

void MultilinearMap::add_key(Tuple key, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = table_.try_emplace(std::move(key), c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) table_.erase(it);
  }
}

Rational MultilinearMap::coeff(const Tuple& in, std::size_t out) const {
  Tuple key = in;
  key.push_back(static_cast<Index>(out));
  auto it = table_.find(key);
  return it == table_.end() ? Rational(0) : it->second;
}

Vector MultilinearMap::value(const Tuple& in) const {
  Vector out = zero_vector(codomain_);
  Tuple lo = in;
  lo.push_back(0);
  for (auto it = table_.lower_bound(lo); it != table_.end(); ++it) {
    if (!std::equal(in.begin(), in.end(), it->first.begin())) break;
    out[it->first.back()] = it->second;
  }
  return out;
}

Vector MultilinearMap::evaluate(const std::vector<Vector>& args) const {
  if (args.size() != arity()) throw Error(ErrorCode::DimensionMismatch, "evaluate arity mismatch");
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i].size() != domain_[i]) throw Error(ErrorCode::DimensionMismatch, "argument length mismatch");
  }
  Vector out = zero_vector(codomain_);
  const Tuple* last = nullptr;
  Rational prod;
  for (const auto& [key, c] : table_) {
    const bool same = last != nullptr && std::equal(key.begin(), key.end() - 1, last->begin());
    if (!same) {
      prod = 1;
      for (std::size_t i = 0; i < args.size() && prod != 0; ++i) prod *= args[i][key[i]];
      last = &key;
    }
    if (prod != 0) out[key.back()] += prod * c;
  }
  return out;
}

MultilinearMap& MultilinearMap::operator+=(const MultilinearMap& other) {
  if (domain_ != other.domain_ || codomain_ != other.codomain_) {
    throw Error(ErrorCode::DimensionMismatch, "sum of maps with different signatures");
  }
  for (const auto& [k, c] : other.table_) add_key(k, c);
  return *this;
}

MultilinearMap& MultilinearMap::operator-=(const MultilinearMap& other) {
  if (domain_ != other.domain_ || codomain_ != other.codomain_) {
    throw Error(ErrorCode::DimensionMismatch, "difference of maps with different signatures");
  }
  for (const auto& [k, c] : other.table_) add_key(k, -c);
  return *this;
}

MultilinearMap& MultilinearMap::operator*=(const Rational& s) {
  if (s == 0) {
    table_.clear();
    return *this;
  }
  for (auto& [k, c] : table_) c *= s;
  return *this;
}

MultilinearMap operator+(MultilinearMap a, const MultilinearMap& b) { return a += b; }
MultilinearMap operator-(MultilinearMap a, const MultilinearMap& b) { return a -= b; }
MultilinearMap operator*(const Rational& s, MultilinearMap a) { return a *= s; }

std::size_t common_dimension(const MultilinearMap& m) {
  for (auto d : m.domain()) {
    if (d != m.codomain()) throw Error(ErrorCode::DimensionMismatch, "map is not on a single space");
  }
  return m.codomain();
}

MultilinearMap compose_at(const MultilinearMap& P, const MultilinearMap& Q, std::size_t k) {
  const std::size_t n = common_dimension(P);
  if (common_dimension(Q) != n) throw Error(ErrorCode::DimensionMismatch, "maps live on different spaces");
  if (P.arity() == 0 || Q.arity() == 0) throw Error(ErrorCode::SlotOutOfRange, "arity-0 maps have no slots");
  if (k < 1 || k > P.arity()) throw Error(ErrorCode::SlotOutOfRange, "slot index out of range");
  const std::size_t p = P.arity() - 1;
  const std::size_t q = Q.arity() - 1;
  MultilinearMap out = MultilinearMap::on_space(n, p + q + 1);
  if (P.is_zero() || Q.is_zero()) return out;

  // P entries bucketed by the index sitting in slot k.
  std::vector<std::vector<const MultilinearMap::Table::value_type*>> bucket(n);
  for (const auto& e : P.table()) bucket[e.first[k - 1]].push_back(&e);

  const int base = parity_sign(static_cast<long long>((k - 1) * q));
  const auto& sh = shuffles(k - 1, q);
  Tuple key(p + q + 2);
  for (const auto& [tq, cq] : Q.table()) {
    const Index oq = tq.back();
    for (const auto* pe : bucket[oq]) {
      const Tuple& tp = pe->first;
      const Rational c = cq * pe->second;
      for (const auto& s : sh) {
        for (std::size_t a = 0; a + 1 < k; ++a) key[s.perm[a]] = tp[a];
        for (std::size_t b = 0; b < q; ++b) key[s.perm[k - 1 + b]] = tq[b];
        key[k + q - 1] = tq[q];
        for (std::size_t r = k; r <= p; ++r) key[q + r] = tp[r];
        key[p + q + 1] = tp.back();
        out.add_key(key, (base * s.sign > 0) ? c : Rational(-c));
      }
    }
  }
  return out;
}

MultilinearMap circle(const MultilinearMap& P, const MultilinearMap& Q) {
  const std::size_t n = common_dimension(P);
  MultilinearMap out = MultilinearMap::on_space(n, P.arity() + Q.arity() - 1);
  for (std::size_t k = 1; k <= P.arity(); ++k) out += compose_at(P, Q, k);
  return out;
}

MultilinearMap balavoine(const MultilinearMap& P, const MultilinearMap& Q) {
  const std::size_t p = P.arity() - 1;
  const std::size_t q = Q.arity() - 1;
  MultilinearMap out = circle(P, Q);
  MultilinearMap back = circle(Q, P);
  if ((p * q) % 2 == 0) {
    out -= back;
  } else {
    out += back;
  }
  return out;
}

MultilinearMap horizontal_lift(const MultilinearMap& f, const std::vector<Block>& signature, Block out,
                               const SumLayout& layout) {
  if (signature.size() != f.arity()) throw Error(ErrorCode::SignatureMismatch, "signature length differs from arity");
  for (std::size_t i = 0; i < signature.size(); ++i) {
    if (f.domain()[i] != layout.dim_of(signature[i])) {
      throw Error(ErrorCode::SignatureMismatch, "slot dimension does not match its block");
    }
  }
  if (f.codomain() != layout.dim_of(out)) throw Error(ErrorCode::SignatureMismatch, "codomain does not match block");
  MultilinearMap lifted = MultilinearMap::on_space(layout.dim(), f.arity());
  for (const auto& [key, c] : f.table()) {
    Tuple k2 = key;
    for (std::size_t i = 0; i < signature.size(); ++i) k2[i] += static_cast<Index>(layout.offset(signature[i]));
    k2.back() += static_cast<Index>(layout.offset(out));
    lifted.add_key(std::move(k2), c);
  }
  return lifted;
}

namespace {

Block block_of(Index i, const SumLayout& layout) { return i < layout.dg ? Block::G : Block::V; }

}  // namespace

MultilinearMap restrict_block(const MultilinearMap& F, const std::vector<Block>& signature, Block out,
                              const SumLayout& layout) {
  if (signature.size() != F.arity()) throw Error(ErrorCode::SignatureMismatch, "signature length differs from arity");
  std::vector<std::size_t> dom;
  for (auto b : signature) dom.push_back(layout.dim_of(b));
  MultilinearMap r(dom, layout.dim_of(out));
  for (const auto& [key, c] : F.table()) {
    bool match = block_of(key.back(), layout) == out;
    for (std::size_t i = 0; i < signature.size() && match; ++i) match = block_of(key[i], layout) == signature[i];
    if (!match) continue;
    Tuple k2 = key;
    for (std::size_t i = 0; i < signature.size(); ++i) k2[i] -= static_cast<Index>(layout.offset(signature[i]));
    k2.back() -= static_cast<Index>(layout.offset(out));
    r.add_key(std::move(k2), c);
  }
  return r;
}

bool supported_on(const MultilinearMap& F, const std::vector<std::pair<std::vector<Block>, Block>>& allowed,
                  const SumLayout& layout) {
  for (const auto& [key, c] : F.table()) {
    bool ok = false;
    for (const auto& [sig, out] : allowed) {
      if (sig.size() != F.arity() || block_of(key.back(), layout) != out) continue;
      bool m = true;
      for (std::size_t i = 0; i < sig.size() && m; ++i) m = block_of(key[i], layout) == sig[i];
      if (m) {
        ok = true;
        break;
      }
    }
    if (!ok) return false;
  }
  return true;
}

MultilinearMap hemisemidirect(const MultilinearMap& mu, const MultilinearMap& rho) {
  if (mu.arity() != 2 || rho.arity() != 2) throw Error(ErrorCode::DimensionMismatch, "mu and rho must be binary");
  const SumLayout layout{mu.codomain(), rho.codomain()};
  return horizontal_lift(mu, {Block::G, Block::G}, Block::G, layout) +
         horizontal_lift(rho, {Block::G, Block::V}, Block::V, layout);
}

bool mc_check_leibniz(const MultilinearMap& omega) {
  if (omega.arity() != 2) throw Error(ErrorCode::DimensionMismatch, "omega must be binary");
  return balavoine(omega, omega).is_zero();
}

bool mc_check_lierep(const MultilinearMap& mu, const MultilinearMap& rho) {
  const MultilinearMap h = hemisemidirect(mu, rho);
  return balavoine(h, h).is_zero();
}

}  // namespace leibten
