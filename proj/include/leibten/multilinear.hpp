#ifndef LEIBTEN_MULTILINEAR_HPP
#define LEIBTEN_MULTILINEAR_HPP

#include <cstddef>
#include <map>
#include <vector>

#include "leibten/matrix.hpp"
#include "leibten/tensorbasis.hpp"

namespace leibten {

// Multilinear map V_1 x ... x V_k -> U stored as sparse coefficients.
// A table key is the input tuple with the output index appended.
class MultilinearMap {
 public:
  using Table = std::map<Tuple, Rational>;

  MultilinearMap() = default;
  MultilinearMap(std::vector<std::size_t> domain, std::size_t codomain);

  // Map on a single space of dimension dim, arity inputs.
  static MultilinearMap on_space(std::size_t dim, std::size_t arity);

  std::size_t arity() const { return domain_.size(); }
  const std::vector<std::size_t>& domain() const { return domain_; }
  std::size_t codomain() const { return codomain_; }
  const Table& table() const { return table_; }
  std::size_t nnz() const { return table_.size(); }
  bool is_zero() const { return table_.empty(); }

  void add(const Tuple& in, std::size_t out, const Rational& c);
  // Adds using a prebuilt key (input tuple followed by output index).
  void add_key(Tuple key, const Rational& c);
  Rational coeff(const Tuple& in, std::size_t out) const;
  Vector value(const Tuple& in) const;
  // Multilinear evaluation on dense argument vectors.
  Vector evaluate(const std::vector<Vector>& args) const;

  MultilinearMap& operator+=(const MultilinearMap& other);
  MultilinearMap& operator-=(const MultilinearMap& other);
  MultilinearMap& operator*=(const Rational& s);

  friend bool operator==(const MultilinearMap& a, const MultilinearMap& b) = default;

 private:
  void check_tuple(const Tuple& in, std::size_t out) const;

  std::vector<std::size_t> domain_;
  std::size_t codomain_ = 0;
  Table table_;
};

MultilinearMap operator+(MultilinearMap a, const MultilinearMap& b);
MultilinearMap operator-(MultilinearMap a, const MultilinearMap& b);
MultilinearMap operator*(const Rational& s, MultilinearMap a);

// Checks that every slot and the output share one dimension; returns it.
std::size_t common_dimension(const MultilinearMap& m);

// (P o_k Q)(x_1..x_{p+q+1}) = sum over (k-1,q)-shuffles of
// (-1)^{(k-1)q} (-1)^sigma P(x_s(1),..,x_s(k-1), Q(x_s(k),..,x_s(k+q-1), x_{k+q}), x_{k+q+1},..).
// k is 1-based.
MultilinearMap compose_at(const MultilinearMap& P, const MultilinearMap& Q, std::size_t k);

// Sum of compose_at over all slots of P.
MultilinearMap circle(const MultilinearMap& P, const MultilinearMap& Q);

// [P,Q] = P circ Q - (-1)^{pq} Q circ P, p = arity(P) - 1.
MultilinearMap balavoine(const MultilinearMap& P, const MultilinearMap& Q);

enum class Block { G, V };

// Block layout of g (+) V: g occupies [0,dg), V occupies [dg, dg+dv).
struct SumLayout {
  std::size_t dg = 0;
  std::size_t dv = 0;
  std::size_t dim() const { return dg + dv; }
  std::size_t offset(Block b) const { return b == Block::G ? 0 : dg; }
  std::size_t dim_of(Block b) const { return b == Block::G ? dg : dv; }
};

// f-hat: f on the signature's blocks, zero on every other block pattern.
MultilinearMap horizontal_lift(const MultilinearMap& f, const std::vector<Block>& signature, Block out,
                               const SumLayout& layout);

// The component of F on a block signature, as a map between the blocks.
MultilinearMap restrict_block(const MultilinearMap& F, const std::vector<Block>& signature, Block out,
                              const SumLayout& layout);

// Every block pattern with nonzero entries must be in `allowed`.
bool supported_on(const MultilinearMap& F, const std::vector<std::pair<std::vector<Block>, Block>>& allowed,
                  const SumLayout& layout);

// (mu [+] rho)((x,u),(y,v)) = ([x,y], rho(x)v) on g (+) V.
// mu: g x g -> g, rho: g x V -> V.
MultilinearMap hemisemidirect(const MultilinearMap& mu, const MultilinearMap& rho);

// [Omega,Omega]_B = 0.
bool mc_check_leibniz(const MultilinearMap& omega);

// [mu-hat + rho-hat, mu-hat + rho-hat]_B = 0.
bool mc_check_lierep(const MultilinearMap& mu, const MultilinearMap& rho);

}  // namespace leibten

#endif
