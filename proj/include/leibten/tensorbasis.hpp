#ifndef LEIBTEN_TENSORBASIS_HPP
#define LEIBTEN_TENSORBASIS_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace leibten {

using Index = std::uint32_t;
using Tuple = std::vector<Index>;

struct SpaceLabel {
  std::string name;
  std::size_t dim = 0;
};

enum class TupleKind { Tensor, Wedge, Mixed };

// Tensor: all of [0,dim)^n. Wedge: strictly increasing n-tuples.
// Mixed: strictly increasing (n-1)-prefix over [0,dim) followed by one
// index in [0,dim_v). Lexicographic in every case.
std::vector<Tuple> enumerate_basis(std::size_t dim, std::size_t n, TupleKind kind, std::size_t dim_v = 0);

// Lexicographic product over slots of the given sizes.
std::vector<Tuple> enumerate_product(const std::vector<std::size_t>& slot_dims);

// Position of a tensor tuple in enumerate_basis(dim, n, Tensor).
std::size_t tensor_index(const Tuple& t, std::size_t dim);

std::size_t binomial(std::size_t n, std::size_t k);

// Zero-based permutation: position a holds the original index perm[a],
// i.e. perm[a] = sigma(a+1) - 1.
struct Shuffle {
  std::vector<std::size_t> perm;
  int sign = 1;
};

int permutation_sign(const std::vector<std::size_t>& perm);

// All (p,q)-shuffles with ungraded permutation signs, in lexicographic
// order of the first run. Results are cached.
const std::vector<Shuffle>& shuffles(std::size_t p, std::size_t q);

// All (k_1,...,k_m)-shuffles: increasing within each block.
std::vector<Shuffle> block_shuffles(const std::vector<std::size_t>& blocks);

// Block shuffles whose block maxima increase: sigma(k_1) < sigma(k_1+k_2) < ...
std::vector<Shuffle> e_shuffles(const std::vector<std::size_t>& blocks);

// epsilon(sigma; v_1..v_n) with v_1...v_n = epsilon v_sigma(1)...v_sigma(n)
// in the graded-symmetric algebra; degrees[i] is the degree of v_{i+1}.
int koszul_sign(const std::vector<std::size_t>& perm, const std::vector<int>& degrees);

}  // namespace leibten

#endif
