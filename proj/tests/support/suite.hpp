#ifndef LEIBTEN_TESTS_SUITE_HPP
#define LEIBTEN_TESTS_SUITE_HPP

#include <string>
#include <vector>

#include "leibten/examples.hpp"

namespace leibten::testing {

struct NamedTriple {
  std::string name;
  LieLeibnizTriple triple;
};

// Seeded random valid triples with dim g <= 4 and dim V <= 3.
std::vector<NamedTriple> random_suite(std::size_t count, unsigned seed = 20261016);

// Small built-in examples (everything except so(8)).
std::vector<NamedTriple> builtin_examples();

// The two-dimensional Lie algebra [e1,e2] = e1.
LieAlgebra affine2();
LieAlgebra sl2();

// Random valid coefficient data for a triple: trivial actions with a random frak_t.
TwoTermRep random_trivial_rep(const LieLeibnizTriple& t, std::size_t dh, std::size_t dw, unsigned seed);

Matrix random_matrix(std::size_t rows, std::size_t cols, unsigned seed, int lo = -2, int hi = 2);
Vector random_vector(std::size_t n, unsigned seed, int lo = -2, int hi = 2);
// Dense random multilinear map with entries in [lo, hi].
MultilinearMap random_map(const std::vector<std::size_t>& domain, std::size_t codomain, unsigned seed, int lo = -1,
                          int hi = 1);

// [u,v]_T of the so(8) example written out from its closed form, with V
// ordered as the 28 pairs e_i^e_j (i<j) then the 28 dual pairs.
Vector so8_closed_form(std::size_t u, std::size_t v);

}  // namespace leibten::testing

#endif
