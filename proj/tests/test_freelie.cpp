#include <random>

#include "doctest.h"
#include "leibten/error.hpp"
#include "leibten/freelie.hpp"
#include "suite.hpp"

using namespace leibten;

namespace {

GradedVectorSpace odd_letters(std::size_t n) { return GradedVectorSpace::concentrated(-1, n); }

std::size_t witt(std::size_t letters, std::size_t n) {
  auto mobius = [](std::size_t d) {
    int m = 1;
    for (std::size_t p = 2; p * p <= d; ++p) {
      if (d % p != 0) continue;
      d /= p;
      if (d % p == 0) return 0;
      m = -m;
    }
    return d > 1 ? -m : m;
  };
  long long s = 0;
  for (std::size_t d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    long long p = 1;
    for (std::size_t e = 0; e < n / d; ++e) p *= static_cast<long long>(letters);
    s += mobius(d) * p;
  }
  return static_cast<std::size_t>(s / static_cast<long long>(n));
}

GradedFamily aa_b() { return encode_classical(leibten::leibniz_aa_b().bracket); }

GradedFamily zero_family(const GradedVectorSpace& sp) { return GradedFamily(sp, 1); }

// x in degree -2, y in degree -1, theta_1 x = y.
GradedFamily graded_differential() {
  GradedVectorSpace sp{{-2, -1}};
  GradedFamily f(sp, 1);
  f.add_entry({0}, 1, Rational(1));
  return f;
}

MonomialCombination letter(std::size_t i) { return {{Monomial{i}, Rational(1)}}; }

bool is_primitive(const GradedVectorSpace& alphabet, const WordCombination& x) {
  WordTensor acc;
  for (const auto& [w, c] : x) add_to(acc, coshuffle_coproduct(alphabet, w), c);
  WordTensor expected;
  for (const auto& [w, c] : x) {
    add_to(expected, WordTensor{{{Tuple{}, w}, c}});
    add_to(expected, WordTensor{{{w, Tuple{}}, c}});
  }
  return acc == expected;
}

MonomialTensor tensor_coproduct(const FreeEnvelope& env, const MonomialCombination& u) {
  MonomialTensor out;
  for (const auto& [m, c] : u)
    for (const auto& [lr, v] : env.coproduct(m)) out[lr] += c * v;
  std::erase_if(out, [](const auto& e) { return e.second == 0; });
  return out;
}

void check_transfer(const KsTransfer& k, const TruncationBounds& b) {
  CHECK((k.codifferential * k.codifferential).is_zero());
  const GradedReport r = check_linf(k.brackets, b, k.weights());
  CHECK(r.ok);
  if (!r.ok) MESSAGE(r.violations.front().identity);
}

}  // namespace

TEST_CASE("Lyndon basis small cases") {
  const LyndonBasis two = lyndon_basis(GradedVectorSpace::concentrated(0, 2), 3);
  CHECK(two.of_weight(1).size() == 2);
  CHECK(two.of_weight(2).size() == 1);
  CHECK(two.of_weight(3).size() == 2);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < two.size(); ++i) names.push_back(two.word_name(i));
  CHECK(names == std::vector<std::string>{"a", "b", "ab", "aab", "abb"});
  CHECK(two.bracket_name(3) == "[a,[a,b]]");
  CHECK(two.bracket_name(4) == "[[a,b],b]");

  CHECK(lyndon_basis(GradedVectorSpace::concentrated(0, 1), 2).of_weight(2).empty());
  const LyndonBasis odd1 = lyndon_basis(odd_letters(1), 2);
  CHECK(odd1.of_weight(2).size() == 1);
  CHECK(odd1.bracket_name(1) == "[a,a]");
  CHECK(odd1.tensor(1) == WordCombination{{Tuple{0, 0}, Rational(2)}});
  CHECK_THROWS_AS(lyndon_basis(odd_letters(4), 2), Error);
  CHECK_THROWS_AS(lyndon_basis(odd_letters(2), 5), Error);
}

TEST_CASE("Lyndon dimensions match Witt and the primitive elements") {
  for (std::size_t n = 1; n <= 3; ++n) {
    const LyndonBasis b = lyndon_basis(GradedVectorSpace::concentrated(0, n), 4);
    for (std::size_t w = 1; w <= 4; ++w) CHECK(b.of_weight(w).size() == witt(n, w));
  }
  const std::vector<GradedVectorSpace> alphabets = {odd_letters(1), odd_letters(2), odd_letters(3),
                                                    GradedVectorSpace{{-1, 0}}, GradedVectorSpace{{0, 1, 2}},
                                                    GradedVectorSpace{{-2, -1}}};
  for (const auto& a : alphabets) {
    const LyndonBasis b = lyndon_basis(a, 4);
    for (std::size_t w = 1; w <= 4; ++w) {
      CAPTURE(w);
      CHECK(b.of_weight(w).size() == primitive_dimension(a, w));
    }
    for (std::size_t i = 0; i < b.size(); ++i) CHECK(is_primitive(a, b.tensor(i)));
  }
}

TEST_CASE("bracket rewriting in the Lyndon basis") {
  std::mt19937 rng(3);
  for (const auto& a : {GradedVectorSpace::concentrated(0, 2), odd_letters(2), GradedVectorSpace{{-1, 0, 0}}}) {
    const LyndonBasis b = lyndon_basis(a, 4);
    auto tensor_of = [&](const SparseVector& v) {
      WordCombination t;
      for (const auto& [i, c] : v) add_to(t, b.tensor(i), c);
      return t;
    };
    std::uniform_int_distribution<std::size_t> pick(0, b.size() - 1);
    for (int trial = 0; trial < 40; ++trial) {
      const std::size_t i = pick(rng), j = pick(rng);
      if (b.element(i).weight + b.element(j).weight > 4) continue;
      const SparseVector ij = b.bracket(i, j), ji = b.bracket(j, i);
      CHECK(tensor_of(ij) == graded_commutator(a, b.tensor(i), b.tensor(j)));
      // [y,x] = -(-1)^{|x||y|} [x,y]
      const int s = parity_sign(static_cast<long long>(b.element(i).degree) * b.element(j).degree);
      SparseVector expected;
      for (const auto& [k, c] : ij) expected[k] = Rational(-s) * c;
      CHECK(ji == expected);
    }
    CHECK_THROWS_AS(b.express({{Tuple{0, 1}, Rational(1)}}), Error);
  }
}

TEST_CASE("Phi is a bialgebra isomorphism onto the PBW basis") {
  const LyndonBasis b = lyndon_basis(GradedVectorSpace::concentrated(0, 2), 3);
  const FreeEnvelope env(b);
  const std::size_t ab = b.find("ab");
  CHECK(env.phi({{Tuple{0}, Rational(1)}}) == letter(0));
  CHECK(env.phi({{Tuple{0, 1}, Rational(1)}}) == MonomialCombination{{Monomial{0, 1}, Rational(1)}});
  // b*a = a*b - [a,b]
  CHECK(env.phi({{Tuple{1, 0}, Rational(1)}}) ==
        MonomialCombination{{Monomial{0, 1}, Rational(1)}, {Monomial{ab}, Rational(-1)}});
  MonomialCombination comm = env.product(letter(0), letter(1));
  for (const auto& [m, c] : env.product(letter(1), letter(0))) comm[m] -= c;
  std::erase_if(comm, [](const auto& e) { return e.second == 0; });
  CHECK(comm == letter(ab));

  for (const auto& a : {GradedVectorSpace::concentrated(0, 2), odd_letters(2), GradedVectorSpace{{-1, 0}}}) {
    const FreeEnvelope e(lyndon_basis(a, 3));
    for (std::size_t n = 1; n <= 3; ++n) CHECK(e.monomials(n).size() == (n == 1 ? 2u : n == 2 ? 4u : 8u));
    for (const auto& w : words_up_to(2, 3)) {
      const WordCombination x{{w, Rational(1)}};
      CHECK(e.phi_inverse(e.phi(x)) == x);
      // Delta_U(Phi w) = (Phi (x) Phi) Delta^cosh(w)
      MonomialTensor rhs;
      for (const auto& [lr, c] : coshuffle_coproduct(a, w))
        for (const auto& [ml, cl] : e.phi({{lr.first, Rational(1)}}))
          for (const auto& [mr, cr] : e.phi({{lr.second, Rational(1)}})) rhs[{ml, mr}] += c * cl * cr;
      std::erase_if(rhs, [](const auto& v) { return v.second == 0; });
      CHECK(tensor_coproduct(e, e.phi(x)) == rhs);
    }
    for (const auto& u : words_up_to(2, 2))
      for (const auto& v : words_up_to(2, 1)) {
        Tuple uv = u;
        uv.insert(uv.end(), v.begin(), v.end());
        CHECK(e.phi({{uv, Rational(1)}}) == e.product(e.phi({{u, Rational(1)}}), e.phi({{v, Rational(1)}})));
      }
  }
}

TEST_CASE("Psi symmetrization") {
  const FreeEnvelope env(lyndon_basis(GradedVectorSpace::concentrated(0, 2), 3));
  CHECK(env.psi(letter(1)) == letter(1));
  MonomialCombination half;
  for (const auto& [m, c] : env.product(letter(0), letter(1))) half[m] += c / 2;
  for (const auto& [m, c] : env.product(letter(1), letter(0))) half[m] += c / 2;
  std::erase_if(half, [](const auto& e) { return e.second == 0; });
  CHECK(env.psi({{Monomial{0, 1}, Rational(1)}}) == half);

  for (const auto& a : {GradedVectorSpace::concentrated(0, 2), odd_letters(2), GradedVectorSpace{{-1, 0, 0}}}) {
    const FreeEnvelope e(lyndon_basis(a, 3));
    CHECK(e.normalize({1, 0}).second == Monomial{0, 1});
    for (const auto& s : e.all_monomials()) {
      const MonomialCombination x{{s, Rational(1)}};
      CHECK(e.psi_inverse(e.psi(x)) == x);
      // Psi is a coalgebra map for the unshuffle coproduct on S.
      MonomialTensor rhs;
      for (const auto& [lr, c] : e.coproduct(s))
        for (const auto& [ml, cl] : e.psi({{lr.first, Rational(1)}}))
          for (const auto& [mr, cr] : e.psi({{lr.second, Rational(1)}})) rhs[{ml, mr}] += c * cl * cr;
      std::erase_if(rhs, [](const auto& v) { return v.second == 0; });
      CHECK(tensor_coproduct(e, e.psi(x)) == rhs);
    }
  }
  const FreeEnvelope odd(lyndon_basis(odd_letters(2), 2));
  CHECK(odd.normalize({1, 0}).first == -1);
  CHECK(odd.normalize({0, 0}).first == 0);
}

TEST_CASE("transfer of abelian and Lie algebras") {
  const TruncationBounds b{3, 3};
  const KsTransfer ab = ks_transfer(zero_family(odd_letters(2)), b);
  CHECK(ab.brackets.is_zero());
  CHECK(ab.codifferential.is_zero());

  for (const LieAlgebra& g : {heisenberg(), leibten::testing::sl2(), leibten::testing::affine2()}) {
    const KsTransfer k = ks_transfer(encode_classical(g.bracket), b);
    check_transfer(k, b);
    const MultilinearMap l2 = k.brackets.component(2);
    for (Index i = 0; i < g.dim(); ++i)
      for (Index j = 0; j < g.dim(); ++j)
        for (std::size_t o = 0; o < g.dim(); ++o) CHECK(l2.coeff({i, j}, o) == g.bracket.coeff({i, j}, o));
    // Brackets of arity >= W regenerate the whole codifferential.
    CHECK(linf_codifferential(k.envelope, k.brackets, k.sym_basis) == k.codifferential);
  }
}

TEST_CASE("transfer of non-Lie Leibniz data") {
  const TruncationBounds b{3, 3};
  const KsTransfer k = ks_transfer(aa_b(), b);
  check_transfer(k, b);
  const LyndonBasis& lb = k.envelope.basis();
  const std::size_t aa = lb.find("aa");
  // l_1 [a,a] = 2 theta_2(a,a).
  CHECK(k.brackets.component(1).value({static_cast<Index>(aa)}) == Vector{0, 2, 0, 0, 0, 0, 0});
  // Psi(a.[a,a]) = 2aaa, d(aaa) = ba and 2ba = [a,b] - 2 Psi(a.b): the output lands in weight 2.
  const std::size_t ab = lb.find("ab");
  Vector expected = zero_vector(lb.size());
  expected[ab] = 1;
  CHECK(k.brackets.component(2).value({0, static_cast<Index>(aa)}) == expected);
  CHECK(k.brackets.component(2).value({static_cast<Index>(aa), 0}) == expected);
  CHECK(linf_codifferential(k.envelope, k.brackets, k.sym_basis) == k.codifferential);

  const KsTransfer dg = ks_transfer(graded_differential(), {3, 4});
  check_transfer(dg, {3, 4});
  CHECK(linf_codifferential(dg.envelope, dg.brackets, dg.sym_basis) ==
        linf_codifferential(dg.envelope, dg.brackets.truncated(4), dg.sym_basis));

  CHECK_THROWS_AS(ks_transfer(encode_classical(leibten::testing::affine2().bracket), {5, 3}), Error);
  MultilinearMap bad = MultilinearMap::on_space(2, 2);
  bad.add({0, 0}, 0, 1);
  bad.add({0, 0}, 1, 1);
  bad.add({0, 1}, 1, 1);
  CHECK_THROWS_AS(ks_transfer(encode_classical(bad), b), Error);
}

TEST_CASE("Kotov-Strobl of an embedding tensor antisymmetrizes the Leibniz bracket") {
  const TruncationBounds b{3, 3};
  for (const auto& nt : leibten::testing::builtin_examples()) {
    const LieLeibnizTriple& t = nt.triple;
    if (t.dim_v() == 0 || t.dim_v() > 3) continue;
    CAPTURE(nt.name);
    HomotopyET h{GradedVectorSpace::concentrated(-1, t.dim_g()), GradedVectorSpace::concentrated(-1, t.dim_v()), {}};
    MultilinearMap tm({t.dim_v()}, t.dim_g());
    for (std::size_t o = 0; o < t.dim_g(); ++o)
      for (std::size_t v = 0; v < t.dim_v(); ++v) tm.add({static_cast<Index>(v)}, o, t.T(o, v));
    h.theta.emplace(1, tm);
    const GradedFamily theta =
        induced_leibniz_inf(h, encode_classical(t.g.bracket), {{2, t.rho.as_map()}}, {4, 3});
    const KsTransfer k = ks_transfer(theta, b);
    check_transfer(k, b);
    const MultilinearMap l2 = k.brackets.component(2);
    const std::size_t dv = t.dim_v();
    for (Index u = 0; u < dv; ++u)
      for (Index v = 0; v < dv; ++v) {
        const Vector tv = t.apply_T(basis_vector(dv, v)), tu = t.apply_T(basis_vector(dv, u));
        const Vector uv = t.rho.act(tu, basis_vector(dv, v)), vu = t.rho.act(tv, basis_vector(dv, u));
        for (std::size_t o = 0; o < dv; ++o) CHECK(l2.coeff({u, v}, o) == (uv[o] - vu[o]) / 2);
      }
  }
}

TEST_CASE("Kotov-Strobl morphisms") {
  const TruncationBounds b{3, 3};
  const GradedVectorSpace two = odd_letters(2);
  const KsTransfer k = ks_transfer(aa_b(), b);

  const KsMorphism id = ks_morphism(k, k, identity_morphism(two), b);
  CHECK(id.matrix == Matrix::identity(k.sym_basis.size()));
  CHECK(id.components.size() == 1);
  MultilinearMap ident = MultilinearMap::on_space(k.envelope.basis().size(), 1);
  for (Index i = 0; i < k.envelope.basis().size(); ++i) ident.add({i}, i, 1);
  CHECK(id.components.at(1) == ident);

  // a -> 2a, b -> 4b and a -> 3a, b -> 9b are automorphisms of [a,a] = b.
  auto scaling = [&](int s) {
    Matrix f(2, 2);
    f(0, 0) = s;
    f(1, 1) = s * s;
    return strict_morphism(two, two, f);
  };
  const LeibnizInfMorphism f = scaling(2), g = scaling(3);
  CHECK(check_strict_homomorphism(aa_b(), aa_b(), Matrix{2, 2, {2, 0, 0, 4}}, b).ok);
  CHECK(check_leibniz_inf_morphism(aa_b(), aa_b(), f, b).ok);
  CHECK(ks_morphism(k, k, compose(g, f, 3), b).matrix == ks_morphism(k, k, g, b).matrix * ks_morphism(k, k, f, b).matrix);
  CHECK_FALSE(check_leibniz_inf_morphism(aa_b(), aa_b(), strict_morphism(two, two, Matrix{2, 2, {1, 0, 0, 2}}), b).ok);
  CHECK_THROWS_AS(ks_morphism(k, k, strict_morphism(two, two, Matrix{2, 2, {1, 0, 0, 2}}), b), Error);

  // Abelian graded data admits non-strict morphisms.
  const GradedVectorSpace sp{{-1, -1, -2}};
  const KsTransfer z = ks_transfer(zero_family(sp), b);
  auto random_morphism = [&](unsigned seed) {
    Matrix f1 = leibten::testing::random_matrix(3, 3, seed);
    for (const auto& [r, c] : std::vector<std::pair<std::size_t, std::size_t>>{{0, 2}, {1, 2}, {2, 0}, {2, 1}})
      f1(r, c) = 0;
    LeibnizInfMorphism m = strict_morphism(sp, sp, f1);
    MultilinearMap f2 = MultilinearMap::on_space(3, 2);
    f2.add({0, 1}, 2, Rational(static_cast<int>(seed % 5) - 2));
    f2.add({1, 0}, 2, Rational(1));
    f2.add({0, 0}, 2, Rational(static_cast<int>(seed % 3)));
    m.f.emplace(2, f2);
    return m;
  };
  const LeibnizInfMorphism p = random_morphism(5), q = random_morphism(8);
  CHECK(check_leibniz_inf_morphism(zero_family(sp), zero_family(sp), p, b).ok);
  const KsMorphism kp = ks_morphism(z, z, p, b), kq = ks_morphism(z, z, q, b);
  CHECK(kp.components.count(2) == 1);
  CHECK(ks_morphism(z, z, compose(q, p, 3), b).matrix == kq.matrix * kp.matrix);

  // An isomorphism of abelian data acts on Lie(lambda) by substitution.
  const Matrix f1{2, 2, {1, 1, 0, 1}};
  const KsTransfer za = ks_transfer(zero_family(two), b);
  const KsMorphism kf = ks_morphism(za, za, strict_morphism(two, two, f1), b);
  const LyndonBasis& lb = za.envelope.basis();
  for (std::size_t i = 0; i < lb.size(); ++i) {
    WordCombination image;
    for (const auto& [w, c] : lb.tensor(i)) {
      WordCombination term{{Tuple{}, c}};
      for (auto l : w) {
        WordCombination col;
        for (std::size_t r = 0; r < 2; ++r)
          if (f1(r, l) != 0) col[Tuple{static_cast<Index>(r)}] = f1(r, l);
        term = concat(term, col);
      }
      add_to(image, term);
    }
    std::erase_if(image, [](const auto& e) { return e.second == 0; });
    CHECK(kf.components.at(1).value({static_cast<Index>(i)}) == to_dense(lb.express(image), lb.size()));
  }
}
