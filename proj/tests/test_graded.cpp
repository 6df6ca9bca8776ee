#include <random>

#include "doctest.h"
#include "leibten/error.hpp"
#include "leibten/graded.hpp"
#include "suite.hpp"

using namespace leibten;
using leibten::testing::NamedTriple;

namespace {

std::vector<NamedTriple> suite_and_examples() {
  auto all = leibten::testing::random_suite(20);
  for (auto& e : leibten::testing::builtin_examples()) all.push_back(std::move(e));
  return all;
}

// Random map of the given arity on `space` keeping only entries of map degree `deg`.
MultilinearMap random_homogeneous(const GradedVectorSpace& space, std::size_t arity, int deg, std::mt19937& rng,
                                  int density = 3) {
  std::uniform_int_distribution<int> coin(0, density), val(-2, 2);
  MultilinearMap m = MultilinearMap::on_space(space.dim(), arity);
  for (const auto& t : enumerate_basis(space.dim(), arity, TupleKind::Tensor)) {
    for (std::size_t o = 0; o < space.dim(); ++o) {
      if (space.degree(o) != space.degree_of(t) + deg || coin(rng) != 0) continue;
      m.add(t, o, Rational(val(rng)));
    }
  }
  return m;
}

GradedFamily single(const GradedVectorSpace& space, int deg, const MultilinearMap& m) {
  GradedFamily f(space, deg);
  f.add(m);
  return f;
}

LieAlgebra broken_jacobi() {
  // Antisymmetric, [e1,e2]=e3, [e2,e3]=e1, [e1,e3]=e1: Jacobi fails.
  return lie_from_entries(3, {{0, 1, 2, 1}, {1, 2, 0, 1}, {0, 2, 0, 1}});
}

// L = g (x) Lambda(e1, e2) shifted down by one: element x(x)w sits in degree |w| - 1.
// Index w*dg + a with w in {1, e1, e2, e1e2}.
GradedFamily lambda_dgla(const LieAlgebra& g) {
  const std::size_t dg = g.dim();
  const int wdeg[4] = {0, 1, 1, 2};
  GradedVectorSpace sp;
  for (int w = 0; w < 4; ++w) sp.degrees.insert(sp.degrees.end(), dg, wdeg[w] - 1);
  // Product of Lambda basis words: (result index, sign) or -1.
  auto mul = [](int u, int v) -> std::pair<int, int> {
    if (u == 0) return {v, 1};
    if (v == 0) return {u, 1};
    if (u == 1 && v == 2) return {3, 1};
    if (u == 2 && v == 1) return {3, -1};
    return {-1, 0};
  };
  MultilinearMap l2 = MultilinearMap::on_space(4 * dg, 2);
  for (int u = 0; u < 4; ++u)
    for (int v = 0; v < 4; ++v) {
      const auto [w, s] = mul(u, v);
      if (w < 0) continue;
      for (const auto& [key, c] : g.bracket.table()) {
        const Rational coef = Rational(s * parity_sign(wdeg[u])) * c;
        l2.add({static_cast<Index>(u * dg + key[0]), static_cast<Index>(v * dg + key[1])},
               static_cast<std::size_t>(w) * dg + key[2], coef);
      }
    }
  return single(sp, 1, l2);
}

GradedFamily classical(const MultilinearMap& m) { return encode_classical(m); }

HomotopyET classical_het(const LieLeibnizTriple& t) {
  HomotopyET h{GradedVectorSpace::concentrated(-1, t.dim_g()), GradedVectorSpace::concentrated(-1, t.dim_v()), {}};
  MultilinearMap m({t.dim_v()}, t.dim_g());
  for (std::size_t o = 0; o < t.dim_g(); ++o)
    for (std::size_t v = 0; v < t.dim_v(); ++v) m.add({static_cast<Index>(v)}, o, t.T(o, v));
  h.theta.emplace(1, m);
  return h;
}

GradedRepFamily classical_rho(const LieLeibnizTriple& t) { return {{2, t.rho.as_map()}}; }

LeibnizAlgebra non_leibniz() {
  // [a,a] = a + b, [a,b] = b: fails the Leibniz identity.
  LeibnizAlgebra l(MultilinearMap::on_space(2, 2));
  l.bracket.add({0, 0}, 0, 1);
  l.bracket.add({0, 0}, 1, 1);
  l.bracket.add({0, 1}, 1, 1);
  return l;
}

}  // namespace

TEST_CASE("degree-0 unary maps bracket to the commutator") {
  const auto sp = GradedVectorSpace::concentrated(0, 3);
  const Matrix a = leibten::testing::random_matrix(3, 3, 11), b = leibten::testing::random_matrix(3, 3, 12);
  auto as_map = [](const Matrix& m) {
    MultilinearMap f = MultilinearMap::on_space(3, 1);
    for (std::size_t r = 0; r < 3; ++r)
      for (std::size_t c = 0; c < 3; ++c) f.add({static_cast<Index>(c)}, r, m(r, c));
    return f;
  };
  const GradedFamily br = graded_bracket(single(sp, 0, as_map(a)), single(sp, 0, as_map(b)));
  CHECK(br.component(1) == as_map(a * b - b * a));
  CHECK(br.max_arity() <= 1);
}

TEST_CASE("degree -1 encoding reproduces the ungraded Balavoine bracket") {
  std::mt19937 rng(7);
  const auto sp = GradedVectorSpace::concentrated(-1, 3);
  for (int trial = 0; trial < 12; ++trial) {
    const std::size_t p = 1 + trial % 3, q = 1 + (trial / 3) % 3;
    const MultilinearMap P = random_homogeneous(sp, p, static_cast<int>(p) - 1, rng);
    const MultilinearMap Q = random_homogeneous(sp, q, static_cast<int>(q) - 1, rng);
    const GradedFamily g = graded_bracket(classical(P), classical(Q));
    const MultilinearMap u = balavoine(P, Q);
    CHECK(g.component(p + q - 1) == u);
    CHECK(g.max_arity() <= p + q - 1);
    for (std::size_t k = 1; k <= p; ++k) {
      CHECK(graded_compose_at(sp, P, Q, static_cast<int>(q) - 1, k) == compose_at(P, Q, k));
    }
  }
}

TEST_CASE("graded antisymmetry and Jacobi for mixed degrees") {
  std::mt19937 rng(99);
  const GradedVectorSpace sp{{-2, -1, -1, 0}};
  for (int trial = 0; trial < 8; ++trial) {
    auto draw = [&](std::size_t arity, int deg) { return single(sp, deg, random_homogeneous(sp, arity, deg, rng, 2)); };
    const GradedFamily f = draw(1 + trial % 3, -1 + trial % 2);
    const GradedFamily g = draw(1 + (trial + 1) % 2, (trial % 3) - 1);
    const GradedFamily h = draw(1 + trial % 2, trial % 2);
    const int m = f.degree(), n = g.degree();
    const GradedFamily fg = graded_bracket(f, g), gf = graded_bracket(g, f);
    CHECK(fg == Rational(-parity_sign(m * n)) * gf);
    const GradedFamily lhs = graded_bracket(f, graded_bracket(g, h));
    const GradedFamily rhs = graded_bracket(graded_bracket(f, g), h) +
                             Rational(parity_sign(m * n)) * graded_bracket(g, graded_bracket(f, h));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("graded_balavoine enforces the arity bound") {
  const auto sp = GradedVectorSpace::concentrated(-1, 2);
  MultilinearMap m = MultilinearMap::on_space(2, 3);
  m.add({0, 0, 1}, 1, 1);
  const GradedFamily f = classical(m);
  MultilinearMap u = MultilinearMap::on_space(2, 2);
  u.add({1, 0}, 0, 1);
  const GradedFamily g = classical(u);
  CHECK_THROWS_AS(graded_balavoine(f, g, TruncationBounds{3, 3}), Error);
  CHECK_NOTHROW(graded_balavoine(f, g, TruncationBounds{4, 3}));
  CHECK_THROWS_AS(GradedFamily(sp, 0).add(m), Error);
}

TEST_CASE("check_linf on classical and graded examples") {
  const TruncationBounds b{4, 3};
  for (const auto& g : {heisenberg(), leibten::testing::sl2(), leibten::testing::affine2()}) {
    CHECK(check_linf(classical(g.bracket), b).ok);
    CHECK(check_leibniz_inf(classical(g.bracket), b).ok);
  }
  CHECK(check_linf(GradedFamily(GradedVectorSpace::concentrated(-1, 3), 1), b).ok);
  const auto bad = check_linf(classical(broken_jacobi().bracket), b);
  CHECK_FALSE(bad.ok);
  CHECK(bad.violations.front().identity == "generalized_jacobi");
  CHECK(bad.violations.front().inputs.size() == 3);

  // l1 with l1 o l1 != 0.
  const GradedVectorSpace sp{{-1, 0, 1}};
  GradedFamily d(sp, 1);
  d.add_entry({0}, 1, 1);
  d.add_entry({1}, 2, 1);
  const auto r = check_linf(d, b);
  CHECK_FALSE(r.ok);
  CHECK(r.violations.front().inputs == Tuple{0});

  // Not graded symmetric.
  MultilinearMap ns = MultilinearMap::on_space(2, 2);
  ns.add({0, 1}, 1, 1);
  const auto s = check_linf(classical(ns), b);
  CHECK_FALSE(s.ok);
  CHECK(s.violations.front().identity == "graded_symmetry");

  for (const auto& g : {heisenberg(), leibten::testing::affine2()}) {
    const GradedFamily l = lambda_dgla(g);
    CHECK(check_linf(l, b).ok);
    CHECK(check_leibniz_inf(l, b).ok);
  }
}

TEST_CASE("check_leibniz_inf on Leibniz algebras") {
  const TruncationBounds b{4, 3};
  CHECK(check_leibniz_inf(classical(leibniz_aa_b().bracket), b).ok);
  CHECK(check_leibniz_inf(classical(left_mult(leibniz_aa_b()).g.bracket), b).ok);
  const auto r = check_leibniz_inf(classical(non_leibniz().bracket), b);
  CHECK_FALSE(r.ok);
  CHECK(mc_check_leibniz(non_leibniz().bracket) == false);
  CHECK(r.violations.front().identity == "leibniz_inf");
}

TEST_CASE("hemisemidirect_graded matches the classical hemisemidirect product") {
  const TruncationBounds b{4, 3};
  for (const auto& [name, t] : suite_and_examples()) {
    CAPTURE(name);
    const GradedFamily l = classical(t.g.bracket);
    const GradedFamily h = hemisemidirect_graded(l, GradedVectorSpace::concentrated(-1, t.dim_v()), classical_rho(t));
    CHECK(h == classical(hemisemidirect(t.g.bracket, t.rho.as_map())));
    CHECK(check_leibniz_inf(h, b).ok);
  }
  const LieAlgebra g = heisenberg();
  const auto v = GradedVectorSpace::concentrated(-1, 2);
  CHECK(check_leibniz_inf(hemisemidirect_graded(classical(g.bracket), v, {}), b).ok);
  // rho(e1) = E_12, rho(e2) = E_21: [rho(e1), rho(e2)] != rho(e3) = 0.
  MultilinearMap rho({3, 2}, 2);
  rho.add({0, 1}, 0, 1);
  rho.add({1, 0}, 1, 1);
  CHECK_FALSE(check_leibniz_inf(hemisemidirect_graded(classical(g.bracket), v, {{2, rho}}), b).ok);
}

TEST_CASE("Voronov brackets on the classical V-data") {
  const auto t = leibten::testing::builtin_examples().front().triple;
  const VData vd = classical_vdata(t.dim_g(), t.dim_v());
  const VoronovElement q = shifted_hemisemidirect(t.g.bracket, t.rho.as_map());
  const VoronovElement tt = lifted_T(t.T);
  CHECK(q.degree() == 0);
  CHECK(tt.degree() == 0);

  // Break the pair so that [Q,Q] != 0.
  MultilinearMap mu = t.g.bracket;
  mu.add({0, 1}, 0, 1);
  mu.add({1, 0}, 0, -1);
  const VoronovElement q2 = shifted_hemisemidirect(mu, t.rho.as_map());
  const auto l2 = voronov_bracket(vd, {q2, q2});
  REQUIRE(l2.size() == 1);
  CHECK(l2[0].shifted);
  CHECK(l2[0].value == Rational(-1) * graded_bracket(q2.value, q2.value));

  // diag(1,2,0) on Heisenberg is not an embedding tensor, so P[[Q,T],T] != 0.
  Matrix d(3, 3);
  d(0, 0) = 1;
  d(1, 1) = 2;
  const VoronovElement t2 = lifted_T(d);
  const auto l3 = voronov_bracket(vd, {q, t2, t2});
  const GradedFamily expect = project_h(graded_bracket(graded_bracket(q.value, t2.value), t2.value), vd.dg());
  REQUIRE(l3.size() == 1);
  CHECK_FALSE(l3[0].shifted);
  CHECK(l3[0].value == expect);
  CHECK_FALSE(expect.is_zero());
  // Graded symmetry: moving s^{-1}Q costs nothing against degree-0 inputs.
  CHECK(voronov_bracket(vd, {t2, q, t2})[0].value == expect);

  CHECK(voronov_bracket(vd, {tt, tt}).empty());
  CHECK(voronov_bracket(vd, {tt}).empty());
  CHECK_THROWS_AS(voronov_bracket(vd, {VoronovElement{false, q.value}}), Error);
}

TEST_CASE("mc_check_triple agrees with validate") {
  std::size_t tested = 0, valid = 0;
  for (const auto& [name, t] : suite_and_examples()) {
    CAPTURE(name);
    CHECK(mc_check_triple(t.g.bracket, t.rho.as_map(), t.T).ok);
    ++tested;
    ++valid;
    Matrix bad = t.T;
    for (std::size_t i = 0; i < std::min(bad.rows(), bad.cols()); ++i) bad(i, i) += Rational(static_cast<long>(i + 1));
    CHECK(mc_check_triple(t.g.bracket, t.rho.as_map(), bad).ok == validate(LieLeibnizTriple{t.g, t.rho, bad}).ok);
    ++tested;
  }
  // Heisenberg grid sample.
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> pick(-1, 2);
  for (int i = 0; i < 60; ++i) {
    std::array<std::array<Rational, 3>, 3> r;
    for (auto& row : r)
      for (auto& x : row) x = pick(rng);
    const auto t = heisenberg_triple(r);
    const bool v = validate(t).ok;
    CHECK(mc_check_triple(t.g.bracket, t.rho.as_map(), t.T).ok == v);
    valid += v ? 1 : 0;
    ++tested;
  }
  // diag(1,2,0) on Heisenberg.
  std::array<std::array<Rational, 3>, 3> d{};
  d[0][0] = 1;
  d[1][1] = 2;
  const auto td = heisenberg_triple(d);
  CHECK_FALSE(mc_check_triple(td.g.bracket, td.rho.as_map(), td.T).ok);
  CHECK_FALSE(validate(td).ok);
  // Invalid pair.
  CHECK_FALSE(mc_check_triple(broken_jacobi().bracket, Representation::adjoint(broken_jacobi()).as_map(),
                              Matrix(3, 3)).ok);
  CHECK(mc_check_triple(MultilinearMap::on_space(2, 2), MultilinearMap({2, 2}, 2), Matrix(2, 2)).ok);
  CHECK(tested >= 50);
  CHECK(valid < tested);
}

TEST_CASE("twisted l1 reproduces the regular coboundary") {
  for (const auto& [name, t] : suite_and_examples()) {
    CAPTURE(name);
    for (std::size_t n = 1; n <= 3; ++n) {
      CAPTURE(n);
      CHECK(twisted_l1_matrix(t, n) == coboundary_reg(t, n).d);
    }
  }
}

TEST_CASE("twisting a finite L_infty algebra") {
  const TruncationBounds b{4, 3};
  const LieAlgebra g = leibten::testing::affine2();
  const GradedFamily l = lambda_dgla(g);
  const std::size_t dg = g.dim();
  CHECK(twist(l, zero_vector(l.dim()), b) == l);
  // alpha = e1 (x) e1 + e1 (x) e2 has commuting components: Maurer-Cartan.
  Vector alpha = zero_vector(l.dim());
  alpha[dg + 0] = 1;
  alpha[2 * dg + 0] = 1;
  CHECK(is_zero(mc_curvature(l, alpha)));
  const GradedFamily tw = twist(l, alpha, b);
  CHECK_FALSE(tw.component(1).is_zero());
  CHECK(check_linf(tw, b).ok);
  // e1 (x) e1 + e2 (x) e2 is not: [e1,e2] != 0.
  Vector beta = zero_vector(l.dim());
  beta[dg + 0] = 1;
  beta[2 * dg + 1] = 1;
  CHECK_FALSE(is_zero(mc_curvature(l, beta)));
  CHECK_FALSE(check_linf(twist(l, beta, b), b).ok);
  Vector wrong = zero_vector(l.dim());
  wrong[0] = 1;
  CHECK_THROWS_AS(twist(l, wrong, b), Error);
}

TEST_CASE("classical embedding tensors as homotopy embedding tensors") {
  const TruncationBounds b{4, 3};
  for (const auto& [name, t] : suite_and_examples()) {
    CAPTURE(name);
    const HomotopyET h = classical_het(t);
    const GradedFamily l = classical(t.g.bracket);
    CHECK(check_homotopy_et(h, l, classical_rho(t), b).ok);
    const GradedFamily theta = induced_leibniz_inf(h, l, classical_rho(t), b);
    CHECK(theta == classical(induced_leibniz(t).bracket));
    CHECK(check_leibniz_inf(theta, b).ok);

    HomotopyET zero = h;
    zero.theta.clear();
    CHECK(check_homotopy_et(zero, l, classical_rho(t), b).ok);
    CHECK(induced_leibniz_inf(zero, l, classical_rho(t), b).is_zero());
  }
  std::array<std::array<Rational, 3>, 3> d{};
  d[0][0] = 1;
  d[1][1] = 2;
  const auto td = heisenberg_triple(d);
  const HomotopyET h = classical_het(td);
  CHECK_FALSE(check_homotopy_et(h, classical(td.g.bracket), classical_rho(td), b).ok);
  CHECK_THROWS_AS(induced_leibniz_inf(h, classical(td.g.bracket), classical_rho(td), b), Error);
}

TEST_CASE("strict homomorphisms induce strict Leibniz_infty homomorphisms") {
  const TruncationBounds b{4, 3};
  // Heisenberg automorphism e1 -> 2e1, e2 -> e2, e3 -> 2e3, acting on V = g.
  Matrix phi(3, 3);
  phi(0, 0) = 2;
  phi(1, 1) = 1;
  phi(2, 2) = 2;
  std::array<std::array<Rational, 3>, 3> r{};
  r[0][0] = 1;
  r[1][1] = 1;
  r[2][2] = 1;
  r[2][0] = 3;
  r[2][1] = 5;
  const auto t = heisenberg_triple(r);
  REQUIRE(validate(t).ok);
  // Theta' = phi^{-1} Theta phi.
  Matrix inv(3, 3);
  inv(0, 0) = Rational(1, 2);
  inv(1, 1) = 1;
  inv(2, 2) = Rational(1, 2);
  const auto t_src = LieLeibnizTriple{t.g, t.rho, inv * t.T * phi};
  REQUIRE(validate(t_src).ok);
  const GradedFamily l = classical(t.g.bracket);
  const auto src = classical_het(t_src), tgt = classical_het(t);
  CHECK(check_homotopy_et_homomorphism(l, classical_rho(t), src, tgt, phi, phi, b).ok);
  const GradedFamily th_src = induced_leibniz_inf(src, l, classical_rho(t), b);
  const GradedFamily th_tgt = induced_leibniz_inf(tgt, l, classical_rho(t), b);
  CHECK(check_strict_homomorphism(th_src, th_tgt, phi, b).ok);
  // Swapping source and target breaks the intertwining.
  CHECK_FALSE(check_homotopy_et_homomorphism(l, classical_rho(t), tgt, src, phi, phi, b).ok);
}

TEST_CASE("Borjeson products") {
  // A = span{1, x, e, xe}, |x| = -1, |e| = 0, x^2 = e^2 = 0, graded commutative.
  const GradedVectorSpace sp{{0, -1, 0, -1}};
  MultilinearMap mult = MultilinearMap::on_space(4, 2);
  mult.add({0, 0}, 0, 1);
  for (Index i = 1; i < 4; ++i) {
    mult.add({0, i}, i, 1);
    mult.add({i, 0}, i, 1);
  }
  mult.add({1, 2}, 3, 1);
  mult.add({2, 1}, 3, 1);
  Matrix der(4, 4);
  der(2, 1) = 1;  // nabla x = e, a derivation
  const DiffGradedAlgebra a = finite_algebra(sp, mult, der);
  for (std::size_t k = 2; k <= 3; ++k)
    for (const auto& pick : enumerate_product(std::vector<std::size_t>(k, 4))) {
      std::vector<WordCombination> in;
      for (auto p : pick) in.push_back({{Tuple{static_cast<Index>(p)}, Rational(1)}});
      CHECK(borjeson(a, k, in).empty());
    }
  CHECK(stasheff_check(a, 4).ok);

  const DiffGradedAlgebra z = finite_algebra(sp, mult, Matrix(4, 4));
  const std::vector<WordCombination> two{{{Tuple{1}, Rational(1)}}, {{Tuple{1}, Rational(1)}}};
  CHECK(borjeson(z, 2, two).empty());
  CHECK(borjeson(z, 1, {two[0]}).empty());

  Matrix nd = der;
  nd(2, 3) = 1;  // nabla(xe) = e: not a derivation
  const DiffGradedAlgebra n = finite_algebra(sp, mult, nd);
  const std::vector<WordCombination> xe{{{Tuple{1}, Rational(1)}}, {{Tuple{2}, Rational(1)}}};
  CHECK_FALSE(borjeson(n, 2, xe).empty());
  CHECK(stasheff_check(n, 4).ok);

  const GradedVectorSpace sq{{0, 1, 2}};
  MultilinearMap m3 = MultilinearMap::on_space(3, 2);
  m3.add({0, 0}, 0, 1);
  Matrix d3(3, 3);
  d3(1, 0) = 1;
  d3(2, 1) = 1;
  CHECK_THROWS_AS(stasheff_check(finite_algebra(sq, m3, d3), 2), Error);
}

TEST_CASE("bar construction of [a,a] = b") {
  const GradedFamily theta = classical(leibniz_aa_b().bracket);
  const BarConstruction bar = bar_construction(theta);
  const BarReport r = bar_check(bar, TruncationBounds{4, 3});
  CHECK(r.square_zero);
  CHECK(r.coderivation);
  CHECK(r.coshuffle);
  CHECK(r.words_checked == 14);

  // d_2 on a length-2 word is theta_2.
  CHECK(bar.d(Tuple{0, 0}) == WordCombination{{Tuple{1}, Rational(1)}});
  // d = -m_1 with m_1 = sum_{i<j} (-1)^i (.. x^_i .. [x_i,x_j] ..).
  const LeibnizAlgebra lam = leibniz_aa_b();
  for (const auto& w : words_up_to(2, 4)) {
    WordCombination m1;
    for (std::size_t i = 0; i < w.size(); ++i)
      for (std::size_t j = i + 1; j < w.size(); ++j) {
        const Vector br = lam.bracket.value({w[i], w[j]});
        for (std::size_t o = 0; o < br.size(); ++o) {
          if (br[o] == 0) continue;
          Tuple out;
          for (std::size_t a = 0; a < w.size(); ++a) {
            if (a == i) continue;
            out.push_back(a == j ? static_cast<Index>(o) : w[a]);
          }
          add_to(m1, WordCombination{{out, Rational(1)}}, Rational(parity_sign(static_cast<long long>(i + 1))) * br[o]);
        }
      }
    WordCombination neg;
    add_to(neg, m1, Rational(-1));
    CHECK(bar.d(w) == neg);
  }

  CHECK(stasheff_check(bar.algebra(2), 4).ok);
  CHECK(stasheff_check(bar.algebra(3), 3).ok);

  const BarConstruction zero = bar_construction(GradedFamily(GradedVectorSpace::concentrated(-1, 2), 1));
  for (const auto& w : words_up_to(2, 3)) CHECK(zero.d(w).empty());
}

TEST_CASE("bar construction of a graded Leibniz_infty algebra") {
  const GradedFamily l = lambda_dgla(leibten::testing::affine2());
  const BarReport r = bar_check(bar_construction(l), TruncationBounds{4, 2});
  CHECK(r.ok());
  CHECK_FALSE(bar_check(bar_construction(classical(non_leibniz().bracket)), TruncationBounds{4, 3}).square_zero);
}
