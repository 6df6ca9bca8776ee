// One PASS/FAIL line per acceptance criterion. Exit status 1 if any fails.
#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "leibten/deformext.hpp"
#include "leibten/error.hpp"
#include "leibten/freelie.hpp"
#include "leibten/graded.hpp"
#include "suite.hpp"

using namespace leibten;
using leibten::testing::NamedTriple;

namespace {

// Pinned thresholds.
constexpr double kSo8Seconds = 10.0;
constexpr double kHeisenbergSeconds = 60.0;
constexpr std::size_t kRandomTriples = 20;
constexpr std::size_t kMaxComplexDegree = 3;
constexpr std::size_t kMinEquivalenceInputs = 50;
constexpr std::size_t kCohomologousPairs = 10;
constexpr std::size_t kMinDistinctClassPairs = 5;
constexpr TruncationBounds kHomotopyBounds{4, 3};  // arity 4, weight 3
constexpr std::size_t kMaxGenerators = 3;
constexpr TruncationBounds kKsBounds{3, 3};

struct Outcome {
  bool ok = true;
  std::string detail;
};

class Tally {
 public:
  void require(bool cond, const std::string& what) {
    ++checks_;
    if (!cond && first_failure_.empty()) first_failure_ = what;
    ok_ = ok_ && cond;
  }
  Outcome done(const std::string& summary) const {
    std::ostringstream s;
    s << summary << ", " << checks_ << " checks";
    if (!ok_) s << "; first failure: " << first_failure_;
    return {ok_, s.str()};
  }

 private:
  bool ok_ = true;
  std::size_t checks_ = 0;
  std::string first_failure_;
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::vector<NamedTriple> suite_and_examples() {
  auto all = testing::random_suite(kRandomTriples);
  for (auto& e : testing::builtin_examples()) all.push_back(std::move(e));
  return all;
}

using Grid = std::array<std::array<Rational, 3>, 3>;

// The two Heisenberg cases, read straight off the classification.
bool heisenberg_cases(const Grid& r) {
  if (r[0][2] != 0 || r[1][2] != 0) return false;
  if (r[2][2] == 0) return r[0][0] * r[1][1] == r[0][1] * r[1][0];
  return r[0][1] == 0 && r[1][0] == 0 && r[0][0] * r[1][1] == r[1][1] * r[2][2] &&
         r[1][1] * r[2][2] == r[0][0] * r[2][2];
}

MultilinearMap as_map(const Matrix& T) {
  MultilinearMap m({T.cols()}, T.rows());
  for (std::size_t r = 0; r < T.rows(); ++r)
    for (std::size_t c = 0; c < T.cols(); ++c) m.add({static_cast<Index>(c)}, r, T(r, c));
  return m;
}

Vector vadd(Vector a, const Vector& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

HomotopyET classical_het(const LieLeibnizTriple& t) {
  HomotopyET h{GradedVectorSpace::concentrated(-1, t.dim_g()), GradedVectorSpace::concentrated(-1, t.dim_v()), {}};
  h.theta.emplace(1, as_map(t.T));
  return h;
}

GradedRepFamily classical_rho(const LieLeibnizTriple& t) { return {{2, t.rho.as_map()}}; }

LieAlgebra broken_jacobi() { return lie_from_entries(3, {{0, 1, 2, 1}, {1, 2, 0, 1}, {0, 2, 0, 1}}); }

LeibnizAlgebra non_leibniz() {
  return leibniz_from_entries(2, {{0, 0, 0, 1}, {0, 0, 1, 1}, {0, 1, 1, 1}});
}

LieLeibnizTriple heisenberg_diag_120() {
  Grid d{};
  d[0][0] = 1;
  d[1][1] = 2;
  return heisenberg_triple(d);
}

// Antisymmetric random bracket on Q^d.
MultilinearMap random_antisymmetric(std::size_t d, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> val(-1, 1);
  MultilinearMap m = MultilinearMap::on_space(d, 2);
  for (Index i = 0; i < d; ++i)
    for (Index j = i + 1; j < d; ++j)
      for (std::size_t o = 0; o < d; ++o) {
        const int c = val(rng);
        m.add({i, j}, o, c);
        m.add({j, i}, o, -c);
      }
  return m;
}

Outcome so8_reproduction() {
  Tally t;
  const auto start = std::chrono::steady_clock::now();
  const LieLeibnizTriple so8 = so8_56();
  t.require(validate(so8).ok, "so8_56 validates");
  const LeibnizAlgebra l = induced_leibniz(so8);
  std::size_t mismatches = 0;
  for (Index u = 0; u < 56; ++u)
    for (Index v = 0; v < 56; ++v) mismatches += l.bracket.value({u, v}) != testing::so8_closed_form(u, v);
  t.require(mismatches == 0, std::to_string(mismatches) + " bracket mismatches");
  const double s = seconds_since(start);
  t.require(s <= kSo8Seconds, "runtime");
  char buf[96];
  std::snprintf(buf, sizeof buf, "3136 pairs, %zu mismatches, %.2f s (limit %.0f s)", mismatches, s, kSo8Seconds);
  return t.done(buf);
}

Outcome heisenberg_classification() {
  Tally t;
  const auto start = std::chrono::steady_clock::now();
  const LieAlgebra g = heisenberg();
  const Representation ad = Representation::adjoint(g);
  const int values[4] = {-1, 0, 1, 2};
  std::size_t disagreements = 0, valid = 0, points = 0;
  for (int code = 0; code < (1 << 18); ++code) {
    Grid r;
    Matrix T(3, 3);
    for (int p = 0; p < 9; ++p) {
      r[p / 3][p % 3] = values[(code >> (2 * p)) & 3];
      T(p / 3, p % 3) = r[p / 3][p % 3];
    }
    const bool et = is_embedding_tensor(g, ad, T);
    disagreements += et != heisenberg_cases(r) || et != heisenberg_condition(r);
    valid += et;
    ++points;
  }
  const double s = seconds_since(start);
  t.require(disagreements == 0, std::to_string(disagreements) + " disagreements");
  t.require(s <= kHeisenbergSeconds, "runtime");
  char buf[128];
  std::snprintf(buf, sizeof buf, "%zu grid points, %zu embedding tensors, %zu disagreements, %.1f s (limit %.0f s)",
                points, valid, disagreements, s, kHeisenbergSeconds);
  return t.done(buf);
}

Outcome complex_axioms() {
  Tally t;
  unsigned seed = 1;
  std::size_t triples = 0;
  for (const auto& [name, tr] : suite_and_examples()) {
    ++triples;
    const TwoTermRep r = testing::random_trivial_rep(tr, 1 + seed % 2, 1 + (seed + 1) % 2, seed);
    ++seed;
    const CochainComplex et = et_complex(tr), pr = pair_complex(tr.pair()), reg = reg_complex(tr),
                         co = coeff_complex(tr, r);
    for (std::size_t n = 1; n <= kMaxComplexDegree; ++n) {
      const std::string at = name + " degree " + std::to_string(n);
      t.require((et.d(n + 1) * et.d(n)).is_zero(), "d_T^2 on " + at);
      t.require((pr.d(n + 1) * pr.d(n)).is_zero(), "delta^2 on " + at);
      t.require((reg.d(n + 1) * reg.d(n)).is_zero(), "D^2 on " + at);
      t.require((co.d(n + 1) * co.d(n)).is_zero(), "D_R^2 on " + at);
    }
  }
  return t.done(std::to_string(triples) + " triples, degrees 1-" + std::to_string(kMaxComplexDegree));
}

Outcome long_exact_sequence() {
  Tally t;
  std::size_t nodes = 0, triples = 0;
  for (const auto& [name, tr] : suite_and_examples()) {
    const LesReport r = les_check(tr, kMaxComplexDegree);
    t.require(r.exact, "exactness on " + name);
    nodes += r.nodes.size();
    ++triples;
  }
  return t.done(std::to_string(triples) + " triples, " + std::to_string(nodes) + " nodes");
}

Outcome cochain_identities() {
  Tally t;
  std::size_t seed = 7, triples = 0;
  for (const auto& [name, tr] : suite_and_examples()) {
    ++triples;
    const LieRepPair pr = tr.pair();
    for (std::size_t n = 1; n <= kMaxComplexDegree; ++n) {
      const std::string at = name + " degree " + std::to_string(n);
      const Matrix omega_delta = omega_t(tr, n + 1) * coboundary_pair(pr, n).d;
      const Matrix dt_omega = coboundary_et(tr, n + 1).d * omega_t(tr, n);
      t.require((omega_delta + dt_omega).is_zero(), "Omega delta + d_T Omega on " + at);
      t.require(coboundary_et(tr, n).d == coboundary_et_balavoine(tr, n), "d_T vs derived bracket on " + at);
      t.require(phi_matrix(tr, n + 1) * coboundary_et(tr, n).d == leibniz_reg_coboundary(tr, n) * phi_matrix(tr, n),
                "Phi chain map on " + at);
    }
    const std::size_t dv = tr.dim_v(), dg = tr.dim_g();
    if (dv > 3) continue;
    for (std::size_t m = 1; m <= 2; ++m)
      for (std::size_t n = 1; n + m <= 3; ++n) {
        const MultilinearMap a = testing::random_map(std::vector<std::size_t>(m, dv), dg, unsigned(seed++));
        const MultilinearMap b = testing::random_map(std::vector<std::size_t>(n, dv), dg, unsigned(seed++));
        t.require(phi_rep_map(pr, derived_bracket(pr, a, b)) == balavoine(phi_rep_map(pr, a), phi_rep_map(pr, b)),
                  "Phi homomorphism on " + name);
      }
  }
  return t.done(std::to_string(triples) + " triples");
}

Outcome mc_equivalences() {
  Tally t;
  std::size_t lierep = 0, lierep_bad = 0, et = 0, et_bad = 0, triple = 0, triple_bad = 0;
  unsigned seed = 300;
  const auto suite = suite_and_examples();

  // Lie algebra with representation <=> hemisemidirect MC element.
  for (const auto& [name, tr] : suite) {
    for (unsigned s = 0; s < 2; ++s) {
      MultilinearMap rho = tr.rho.as_map();
      if (s == 1) rho += testing::random_map(rho.domain(), rho.codomain(), seed++, 0, 1);
      const bool v = validate(tr.g, Representation::from_map(rho)).ok;
      t.require(mc_check_lierep(tr.g.bracket, rho) == v, "LieRep MC on " + name);
      lierep_bad += !v;
      ++lierep;
    }
  }
  for (unsigned s = 0; s < 10; ++s) {
    const LieAlgebra g(random_antisymmetric(3, 400 + s));
    const Representation ad = Representation::adjoint(g);
    const bool v = validate(g, ad).ok;
    t.require(mc_check_lierep(g.bracket, ad.as_map()) == v, "LieRep MC on random bracket");
    lierep_bad += !v;
    ++lierep;
  }

  // Embedding tensor <=> [[T,T]] = 0.
  for (const auto& [name, tr] : suite)
    for (unsigned s = 0; s < 3; ++s) {
      const Matrix T = s == 0 ? tr.T : testing::random_matrix(tr.dim_g(), tr.dim_v(), seed++, -1, 1);
      const bool v = is_embedding_tensor(tr.g, tr.rho, T);
      t.require(v == derived_bracket(tr.pair(), as_map(T), as_map(T)).is_zero(), "derived MC on " + name);
      et_bad += !v;
      ++et;
    }

  // Triple <=> MC element of the twilled algebra.
  auto check_triple = [&](const LieAlgebra& g, const Representation& rho, const Matrix& T, const std::string& name) {
    const bool v = validate(LieLeibnizTriple{g, rho, T}).ok;
    t.require(mc_check_triple(g.bracket, rho.as_map(), T).ok == v, "triple MC on " + name);
    triple_bad += !v;
    ++triple;
  };
  for (const auto& [name, tr] : suite) {
    check_triple(tr.g, tr.rho, tr.T, name);
    Matrix bad = tr.T;
    for (std::size_t i = 0; i < std::min(bad.rows(), bad.cols()); ++i) bad(i, i) += Rational(long(i + 1));
    check_triple(tr.g, tr.rho, bad, name + " (perturbed)");
  }
  const LieLeibnizTriple d = heisenberg_diag_120();
  check_triple(d.g, d.rho, d.T, "heisenberg diag(1,2,0)");
  check_triple(broken_jacobi(), Representation::adjoint(broken_jacobi()), Matrix(3, 3), "broken Jacobi");

  const std::size_t least = std::min({lierep, et, triple});
  t.require(least >= kMinEquivalenceInputs, "too few inputs");
  t.require(lierep_bad > 0 && et_bad > 0 && triple_bad > 0, "no invalid inputs");
  std::ostringstream s;
  s << "LieRep " << lierep << " (" << lierep_bad << " invalid), ET " << et << " (" << et_bad << " invalid), triple "
    << triple << " (" << triple_bad << " invalid)";
  return t.done(s.str());
}

Outcome deformations() {
  Tally t;
  unsigned seed = 500;
  std::size_t equivalent = 0, distinct = 0;
  for (const auto& [name, tr] : testing::random_suite(kCohomologousPairs)) {
    const CochainComplex reg = reg_complex(tr);
    const auto z = kernel_basis(reg.d(2));
    Vector base = zero_vector(reg.dim(2));
    for (std::size_t i = 0; i < z.size(); ++i) axpy(base, Rational(long(i % 3) - 1), z[i]);
    const Vector wv = testing::random_vector(reg.dim(1), seed++);
    const DeformationDatum d1 = unflatten_deformation(tr, base);
    const DeformationDatum d2 = unflatten_deformation(tr, vadd(base, reg.apply(1, wv)));
    const auto w = deformations_equivalent(tr, d1, d2);
    t.require(w.has_value() && check_equivalence_witness(tr, d1, d2, *w), "witness on " + name);
    equivalent += w.has_value();
  }
  for (const auto& [name, tr] : testing::random_suite(2 * kCohomologousPairs, 77)) {
    const CohomologyReport h2 = cohomology(reg_complex(tr), 2);
    if (h2.betti == 0) continue;
    const DeformationDatum d1 = zero_deformation(tr);
    const DeformationDatum d2 = unflatten_deformation(tr, h2.representatives[0]);
    t.require(!deformations_equivalent(tr, d1, d2).has_value(), "spurious witness on " + name);
    ++distinct;
  }
  t.require(equivalent == kCohomologousPairs, "not every cohomologous pair was recovered");
  t.require(distinct >= kMinDistinctClassPairs, "too few distinct-class pairs");
  return t.done(std::to_string(equivalent) + " cohomologous pairs recovered, " + std::to_string(distinct) +
                " distinct-class pairs rejected");
}

Outcome central_extensions() {
  Tally t;
  unsigned seed = 900;
  std::size_t count = 0;
  for (const auto& [name, tr] : testing::random_suite(10)) {
    const Matrix ft = testing::random_matrix(1 + seed % 2, 1, seed);
    ++seed;
    const CochainComplex c = coeff_complex(tr, trivial_coefficients(tr, ft));
    const auto z = kernel_basis(c.d(2));
    Vector v = zero_vector(c.dim(2));
    for (std::size_t i = 0; i < z.size(); i += 2) v = vadd(v, z[i]);
    const CentralExtension e = build_central_extension(tr, ft, unflatten_extension(tr, ft, v));
    t.require(validate(e.triple).ok, "extension validates on " + name);
    const ExtensionCocycle back = extract_cocycle(tr, e, canonical_section(e, tr.dim_g(), tr.dim_v()));
    t.require(flatten_extension(tr, ft, back) == v, "round trip on " + name);

    const Matrix N = testing::random_matrix(ft.rows(), tr.dim_g(), seed + 11);
    const Matrix S = testing::random_matrix(ft.cols(), tr.dim_v(), seed + 12);
    Vector ns = zero_vector(c.dim(1));
    for (std::size_t a = 0; a < tr.dim_g(); ++a)
      for (std::size_t o = 0; o < ft.rows(); ++o) ns[a * ft.rows() + o] = N(o, a);
    for (std::size_t u = 0; u < tr.dim_v(); ++u)
      for (std::size_t w = 0; w < ft.cols(); ++w) ns[tr.dim_g() * ft.rows() + u * ft.cols() + w] = S(w, u);
    const Vector v2 = vadd(v, c.apply(1, ns));
    const CentralExtension e2 = build_central_extension(tr, ft, unflatten_extension(tr, ft, v2));
    t.require(verify_extension_isomorphism(e2, e, extension_isomorphism(e, N, S)), "isomorphism on " + name);
    ++count;
  }
  return t.done(std::to_string(count) + " cocycles with shifted sections");
}

Outcome twisted_l1() {
  Tally t;
  std::size_t triples = 0;
  for (const auto& [name, tr] : suite_and_examples()) {
    for (std::size_t n = 1; n <= kMaxComplexDegree; ++n)
      t.require(twisted_l1_matrix(tr, n) == coboundary_reg(tr, n).d, name + " degree " + std::to_string(n));
    ++triples;
  }
  return t.done(std::to_string(triples) + " triples, degrees 1-" + std::to_string(kMaxComplexDegree));
}

Outcome homotopy_layer() {
  Tally t;
  const TruncationBounds b = kHomotopyBounds;
  for (const LieAlgebra& g : {heisenberg(), testing::sl2(), testing::affine2()})
    t.require(check_linf(encode_classical(g.bracket), b).ok, "Lie algebra as L_infty");
  t.require(!check_linf(encode_classical(broken_jacobi().bracket), b).ok, "broken Jacobi rejected");

  t.require(check_leibniz_inf(encode_classical(leibniz_aa_b().bracket), b).ok, "[a,a]=b as Leibniz_infty");
  t.require(!check_leibniz_inf(encode_classical(non_leibniz().bracket), b).ok, "non-Leibniz rejected");

  std::size_t et_count = 0, twisted = 0;
  for (const auto& [name, tr] : suite_and_examples()) {
    const GradedFamily l = encode_classical(tr.g.bracket);
    const GradedFamily h =
        hemisemidirect_graded(l, GradedVectorSpace::concentrated(-1, tr.dim_v()), classical_rho(tr));
    t.require(check_leibniz_inf(h, b).ok, "LieRep hemisemidirect on " + name);
    const HomotopyET het = classical_het(tr);
    t.require(check_homotopy_et(het, l, classical_rho(tr), b).ok, "homotopy ET on " + name);
    ++et_count;
    if (tr.dim_v() > kMaxGenerators) continue;
    const GradedFamily theta = induced_leibniz_inf(het, l, classical_rho(tr), b);
    t.require(check_leibniz_inf(theta, b).ok, "twisted Leibniz_infty on " + name);
    ++twisted;
  }
  const LieAlgebra g = heisenberg();
  MultilinearMap bad_rho({3, 2}, 2);
  bad_rho.add({0, 1}, 0, 1);
  bad_rho.add({1, 0}, 1, 1);
  t.require(!check_leibniz_inf(hemisemidirect_graded(encode_classical(g.bracket),
                                                     GradedVectorSpace::concentrated(-1, 2), {{2, bad_rho}}),
                               b)
                 .ok,
            "non-representation rejected");
  const LieLeibnizTriple d = heisenberg_diag_120();
  t.require(!check_homotopy_et(classical_het(d), encode_classical(d.g.bracket), classical_rho(d), b).ok,
            "diag(1,2,0) rejected");
  return t.done(std::to_string(et_count) + " embedding tensors, " + std::to_string(twisted) +
                " twisted structures, arity <= " + std::to_string(b.arity));
}

Outcome bar_construction_check() {
  Tally t;
  const BarConstruction bar = bar_construction(encode_classical(leibniz_aa_b().bracket));
  const BarReport r = bar_check(bar, TruncationBounds{4, 3});
  t.require(r.square_zero, "d^2 = 0");
  t.require(r.coderivation, "coderivation");
  const GradedReport s = stasheff_check(bar.algebra(3), 4);
  t.require(s.ok, "Stasheff identities");
  return t.done(std::to_string(r.words_checked) + " words of length <= 3, Stasheff through arity " +
                std::to_string(s.checked_arity));
}

Outcome kotov_strobl() {
  Tally t;
  const TruncationBounds b = kKsBounds;
  const GradedVectorSpace two = GradedVectorSpace::concentrated(-1, 2);
  const std::vector<std::pair<std::string, GradedFamily>> inputs = {
      {"abelian", GradedFamily(two, 1)},
      {"heisenberg", encode_classical(heisenberg().bracket)},
      {"[a,a]=b", encode_classical(leibniz_aa_b().bracket)},
  };
  for (const auto& [name, theta] : inputs) {
    const KsTransfer k = ks_transfer(theta, b);
    t.require(check_linf(k.brackets, b, k.weights()).ok, "check_linf on " + name);
    t.require((k.codifferential * k.codifferential).is_zero(), "square zero on " + name);
  }
  for (const LieAlgebra& g : {heisenberg(), testing::sl2()}) {
    const MultilinearMap l2 = ks_transfer(encode_classical(g.bracket), b).brackets.component(2);
    bool same = true;
    for (Index i = 0; i < g.dim(); ++i)
      for (Index j = 0; j < g.dim(); ++j)
        for (std::size_t o = 0; o < g.dim(); ++o) same = same && l2.coeff({i, j}, o) == g.bracket.coeff({i, j}, o);
    t.require(same, "weight-1 binary bracket");
  }

  // a -> s a, b -> s^2 b are automorphisms of [a,a] = b.
  const KsTransfer k = ks_transfer(encode_classical(leibniz_aa_b().bracket), b);
  auto scaling = [&](int s) { return strict_morphism(two, two, Matrix{2, 2, {s, 0, 0, s * s}}); };
  std::size_t pairs = 0;
  for (int s1 : {2, 3, -1})
    for (int s2 : {2, -2, 5}) {
      const LeibnizInfMorphism f = scaling(s1), g = scaling(s2);
      t.require(ks_morphism(k, k, compose(g, f, b.arity), b).matrix ==
                    ks_morphism(k, k, g, b).matrix * ks_morphism(k, k, f, b).matrix,
                "composition");
      ++pairs;
    }
  // Heisenberg automorphisms diag(p, q, pq).
  const KsTransfer h = ks_transfer(encode_classical(heisenberg().bracket), b);
  const GradedVectorSpace three = GradedVectorSpace::concentrated(-1, 3);
  auto diag = [&](int p, int q) { return strict_morphism(three, three, Matrix{3, 3, {p, 0, 0, 0, q, 0, 0, 0, p * q}}); };
  for (const auto& [f, g] : {std::pair{diag(2, 1), diag(1, 3)}, std::pair{diag(-1, 2), diag(3, -1)}}) {
    t.require(ks_morphism(h, h, compose(g, f, b.arity), b).matrix ==
                  ks_morphism(h, h, g, b).matrix * ks_morphism(h, h, f, b).matrix,
              "Heisenberg composition");
    ++pairs;
  }
  return t.done("3 inputs at weight <= 3, arity <= 3, " + std::to_string(pairs) + " composable pairs");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"so(8) reproduction", so8_reproduction},
      {"Heisenberg classification", heisenberg_classification},
      {"complex axioms", complex_axioms},
      {"long exact sequence", long_exact_sequence},
      {"cochain identities", cochain_identities},
      {"Maurer-Cartan equivalences", mc_equivalences},
      {"deformations", deformations},
      {"central extensions", central_extensions},
      {"twisted l1 cross-check", twisted_l1},
      {"homotopy layer", homotopy_layer},
      {"Borjeson and bar construction", bar_construction_check},
      {"Kotov-Strobl transfer", kotov_strobl},
  };
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    all = all && o.ok;
    std::printf("%s %2zu %s: %s\n", o.ok ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), o.detail.c_str());
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
