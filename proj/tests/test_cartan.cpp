#include <set>

#include "affscat/cartan.hpp"
#include "affscat/error.hpp"
#include "affscat/linalg.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace affscat;

namespace {

// Floating-point eigenvalues as an independent check of definiteness.
double min_eigenvalue(const CartanMatrix& cm) {
  const Mat g = cm.gram();
  Eigen::MatrixXd f(g.rows(), g.cols());
  for (Eigen::Index i = 0; i < g.rows(); ++i)
    for (Eigen::Index j = 0; j < g.cols(); ++j) f(i, j) = g(i, j).convert_to<double>();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(f);
  return es.eigenvalues().minCoeff();
}

// Orbit of the simple roots under all words up to a fixed length.
std::set<Vec, VecLess> orbit_oracle(const CartanMatrix& cm, int word_length, int max_height) {
  const int n = cm.rank();
  std::set<Vec, VecLess> frontier, all;
  for (int i = 0; i < n; ++i) frontier.insert(unit(n, i));
  all = frontier;
  for (int step = 0; step < word_length; ++step) {
    std::set<Vec, VecLess> next;
    for (const Vec& v : frontier)
      for (int i = 0; i < n; ++i) {
        Vec w = reflect_root(cm, i, v);
        if (all.insert(w).second) next.insert(w);
      }
    frontier = next;
  }
  std::set<Vec, VecLess> out;
  for (const Vec& v : all)
    if (is_positive(v) && height(v) <= max_height) out.insert(v);
  return out;
}

}  // namespace

TEST_CASE("exchange matrix to Cartan matrix") {
  const CartanMatrix cm = exchange_to_cartan(fixtures::affine_a1());
  CHECK(cm.a == mat({{2, -2}, {-2, 2}}));
  CHECK(cm.d == vec({1, 1}));

  const CartanMatrix tw = exchange_to_cartan(fixtures::twisted_a2());
  CHECK(tw.a == mat({{2, -1}, {-4, 2}}));
  CHECK(tw.d(0) == 1);
  CHECK(tw.d(1) == Rational(1, 4));
  const Mat g = tw.gram();
  CHECK(g == g.transpose());
}

TEST_CASE("invalid exchange matrices are rejected") {
  CHECK_THROWS_AS(exchange_to_cartan(mat({{0, 1}, {1, 0}})), Error);
  CHECK_THROWS_AS(exchange_to_cartan(mat({{1, 1}, {-1, 0}})), Error);
  // Inconsistent ratios around a triangle.
  CHECK_THROWS_AS(exchange_to_cartan(mat({{0, 1, 1}, {-1, 0, 2}, {-1, -1, 0}})), Error);
}

TEST_CASE("classification agrees with eigenvalues") {
  struct Case {
    Mat b;
    Finiteness kind;
    std::string label;
  };
  const std::vector<Case> cases = {
      {fixtures::affine_a1(), Finiteness::Affine, "A_1^(1)"},
      {fixtures::affine_a2(), Finiteness::Affine, "A_2^(1)"},
      {fixtures::twisted_a2(), Finiteness::Affine, "A_2^(2)"},
      {fixtures::affine_g2(), Finiteness::Affine, "G_2^(1)"},
      {fixtures::finite_a2(), Finiteness::Finite, ""},
      {fixtures::finite_b2(), Finiteness::Finite, ""},
      {mat({{0, 3}, {-3, 0}}), Finiteness::Indefinite, ""},
  };
  for (const auto& c : cases) {
    const CartanMatrix cm = exchange_to_cartan(c.b);
    const Classification cls = classify(cm);
    CHECK(cls.kind == c.kind);
    CHECK(cls.label == c.label);
    const double ev = min_eigenvalue(cm);
    if (c.kind == Finiteness::Finite) CHECK(ev > 1e-9);
    if (c.kind == Finiteness::Affine) {
      CHECK(std::abs(ev) < 1e-9);
      CHECK(is_zero(Vec(cm.a * cls.delta)));
      CHECK(is_positive(cls.delta));
    }
    if (c.kind == Finiteness::Indefinite) CHECK(ev < -1e-9);
  }
}

TEST_CASE("imaginary root and affine index") {
  const Classification a1 = classify(exchange_to_cartan(fixtures::affine_a1()));
  CHECK(a1.delta == vec({1, 1}));
  CHECK(a1.aff_index == 0);
  CHECK_FALSE(a1.is_A2k2);

  const Classification tw = classify(exchange_to_cartan(fixtures::twisted_a2()));
  CHECK(tw.delta == vec({1, 2}));
  CHECK(tw.aff_index == 1);
  CHECK(tw.is_A2k2);

  const Classification g2 = classify(exchange_to_cartan(fixtures::affine_g2()));
  CHECK(g2.delta == vec({1, 2, 3}));
  CHECK(g2.aff_index == 0);
}

TEST_CASE("every table entry classifies as itself") {
  for (int r = 2; r <= 9; ++r) {
    for (const auto& label : affine_labels(r)) {
      CAPTURE(label);
      const CartanMatrix cm = cartan_from_matrix(affine_cartan(label));
      const Classification cls = classify(cm);
      CHECK(cls.kind == Finiteness::Affine);
      CHECK(cls.label == label);
      CHECK(cls.is_A2k2 == (label.rfind("A_", 0) == 0 && label.find("^(2)") != std::string::npos &&
                            std::stoi(label.substr(2)) % 2 == 0));
      REQUIRE(cls.aff_index >= 0);
      std::vector<int> rest;
      for (int i = 0; i < r; ++i)
        if (i != cls.aff_index) rest.push_back(i);
      CHECK(positive_definite<Rational>(principal_submatrix<Rational>(cm.gram(), rest)));
    }
  }
}

TEST_CASE("reflections on roots and weights") {
  const CartanMatrix cm = exchange_to_cartan(fixtures::affine_a1());
  CHECK(reflect_weight(cm, 0, vec({1, 0})) == vec({-1, 2}));
  CHECK(reflect_root(cm, 0, vec({0, 1})) == vec({2, 1}));

  // The two actions are contragredient.
  for (const Mat& b : {fixtures::affine_a2(), fixtures::twisted_a2(), fixtures::affine_g2()}) {
    const CartanMatrix c = exchange_to_cartan(b);
    const int n = c.rank();
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
          const Vec x = unit(n, j) * Rational(3) - unit(n, k);
          const Vec v = unit(n, k) + unit(n, i) * Rational(2);
          CHECK(pairing(c, reflect_weight(c, i, x), reflect_root(c, i, v)) == pairing(c, x, v));
          CHECK(simple_reflection_on_weights(c, i) * x == reflect_weight(c, i, x));
        }
  }
}

TEST_CASE("fundamental weights are dual to simple coroots") {
  const CartanMatrix cm = exchange_to_cartan(fixtures::twisted_a2());
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      CHECK(pairing(cm, unit(2, i), coroot(cm, unit(2, j))) == (i == j ? 1 : 0));
}

TEST_CASE("positive real roots match orbit closure") {
  const CartanMatrix cm = exchange_to_cartan(fixtures::affine_a1());
  const auto roots = positive_real_roots(cm, 3);
  std::set<Vec, VecLess> got(roots.begin(), roots.end());
  std::set<Vec, VecLess> expected{vec({1, 0}), vec({0, 1}), vec({2, 1}), vec({1, 2})};
  CHECK(got == expected);
  for (const Vec& r : roots) CHECK(kform(cm, r, r) > 0);

  for (const Mat& b : {fixtures::affine_a2(), fixtures::twisted_a2(), fixtures::affine_g2()}) {
    const CartanMatrix c = exchange_to_cartan(b);
    const auto rs = positive_real_roots(c, 7);
    std::set<Vec, VecLess> mine(rs.begin(), rs.end());
    CHECK(mine == orbit_oracle(c, 16, 7));
  }
}

TEST_CASE("coroots of real roots are primitive in the coroot lattice") {
  for (const Mat& b : {fixtures::affine_a2(), fixtures::twisted_a2(), fixtures::affine_g2()}) {
    const CartanMatrix cm = exchange_to_cartan(b);
    for (const Vec& r : positive_real_roots(cm, 8)) CHECK(coroot(cm, r) == primitive_coroot(cm, r));
  }
}

TEST_CASE("finite subsystem roots") {
  const CartanMatrix cm = exchange_to_cartan(fixtures::affine_g2());
  CHECK(finite_subsystem_roots(cm, {1, 2}).size() == 12);
  CHECK(finite_subsystem_roots(cm, {0, 1}).size() == 6);
}
