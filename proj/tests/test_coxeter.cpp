#include "affscat/coxeter.hpp"
#include "affscat/error.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace affscat;

TEST_CASE("Coxeter element from an acyclic exchange matrix") {
  CHECK(coxeter_from_exchange(fixtures::affine_a1()).order == std::vector<int>{0, 1});
  CHECK(coxeter_from_exchange(fixtures::affine_a2()).order == std::vector<int>{0, 1, 2});
  CHECK(coxeter_from_exchange(-fixtures::affine_a2()).order == std::vector<int>{2, 1, 0});
  CHECK_THROWS_AS(coxeter_from_exchange(mat({{0, 1, -1}, {-1, 0, 1}, {1, -1, 0}})), Error);
}

TEST_CASE("initial and final letters") {
  const CartanMatrix cm = exchange_to_cartan(fixtures::affine_a2());
  const Coxeter c = identity_coxeter(3);
  CHECK(is_initial(cm, c, 0));
  CHECK_FALSE(is_initial(cm, c, 1));
  CHECK(is_final(cm, c, 2));
  CHECK(conjugate(cm, c, 0).order == std::vector<int>{1, 2, 0});
  CHECK(conjugate(cm, c, 2).order == std::vector<int>{2, 0, 1});
  CHECK_THROWS_AS(conjugate(cm, c, 1), Error);

  // Commuting letters: in A_3 with c = s1 s3 s2, both s1 and s3 are initial.
  const CartanMatrix a3 = cartan_from_matrix(mat({{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}}));
  const Coxeter c2{{0, 2, 1}};
  CHECK(is_initial(a3, c2, 2));
  CHECK(is_final(a3, c2, 0) == false);
}

TEST_CASE("skew form and Euler form tables") {
  const CartanMatrix cm = exchange_to_cartan(fixtures::affine_a1());
  const Coxeter c = identity_coxeter(2);
  const Vec delta = vec({1, 1});
  CHECK(omega(cm, c, coroot(cm, unit(2, 0)), unit(2, 1)) == 2);
  CHECK(omega(cm, c, coroot(cm, unit(2, 0)), delta) == 2);
  CHECK(euler(cm, c, coroot(cm, unit(2, 1)), unit(2, 0)) == -2);
  CHECK(euler(cm, c, coroot(cm, unit(2, 0)), unit(2, 1)) == 0);
}

TEST_CASE("skew form table equals the exchange matrix") {
  for (const Mat& b : {fixtures::affine_a1(), fixtures::affine_a2(), fixtures::twisted_a2(),
                       fixtures::affine_g2(), Mat(-fixtures::affine_a2())}) {
    const CartanMatrix cm = exchange_to_cartan(b);
    CHECK(omega_table(cm, coxeter_from_exchange(b)) == b);
  }
}

TEST_CASE("Euler form symmetrizes to K and antisymmetrizes to omega") {
  for (const Mat& b : {fixtures::affine_a2(), fixtures::twisted_a2(), fixtures::affine_g2()}) {
    const CartanMatrix cm = exchange_to_cartan(b);
    const Coxeter c = coxeter_from_exchange(b);
    const int n = cm.rank();
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        const Vec x = unit(n, i) * Rational(2) + unit(n, (i + 1) % n);
        const Vec y = unit(n, j) - unit(n, (j + 2) % n) * Rational(3);
        CHECK(euler(cm, c, x, y) + euler(cm, c, y, x) == kform(cm, x, y));
        CHECK(euler(cm, c, x, y) - euler(cm, c, y, x) == omega(cm, c, x, y));
      }
  }
}

TEST_CASE("nu on small roots") {
  const CartanMatrix cm = exchange_to_cartan(fixtures::affine_a1());
  const Classification cls = classify(cm);
  const Coxeter c = identity_coxeter(2);
  const AffineVectors av = affine_vectors(cm, cls, c);
  CHECK(nu(cm, c, vec({1, 1})) == vec({-1, 1}));
  CHECK(nu(cm, c, vec({1, 1})) * Rational(2) == av.xc);
  CHECK(nu(cm, c, vec({1, 0})) == vec({-1, 2}));
  CHECK(nu(cm, c, vec({-1, 0})) == vec({1, 0}));
  CHECK(nu(cm, c, vec({0, -1})) == vec({0, 1}));
}

TEST_CASE("affine vectors") {
  const CartanMatrix cm = exchange_to_cartan(fixtures::affine_a1());
  const Classification cls = classify(cm);
  const Coxeter c = identity_coxeter(2);
  const AffineVectors second = affine_vectors(cm, cls, c, 1);
  CHECK(second.gamma == vec({1, 0}) * Rational(1, 2));
  CHECK(second.xc == vec({-2, 2}));
  const AffineVectors first = affine_vectors(cm, cls, c);
  CHECK(first.gamma == vec({0, -1}) * Rational(1, 2));
  // Both choices give the same functional K(gamma, .) up to a multiple of delta.
  CHECK(is_zero(Vec(kfunctional(cm, first.gamma - second.gamma))));

  for (const Mat& b : {fixtures::affine_a2(), fixtures::twisted_a2(), fixtures::affine_g2()}) {
    const CartanMatrix c2 = exchange_to_cartan(b);
    const Coxeter cc = coxeter_from_exchange(b);
    const AffineVectors av = affine_vectors(c2, classify(c2), cc);
    CHECK(apply_coxeter(c2, cc, av.gamma) - av.gamma == av.delta);
    CHECK(coxeter_action(c2, cc) * av.gamma == apply_coxeter(c2, cc, av.gamma));
    CHECK(av.gamma(av.aff) == 0);
  }
  CHECK_THROWS_AS(affine_vectors(exchange_to_cartan(fixtures::finite_a2()),
                                 classify(exchange_to_cartan(fixtures::finite_a2())), c),
                  Error);
}
