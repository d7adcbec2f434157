#include "affscat/cartan.hpp"
#include "affscat/error.hpp"
#include "affscat/series.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace affscat;

namespace {

std::vector<Rational> ints(std::initializer_list<long long> v) {
  return std::vector<Rational>(v.begin(), v.end());
}

}  // namespace

TEST_CASE("series arithmetic") {
  const Vec q = vec({1, 0});
  const TruncatedSeries f = TruncatedSeries::binomial(q, 4);
  CHECK(f.inverse().coeffs() == ints({1, -1, 1, -1, 1}));
  CHECK(f.pow(3).coeffs() == ints({1, 3, 3, 1, 0}));
  CHECK(f.pow(-2).coeffs() == ints({1, -2, 3, -4, 5}));
  CHECK((f.pow(-2) * f.pow(2)).is_one());
  CHECK_THROWS_AS(f * TruncatedSeries::binomial(vec({0, 1}), 4), Error);
}

TEST_CASE("limiting wall function") {
  const Vec delta = vec({1, 1});
  CHECK(f_infinity(false, delta, 3).coeffs() == ints({1, 2, 3, 4}));
  CHECK(f_infinity(true, delta, 3).coeffs() == ints({1, 3, 5, 7}));
  TruncatedSeries one_minus_q = TruncatedSeries::one(delta, 6);
  one_minus_q.set_coeff(1, -1);
  CHECK(f_infinity(false, delta, 6) == one_minus_q.pow(-2));
  CHECK(f_infinity(true, delta, 6) == TruncatedSeries::binomial(delta, 6) * one_minus_q.pow(-2));
}

TEST_CASE("wall crossing on a monomial") {
  const Mat b = fixtures::affine_a1();
  WallCrossing w{TruncatedSeries::binomial(vec({1, 0}), 4), vec({1, 0}), 1};
  const Expr out = apply_crossing(b, w, Expr::y_power(vec({0, 1}), 4));
  Expr expected = Expr::y_power(vec({0, 1}), 4);
  expected.add({{0, 0}, {1, 1}}, 2);
  expected.add({{0, 0}, {2, 1}}, 1);
  CHECK(out == expected);

  WallCrossing back = w;
  back.direction = -1;
  CHECK(apply_crossing(b, back, out) == Expr::y_power(vec({0, 1}), 4));
}

TEST_CASE("wall crossing is multiplicative") {
  const Mat b = fixtures::twisted_a2();
  const CartanMatrix cm = exchange_to_cartan(b);
  const Vec beta = vec({1, 2});
  WallCrossing w{f_infinity(true, beta, 3), primitive_coroot_coords(cm, beta), -1};
  const Expr m1 = Expr::x_power(vec({1, -2}), 8) * Expr::y_power(vec({1, 0}), 8);
  const Expr m2 = Expr::x_power(vec({0, 3}), 8) * Expr::y_power(vec({0, 2}), 8);
  CHECK(apply_crossing(b, w, m1 * m2) == apply_crossing(b, w, m1) * apply_crossing(b, w, m2));
}
