#pragma once

#include <map>
#include <vector>

#include "affscat/rational.hpp"

namespace affscat {

// Power series in q = yhat^normal, truncated after q^order.
class TruncatedSeries {
 public:
  TruncatedSeries() = default;
  TruncatedSeries(Vec normal, int order);
  TruncatedSeries(Vec normal, std::vector<Rational> coeffs);

  static TruncatedSeries one(const Vec& normal, int order);
  // 1 + q
  static TruncatedSeries binomial(const Vec& normal, int order);

  const Vec& normal() const { return normal_; }
  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational coeff(int k) const { return k <= order() ? coeffs_[k] : Rational(0); }
  void set_coeff(int k, const Rational& v) { coeffs_.at(k) = v; }

  TruncatedSeries operator*(const TruncatedSeries& other) const;
  bool operator==(const TruncatedSeries& other) const;
  bool operator!=(const TruncatedSeries& other) const { return !(*this == other); }
  // Requires constant term 1 when the exponent is negative.
  TruncatedSeries pow(long long e) const;
  TruncatedSeries inverse() const;
  TruncatedSeries truncated(int order) const;
  bool is_one() const;

 private:
  void check_normal(const TruncatedSeries& other) const;

  Vec normal_;
  std::vector<Rational> coeffs_;
};

// (1 - q)^{-2}, times (1 + q) for twisted type A of even rank.
TruncatedSeries f_infinity(bool is_A2k2, const Vec& delta, int order);

// Monomial x^lambda yhat^phi with lambda in the weight lattice and phi in
// the nonnegative root lattice.
struct Monomial {
  std::vector<long long> x;
  std::vector<long long> y;

  long long degree() const;
  bool operator<(const Monomial& other) const;
  bool operator==(const Monomial& other) const { return x == other.x && y == other.y; }
};

// Laurent polynomial in x with power series coefficients in yhat,
// truncated above total yhat-degree k.
class Expr {
 public:
  Expr(int n, int k) : n_(n), k_(k) {}
  static Expr monomial(const Monomial& m, int k);
  static Expr x_power(const Vec& lambda, int k);
  static Expr y_power(const Vec& phi, int k);

  int rank() const { return n_; }
  int truncation() const { return k_; }
  const std::map<Monomial, Rational>& terms() const { return terms_; }
  void add(const Monomial& m, const Rational& c);

  Expr operator+(const Expr& other) const;
  Expr operator-(const Expr& other) const;
  Expr operator*(const Expr& other) const;
  bool operator==(const Expr& other) const { return k_ == other.k_ && terms_ == other.terms_; }
  bool operator!=(const Expr& other) const { return !(*this == other); }

 private:
  int n_;
  int k_;
  std::map<Monomial, Rational> terms_;
};

// Crossing a wall with normal beta: x^lambda -> x^lambda f^{<lambda, s b>},
// yhat^phi -> yhat^phi f^{omega(s b, phi)}, where b is the primitive coroot
// on the ray of beta and s = +1 when the path crosses against b.
struct WallCrossing {
  TruncatedSeries f;
  Vec coroot;  // primitive, in simple-coroot coordinates
  int direction = 1;
};

// omega_table holds omega(coroot_i, root_j), i.e. the exchange matrix.
Expr apply_crossing(const Mat& omega_table, const WallCrossing& crossing, const Expr& e);

}  // namespace affscat
