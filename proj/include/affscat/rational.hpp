#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Dense>

#include <string>
#include <vector>

namespace affscat {

// Expression templates are off so that Eigen sees a plain value type.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

template <typename Scalar>
using VecT = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using MatT = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using Vec = VecT<Rational>;
using Mat = MatT<Rational>;

// "p/q", or "p" when the denominator is one.
std::string to_string(const Rational& r);
Rational parse_rational(const std::string& text);

bool is_integer(const Rational& r);
long long to_int(const Rational& r);
int sign(const Rational& r);

Vec vec(std::initializer_list<long long> entries);
Mat mat(std::initializer_list<std::initializer_list<long long>> rows);
Vec unit(int n, int i);

std::vector<long long> to_ints(const Vec& v);
std::string to_string(const Vec& v);

// Sum of coordinates; the height of a root in simple-root coordinates.
Rational height(const Vec& v);

bool is_zero(const Vec& v);
bool is_nonnegative(const Vec& v);
// Nonzero with all coordinates nonnegative.
bool is_positive(const Vec& v);

// Positive rescaling with coprime integer coordinates.
Vec primitive(const Vec& v);

// Lexicographic order, for use as a map key.
struct VecLess {
  bool operator()(const Vec& a, const Vec& b) const;
};

bool same_vec(const Vec& a, const Vec& b);

}  // namespace affscat
