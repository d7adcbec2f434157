#include "affscat/rational.hpp"

#include <numeric>

#include "affscat/error.hpp"

namespace affscat {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::NotSkewSymmetrizable: return "NotSkewSymmetrizable";
    case ErrorCode::NotAcyclic: return "NotAcyclic";
    case ErrorCode::NotAffine: return "NotAffine";
    case ErrorCode::NotInitial: return "NotInitial";
    case ErrorCode::NotSortable: return "NotSortable";
    case ErrorCode::NotAlmostPositive: return "NotAlmostPositive";
    case ErrorCode::HeightInsufficient: return "HeightInsufficient";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::MixedNormals: return "MixedNormals";
    case ErrorCode::DegenerateFace: return "DegenerateFace";
    case ErrorCode::Unsupported: return "Unsupported";
  }
  return "Unknown";
}

std::string to_string(const Rational& r) {
  const Integer num = boost::multiprecision::numerator(r);
  const Integer den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Rational parse_rational(const std::string& text) {
  try {
    const auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(Integer(text));
    const Integer num(text.substr(0, slash));
    const Integer den(text.substr(slash + 1));
    if (den == 0) throw Error(ErrorCode::InvalidInput, "zero denominator in " + text);
    return Rational(num, den);
  } catch (const std::runtime_error&) {
    throw Error(ErrorCode::InvalidInput, "not a rational: " + text);
  }
}

bool is_integer(const Rational& r) { return boost::multiprecision::denominator(r) == 1; }

long long to_int(const Rational& r) {
  if (!is_integer(r)) throw Error(ErrorCode::InvalidInput, "expected an integer, got " + to_string(r));
  return boost::multiprecision::numerator(r).convert_to<long long>();
}

int sign(const Rational& r) { return r > 0 ? 1 : (r < 0 ? -1 : 0); }

Vec vec(std::initializer_list<long long> entries) {
  Vec v(static_cast<Eigen::Index>(entries.size()));
  Eigen::Index i = 0;
  for (long long e : entries) v(i++) = e;
  return v;
}

Mat mat(std::initializer_list<std::initializer_list<long long>> rows) {
  const auto n = static_cast<Eigen::Index>(rows.size());
  const auto m = n == 0 ? 0 : static_cast<Eigen::Index>(rows.begin()->size());
  Mat out(n, m);
  Eigen::Index i = 0;
  for (const auto& row : rows) {
    Eigen::Index j = 0;
    for (long long e : row) out(i, j++) = e;
    ++i;
  }
  return out;
}

Vec unit(int n, int i) {
  Vec v = Vec::Zero(n);
  v(i) = 1;
  return v;
}

std::vector<long long> to_ints(const Vec& v) {
  std::vector<long long> out;
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(to_int(v(i)));
  return out;
}

std::string to_string(const Vec& v) {
  std::string s = "(";
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += to_string(v(i));
  }
  return s + ")";
}

Rational height(const Vec& v) { return v.sum(); }

bool is_zero(const Vec& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (v(i) != 0) return false;
  return true;
}

bool is_nonnegative(const Vec& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (v(i) < 0) return false;
  return true;
}

bool is_positive(const Vec& v) { return !is_zero(v) && is_nonnegative(v); }

Vec primitive(const Vec& v) {
  Integer l = 1;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const Integer den = boost::multiprecision::denominator(v(i));
    l = boost::multiprecision::lcm(l, den);
  }
  Integer g = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const Integer num = boost::multiprecision::numerator(Rational(v(i) * l));
    g = boost::multiprecision::gcd(g, num);
  }
  if (g == 0) return v;
  Vec out(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) out(i) = v(i) * l / g;
  return out;
}

bool VecLess::operator()(const Vec& a, const Vec& b) const {
  if (a.size() != b.size()) return a.size() < b.size();
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (a(i) < b(i)) return true;
    if (b(i) < a(i)) return false;
  }
  return false;
}

bool same_vec(const Vec& a, const Vec& b) { return a.size() == b.size() && a == b; }

}  // namespace affscat
