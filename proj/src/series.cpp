#include "affscat/series.hpp"

#include <algorithm>

#include "affscat/error.hpp"

namespace affscat {

TruncatedSeries::TruncatedSeries(Vec normal, int order)
    : normal_(std::move(normal)), coeffs_(static_cast<std::size_t>(std::max(order, 0)) + 1, Rational(0)) {}

TruncatedSeries::TruncatedSeries(Vec normal, std::vector<Rational> coeffs)
    : normal_(std::move(normal)), coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) coeffs_.push_back(0);
}

TruncatedSeries TruncatedSeries::one(const Vec& normal, int order) {
  TruncatedSeries s(normal, order);
  s.coeffs_[0] = 1;
  return s;
}

TruncatedSeries TruncatedSeries::binomial(const Vec& normal, int order) {
  TruncatedSeries s = one(normal, order);
  if (order >= 1) s.coeffs_[1] = 1;
  return s;
}

void TruncatedSeries::check_normal(const TruncatedSeries& other) const {
  if (!same_vec(normal_, other.normal_))
    throw Error(ErrorCode::MixedNormals, "series in different variables");
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& other) const {
  check_normal(other);
  const int ord = std::min(order(), other.order());
  TruncatedSeries out(normal_, ord);
  for (int i = 0; i <= ord; ++i) {
    if (coeffs_[i] == 0) continue;
    for (int j = 0; i + j <= ord; ++j) out.coeffs_[i + j] += coeffs_[i] * other.coeffs_[j];
  }
  return out;
}

bool TruncatedSeries::operator==(const TruncatedSeries& other) const {
  return same_vec(normal_, other.normal_) && coeffs_ == other.coeffs_;
}

TruncatedSeries TruncatedSeries::inverse() const {
  if (coeffs_[0] == 0) throw Error(ErrorCode::InvalidInput, "series with zero constant term is not invertible");
  TruncatedSeries out(normal_, order());
  out.coeffs_[0] = 1 / coeffs_[0];
  for (int k = 1; k <= order(); ++k) {
    Rational acc = 0;
    for (int i = 1; i <= k; ++i) acc += coeffs_[i] * out.coeffs_[k - i];
    out.coeffs_[k] = -acc / coeffs_[0];
  }
  return out;
}

TruncatedSeries TruncatedSeries::pow(long long e) const {
  TruncatedSeries base = e < 0 ? inverse() : *this;
  unsigned long long m = e < 0 ? static_cast<unsigned long long>(-e) : static_cast<unsigned long long>(e);
  TruncatedSeries out = one(normal_, order());
  while (m) {
    if (m & 1) out = out * base;
    m >>= 1;
    if (m) base = base * base;
  }
  return out;
}

TruncatedSeries TruncatedSeries::truncated(int ord) const {
  TruncatedSeries out(normal_, ord);
  for (int k = 0; k <= ord && k <= order(); ++k) out.coeffs_[k] = coeffs_[k];
  return out;
}

bool TruncatedSeries::is_one() const {
  if (coeffs_[0] != 1) return false;
  for (std::size_t k = 1; k < coeffs_.size(); ++k)
    if (coeffs_[k] != 0) return false;
  return true;
}

TruncatedSeries f_infinity(bool is_A2k2, const Vec& delta, int order) {
  TruncatedSeries s(delta, order);
  for (int k = 0; k <= order; ++k) s.set_coeff(k, is_A2k2 ? 2 * k + 1 : k + 1);
  return s;
}

long long Monomial::degree() const {
  long long d = 0;
  for (long long e : y) d += e;
  return d;
}

bool Monomial::operator<(const Monomial& other) const {
  if (y != other.y) return y < other.y;
  return x < other.x;
}

Expr Expr::monomial(const Monomial& m, int k) {
  Expr e(static_cast<int>(m.x.size()), k);
  e.add(m, 1);
  return e;
}

Expr Expr::x_power(const Vec& lambda, int k) {
  const auto n = static_cast<std::size_t>(lambda.size());
  return monomial({to_ints(lambda), std::vector<long long>(n, 0)}, k);
}

Expr Expr::y_power(const Vec& phi, int k) {
  const auto n = static_cast<std::size_t>(phi.size());
  return monomial({std::vector<long long>(n, 0), to_ints(phi)}, k);
}

void Expr::add(const Monomial& m, const Rational& c) {
  if (c == 0 || m.degree() > k_) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
    return;
  }
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

Expr Expr::operator+(const Expr& other) const {
  Expr out = *this;
  out.k_ = std::min(k_, other.k_);
  for (const auto& [m, c] : other.terms_) out.add(m, c);
  return out;
}

Expr Expr::operator-(const Expr& other) const {
  Expr out = *this;
  out.k_ = std::min(k_, other.k_);
  for (const auto& [m, c] : other.terms_) out.add(m, -c);
  return out;
}

Expr Expr::operator*(const Expr& other) const {
  Expr out(n_, std::min(k_, other.k_));
  for (const auto& [a, ca] : terms_)
    for (const auto& [b, cb] : other.terms_) {
      Monomial m = a;
      for (int i = 0; i < n_; ++i) {
        m.x[i] += b.x[i];
        m.y[i] += b.y[i];
      }
      out.add(m, ca * cb);
    }
  return out;
}

Expr apply_crossing(const Mat& omega_table, const WallCrossing& crossing, const Expr& e) {
  const int n = e.rank();
  const Vec& beta = crossing.f.normal();
  const std::vector<long long> step = to_ints(beta);
  const long long h = std::max<long long>(1, to_int(height(beta)));
  const std::vector<long long> u = to_ints(crossing.coroot);
  // omega(b, phi) as a row vector acting on phi.
  std::vector<Rational> w(n, Rational(0));
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) w[j] += u[i] * omega_table(i, j);

  std::map<long long, TruncatedSeries> powers;
  Expr out(n, e.truncation());
  for (const auto& [m, c] : e.terms()) {
    Rational ex = 0;
    for (int i = 0; i < n; ++i) ex += Rational(m.x[i] * u[i]) + w[i] * m.y[i];
    const long long exponent = crossing.direction * to_int(ex);
    if (exponent == 0) {
      out.add(m, c);
      continue;
    }
    auto it = powers.find(exponent);
    if (it == powers.end()) it = powers.emplace(exponent, crossing.f.pow(exponent)).first;
    const TruncatedSeries& p = it->second;
    const long long room = (e.truncation() - m.degree()) / h;
    for (long long q = 0; q <= room && q <= p.order(); ++q) {
      if (p.coeff(static_cast<int>(q)) == 0) continue;
      Monomial shifted = m;
      for (int i = 0; i < n; ++i) shifted.y[i] += q * step[i];
      out.add(shifted, c * p.coeff(static_cast<int>(q)));
    }
  }
  return out;
}

}  // namespace affscat
