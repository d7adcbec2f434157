#include "affscat/coxeter.hpp"

#include <algorithm>
#include <queue>

#include "affscat/error.hpp"
#include "affscat/linalg.hpp"

namespace affscat {

int Coxeter::position(int s) const {
  for (std::size_t p = 0; p < order.size(); ++p)
    if (order[p] == s) return static_cast<int>(p);
  return -1;
}

Coxeter coxeter_from_exchange(const Mat& b) {
  const int n = static_cast<int>(b.rows());
  std::vector<int> indegree(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (b(i, j) > 0) ++indegree[j];
  std::priority_queue<int, std::vector<int>, std::greater<>> ready;
  for (int i = 0; i < n; ++i)
    if (indegree[i] == 0) ready.push(i);
  Coxeter c;
  while (!ready.empty()) {
    const int i = ready.top();
    ready.pop();
    c.order.push_back(i);
    for (int j = 0; j < n; ++j)
      if (b(i, j) > 0 && --indegree[j] == 0) ready.push(j);
  }
  if (c.size() != n) throw Error(ErrorCode::NotAcyclic, "exchange matrix has an oriented cycle");
  return c;
}

Coxeter identity_coxeter(int n) {
  Coxeter c;
  for (int i = 0; i < n; ++i) c.order.push_back(i);
  return c;
}

bool is_initial(const CartanMatrix& cm, const Coxeter& c, int s) {
  const int p = c.position(s);
  if (p < 0) return false;
  for (int q = 0; q < p; ++q)
    if (cm.a(c.order[q], s) != 0) return false;
  return true;
}

bool is_final(const CartanMatrix& cm, const Coxeter& c, int s) {
  const int p = c.position(s);
  if (p < 0) return false;
  for (int q = p + 1; q < c.size(); ++q)
    if (cm.a(c.order[q], s) != 0) return false;
  return true;
}

Coxeter conjugate(const CartanMatrix& cm, const Coxeter& c, int s) {
  Coxeter out = remove(c, s);
  if (is_initial(cm, c, s)) {
    out.order.push_back(s);
  } else if (is_final(cm, c, s)) {
    out.order.insert(out.order.begin(), s);
  } else {
    throw Error(ErrorCode::NotInitial, "s is neither initial nor final in c");
  }
  return out;
}

Coxeter remove(const Coxeter& c, int s) {
  Coxeter out;
  for (int i : c.order)
    if (i != s) out.order.push_back(i);
  return out;
}

Coxeter inverse(const Coxeter& c) {
  Coxeter out = c;
  std::reverse(out.order.begin(), out.order.end());
  return out;
}

Mat coxeter_action(const CartanMatrix& cm, const Coxeter& c) {
  const int n = cm.rank();
  Mat m = Mat::Identity(n, n);
  for (int s : c.order) m = m * simple_reflection_on_roots(cm, s);
  return m;
}

Vec apply_coxeter(const CartanMatrix& cm, const Coxeter& c, const Vec& v) {
  Vec out = v;
  for (auto it = c.order.rbegin(); it != c.order.rend(); ++it) out = reflect_root(cm, *it, out);
  return out;
}

Mat omega_table(const CartanMatrix& cm, const Coxeter& c) {
  const int n = cm.rank();
  Mat t = Mat::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const int pi = c.position(i), pj = c.position(j);
      if (i == j || pi < 0 || pj < 0) continue;
      t(i, j) = pi > pj ? Rational(cm.a(i, j)) : Rational(-cm.a(i, j));
    }
  }
  return t;
}

Mat euler_table(const CartanMatrix& cm, const Coxeter& c) {
  const int n = cm.rank();
  Mat t = Mat::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const int pi = c.position(i), pj = c.position(j);
      if (pi < 0 || pj < 0) continue;
      if (i == j) t(i, j) = 1;
      else if (pi > pj) t(i, j) = cm.a(i, j);
    }
  }
  return t;
}

// A coroot pairs with a root through d_i: K(x, y) = sum_i x_i d_i (coroot_i, y).
Rational omega(const CartanMatrix& cm, const Coxeter& c, const Vec& x, const Vec& y) {
  return (x.cwiseProduct(cm.d).transpose() * omega_table(cm, c) * y).value();
}

Rational euler(const CartanMatrix& cm, const Coxeter& c, const Vec& x, const Vec& y) {
  return (x.cwiseProduct(cm.d).transpose() * euler_table(cm, c) * y).value();
}

Vec omega_functional(const CartanMatrix& cm, const Coxeter& c, const Vec& y) {
  return omega_table(cm, c) * y;
}

Vec euler_functional(const CartanMatrix& cm, const Coxeter& c, const Vec& y) {
  return euler_table(cm, c) * y;
}

Vec nu(const CartanMatrix& cm, const Coxeter& c, const Vec& beta) {
  const int n = cm.rank();
  Vec plus = beta;
  for (int i = 0; i < n; ++i)
    if (beta(i) < 0) plus(i) = 0;
  const Vec e = euler_functional(cm, c, plus);
  Vec out(n);
  for (int i = 0; i < n; ++i) out(i) = beta(i) < 0 ? Rational(-beta(i)) : Rational(-e(i));
  return out;
}

AffineVectors affine_vectors(const CartanMatrix& cm, const Classification& cls, const Coxeter& c) {
  return affine_vectors(cm, cls, c, cls.aff_index);
}

AffineVectors affine_vectors(const CartanMatrix& cm, const Classification& cls, const Coxeter& c, int aff) {
  if (cls.kind != Finiteness::Affine) throw Error(ErrorCode::NotAffine, "Cartan matrix is not of affine type");
  const int n = cm.rank();
  if (aff < 0 || aff >= n) throw Error(ErrorCode::InvalidInput, "affine index out of range");
  AffineVectors out;
  out.aff = aff;
  out.delta = cls.delta;
  Mat sys(n + 1, n);
  sys.topRows(n) = coxeter_action(cm, c) - Mat::Identity(n, n);
  sys.row(n) = unit(n, aff).transpose();
  Vec rhs(n + 1);
  rhs << cls.delta, Rational(0);
  const auto g = solve<Rational>(sys, rhs);
  if (!g) throw Error(ErrorCode::NotAffine, "no solution of (c - 1) gamma = delta");
  out.gamma = *g;
  out.xc = -omega_functional(cm, c, cls.delta);
  return out;
}

}  // namespace affscat
