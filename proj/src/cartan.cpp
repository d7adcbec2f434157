#include "affscat/cartan.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>

#include "affscat/error.hpp"
#include "affscat/linalg.hpp"

namespace affscat {

namespace {

// Positive D with D_j m_ij = s D_i m_ji on every edge, normalized to coprime
// integers per connected component.
Vec solve_symmetrizer(const Mat& m, int s) {
  const int n = static_cast<int>(m.rows());
  Vec big_d = Vec::Zero(n);
  std::vector<int> component(n, -1);
  int ncomp = 0;
  for (int root = 0; root < n; ++root) {
    if (component[root] >= 0) continue;
    component[root] = ncomp;
    big_d(root) = 1;
    std::deque<int> queue{root};
    while (!queue.empty()) {
      const int i = queue.front();
      queue.pop_front();
      for (int j = 0; j < n; ++j) {
        if (i == j || m(i, j) == 0) continue;
        const Rational dj = s * big_d(i) * m(j, i) / m(i, j);
        if (dj <= 0)
          throw Error(ErrorCode::NotSkewSymmetrizable, "no positive symmetrizer");
        if (component[j] < 0) {
          component[j] = ncomp;
          big_d(j) = dj;
          queue.push_back(j);
        } else if (big_d(j) != dj) {
          throw Error(ErrorCode::NotSkewSymmetrizable, "inconsistent symmetrizer around a cycle");
        }
      }
    }
    ++ncomp;
  }
  for (int c = 0; c < ncomp; ++c) {
    std::vector<int> idx;
    for (int i = 0; i < n; ++i)
      if (component[i] == c) idx.push_back(i);
    Vec part(static_cast<Eigen::Index>(idx.size()));
    for (std::size_t k = 0; k < idx.size(); ++k) part(k) = big_d(idx[k]);
    part = primitive(part);
    for (std::size_t k = 0; k < idx.size(); ++k) big_d(idx[k]) = part(k);
  }
  return big_d;
}

bool isomorphic(const Mat& a, const Mat& t) {
  const int n = static_cast<int>(a.rows());
  if (t.rows() != n) return false;
  std::vector<int> perm(n, -1);
  std::vector<bool> used(n, false);
  std::function<bool(int)> place = [&](int i) {
    if (i == n) return true;
    for (int v = 0; v < n; ++v) {
      if (used[v]) continue;
      bool ok = true;
      for (int k = 0; k < i && ok; ++k)
        ok = a(v, perm[k]) == t(i, k) && a(perm[k], v) == t(k, i);
      if (!ok) continue;
      used[v] = true;
      perm[i] = v;
      if (place(i + 1)) return true;
      used[v] = false;
    }
    return false;
  };
  return place(0);
}

struct Diagram {
  int n;
  Mat a;
  explicit Diagram(int size) : n(size), a(Mat::Identity(size, size) * 2) {}
  void simple(int i, int j) {
    a(i, j) = -1;
    a(j, i) = -1;
  }
  // `lng` is the longer root; the ratio of squared lengths is m.
  void multiple(int lng, int shrt, int m) {
    a(lng, shrt) = -1;
    a(shrt, lng) = -m;
  }
  void chain(int from, int to) {
    for (int i = from; i < to; ++i) simple(i, i + 1);
  }
};

std::string label_of(const std::string& letter, int index, int twist) {
  return letter + "_" + std::to_string(index) + "^(" + std::to_string(twist) + ")";
}

Mat star(int a1, int a2, int a3) {
  Diagram g(1 + a1 + a2 + a3);
  int next = 1;
  for (int len : {a1, a2, a3}) {
    int prev = 0;
    for (int k = 0; k < len; ++k) {
      g.simple(prev, next);
      prev = next++;
    }
  }
  return g.a;
}

std::map<std::string, Mat> affine_table(int r) {
  std::map<std::string, Mat> out;
  const int l = r - 1;
  if (r == 2) {
    out[label_of("A", 1, 1)] = mat({{2, -2}, {-2, 2}});
    Diagram g(2);
    g.multiple(0, 1, 4);
    out[label_of("A", 2, 2)] = g.a;
    return out;
  }
  {
    Diagram g(r);
    g.chain(0, l);
    g.simple(l, 0);
    out[label_of("A", l, 1)] = g.a;
  }
  if (l >= 3) {
    Diagram g(r);
    g.simple(0, 2);
    g.chain(1, l - 1);
    g.multiple(l - 1, l, 2);
    out[label_of("B", l, 1)] = g.a;
  }
  if (l >= 2) {
    Diagram g(r);
    g.multiple(0, 1, 2);
    g.chain(1, l - 1);
    g.multiple(l, l - 1, 2);
    out[label_of("C", l, 1)] = g.a;
  }
  if (l >= 4) {
    Diagram g(r);
    g.simple(0, 2);
    g.chain(1, l - 1);
    g.simple(l - 2, l);
    out[label_of("D", l, 1)] = g.a;
  }
  if (r == 7) out[label_of("E", 6, 1)] = star(2, 2, 2);
  if (r == 8) out[label_of("E", 7, 1)] = star(3, 3, 1);
  if (r == 9) out[label_of("E", 8, 1)] = star(5, 2, 1);
  if (r == 5) {
    Diagram f(5);
    f.chain(0, 2);
    f.multiple(2, 3, 2);
    f.simple(3, 4);
    out[label_of("F", 4, 1)] = f.a;
    Diagram e(5);
    e.chain(0, 2);
    e.multiple(3, 2, 2);
    e.simple(3, 4);
    out[label_of("E", 6, 2)] = e.a;
  }
  if (r == 3) {
    Diagram g(3);
    g.simple(0, 1);
    g.multiple(1, 2, 3);
    out[label_of("G", 2, 1)] = g.a;
    Diagram d(3);
    d.simple(0, 1);
    d.multiple(2, 1, 3);
    out[label_of("D", 4, 3)] = d.a;
  }
  if (l >= 2) {
    Diagram g(r);
    g.multiple(1, 0, 2);
    g.chain(1, l - 1);
    g.multiple(l, l - 1, 2);
    out[label_of("A", 2 * l, 2)] = g.a;
  }
  if (l >= 3) {
    Diagram g(r);
    g.simple(0, 2);
    g.chain(1, l - 1);
    g.multiple(l, l - 1, 2);
    out[label_of("A", 2 * l - 1, 2)] = g.a;
  }
  if (l >= 2) {
    Diagram g(r);
    g.multiple(1, 0, 2);
    g.chain(1, l - 1);
    g.multiple(l - 1, l, 2);
    out[label_of("D", l + 1, 2)] = g.a;
  }
  return out;
}

void check_square_integral(const Mat& m) {
  if (m.rows() != m.cols() || m.rows() == 0)
    throw Error(ErrorCode::InvalidInput, "matrix must be square and nonempty");
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (!is_integer(m(i, j))) throw Error(ErrorCode::InvalidInput, "matrix entries must be integers");
}

}  // namespace

void validate_exchange(const Mat& b) {
  check_square_integral(b);
  for (Eigen::Index i = 0; i < b.rows(); ++i) {
    if (b(i, i) != 0) throw Error(ErrorCode::NotSkewSymmetrizable, "nonzero diagonal entry");
    for (Eigen::Index j = 0; j < b.cols(); ++j)
      if (sign(b(i, j)) != -sign(b(j, i)))
        throw Error(ErrorCode::NotSkewSymmetrizable, "entries b_ij and b_ji must have opposite signs");
  }
  solve_symmetrizer(b, -1);
}

CartanMatrix exchange_to_cartan(const Mat& b) {
  validate_exchange(b);
  const int n = static_cast<int>(b.rows());
  CartanMatrix cm;
  cm.a = Mat(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) cm.a(i, j) = i == j ? Rational(2) : Rational(-abs(b(i, j)));
  const Vec big_d = solve_symmetrizer(b, -1);
  cm.d = Vec(n);
  for (int i = 0; i < n; ++i) cm.d(i) = 1 / big_d(i);
  return cm;
}

CartanMatrix cartan_from_matrix(const Mat& a) {
  check_square_integral(a);
  const int n = static_cast<int>(a.rows());
  for (int i = 0; i < n; ++i) {
    if (a(i, i) != 2) throw Error(ErrorCode::InvalidInput, "Cartan diagonal must be 2");
    for (int j = 0; j < n; ++j)
      if (i != j && (a(i, j) > 0 || (a(i, j) == 0) != (a(j, i) == 0)))
        throw Error(ErrorCode::InvalidInput, "not a generalized Cartan matrix");
  }
  Mat off = a;
  for (int i = 0; i < n; ++i) off(i, i) = 0;
  const Vec big_d = solve_symmetrizer(off, 1);
  CartanMatrix cm{a, Vec(n)};
  for (int i = 0; i < n; ++i) cm.d(i) = 1 / big_d(i);
  return cm;
}

Mat affine_cartan(const std::string& label) {
  for (int r = 2; r <= 12; ++r) {
    auto table = affine_table(r);
    auto it = table.find(label);
    if (it != table.end()) return it->second;
  }
  throw Error(ErrorCode::InvalidInput, "unknown affine label " + label);
}

std::vector<std::string> affine_labels(int rank) {
  std::vector<std::string> out;
  for (const auto& [name, m] : affine_table(rank)) out.push_back(name);
  return out;
}

Classification classify(const CartanMatrix& cm) {
  Classification cls;
  const int n = cm.rank();
  const Mat s = cm.gram();
  if (positive_definite<Rational>(s)) {
    cls.kind = Finiteness::Finite;
    return cls;
  }
  if (determinant<Rational>(s) != 0) return cls;
  for (int del = 0; del < n; ++del) {
    std::vector<int> idx;
    for (int i = 0; i < n; ++i)
      if (i != del) idx.push_back(i);
    if (!positive_definite<Rational>(principal_submatrix<Rational>(s, idx))) return cls;
  }
  const Mat k = kernel<Rational>(cm.a);
  if (k.cols() != 1) return cls;
  Vec delta = primitive(Vec(k.col(0)));
  if (delta.sum() < 0) delta = -delta;
  if (!is_positive(delta)) return cls;
  cls.kind = Finiteness::Affine;
  cls.delta = delta;

  Vec dual(n);
  for (int i = 0; i < n; ++i) dual(i) = delta(i) * cm.d(i);
  dual = primitive(dual);
  for (int i = 0; i < n; ++i) {
    if (dual(i) == 1) {
      cls.aff_index = i;
      break;
    }
  }
  for (const auto& [name, t] : affine_table(n)) {
    if (isomorphic(cm.a, t)) {
      cls.label = name;
      break;
    }
  }
  // Twisted type A of even rank is the only affine type with a factor of
  // four between squared root lengths.
  Rational lo = cm.d(0), hi = cm.d(0);
  for (int i = 1; i < n; ++i) {
    lo = std::min(lo, cm.d(i));
    hi = std::max(hi, cm.d(i));
  }
  cls.is_A2k2 = hi == 4 * lo;
  return cls;
}

Rational pairing(const CartanMatrix& cm, const Vec& weight, const Vec& root) {
  Rational sum = 0;
  for (Eigen::Index i = 0; i < root.size(); ++i) sum += weight(i) * cm.d(i) * root(i);
  return sum;
}

Rational kform(const CartanMatrix& cm, const Vec& u, const Vec& v) {
  return (u.transpose() * cm.gram() * v).value();
}

Vec kfunctional(const CartanMatrix& cm, const Vec& v) { return cm.a * v; }

Vec root_functional(const CartanMatrix& cm, const Vec& root) { return cm.d.cwiseProduct(root); }

Vec reflect_root(const CartanMatrix& cm, int i, const Vec& v) {
  Vec out = v;
  out(i) -= (cm.a.row(i) * v).value();
  return out;
}

Vec reflect_weight(const CartanMatrix& cm, int i, const Vec& x) {
  Vec out = x;
  for (Eigen::Index j = 0; j < x.size(); ++j)
    out(j) = j == i ? Rational(-x(i)) : Rational(x(j) - cm.a(j, i) * x(i));
  return out;
}

Mat simple_reflection_on_roots(const CartanMatrix& cm, int i) {
  const int n = cm.rank();
  Mat m = Mat::Identity(n, n);
  m.row(i) -= cm.a.row(i);
  return m;
}

Mat simple_reflection_on_weights(const CartanMatrix& cm, int i) {
  const int n = cm.rank();
  Mat m = Mat::Identity(n, n);
  for (int j = 0; j < n; ++j) m(j, i) = j == i ? Rational(-1) : Rational(-cm.a(j, i));
  return m;
}

bool is_real_direction(const CartanMatrix& cm, const Vec& beta) { return kform(cm, beta, beta) > 0; }

Vec coroot(const CartanMatrix& cm, const Vec& beta) {
  const Rational k = kform(cm, beta, beta);
  if (k <= 0) throw Error(ErrorCode::InvalidInput, "coroot of a non-real vector " + to_string(beta));
  return beta * (Rational(2) / k);
}

Vec primitive_coroot_coords(const CartanMatrix& cm, const Vec& beta) {
  return primitive(Vec(beta.cwiseProduct(cm.d)));
}

Vec primitive_coroot(const CartanMatrix& cm, const Vec& beta) {
  return primitive_coroot_coords(cm, beta).cwiseQuotient(cm.d);
}

Vec reflect_in_root(const CartanMatrix& cm, const Vec& beta, const Vec& v) {
  return v - kform(cm, coroot(cm, beta), v) * beta;
}

namespace {

void sort_roots(std::vector<Vec>& roots) {
  std::sort(roots.begin(), roots.end(), [](const Vec& x, const Vec& y) {
    const Rational hx = height(x), hy = height(y);
    if (hx != hy) return hx < hy;
    return VecLess{}(x, y);
  });
}

}  // namespace

std::vector<Vec> positive_real_roots(const CartanMatrix& cm, int max_height,
                                     const std::vector<int>& support, std::size_t cap) {
  const int n = cm.rank();
  std::vector<int> idx = support;
  if (idx.empty())
    for (int i = 0; i < n; ++i) idx.push_back(i);
  std::set<Vec, VecLess> seen;
  std::deque<Vec> queue;
  for (int i : idx) {
    if (max_height < 1) break;
    seen.insert(unit(n, i));
    queue.push_back(unit(n, i));
  }
  while (!queue.empty()) {
    const Vec beta = queue.front();
    queue.pop_front();
    for (int i : idx) {
      const Rational c = (cm.a.row(i) * beta).value();
      if (c >= 0) continue;
      Vec next = beta;
      next(i) -= c;
      if (height(next) > max_height || seen.count(next)) continue;
      seen.insert(next);
      if (seen.size() > cap) throw Error(ErrorCode::CapExceeded, "root enumeration cap exceeded");
      queue.push_back(next);
    }
  }
  std::vector<Vec> out(seen.begin(), seen.end());
  sort_roots(out);
  return out;
}

std::vector<Vec> finite_subsystem_roots(const CartanMatrix& cm, const std::vector<int>& support) {
  auto pos = positive_real_roots(cm, 1 << 20, support, 100000);
  std::vector<Vec> out = pos;
  for (const Vec& v : pos) out.push_back(-v);
  return out;
}

std::vector<Vec> positive_roots(const CartanMatrix& cm, const Classification& cls, int max_height) {
  auto out = positive_real_roots(cm, max_height);
  if (cls.kind == Finiteness::Affine) {
    const Rational h = height(cls.delta);
    for (int k = 1; k * h <= max_height; ++k) out.push_back(cls.delta * Rational(k));
    sort_roots(out);
  }
  return out;
}

}  // namespace affscat
