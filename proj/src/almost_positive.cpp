#include "affscat/almost_positive.hpp"

#include <algorithm>
#include <set>

#include "affscat/error.hpp"
#include "affscat/linalg.hpp"

namespace affscat {

namespace {

bool by_height(const Vec& a, const Vec& b) {
  const Rational ha = height(a), hb = height(b);
  if (ha != hb) return ha < hb;
  return VecLess{}(a, b);
}

int negative_simple_index(const Vec& v) {
  int found = -1;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    if (v[i] != -1 || found >= 0) return -1;
    found = static_cast<int>(i);
  }
  return found;
}

void internal_check(bool ok, const std::string& what) {
  if (!ok) throw std::logic_error("tube structure: " + what);
}

}  // namespace

bool TubeStructure::in_hyperplane(const CartanMatrix& cm, const Vec& v) const { return kform(cm, hc, v) == 0; }

bool TubeStructure::is_real_tube_root(const Vec& v) const {
  return std::binary_search(real.begin(), real.end(), v, by_height);
}

std::vector<int> TubeStructure::support(const Vec& v) const {
  for (const auto& cyc : cycles) {
    std::vector<Vec> cols;
    for (int i : cyc) cols.push_back(simples[i]);
    const Mat m = rows_of(cols, v.size()).transpose();
    const auto coeffs = solve<Rational>(m, v);
    if (!coeffs) continue;
    std::vector<int> out;
    for (std::size_t k = 0; k < cyc.size(); ++k) {
      if ((*coeffs)[k] < 0) throw Error(ErrorCode::InvalidInput, "not a positive tube root: " + to_string(v));
      if ((*coeffs)[k] != 0) out.push_back(cyc[k]);
    }
    std::sort(out.begin(), out.end());
    return out;
  }
  throw Error(ErrorCode::InvalidInput, "not a real tube root: " + to_string(v));
}

TubeStructure tube_structure(const Instance& inst) {
  const CartanMatrix& cm = inst.cm;
  const int n = cm.rank();
  const Vec& delta = inst.delta();
  TubeStructure ts;
  ts.hc = inst.av.gamma;

  std::vector<int> fin;
  for (int i = 0; i < n; ++i)
    if (i != inst.av.aff) fin.push_back(i);
  for (const Vec& r : finite_subsystem_roots(cm, fin))
    if (is_positive(r) && ts.in_hyperplane(cm, r)) ts.fin_roots.push_back(r);
  std::sort(ts.fin_roots.begin(), ts.fin_roots.end(), by_height);

  // Each cycle sums to delta, so generators have height at most that of
  // delta, with delta itself a generator only when there are no real ones.
  const int hd = to_int(height(delta));
  std::set<Vec, VecLess> below;
  std::vector<Vec> candidates;
  for (const Vec& r : positive_real_roots(cm, hd - 1))
    if (ts.in_hyperplane(cm, r)) {
      below.insert(r);
      candidates.push_back(r);
    }
  candidates.push_back(delta);
  std::vector<Vec> gens;
  for (const Vec& b : candidates) {
    bool decomposable = false;
    for (const Vec& g : candidates) {
      if (height(g) >= height(b)) break;
      if (below.count(Vec(b - g))) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) gens.push_back(b);
  }

  auto index_of = [&](const Vec& v) {
    for (std::size_t i = 0; i < gens.size(); ++i)
      if (gens[i] == v) return static_cast<int>(i);
    return -1;
  };
  std::vector<bool> seen(gens.size(), false);
  for (std::size_t start = 0; start < gens.size(); ++start) {
    if (seen[start]) continue;
    std::vector<int> cyc;
    int cur = static_cast<int>(start);
    while (!seen[cur]) {
      seen[cur] = true;
      cyc.push_back(cur);
      cur = index_of(apply_coxeter(cm, inst.c, gens[cur]));
      internal_check(cur >= 0, "c does not permute the generators");
    }
    internal_check(cur == static_cast<int>(start), "c-orbit of a generator is not a cycle");
    std::vector<int> relabelled;
    for (int g : cyc) {
      relabelled.push_back(static_cast<int>(ts.simples.size()));
      ts.simples.push_back(gens[g]);
    }
    ts.cycles.push_back(relabelled);
  }
  ts.rotate.assign(ts.simples.size(), -1);
  std::size_t fin_count = 0;
  for (const auto& cyc : ts.cycles) {
    Vec sum = Vec::Zero(n);
    for (std::size_t k = 0; k < cyc.size(); ++k) {
      ts.rotate[cyc[k]] = cyc[(k + 1) % cyc.size()];
      sum += ts.simples[cyc[k]];
    }
    internal_check(sum == delta, "a cycle does not sum to delta");
    const std::size_t m = cyc.size() - 1;
    fin_count += m * (m + 1) / 2;
  }
  internal_check(static_cast<int>(ts.simples.size() - ts.cycles.size()) == n - 2, "finite tube system has rank != n-2");
  internal_check(fin_count == ts.fin_roots.size(), "finite tube system is not a sum of type A components");

  std::set<Vec, VecLess> orbit;
  for (const Vec& r : ts.fin_roots) {
    Vec cur = r;
    do {
      internal_check(is_positive(cur), "c-orbit of a tube root leaves the positive roots");
      orbit.insert(cur);
      cur = apply_coxeter(cm, inst.c, cur);
    } while (cur != r);
  }
  ts.real.assign(orbit.begin(), orbit.end());
  std::sort(ts.real.begin(), ts.real.end(), by_height);
  return ts;
}

const char* ap_kind_name(APKind kind) {
  switch (kind) {
    case APKind::NegSimple: return "negative_simple";
    case APKind::RealNonTube: return "real";
    case APKind::TubeReal: return "tube_real";
    case APKind::Delta: return "delta";
  }
  return "?";
}

APRoot classify_ap(const Instance& inst, const TubeStructure& ts, const Vec& v) {
  APRoot out;
  out.root = v;
  if (const int i = negative_simple_index(v); i >= 0) {
    out.kind = APKind::NegSimple;
    out.index = i;
    return out;
  }
  if (v == inst.delta()) {
    out.kind = APKind::Delta;
    return out;
  }
  if (is_positive(v) && ts.is_real_tube_root(v)) {
    out.kind = APKind::TubeReal;
    out.support = ts.support(v);
    return out;
  }
  if (is_positive(v) && !ts.in_hyperplane(inst.cm, v) && is_real_direction(inst.cm, v)) return out;
  throw Error(ErrorCode::NotAlmostPositive, "not an almost positive root: " + to_string(v));
}

std::vector<Vec> ap_c(const Instance& inst, const TubeStructure& ts, int max_height) {
  const int n = inst.rank();
  std::vector<Vec> out;
  for (int i = 0; i < n; ++i) out.push_back(Vec(-unit(n, i)));
  for (const Vec& r : positive_real_roots(inst.cm, max_height))
    if (!ts.in_hyperplane(inst.cm, r)) out.push_back(r);
  for (const Vec& r : ts.real) out.push_back(r);
  out.push_back(inst.delta());
  std::sort(out.begin(), out.end(), by_height);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Vec sigma(const CartanMatrix& cm, int s, const Vec& v) {
  const int i = negative_simple_index(v);
  if (i >= 0 && i != s) return v;
  return reflect_root(cm, s, v);
}

Vec tau(const Instance& inst, const Vec& v) {
  Vec out = v;
  for (auto it = inst.c.order.rbegin(); it != inst.c.order.rend(); ++it) out = sigma(inst.cm, *it, out);
  return out;
}

Vec tau_inverse(const Instance& inst, const Vec& v) {
  Vec out = v;
  for (int s : inst.c.order) out = sigma(inst.cm, s, out);
  return out;
}

Compatibility::Compatibility(const Instance& inst, int max_height, int cap)
    : inst_(inst), ts_(tube_structure(inst)), cap_(cap > 0 ? cap : 4 * inst.rank() * (max_height + 1)) {}

std::optional<int> Compatibility::direct_degree(const Vec& a, const Vec& b) const {
  const CartanMatrix& cm = inst_.cm;
  if (const int i = negative_simple_index(a); i >= 0) return to_int(b[i]);
  if (const int i = negative_simple_index(b); i >= 0) {
    if (a == inst_.delta()) return to_int(primitive_coroot_coords(cm, a)[i]);
    return to_int(cm.d[i] * coroot(cm, a)[i]);
  }
  const bool a_delta = a == inst_.delta(), b_delta = b == inst_.delta();
  const bool a_tube = ts_.is_real_tube_root(a), b_tube = ts_.is_real_tube_root(b);
  if ((a_delta && (b_tube || b_delta)) || (b_delta && a_tube)) return 0;
  if (a_tube && b_tube) return tube_degree(a, b);
  return std::nullopt;
}

int Compatibility::tube_degree(const Vec& a, const Vec& b) const {
  if (a == b) return -1;
  const auto sa = ts_.support(a), sb = ts_.support(b);
  auto strict_subset = [](const std::vector<int>& x, const std::vector<int>& y) {
    return x.size() < y.size() && std::includes(y.begin(), y.end(), x.begin(), x.end());
  };
  if (strict_subset(sa, sb) || strict_subset(sb, sa)) return 0;
  std::set<int> near;
  for (int j : ts_.support(apply_coxeter(inst_.cm, inst_.c, a))) near.insert(j);
  for (int j : ts_.support(apply_coxeter(inst_.cm, inverse(inst_.c), a))) near.insert(j);
  for (int j : sa) near.erase(j);
  int count = 0;
  for (int j : sb) count += static_cast<int>(near.count(j));
  return count;
}

int Compatibility::degree(const Vec& a, const Vec& b) const {
  if (auto d = direct_degree(a, b)) return *d;
  Vec fa = a, fb = b, ba = a, bb = b;
  for (int k = 1; k <= cap_; ++k) {
    fa = tau(inst_, fa);
    fb = tau(inst_, fb);
    if (auto d = direct_degree(fa, fb)) return *d;
    ba = tau_inverse(inst_, ba);
    bb = tau_inverse(inst_, bb);
    if (auto d = direct_degree(ba, bb)) return *d;
  }
  throw Error(ErrorCode::CapExceeded,
              "compatibility degree of " + to_string(a) + ", " + to_string(b) + " unresolved after " +
                  std::to_string(cap_) + " tau steps");
}

namespace {

void bron_kerbosch(const std::vector<std::vector<bool>>& adj, std::vector<int>& r, std::vector<int> p,
                   std::vector<int> x, std::vector<std::vector<int>>& out) {
  if (p.empty() && x.empty()) {
    out.push_back(r);
    return;
  }
  int pivot = p.empty() ? x.front() : p.front();
  std::size_t best = 0;
  for (const auto* set : {&p, &x})
    for (int u : *set) {
      std::size_t cnt = 0;
      for (int v : p) cnt += adj[u][v];
      if (cnt > best) best = cnt, pivot = u;
    }
  const std::vector<int> candidates = p;
  for (int v : candidates) {
    if (adj[pivot][v]) continue;
    std::vector<int> np, nx;
    for (int u : p)
      if (adj[v][u]) np.push_back(u);
    for (int u : x)
      if (adj[v][u]) nx.push_back(u);
    r.push_back(v);
    bron_kerbosch(adj, r, np, nx, out);
    r.pop_back();
    p.erase(std::find(p.begin(), p.end(), v));
    x.push_back(v);
  }
}

}  // namespace

std::vector<std::vector<Vec>> maximal_compatible_sets(const Compatibility& comp, const std::vector<Vec>& roots) {
  const std::size_t m = roots.size();
  std::vector<std::vector<bool>> adj(m, std::vector<bool>(m, false));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) adj[i][j] = adj[j][i] = comp.compatible(roots[i], roots[j]);
  std::vector<int> all(m);
  for (std::size_t i = 0; i < m; ++i) all[i] = static_cast<int>(i);
  std::vector<std::vector<int>> cliques;
  std::vector<int> r;
  bron_kerbosch(adj, r, all, {}, cliques);
  for (auto& c : cliques) std::sort(c.begin(), c.end());
  std::sort(cliques.begin(), cliques.end());
  std::vector<std::vector<Vec>> out;
  for (const auto& c : cliques) {
    std::vector<Vec> set;
    for (int i : c) set.push_back(roots[i]);
    out.push_back(set);
  }
  return out;
}

Clusters clusters(const Compatibility& comp, int max_height) {
  const Instance& inst = comp.instance();
  const int n = inst.rank();
  Clusters out;
  for (auto& set : maximal_compatible_sets(comp, ap_c(inst, comp.tubes(), max_height))) {
    const bool has_delta = std::find(set.begin(), set.end(), inst.delta()) != set.end();
    const int r = rank<Rational>(rows_of(set, n));
    if (has_delta && static_cast<int>(set.size()) == n - 1 && r == n - 1)
      out.imaginary.push_back(std::move(set));
    else if (!has_delta && static_cast<int>(set.size()) == n && r == n)
      out.real.push_back(std::move(set));
    else
      out.truncated.push_back(std::move(set));
  }
  return out;
}

std::vector<Vec> nu_image(const Instance& inst, const std::vector<Vec>& roots) {
  std::vector<Vec> out;
  for (const Vec& r : roots) out.push_back(nu(inst.cm, inst.c, r));
  return out;
}

Cone nu_cone(const Instance& inst, const std::vector<Vec>& roots) {
  return cone_from_generators(inst.rank(), nu_image(inst, roots));
}

}  // namespace affscat
