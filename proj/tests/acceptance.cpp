// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "affscat/almost_positive.hpp"
#include "affscat/error.hpp"
#include "affscat/mutation.hpp"
#include "affscat/scattering.hpp"
#include "affscat/shards.hpp"
#include "affscat/sortable.hpp"

using namespace affscat;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail = what;
    pass = pass && ok;
  }
};

struct Desk {
  std::string name;
  Instance inst;
  ScatDiagram d;  // built at H = k = 5 by criterion 2
};

const int kHeight = 5;

std::vector<Desk>& desk() {
  static std::vector<Desk> all{{"A_1^(1)", Instance::from_exchange(mat({{0, 2}, {-2, 0}})), {}},
                               {"acyclic A~_2", Instance::from_exchange(mat({{0, 1, 1}, {-1, 0, 1}, {-1, -1, 0}})), {}}};
  return all;
}

// Coefficients of (1 - q)^{-2}, times (1 + q) when twisted, by convolution.
std::vector<Rational> limiting_expansion(bool twisted, int order) {
  std::vector<Rational> sq(order + 1, Rational(0));
  for (int i = 0; i <= order; ++i)
    for (int j = 0; i + j <= order; ++j) sq[i + j] += 1;
  if (!twisted) return sq;
  std::vector<Rational> out(order + 1);
  for (int i = 0; i <= order; ++i) out[i] = sq[i] + (i > 0 ? sq[i - 1] : Rational(0));
  return out;
}

Outcome rank2_limits() {
  Outcome o;
  const int degree = 8;
  for (const auto& [b, limit, twisted] :
       std::vector<std::tuple<Mat, Vec, bool>>{{mat({{0, 2}, {-2, 0}}), vec({1, 1}), false},
                                               {mat({{0, 1}, {-4, 0}}), vec({1, 2}), true}}) {
    const ScatDiagram d = rank2_complete(b, degree);
    const int w = d.find(limit);
    o.require(w >= 0, "no limiting wall");
    if (w < 0) continue;
    const int order = degree / to_int(height(limit));
    const auto expected = limiting_expansion(twisted, order);
    const TruncatedSeries& f = d.walls[w].f;
    o.require(f.order() == order, "limiting series has the wrong order");
    for (int i = 0; i <= order; ++i) o.require(f.coeff(i) == expected[i], "coefficient mismatch");
  }
  return o;
}

Outcome construction_identity() {
  Outcome o;
  for (Desk& k : desk()) {
    k.d = build_dcscat(k.inst, kHeight, kHeight);
    o.require(same_walls(k.d, build_easy_scat(k.inst, kHeight, kHeight)), k.name + ": wall sets differ");
    o.detail += k.name + ": " + std::to_string(k.d.walls.size()) + " walls; ";
  }
  return o;
}

Outcome consistency() {
  Outcome o;
  for (const Desk& k : desk()) {
    const ConsistencyReport r = check_consistency(k.d, k.inst.cm, kHeight);
    o.require(!r.faces.empty() && r.ok(), k.name + ": a loop is not the identity");
    ScatDiagram without = k.d;
    without.walls.erase(without.walls.begin() + without.find(k.inst.delta()));
    o.require(!check_consistency(without, k.inst.cm, kHeight).ok(), k.name + ": removing d_inf went unnoticed");
    o.detail += k.name + ": " + std::to_string(r.faces.size()) + " loops; ";
  }
  return o;
}

// Membership in {<x, normal> = 0, <x, phi> <= 0}, straight from the pairing;
// strict inequalities give the relative interior of a full wall.
bool in_wall(const CartanMatrix& cm, const Wall& w, const Vec& x, bool strict) {
  if (pairing(cm, x, w.normal()) != 0) return false;
  for (const Vec& phi : w.shape.le) {
    const Rational v = pairing(cm, x, phi);
    if (v > 0 || (strict && v == 0)) return false;
  }
  return true;
}

Outcome wall_classification() {
  Outcome o;
  for (const Desk& k : desk()) {
    std::set<Vec, VecLess> normals;
    for (const Wall& w : k.d.walls) {
      o.require(normals.insert(w.normal()).second, k.name + ": two walls in one hyperplane");
      o.require(w.cone.dimension() == k.inst.rank() - 1, k.name + ": wall of wrong dimension");
      const Vec om = k.inst.b * w.normal();  // omega(alpha_i^vee, beta) = sum_j b_ij beta_j
      const bool incoming = in_wall(k.inst.cm, w, om, false);
      if (height(w.normal()) == 1) {
        o.require(incoming, k.name + ": initial wall not incoming");
      } else {
        o.require(!incoming, k.name + ": wall " + to_string(w.normal()) + " is incoming");
        o.require(in_wall(k.inst.cm, w, Vec(-om), true), k.name + ": wall " + to_string(w.normal()) + " not gregarious");
      }
    }
  }
  return o;
}

Outcome normal_identity() {
  Outcome o;
  for (const Desk& k : desk()) {
    std::set<Vec, VecLess> normals, ap;
    for (const Wall& w : k.d.walls) normals.insert(w.normal());
    for (const Vec& r : ap_c(k.inst, tube_structure(k.inst), kHeight))
      if (is_positive(r) && height(r) <= kHeight) ap.insert(r);
    o.require(normals == ap, k.name + ": normals differ from the positive almost positive roots");
  }
  return o;
}

Outcome imaginary_wall_geometry() {
  Outcome o;
  for (const Desk& k : desk()) {
    const TubeStructure ts = tube_structure(k.inst);
    const Wall& w = k.d.walls[k.d.find(k.inst.delta())];
    std::set<Vec, VecLess> rays(w.cone.rays().begin(), w.cone.rays().end()), images;
    for (const Vec& g : ts.simples) images.insert(primitive(nu(k.inst.cm, k.inst.c, g)));
    o.require(w.cone.lineality().empty() && rays == images, k.name + ": extreme rays differ from the tube generators");
    o.require(Vec(2 * nu(k.inst.cm, k.inst.c, k.inst.delta())) == k.inst.av.xc, k.name + ": nu(delta) != x_c / 2");
  }
  return o;
}

Outcome compatibility_axioms() {
  Outcome o;
  const int h = 4;
  for (const Desk& k : desk()) {
    const Instance& inst = k.inst;
    const CartanMatrix& cm = inst.cm;
    const int n = inst.rank();
    const Compatibility comp(inst, h);
    const TubeStructure& ts = comp.tubes();
    const Vec& delta = inst.delta();
    const Coxeter cinv = inverse(inst.c);

    // <rho_i, beta^vee> = 2 d_i beta_i / K(beta, beta); delta uses its
    // primitive coroot.
    auto coroot_coord = [&](const Vec& beta, int i) -> Rational {
      if (beta == delta) return primitive_coroot_coords(cm, delta)[i];
      return 2 * cm.d[i] * beta[i] / kform(cm, beta, beta);
    };
    // Degree on pairs of real tube roots, from the support definition.
    auto tube_degree = [&](const Vec& a, const Vec& b) {
      if (a == b) return -1;
      const auto sa = ts.support(a), sb = ts.support(b);
      const std::set<int> A(sa.begin(), sa.end()), B(sb.begin(), sb.end());
      auto strict_sub = [](const std::set<int>& x, const std::set<int>& y) {
        if (x.size() >= y.size()) return false;
        for (int i : x)
          if (!y.count(i)) return false;
        return true;
      };
      if (strict_sub(A, B) || strict_sub(B, A)) return 0;
      std::set<int> adjacent;
      for (const Vec& v : {apply_coxeter(cm, inst.c, a), apply_coxeter(cm, cinv, a)})
        for (int j : ts.support(v))
          if (!A.count(j)) adjacent.insert(j);
      int count = 0;
      for (int j : B) count += static_cast<int>(adjacent.count(j));
      return count;
    };

    const auto ap = ap_c(inst, ts, h);
    o.detail += k.name + ": " + std::to_string(ap.size() * ap.size()) + " pairs; ";
    for (const Vec& a : ap)
      for (const Vec& b : ap) {
        const int deg = comp.degree(a, b);
        for (int i = 0; i < n; ++i) {
          if (a == -unit(n, i)) o.require(deg == b[i], k.name + ": base condition");
          if (b == -unit(n, i)) o.require(Rational(deg) == coroot_coord(a, i), k.name + ": cobase condition");
        }
        const bool ta = ts.is_real_tube_root(a), tb = ts.is_real_tube_root(b);
        if (ta && tb) o.require(deg == tube_degree(a, b), k.name + ": tube condition");
        if ((a == delta && (tb || b == delta)) || (b == delta && ta)) o.require(deg == 0, k.name + ": delta condition");
        o.require(comp.degree(tau(inst, a), tau(inst, b)) == deg, k.name + ": tau invariance");
        o.require((deg == 0) == (comp.degree(b, a) == 0), k.name + ": compatibility not symmetric");
        if (a == b && ta) o.require(deg == -1, k.name + ": tube root not self-incompatible");
      }
  }
  return o;
}

Outcome fan_coincidence() {
  Outcome o;
  for (const Desk& k : desk()) {
    const FanComparison r = fans_compare(k.inst, kHeight, kHeight, 6, 200, 2024);
    o.require(r.pairs >= 200, k.name + ": fewer than 200 pairs");
    o.require(r.walls_match(), k.name + ": wall set differs from the fan skeleton");
    o.require(r.exact_discrepancies == 0, k.name + ": exact discrepancies");
    o.require(r.probe_contradictions == 0, k.name + ": sign-probe contradictions");
    if (o.pass)
      o.detail += k.name + ": " + std::to_string(r.pairs) + " pairs, " + std::to_string(r.same_cone) +
                  " same-chamber, " + std::to_string(r.unresolved) + " unresolved; ";
  }
  return o;
}

Outcome shard_round_trips() {
  Outcome o;
  for (const auto& [k, length] : std::vector<std::pair<Desk*, int>>{{&desk()[0], 12}, {&desk()[1], 10}}) {
    const CartanMatrix& cm = k->inst.cm;
    const auto elements = enumerate_up_to_length(cm, length);
    const auto jc = sortable_join_irreducibles(cm, k->inst.c, length);
    const auto jci = sortable_join_irreducibles(cm, inverse(k->inst.c), length);
    for (const auto* family : {&jc, &jci})
      for (const auto& j : *family) {
        const RootCone sh = shard_of_join_irreducible(cm, k->inst.cls, j.element);
        o.require(join_irreducible_of_shard(cm, sh, elements) == j.element, k->name + ": round trip failed");
      }
    for (const auto& j : jc)
      for (const auto& jp : jci) {
        if (j.root != jp.root) continue;
        RootCone neg = shard_of_join_irreducible(cm, k->inst.cls, jp.element);
        for (Vec& phi : neg.le) phi = -phi;
        o.require(neg.cone(cm) == shard_of_join_irreducible(cm, k->inst.cls, j.element).cone(cm),
                  k->name + ": antipodal shards differ");
      }
    o.detail += k->name + ": " + std::to_string(jc.size() + jci.size()) + " join-irreducibles; ";
  }
  return o;
}

Outcome mutation_algebra() {
  Outcome o;
  std::mt19937_64 rng(12345);
  std::uniform_int_distribution<int> entry(-3, 3), size(2, 4), extra(1, 3), sym(1, 3);
  for (int t = 0; t < 1000; ++t) {
    // D B skew-symmetric with D = diag(d_i): b_ji = -d_i b_ij / d_j.
    const int n = size(rng), l = extra(rng);
    std::vector<int> d(n);
    for (int& x : d) x = sym(rng);
    Mat m = Mat::Zero(n + l, n);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        const int e = entry(rng);
        m(i, j) = Rational(e * d[j]);
        m(j, i) = Rational(-e * d[i]);
      }
    for (int i = n; i < n + l; ++i)
      for (int j = 0; j < n; ++j) m(i, j) = entry(rng);
    for (int k = 0; k < n; ++k) o.require(mutate(mutate(m, k), k) == m, "mutation is not an involution");
  }
  const std::vector<Mat> instances{mat({{0, 2}, {-2, 0}}), mat({{0, 1, 1}, {-1, 0, 1}, {-1, -1, 0}}),
                                   mat({{0, 1}, {-4, 0}}), mat({{0, 1, 0}, {-1, 0, 1}, {0, -3, 0}})};
  for (const Mat& b : instances) {
    const Instance inst = Instance::from_exchange(b);
    o.require(mutate_word(b, inst.c.order) == b, "Coxeter word does not fix B");
    const Mat bt = b.transpose();
    for (const Vec& beta : ap_c(inst, tube_structure(inst), 4))
      o.require(eta(bt, inst.c.order, nu(inst.cm, inst.c, beta)) == nu(inst.cm, inst.c, tau(inst, beta)),
                "eta does not intertwine nu_c and tau_c at " + to_string(beta));
  }
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit_seconds;  // 0: no limit
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "rank-2 limiting walls", 10, rank2_limits},
      {2, "construction identity", 60, construction_identity},
      {3, "consistency", 300, consistency},
      {4, "wall classification", 0, wall_classification},
      {5, "normal-set identity", 0, normal_identity},
      {6, "d_inf geometry", 0, imaginary_wall_geometry},
      {7, "compatibility-degree axioms", 0, compatibility_axioms},
      {8, "fan coincidence evidence", 600, fan_coincidence},
      {9, "sortable/shard round trips", 0, shard_round_trips},
      {10, "mutation algebra", 0, mutation_algebra},
  };

  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_seconds > 0 && secs > c.limit_seconds) {
      o.pass = false;
      o.detail = "over the time limit; " + o.detail;
    }
    failed += !o.pass;
    std::printf("%s %2d %s (%.2f s) %s\n", o.pass ? "PASS" : "FAIL", c.id, c.name, secs, o.detail.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
