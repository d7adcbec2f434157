#include "affscat/shards.hpp"

#include <algorithm>

#include "affscat/error.hpp"
#include "affscat/linalg.hpp"

namespace affscat {

namespace {

Rational cross(const Vec& a, const Vec& b) { return a(0) * b(1) - a(1) * b(0); }

bool in_plane(const Mat& basis_rows, const Vec& v) {
  Mat m(3, basis_rows.cols());
  m << basis_rows, v.transpose();
  return rank<Rational>(m) == 2;
}

Rank2Subsystem plane_subsystem(const Vec& beta, const Vec& gamma, const std::vector<Vec>& candidates) {
  Mat basis(2, beta.size());
  basis << beta.transpose(), gamma.transpose();
  if (rank<Rational>(basis) != 2) throw Error(ErrorCode::InvalidInput, "roots span a line, not a plane");
  Rank2Subsystem out;
  std::vector<Vec> coords;
  for (const Vec& phi : candidates) {
    if (!in_plane(basis, phi)) continue;
    out.roots.push_back(phi);
    coords.push_back(*solve<Rational>(basis.transpose(), phi));
  }
  // All positive roots of the plane lie in a pointed cone, so the angular
  // order given by the cross product is total.
  std::size_t lo = 0, hi = 0;
  for (std::size_t i = 1; i < coords.size(); ++i) {
    if (cross(coords[i], coords[lo]) > 0) lo = i;
    if (cross(coords[hi], coords[i]) > 0) hi = i;
  }
  Vec a = out.roots[lo], b = out.roots[hi];
  // Prefer the lowest root on each extreme ray.
  for (const Vec& r : out.roots) {
    if (cross(*solve<Rational>(basis.transpose(), r), coords[lo]) == 0 && height(r) < height(a)) a = r;
    if (cross(*solve<Rational>(basis.transpose(), r), coords[hi]) == 0 && height(r) < height(b)) b = r;
  }
  if (height(b) < height(a) || (height(b) == height(a) && VecLess{}(a, b))) std::swap(a, b);
  out.first = a;
  out.second = b;
  return out;
}

}  // namespace

Rank2Subsystem canonical_roots_rank2(const CartanMatrix& cm, const Classification& cls, const Vec& beta,
                                     const Vec& gamma, int max_height) {
  if (height(beta) > max_height || height(gamma) > max_height)
    throw Error(ErrorCode::HeightInsufficient, "height bound is below the given roots");
  return plane_subsystem(beta, gamma, positive_roots(cm, cls, max_height));
}

bool cuts(const CartanMatrix& cm, const Classification& cls, const Vec& gamma, const Vec& beta) {
  const int h = static_cast<int>(std::max(to_int(height(beta)), to_int(height(gamma))));
  const Rank2Subsystem sub = canonical_roots_rank2(cm, cls, beta, gamma, h);
  auto canonical = [&](const Vec& v) { return v == sub.first || v == sub.second; };
  return canonical(gamma) && !canonical(beta);
}

namespace {

std::vector<Vec> cut_set_at(const CartanMatrix& cm, const Classification& cls, const Vec& beta,
                            int max_height) {
  const int h = std::max(max_height, static_cast<int>(to_int(height(beta))));
  const std::vector<Vec> roots = positive_roots(cm, cls, h);
  std::vector<Vec> out;
  for (const Vec& gamma : roots) {
    if (height(gamma) > max_height || gamma == beta || !is_real_direction(cm, gamma)) continue;
    Mat pair(2, beta.size());
    pair << beta.transpose(), gamma.transpose();
    if (rank<Rational>(pair) < 2) continue;
    const Rank2Subsystem sub = plane_subsystem(beta, gamma, roots);
    const bool gamma_canonical = gamma == sub.first || gamma == sub.second;
    const bool beta_canonical = beta == sub.first || beta == sub.second;
    if (gamma_canonical && !beta_canonical) out.push_back(gamma);
  }
  return out;
}

}  // namespace

CutSet cut_set(const CartanMatrix& cm, const Classification& cls, const Vec& beta, int max_height) {
  CutSet out;
  out.roots = cut_set_at(cm, cls, beta, max_height);
  const int step = cls.kind == Finiteness::Affine ? static_cast<int>(to_int(height(cls.delta))) : 1;
  out.certified = cut_set_at(cm, cls, beta, max_height + step) == out.roots;
  return out;
}

RootCone shard_of_join_irreducible(const CartanMatrix& cm, const Classification& cls, const WeylElement& j) {
  RootCone out;
  out.normal = j.cover_root();
  const CutSet cut = cut_set(cm, cls, out.normal, static_cast<int>(to_int(height(out.normal))));
  for (const Vec& gamma : cut.roots)
    if (j.has_inversion(gamma)) out.le.push_back(gamma);
  return out;
}

RootCone shard_of_root(const CartanMatrix& cm, const Classification& cls, const Coxeter& c, const Vec& beta) {
  RootCone out;
  out.normal = beta;
  const CutSet cut = cut_set(cm, cls, beta, static_cast<int>(to_int(height(beta))));
  for (const Vec& gamma : cut.roots)
    if (omega(cm, c, gamma, beta) > 0) out.le.push_back(gamma);
  return out;
}

std::optional<WeylElement> join_irreducible_of_shard(const CartanMatrix& cm, const RootCone& shard,
                                                     const std::vector<WeylElement>& elements) {
  const Cone sigma = shard.cone(cm);
  const int n = cm.rank();
  for (const WeylElement& w : elements) {
    if (!w.has_inversion(shard.normal)) continue;
    for (int s : w.right_descents()) {
      if (Vec(-w.act_root(unit(n, s))) != shard.normal) continue;
      // A facet of a chamber meets no reflecting hyperplane other than its
      // own in its relative interior, so it lies in the shard or meets it
      // in lower dimension.
      Vec p = Vec::Zero(n);
      for (int i = 0; i < n; ++i)
        if (i != s) p += w.act_weight(unit(n, i));
      if (sigma.contains(p)) return w;
    }
  }
  return std::nullopt;
}

std::optional<WeylElement> join_irreducible_of_shard(const CartanMatrix& cm, const RootCone& shard,
                                                     int max_length) {
  return join_irreducible_of_shard(cm, shard, enumerate_up_to_length(cm, max_length));
}

}  // namespace affscat
