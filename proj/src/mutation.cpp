#include "affscat/mutation.hpp"

#include <algorithm>
#include <optional>
#include <random>
#include <set>

#include "affscat/almost_positive.hpp"
#include "affscat/error.hpp"
#include "affscat/linalg.hpp"
#include "affscat/scattering.hpp"

namespace affscat {

namespace {

struct SetLess {
  bool operator()(const std::vector<Vec>& a, const std::vector<Vec>& b) const {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), VecLess{});
  }
};

int sgn(const Rational& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

void check_index(const Mat& m, int k) {
  if (k < 0 || k >= m.cols()) throw Error(ErrorCode::InvalidInput, "mutation index out of range");
}

struct Probe {
  int n;
  int max_length;
  ProbeResult result;
  std::vector<int> applied;  // in order of application

  void visit(const Mat& m, int last) {
    ++result.words;
    if (sign_vector(m.row(n)) != sign_vector(m.row(n + 1))) {
      result.distinguished = true;
      result.witness.assign(applied.rbegin(), applied.rend());
      return;
    }
    if (static_cast<int>(applied.size()) == max_length) return;
    for (int k = 0; k < n && !result.distinguished; ++k) {
      if (k == last) continue;
      applied.push_back(k);
      visit(mutate(m, k), k);
      applied.pop_back();
    }
  }
};

// Generic integer point off every wall, or nullopt after too many tries.
std::optional<Vec> generic_point(const ScatDiagram& d, std::mt19937_64& rng, int radius) {
  std::uniform_int_distribution<int> coord(-radius, radius);
  for (int attempt = 0; attempt < 200; ++attempt) {
    Vec p(d.n);
    for (int i = 0; i < d.n; ++i) p(i) = coord(rng);
    if (p.isZero()) continue;
    if (rampart_set(d, p).empty()) return p;
  }
  return std::nullopt;
}

}  // namespace

Mat mutate(const Mat& extended, int k) {
  check_index(extended, k);
  Mat out = extended;
  for (Eigen::Index i = 0; i < extended.rows(); ++i)
    for (Eigen::Index j = 0; j < extended.cols(); ++j) {
      if (i == k || j == k) {
        out(i, j) = -extended(i, j);
        continue;
      }
      const Rational prod = extended(i, k) * extended(k, j);
      if (prod > 0) out(i, j) += sgn(extended(k, j)) * prod;
    }
  return out;
}

Mat mutate_word(const Mat& extended, const std::vector<int>& word) {
  Mat m = extended;
  for (auto it = word.rbegin(); it != word.rend(); ++it) m = mutate(m, *it);
  return m;
}

Vec eta(const Mat& b, const std::vector<int>& word, const Vec& x) {
  if (x.size() != b.cols()) throw Error(ErrorCode::InvalidInput, "vector length does not match the exchange matrix");
  Mat ext(b.rows() + 1, b.cols());
  ext.topRows(b.rows()) = b;
  ext.row(b.rows()) = x.transpose();
  return mutate_word(ext, word).row(b.rows()).transpose();
}

std::vector<int> sign_vector(const Vec& x) {
  std::vector<int> out;
  for (Eigen::Index i = 0; i < x.size(); ++i) out.push_back(sgn(x(i)));
  return out;
}

ProbeResult b_class_probe(const Mat& b, const Vec& x, const Vec& y, int max_length) {
  const int n = static_cast<int>(b.cols());
  if (x.size() != n || y.size() != n) throw Error(ErrorCode::InvalidInput, "vector length does not match the exchange matrix");
  Mat ext(n + 2, n);
  ext.topRows(n) = b;
  ext.row(n) = x.transpose();
  ext.row(n + 1) = y.transpose();
  Probe probe{n, max_length, {}, {}};
  probe.visit(ext, -1);
  return probe.result;
}

FanComparison fans_compare(const Instance& inst, int max_height, int k, int probe_length, int samples,
                           std::uint64_t seed, std::size_t element_cap) {
  const int n = inst.rank();
  const CartanMatrix& cm = inst.cm;
  // Faces of walls at height <= max_height can involve roots of larger
  // height, so the cluster side is enumerated further out.
  const int face_height = 2 * max_height + n;
  const Compatibility comp(inst, face_height);
  const Clusters cl = clusters(comp, face_height);
  const ScatDiagram d = build_dcscat(inst, max_height, k, 64, element_cap);
  FanComparison out;

  // Codimension-1 faces: (n-1)-subsets of maximal compatible sets.
  std::set<std::vector<Vec>, SetLess> face_sets;
  auto add_subsets = [&](const std::vector<Vec>& s) {
    const int m = static_cast<int>(s.size());
    if (m == n - 1) {
      std::vector<Vec> f = s;
      std::sort(f.begin(), f.end(), VecLess{});
      face_sets.insert(f);
      return;
    }
    if (m < n) return;
    for (int skip = 0; skip < m; ++skip) {
      std::vector<Vec> f;
      for (int i = 0; i < m; ++i)
        if (i != skip) f.push_back(s[i]);
      std::sort(f.begin(), f.end(), VecLess{});
      face_sets.insert(f);
    }
  };
  for (const auto* family : {&cl.real, &cl.imaginary, &cl.truncated})
    for (const auto& s : *family) add_subsets(s);

  std::set<Vec, VecLess> normals_hit;
  for (const auto& s : face_sets) {
    const std::vector<Vec> gens = nu_image(inst, s);
    const Mat g = rows_of(gens, n);
    if (rank<Rational>(g) != n - 1) continue;
    const Mat ker = kernel<Rational>(Mat(g * cm.d.asDiagonal()));
    Vec beta = primitive(ker.col(0));
    if (!is_positive(beta)) beta = -beta;
    if (beta != inst.delta() && height(beta) > max_height) continue;
    ++out.faces;
    const int w = is_positive(beta) ? d.find(beta) : -1;
    if (w < 0 || !cone_from_generators(n, gens).subset_of(d.walls[w].cone)) {
      ++out.faces_outside_walls;
      out.discrepancies.push_back({"face outside walls", beta, Vec::Zero(n)});
      continue;
    }
    normals_hit.insert(beta);
  }
  for (const Wall& w : d.walls)
    if (!normals_hit.count(w.normal())) {
      ++out.walls_without_faces;
      out.discrepancies.push_back({"wall without faces", w.normal(), Vec::Zero(n)});
    }

  std::vector<Cone> chambers;
  for (const auto& s : cl.real) chambers.push_back(nu_cone(inst, s));
  auto chamber_of = [&](const Vec& p) {
    for (std::size_t i = 0; i < chambers.size(); ++i)
      if (chambers[i].contains_relint(p)) return static_cast<int>(i);
    return -1;
  };

  const Mat bt = inst.b.transpose();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> nudge(-1, 1);
  const int radius = 6;
  for (int i = 0; i < samples; ++i) {
    const auto p = generic_point(d, rng, radius);
    if (!p) continue;
    std::optional<Vec> q;
    if (i % 2 == 0) {
      q = generic_point(d, rng, radius);
    } else {
      // A nearby point, usually in the same chamber.
      Vec v = 4 * *p;
      for (int j = 0; j < n; ++j) v(j) += nudge(rng);
      if (rampart_set(d, v).empty()) q = v;
    }
    if (!q) continue;
    ++out.pairs;

    // Outside the enumerated chambers the segment may cross walls above the
    // height bound, so neither verdict is trustworthy there.
    const int cp = chamber_of(*p), cq = chamber_of(*q);
    if (cp < 0 || cq < 0) {
      ++out.unresolved;
      continue;
    }
    const bool eq = scat_cone_eq(d, *p, *q);
    if (cp == cq) ++out.same_cone;
    if ((cp == cq) != eq) {
      ++out.exact_discrepancies;
      out.discrepancies.push_back({"chamber mismatch", *p, *q});
    }

    const ProbeResult pr = b_class_probe(bt, *p, *q, probe_length);
    if (eq && pr.distinguished) {
      ++out.probe_contradictions;
      out.discrepancies.push_back({"separated by mutation", *p, *q});
    } else if (!eq) {
      if (pr.distinguished)
        ++out.probe_separated;
      else
        ++out.probe_inconclusive;
    }
  }
  return out;
}

}  // namespace affscat
