#include "affscat/scattering.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "affscat/almost_positive.hpp"
#include "affscat/error.hpp"
#include "affscat/linalg.hpp"
#include "affscat/shards.hpp"
#include "affscat/sortable.hpp"

namespace affscat {

const char* wall_origin_name(WallOrigin origin) {
  switch (origin) {
    case WallOrigin::Initial: return "initial";
    case WallOrigin::SortableJI: return "sortable_ji";
    case WallOrigin::InverseSortableJI: return "inverse_sortable_ji";
    case WallOrigin::FromRoot: return "from_root";
    case WallOrigin::Imaginary: return "imaginary";
    case WallOrigin::Rank2Completed: return "rank2_completed";
  }
  return "?";
}

Wall make_wall(const CartanMatrix& cm, RootCone shape, TruncatedSeries f, WallOrigin origin) {
  Wall w;
  w.cone = shape.cone(cm);
  w.shape = std::move(shape);
  w.f = std::move(f);
  w.origin = origin;
  return w;
}

int ScatDiagram::find(const Vec& normal) const {
  for (std::size_t i = 0; i < walls.size(); ++i)
    if (walls[i].normal() == normal) return static_cast<int>(i);
  return -1;
}

int series_order(const Vec& normal, int k) { return static_cast<int>(k / to_int(height(normal))); }

namespace {

bool by_height(const Vec& a, const Vec& b) {
  const Rational ha = height(a), hb = height(b);
  if (ha != hb) return ha < hb;
  return VecLess{}(a, b);
}

void sort_walls(std::vector<Wall>& walls) {
  std::stable_sort(walls.begin(), walls.end(),
                   [](const Wall& a, const Wall& b) { return by_height(a.normal(), b.normal()); });
}

// Adds w unless an identical wall is present; returns whether it was new.
bool add_distinct(std::vector<Wall>& walls, Wall w) {
  for (const Wall& old : walls)
    if (old.normal() == w.normal() && old.cone == w.cone && old.f == w.f) return false;
  walls.push_back(std::move(w));
  return true;
}

Wall real_wall(const CartanMatrix& cm, RootCone shape, int k, WallOrigin origin) {
  const Vec beta = shape.normal;
  return make_wall(cm, std::move(shape), TruncatedSeries::binomial(beta, series_order(beta, k)), origin);
}

struct Family {
  std::vector<Wall> walls;
  int merged = 0;
};

Family sortable_family(const Instance& inst, int max_height, int k, int length, std::size_t element_cap) {
  Family out;
  for (const bool inverse_family : {false, true}) {
    const Coxeter c = inverse_family ? inverse(inst.c) : inst.c;
    for (const auto& ji : sortable_join_irreducibles(inst.cm, c, length, element_cap)) {
      if (height(ji.root) > max_height) continue;
      RootCone shape = shard_of_join_irreducible(inst.cm, inst.cls, ji.element);
      if (inverse_family)
        for (Vec& phi : shape.le) phi = -phi;
      const WallOrigin origin = ji.element.length() == 1 ? WallOrigin::Initial
                                : inverse_family         ? WallOrigin::InverseSortableJI
                                                         : WallOrigin::SortableJI;
      Wall w = real_wall(inst.cm, std::move(shape), k, origin);
      w.word = ji.element.word();
      if (!add_distinct(out.walls, std::move(w))) ++out.merged;
    }
  }
  return out;
}

}  // namespace

RootCone imaginary_wall_shape(const Instance& inst) {
  const int n = inst.rank();
  std::vector<int> fin;
  for (int i = 0; i < n; ++i)
    if (i != inst.av.aff) fin.push_back(i);
  RootCone out;
  out.normal = inst.delta();
  for (const Vec& beta : finite_subsystem_roots(inst.cm, fin))
    if (omega(inst.cm, inst.c, beta, inst.delta()) > 0) out.le.push_back(beta);
  std::sort(out.le.begin(), out.le.end(), by_height);
  return out;
}

Wall imaginary_wall(const Instance& inst, int k) {
  const Vec& delta = inst.delta();
  return make_wall(inst.cm, imaginary_wall_shape(inst), f_infinity(inst.cls.is_A2k2, delta, series_order(delta, k)),
                   WallOrigin::Imaginary);
}

ScatDiagram build_dcscat(const Instance& inst, int max_height, int k, int max_length, std::size_t element_cap) {
  const int n = inst.rank();
  const TubeStructure ts = tube_structure(inst);
  std::set<Vec, VecLess> wanted;
  for (const Vec& r : ap_c(inst, ts, max_height))
    if (is_positive(r) && r != inst.delta() && height(r) <= max_height) wanted.insert(r);

  auto covers = [&](const Family& f) {
    std::set<Vec, VecLess> got;
    for (const Wall& w : f.walls) got.insert(w.normal());
    return std::includes(got.begin(), got.end(), wanted.begin(), wanted.end(), VecLess{});
  };

  int length = std::max(n, max_height);
  Family fam = sortable_family(inst, max_height, k, length, element_cap);
  for (;;) {
    if (covers(fam)) {
      // Confirm with a longer search that nothing else turns up.
      const int longer = length + 2 * n;
      Family more = sortable_family(inst, max_height, k, longer, element_cap);
      const bool stable = more.walls.size() == fam.walls.size();
      fam = std::move(more);
      length = longer;
      if (stable) break;
    } else {
      length *= 2;
      if (length > max_length)
        throw Error(ErrorCode::CapExceeded, "join-irreducible search exceeded length " + std::to_string(max_length));
      fam = sortable_family(inst, max_height, k, length, element_cap);
    }
    if (length > max_length)
      throw Error(ErrorCode::CapExceeded, "join-irreducible search exceeded length " + std::to_string(max_length));
  }

  ScatDiagram d;
  d.n = n;
  d.b = inst.b;
  d.max_height = max_height;
  d.k = k;
  d.walls = std::move(fam.walls);
  d.merged = fam.merged;
  d.search_length = length;
  d.walls.push_back(imaginary_wall(inst, k));
  sort_walls(d.walls);
  return d;
}

ScatDiagram build_easy_scat(const Instance& inst, int max_height, int k) {
  const TubeStructure ts = tube_structure(inst);
  ScatDiagram d;
  d.n = inst.rank();
  d.b = inst.b;
  d.max_height = max_height;
  d.k = k;
  for (const Vec& r : ap_c(inst, ts, max_height)) {
    if (!is_positive(r) || r == inst.delta() || height(r) > max_height) continue;
    const WallOrigin origin = height(r) == 1 ? WallOrigin::Initial : WallOrigin::FromRoot;
    d.walls.push_back(real_wall(inst.cm, shard_of_root(inst.cm, inst.cls, inst.c, r), k, origin));
  }
  d.walls.push_back(imaginary_wall(inst, k));
  sort_walls(d.walls);
  return d;
}

bool same_walls(const ScatDiagram& a, const ScatDiagram& b) {
  if (a.walls.size() != b.walls.size()) return false;
  for (const Wall& w : a.walls) {
    bool found = false;
    for (const Wall& v : b.walls)
      if (v.normal() == w.normal() && v.cone == w.cone && v.f == w.f) {
        found = true;
        break;
      }
    if (!found) return false;
  }
  return true;
}

WallClass classify_wall(const Mat& b, const Wall& w) {
  const Vec omega_beta = b * w.normal();  // weight coordinates of omega(., beta)
  WallClass out;
  out.incoming = w.cone.contains(omega_beta);
  out.gregarious = w.cone.contains_relint(Vec(-omega_beta));
  return out;
}

bool ConsistencyReport::ok() const { return failures() == 0; }

int ConsistencyReport::failures() const {
  int count = 0;
  for (const FaceReport& f : faces) count += !f.identity;
  return count;
}

namespace {

std::vector<Vec> span_basis(const Cone& c) {
  std::vector<Vec> out = c.lineality();
  for (const Vec& r : c.rays()) out.push_back(r);
  return out;
}

bool vanishes_on(const Vec& functional, const std::vector<Vec>& basis) {
  for (const Vec& v : basis)
    if (functional.dot(v) != 0) return false;
  return true;
}

// Cells of the relative interior of `face` cut out by the given functionals.
std::vector<Cone> split_cells(const Cone& face, const std::vector<Vec>& cuts) {
  std::vector<Cone> cells{face};
  const int dim = face.dimension();
  for (const Vec& h : cuts) {
    std::vector<Cone> next;
    for (const Cone& cell : cells) {
      Cone plus = cell, minus = cell;
      plus.add_inequality(h);
      minus.add_inequality(Vec(-h));
      if (plus.dimension() == dim && minus.dimension() == dim) {
        next.push_back(plus);
        next.push_back(minus);
      } else {
        next.push_back(cell);
      }
    }
    cells = std::move(next);
  }
  return cells;
}

struct Crossing {
  int wall;
  Vec ray;  // plane coordinates
  int direction;
};

// Upper half plane first, then counterclockwise.
bool angle_less(const Vec& a, const Vec& b) {
  auto half = [](const Vec& v) { return (v[1] > 0 || (v[1] == 0 && v[0] > 0)) ? 0 : 1; };
  if (half(a) != half(b)) return half(a) < half(b);
  return a[0] * b[1] - a[1] * b[0] > 0;
}

// Crossings, in counterclockwise order, of a small loop around p in the plane
// spanned by the fundamental weights e1, e2.
std::vector<Crossing> loop_crossings(const ScatDiagram& d, const CartanMatrix& cm, const std::vector<int>& active,
                                     const Vec& p, int e1, int e2) {
  std::vector<Crossing> out;
  for (int idx : active) {
    const Wall& w = d.walls[idx];
    if (!w.cone.contains(p)) continue;
    const Vec& beta = w.normal();
    const Rational g1 = cm.d[e1] * beta[e1], g2 = cm.d[e2] * beta[e2];
    Vec dir(2);
    dir << -g2, g1;
    for (const Vec& r : {dir, Vec(-dir)}) {
      Vec v = Vec::Zero(d.n);
      v[e1] = r[0];
      v[e2] = r[1];
      bool inside = true;
      for (const Vec& e : w.cone.equalities())
        if (e.dot(v) != 0) inside = false;
      for (const Vec& g : w.cone.inequalities())
        if (g.dot(p) == 0 && g.dot(v) < 0) inside = false;
      if (!inside) continue;
      // Velocity (-r2, r1) of the counterclockwise loop.
      const Rational along = -r[1] * g1 + r[0] * g2;
      out.push_back({idx, r, along < 0 ? 1 : -1});
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const Crossing& a, const Crossing& b) { return angle_less(a.ray, b.ray); });
  return out;
}

bool loop_is_identity(const ScatDiagram& d, const CartanMatrix& cm, const std::vector<Crossing>& loop, int k) {
  std::vector<WallCrossing> steps;
  for (const Crossing& c : loop) {
    const Wall& w = d.walls[c.wall];
    steps.push_back({w.f, primitive_coroot_coords(cm, w.normal()), c.direction});
  }
  for (int i = 0; i < d.n; ++i) {
    for (const Expr& start : {Expr::x_power(unit(d.n, i), k), Expr::y_power(unit(d.n, i), k)}) {
      Expr e = start;
      for (const WallCrossing& s : steps) e = apply_crossing(d.b, s, e);
      if (e != start) return false;
    }
  }
  return true;
}

std::pair<int, int> transverse_plane(const CartanMatrix& cm, const std::vector<Vec>& lin) {
  const int n = cm.rank();
  Mat rows(static_cast<Eigen::Index>(lin.size()), n);
  for (std::size_t r = 0; r < lin.size(); ++r) rows.row(r) = lin[r].cwiseProduct(cm.d).transpose();
  const Mat ann = lin.empty() ? Mat(Mat::Identity(n, n)) : kernel<Rational>(rows);
  if (ann.cols() != 2) throw Error(ErrorCode::DegenerateFace, "face is not of codimension 2");
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      const Rational det =
          cm.d[a] * ann(a, 0) * cm.d[b] * ann(b, 1) - cm.d[a] * ann(a, 1) * cm.d[b] * ann(b, 0);
      if (det != 0) return {a, b};
    }
  throw Error(ErrorCode::DegenerateFace, "no transverse coordinate plane");
}

}  // namespace

ConsistencyReport check_consistency(const ScatDiagram& d, const CartanMatrix& cm, int k) {
  const int n = d.n;
  ConsistencyReport report;
  report.k = k;
  std::vector<int> active;
  for (std::size_t i = 0; i < d.walls.size(); ++i)
    if (height(d.walls[i].normal()) <= k && !d.walls[i].f.truncated(series_order(d.walls[i].normal(), k)).is_one())
      active.push_back(static_cast<int>(i));

  std::vector<Cone> faces;
  auto add_face = [&](const Cone& f) {
    if (f.dimension() != n - 2) return;
    for (const Cone& g : faces)
      if (g == f) return;
    faces.push_back(f);
  };
  for (std::size_t a = 0; a < active.size(); ++a) {
    const Wall& wa = d.walls[active[a]];
    for (std::size_t b = a + 1; b < active.size(); ++b) {
      const Wall& wb = d.walls[active[b]];
      if (wa.normal() == wb.normal()) continue;
      add_face(wa.cone.intersect(wb.cone));
    }
    for (const Vec& g : wa.cone.inequalities()) {
      Cone facet = wa.cone;
      facet.add_equality(g);
      add_face(facet);
    }
  }

  for (const Cone& face : faces) {
    const std::vector<Vec> lin = span_basis(face);
    std::vector<Vec> cuts;
    for (int idx : active) {
      const Wall& w = d.walls[idx];
      const Vec h = root_functional(cm, w.normal());
      if (!vanishes_on(h, lin)) {
        cuts.push_back(h);
        continue;
      }
      for (const Vec& g : w.cone.inequalities())
        if (!vanishes_on(g, lin)) cuts.push_back(g);
    }
    const auto [e1, e2] = transverse_plane(cm, lin);
    for (const Cone& cell : split_cells(face, cuts)) {
      FaceReport fr;
      fr.point = cell.relint_point();
      const auto loop = loop_crossings(d, cm, active, fr.point, e1, e2);
      for (const Crossing& c : loop) fr.walls.push_back(c.wall);
      fr.identity = loop_is_identity(d, cm, loop, k);
      report.faces.push_back(std::move(fr));
    }
  }
  return report;
}

ScatDiagram rank2_complete(const Mat& b, int k) {
  if (b.rows() != 2) throw Error(ErrorCode::InvalidInput, "rank-2 completion needs a 2x2 exchange matrix");
  const CartanMatrix cm = exchange_to_cartan(b);
  ScatDiagram d;
  d.n = 2;
  d.b = b;
  d.max_height = k;
  d.k = k;
  for (int i = 0; i < 2; ++i)
    d.walls.push_back(real_wall(cm, RootCone{unit(2, i), {}}, k, WallOrigin::Initial));

  const Vec origin = Vec::Zero(2);
  auto full_loop = [&] {
    std::vector<int> all(d.walls.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
    return loop_crossings(d, cm, all, origin, 0, 1);
  };

  for (int deg = 2; deg <= k; ++deg) {
    const auto loop = full_loop();
    std::vector<WallCrossing> steps;
    for (const Crossing& c : loop) {
      const Wall& w = d.walls[c.wall];
      steps.push_back({w.f, primitive_coroot_coords(cm, w.normal()), c.direction});
    }
    // Degree-deg defect on x^rho_i, by yhat exponent.
    std::map<std::vector<long long>, std::pair<Rational, Rational>> defect;
    for (int i = 0; i < 2; ++i) {
      Expr e = Expr::x_power(unit(2, i), deg);
      for (const WallCrossing& s : steps) e = apply_crossing(b, s, e);
      for (const auto& [m, coeff] : e.terms()) {
        if (m.degree() != deg || coeff == 0) continue;
        auto& slot = defect[m.y];
        (i == 0 ? slot.first : slot.second) = coeff;
      }
    }
    for (const auto& [y, e] : defect) {
      const Vec phi = vec({y[0], y[1]});
      const Vec phi0 = primitive(phi);
      const long long mult = to_int(height(phi) / height(phi0));
      const Vec u = primitive_coroot_coords(cm, phi0);
      // The new ray lies on -omega(., phi0).
      const Vec x0 = -(b * phi0);
      RootCone shape{phi0, {}};
      const int i = x0[0] != 0 ? 0 : 1;
      shape.le.push_back(x0[i] > 0 ? Vec(-unit(2, i)) : unit(2, i));
      const Rational g1 = cm.d[0] * phi0[0], g2 = cm.d[1] * phi0[1];
      // Direction in which the counterclockwise loop crosses that ray.
      const int sigma = (-x0[1] * g1 + x0[0] * g2) < 0 ? 1 : -1;
      const int j = u[0] != 0 ? 0 : 1;
      const Rational ej = j == 0 ? e.first : e.second;
      const Rational a = -ej / (sigma * u[j]);
      TruncatedSeries term = TruncatedSeries::one(phi0, series_order(phi0, k));
      term.set_coeff(static_cast<int>(mult), a);
      int idx = d.find(phi0);
      if (idx >= 0 && d.walls[idx].origin != WallOrigin::Initial) {
        d.walls[idx].f = d.walls[idx].f * term;
      } else {
        d.walls.push_back(make_wall(cm, shape, term, WallOrigin::Rank2Completed));
      }
    }
    // The corrected diagram must be consistent through this degree.
    const auto fixed = full_loop();
    if (!loop_is_identity(d, cm, fixed, deg)) throw std::logic_error("rank-2 completion failed at degree " + std::to_string(deg));
  }
  std::vector<Wall> kept;
  for (Wall& w : d.walls)
    if (!w.f.is_one()) kept.push_back(std::move(w));
  d.walls = std::move(kept);
  sort_walls(d.walls);
  return d;
}

std::vector<Vec> rampart_set(const ScatDiagram& d, const Vec& p) {
  std::set<Vec, VecLess> out;
  for (const Wall& w : d.walls)
    if (w.cone.contains(p)) out.insert(w.normal());
  return {out.begin(), out.end()};
}

bool scat_cone_eq(const ScatDiagram& d, const Vec& p, const Vec& q) {
  const Vec dir = q - p;
  for (const Wall& w : d.walls) {
    Rational lo = 0, hi = 1;
    bool empty = false;
    auto bound = [&](const Vec& g, bool equality) {
      const Rational a = g.dot(p), s = g.dot(dir);
      if (s == 0) {
        if (equality ? a != 0 : a < 0) empty = true;
        return;
      }
      const Rational t = -a / s;
      if (equality || s > 0) lo = std::max(lo, t);
      if (equality || s < 0) hi = std::min(hi, t);
    };
    for (const Vec& e : w.cone.equalities()) bound(e, true);
    for (const Vec& g : w.cone.inequalities()) bound(g, false);
    if (empty || lo > hi) continue;
    if (lo != 0 || hi != 1) return false;
  }
  return true;
}

}  // namespace affscat
