#include "render.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <optional>
#include <sstream>
#include <utility>

#include "affscat/cartan.hpp"
#include "affscat/error.hpp"

namespace affscat {

namespace {

const int kPanel = 400;
const Rational kScale = 160;  // pixels per unit in the clipping square

std::string num(const Rational& r) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", r.convert_to<double>());
  return buf;
}

std::string label(const Vec& normal) {
  std::string out = "(";
  for (Eigen::Index i = 0; i < normal.size(); ++i) out += (i ? "," : "") + to_string(normal(i));
  return out + ")";
}

struct Canvas {
  std::ostringstream body;
  int panels = 0;

  // Pixel position of (u, v) in the given panel, unit square mapped to +-1.
  std::pair<Rational, Rational> px(int panel, const Rational& u, const Rational& v) const {
    return {Rational(panel * kPanel + kPanel / 2) + kScale * u, Rational(kPanel / 2) - kScale * v};
  }

  void axes(int panel, const std::string& title) {
    const auto [x0, y0] = px(panel, -1, 0);
    const auto [x1, y1] = px(panel, 1, 0);
    const auto [x2, y2] = px(panel, 0, -1);
    const auto [x3, y3] = px(panel, 0, 1);
    body << "<g class=\"axes\"><line x1=\"" << num(x0) << "\" y1=\"" << num(y0) << "\" x2=\"" << num(x1) << "\" y2=\""
         << num(y1) << "\"/><line x1=\"" << num(x2) << "\" y1=\"" << num(y2) << "\" x2=\"" << num(x3) << "\" y2=\""
         << num(y3) << "\"/></g>\n";
    body << "<text class=\"title\" x=\"" << panel * kPanel + 10 << "\" y=\"20\">" << title << "</text>\n";
  }

  void segment(int panel, const Rational& u0, const Rational& v0, const Rational& u1, const Rational& v1,
               const std::string& cls, const std::string& text) {
    const auto [x0, y0] = px(panel, u0, v0);
    const auto [x1, y1] = px(panel, u1, v1);
    body << "<line class=\"" << cls << "\" x1=\"" << num(x0) << "\" y1=\"" << num(y0) << "\" x2=\"" << num(x1)
         << "\" y2=\"" << num(y1) << "\"/>\n";
    if (!text.empty())
      body << "<text class=\"label\" x=\"" << num(x1) << "\" y=\"" << num(y1) << "\">" << text << "</text>\n";
  }

  void polygon(int panel, const std::vector<std::pair<Rational, Rational>>& pts, const std::string& cls) {
    body << "<polygon class=\"" << cls << "\" points=\"";
    for (std::size_t i = 0; i < pts.size(); ++i) {
      const auto [x, y] = px(panel, pts[i].first, pts[i].second);
      body << (i ? " " : "") << num(x) << "," << num(y);
    }
    body << "\"/>\n";
  }

  std::string finish() const {
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << panels * kPanel << "\" height=\"" << kPanel
        << "\" viewBox=\"0 0 " << panels * kPanel << " " << kPanel << "\">\n"
        << "<style>.axes line{stroke:#bbb;stroke-width:1}.wall{stroke:#222;stroke-width:1.5}"
           ".dinf{stroke:#c0392b;stroke-width:3}.dinf-region{fill:#f5b7b1;stroke:none}"
           ".label{font:10px sans-serif;fill:#333}.title{font:12px sans-serif}</style>\n"
        << body.str() << "</svg>\n";
    return out.str();
  }
};

// Scales a nonzero planar vector so its larger coordinate has absolute value 1.
std::pair<Rational, Rational> to_square(const Rational& u, const Rational& v) {
  const Rational m = std::max(abs(u), abs(v));
  return {u / m, v / m};
}

void draw_ray(Canvas& cv, int panel, const Rational& u, const Rational& v, const std::string& cls,
              const std::string& text) {
  if (u == 0 && v == 0) return;
  const auto [a, b] = to_square(u, v);
  cv.segment(panel, 0, 0, a, b, cls, text);
}

// The part of the line p + t dir inside the square |u|, |v| <= 1 and
// satisfying every constraint c0 + c1 t >= 0.
std::optional<std::pair<Rational, Rational>> clip(const Rational (&p)[2], const Rational (&dir)[2],
                                                  const std::vector<std::pair<Rational, Rational>>& constraints) {
  std::optional<Rational> lo, hi;
  bool empty = false;
  auto add = [&](const Rational& c0, const Rational& c1) {
    if (c1 == 0) {
      if (c0 < 0) empty = true;
      return;
    }
    const Rational t = -c0 / c1;
    if (c1 > 0) {
      if (!lo || t > *lo) lo = t;
    } else if (!hi || t < *hi) {
      hi = t;
    }
  };
  for (int i = 0; i < 2; ++i) {
    add(1 - p[i], -dir[i]);
    add(1 + p[i], dir[i]);
  }
  for (const auto& [c0, c1] : constraints) add(c0, c1);
  if (empty || !lo || !hi || *lo >= *hi) return std::nullopt;
  return std::make_pair(*lo, *hi);
}

}  // namespace

std::string render_rank2(const ScatDiagram& d) {
  if (d.n != 2) throw Error(ErrorCode::Unsupported, "rank-2 view needs a rank-2 diagram");
  Canvas cv;
  cv.panels = 1;
  cv.axes(0, "weight plane");
  for (const Wall& w : d.walls) {
    const std::string cls = w.origin == WallOrigin::Imaginary ? "dinf" : "wall";
    const std::string text = label(w.normal());
    for (const Vec& r : w.cone.rays()) draw_ray(cv, 0, r(0), r(1), cls, text);
    for (const Vec& l : w.cone.lineality()) {
      draw_ray(cv, 0, l(0), l(1), cls, text);
      draw_ray(cv, 0, -l(0), -l(1), cls, "");
    }
  }
  return cv.finish();
}

std::string render_affine_slice(const ScatDiagram& d, const Instance& inst) {
  if (d.n != 3 || inst.rank() != 3) throw Error(ErrorCode::Unsupported, "affine slice needs rank 3");
  const int aff = inst.av.aff;
  std::vector<int> fin;
  for (int i = 0; i < 3; ++i)
    if (i != aff) fin.push_back(i);
  // <x, delta> = sum ell_i x_i; on the slice x_aff is determined by the rest.
  const Vec ell = root_functional(inst.cm, inst.delta());

  // A weight functional g restricted to {<x, delta> = level} as
  // g0 + g_u u + g_v v in the coordinates u = x_fin0, v = x_fin1.
  auto restrict = [&](const Vec& g, const Rational& level) {
    const Rational r = g(aff) / ell(aff);
    return std::array<Rational, 3>{r * level, g(fin[0]) - r * ell(fin[0]), g(fin[1]) - r * ell(fin[1])};
  };

  Canvas cv;
  cv.panels = 2;
  cv.axes(0, "slice &lt;x, delta&gt; = 1");
  cv.axes(1, "delta-perp");
  const Rational box = 3;  // slice coordinates shown: |u|, |v| <= box

  for (const Wall& w : d.walls) {
    if (w.origin == WallOrigin::Imaginary) continue;
    const auto h = restrict(w.cone.equalities().at(0), 1);
    if (h[1] == 0 && h[2] == 0) continue;
    // Point and direction of h0 + h_u u + h_v v = 0, in units of box.
    const Rational nn = h[1] * h[1] + h[2] * h[2];
    const Rational p[2] = {-h[0] * h[1] / nn / box, -h[0] * h[2] / nn / box};
    const Rational dir[2] = {-h[2], h[1]};
    std::vector<std::pair<Rational, Rational>> cons;
    for (const Vec& g : w.cone.inequalities()) {
      const auto r = restrict(g, 1);
      cons.push_back({r[0] + box * (r[1] * p[0] + r[2] * p[1]), box * (r[1] * dir[0] + r[2] * dir[1])});
    }
    const auto seg = clip(p, dir, cons);
    if (!seg) continue;
    const auto& [t0, t1] = *seg;
    cv.segment(0, p[0] + t0 * dir[0], p[1] + t0 * dir[1], p[0] + t1 * dir[0], p[1] + t1 * dir[1], "wall",
               label(w.normal()));
  }

  for (const Wall& w : d.walls) {
    if (w.origin == WallOrigin::Imaginary) {
      std::vector<std::pair<Rational, Rational>> pts{{0, 0}};
      for (const Vec& r : w.cone.rays()) pts.push_back(to_square(r(fin[0]), r(fin[1])));
      if (pts.size() == 3) cv.polygon(1, pts, "dinf-region");
      for (const Vec& r : w.cone.rays()) draw_ray(cv, 1, r(fin[0]), r(fin[1]), "dinf", "");
      for (const Vec& l : w.cone.lineality()) {
        draw_ray(cv, 1, l(fin[0]), l(fin[1]), "dinf", "");
        draw_ray(cv, 1, -l(fin[0]), -l(fin[1]), "dinf", "");
      }
      continue;
    }
    Cone trace = w.cone;
    trace.add_equality(ell);
    if (trace.dimension() != 1) continue;
    for (const Vec& r : trace.rays()) draw_ray(cv, 1, r(fin[0]), r(fin[1]), "wall", label(w.normal()));
  }
  return cv.finish();
}

std::string render_slice(const ScatDiagram& d, const Instance* inst) {
  if (d.n == 2) return render_rank2(d);
  if (d.n == 3 && inst) return render_affine_slice(d, *inst);
  throw Error(ErrorCode::Unsupported, "rendering supports rank 2 and affine rank 3 only");
}

}  // namespace affscat
