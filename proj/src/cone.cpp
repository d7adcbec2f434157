#include "affscat/cone.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "affscat/error.hpp"
#include "affscat/linalg.hpp"

namespace affscat {

Cone::Cone(int dim, std::vector<Vec> eqs, std::vector<Vec> geqs)
    : dim_(dim), eqs_(std::move(eqs)), geqs_(std::move(geqs)) {}

void Cone::add_equality(const Vec& row) {
  eqs_.push_back(row);
  computed_ = false;
}

void Cone::add_inequality(const Vec& row) {
  geqs_.push_back(row);
  computed_ = false;
}

Cone Cone::intersect(const Cone& other) const {
  Cone out = *this;
  out.eqs_.insert(out.eqs_.end(), other.eqs_.begin(), other.eqs_.end());
  out.geqs_.insert(out.geqs_.end(), other.geqs_.begin(), other.geqs_.end());
  out.computed_ = false;
  return out;
}

bool Cone::contains(const Vec& x) const {
  for (const Vec& e : eqs_)
    if (e.dot(x) != 0) return false;
  for (const Vec& g : geqs_)
    if (g.dot(x) < 0) return false;
  return true;
}

bool Cone::contains_relint(const Vec& x) const {
  if (!contains(x)) return false;
  compute();
  for (const Vec& g : geqs_) {
    bool implicit = true;
    for (const Vec& r : rays_)
      if (g.dot(r) != 0) implicit = false;
    for (const Vec& l : lineality_)
      if (g.dot(l) != 0) implicit = false;
    if (!implicit && g.dot(x) <= 0) return false;
  }
  return true;
}

bool Cone::subset_of(const Cone& other) const {
  compute();
  for (const Vec& r : rays_)
    if (!other.contains(r)) return false;
  for (const Vec& l : lineality_)
    if (!other.contains(l) || !other.contains(Vec(-l))) return false;
  return true;
}

bool Cone::operator==(const Cone& other) const {
  compute();
  other.compute();
  if (rays_ != other.rays_ || lineality_.size() != other.lineality_.size()) return false;
  if (lineality_.empty()) return true;
  std::vector<Vec> both = lineality_;
  both.insert(both.end(), other.lineality_.begin(), other.lineality_.end());
  return rank<Rational>(rows_of(both, dim_)) == static_cast<int>(lineality_.size());
}

int Cone::dimension() const {
  compute();
  std::vector<Vec> gens = rays_;
  gens.insert(gens.end(), lineality_.begin(), lineality_.end());
  if (gens.empty()) return 0;
  return rank<Rational>(rows_of(gens, dim_));
}

const std::vector<Vec>& Cone::rays() const {
  compute();
  return rays_;
}

const std::vector<Vec>& Cone::lineality() const {
  compute();
  return lineality_;
}

Vec Cone::relint_point() const {
  compute();
  Vec p = Vec::Zero(dim_);
  for (const Vec& r : rays_) p += r;
  return p;
}

void Cone::compute() const {
  if (computed_) return;
  rays_.clear();
  lineality_.clear();

  std::vector<Vec> all = eqs_;
  all.insert(all.end(), geqs_.begin(), geqs_.end());
  const Mat lin = all.empty() ? Mat(Mat::Identity(dim_, dim_)) : kernel<Rational>(rows_of(all, dim_));
  for (Eigen::Index j = 0; j < lin.cols(); ++j) lineality_.push_back(lin.col(j));

  // Pointed part: add orthogonality to the lineality space as equalities.
  std::vector<Vec> eq = eqs_;
  eq.insert(eq.end(), lineality_.begin(), lineality_.end());
  const int eq_rank = eq.empty() ? 0 : rank<Rational>(rows_of(eq, dim_));
  const int need = dim_ - 1 - eq_rank;
  std::set<Vec, VecLess> found;

  auto consider = [&](const std::vector<Vec>& rows) {
    const Mat k = rows.empty() ? Mat(Mat::Identity(dim_, dim_)) : kernel<Rational>(rows_of(rows, dim_));
    if (k.cols() != 1) return;
    for (int s : {1, -1}) {
      const Vec r = primitive(Vec(k.col(0) * Rational(s)));
      bool ok = true;
      for (const Vec& g : geqs_)
        if (g.dot(r) < 0) ok = false;
      if (ok) found.insert(r);
    }
  };

  if (need >= 0 && need <= static_cast<int>(geqs_.size())) {
    std::vector<int> pick;
    std::function<void(int)> choose = [&](int start) {
      if (static_cast<int>(pick.size()) == need) {
        std::vector<Vec> rows = eq;
        for (int i : pick) rows.push_back(geqs_[i]);
        consider(rows);
        return;
      }
      for (int i = start; i < static_cast<int>(geqs_.size()); ++i) {
        pick.push_back(i);
        choose(i + 1);
        pick.pop_back();
      }
    };
    choose(0);
  }
  rays_.assign(found.begin(), found.end());
  computed_ = true;
}

Cone cone_from_generators(int dim, const std::vector<Vec>& generators) {
  // Facets of cone(G): the dual cone's generators. Compute the dual of the
  // dual by running double description on {y : g.y >= 0}.
  Cone dual(dim, {}, generators);
  std::vector<Vec> eqs, geqs;
  for (const Vec& l : dual.lineality()) eqs.push_back(l);
  for (const Vec& r : dual.rays()) geqs.push_back(r);
  return Cone(dim, eqs, geqs);
}

Cone RootCone::cone(const CartanMatrix& cm) const {
  std::vector<Vec> geqs;
  for (const Vec& phi : le) geqs.push_back(-root_functional(cm, phi));
  return Cone(cm.rank(), {root_functional(cm, normal)}, geqs);
}

Cone cone_above_roots(const CartanMatrix& cm, const std::vector<Vec>& roots) {
  std::vector<Vec> geqs;
  for (const Vec& beta : roots) geqs.push_back(root_functional(cm, beta));
  return Cone(cm.rank(), {}, geqs);
}

}  // namespace affscat
