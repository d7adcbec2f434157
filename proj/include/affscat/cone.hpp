#pragma once

#include <vector>

#include "affscat/cartan.hpp"

namespace affscat {

// A polyhedral cone { x : e.x = 0 for e in eqs, g.x >= 0 for g in geqs } in
// weight coordinates. Generators are found by exact double description:
// lineality space plus extreme rays of the pointed part orthogonal to it.
class Cone {
 public:
  explicit Cone(int dim = 0) : dim_(dim) {}
  Cone(int dim, std::vector<Vec> eqs, std::vector<Vec> geqs);

  int ambient_dim() const { return dim_; }
  const std::vector<Vec>& equalities() const { return eqs_; }
  const std::vector<Vec>& inequalities() const { return geqs_; }

  void add_equality(const Vec& row);
  void add_inequality(const Vec& row);
  Cone intersect(const Cone& other) const;

  bool contains(const Vec& x) const;
  bool contains_relint(const Vec& x) const;
  bool subset_of(const Cone& other) const;
  bool operator==(const Cone& other) const;

  int dimension() const;
  const std::vector<Vec>& rays() const;       // primitive extreme rays of the pointed part
  const std::vector<Vec>& lineality() const;  // basis of the lineality space
  Vec relint_point() const;

 private:
  void compute() const;

  int dim_;
  std::vector<Vec> eqs_;
  std::vector<Vec> geqs_;
  mutable bool computed_ = false;
  mutable std::vector<Vec> rays_;
  mutable std::vector<Vec> lineality_;
};

// The cone of all nonnegative combinations of the given vectors.
Cone cone_from_generators(int dim, const std::vector<Vec>& generators);

// A cone inside a root hyperplane written with roots: { x : <x, normal> = 0,
// <x, phi> <= 0 for phi in le }.
struct RootCone {
  Vec normal;
  std::vector<Vec> le;

  Cone cone(const CartanMatrix& cm) const;
};

// { x : <x, beta> >= 0 for beta in roots }.
Cone cone_above_roots(const CartanMatrix& cm, const std::vector<Vec>& roots);

}  // namespace affscat
