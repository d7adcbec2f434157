#pragma once

#include <vector>

#include "affscat/cartan.hpp"

namespace affscat {

// c = s_{order[0]} s_{order[1]} ... ; the order may cover only a subset of
// the indices when c lives in a standard parabolic subgroup.
struct Coxeter {
  std::vector<int> order;

  int position(int s) const;  // -1 when s does not occur
  bool contains(int s) const { return position(s) >= 0; }
  int size() const { return static_cast<int>(order.size()); }
};

// Linear extension of the orientation i -> j when b_ij > 0, breaking ties by
// the smallest available index.
Coxeter coxeter_from_exchange(const Mat& b);
Coxeter identity_coxeter(int n);

bool is_initial(const CartanMatrix& cm, const Coxeter& c, int s);
bool is_final(const CartanMatrix& cm, const Coxeter& c, int s);
// scs for s initial (moves s to the end) or final (moves s to the front).
Coxeter conjugate(const CartanMatrix& cm, const Coxeter& c, int s);
// The Coxeter element of the parabolic subgroup obtained by deleting s.
Coxeter remove(const Coxeter& c, int s);
Coxeter inverse(const Coxeter& c);

// Matrix of c acting on root coordinates.
Mat coxeter_action(const CartanMatrix& cm, const Coxeter& c);
Vec apply_coxeter(const CartanMatrix& cm, const Coxeter& c, const Vec& v);

// Values on (coroot_i, root_j): entries of the skew form and the Euler form.
Mat omega_table(const CartanMatrix& cm, const Coxeter& c);
Mat euler_table(const CartanMatrix& cm, const Coxeter& c);

// Bilinear forms on V in root coordinates.
Rational omega(const CartanMatrix& cm, const Coxeter& c, const Vec& x, const Vec& y);
Rational euler(const CartanMatrix& cm, const Coxeter& c, const Vec& x, const Vec& y);

// Weight coordinates of omega(., y) and E(., y).
Vec omega_functional(const CartanMatrix& cm, const Coxeter& c, const Vec& y);
Vec euler_functional(const CartanMatrix& cm, const Coxeter& c, const Vec& y);

// The piecewise-linear map from roots to weights.
Vec nu(const CartanMatrix& cm, const Coxeter& c, const Vec& beta);

struct AffineVectors {
  int aff = -1;
  Vec delta;
  Vec gamma;  // (c - 1) gamma = delta, with vanishing aff coordinate
  Vec xc;     // weight coordinates of -omega(., delta)
};

AffineVectors affine_vectors(const CartanMatrix& cm, const Classification& cls, const Coxeter& c);
AffineVectors affine_vectors(const CartanMatrix& cm, const Classification& cls, const Coxeter& c, int aff);

}  // namespace affscat
