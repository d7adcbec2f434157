#pragma once

#include <string>
#include <vector>

#include "affscat/rational.hpp"

// Root vectors are written in the basis of simple roots; weight vectors
// (elements of the dual space) in the basis of fundamental weights.
namespace affscat {

struct CartanMatrix {
  Mat a;  // integer entries
  Vec d;  // d_i a_ij is symmetric

  int rank() const { return static_cast<int>(a.rows()); }
  // Gram matrix of the symmetric form on simple roots.
  Mat gram() const { return d.asDiagonal() * a; }
};

// Checks the exchange matrix is square, integral, with zero diagonal and
// skew-symmetrizable.
void validate_exchange(const Mat& b);
CartanMatrix exchange_to_cartan(const Mat& b);
CartanMatrix cartan_from_matrix(const Mat& a);

enum class Finiteness { Finite, Affine, Indefinite };

struct Classification {
  Finiteness kind = Finiteness::Indefinite;
  std::string label;  // affine diagram label, empty unless matched
  Vec delta;          // primitive positive imaginary root (affine only)
  int aff_index = -1;
  bool is_A2k2 = false;
};

Classification classify(const CartanMatrix& cm);

// Standard affine Cartan matrix for a label such as "A_3^(1)" or "D_4^(3)".
Mat affine_cartan(const std::string& label);
std::vector<std::string> affine_labels(int rank);

// <x, v> for a weight x and a root-lattice vector v.
Rational pairing(const CartanMatrix& cm, const Vec& weight, const Vec& root);
// The symmetric form K on V.
Rational kform(const CartanMatrix& cm, const Vec& u, const Vec& v);
// Weight coordinates of the functional K(v, .).
Vec kfunctional(const CartanMatrix& cm, const Vec& v);
// Weight-coordinate functional f with <x, v> = f . x.
Vec root_functional(const CartanMatrix& cm, const Vec& root);

Vec reflect_root(const CartanMatrix& cm, int i, const Vec& v);
Vec reflect_weight(const CartanMatrix& cm, int i, const Vec& x);
Mat simple_reflection_on_roots(const CartanMatrix& cm, int i);
Mat simple_reflection_on_weights(const CartanMatrix& cm, int i);

bool is_real_direction(const CartanMatrix& cm, const Vec& beta);
// 2 beta / K(beta, beta) for a real root.
Vec coroot(const CartanMatrix& cm, const Vec& beta);
// Coordinates, in the basis of simple coroots, of the primitive element of
// the coroot lattice on the ray of beta.
Vec primitive_coroot_coords(const CartanMatrix& cm, const Vec& beta);
// The same element written in simple-root coordinates.
Vec primitive_coroot(const CartanMatrix& cm, const Vec& beta);
Vec reflect_in_root(const CartanMatrix& cm, const Vec& beta, const Vec& v);

// Positive real roots of height at most max_height, sorted by height then
// lexicographically. Restricting to `support` enumerates a parabolic
// subsystem; an empty support means all indices.
std::vector<Vec> positive_real_roots(const CartanMatrix& cm, int max_height,
                                     const std::vector<int>& support = {},
                                     std::size_t cap = 200000);
// All roots of a finite-type parabolic subsystem, positive and negative.
std::vector<Vec> finite_subsystem_roots(const CartanMatrix& cm, const std::vector<int>& support);
// Positive real roots plus the imaginary multiples of delta (affine only).
std::vector<Vec> positive_roots(const CartanMatrix& cm, const Classification& cls, int max_height);

}  // namespace affscat
