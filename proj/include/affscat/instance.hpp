#pragma once

#include "affscat/cartan.hpp"
#include "affscat/coxeter.hpp"

namespace affscat {

// An acyclic exchange matrix of affine type together with everything derived
// from it that the later modules keep asking for.
struct Instance {
  Mat b;
  CartanMatrix cm;
  Classification cls;
  Coxeter c;
  AffineVectors av;

  int rank() const { return cm.rank(); }
  const Vec& delta() const { return cls.delta; }

  static Instance from_exchange(const Mat& b);
  // Same root system, Coxeter element c^{-1} (the exchange matrix -B).
  Instance inverse() const;
};

}  // namespace affscat
