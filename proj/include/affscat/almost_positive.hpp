#pragma once

#include <map>
#include <optional>
#include <vector>

#include "affscat/cone.hpp"
#include "affscat/instance.hpp"

namespace affscat {

// Roots on the hyperplane K(gamma_c, .) = 0. The positive roots there are
// nonnegative combinations of `simples`, which split into cycles rotated by
// c. In rank 2 the only such roots are multiples of delta and the single
// generator is delta.
struct TubeStructure {
  Vec hc;                               // root coordinates of gamma_c; v is in the hyperplane iff K(hc, v) = 0
  std::vector<Vec> fin_roots;           // positive roots of the finite tube system
  std::vector<Vec> simples;             // listed cycle by cycle, each in rotation order
  std::vector<std::vector<int>> cycles;  // indices into simples
  std::vector<int> rotate;              // simples[rotate[i]] == c simples[i]
  std::vector<Vec> real;                // real tube roots: c-orbits of fin_roots

  bool in_hyperplane(const CartanMatrix& cm, const Vec& v) const;
  bool is_real_tube_root(const Vec& v) const;
  // Indices of the simples with nonzero coefficient in a real tube root.
  std::vector<int> support(const Vec& v) const;
};

TubeStructure tube_structure(const Instance& inst);

enum class APKind { NegSimple, RealNonTube, TubeReal, Delta };

struct APRoot {
  Vec root;
  APKind kind = APKind::RealNonTube;
  int index = -1;            // for NegSimple
  std::vector<int> support;  // for TubeReal
};

const char* ap_kind_name(APKind kind);

// Throws NotAlmostPositive for vectors outside the model. Positive vectors off
// the tube hyperplane are accepted without a root test.
APRoot classify_ap(const Instance& inst, const TubeStructure& ts, const Vec& v);

// Negative simples, positive real roots of height <= max_height off the tube
// hyperplane, real tube roots and delta; sorted by height then coordinates.
std::vector<Vec> ap_c(const Instance& inst, const TubeStructure& ts, int max_height);

// sigma_s for the Coxeter element at hand (s must be initial or final there).
Vec sigma(const CartanMatrix& cm, int s, const Vec& v);
Vec tau(const Instance& inst, const Vec& v);
Vec tau_inverse(const Instance& inst, const Vec& v);

class Compatibility {
 public:
  // The tau-iteration gives up after cap steps in each direction; 0 means
  // 4 n (max_height + 1).
  Compatibility(const Instance& inst, int max_height, int cap = 0);

  const Instance& instance() const { return inst_; }
  const TubeStructure& tubes() const { return ts_; }
  int cap() const { return cap_; }

  int degree(const Vec& a, const Vec& b) const;
  bool compatible(const Vec& a, const Vec& b) const { return degree(a, b) == 0 && degree(b, a) == 0; }

  // Degree in the cases that need no tau-iteration.
  std::optional<int> direct_degree(const Vec& a, const Vec& b) const;

 private:
  int tube_degree(const Vec& a, const Vec& b) const;

  Instance inst_;
  TubeStructure ts_;
  int cap_;
};

struct Clusters {
  std::vector<std::vector<Vec>> real;       // exactly n roots, delta excluded
  std::vector<std::vector<Vec>> imaginary;  // contain delta
  // Maximal within the truncation but of the wrong size: the missing roots
  // lie above the height bound.
  std::vector<std::vector<Vec>> truncated;
};

// Maximal pairwise-compatible subsets of the given roots.
std::vector<std::vector<Vec>> maximal_compatible_sets(const Compatibility& comp, const std::vector<Vec>& roots);
Clusters clusters(const Compatibility& comp, int max_height);

// Generators of nu_c(Cone(C)) in weight coordinates.
std::vector<Vec> nu_image(const Instance& inst, const std::vector<Vec>& roots);
Cone nu_cone(const Instance& inst, const std::vector<Vec>& roots);

}  // namespace affscat
