#pragma once

#include <string>
#include <vector>

#include "affscat/cone.hpp"
#include "affscat/instance.hpp"
#include "affscat/series.hpp"
#include "affscat/weyl.hpp"

namespace affscat {

enum class WallOrigin { Initial, SortableJI, InverseSortableJI, FromRoot, Imaginary, Rank2Completed };

const char* wall_origin_name(WallOrigin origin);

struct Wall {
  RootCone shape;  // normal is the primitive positive normal
  Cone cone;
  TruncatedSeries f;
  WallOrigin origin = WallOrigin::Initial;
  std::vector<int> word;  // the join-irreducible element behind the wall, if any

  const Vec& normal() const { return shape.normal; }
};

Wall make_wall(const CartanMatrix& cm, RootCone shape, TruncatedSeries f, WallOrigin origin);

struct ScatDiagram {
  int n = 0;
  Mat b;  // exchange matrix: its entries are omega(coroot_i, root_j)
  int max_height = 0;
  int k = 0;  // series are exact modulo yhat-degree k + 1
  std::vector<Wall> walls;
  int merged = 0;        // duplicates dropped when the two families overlapped
  int search_length = 0;  // longest join-irreducible examined

  // Index of the wall in the hyperplane of beta, or -1.
  int find(const Vec& normal) const;
};

// Number of q-coefficients a wall with this normal needs at truncation k.
int series_order(const Vec& normal, int k);

// {x in delta-perp : <x, beta> <= 0 for finite roots beta with omega(beta, delta) > 0}.
RootCone imaginary_wall_shape(const Instance& inst);
Wall imaginary_wall(const Instance& inst, int k);

// Shards of c-sortable join-irreducibles, negated shards of c^{-1}-sortable
// ones, and the imaginary wall. Join-irreducibles are enumerated by length
// until every positive almost positive root of height <= max_height is a
// normal and a further stretch of lengths adds nothing.
// element_cap bounds the number of sortable elements kept per length.
ScatDiagram build_dcscat(const Instance& inst, int max_height, int k, int max_length = 64,
                         std::size_t element_cap = 200000);

// One wall per positive almost positive root, cut out directly from the root.
ScatDiagram build_easy_scat(const Instance& inst, int max_height, int k);

// Same normals, cones and series.
bool same_walls(const ScatDiagram& a, const ScatDiagram& b);

struct WallClass {
  bool incoming = false;
  bool gregarious = false;
};

// b gives omega(coroot_i, root_j).
WallClass classify_wall(const Mat& b, const Wall& w);

struct FaceReport {
  Vec point;                 // relative interior point of the cell checked
  std::vector<int> walls;    // walls crossed, in loop order
  bool identity = true;
};

struct ConsistencyReport {
  int k = 0;
  std::vector<FaceReport> faces;

  bool ok() const;
  int failures() const;
};

// Small loops around every codimension-2 cell where two walls meet or where a
// wall ends, composed on x^rho_i and yhat^alpha_i modulo degree k + 1.
ConsistencyReport check_consistency(const ScatDiagram& d, const CartanMatrix& cm, int k);

// Consistent completion of the two initial walls of a rank-2 exchange matrix,
// exact modulo yhat-degree k + 1. Parallel outgoing rays are kept as one wall.
ScatDiagram rank2_complete(const Mat& b, int k);

// Normals of the ramparts containing p.
std::vector<Vec> rampart_set(const ScatDiagram& d, const Vec& p);
// p and q are joined by a segment along which the rampart set is constant.
bool scat_cone_eq(const ScatDiagram& d, const Vec& p, const Vec& q);

}  // namespace affscat
