#pragma once

#include <optional>
#include <vector>

#include "affscat/cone.hpp"
#include "affscat/coxeter.hpp"
#include "affscat/weyl.hpp"

namespace affscat {

struct Rank2Subsystem {
  Vec first, second;       // canonical roots; lower first, ties by earliest support
  std::vector<Vec> roots;  // positive roots of the plane up to the height bound
};

// Canonical roots of the rank-two subsystem through beta and gamma. Every
// non-canonical positive root of a rank-two subsystem has coefficient at
// least one on both canonical roots, so once two independent roots of the
// plane are listed the two extreme ones are canonical.
Rank2Subsystem canonical_roots_rank2(const CartanMatrix& cm, const Classification& cls, const Vec& beta,
                                     const Vec& gamma, int max_height);

// gamma cuts beta: gamma is canonical and beta is not in their plane.
bool cuts(const CartanMatrix& cm, const Classification& cls, const Vec& gamma, const Vec& beta);

struct CutSet {
  std::vector<Vec> roots;
  bool certified = false;  // unchanged when the height bound is raised
};

CutSet cut_set(const CartanMatrix& cm, const Classification& cls, const Vec& beta, int max_height);

RootCone shard_of_join_irreducible(const CartanMatrix& cm, const Classification& cls, const WeylElement& j);
RootCone shard_of_root(const CartanMatrix& cm, const Classification& cls, const Coxeter& c, const Vec& beta);

// The minimal element among those whose chamber has a facet inside the
// shard with the shard's normal as an inversion.
std::optional<WeylElement> join_irreducible_of_shard(const CartanMatrix& cm, const RootCone& shard,
                                                     const std::vector<WeylElement>& elements);
std::optional<WeylElement> join_irreducible_of_shard(const CartanMatrix& cm, const RootCone& shard,
                                                     int max_length);

}  // namespace affscat
