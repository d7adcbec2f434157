#include <algorithm>

#include "affscat/linalg.hpp"
#include "affscat/shards.hpp"
#include "affscat/sortable.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace affscat;

TEST_CASE("canonical roots of a plane through delta") {
  const CartanMatrix cm = exchange_to_cartan(fixtures::affine_a1());
  const Classification cls = classify(cm);
  const Rank2Subsystem sub = canonical_roots_rank2(cm, cls, vec({1, 0}), vec({1, 1}), 3);
  CHECK(sub.first == vec({1, 0}));
  CHECK(sub.second == vec({0, 1}));
  CHECK_THROWS(canonical_roots_rank2(cm, cls, vec({3, 2}), vec({1, 1}), 3));
}

TEST_CASE("non-canonical roots have coefficient at least one on both canonical roots") {
  for (const Mat& b : {fixtures::affine_a2(), fixtures::twisted_a2(), fixtures::affine_g2()}) {
    const CartanMatrix cm = exchange_to_cartan(b);
    const Classification cls = classify(cm);
    const auto small = positive_real_roots(cm, 4);
    for (std::size_t i = 0; i < small.size(); ++i)
      for (std::size_t j = i + 1; j < small.size(); ++j) {
        Mat pair(2, cm.rank());
        pair << small[i].transpose(), small[j].transpose();
        if (rank<Rational>(pair) < 2) continue;
        const Rank2Subsystem sub = canonical_roots_rank2(cm, cls, small[i], small[j], 14);
        Mat basis(cm.rank(), 2);
        basis << sub.first, sub.second;
        for (const Vec& r : sub.roots) {
          if (r == sub.first || r == sub.second) continue;
          const Vec x = *solve<Rational>(basis, r);
          CHECK(x(0) >= 1);
          CHECK(x(1) >= 1);
        }
      }
  }
}

TEST_CASE("cut sets") {
  const CartanMatrix cm = exchange_to_cartan(fixtures::affine_a1());
  const Classification cls = classify(cm);
  const CutSet cut = cut_set(cm, cls, vec({2, 1}), 3);
  CHECK(cut.certified);
  CHECK(std::find(cut.roots.begin(), cut.roots.end(), vec({1, 0})) != cut.roots.end());
  CHECK(std::find(cut.roots.begin(), cut.roots.end(), vec({0, 1})) != cut.roots.end());
  CHECK(cuts(cm, cls, vec({1, 0}), vec({2, 1})));
  CHECK_FALSE(cuts(cm, cls, vec({2, 1}), vec({1, 0})));

  // Cutting roots are lower than the root they cut, so raising the bound
  // changes nothing.
  for (const Mat& b : {fixtures::affine_a2(), fixtures::twisted_a2()}) {
    const CartanMatrix c2 = exchange_to_cartan(b);
    const Classification k2 = classify(c2);
    for (const Vec& beta : positive_real_roots(c2, 5)) {
      const int h = static_cast<int>(to_int(height(beta)));
      const CutSet small = cut_set(c2, k2, beta, h);
      CHECK(small.certified);
      CHECK(small.roots == cut_set(c2, k2, beta, 2 * h + 3).roots);
      for (const Vec& g : small.roots) CHECK(height(g) < height(beta));
    }
  }
}

TEST_CASE("shard of a join-irreducible") {
  const CartanMatrix cm = exchange_to_cartan(fixtures::affine_a1());
  const Classification cls = classify(cm);
  const Coxeter c = identity_coxeter(2);
  const WeylElement j = WeylElement::from_word(cm, {0, 1});
  const RootCone sh = shard_of_join_irreducible(cm, cls, j);
  CHECK(sh.normal == vec({2, 1}));
  REQUIRE(sh.le.size() == 1);
  CHECK(sh.le[0] == vec({1, 0}));
  CHECK(sh.cone(cm) == shard_of_root(cm, cls, c, vec({2, 1})).cone(cm));
  CHECK(join_irreducible_of_shard(cm, sh, 6) == j);
}

TEST_CASE("shard modes agree, round trips, and antipodal shards") {
  for (const Mat& b : {fixtures::affine_a1(), fixtures::affine_a2(), fixtures::twisted_a2()}) {
    const CartanMatrix cm = exchange_to_cartan(b);
    const Classification cls = classify(cm);
    const Coxeter c = coxeter_from_exchange(b);
    const Coxeter ci = inverse(c);
    const int len = 7;
    const auto elements = enumerate_up_to_length(cm, len);
    const auto jc = sortable_join_irreducibles(cm, c, len);
    const auto jci = sortable_join_irreducibles(cm, ci, len);
    for (const auto& j : jc) {
      const RootCone sh = shard_of_join_irreducible(cm, cls, j.element);
      CHECK(sh.cone(cm) == shard_of_root(cm, cls, c, j.root).cone(cm));
      CHECK(sh.cone(cm).dimension() == cm.rank() - 1);
      CHECK(join_irreducible_of_shard(cm, sh, elements) == j.element);
      for (const auto& k : jci) {
        if (k.root != j.root) continue;
        RootCone neg = shard_of_join_irreducible(cm, cls, k.element);
        for (Vec& g : neg.le) g = -g;
        CHECK(neg.cone(cm) == sh.cone(cm));
      }
    }
  }
}
