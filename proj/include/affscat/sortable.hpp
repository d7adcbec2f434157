#pragma once

#include <vector>

#include "affscat/cone.hpp"
#include "affscat/coxeter.hpp"
#include "affscat/weyl.hpp"

namespace affscat {

struct SortingWord {
  bool sortable = false;
  // The c-sorting word, split into the successive restrictions of c.
  std::vector<std::vector<int>> blocks;

  std::vector<int> word() const;
};

SortingWord c_sorting_word(const WeylElement& w, const CartanMatrix& cm, const Coxeter& c);
bool is_sortable(const WeylElement& w, const CartanMatrix& cm, const Coxeter& c);

// The largest c-sortable element below w in the weak order.
WeylElement pi_down(const WeylElement& w, const CartanMatrix& cm, const Coxeter& c);

// Roots whose nonnegative half-spaces cut out the Cambrian cone of a
// c-sortable element.
std::vector<Vec> cambrian_cone_roots(const WeylElement& v, const CartanMatrix& cm, const Coxeter& c);
Cone cambrian_cone(const WeylElement& v, const CartanMatrix& cm, const Coxeter& c);

// c-sortable elements of length at most max_length, in enumeration order.
std::vector<WeylElement> sortable_elements(const CartanMatrix& cm, const Coxeter& c, int max_length,
                                           std::size_t cap = 200000);

struct SortableJoinIrreducible {
  WeylElement element;
  Vec root;  // root of the cover reflection
};

std::vector<SortableJoinIrreducible> sortable_join_irreducibles(const CartanMatrix& cm, const Coxeter& c,
                                                                int max_length, std::size_t cap = 200000);

}  // namespace affscat
