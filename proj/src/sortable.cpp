#include "affscat/sortable.hpp"

#include <algorithm>
#include <map>

#include "affscat/error.hpp"

namespace affscat {

namespace {

std::vector<int> support_of(const Coxeter& c) {
  std::vector<int> s = c.order;
  std::sort(s.begin(), s.end());
  return s;
}

// Reads w off the infinite word c c c ..., taking each letter that is a
// left descent of what remains and retiring letters that are not.
bool sort_into(const WeylElement& w, const Coxeter& c, std::vector<std::vector<int>>& blocks) {
  WeylElement v = w;
  std::vector<int> active = support_of(c);
  while (!v.is_identity()) {
    std::vector<int> block;
    for (int s : c.order) {
      if (!std::binary_search(active.begin(), active.end(), s)) continue;
      if (v.has_left_descent(s)) {
        block.push_back(s);
        v = v.left_times(s);
        if (v.is_identity()) break;
      } else {
        active.erase(std::find(active.begin(), active.end(), s));
        if (!in_parabolic(v, active)) return false;
      }
    }
    if (block.empty()) return false;
    blocks.push_back(block);
  }
  return true;
}

}  // namespace

std::vector<int> SortingWord::word() const {
  std::vector<int> out;
  for (const auto& b : blocks) out.insert(out.end(), b.begin(), b.end());
  return out;
}

SortingWord c_sorting_word(const WeylElement& w, const CartanMatrix&, const Coxeter& c) {
  SortingWord out;
  out.sortable = sort_into(w, c, out.blocks);
  if (!out.sortable) out.blocks.clear();
  return out;
}

bool is_sortable(const WeylElement& w, const CartanMatrix& cm, const Coxeter& c) {
  return c_sorting_word(w, cm, c).sortable;
}

WeylElement pi_down(const WeylElement& w, const CartanMatrix& cm, const Coxeter& c) {
  if (c.order.empty() || w.is_identity()) return WeylElement(cm);
  const int s = c.order.front();
  if (w.has_left_descent(s)) return pi_down(w.left_times(s), cm, conjugate(cm, c, s)).left_times(s);
  const Coxeter smaller = remove(c, s);
  return pi_down(parabolic_restrict(w, support_of(smaller)), cm, smaller);
}

std::vector<Vec> cambrian_cone_roots(const WeylElement& v, const CartanMatrix& cm, const Coxeter& c) {
  const int n = cm.rank();
  if (v.is_identity()) {
    std::vector<Vec> out;
    for (int i : c.order) out.push_back(unit(n, i));
    return out;
  }
  if (c.order.empty()) throw Error(ErrorCode::NotSortable, "element is not c-sortable");
  const int s = c.order.front();
  if (!v.has_left_descent(s)) {
    const Coxeter smaller = remove(c, s);
    if (!in_parabolic(v, support_of(smaller))) throw Error(ErrorCode::NotSortable, "element is not c-sortable");
    auto out = cambrian_cone_roots(v, cm, smaller);
    out.push_back(unit(n, s));
    return out;
  }
  auto out = cambrian_cone_roots(v.left_times(s), cm, conjugate(cm, c, s));
  for (Vec& beta : out) beta = reflect_root(cm, s, beta);
  return out;
}

Cone cambrian_cone(const WeylElement& v, const CartanMatrix& cm, const Coxeter& c) {
  return cone_above_roots(cm, cambrian_cone_roots(v, cm, c));
}

std::vector<WeylElement> sortable_elements(const CartanMatrix& cm, const Coxeter& c, int max_length,
                                           std::size_t cap) {
  // Prefixes of sorting words are sorting words, so extending sortable
  // elements one letter at a time reaches all of them.
  std::vector<WeylElement> out{WeylElement(cm)};
  std::map<std::vector<Vec>, int, InversionSetLess> seen;
  seen[out.front().inversions()] = 0;
  std::size_t begin = 0;
  for (int len = 1; len <= max_length; ++len) {
    const std::size_t end = out.size();
    for (std::size_t i = begin; i < end; ++i) {
      for (int s = 0; s < cm.rank(); ++s) {
        if (!is_positive(Vec(out[i].matrix().col(s)))) continue;
        WeylElement next = out[i].times(s);
        if (seen.count(next.inversions()) || !is_sortable(next, cm, c)) continue;
        seen[next.inversions()] = 0;
        out.push_back(std::move(next));
        if (out.size() > cap) throw Error(ErrorCode::CapExceeded, "sortable enumeration cap exceeded");
      }
    }
    begin = end;
  }
  return out;
}

std::vector<SortableJoinIrreducible> sortable_join_irreducibles(const CartanMatrix& cm, const Coxeter& c,
                                                                int max_length, std::size_t cap) {
  std::vector<SortableJoinIrreducible> out;
  for (const WeylElement& w : sortable_elements(cm, c, max_length, cap))
    if (w.is_join_irreducible()) out.push_back({w, w.cover_root()});
  return out;
}

}  // namespace affscat
