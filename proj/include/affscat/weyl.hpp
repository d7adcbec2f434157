#pragma once

#include <utility>
#include <vector>

#include "affscat/cartan.hpp"

namespace affscat {

// A Weyl group element with a reduced word and its inversion set
// {beta > 0 : w^{-1} beta < 0}, listed in inversion-sequence order.
class WeylElement {
 public:
  explicit WeylElement(const CartanMatrix& cm);
  static WeylElement from_word(const CartanMatrix& cm, const std::vector<int>& word);

  const CartanMatrix& cartan() const { return *cm_; }
  const std::vector<int>& word() const { return word_; }
  const std::vector<Vec>& inversion_sequence() const { return inv_seq_; }
  const std::vector<Vec>& inversions() const { return inv_sorted_; }
  int length() const { return static_cast<int>(word_.size()); }
  bool is_identity() const { return word_.empty(); }
  bool has_inversion(const Vec& beta) const;
  // s <= w in the weak order, i.e. s is a left descent.
  bool has_left_descent(int s) const { return has_inversion(unit(rank(), s)); }

  Vec act_root(const Vec& v) const { return act_ * v; }
  Vec act_weight(const Vec& x) const;
  const Mat& matrix() const { return act_; }

  WeylElement times(int s) const;       // w s
  WeylElement left_times(int s) const;  // s w

  std::vector<int> right_descents() const;
  // Lower covers w s with the reflection root -w(alpha_s).
  std::vector<std::pair<WeylElement, Vec>> lower_covers() const;
  bool is_join_irreducible() const { return right_descents().size() == 1; }
  // The root of the unique cover reflection of a join-irreducible element.
  Vec cover_root() const;

  bool operator==(const WeylElement& other) const { return inv_sorted_ == other.inv_sorted_; }
  bool operator!=(const WeylElement& other) const { return !(*this == other); }
  bool operator<(const WeylElement& other) const;

  std::string to_string() const;

 private:
  int rank() const { return cm_->rank(); }
  void push(int s);

  const CartanMatrix* cm_;
  std::vector<int> word_;
  std::vector<Vec> inv_seq_;
  std::vector<Vec> inv_sorted_;
  Mat act_;
};

struct InversionSetLess {
  bool operator()(const std::vector<Vec>& a, const std::vector<Vec>& b) const;
};

// Distinct elements of length at most max_length, ordered by length and then
// by their lexicographically first reduced word.
std::vector<WeylElement> enumerate_up_to_length(const CartanMatrix& cm, int max_length,
                                                std::size_t cap = 1000000);

bool in_parabolic(const WeylElement& w, const std::vector<int>& support);
// The element of the standard parabolic subgroup with inversion set
// inv(w) restricted to roots supported on `support`.
WeylElement parabolic_restrict(const WeylElement& w, const std::vector<int>& support);

}  // namespace affscat
