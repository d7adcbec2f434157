#include "affscat/weyl.hpp"

#include <algorithm>
#include <map>

#include "affscat/error.hpp"

namespace affscat {

bool InversionSetLess::operator()(const std::vector<Vec>& a, const std::vector<Vec>& b) const {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), VecLess{});
}

WeylElement::WeylElement(const CartanMatrix& cm)
    : cm_(&cm), act_(Mat::Identity(cm.rank(), cm.rank())) {}

WeylElement WeylElement::from_word(const CartanMatrix& cm, const std::vector<int>& word) {
  WeylElement w(cm);
  for (int s : word) w.push(s);
  return w;
}

bool WeylElement::has_inversion(const Vec& beta) const {
  return std::binary_search(inv_sorted_.begin(), inv_sorted_.end(), beta, VecLess{});
}

Vec WeylElement::act_weight(const Vec& x) const {
  Vec out = x;
  for (auto it = word_.rbegin(); it != word_.rend(); ++it) out = reflect_weight(*cm_, *it, out);
  return out;
}

void WeylElement::push(int s) {
  if (s < 0 || s >= rank()) throw Error(ErrorCode::InvalidInput, "simple reflection index out of range");
  const Vec r = act_.col(s);
  if (is_positive(r)) {
    word_.push_back(s);
    inv_seq_.push_back(r);
    inv_sorted_.insert(std::upper_bound(inv_sorted_.begin(), inv_sorted_.end(), r, VecLess{}), r);
    act_ = act_ * simple_reflection_on_roots(*cm_, s);
    return;
  }
  // w s = t w with t the reflection in -w(alpha_s); delete the matching letter.
  const Vec beta = -r;
  std::vector<int> shorter;
  bool removed = false;
  for (std::size_t i = 0; i < word_.size(); ++i) {
    if (!removed && inv_seq_[i] == beta) {
      removed = true;
      continue;
    }
    shorter.push_back(word_[i]);
  }
  *this = from_word(*cm_, shorter);
}

WeylElement WeylElement::times(int s) const {
  WeylElement out = *this;
  out.push(s);
  return out;
}

WeylElement WeylElement::left_times(int s) const {
  std::vector<int> w{s};
  w.insert(w.end(), word_.begin(), word_.end());
  return from_word(*cm_, w);
}

std::vector<int> WeylElement::right_descents() const {
  std::vector<int> out;
  for (int s = 0; s < rank(); ++s)
    if (!is_positive(Vec(act_.col(s)))) out.push_back(s);
  return out;
}

std::vector<std::pair<WeylElement, Vec>> WeylElement::lower_covers() const {
  std::vector<std::pair<WeylElement, Vec>> out;
  for (int s : right_descents()) out.emplace_back(times(s), Vec(-act_.col(s)));
  return out;
}

Vec WeylElement::cover_root() const {
  const auto d = right_descents();
  if (d.size() != 1) throw Error(ErrorCode::InvalidInput, "element is not join-irreducible");
  return -act_.col(d.front());
}

bool WeylElement::operator<(const WeylElement& other) const {
  if (length() != other.length()) return length() < other.length();
  return word_ < other.word_;
}

std::string WeylElement::to_string() const {
  if (word_.empty()) return "e";
  std::string s;
  for (int i : word_) s += "s" + std::to_string(i + 1);
  return s;
}

std::vector<WeylElement> enumerate_up_to_length(const CartanMatrix& cm, int max_length, std::size_t cap) {
  std::vector<WeylElement> out{WeylElement(cm)};
  std::map<std::vector<Vec>, bool, InversionSetLess> seen;
  seen[out.front().inversions()] = true;
  std::size_t level_begin = 0;
  for (int len = 1; len <= max_length; ++len) {
    const std::size_t level_end = out.size();
    for (std::size_t i = level_begin; i < level_end; ++i) {
      for (int s = 0; s < cm.rank(); ++s) {
        if (!is_positive(Vec(out[i].matrix().col(s)))) continue;
        WeylElement next = out[i].times(s);
        if (seen.count(next.inversions())) continue;
        seen[next.inversions()] = true;
        out.push_back(std::move(next));
        if (out.size() > cap) throw Error(ErrorCode::CapExceeded, "Weyl group enumeration cap exceeded");
      }
    }
    level_begin = level_end;
  }
  return out;
}

namespace {

bool supported_on(const Vec& beta, const std::vector<int>& support) {
  for (Eigen::Index i = 0; i < beta.size(); ++i)
    if (beta(i) != 0 && std::find(support.begin(), support.end(), i) == support.end()) return false;
  return true;
}

}  // namespace

bool in_parabolic(const WeylElement& w, const std::vector<int>& support) {
  for (const Vec& beta : w.inversions())
    if (!supported_on(beta, support)) return false;
  return true;
}

WeylElement parabolic_restrict(const WeylElement& w, const std::vector<int>& support) {
  std::vector<Vec> target;
  for (const Vec& beta : w.inversions())
    if (supported_on(beta, support)) target.push_back(beta);
  auto in_target = [&](const Vec& v) {
    return std::binary_search(target.begin(), target.end(), v, VecLess{});
  };
  WeylElement u(w.cartan());
  while (u.length() < static_cast<int>(target.size())) {
    bool grew = false;
    for (int s : support) {
      const Vec r = u.act_root(unit(w.cartan().rank(), s));
      if (is_positive(r) && in_target(r)) {
        u = u.times(s);
        grew = true;
        break;
      }
    }
    if (!grew) throw Error(ErrorCode::InvalidInput, "restricted inversion set is not biclosed");
  }
  return u;
}

}  // namespace affscat
