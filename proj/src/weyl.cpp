#include "chevalley/weyl.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace chev {

WeylElement WeylElement::identity(const RootDatum& datum) {
  WeylElement w;
  w.perm_.resize(datum.num_roots());
  for (int k = 0; k < datum.num_roots(); ++k) w.perm_[k] = k;
  return w;
}

WeylElement WeylElement::from_word(const RootDatum& datum, const std::vector<int>& word) {
  WeylElement w = identity(datum);
  for (int i : word) w = w.times_simple(datum, i);
  return w;
}

WeylElement WeylElement::times_simple(const RootDatum& datum, int i) const {
  WeylElement r;
  r.perm_.resize(perm_.size());
  for (std::size_t k = 0; k < perm_.size(); ++k) r.perm_[k] = perm_[datum.reflect(i, static_cast<int>(k))];
  return r;
}

WeylElement WeylElement::simple_times(const RootDatum& datum, int i) const {
  WeylElement r;
  r.perm_.resize(perm_.size());
  for (std::size_t k = 0; k < perm_.size(); ++k) r.perm_[k] = datum.reflect(i, perm_[k]);
  return r;
}

WeylElement WeylElement::inverse() const {
  WeylElement r;
  r.perm_.resize(perm_.size());
  for (std::size_t k = 0; k < perm_.size(); ++k) r.perm_[perm_[k]] = static_cast<int>(k);
  return r;
}

WeylElement WeylElement::operator*(const WeylElement& o) const {
  WeylElement r;
  r.perm_.resize(perm_.size());
  for (std::size_t k = 0; k < perm_.size(); ++k) r.perm_[k] = perm_[o.perm_[k]];
  return r;
}

int WeylElement::length(const RootDatum& datum) const {
  int l = 0;
  for (int k = 0; k < datum.num_positive(); ++k) l += !datum.is_positive(perm_[k]);
  return l;
}

std::vector<int> WeylElement::inversions(const RootDatum& datum) const {
  std::vector<int> out;
  for (int k = 0; k < datum.num_positive(); ++k)
    if (!datum.is_positive(perm_[k])) out.push_back(k);
  return out;
}

std::vector<int> WeylElement::reduced_word(const RootDatum& datum) const {
  std::vector<int> word;
  WeylElement w = *this;
  // s_i is a left descent of w iff w^{-1}(alpha_i) < 0
  for (;;) {
    const WeylElement inv = w.inverse();
    int descent = -1;
    for (int i = 0; i < datum.rank(); ++i)
      if (!datum.is_positive(inv.apply(i))) {
        descent = i;
        break;
      }
    if (descent < 0) break;
    word.push_back(descent);
    w = w.simple_times(datum, descent);
  }
  return word;
}

std::vector<WeylElement> enumerate_weyl(const RootDatum& datum, std::size_t limit) {
  std::set<WeylElement> seen;
  std::vector<WeylElement> out;
  std::deque<WeylElement> queue;
  const WeylElement e = WeylElement::identity(datum);
  seen.insert(e);
  queue.push_back(e);
  while (!queue.empty()) {
    WeylElement w = std::move(queue.front());
    queue.pop_front();
    out.push_back(w);
    if (out.size() > limit) throw RootDataError("Weyl group larger than the enumeration limit");
    for (int i = 0; i < datum.rank(); ++i) {
      WeylElement v = w.times_simple(datum, i);
      if (seen.insert(v).second) queue.push_back(std::move(v));
    }
  }
  return out;
}

std::vector<std::int64_t> length_generating_function(const RootDatum& datum) {
  std::vector<std::int64_t> coeffs(datum.num_positive() + 1, 0);
  for (const auto& w : enumerate_weyl(datum)) ++coeffs[w.length(datum)];
  return coeffs;
}

}  // namespace chev
