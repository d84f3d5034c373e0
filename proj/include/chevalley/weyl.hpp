#pragma once

#include <cstdint>
#include <vector>

#include "chevalley/root_data.hpp"

namespace chev {

/// Weyl group element stored as its permutation of root indices.
class WeylElement {
 public:
  WeylElement() = default;
  static WeylElement identity(const RootDatum& datum);
  static WeylElement from_word(const RootDatum& datum, const std::vector<int>& word);

  /// Index of w(root k).
  int apply(int k) const { return perm_[k]; }
  const std::vector<int>& permutation() const { return perm_; }

  WeylElement times_simple(const RootDatum& datum, int i) const;  // w s_i
  WeylElement simple_times(const RootDatum& datum, int i) const;  // s_i w
  WeylElement inverse() const;
  WeylElement operator*(const WeylElement& o) const;

  /// Number of positive roots sent to negative roots.
  int length(const RootDatum& datum) const;
  /// Positive roots alpha with w(alpha) < 0, in canonical order.
  std::vector<int> inversions(const RootDatum& datum) const;
  /// Reduced word (i_1..i_l) with w = s_{i_1}...s_{i_l}; each letter is the smallest left descent.
  std::vector<int> reduced_word(const RootDatum& datum) const;

  bool operator==(const WeylElement& o) const = default;
  bool operator<(const WeylElement& o) const { return perm_ < o.perm_; }

 private:
  std::vector<int> perm_;
};

/// All elements of W by breadth-first search; throws RootDataError past `limit`.
std::vector<WeylElement> enumerate_weyl(const RootDatum& datum, std::size_t limit = 1u << 20);

/// Coefficients of sum_w t^{l(w)}.
std::vector<std::int64_t> length_generating_function(const RootDatum& datum);

}  // namespace chev
