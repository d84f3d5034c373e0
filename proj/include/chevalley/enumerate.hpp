#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include <gmpxx.h>

#include "chevalley/group.hpp"

namespace chev {

/// Finite Chevalley group listed element by element.
///
/// Elements are row-major code strings. Element 0 is the identity; every
/// element records the generator that first reached it, so a word is available.
class EnumeratedGroup {
 public:
  EnumeratedGroup(const Group& g, std::size_t guard = 50000);

  const Group& group() const { return g_; }
  std::size_t size() const { return parent_.size(); }
  int num_generators() const { return static_cast<int>(gens_.size()); }
  const WordAtom& generator(int k) const { return gens_[k]; }
  int generator_inverse(int k) const { return gen_inv_[k]; }

  /// x * s_k and s_k * x.
  int right(int x, int k) const { return right_[static_cast<std::size_t>(x) * gens_.size() + k]; }
  int left(int x, int k) const { return left_[static_cast<std::size_t>(x) * gens_.size() + k]; }
  /// s_k^{-1} x s_k.
  int conj(int x, int k) const { return left(right(x, k), gen_inv_[k]); }

  int mul(int a, int b) const;
  int inverse(int x) const;
  int order(int x) const;
  /// Index of a matrix, or -1 when it is not in the group.
  int find(const Matrix& m) const;
  Matrix matrix(int x) const;
  Word word(int x) const;

 private:
  std::string key(int x) const { return std::string(data_.data() + x * n2_, n2_); }
  int lookup(const std::string& k) const;
  std::string multiply(const char* a, const char* b) const;
  std::string apply_sparse(const char* x, int k, bool on_right) const;

  Group g_;
  std::size_t n_ = 0, n2_ = 0;
  std::vector<std::uint8_t> add_, mul_;
  std::uint32_t q_ = 0;
  std::vector<WordAtom> gens_;
  std::vector<int> gen_inv_;
  struct Entry {
    int row, col;
    std::uint8_t v;
  };
  std::vector<std::vector<Entry>> sparse_;
  std::string data_;
  std::unordered_map<std::string, int> index_;
  std::vector<std::pair<int, int>> parent_;  // (element, generator)
  std::vector<int> right_, left_;
};

/// Incrementally grown subgroup of an enumerated group.
class Subgroup {
 public:
  explicit Subgroup(const EnumeratedGroup& G);
  void add(int x);
  bool contains(int x) const { return member_[x] != 0; }
  std::size_t size() const { return elements_.size(); }
  const std::vector<int>& elements() const { return elements_; }
  const std::vector<int>& generators() const { return gens_; }

 private:
  const EnumeratedGroup& G_;
  std::vector<char> member_;
  std::vector<int> elements_, gens_;
};

Subgroup generated_subgroup(const EnumeratedGroup& G, const std::vector<int>& gens);
/// Normal closure; stops growing once it is known to be all of G.
Subgroup normal_closure(const EnumeratedGroup& G, const std::vector<int>& seeds);

struct StructureReport {
  std::size_t order = 0;
  std::size_t derived_order = 0;
  std::size_t center_order = 0;
  std::size_t classes = 0;
  bool derived_is_whole = false;
  bool center_trivial = false;
  bool simple = false;
};
StructureReport structure_checks(const EnumeratedGroup& G);

std::vector<int> center(const EnumeratedGroup& G);
std::vector<std::vector<int>> conjugacy_classes(const EnumeratedGroup& G);

/// Subgroups generated by all root elements of one sign, and their intersection.
struct UnipotentReport {
  std::size_t u_order = 0, v_order = 0, intersection = 0;
};
UnipotentReport unipotent_intersection(const EnumeratedGroup& G);

/// |N|, |H| and |W| with N = <H, n_{S_i}>.
struct WeylQuotientReport {
  std::size_t n_order = 0, h_order = 0, weyl_order = 0;
};
WeylQuotientReport weyl_quotient(const EnumeratedGroup& G);

/// Borel order and the number of elements in each Bruhat cell, keyed by reduced word.
struct CellReport {
  std::size_t borel_order = 0;
  std::vector<std::pair<std::vector<int>, std::size_t>> cells;
  bool sizes_match = false;  // |BwB| = |B| q^{l(w)} for every w
};
CellReport bruhat_cells(const EnumeratedGroup& G);

/// Elements passing parabolic membership against |B| sum_{w in W_J} q^{l(w)}.
struct ParabolicReport {
  std::size_t members = 0, expected = 0;
};
ParabolicReport parabolic_count(const EnumeratedGroup& G, const std::vector<int>& J);

struct OrderReport {
  mpz_class predicted, formula, enumerated;
  bool equal = false;
};
/// predicted_order, (1/d) q^r (q-1)^m sum_w q^{l(w)}, and the enumerated order.
OrderReport order_reconciliation(const RootDatum& datum, std::uint64_t q, std::size_t enumerated);
mpz_class weyl_formula_order(const RootDatum& datum, std::uint64_t q);

}  // namespace chev
