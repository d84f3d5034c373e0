#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "chevalley/matrix.hpp"

namespace chev {

class RootDataError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Integer coordinates in the simple-root basis.
using RootVec = std::vector<int>;

/// Arrow directions on the edges of a Dynkin diagram; vertices are 0-based.
struct Orientation {
  std::vector<std::pair<int, int>> arrows;  // (tail, head)

  bool is_sink(int v) const;
  bool is_source(int v) const;
  /// Orientation with every arrow at v reversed.
  Orientation reversed_at(int v) const;
  /// "1>2,3>2" with 1-based labels; "i>j" is an arrow i -> j.
  std::string to_string() const;
  bool operator==(const Orientation&) const = default;
};

/// A quiver together with an automorphism (vertex and arrow permutations).
struct Quiver {
  int vertex_count = 0;
  std::vector<std::pair<int, int>> arrows;  // (tail, head)
  std::vector<int> vertex_perm;             // empty means identity
  std::vector<int> arrow_perm;              // empty means identity
};

class RootDatum {
 public:
  const std::string& type_name() const { return type_name_; }
  int rank() const { return rank_; }
  const IntMatrix& cartan() const { return cartan_; }
  const std::vector<int>& symmetrizer() const { return d_; }
  const Orientation& orientation() const { return orientation_; }
  /// Undirected Dynkin edges (i < j).
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  /// Roots: indices [0, r) are positive in canonical order, r + k is -(root k).
  int num_roots() const { return static_cast<int>(roots_.size()); }
  int num_positive() const { return static_cast<int>(roots_.size()) / 2; }
  const RootVec& root(int k) const { return roots_.at(k); }
  const std::vector<RootVec>& roots() const { return roots_; }
  int height(int k) const { return heights_.at(k); }
  bool is_positive(int k) const { return k < num_positive(); }
  int negative(int k) const { return k < num_positive() ? k + num_positive() : k - num_positive(); }
  int simple_root(int i) const { return i; }
  bool is_simple(int k) const { return k < rank_; }
  /// Index of a root vector, or -1.
  int index_of(const RootVec& v) const;
  /// Index of root(a) + root(b), or -1 when the sum is not a root.
  int sum_index(int a, int b) const { return sum_table_[a * num_roots() + b]; }

  bool simply_laced() const;

  /// Symmetric form with (alpha_i, alpha_i) = 2 d_i.
  long inner(const RootVec& a, const RootVec& b) const;
  long inner(int a, int b) const { return inner_table_[a * num_roots() + b]; }
  /// <beta, alpha_i^vee> = sum_j beta_j a_ij.
  int pairing(const RootVec& beta, int i) const;
  /// Coordinates of the coroot of root k in the simple coroot basis.
  RootVec coroot(int k) const;
  /// d of a root: (alpha, alpha)/2.
  int root_d(int k) const { return static_cast<int>(inner(k, k) / 2); }
  /// Index of s_i(root k).
  int reflect(int i, int k) const { return reflection_table_[i * num_roots() + k]; }
  RootVec reflect_vec(int i, const RootVec& v) const;

  /// Same root system with another orientation of its diagram.
  RootDatum with_orientation(const Orientation& o) const;

  friend RootDatum build_root_datum(std::string_view type_name, std::string_view orientation);
  friend RootDatum make_root_datum(std::string type_name, const IntMatrix& cartan, std::vector<int> d,
                                   Orientation orientation);

 private:
  void finish();

  std::string type_name_;
  int rank_ = 0;
  IntMatrix cartan_;
  std::vector<int> d_;
  Orientation orientation_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<RootVec> roots_;
  std::map<RootVec, int> index_;
  std::vector<int> heights_;
  std::vector<int> sum_table_;
  std::vector<long> inner_table_;
  std::vector<int> reflection_table_;
};

/// Parse "1>2,2>3" against the diagram edges; "default" or "" gives i -> j for i < j.
Orientation parse_orientation(std::string_view spec, int rank, const std::vector<std::pair<int, int>>& edges);

/// "A3", "B2", "G2", ...; orientation "default" or "1>2,...".
RootDatum build_root_datum(std::string_view type_name, std::string_view orientation = "default");
/// From an explicit symmetrizable Cartan matrix a_ij = 2(alpha_i, alpha_j)/(alpha_i, alpha_i).
RootDatum make_root_datum(std::string type_name, const IntMatrix& cartan, std::vector<int> d,
                          Orientation orientation);

/// Folding of an ADE quiver by an admissible automorphism.
RootDatum fold(const Quiver& quiver);

/// Names every supported type: A1..A8, B2..B4, C3, C4, D4, D5, E6..E8, F4, G2.
std::vector<std::string> supported_types();

/// k[i] = number of positive roots of height i + 1.
std::vector<int> height_histogram(const RootDatum& datum);
/// Dual partition of the height histogram, ascending.
std::vector<int> exponents(const RootDatum& datum);
/// Nonzero elementary divisors of an integer matrix (Smith normal form diagonal).
std::vector<std::int64_t> elementary_divisors(const IntMatrix& m);
/// Number of torus solutions of prod_i t_i^{a_ij} = 1 over F_q.
std::int64_t cartan_divisor(const RootDatum& datum, std::uint64_t q);
/// (1/d) q^r prod (q^{x_i+1} - 1).
mpz_class predicted_order(const RootDatum& datum, std::uint64_t q);

/// "a1+2a2", "-a3"; inverse of parse_root.
std::string root_label(const RootDatum& datum, int root);
/// Accepts a, S or the Greek alpha, optional coefficients and signs: "α1+α2", "-2a1-a2".
int parse_root(const RootDatum& datum, std::string_view text);

}  // namespace chev
