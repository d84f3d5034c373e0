#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "chevalley/field.hpp"
#include "chevalley/matrix.hpp"
#include "chevalley/root_category.hpp"
#include "chevalley/root_data.hpp"

namespace chev {

enum class Scheme { euler_cocycle, extraspecial };
std::string to_string(Scheme s);
Scheme parse_scheme(std::string_view s);

/// Sparse integer vector in the Chevalley basis: (basis index, coefficient), sorted by index.
using SparseInt = std::vector<std::pair<int, std::int64_t>>;

/// (ad u_X)^i / i! as integer columns: cols[c] is the image of basis vector c.
struct DividedPower {
  std::vector<SparseInt> cols;
  bool is_zero() const;
};

/// Integral Chevalley form: basis H'_1..H'_m, then u_k for every root k.
class LieData {
 public:
  LieData(std::shared_ptr<const RootDatum> datum, Scheme scheme);

  const RootDatum& datum() const { return *datum_; }
  std::shared_ptr<const RootDatum> datum_ptr() const { return datum_; }
  const Section& section() const { return section_; }
  Scheme scheme() const { return scheme_; }
  int dim() const { return datum_->rank() + datum_->num_roots(); }
  int h_index(int i) const { return i; }
  int u_index(int root) const { return datum_->rank() + root; }
  bool is_u(int basis) const { return basis >= datum_->rank(); }
  int root_of(int basis) const { return basis - datum_->rank(); }

  /// gamma^{X+Y}_{XY}; zero when root(X) + root(Y) is not a root.
  int gamma(int x, int y) const { return gamma_[x * datum_->num_roots() + y]; }
  /// Overwrite one constant (and its antisymmetric partner); for negative controls.
  void override_gamma(int x, int y, int value);

  /// [e_a, e_b] for basis vectors.
  SparseInt bracket_basis(int a, int b) const;
  SparseInt bracket(const SparseInt& a, const SparseInt& b) const;
  /// Bilinear bracket of coefficient vectors over any field.
  std::vector<Scalar> bracket(const std::vector<Scalar>& a, const std::vector<Scalar>& b) const;

  /// Matrix of ad(e_basis).
  IntMatrix adjoint(int basis) const;
  /// D_0, D_1, ... for u_root, up to the last nonzero power.
  const std::vector<DividedPower>& divided_powers(int root) const { return divided_[root]; }

 private:
  void build_cocycle();
  void build_extraspecial();
  void build_divided_powers();

  std::shared_ptr<const RootDatum> datum_;
  Section section_;
  Scheme scheme_;
  std::vector<int> gamma_;
  std::vector<std::vector<DividedPower>> divided_;
};

/// Basis triples (a <= b <= c) violating the Jacobi identity.
std::vector<std::array<int, 3>> jacobi_check(const LieData& lie, std::size_t max_reports = 16);

/// Carter's extraspecial-pair structure constants N_{a,b} for [e_a, e_b] = N e_{a+b}.
std::vector<int> extraspecial_constants(const RootDatum& datum);

SparseInt add_scaled(const SparseInt& a, const SparseInt& b, std::int64_t s);

}  // namespace chev
