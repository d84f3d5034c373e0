#pragma once

#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "chevalley/field.hpp"
#include "chevalley/lie_algebra.hpp"
#include "chevalley/matrix.hpp"

namespace chev {

class GroupError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct WordAtom {
  enum class Kind { E, h, n };
  Kind kind = Kind::E;
  int root = 0;
  Scalar t;
  std::string to_string(const RootDatum& datum) const;
};
using Word = std::vector<WordAtom>;

/// A root-group factor E_root(t).
struct UFactor {
  int root = 0;
  Scalar t;
  bool operator==(const UFactor&) const = default;
};
using UWord = std::vector<UFactor>;

struct CommutatorTerm {
  int i = 0, j = 0;
  int root = 0;  // L_{X,Y,i,j}
  int c = 0;     // C_{X,Y,i,j}
};

/// Chevalley group G(K) in the adjoint representation of a Lie algebra.
class Group {
 public:
  Group(std::shared_ptr<const LieData> lie, Field field);

  const LieData& lie() const { return *lie_; }
  std::shared_ptr<const LieData> lie_ptr() const { return lie_; }
  const RootDatum& datum() const { return lie_->datum(); }
  const Field& field() const { return field_; }
  int dim() const { return lie_->dim(); }

  Matrix identity() const { return Matrix::identity(field_, dim()); }
  Matrix E(int root, const Scalar& t) const;
  /// n_X(t) = E_X(t) E_TX(1/t) E_X(t).
  Matrix n(int root, const Scalar& t) const;
  /// h_X(t) = n_X(t) n_X(-1).
  Matrix h(int root, const Scalar& t) const;
  Matrix atom(const WordAtom& a) const;
  Matrix word(const Word& w) const;
  Matrix u_word(const UWord& w) const;

  /// n_X u_Y = eta_XY u_{omega_X(Y)} with n_X = n_X(1).
  int eta(int x, int y) const;

  /// Terms of (E_X(t), E_Y(s)) = prod E_{L_ij}(C_ij t^i s^j), ordered by increasing i + j.
  const std::vector<CommutatorTerm>& commutator(int x, int y) const;
  /// Overwrite one commutator constant; for negative controls.
  void override_commutator(int x, int y, std::size_t term, int c);

  Scalar from_int(long long v) const { return field_.from_int(v); }

 private:
  std::shared_ptr<const LieData> lie_;
  Field field_;
  std::vector<std::vector<int>> eta_;  // lazily filled rows
  std::vector<std::vector<CommutatorTerm>> commutators_;
};

/// Commutator constants from the gamma table by the closed forms.
std::vector<CommutatorTerm> commutator_expand(const LieData& lie, int x, int y);

/// Compare (E_X(t), E_Y(s)) with the product formula for random parameters.
bool verify_commutator(const Group& g, int x, int y, int trials, std::mt19937_64& rng);

/// Random element of the field; nonzero when `nonzero`. Rationals are small fractions.
Scalar random_scalar(const Field& f, std::mt19937_64& rng, bool nonzero = false);

/// Collect a word of positive root factors into the order given by `rank`
/// (rank[root] gives the position; roots of equal rank are merged).
/// When rng is given, a random inversion is rewritten at each step.
UWord collect(const Group& g, UWord w, const std::vector<int>& rank, std::mt19937_64* rng = nullptr);
/// Canonical U normal form: ascending canonical root order.
UWord normalize_u(const Group& g, const UWord& w, std::mt19937_64* rng = nullptr);

}  // namespace chev
