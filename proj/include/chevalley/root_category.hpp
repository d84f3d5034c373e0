#pragma once

#include <array>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "chevalley/root_data.hpp"
#include "chevalley/weyl.hpp"

namespace chev {

/// Indecomposable object of the root category, named by its root in the reference datum.
struct Ind {
  int root = 0;
  bool operator==(const Ind&) const = default;
  auto operator<=>(const Ind&) const = default;
};

inline Ind shift(const RootDatum& datum, Ind x) { return Ind{datum.negative(x.root)}; }
inline int d_of(const RootDatum& datum, Ind x) { return datum.root_d(x.root); }

/// (H_X|H_Y), normalized so that (H_X|H_X) = 2 d(X).
long euler_pair(const RootDatum& datum, Ind x, Ind y);
/// A_XY = (H_X|H_Y) / d(X).
int a_coeff(const RootDatum& datum, Ind x, Ind y);
/// omega_X(Y): TY when Y is X or TX, else the reflection of Y in X.
Ind omega(const RootDatum& datum, Ind x, Ind y);

struct Ladder {
  Ind x, y;
  /// at[i][j] = root index of i x + j y, or -1.
  std::array<std::array<int, 4>, 4> at{};
  int p = 0;
  int q = 0;
  bool exists(int i, int j) const { return at[i][j] >= 0; }
};

/// Ladder grid for X not isomorphic to Y or TY.
Ladder ladder(const RootDatum& datum, Ind x, Ind y);
/// Type of the rank-2 subsystem through X and Y: "A1xA1", "A2", "B2" or "G2".
std::string ladder_template(const RootDatum& datum, const Ladder& l);

/// A complete section: an orientation plus the dimension vectors it assigns.
class Section {
 public:
  explicit Section(std::shared_ptr<const RootDatum> datum);

  const RootDatum& datum() const { return *datum_; }
  const Orientation& orientation() const { return orientation_; }
  /// Root index of dim_B(X) in the section's coordinates.
  int dim(Ind x) const { return weyl_.apply(x.root); }
  bool in_b(Ind x) const { return datum_->is_positive(dim(x)); }
  /// l(M): height of dim(M), negative on TB.
  int length(Ind x) const { return datum_->height(dim(x)); }
  /// S_1..S_m of this section.
  std::vector<Ind> simples() const;
  /// Accumulated Weyl map from reference to section coordinates.
  const WeylElement& weyl() const { return weyl_; }

  /// BGP reflection at a sink or source i.
  Section reflect(int i) const;
  /// Non-symmetrized Euler form of the orientation on section coordinates.
  long euler_form(const RootVec& a, const RootVec& b) const;

  bool operator==(const Section& o) const { return orientation_ == o.orientation_ && weyl_ == o.weyl_; }

 private:
  std::shared_ptr<const RootDatum> datum_;
  Orientation orientation_;
  WeylElement weyl_;
};

enum class Position { greater, less, none, unsupported };
std::string to_string(Position p);

/// dim Hom(M, N) between indecomposables of the hereditary category with the given orientation,
/// named by their positive dimension vectors; nullopt when unavailable.
using HomOracle = std::function<std::optional<int>(const Orientation&, const RootVec&, const RootVec&)>;

/// X > Y iff Ext^1(Y, X) != 0 and Ext^1(X, Y) = 0.
Position relative_position(const Section& section, Ind x, Ind y, const HomOracle& hom);

}  // namespace chev
