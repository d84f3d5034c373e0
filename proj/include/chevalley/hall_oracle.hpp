#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include <gmpxx.h>

#include "chevalley/field.hpp"
#include "chevalley/matrix.hpp"
#include "chevalley/root_category.hpp"
#include "chevalley/root_data.hpp"

namespace chev {

class HallError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Quiver representation over F_p; maps[a] has shape dims[head] x dims[tail].
struct Representation {
  Field field;
  Orientation orientation;
  std::vector<int> dims;
  std::vector<Matrix> maps;

  int total_dim() const;
};

/// Simple representation at vertex i.
Representation simple_representation(const Field& f, const Orientation& o, int rank, int i);
/// Indecomposable with dimension vector `root` for the given orientation, built by BGP reflections.
Representation build_indecomposable(const RootDatum& datum, const Orientation& o, const RootVec& root, std::uint32_t p);
int hom_dim(const Representation& m, const Representation& n);
/// F^L_{XY}: subrepresentations U with U = Y and L/U = X (both indecomposable).
std::int64_t filtration_count(const Representation& l, const RootVec& x, const RootVec& y);

struct HallFit {
  std::vector<std::uint32_t> primes;
  std::vector<std::int64_t> counts;
  std::vector<mpq_class> coefficients;  // phi(q) = sum c_i q^i
  mpq_class value_at(const mpq_class& q) const;
};

/// Sample F^L_{XY}(p) at the given primes, fit and validate at `check_prime`.
HallFit hall_polynomial(const RootDatum& datum, const Orientation& o, const RootVec& x, const RootVec& y,
                        const std::vector<std::uint32_t>& primes = {2, 3, 5, 7, 11}, std::uint32_t check_prime = 13);

struct GammaReport {
  HallFit xy, yx;
  int gamma = 0;
};

/// gamma^L_{XY} = phi_XY(1) - phi_YX(1) for positive roots X, Y with X + Y = L.
GammaReport gamma_oracle(const RootDatum& datum, const Orientation& o, const RootVec& x, const RootVec& y);

bool hall_supported(const RootDatum& datum);
/// dim Hom between indecomposables over F_p.
HomOracle make_hom_oracle(const RootDatum& datum, std::uint32_t p = 2);

}  // namespace chev
