#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "chevalley/group.hpp"

namespace chev {

/// Failure counts for relations (1)-(4) of the Steinberg presentation.
struct SteinbergReport {
  std::size_t checked[4] = {0, 0, 0, 0};
  std::size_t failed[4] = {0, 0, 0, 0};
  bool ok() const { return failed[0] + failed[1] + failed[2] + failed[3] == 0; }
};
SteinbergReport steinberg_check(const Group& g, int trials, std::mt19937_64& rng);

/// Order of the center of the abstract Steinberg group over F_q.
std::int64_t steinberg_center_order(const RootDatum& datum, std::uint64_t q);
/// Direct count of (t_i) in (F_q^x)^m with prod_i t_i^{a_ij} = 1 for every j.
std::int64_t torus_kernel_count(const RootDatum& datum, std::uint64_t q);

struct PoincareReport {
  mpz_class lhs;
  mpq_class rhs;
  bool equal = false;
};
/// sum_w q^{l(w)} against prod over positive roots of (q^{ht+1}-1)/(q^{ht}-1).
PoincareReport poincare_identity(const RootDatum& datum, std::uint64_t q);

struct NilpotencyReport {
  int max_nonzero_power = 0;  // largest i with (ad u_X)^i != 0 over all X
  bool integral = false;      // every (ad u_X)^i / i! integral
  bool fifth_power_zero = false;
};
NilpotencyReport nilpotency_check(const LieData& lie);

}  // namespace chev
