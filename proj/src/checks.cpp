#include "chevalley/checks.hpp"

#include <algorithm>

#include "chevalley/root_data.hpp"
#include "chevalley/weyl.hpp"

namespace chev {

SteinbergReport steinberg_check(const Group& g, int trials, std::mt19937_64& rng) {
  SteinbergReport rep;
  const RootDatum& r = g.datum();
  const Field& f = g.field();
  auto tally = [&](int rel, bool ok) {
    ++rep.checked[rel];
    if (!ok) ++rep.failed[rel];
  };
  for (int x = 0; x < r.num_roots(); ++x) {
    for (int k = 0; k < trials; ++k) {
      const Scalar a = random_scalar(f, rng), b = random_scalar(f, rng);
      tally(0, g.E(x, a) * g.E(x, b) == g.E(x, a + b));
      const Scalar u = random_scalar(f, rng, true), v = random_scalar(f, rng, true);
      tally(2, g.h(x, u) * g.h(x, v) == g.h(x, u * v));
      const Scalar t = random_scalar(f, rng, true), s = random_scalar(f, rng);
      const Matrix n = g.n(x, t);
      tally(3, n * g.E(x, s) * n.inverse() == g.E(r.negative(x), t.pow(-2) * s));
    }
    for (int y = 0; y < r.num_roots(); ++y) {
      if (y == x || y == r.negative(x)) continue;
      tally(1, verify_commutator(g, x, y, trials, rng));
    }
  }
  return rep;
}

std::int64_t steinberg_center_order(const RootDatum& datum, std::uint64_t q) { return cartan_divisor(datum, q); }

std::int64_t torus_kernel_count(const RootDatum& datum, std::uint64_t q) {
  const Field f = Field::finite(q);
  const auto units = f.units();
  const int m = datum.rank();
  const IntMatrix& a = datum.cartan();
  std::vector<std::size_t> idx(m, 0);
  std::int64_t count = 0;
  while (true) {
    bool ok = true;
    for (int j = 0; j < m && ok; ++j) {
      Scalar p = f.one();
      for (int i = 0; i < m; ++i) p *= units[idx[i]].pow(a(i, j));
      ok = p.is_one();
    }
    count += ok;
    int pos = 0;
    while (pos < m && ++idx[pos] == units.size()) idx[pos++] = 0;
    if (pos == m) break;
  }
  return count;
}

PoincareReport poincare_identity(const RootDatum& datum, std::uint64_t q) {
  PoincareReport rep;
  const auto coeffs = length_generating_function(datum);
  mpz_class qk = 1;
  for (auto c : coeffs) {
    rep.lhs += qk * static_cast<long>(c);
    qk *= static_cast<unsigned long>(q);
  }
  rep.rhs = 1;
  for (int k = 0; k < datum.num_positive(); ++k) {
    if (q == 1) {
      // limit t -> 1 of (t^{h+1}-1)/(t^h-1)
      rep.rhs *= mpq_class(datum.height(k) + 1, datum.height(k));
      rep.rhs.canonicalize();
      continue;
    }
    mpz_class hi, lo;
    mpz_ui_pow_ui(hi.get_mpz_t(), q, datum.height(k) + 1);
    mpz_ui_pow_ui(lo.get_mpz_t(), q, datum.height(k));
    rep.rhs *= mpq_class(hi - 1, lo - 1);
    rep.rhs.canonicalize();
  }
  rep.equal = rep.rhs.get_den() == 1 && rep.rhs.get_num() == rep.lhs;
  return rep;
}

NilpotencyReport nilpotency_check(const LieData& lie) {
  NilpotencyReport rep;
  rep.integral = true;
  rep.fifth_power_zero = true;
  const int n = lie.dim();
  for (int x = 0; x < lie.datum().num_roots(); ++x) {
    const IntMatrix ad = lie.adjoint(lie.u_index(x));
    std::vector<std::vector<std::pair<int, std::int64_t>>> cols(n);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (ad(a, b) != 0) cols[b].push_back({a, ad(a, b)});
    const auto& stored = lie.divided_powers(x);
    for (int c = 0; c < n; ++c) {
      // v = (ad u_X)^i e_c, tracked densely
      std::vector<std::int64_t> v(n, 0);
      v[c] = 1;
      std::int64_t fact = 1;
      for (int i = 1; i <= 5; ++i) {
        std::vector<std::int64_t> next(n, 0);
        for (int b = 0; b < n; ++b)
          if (v[b] != 0)
            for (const auto& [a, e] : cols[b]) next[a] += e * v[b];
        v = std::move(next);
        fact *= i;
        if (std::all_of(v.begin(), v.end(), [](std::int64_t e) { return e == 0; })) break;
        rep.max_nonzero_power = std::max(rep.max_nonzero_power, i);
        if (i == 5) rep.fifth_power_zero = false;
        std::vector<std::int64_t> d(n, 0);
        if (i < int(stored.size()))
          for (const auto& [row, e] : stored[i].cols[c]) d[row] = e;
        for (int a = 0; a < n; ++a)
          if (v[a] % fact != 0 || v[a] / fact != d[a]) rep.integral = false;
      }
    }
  }
  return rep;
}

}  // namespace chev
