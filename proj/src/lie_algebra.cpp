#include "chevalley/lie_algebra.hpp"

#include <functional>

namespace chev {

std::string to_string(Scheme s) { return s == Scheme::euler_cocycle ? "cocycle" : "extraspecial"; }

Scheme parse_scheme(std::string_view s) {
  if (s == "cocycle" || s == "euler_cocycle") return Scheme::euler_cocycle;
  if (s == "extraspecial") return Scheme::extraspecial;
  throw RootDataError("unknown scheme: " + std::string(s));
}

bool DividedPower::is_zero() const {
  for (const auto& c : cols)
    if (!c.empty()) return false;
  return true;
}

SparseInt add_scaled(const SparseInt& a, const SparseInt& b, std::int64_t s) {
  SparseInt out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      if (b[j].second * s != 0) out.emplace_back(b[j].first, b[j].second * s);
      ++j;
    } else {
      const std::int64_t v = a[i].second + s * b[j].second;
      if (v != 0) out.emplace_back(a[i].first, v);
      ++i;
      ++j;
    }
  }
  return out;
}

LieData::LieData(std::shared_ptr<const RootDatum> datum, Scheme scheme)
    : datum_(std::move(datum)), section_(datum_), scheme_(scheme) {
  if (scheme_ == Scheme::euler_cocycle) {
    if (!datum_->simply_laced()) throw RootDataError("the Euler cocycle scheme needs a simply-laced type");
    build_cocycle();
  } else {
    build_extraspecial();
  }
  build_divided_powers();
}

void LieData::build_cocycle() {
  const RootDatum& r = *datum_;
  const int n = r.num_roots();
  gamma_.assign(n * n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (r.sum_index(a, b) < 0) continue;
      // (-1)^{<beta, alpha>} with the orientation's Euler form
      const long e = section_.euler_form(r.root(b), r.root(a));
      gamma_[a * n + b] = (e % 2 == 0) ? 1 : -1;
    }
}

std::vector<int> extraspecial_constants(const RootDatum& r) {
  const int n = r.num_roots();
  const int np = r.num_positive();
  // extraspecial pair of each positive sum: the smallest first summand
  std::vector<int> extraspecial_first(np, -1);
  for (int a = 0; a < np; ++a)
    for (int b = a + 1; b < np; ++b) {
      const int s = r.sum_index(a, b);
      if (s >= 0 && extraspecial_first[s] < 0) extraspecial_first[s] = a;
    }
  auto string_p = [&](int a, int b) {
    // largest p with b - p a a root
    int p = 0;
    RootVec v = r.root(b);
    for (;;) {
      for (std::size_t i = 0; i < v.size(); ++i) v[i] -= r.root(a)[i];
      if (r.index_of(v) < 0) return p;
      ++p;
    }
  };
  std::vector<int> memo(n * n, 0);
  std::vector<char> state(n * n, 0);  // 0 new, 1 in progress, 2 done

  std::function<mpq_class(int, int)> N = [&](int a, int b) -> mpq_class {
    const int s = r.sum_index(a, b);
    if (s < 0) return 0;
    const int key = a * n + b;
    if (state[key] == 2) return memo[key];
    if (state[key] == 1) throw RootDataError("structure constant recursion does not terminate");
    state[key] = 1;
    mpq_class v;
    const bool pa = r.is_positive(a), pb = r.is_positive(b);
    if (pa && pb) {
      if (a > b) {
        v = -N(b, a);
      } else if (extraspecial_first[s] == a) {
        v = string_p(a, b) + 1;
      } else {
        const int al = extraspecial_first[s];
        const int be = r.sum_index(s, r.negative(al));
        const mpq_class nab = N(al, be);
        mpq_class acc = 0;
        const int s_al = r.sum_index(b, r.negative(al));
        if (s_al >= 0) acc += N(b, r.negative(al)) * N(a, r.negative(be)) / mpq_class(r.inner(s_al, s_al));
        const int r_al = r.sum_index(a, r.negative(al));
        if (r_al >= 0) acc += N(r.negative(al), a) * N(b, r.negative(be)) / mpq_class(r.inner(r_al, r_al));
        v = mpq_class(r.inner(s, s)) / nab * acc;
      }
    } else if (!pa && !pb) {
      v = -N(r.negative(a), r.negative(b));
    } else {
      // a + b + c = 0: N_{a,b}/(c,c) = N_{b,c}/(a,a) = N_{c,a}/(b,b)
      const int c = r.negative(s);
      if (r.is_positive(b) == r.is_positive(c))
        v = mpq_class(r.inner(c, c), r.inner(a, a)) * N(b, c);
      else
        v = mpq_class(r.inner(c, c), r.inner(b, b)) * N(c, a);
    }
    v.canonicalize();
    if (v.get_den() != 1) throw RootDataError("non-integral structure constant");
    memo[key] = static_cast<int>(v.get_num().get_si());
    state[key] = 2;
    return v;
  };
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) N(a, b);
  return memo;
}

void LieData::build_extraspecial() {
  const RootDatum& r = *datum_;
  const int n = r.num_roots();
  const auto nconst = extraspecial_constants(r);
  // u_a = e_a (a > 0), u_{-a} = -e_{-a}, H' = -h
  auto sign = [&](int k) { return r.is_positive(k) ? 1 : -1; };
  gamma_.assign(n * n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const int s = r.sum_index(a, b);
      if (s >= 0) gamma_[a * n + b] = sign(a) * sign(b) * sign(s) * nconst[a * n + b];
    }
}

void LieData::override_gamma(int x, int y, int value) {
  const int n = datum_->num_roots();
  gamma_[x * n + y] = value;
  gamma_[y * n + x] = -value;
  build_divided_powers();
}

SparseInt LieData::bracket_basis(int a, int b) const {
  const RootDatum& r = *datum_;
  const int m = r.rank();
  const bool ua = is_u(a), ub = is_u(b);
  if (!ua && !ub) return {};
  if (!ua) {
    const int k = root_of(b);
    const std::int64_t c = -r.pairing(r.root(k), a);
    if (c == 0) return {};
    return {{b, c}};
  }
  if (!ub) {
    const int k = root_of(a);
    const std::int64_t c = r.pairing(r.root(k), b);
    if (c == 0) return {};
    return {{a, c}};
  }
  const int x = root_of(a), y = root_of(b);
  if (y == r.negative(x)) {
    SparseInt out;
    const RootVec c = r.coroot(x);
    for (int j = 0; j < m; ++j)
      if (c[j] != 0) out.emplace_back(j, c[j]);
    return out;
  }
  const int s = r.sum_index(x, y);
  if (s < 0) return {};
  return {{u_index(s), gamma(x, y)}};
}

SparseInt LieData::bracket(const SparseInt& a, const SparseInt& b) const {
  SparseInt out;
  for (auto [i, ci] : a)
    for (auto [j, cj] : b) out = add_scaled(out, bracket_basis(i, j), ci * cj);
  return out;
}

std::vector<Scalar> LieData::bracket(const std::vector<Scalar>& a, const std::vector<Scalar>& b) const {
  if (static_cast<int>(a.size()) != dim() || static_cast<int>(b.size()) != dim())
    throw std::invalid_argument("bracket: wrong vector length");
  const Field f = a.empty() ? Field::rationals() : a[0].field();
  std::vector<Scalar> out(dim(), f.zero());
  for (int i = 0; i < dim(); ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; j < dim(); ++j) {
      if (b[j].is_zero()) continue;
      const Scalar w = a[i] * b[j];
      for (auto [k, c] : bracket_basis(i, j)) out[k] += w * f.from_int(c);
    }
  }
  return out;
}

IntMatrix LieData::adjoint(int basis) const {
  IntMatrix m(dim(), dim());
  for (int c = 0; c < dim(); ++c)
    for (auto [row, v] : bracket_basis(basis, c)) m(row, c) = v;
  return m;
}

void LieData::build_divided_powers() {
  const RootDatum& r = *datum_;
  divided_.assign(r.num_roots(), {});
  for (int k = 0; k < r.num_roots(); ++k) {
    const int x = u_index(k);
    DividedPower d0;
    d0.cols.resize(dim());
    for (int c = 0; c < dim(); ++c) d0.cols[c] = {{c, 1}};
    std::vector<DividedPower> powers{d0};
    for (int i = 1;; ++i) {
      if (i > 6) throw RootDataError("ad u_X is not nilpotent of order <= 6");
      DividedPower next;
      next.cols.resize(dim());
      for (int c = 0; c < dim(); ++c) {
        SparseInt v;
        for (auto [row, coef] : powers.back().cols[c]) v = add_scaled(v, bracket_basis(x, row), coef);
        for (auto& [row, coef] : v) {
          if (coef % i != 0) throw RootDataError("divided power is not integral");
          coef /= i;
        }
        next.cols[c] = std::move(v);
      }
      if (next.is_zero()) break;
      powers.push_back(std::move(next));
    }
    divided_[k] = std::move(powers);
  }
}

std::vector<std::array<int, 3>> jacobi_check(const LieData& lie, std::size_t max_reports) {
  std::vector<std::array<int, 3>> bad;
  const int n = lie.dim();
  // cache [a, b] for all pairs
  std::vector<SparseInt> table(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) table[a * n + b] = lie.bracket_basis(a, b);
  auto br = [&](const SparseInt& v, int c) {
    SparseInt out;
    for (auto [i, ci] : v) out = add_scaled(out, table[i * n + c], ci);
    return out;
  };
  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b)
      for (int c = b; c < n; ++c) {
        SparseInt s = br(table[a * n + b], c);
        s = add_scaled(s, br(table[b * n + c], a), 1);
        s = add_scaled(s, br(table[c * n + a], b), 1);
        if (!s.empty()) {
          bad.push_back({a, b, c});
          if (bad.size() >= max_reports) return bad;
        }
      }
  return bad;
}

}  // namespace chev
