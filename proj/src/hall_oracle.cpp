#include "chevalley/hall_oracle.hpp"

#include <algorithm>
#include <functional>

namespace chev {

namespace {

constexpr int kMaxTotalDim = 8;

std::vector<int> sum_dims(const RootVec& v) { return std::vector<int>(v.begin(), v.end()); }

// Every k-dimensional subspace of F^n as a k x n matrix in reduced row echelon form.
void for_each_subspace(const Field& f, int n, int k, const std::function<void(const Matrix&, const std::vector<int>&)>& fn) {
  const auto elems = f.elements();
  std::vector<int> pivots(k);
  std::function<void(int, int)> choose = [&](int idx, int start) {
    if (idx == k) {
      // free positions: (row r, col c) with c > pivots[r], c not a pivot
      std::vector<std::pair<int, int>> free;
      for (int r = 0; r < k; ++r)
        for (int c = pivots[r] + 1; c < n; ++c)
          if (std::find(pivots.begin(), pivots.end(), c) == pivots.end()) free.emplace_back(r, c);
      std::vector<std::size_t> digit(free.size(), 0);
      for (;;) {
        Matrix m(f, k, n);
        for (int r = 0; r < k; ++r) m(r, pivots[r]) = f.one();
        for (std::size_t t = 0; t < free.size(); ++t) m(free[t].first, free[t].second) = elems[digit[t]];
        fn(m, pivots);
        std::size_t t = 0;
        while (t < digit.size() && ++digit[t] == elems.size()) digit[t++] = 0;
        if (t == digit.size()) break;
      }
      return;
    }
    for (int c = start; c <= n - (k - idx); ++c) {
      pivots[idx] = c;
      choose(idx + 1, c + 1);
    }
  };
  choose(0, 0);
}

// R_i^-: from a representation where i is a source to the one where i is a sink.
Representation reflect_at_source(const Representation& v, int i) {
  const Field& f = v.field;
  std::vector<int> out_arrows;
  int total = 0;
  for (std::size_t a = 0; a < v.orientation.arrows.size(); ++a)
    if (v.orientation.arrows[a].first == i) {
      out_arrows.push_back(static_cast<int>(a));
      total += v.dims[v.orientation.arrows[a].second];
    }
  // phi: V_i -> sum_j V_j
  Matrix phi(f, total, v.dims[i]);
  int row = 0;
  for (int a : out_arrows) {
    const Matrix& m = v.maps[a];
    for (std::size_t r = 0; r < m.rows(); ++r, ++row)
      for (std::size_t c = 0; c < m.cols(); ++c) phi(row, c) = m(r, c);
  }
  // cokernel projection: rows spanning the left null space of phi
  const Matrix proj = transpose(nullspace(transpose(phi)));
  Representation w;
  w.field = f;
  w.orientation = v.orientation.reversed_at(i);
  w.dims = v.dims;
  w.dims[i] = static_cast<int>(proj.rows());
  w.maps = v.maps;
  int offset = 0;
  for (int a : out_arrows) {
    const int j = v.orientation.arrows[a].second;
    Matrix m(f, proj.rows(), v.dims[j]);
    for (std::size_t r = 0; r < proj.rows(); ++r)
      for (int c = 0; c < v.dims[j]; ++c) m(r, c) = proj(r, offset + c);
    w.maps[a] = std::move(m);
    offset += v.dims[j];
  }
  return w;
}

Representation subrepresentation(const Representation& l, const std::vector<Matrix>& basis,
                                 const std::vector<std::vector<int>>& pivots) {
  Representation u;
  u.field = l.field;
  u.orientation = l.orientation;
  for (const auto& b : basis) u.dims.push_back(static_cast<int>(b.rows()));
  for (std::size_t a = 0; a < l.orientation.arrows.size(); ++a) {
    const auto [t, h] = l.orientation.arrows[a];
    Matrix m(l.field, u.dims[h], u.dims[t]);
    for (int c = 0; c < u.dims[t]; ++c)
      for (int r = 0; r < u.dims[h]; ++r) {
        // coordinate of L_a(b_c) at the r-th pivot of U_h
        Scalar s = l.field.zero();
        for (int k = 0; k < l.dims[t]; ++k) s += l.maps[a](pivots[h][r], k) * basis[t](c, k);
        m(r, c) = s;
      }
    u.maps.push_back(std::move(m));
  }
  return u;
}

Representation quotient(const Representation& l, const std::vector<Matrix>& basis,
                        const std::vector<std::vector<int>>& pivots) {
  Representation q;
  q.field = l.field;
  q.orientation = l.orientation;
  std::vector<std::vector<int>> rest(l.dims.size());
  for (std::size_t v = 0; v < l.dims.size(); ++v) {
    for (int c = 0; c < l.dims[v]; ++c)
      if (std::find(pivots[v].begin(), pivots[v].end(), c) == pivots[v].end()) rest[v].push_back(c);
    q.dims.push_back(static_cast<int>(rest[v].size()));
  }
  for (std::size_t a = 0; a < l.orientation.arrows.size(); ++a) {
    const auto [t, h] = l.orientation.arrows[a];
    Matrix m(l.field, q.dims[h], q.dims[t]);
    for (int c = 0; c < q.dims[t]; ++c) {
      std::vector<Scalar> img(l.dims[h], l.field.zero());
      for (int r = 0; r < l.dims[h]; ++r) img[r] = l.maps[a](r, rest[t][c]);
      // reduce modulo U_h (rows of basis[h] are in reduced echelon form)
      for (std::size_t k = 0; k < pivots[h].size(); ++k) {
        const Scalar coef = img[pivots[h][k]];
        if (coef.is_zero()) continue;
        for (int r = 0; r < l.dims[h]; ++r) img[r] -= coef * basis[h](k, r);
      }
      for (int r = 0; r < q.dims[h]; ++r) m(r, c) = img[rest[h][r]];
    }
    q.maps.push_back(std::move(m));
  }
  return q;
}

}  // namespace

int Representation::total_dim() const {
  int s = 0;
  for (int d : dims) s += d;
  return s;
}

Representation simple_representation(const Field& f, const Orientation& o, int rank, int i) {
  Representation r;
  r.field = f;
  r.orientation = o;
  r.dims.assign(rank, 0);
  r.dims[i] = 1;
  for (auto [t, h] : o.arrows) r.maps.emplace_back(f, r.dims[h], r.dims[t]);
  return r;
}

bool hall_supported(const RootDatum& datum) {
  static const std::vector<std::string> ok = {"A1", "A2", "A3", "A4", "D4"};
  return std::find(ok.begin(), ok.end(), datum.type_name()) != ok.end();
}

Representation build_indecomposable(const RootDatum& datum, const Orientation& o, const RootVec& root, std::uint32_t p) {
  if (!hall_supported(datum)) throw HallError("explicit representations need type A1..A4 or D4");
  if (datum.index_of(root) < 0 || !datum.is_positive(datum.index_of(root)))
    throw HallError("dimension vector is not a positive root");
  const Field f = Field::prime(p);
  // follow sinks until the dimension vector becomes the simple at the current sink
  std::vector<int> path;
  Orientation cur = o;
  RootVec beta = root;
  for (int steps = 0;; ++steps) {
    if (steps > 4 * datum.num_roots()) throw HallError("reflection sequence does not terminate");
    int sink = -1;
    for (int i = 0; i < datum.rank(); ++i)
      if (cur.is_sink(i)) {
        sink = i;
        break;
      }
    RootVec simple(datum.rank(), 0);
    simple[sink] = 1;
    if (beta == simple) {
      Representation rep = simple_representation(f, cur, datum.rank(), sink);
      for (auto it = path.rbegin(); it != path.rend(); ++it) rep = reflect_at_source(rep, *it);
      if (rep.dims != sum_dims(root)) throw HallError("reflection functors produced the wrong dimension vector");
      return rep;
    }
    beta = datum.reflect_vec(sink, beta);
    cur = cur.reversed_at(sink);
    path.push_back(sink);
  }
}

int hom_dim(const Representation& m, const Representation& n) {
  const Field& f = m.field;
  const std::size_t verts = m.dims.size();
  std::vector<int> offset(verts + 1, 0);
  for (std::size_t v = 0; v < verts; ++v) offset[v + 1] = offset[v] + n.dims[v] * m.dims[v];
  const int unknowns = offset[verts];
  if (unknowns == 0) return 0;
  int eqs = 0;
  for (auto [t, h] : m.orientation.arrows) eqs += n.dims[h] * m.dims[t];
  Matrix sys(f, std::max(eqs, 1), unknowns);
  int row = 0;
  // N_a f_t - f_h M_a = 0; f_v(r, c) at offset[v] + r * m.dims[v] + c
  for (std::size_t a = 0; a < m.orientation.arrows.size(); ++a) {
    const auto [t, h] = m.orientation.arrows[a];
    for (int r = 0; r < n.dims[h]; ++r)
      for (int c = 0; c < m.dims[t]; ++c, ++row) {
        for (int k = 0; k < n.dims[t]; ++k) sys(row, offset[t] + k * m.dims[t] + c) += n.maps[a](r, k);
        for (int k = 0; k < m.dims[h]; ++k) sys(row, offset[h] + r * m.dims[h] + k) -= m.maps[a](k, c);
      }
  }
  return unknowns - static_cast<int>(rank(sys));
}

std::int64_t filtration_count(const Representation& l, const RootVec& x, const RootVec& y) {
  if (l.total_dim() > kMaxTotalDim) throw HallError("representation too large for subrepresentation enumeration");
  const std::size_t verts = l.dims.size();
  for (std::size_t v = 0; v < verts; ++v)
    if (x[v] + y[v] != l.dims[v] || x[v] < 0 || y[v] < 0) throw HallError("dim L must equal X + Y");
  std::int64_t count = 0;
  std::vector<Matrix> basis(verts);
  std::vector<std::vector<int>> pivots(verts);
  std::function<void(std::size_t)> rec = [&](std::size_t v) {
    if (v == verts) {
      // closure under the arrow maps
      for (std::size_t a = 0; a < l.orientation.arrows.size(); ++a) {
        const auto [t, h] = l.orientation.arrows[a];
        if (basis[t].rows() == 0) continue;
        const Matrix img = transpose(l.maps[a] * transpose(basis[t]));
        Matrix stacked(l.field, basis[h].rows() + img.rows(), l.dims[h]);
        for (std::size_t r = 0; r < basis[h].rows(); ++r)
          for (int c = 0; c < l.dims[h]; ++c) stacked(r, c) = basis[h](r, c);
        for (std::size_t r = 0; r < img.rows(); ++r)
          for (int c = 0; c < l.dims[h]; ++c) stacked(basis[h].rows() + r, c) = img(r, c);
        if (rank(stacked) != basis[h].rows()) return;
      }
      const Representation u = subrepresentation(l, basis, pivots);
      // the zero object counts as itself
      if (u.total_dim() > 0 && hom_dim(u, u) != 1) return;
      const Representation q = quotient(l, basis, pivots);
      if (q.total_dim() > 0 && hom_dim(q, q) != 1) return;
      ++count;
      return;
    }
    for_each_subspace(l.field, l.dims[v], y[v], [&](const Matrix& m, const std::vector<int>& piv) {
      basis[v] = m;
      pivots[v] = piv;
      rec(v + 1);
    });
  };
  rec(0);
  return count;
}

mpq_class HallFit::value_at(const mpq_class& q) const {
  mpq_class s = 0, pw = 1;
  for (const auto& c : coefficients) {
    s += c * pw;
    pw *= q;
  }
  return s;
}

HallFit hall_polynomial(const RootDatum& datum, const Orientation& o, const RootVec& x, const RootVec& y,
                        const std::vector<std::uint32_t>& primes, std::uint32_t check_prime) {
  RootVec lv(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) lv[i] = x[i] + y[i];
  auto sample = [&](std::uint32_t p) {
    return filtration_count(build_indecomposable(datum, o, lv, p), x, y);
  };
  HallFit fit;
  fit.primes = primes;
  for (auto p : primes) fit.counts.push_back(sample(p));
  // Newton divided differences, then expand to monomial coefficients
  const std::size_t n = primes.size();
  std::vector<mpq_class> dd(fit.counts.begin(), fit.counts.end());
  for (std::size_t k = 1; k < n; ++k)
    for (std::size_t i = n - 1; i >= k; --i)
      dd[i] = (dd[i] - dd[i - 1]) / mpq_class(static_cast<long>(primes[i]) - static_cast<long>(primes[i - k]));
  std::vector<mpq_class> poly{dd[n - 1]};
  for (std::size_t k = n - 1; k-- > 0;) {
    std::vector<mpq_class> next(poly.size() + 1, 0);
    for (std::size_t i = 0; i < poly.size(); ++i) {
      next[i + 1] += poly[i];
      next[i] -= poly[i] * static_cast<long>(primes[k]);
    }
    next[0] += dd[k];
    poly = std::move(next);
  }
  while (poly.size() > 1 && poly.back() == 0) poly.pop_back();
  fit.coefficients = poly;
  for (const auto& c : poly)
    if (c.get_den() != 1) throw HallError("Hall polynomial fit has non-integral coefficients");
  if (fit.value_at(check_prime) != sample(check_prime)) throw HallError("Hall polynomial fit fails at the check prime");
  return fit;
}

GammaReport gamma_oracle(const RootDatum& datum, const Orientation& o, const RootVec& x, const RootVec& y) {
  GammaReport g;
  g.xy = hall_polynomial(datum, o, x, y);
  g.yx = hall_polynomial(datum, o, y, x);
  const mpq_class v = g.xy.value_at(1) - g.yx.value_at(1);
  if (v.get_den() != 1) throw HallError("non-integral Hall constant");
  g.gamma = static_cast<int>(v.get_num().get_si());
  return g;
}

HomOracle make_hom_oracle(const RootDatum& datum, std::uint32_t p) {
  if (!hall_supported(datum)) return [](const Orientation&, const RootVec&, const RootVec&) { return std::optional<int>(); };
  auto d = std::make_shared<const RootDatum>(datum);
  return [d, p](const Orientation& o, const RootVec& a, const RootVec& b) -> std::optional<int> {
    return hom_dim(build_indecomposable(*d, o, a, p), build_indecomposable(*d, o, b, p));
  };
}

}  // namespace chev
