#include "chevalley/group.hpp"

#include <sstream>

namespace chev {

namespace {

SparseInt apply_exp(const LieData& lie, int root, long t, const SparseInt& v) {
  // E_root(t) v = sum_i t^i D_i v over the integers
  SparseInt out;
  long ti = 1;
  for (const auto& d : lie.divided_powers(root)) {
    for (auto [c, coef] : v) out = add_scaled(out, d.cols[c], coef * ti);
    ti *= t;
  }
  return out;
}

}  // namespace

std::string WordAtom::to_string(const RootDatum& datum) const {
  const char k = kind == Kind::E ? 'E' : kind == Kind::h ? 'h' : 'n';
  return std::string(1, k) + ":" + root_label(datum, root) + ":" + t.to_string();
}

Group::Group(std::shared_ptr<const LieData> lie, Field field) : lie_(std::move(lie)), field_(field) {
  const RootDatum& r = lie_->datum();
  const int nr = r.num_roots();
  eta_.assign(nr, std::vector<int>(nr, 0));
  for (int x = 0; x < nr; ++x)
    for (int y = 0; y < nr; ++y) {
      SparseInt v{{lie_->u_index(y), 1}};
      v = apply_exp(*lie_, x, 1, v);
      v = apply_exp(*lie_, r.negative(x), 1, v);
      v = apply_exp(*lie_, x, 1, v);
      const int target = lie_->u_index(omega(r, Ind{x}, Ind{y}).root);
      if (v.size() != 1 || v[0].first != target || std::abs(v[0].second) != 1)
        throw GroupError("n_X does not permute the root lines");
      eta_[x][y] = static_cast<int>(v[0].second);
    }
  commutators_.assign(static_cast<std::size_t>(nr) * nr, {});
  for (int x = 0; x < nr; ++x)
    for (int y = 0; y < nr; ++y)
      if (r.sum_index(x, y) >= 0) commutators_[x * nr + y] = commutator_expand(*lie_, x, y);
}

Matrix Group::E(int root, const Scalar& t) const {
  Matrix m = identity();
  if (t.is_zero()) return m;
  Scalar ti = field_.one();
  const auto& powers = lie_->divided_powers(root);
  for (std::size_t i = 1; i < powers.size(); ++i) {
    ti *= t;
    for (int c = 0; c < dim(); ++c)
      for (auto [row, v] : powers[i].cols[c]) m(row, c) += ti * field_.from_int(v);
  }
  return m;
}

Matrix Group::n(int root, const Scalar& t) const {
  if (t.is_zero()) throw GroupError("n_X(t) needs t != 0");
  const Matrix e = E(root, t);
  return e * E(datum().negative(root), t.inverse()) * e;
}

Matrix Group::h(int root, const Scalar& t) const {
  if (t.is_zero()) throw GroupError("h_X(t) needs t != 0");
  return n(root, t) * n(root, -field_.one());
}

Matrix Group::atom(const WordAtom& a) const {
  switch (a.kind) {
    case WordAtom::Kind::E: return E(a.root, a.t);
    case WordAtom::Kind::h: return h(a.root, a.t);
    case WordAtom::Kind::n: return n(a.root, a.t);
  }
  return identity();
}

Matrix Group::word(const Word& w) const {
  Matrix m = identity();
  for (const auto& a : w) m = m * atom(a);
  return m;
}

Matrix Group::u_word(const UWord& w) const {
  Matrix m = identity();
  for (const auto& f : w) m = m * E(f.root, f.t);
  return m;
}

int Group::eta(int x, int y) const { return eta_[x][y]; }

const std::vector<CommutatorTerm>& Group::commutator(int x, int y) const {
  return commutators_[x * datum().num_roots() + y];
}

void Group::override_commutator(int x, int y, std::size_t term, int c) {
  commutators_[x * datum().num_roots() + y].at(term).c = c;
}

std::vector<CommutatorTerm> commutator_expand(const LieData& lie, int x, int y) {
  const RootDatum& r = lie.datum();
  const Ladder l = ladder(r, Ind{x}, Ind{y});
  auto g = [&](int a, int b) { return mpq_class(lie.gamma(a, b)); };
  auto L = [&](int i, int j) { return l.at[i][j]; };
  std::vector<CommutatorTerm> out;
  auto add = [&](int i, int j, const mpq_class& c) {
    if (!l.exists(i, j)) return;
    mpq_class v = c;
    v.canonicalize();
    if (v.get_den() != 1) throw GroupError("non-integral commutator constant");
    out.push_back({i, j, L(i, j), static_cast<int>(v.get_num().get_si())});
  };
  if (!l.exists(1, 1)) return out;
  add(1, 1, g(x, y));
  if (l.exists(2, 1)) add(2, 1, g(x, y) * g(x, L(1, 1)) / 2);
  if (l.exists(1, 2)) add(1, 2, -g(y, x) * g(y, L(1, 1)) / 2);
  if (l.exists(3, 1)) add(3, 1, g(x, y) * g(x, L(1, 1)) * g(x, L(2, 1)) / 6);
  if (l.exists(1, 3)) add(1, 3, -g(y, x) * g(y, L(1, 1)) * g(y, L(1, 2)) / 6);
  if (l.exists(3, 2)) add(3, 2, g(x, y) * g(x, L(1, 1)) * g(x, L(2, 1)) * g(y, L(3, 1)) / 3);
  if (l.exists(2, 3)) add(2, 3, g(y, x) * g(y, L(1, 1)) * g(y, L(1, 2)) * g(x, L(1, 3)) / 6);
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.i + a.j < b.i + b.j; });
  return out;
}

Scalar random_scalar(const Field& f, std::mt19937_64& rng, bool nonzero) {
  if (f.is_finite()) {
    const std::uint64_t q = f.order();
    if (nonzero) return f.from_code(static_cast<std::uint32_t>(1 + rng() % (q - 1)));
    return f.from_code(static_cast<std::uint32_t>(rng() % q));
  }
  for (;;) {
    const long num = static_cast<long>(rng() % 11) - 5;
    const long den = static_cast<long>(rng() % 4) + 1;
    if (nonzero && num == 0) continue;
    return f.from_rational(mpq_class(num, den));
  }
}

bool verify_commutator(const Group& g, int x, int y, int trials, std::mt19937_64& rng) {
  const Field& f = g.field();
  for (int k = 0; k < trials; ++k) {
    const Scalar t = random_scalar(f, rng), s = random_scalar(f, rng);
    const Matrix lhs = g.E(x, t) * g.E(y, s) * g.E(x, -t) * g.E(y, -s);
    Matrix rhs = g.identity();
    for (const auto& term : g.commutator(x, y))
      rhs = rhs * g.E(term.root, f.from_int(term.c) * t.pow(term.i) * s.pow(term.j));
    if (lhs != rhs) return false;
  }
  return true;
}

UWord collect(const Group& g, UWord w, const std::vector<int>& rank, std::mt19937_64* rng) {
  std::erase_if(w, [](const UFactor& f) { return f.t.is_zero(); });
  std::vector<std::size_t> candidates;
  for (std::size_t guard = 0;; ++guard) {
    if (guard > 1000000) throw GroupError("collection does not terminate");
    candidates.clear();
    for (std::size_t k = 0; k + 1 < w.size(); ++k)
      if (rank[w[k].root] >= rank[w[k + 1].root]) {
        candidates.push_back(k);
        if (!rng) break;
      }
    if (candidates.empty()) return w;
    const std::size_t k = rng ? candidates[(*rng)() % candidates.size()] : candidates.front();
    if (w[k].root == w[k + 1].root) {
      w[k].t += w[k + 1].t;
      w.erase(w.begin() + static_cast<std::ptrdiff_t>(k) + 1);
      if (w[k].t.is_zero()) w.erase(w.begin() + static_cast<std::ptrdiff_t>(k));
      continue;
    }
    // E_b(s) E_a(t) = (E_b(s), E_a(t)) E_a(t) E_b(s)
    const UFactor b = w[k], a = w[k + 1];
    UWord repl;
    for (const auto& term : g.commutator(b.root, a.root)) {
      const Scalar c = g.from_int(term.c) * b.t.pow(term.i) * a.t.pow(term.j);
      if (!c.is_zero()) repl.push_back({term.root, c});
    }
    repl.push_back(a);
    repl.push_back(b);
    w.erase(w.begin() + static_cast<std::ptrdiff_t>(k), w.begin() + static_cast<std::ptrdiff_t>(k) + 2);
    w.insert(w.begin() + static_cast<std::ptrdiff_t>(k), repl.begin(), repl.end());
  }
}

UWord normalize_u(const Group& g, const UWord& w, std::mt19937_64* rng) {
  std::vector<int> rank(g.datum().num_roots());
  for (int k = 0; k < g.datum().num_roots(); ++k) rank[k] = k;
  return collect(g, w, rank, rng);
}

}  // namespace chev
