#include "chevalley/bruhat.hpp"

#include <algorithm>

namespace chev {

namespace {

UWord inverse(const UWord& w) {
  UWord out(w.rbegin(), w.rend());
  for (auto& f : out) f.t = -f.t;
  return out;
}

UWord concat(UWord a, const UWord& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

}  // namespace

BruhatBuilder::BruhatBuilder(const Group& g, std::mt19937_64* rng)
    : g_(g), rng_(rng), chi_(g.datum().rank(), g.field().one()), w_(WeylElement::identity(g.datum())) {}

BruhatBuilder::BruhatBuilder(const Group& g, const BruhatForm& start, std::mt19937_64* rng)
    : g_(g),
      rng_(rng),
      up_(start.u_prime),
      chi_(start.torus),
      w_(WeylElement::from_word(g.datum(), start.weyl_word)),
      u_(start.u_minus) {}

Scalar BruhatBuilder::character(const std::vector<Scalar>& chi, const RootVec& gamma) const {
  Scalar v = g_.field().one();
  for (std::size_t j = 0; j < gamma.size(); ++j)
    if (gamma[j] != 0) v *= chi[j].pow(gamma[j]);
  return v;
}

UFactor BruhatBuilder::conj_nw(UFactor f) const {
  // n_w = n_{i_1} ... n_{i_l}; the innermost letter acts first
  const auto word = w_.reduced_word(g_.datum());
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    const int i = *it;
    if (g_.eta(i, f.root) < 0) f.t = -f.t;
    f.root = g_.datum().reflect(i, f.root);
  }
  return f;
}

void BruhatBuilder::mul_U(const UWord& v) {
  const RootDatum& r = g_.datum();
  UWord rest = normalize(concat(u_, v));
  // split rest = p m with p over roots kept positive by w, m over the inversion set
  UWord p_total, m_total;
  while (!rest.empty()) {
    int k = r.height(rest.front().root);
    for (const auto& f : rest) k = std::min(k, r.height(f.root));
    UWord p, m;
    for (const auto& f : rest) {
      if (r.height(f.root) != k) continue;
      (r.is_positive(w_.apply(f.root)) ? p : m).push_back(f);
    }
    rest = normalize(concat(concat(inverse(p), rest), inverse(m)));
    p_total = concat(p_total, p);
    m_total = concat(m, m_total);
  }
  UWord moved;
  for (const auto& f : normalize(p_total)) {
    UFactor c = conj_nw(f);
    c.t *= character(chi_, r.root(c.root));
    moved.push_back(c);
  }
  up_ = normalize(concat(up_, moved));
  u_ = normalize(m_total);
}

void BruhatBuilder::mul_h(int root, const Scalar& t) {
  const RootDatum& r = g_.datum();
  for (auto& f : u_) f.t *= t.pow(-a_coeff(r, Ind{root}, Ind{f.root}));
  const int wr = w_.apply(root);
  for (int j = 0; j < r.rank(); ++j) chi_[j] *= t.pow(a_coeff(r, Ind{wr}, Ind{j}));
}

void BruhatBuilder::mul_torus(const std::vector<Scalar>& chi) {
  const RootDatum& r = g_.datum();
  for (auto& f : u_) f.t *= character(chi, r.root(f.root)).inverse();
  const WeylElement inv = w_.inverse();
  std::vector<Scalar> next = chi_;
  for (int j = 0; j < r.rank(); ++j) next[j] *= character(chi, r.root(inv.apply(j)));
  chi_ = std::move(next);
}

void BruhatBuilder::mul_n(int i) {
  const RootDatum& r = g_.datum();
  const Field& f = g_.field();
  Scalar c = f.zero();
  for (const auto& x : u_)
    if (x.root == i) c = x.t;
  // u = E_i(c) u'', and u'' n_i = n_i v
  const UWord rest = c.is_zero() ? u_ : normalize(concat(UWord{{i, -c}}, u_));
  UWord v;
  for (const auto& x : rest) {
    if (x.root == i) throw GroupError("simple factor survived extraction");
    Scalar e = x.t;
    if (g_.eta(i, x.root) < 0) e = -e;
    if (a_coeff(r, Ind{i}, Ind{x.root}) % 2 != 0) e = -e;
    v.push_back({r.reflect(i, x.root), e});
  }
  u_.clear();
  const bool ascent = r.is_positive(w_.apply(i));
  if (c.is_zero()) {
    w_ = w_.times_simple(r, i);
    if (!ascent) mul_h(i, -f.one());
    mul_U(v);
    return;
  }
  if (ascent) throw GroupError("u factor outside the inversion set");
  // n_w E_i(c) n_i = n_{w s_i} E_{-i}(e) h_i(-1) with e = eta_ii c
  Scalar e = c;
  if (g_.eta(i, i) < 0) e = -e;
  w_ = w_.times_simple(r, i);
  const Scalar inv = e.inverse();
  mul_U({{i, -inv}});
  mul_h(i, inv);
  mul_n(i);
  mul_U({{i, -inv}});
  mul_h(i, -f.one());
  mul_U(v);
}

void BruhatBuilder::mul_E(int root, const Scalar& t) {
  if (t.is_zero()) return;
  const RootDatum& r = g_.datum();
  if (r.is_positive(root)) {
    mul_U({{root, t}});
    return;
  }
  const int d = r.negative(root);
  if (r.is_simple(d)) {
    // E_{-a}(s) = E_a(-1/s) h_a(1/s) n_a E_a(-1/s)
    const Scalar inv = t.inverse();
    mul_U({{d, -inv}});
    mul_h(d, inv);
    mul_n(d);
    mul_U({{d, -inv}});
    return;
  }
  int j = 0;
  while (r.pairing(r.root(d), j) <= 0) ++j;
  const int dprime = r.reflect(j, d);
  const int neg = r.negative(dprime);
  // E_{-d}(s) = n_j E_{-d'}(eta s) n_j^{-1}, n_j^{-1} = h_j(-1) n_j
  Scalar s = t;
  if (g_.eta(j, neg) < 0) s = -s;
  mul_n(j);
  mul_E(neg, s);
  mul_h(j, -g_.field().one());
  mul_n(j);
}

void BruhatBuilder::mul_atom(const WordAtom& a) {
  switch (a.kind) {
    case WordAtom::Kind::E:
      mul_E(a.root, a.t);
      break;
    case WordAtom::Kind::h:
      if (a.t.is_zero()) throw GroupError("h_X(t) needs t != 0");
      mul_h(a.root, a.t);
      break;
    case WordAtom::Kind::n:
      if (a.t.is_zero()) throw GroupError("n_X(t) needs t != 0");
      mul_E(a.root, a.t);
      mul_E(g_.datum().negative(a.root), a.t.inverse());
      mul_E(a.root, a.t);
      break;
  }
}

void BruhatBuilder::mul_form(const BruhatForm& f) {
  mul_U(f.u_prime);
  mul_torus(f.torus);
  for (int i : f.weyl_word) mul_n(i);
  mul_U(f.u_minus);
}

BruhatForm BruhatBuilder::form() const {
  return BruhatForm{up_, chi_, w_.reduced_word(g_.datum()), u_};
}

Matrix torus_matrix(const Group& g, const std::vector<Scalar>& chi) {
  const RootDatum& r = g.datum();
  Matrix m = g.identity();
  for (int k = 0; k < r.num_roots(); ++k) {
    Scalar v = g.field().one();
    for (int j = 0; j < r.rank(); ++j)
      if (r.root(k)[j] != 0) v *= chi[j].pow(r.root(k)[j]);
    const int idx = g.lie().u_index(k);
    m(idx, idx) = v;
  }
  return m;
}

Matrix weyl_matrix(const Group& g, const std::vector<int>& word) {
  Matrix m = g.identity();
  for (int i : word) m = m * g.n(i, g.field().one());
  return m;
}

Matrix reassemble(const Group& g, const BruhatForm& f) {
  return g.u_word(f.u_prime) * torus_matrix(g, f.torus) * weyl_matrix(g, f.weyl_word) * g.u_word(f.u_minus);
}

bool u_minus_supported(const Group& g, const BruhatForm& f) {
  const WeylElement w = WeylElement::from_word(g.datum(), f.weyl_word);
  for (std::size_t k = 0; k < f.u_minus.size(); ++k) {
    const int root = f.u_minus[k].root;
    if (!g.datum().is_positive(root) || g.datum().is_positive(w.apply(root))) return false;
    if (k > 0 && f.u_minus[k - 1].root >= root) return false;
  }
  return true;
}

namespace {

BruhatForm divide(const Group& g, const Word& w, std::size_t lo, std::size_t hi, std::mt19937_64* rng) {
  if (hi - lo <= 2) {
    BruhatBuilder b(g, rng);
    for (std::size_t k = lo; k < hi; ++k) b.mul_atom(w[k]);
    return b.form();
  }
  const std::size_t mid = lo + 1 + (rng ? (*rng)() % (hi - lo - 1) : (hi - lo) / 2 - 1);
  const BruhatForm left = divide(g, w, lo, mid, rng);
  const BruhatForm right = divide(g, w, mid, hi, rng);
  BruhatBuilder b(g, left, rng);
  b.mul_form(right);
  return b.form();
}

}  // namespace

BruhatForm bruhat(const Group& g, const Word& w, BruhatStrategy strategy, std::mt19937_64* rng, bool certify) {
  BruhatForm f;
  if (strategy == BruhatStrategy::sequential) {
    BruhatBuilder b(g, rng);
    for (const auto& a : w) b.mul_atom(a);
    f = b.form();
  } else {
    f = divide(g, w, 0, w.size(), rng);
  }
  if (certify && reassemble(g, f) != g.word(w)) throw GroupError("Bruhat normal form does not reassemble to the input");
  return f;
}

bool parabolic_membership(const Group& g, const Word& w, const std::vector<int>& J) {
  const BruhatForm f = bruhat(g, w);
  return std::all_of(f.weyl_word.begin(), f.weyl_word.end(),
                     [&](int i) { return std::find(J.begin(), J.end(), i) != J.end(); });
}

Word random_word(const Group& g, std::size_t length, std::mt19937_64& rng) {
  Word w;
  const int nr = g.datum().num_roots();
  for (std::size_t k = 0; k < length; ++k) {
    WordAtom a;
    const auto kind = rng() % 6;
    a.kind = kind < 4 ? WordAtom::Kind::E : kind == 4 ? WordAtom::Kind::h : WordAtom::Kind::n;
    a.root = static_cast<int>(rng() % nr);
    a.t = random_scalar(g.field(), rng, a.kind != WordAtom::Kind::E);
    w.push_back(a);
  }
  return w;
}

}  // namespace chev
