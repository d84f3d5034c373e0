#include "chevalley/enumerate.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

#include "chevalley/bruhat.hpp"
#include "chevalley/weyl.hpp"

namespace chev {

EnumeratedGroup::EnumeratedGroup(const Group& g, std::size_t guard) : g_(g) {
  const Field& f = g.field();
  if (!f.is_finite() || f.order() > 256) throw GroupError("enumeration needs a finite field with q <= 256");
  const mpz_class predicted = predicted_order(g.datum(), f.order());
  if (predicted > guard)
    throw GroupError("predicted order " + predicted.get_str() + " exceeds the enumeration guard of " +
                     std::to_string(guard));
  q_ = static_cast<std::uint32_t>(f.order());
  n_ = g.dim();
  n2_ = n_ * n_;
  add_.resize(q_ * q_);
  mul_.resize(q_ * q_);
  for (std::uint32_t a = 0; a < q_; ++a)
    for (std::uint32_t b = 0; b < q_; ++b) {
      add_[a * q_ + b] = static_cast<std::uint8_t>(f.add_code(a, b));
      mul_[a * q_ + b] = static_cast<std::uint8_t>(f.mul_code(a, b));
    }

  const auto units = f.units();
  const RootDatum& r = g.datum();
  for (int i = 0; i < r.rank(); ++i)
    for (int root : {i, r.negative(i)})
      for (const auto& t : units) gens_.push_back({WordAtom::Kind::E, root, t});
  for (std::size_t k = 0; k < gens_.size(); ++k) {
    const Matrix m = g.atom(gens_[k]);
    std::vector<Entry> s;
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j)
        if (!m(i, j).is_zero()) s.push_back({int(i), int(j), std::uint8_t(m(i, j).code())});
    sparse_.push_back(std::move(s));
    for (std::size_t k2 = 0; k2 < gens_.size(); ++k2)
      if (gens_[k2].root == gens_[k].root && gens_[k2].t == -gens_[k].t) gen_inv_.push_back(int(k2));
  }

  const auto id = g.identity().packed();
  data_.assign(id.begin(), id.end());
  index_.emplace(key(0), 0);
  parent_.push_back({-1, -1});
  const std::size_t G = gens_.size();
  for (std::size_t x = 0; x < parent_.size(); ++x) {
    for (std::size_t k = 0; k < G; ++k) {
      std::string y = apply_sparse(data_.data() + x * n2_, int(k), true);
      auto [it, fresh] = index_.emplace(std::move(y), int(parent_.size()));
      if (fresh) {
        if (parent_.size() >= guard) throw GroupError("enumeration exceeded the guard");
        data_ += it->first;
        parent_.push_back({int(x), int(k)});
      }
      right_.push_back(it->second);
    }
  }
  left_.resize(right_.size());
  for (std::size_t x = 0; x < parent_.size(); ++x)
    for (std::size_t k = 0; k < G; ++k) left_[x * G + k] = lookup(apply_sparse(data_.data() + x * n2_, int(k), false));
}

std::string EnumeratedGroup::apply_sparse(const char* x, int k, bool on_right) const {
  std::string out(n2_, '\0');
  auto* o = reinterpret_cast<std::uint8_t*>(out.data());
  const auto* a = reinterpret_cast<const std::uint8_t*>(x);
  for (const auto& e : sparse_[k]) {
    if (on_right) {
      // (x s)[i][col] += x[i][row] s[row][col]
      for (std::size_t i = 0; i < n_; ++i) {
        const std::uint8_t v = a[i * n_ + e.row];
        if (v) o[i * n_ + e.col] = add_[o[i * n_ + e.col] * q_ + mul_[v * q_ + e.v]];
      }
    } else {
      for (std::size_t j = 0; j < n_; ++j) {
        const std::uint8_t v = a[e.col * n_ + j];
        if (v) o[e.row * n_ + j] = add_[o[e.row * n_ + j] * q_ + mul_[e.v * q_ + v]];
      }
    }
  }
  return out;
}

int EnumeratedGroup::lookup(const std::string& k) const {
  auto it = index_.find(k);
  if (it == index_.end()) throw GroupError("product left the enumerated group");
  return it->second;
}

namespace {

std::vector<int> generator_path(const std::vector<std::pair<int, int>>& parent, int x) {
  std::vector<int> path;
  for (; parent[x].first >= 0; x = parent[x].first) path.push_back(parent[x].second);
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace

int EnumeratedGroup::mul(int a, int b) const {
  for (int k : generator_path(parent_, b)) a = right(a, k);
  return a;
}

int EnumeratedGroup::inverse(int x) const {
  const auto path = generator_path(parent_, x);
  int cur = 0;
  for (auto it = path.rbegin(); it != path.rend(); ++it) cur = right(cur, gen_inv_[*it]);
  return cur;
}

int EnumeratedGroup::order(int x) const {
  int k = 1;
  for (int y = x; y != 0; y = mul(y, x)) ++k;
  return k;
}

int EnumeratedGroup::find(const Matrix& m) const {
  const auto p = m.packed();
  auto it = index_.find(std::string(p.begin(), p.end()));
  return it == index_.end() ? -1 : it->second;
}

Matrix EnumeratedGroup::matrix(int x) const {
  Matrix m(g_.field(), n_, n_);
  for (std::size_t i = 0; i < n2_; ++i)
    m(i / n_, i % n_) = g_.field().from_code(static_cast<std::uint8_t>(data_[x * n2_ + i]));
  return m;
}

Word EnumeratedGroup::word(int x) const {
  Word w;
  for (int k : generator_path(parent_, x)) w.push_back(gens_[k]);
  return w;
}

Subgroup::Subgroup(const EnumeratedGroup& G) : G_(G), member_(G.size(), 0), elements_{0} { member_[0] = 1; }

void Subgroup::add(int x) {
  if (member_[x]) return;
  gens_.push_back(x);
  const std::size_t old = elements_.size();
  auto insert = [&](int y) {
    if (!member_[y]) {
      member_[y] = 1;
      elements_.push_back(y);
    }
  };
  for (std::size_t i = 0; i < old; ++i) insert(G_.mul(elements_[i], x));
  for (std::size_t i = old; i < elements_.size(); ++i)
    for (int s : gens_) insert(G_.mul(elements_[i], s));
}

Subgroup generated_subgroup(const EnumeratedGroup& G, const std::vector<int>& gens) {
  Subgroup H(G);
  for (int x : gens) H.add(x);
  return H;
}

Subgroup normal_closure(const EnumeratedGroup& G, const std::vector<int>& seeds) {
  Subgroup H = generated_subgroup(G, seeds);
  for (std::size_t i = 0; i < H.generators().size() && H.size() < G.size(); ++i) {
    const int s = H.generators()[i];
    for (int k = 0; k < G.num_generators() && H.size() < G.size(); ++k) H.add(G.conj(s, k));
  }
  return H;
}

std::vector<int> center(const EnumeratedGroup& G) {
  std::vector<int> z;
  for (int x = 0; x < int(G.size()); ++x) {
    bool central = true;
    for (int k = 0; k < G.num_generators() && central; ++k) central = G.left(x, k) == G.right(x, k);
    if (central) z.push_back(x);
  }
  return z;
}

std::vector<std::vector<int>> conjugacy_classes(const EnumeratedGroup& G) {
  std::vector<int> parent(G.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto root = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int x = 0; x < int(G.size()); ++x)
    for (int k = 0; k < G.num_generators(); ++k) {
      const int a = root(x), b = root(G.conj(x, k));
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  std::map<int, std::vector<int>> classes;
  for (int x = 0; x < int(G.size()); ++x) classes[root(x)].push_back(x);
  std::vector<std::vector<int>> out;
  for (auto& [_, c] : classes) out.push_back(std::move(c));
  return out;
}

StructureReport structure_checks(const EnumeratedGroup& G) {
  StructureReport rep;
  rep.order = G.size();
  std::vector<int> commutators;
  for (int a = 0; a < G.num_generators(); ++a)
    for (int b = 0; b < G.num_generators(); ++b) {
      // a^{-1} b^{-1} a b
      int x = G.right(0, G.generator_inverse(a));
      x = G.right(x, G.generator_inverse(b));
      x = G.right(G.right(x, a), b);
      commutators.push_back(x);
    }
  rep.derived_order = normal_closure(G, commutators).size();
  rep.derived_is_whole = rep.derived_order == G.size();
  rep.center_order = center(G).size();
  rep.center_trivial = rep.center_order == 1;
  const auto classes = conjugacy_classes(G);
  rep.classes = classes.size();
  rep.simple = G.size() > 1;
  for (const auto& c : classes) {
    if (!rep.simple) break;
    const int x = c.front();
    if (x == 0 || !is_prime(static_cast<std::uint64_t>(G.order(x)))) continue;
    if (normal_closure(G, {x}).size() != G.size()) rep.simple = false;
  }
  return rep;
}

namespace {

std::vector<int> root_elements(const EnumeratedGroup& G, bool positive) {
  const Group& g = G.group();
  std::vector<int> out;
  for (int x = 0; x < g.datum().num_roots(); ++x) {
    if (g.datum().is_positive(x) != positive) continue;
    for (const auto& t : g.field().units()) out.push_back(G.find(g.E(x, t)));
  }
  return out;
}

std::vector<int> torus_elements(const EnumeratedGroup& G) {
  const Group& g = G.group();
  std::vector<int> out;
  for (int i = 0; i < g.datum().rank(); ++i)
    for (const auto& t : g.field().units()) out.push_back(G.find(g.h(i, t)));
  return out;
}

std::size_t borel_order(const EnumeratedGroup& G) {
  auto gens = root_elements(G, true);
  const auto h = torus_elements(G);
  gens.insert(gens.end(), h.begin(), h.end());
  return generated_subgroup(G, gens).size();
}

mpz_class q_power_sum(const std::vector<WeylElement>& W, const RootDatum& r, std::uint64_t q,
                      const std::vector<int>* J = nullptr) {
  mpz_class s = 0;
  for (const auto& w : W) {
    const auto word = w.reduced_word(r);
    if (J && !std::all_of(word.begin(), word.end(),
                          [&](int i) { return std::find(J->begin(), J->end(), i) != J->end(); }))
      continue;
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), q, word.size());
    s += p;
  }
  return s;
}

}  // namespace

UnipotentReport unipotent_intersection(const EnumeratedGroup& G) {
  const Subgroup U = generated_subgroup(G, root_elements(G, true));
  const Subgroup V = generated_subgroup(G, root_elements(G, false));
  UnipotentReport rep{U.size(), V.size(), 0};
  for (int x : U.elements()) rep.intersection += V.contains(x);
  return rep;
}

WeylQuotientReport weyl_quotient(const EnumeratedGroup& G) {
  const Group& g = G.group();
  auto gens = torus_elements(G);
  WeylQuotientReport rep;
  rep.h_order = generated_subgroup(G, gens).size();
  for (int i = 0; i < g.datum().rank(); ++i) gens.push_back(G.find(g.n(i, g.field().one())));
  rep.n_order = generated_subgroup(G, gens).size();
  rep.weyl_order = enumerate_weyl(g.datum()).size();
  return rep;
}

CellReport bruhat_cells(const EnumeratedGroup& G) {
  const Group& g = G.group();
  CellReport rep;
  rep.borel_order = borel_order(G);
  std::map<std::vector<int>, std::size_t> counts;
  for (int x = 0; x < int(G.size()); ++x) ++counts[bruhat(g, G.word(x)).weyl_word];
  const auto W = enumerate_weyl(g.datum());
  rep.sizes_match = counts.size() == W.size();
  for (const auto& w : W) {
    const auto word = w.reduced_word(g.datum());
    mpz_class expect;
    mpz_ui_pow_ui(expect.get_mpz_t(), g.field().order(), word.size());
    expect *= static_cast<unsigned long>(rep.borel_order);
    const std::size_t got = counts.count(word) ? counts[word] : 0;
    if (expect != static_cast<unsigned long>(got)) rep.sizes_match = false;
  }
  rep.cells.assign(counts.begin(), counts.end());
  return rep;
}

ParabolicReport parabolic_count(const EnumeratedGroup& G, const std::vector<int>& J) {
  const Group& g = G.group();
  ParabolicReport rep;
  for (int x = 0; x < int(G.size()); ++x) rep.members += parabolic_membership(g, G.word(x), J);
  const mpz_class e = q_power_sum(enumerate_weyl(g.datum()), g.datum(), g.field().order(), &J) *
                      static_cast<unsigned long>(borel_order(G));
  rep.expected = e.get_ui();
  return rep;
}

mpz_class weyl_formula_order(const RootDatum& datum, std::uint64_t q) {
  mpz_class qr, qm;
  mpz_ui_pow_ui(qr.get_mpz_t(), q, datum.num_positive());
  mpz_ui_pow_ui(qm.get_mpz_t(), q - 1, datum.rank());
  const mpz_class total = qr * qm * q_power_sum(enumerate_weyl(datum), datum, q);
  const mpz_class d = static_cast<long>(cartan_divisor(datum, q));
  if (total % d != 0) throw GroupError("order formula is not divisible by d");
  return total / d;
}

OrderReport order_reconciliation(const RootDatum& datum, std::uint64_t q, std::size_t enumerated) {
  OrderReport rep;
  rep.predicted = predicted_order(datum, q);
  rep.formula = weyl_formula_order(datum, q);
  rep.enumerated = static_cast<unsigned long>(enumerated);
  rep.equal = rep.predicted == rep.formula && rep.formula == rep.enumerated;
  return rep;
}

}  // namespace chev
