#include "chevalley/root_data.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace chev {

namespace {

// Symmetric Gram matrix (alpha_i, alpha_j) of the simple roots, Bourbaki labels.
std::vector<std::vector<int>> gram_for(char letter, int n) {
  std::vector<std::vector<int>> b(n, std::vector<int>(n, 0));
  auto link = [&](int i, int j, int v) { b[i - 1][j - 1] = b[j - 1][i - 1] = v; };
  auto chain = [&](int from, int to) {
    for (int i = from; i < to; ++i) link(i, i + 1, -1);
  };
  for (int i = 0; i < n; ++i) b[i][i] = 2;
  switch (letter) {
    case 'A':
      chain(1, n);
      break;
    case 'B':  // alpha_n short
      for (int i = 0; i < n - 1; ++i) b[i][i] = 4;
      for (int i = 1; i < n; ++i) link(i, i + 1, -2);
      break;
    case 'C':  // alpha_n long
      chain(1, n - 1);
      b[n - 1][n - 1] = 4;
      link(n - 1, n, -2);
      break;
    case 'D':
      chain(1, n - 1);
      link(n - 2, n, -1);
      break;
    case 'E':
      link(1, 3, -1);
      link(3, 4, -1);
      link(2, 4, -1);
      chain(4, n);
      break;
    case 'F':
      b[0][0] = b[1][1] = 4;
      link(1, 2, -2);
      link(2, 3, -2);
      link(3, 4, -1);
      break;
    case 'G':
      b[1][1] = 6;
      link(1, 2, -3);
      break;
    default:
      throw RootDataError("unknown type letter");
  }
  return b;
}

std::pair<char, int> split_type(std::string_view name) {
  if (name.size() < 2) throw RootDataError("unknown type: " + std::string(name));
  const char letter = name[0];
  int n = 0;
  for (char c : name.substr(1)) {
    if (c < '0' || c > '9') throw RootDataError("unknown type: " + std::string(name));
    n = n * 10 + (c - '0');
  }
  bool ok = false;
  switch (letter) {
    case 'A':
      ok = n >= 1 && n <= 12;
      break;
    case 'B':
      ok = n >= 2 && n <= 12;
      break;
    case 'C':
      ok = n >= 2 && n <= 12;
      break;
    case 'D':
      ok = n >= 4 && n <= 12;
      break;
    case 'E':
      ok = n >= 6 && n <= 8;
      break;
    case 'F':
      ok = n == 4;
      break;
    case 'G':
      ok = n == 2;
      break;
    default:
      break;
  }
  if (!ok) throw RootDataError("unknown type: " + std::string(name));
  return {letter, n};
}

bool acyclic(int n, const std::vector<std::pair<int, int>>& arrows) {
  std::vector<int> indeg(n, 0);
  for (auto [t, h] : arrows) ++indeg[h];
  std::vector<int> stack;
  for (int v = 0; v < n; ++v)
    if (indeg[v] == 0) stack.push_back(v);
  int seen = 0;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    ++seen;
    for (auto [t, h] : arrows)
      if (t == v && --indeg[h] == 0) stack.push_back(h);
  }
  return seen == n;
}

// Cartan classification by rank, number of positive roots and long simple roots.
std::string classify(const IntMatrix& cartan, const std::vector<int>& d, int positive_roots) {
  const int n = static_cast<int>(cartan.rows());
  const int dmax = *std::max_element(d.begin(), d.end());
  const int nlong = static_cast<int>(std::count(d.begin(), d.end(), dmax));
  const std::string rank = std::to_string(n);
  if (dmax == 1) {
    if (positive_roots == n * (n + 1) / 2) return "A" + rank;
    if (n >= 4 && positive_roots == n * (n - 1)) return "D" + rank;
    if (n >= 6 && n <= 8) return "E" + rank;
  } else if (dmax == 3) {
    return "G2";
  } else if (n == 4 && positive_roots == 24) {
    return "F4";
  } else if (positive_roots == n * n) {
    if (n == 2) return "B2";
    return nlong == 1 ? "C" + rank : "B" + rank;
  }
  throw RootDataError("Cartan matrix is not of finite type");
}

}  // namespace

// ---------------------------------------------------------------- Orientation

bool Orientation::is_sink(int v) const {
  for (auto [t, h] : arrows)
    if (t == v) return false;
  return true;
}

bool Orientation::is_source(int v) const {
  for (auto [t, h] : arrows)
    if (h == v) return false;
  return true;
}

Orientation Orientation::reversed_at(int v) const {
  Orientation o = *this;
  for (auto& a : o.arrows)
    if (a.first == v || a.second == v) std::swap(a.first, a.second);
  return o;
}

std::string Orientation::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < arrows.size(); ++i)
    os << (i ? "," : "") << arrows[i].first + 1 << '>' << arrows[i].second + 1;
  return os.str();
}

Orientation parse_orientation(std::string_view spec, int rank, const std::vector<std::pair<int, int>>& edges) {
  Orientation o;
  if (spec.empty() || spec == "default") {
    for (auto [i, j] : edges) o.arrows.emplace_back(i, j);
    return o;
  }
  std::set<std::pair<int, int>> remaining(edges.begin(), edges.end());
  std::string s(spec);
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto gt = item.find('>');
    if (gt == std::string::npos) throw RootDataError("malformed orientation edge: " + item);
    int t = 0, h = 0;
    try {
      t = std::stoi(item.substr(0, gt)) - 1;
      h = std::stoi(item.substr(gt + 1)) - 1;
    } catch (const std::exception&) {
      throw RootDataError("malformed orientation edge: " + item);
    }
    if (t < 0 || h < 0 || t >= rank || h >= rank) throw RootDataError("orientation vertex out of range: " + item);
    const auto key = std::minmax(t, h);
    if (!remaining.erase({key.first, key.second}))
      throw RootDataError("orientation edge not in diagram or repeated: " + item);
    o.arrows.emplace_back(t, h);
  }
  if (!remaining.empty()) throw RootDataError("orientation does not cover every diagram edge");
  if (!acyclic(rank, o.arrows)) throw RootDataError("cyclic orientation");
  std::sort(o.arrows.begin(), o.arrows.end(), [](auto a, auto b) { return std::minmax(a.first, a.second) < std::minmax(b.first, b.second); });
  return o;
}

// ---------------------------------------------------------------- RootDatum

int RootDatum::index_of(const RootVec& v) const {
  const auto it = index_.find(v);
  return it == index_.end() ? -1 : it->second;
}

bool RootDatum::simply_laced() const {
  return std::all_of(d_.begin(), d_.end(), [&](int x) { return x == d_[0]; });
}

long RootDatum::inner(const RootVec& a, const RootVec& b) const {
  long s = 0;
  for (int i = 0; i < rank_; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < rank_; ++j) s += static_cast<long>(a[i]) * d_[i] * cartan_(i, j) * b[j];
  }
  return s;
}

int RootDatum::pairing(const RootVec& beta, int i) const {
  int s = 0;
  for (int j = 0; j < rank_; ++j) s += static_cast<int>(cartan_(i, j)) * beta[j];
  return s;
}

RootVec RootDatum::coroot(int k) const {
  const RootVec& a = roots_.at(k);
  const int dk = root_d(k);
  RootVec c(rank_);
  for (int j = 0; j < rank_; ++j) c[j] = a[j] * d_[j] / dk;
  return c;
}

RootVec RootDatum::reflect_vec(int i, const RootVec& v) const {
  RootVec r = v;
  r[i] -= pairing(v, i);
  return r;
}

RootDatum RootDatum::with_orientation(const Orientation& o) const {
  RootDatum r = *this;
  r.orientation_ = o;
  return r;
}

void RootDatum::finish() {
  rank_ = static_cast<int>(cartan_.rows());
  edges_.clear();
  for (int i = 0; i < rank_; ++i) {
    if (cartan_(i, i) != 2) throw RootDataError("Cartan diagonal must be 2");
    for (int j = i + 1; j < rank_; ++j) {
      if (cartan_(i, j) > 0 || cartan_(j, i) > 0) throw RootDataError("positive off-diagonal Cartan entry");
      if ((cartan_(i, j) == 0) != (cartan_(j, i) == 0)) throw RootDataError("Cartan matrix not symmetrizable");
      if (static_cast<long>(d_[i]) * cartan_(i, j) != static_cast<long>(d_[j]) * cartan_(j, i))
        throw RootDataError("diag(d) * cartan is not symmetric");
      if (cartan_(i, j) != 0) edges_.emplace_back(i, j);
    }
  }

  // Close the simple roots under all simple reflections.
  std::set<RootVec> seen;
  std::vector<RootVec> frontier;
  for (int i = 0; i < rank_; ++i) {
    RootVec e(rank_, 0);
    e[i] = 1;
    seen.insert(e);
    frontier.push_back(e);
  }
  while (!frontier.empty()) {
    std::vector<RootVec> next;
    for (const auto& v : frontier)
      for (int i = 0; i < rank_; ++i) {
        RootVec w = reflect_vec(i, v);
        if (seen.insert(w).second) next.push_back(std::move(w));
      }
    frontier = std::move(next);
    if (seen.size() > 4000) throw RootDataError("Cartan matrix is not of finite type");
  }
  std::vector<RootVec> positive;
  for (const auto& v : seen) {
    const bool pos = std::all_of(v.begin(), v.end(), [](int x) { return x >= 0; });
    const bool neg = std::all_of(v.begin(), v.end(), [](int x) { return x <= 0; });
    if (!pos && !neg) throw RootDataError("root with mixed-sign coordinates");
    if (pos) positive.push_back(v);
  }
  auto height_of = [](const RootVec& v) { return std::accumulate(v.begin(), v.end(), 0); };
  // Canonical order: ascending height, then descending lexicographic (alpha_1 before alpha_2).
  std::sort(positive.begin(), positive.end(), [&](const RootVec& a, const RootVec& b) {
    const int ha = height_of(a), hb = height_of(b);
    if (ha != hb) return ha < hb;
    return a > b;
  });
  roots_ = positive;
  for (const auto& v : positive) {
    RootVec n = v;
    for (auto& x : n) x = -x;
    roots_.push_back(std::move(n));
  }
  const int nr = num_roots();
  heights_.resize(nr);
  for (int k = 0; k < nr; ++k) heights_[k] = height_of(roots_[k]);

  index_.clear();
  for (int k = 0; k < nr; ++k) index_[roots_[k]] = k;
  const auto& index = index_;
  sum_table_.assign(nr * nr, -1);
  inner_table_.assign(nr * nr, 0);
  for (int a = 0; a < nr; ++a)
    for (int b = 0; b < nr; ++b) {
      RootVec s(rank_);
      for (int i = 0; i < rank_; ++i) s[i] = roots_[a][i] + roots_[b][i];
      auto it = index.find(s);
      if (it != index.end()) sum_table_[a * nr + b] = it->second;
      inner_table_[a * nr + b] = inner(roots_[a], roots_[b]);
    }
  reflection_table_.assign(rank_ * nr, -1);
  for (int i = 0; i < rank_; ++i)
    for (int k = 0; k < nr; ++k) reflection_table_[i * nr + k] = index.at(reflect_vec(i, roots_[k]));

  if (orientation_.arrows.empty() && !edges_.empty())
    for (auto [i, j] : edges_) orientation_.arrows.emplace_back(i, j);
}

RootDatum make_root_datum(std::string type_name, const IntMatrix& cartan, std::vector<int> d,
                          Orientation orientation) {
  if (cartan.rows() != cartan.cols() || cartan.rows() != d.size() || d.empty())
    throw RootDataError("Cartan matrix and symmetrizer shapes disagree");
  for (int x : d)
    if (x <= 0) throw RootDataError("symmetrizers must be positive");
  RootDatum r;
  r.type_name_ = std::move(type_name);
  r.cartan_ = cartan;
  r.d_ = std::move(d);
  r.orientation_ = std::move(orientation);
  r.finish();
  if (!acyclic(r.rank_, r.orientation_.arrows)) throw RootDataError("cyclic orientation");
  return r;
}

RootDatum build_root_datum(std::string_view type_name, std::string_view orientation) {
  const auto [letter, n] = split_type(type_name);
  const auto b = gram_for(letter, n);
  IntMatrix cartan(n, n);
  std::vector<int> d(n);
  for (int i = 0; i < n; ++i) {
    d[i] = b[i][i] / 2;
    for (int j = 0; j < n; ++j) cartan(i, j) = 2 * b[i][j] / b[i][i];
  }
  RootDatum r = make_root_datum(std::string(type_name), cartan, d, {});
  r.orientation_ = parse_orientation(orientation, r.rank_, r.edges_);
  return r;
}

RootDatum fold(const Quiver& quiver) {
  const int n = quiver.vertex_count;
  if (n <= 0) throw RootDataError("empty quiver");
  std::vector<int> vp = quiver.vertex_perm, ap = quiver.arrow_perm;
  if (vp.empty()) {
    vp.resize(n);
    std::iota(vp.begin(), vp.end(), 0);
  }
  if (ap.empty()) {
    ap.resize(quiver.arrows.size());
    std::iota(ap.begin(), ap.end(), 0);
  }
  if (static_cast<int>(vp.size()) != n || ap.size() != quiver.arrows.size())
    throw RootDataError("automorphism has the wrong size");
  {
    std::vector<int> s = vp;
    std::sort(s.begin(), s.end());
    for (int i = 0; i < n; ++i)
      if (s[i] != i) throw RootDataError("vertex map is not a permutation");
  }
  for (std::size_t a = 0; a < quiver.arrows.size(); ++a) {
    const auto [t, h] = quiver.arrows[a];
    const auto [t2, h2] = quiver.arrows.at(ap[a]);
    if (vp[t] != t2 || vp[h] != h2) throw RootDataError("automorphism does not preserve arrow incidence");
  }

  // Underlying simply-laced Cartan matrix must be Dynkin.
  IntMatrix c(n, n);
  for (int i = 0; i < n; ++i) c(i, i) = 2;
  for (auto [t, h] : quiver.arrows) {
    if (t == h) throw RootDataError("loops are not allowed");
    c(t, h) -= 1;
    c(h, t) -= 1;
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && c(i, j) < -1) throw RootDataError("multiple arrows: not an ADE quiver");
  const RootDatum ade = make_root_datum("ADE", c, std::vector<int>(n, 1), Orientation{quiver.arrows});
  classify(ade.cartan(), ade.symmetrizer(), ade.num_positive());

  // Vertex orbits, labelled by their smallest member.
  std::vector<int> orbit_of(n, -1);
  std::vector<std::vector<int>> orbits;
  for (int v = 0; v < n; ++v) {
    if (orbit_of[v] >= 0) continue;
    std::vector<int> orb;
    int x = v;
    do {
      orbit_of[x] = static_cast<int>(orbits.size());
      orb.push_back(x);
      x = vp[x];
    } while (x != v);
    orbits.push_back(orb);
  }
  const int m = static_cast<int>(orbits.size());
  for (auto [t, h] : quiver.arrows)
    if (orbit_of[t] == orbit_of[h]) throw RootDataError("non-admissible automorphism: arrow inside an orbit");

  // Arrow orbits and their sizes m_alpha.
  std::vector<int> arrow_orbit(quiver.arrows.size(), -1);
  std::vector<int> arrow_orbit_size;
  std::vector<std::pair<int, int>> folded_arrows;
  for (std::size_t a = 0; a < quiver.arrows.size(); ++a) {
    if (arrow_orbit[a] >= 0) continue;
    int size = 0;
    std::size_t x = a;
    do {
      arrow_orbit[x] = static_cast<int>(arrow_orbit_size.size());
      ++size;
      x = static_cast<std::size_t>(ap[x]);
    } while (x != a);
    arrow_orbit_size.push_back(size);
    folded_arrows.emplace_back(orbit_of[quiver.arrows[a].first], orbit_of[quiver.arrows[a].second]);
  }

  std::vector<int> d(m);
  for (int i = 0; i < m; ++i) d[i] = static_cast<int>(orbits[i].size());
  IntMatrix cartan(m, m);
  for (int i = 0; i < m; ++i) cartan(i, i) = 2;
  for (std::size_t o = 0; o < folded_arrows.size(); ++o) {
    const auto [i, j] = folded_arrows[o];
    const int mv = arrow_orbit_size[o];
    if (mv % d[i] != 0 || mv % d[j] != 0) throw RootDataError("valuation is not a common multiple of d");
    cartan(i, j) -= mv / d[i];
    cartan(j, i) -= mv / d[j];
  }
  RootDatum probe = make_root_datum("folded", cartan, d, Orientation{folded_arrows});
  const std::string name = classify(cartan, d, probe.num_positive());
  return make_root_datum(name, cartan, d, Orientation{folded_arrows});
}

std::vector<std::string> supported_types() {
  return {"A1", "A2", "A3", "A4", "A5", "A6", "A7", "A8", "B2", "B3", "B4", "C3",
          "C4", "D4", "D5", "E6", "E7", "E8", "F4", "G2"};
}

// ---------------------------------------------------------------- order formula

std::vector<int> height_histogram(const RootDatum& datum) {
  std::vector<int> k;
  for (int a = 0; a < datum.num_positive(); ++a) {
    const int h = datum.height(a);
    if (static_cast<int>(k.size()) < h) k.resize(h, 0);
    ++k[h - 1];
  }
  return k;
}

std::vector<int> exponents(const RootDatum& datum) {
  const auto k = height_histogram(datum);
  std::vector<int> x;
  for (int j = 1; j <= datum.rank(); ++j)
    x.push_back(static_cast<int>(std::count_if(k.begin(), k.end(), [j](int v) { return v >= j; })));
  std::sort(x.begin(), x.end());
  return x;
}

std::vector<std::int64_t> elementary_divisors(const IntMatrix& input) {
  IntMatrix a = input;
  const std::size_t rows = a.rows(), cols = a.cols();
  std::vector<std::int64_t> diag;
  std::size_t t = 0;
  while (t < rows && t < cols) {
    // pivot: smallest nonzero absolute value in the remaining block
    std::size_t pi = rows, pj = cols;
    std::int64_t best = 0;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (a(i, j) != 0 && (best == 0 || std::llabs(a(i, j)) < best)) {
          best = std::llabs(a(i, j));
          pi = i;
          pj = j;
        }
    if (best == 0) break;
    for (std::size_t j = 0; j < cols; ++j) std::swap(a(t, j), a(pi, j));
    for (std::size_t i = 0; i < rows; ++i) std::swap(a(i, t), a(i, pj));
    bool clean = true;
    for (std::size_t i = t + 1; i < rows; ++i) {
      const std::int64_t f = a(i, t) / a(t, t);
      for (std::size_t j = t; j < cols; ++j) a(i, j) -= f * a(t, j);
      if (a(i, t) != 0) clean = false;
    }
    for (std::size_t j = t + 1; j < cols; ++j) {
      const std::int64_t f = a(t, j) / a(t, t);
      for (std::size_t i = t; i < rows; ++i) a(i, j) -= f * a(i, t);
      if (a(t, j) != 0) clean = false;
    }
    if (!clean) continue;
    // divisibility: fold any offending entry into the pivot row
    bool divides = true;
    for (std::size_t i = t + 1; i < rows && divides; ++i)
      for (std::size_t j = t + 1; j < cols; ++j)
        if (a(i, j) % a(t, t) != 0) {
          for (std::size_t jj = t; jj < cols; ++jj) a(t, jj) += a(i, jj);
          divides = false;
          break;
        }
    if (!divides) continue;
    diag.push_back(std::llabs(a(t, t)));
    ++t;
  }
  return diag;
}

std::int64_t cartan_divisor(const RootDatum& datum, std::uint64_t q) {
  if (q < 2) throw RootDataError("q must be at least 2");
  std::int64_t d = 1;
  for (auto e : elementary_divisors(datum.cartan()))
    d *= std::gcd(e, static_cast<std::int64_t>(q - 1));
  return d;
}

mpz_class predicted_order(const RootDatum& datum, std::uint64_t q) {
  if (q < 2) throw RootDataError("q must be at least 2");
  const mpz_class qq(static_cast<unsigned long>(q));
  mpz_class total;
  mpz_pow_ui(total.get_mpz_t(), qq.get_mpz_t(), static_cast<unsigned long>(datum.num_positive()));
  for (int x : exponents(datum)) {
    mpz_class t;
    mpz_pow_ui(t.get_mpz_t(), qq.get_mpz_t(), static_cast<unsigned long>(x + 1));
    total *= t - 1;
  }
  const mpz_class d(static_cast<long>(cartan_divisor(datum, q)));
  if (total % d != 0) throw RootDataError("order formula is not integral");
  return total / d;
}

std::string root_label(const RootDatum& datum, int root) {
  std::ostringstream os;
  const RootVec& v = datum.root(root);
  bool first = true;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    const int c = v[i];
    if (c < 0)
      os << '-';
    else if (!first)
      os << '+';
    if (std::abs(c) != 1) os << std::abs(c);
    os << 'a' << i + 1;
    first = false;
  }
  return os.str();
}


int parse_root(const RootDatum& datum, std::string_view text) {
  RootVec v(datum.rank(), 0);
  std::size_t pos = 0;
  auto fail = [&]() { throw RootDataError("cannot parse root '" + std::string(text) + "'"); };
  if (text.empty()) fail();
  while (pos < text.size()) {
    int sign = 1;
    if (text[pos] == '+' || text[pos] == '-') {
      sign = text[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (pos != 0) {
      fail();
    }
    int coeff = 0;
    bool has_coeff = false;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      coeff = coeff * 10 + (text[pos++] - '0');
      has_coeff = true;
    }
    if (!has_coeff) coeff = 1;
    if (text.substr(pos, 2) == "\xce\xb1") {
      pos += 2;  // UTF-8 alpha
    } else if (pos < text.size() && (text[pos] == 'a' || text[pos] == 'S')) {
      ++pos;
    } else {
      fail();
    }
    int i = 0;
    bool has_index = false;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      i = i * 10 + (text[pos++] - '0');
      has_index = true;
    }
    if (!has_index || i < 1 || i > datum.rank()) fail();
    v[i - 1] += sign * coeff;
  }
  const int k = datum.index_of(v);
  if (k < 0) throw RootDataError("'" + std::string(text) + "' is not a root of " + datum.type_name());
  return k;
}

}  // namespace chev
