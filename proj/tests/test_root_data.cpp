#include <doctest.h>

#include <map>
#include <numeric>

#include "chevalley/root_data.hpp"

using namespace chev;

namespace {

// Classical root counts |Phi| per type (Bourbaki tables).
int classical_root_count(const std::string& t) {
  const int n = std::stoi(t.substr(1));
  switch (t[0]) {
    case 'A': return n * (n + 1);
    case 'B':
    case 'C': return 2 * n * n;
    case 'D': return 2 * n * (n - 1);
    case 'E': return n == 6 ? 72 : n == 7 ? 126 : 240;
    case 'F': return 48;
    case 'G': return 12;
  }
  return -1;
}

// Classical exponents m_i (Bourbaki); the order formula uses x_i = m_i.
std::vector<int> classical_exponents(const std::string& t) {
  static const std::map<std::string, std::vector<int>> table = {
      {"A1", {1}},          {"A2", {1, 2}},          {"A3", {1, 2, 3}},        {"B2", {1, 3}},
      {"B3", {1, 3, 5}},    {"C3", {1, 3, 5}},       {"D4", {1, 3, 3, 5}},     {"G2", {1, 5}},
      {"F4", {1, 5, 7, 11}}, {"E6", {1, 4, 5, 7, 8, 11}}, {"E7", {1, 5, 7, 9, 11, 13, 17}},
      {"E8", {1, 7, 11, 13, 17, 19, 23, 29}}};
  return table.at(t);
}

}  // namespace

TEST_CASE("A2 datum") {
  const auto a2 = build_root_datum("A2");
  CHECK(a2.cartan()(0, 1) == -1);
  CHECK(a2.cartan()(1, 0) == -1);
  CHECK(a2.num_roots() == 6);
  CHECK(a2.root(0) == RootVec{1, 0});
  CHECK(a2.root(1) == RootVec{0, 1});
  CHECK(a2.root(2) == RootVec{1, 1});
  CHECK(a2.root(5) == RootVec{-1, -1});
}

TEST_CASE("root counts match classical tables") {
  for (const auto& t : supported_types()) {
    const auto r = build_root_datum(t);
    CAPTURE(t);
    CHECK(r.num_roots() == classical_root_count(t));
    for (int k = 0; k < r.num_roots(); ++k) {
      const auto& v = r.root(k);
      const bool pos = std::all_of(v.begin(), v.end(), [](int x) { return x >= 0; });
      const bool neg = std::all_of(v.begin(), v.end(), [](int x) { return x <= 0; });
      CHECK((pos || neg));
      CHECK(r.is_positive(k) == pos);
      CHECK((r.height(k) > 0) == pos);
    }
    // diag(d) * cartan symmetric
    for (int i = 0; i < r.rank(); ++i)
      for (int j = 0; j < r.rank(); ++j)
        CHECK(r.symmetrizer()[i] * r.cartan()(i, j) == r.symmetrizer()[j] * r.cartan()(j, i));
  }
}

TEST_CASE("G2 symmetrizers and long roots") {
  const auto g2 = build_root_datum("G2");
  CHECK(g2.symmetrizer() == std::vector<int>{1, 3});
  int longs = 0;
  for (int k = 0; k < g2.num_roots(); ++k) longs += g2.root_d(k) == 3;
  CHECK(longs == 6);
}

TEST_CASE("height histograms") {
  CHECK(height_histogram(build_root_datum("E6")) == std::vector<int>{6, 5, 5, 5, 4, 3, 3, 2, 1, 1, 1});
  CHECK(height_histogram(build_root_datum("F4")) == std::vector<int>{4, 3, 3, 3, 3, 2, 2, 1, 1, 1, 1});
  CHECK(height_histogram(build_root_datum("A2")) == std::vector<int>{2, 1});
  for (const auto& t : supported_types()) {
    const auto r = build_root_datum(t);
    const auto k = height_histogram(r);
    CHECK(k.front() == r.rank());
    CHECK(std::is_sorted(k.rbegin(), k.rend()));
    CHECK(std::accumulate(k.begin(), k.end(), 0) == r.num_positive());
    const auto x = exponents(r);
    CHECK(static_cast<int>(x.size()) == r.rank());
    CHECK(std::accumulate(x.begin(), x.end(), 0) == r.num_positive());
  }
}

TEST_CASE("exponents agree with classical exponent tables") {
  for (const std::string t : {"A1", "A2", "A3", "B2", "B3", "C3", "D4", "G2", "F4", "E6", "E7", "E8"}) {
    CAPTURE(t);
    CHECK(exponents(build_root_datum(t)) == classical_exponents(t));
  }
}

TEST_CASE("cartan divisor") {
  CHECK(cartan_divisor(build_root_datum("A2"), 2) == 1);
  CHECK(cartan_divisor(build_root_datum("A2"), 4) == 3);
  CHECK(cartan_divisor(build_root_datum("A1"), 3) == 2);
  CHECK(elementary_divisors(build_root_datum("A2").cartan()) == std::vector<std::int64_t>{1, 3});
}

TEST_CASE("cartan divisor equals brute-force torus count") {
  // count (t_1..t_m) in (Z/(q-1))^m with sum_i a_ij e_i = 0 mod q-1 (F_q^x is cyclic)
  for (const std::string t : {"A1", "A2", "A3", "B2", "G2", "D4"}) {
    const auto r = build_root_datum(t);
    for (std::uint64_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) {
      const int n = static_cast<int>(q - 1), m = r.rank();
      long count = 0;
      std::vector<int> e(m, 0);
      long total = 1;
      for (int i = 0; i < m; ++i) total *= n;
      for (long code = 0; code < total; ++code) {
        long c = code;
        for (int i = 0; i < m; ++i) {
          e[i] = static_cast<int>(c % n);
          c /= n;
        }
        bool ok = true;
        for (int j = 0; j < m && ok; ++j) {
          long s = 0;
          for (int i = 0; i < m; ++i) s += e[i] * r.cartan()(i, j);
          ok = ((s % n) + n) % n == 0;
        }
        count += ok;
      }
      CAPTURE(t);
      CAPTURE(q);
      CHECK(cartan_divisor(r, q) == count);
    }
  }
}

TEST_CASE("predicted order is integral for q up to 16") {
  for (const auto& t : supported_types())
    for (std::uint64_t q = 2; q <= 16; ++q) {
      if (prime_power_decomposition(q).first == 0) continue;
      CHECK_NOTHROW(predicted_order(build_root_datum(t), q));
    }
  CHECK(predicted_order(build_root_datum("A2"), 2) == 168);
  CHECK(predicted_order(build_root_datum("B2"), 2) == 720);
  CHECK(predicted_order(build_root_datum("A1"), 3) == 12);
}

TEST_CASE("fold") {
  SUBCASE("A3 end swap") {
    Quiver q{3, {{0, 1}, {2, 1}}, {2, 1, 0}, {1, 0}};
    const auto r = fold(q);
    CHECK(r.rank() == 2);
    CHECK(r.cartan()(0, 1) == -1);
    CHECK(r.cartan()(1, 0) == -2);
    CHECK(r.symmetrizer() == std::vector<int>{2, 1});
    CHECK(r.num_roots() == 8);
    CHECK(r.type_name() == "B2");
  }
  SUBCASE("D4 triality") {
    Quiver q{4, {{0, 1}, {2, 1}, {3, 1}}, {2, 1, 3, 0}, {1, 2, 0}};
    const auto r = fold(q);
    CHECK(r.type_name() == "G2");
    CHECK(r.num_roots() == 12);
    // direct G2 table up to relabeling
    const auto g2 = build_root_datum("G2");
    CHECK(r.cartan()(0, 1) == g2.cartan()(1, 0));
    CHECK(r.cartan()(1, 0) == g2.cartan()(0, 1));
  }
  SUBCASE("identity on A2") {
    Quiver q{2, {{0, 1}}, {}, {}};
    const auto r = fold(q);
    CHECK(r.type_name() == "A2");
    CHECK(r.cartan() == build_root_datum("A2").cartan());
  }
  SUBCASE("A3 central swap is not admissible or not a graph map") {
    Quiver bad{2, {{0, 1}}, {1, 0}, {0}};
    CHECK_THROWS_AS(fold(bad), RootDataError);
  }
}

TEST_CASE("orientation parsing") {
  const auto a3 = build_root_datum("A3", "2>1,2>3");
  CHECK(a3.orientation().is_source(1));
  CHECK(a3.orientation().is_sink(0));
  CHECK_THROWS_AS(build_root_datum("A3", "1>3"), RootDataError);
  CHECK_THROWS_AS(build_root_datum("A3", "1>2"), RootDataError);
  CHECK_THROWS_AS(build_root_datum("H3"), RootDataError);
  CHECK_THROWS_AS(build_root_datum("D3"), RootDataError);
  const IntMatrix cyc = [] {
    IntMatrix m(3, 3);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) m(i, j) = i == j ? 2 : -1;
    return m;
  }();
  CHECK_THROWS_AS(make_root_datum("A2~", cyc, {1, 1, 1}, Orientation{{{0, 1}, {1, 2}, {2, 0}}}), RootDataError);
}

TEST_CASE("reflection tables") {
  for (const auto& t : supported_types()) {
    const auto r = build_root_datum(t);
    for (int i = 0; i < r.rank(); ++i) {
      CHECK(r.reflect(i, i) == r.negative(i));
      for (int k = 0; k < r.num_roots(); ++k) CHECK(r.reflect(i, r.reflect(i, k)) == k);
    }
  }
}
