#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "chevalley/bruhat.hpp"
#include "chevalley/enumerate.hpp"

using namespace chev;

namespace {

Group make_group(const std::string& type, std::uint64_t q) {
  auto datum = std::make_shared<const RootDatum>(build_root_datum(type));
  const Scheme s = datum->simply_laced() ? Scheme::euler_cocycle : Scheme::extraspecial;
  return Group(std::make_shared<const LieData>(datum, s), Field::finite(q));
}

/// Brute-force order of a subgroup of GL_n(F_q) from dense matrix products.
std::size_t dense_closure(const std::vector<Matrix>& gens) {
  std::vector<Matrix> seen{Matrix::identity(gens[0].field(), gens[0].rows())};
  for (std::size_t i = 0; i < seen.size(); ++i)
    for (const auto& s : gens) {
      const Matrix y = seen[i] * s;
      if (std::find(seen.begin(), seen.end(), y) == seen.end()) seen.push_back(y);
    }
  return seen.size();
}

}  // namespace

TEST_CASE("enumeration of small groups") {
  for (const auto& [type, q, order] : std::vector<std::tuple<std::string, int, std::size_t>>{
           {"A1", 2, 6}, {"A1", 3, 12}, {"A2", 2, 168}, {"B2", 2, 720}}) {
    CAPTURE(type);
    CAPTURE(q);
    const Group g = make_group(type, q);
    const EnumeratedGroup G(g);
    CHECK(G.size() == order);
    CHECK(order_reconciliation(g.datum(), q, G.size()).equal);
    if (order <= 200) {
      std::vector<Matrix> gens;
      for (int k = 0; k < G.num_generators(); ++k) gens.push_back(g.atom(G.generator(k)));
      CHECK(dense_closure(gens) == order);
    }
  }
}

TEST_CASE("enumerated group arithmetic") {
  const Group g = make_group("A2", 2);
  const EnumeratedGroup G(g);
  for (int x = 0; x < int(G.size()); x += 7) {
    CHECK(G.matrix(x) == g.word(G.word(x)));
    CHECK(G.mul(x, G.inverse(x)) == 0);
    for (int y = 0; y < int(G.size()); y += 11) CHECK(G.matrix(G.mul(x, y)) == G.matrix(x) * G.matrix(y));
  }
  CHECK(G.find(g.E(0, g.field().one())) >= 0);
}

TEST_CASE("guard refuses large groups") {
  const Group g = make_group("A3", 3);
  CHECK_THROWS_AS(EnumeratedGroup{g}, GroupError);
}

TEST_CASE("structure of small groups") {
  SUBCASE("A2(2) is simple") {
    const EnumeratedGroup G(make_group("A2", 2));
    const auto s = structure_checks(G);
    CHECK(s.simple);
    CHECK(s.derived_is_whole);
    CHECK(s.center_trivial);
    CHECK(s.classes == 6);
  }
  SUBCASE("A1(2) is S3") {
    const EnumeratedGroup G(make_group("A1", 2));
    const auto s = structure_checks(G);
    CHECK_FALSE(s.simple);
    CHECK(s.derived_order == 3);
    CHECK(s.center_trivial);
    CHECK(s.classes == 3);
  }
  SUBCASE("B2(2) is S6") {
    const EnumeratedGroup G(make_group("B2", 2));
    const auto s = structure_checks(G);
    CHECK_FALSE(s.simple);
    CHECK(s.derived_order == 360);
    CHECK(s.center_trivial);
    CHECK(s.classes == 11);
  }
}

TEST_CASE("BN-pair counts on enumerated groups") {
  for (const auto& [type, q] : std::vector<std::pair<std::string, int>>{{"A1", 3}, {"A2", 2}, {"B2", 2}}) {
    CAPTURE(type);
    const Group g = make_group(type, q);
    const EnumeratedGroup G(g);
    const auto u = unipotent_intersection(G);
    CHECK(u.intersection == 1);
    CHECK(u.u_order == static_cast<std::size_t>(std::pow(q, g.datum().num_positive())));
    CHECK(u.v_order == u.u_order);
    const auto n = weyl_quotient(G);
    CHECK(n.n_order == n.h_order * n.weyl_order);
  }
}

TEST_CASE("Bruhat cells and parabolics on A2(2)") {
  const Group g = make_group("A2", 2);
  const EnumeratedGroup G(g);
  const auto cells = bruhat_cells(G);
  CHECK(cells.borel_order == 8);
  CHECK(cells.cells.size() == 6);
  CHECK(cells.sizes_match);
  for (const auto& J : std::vector<std::vector<int>>{{}, {0}, {1}, {0, 1}}) {
    const auto p = parabolic_count(G, J);
    CHECK(p.members == p.expected);
  }
  CHECK(parabolic_count(G, {0}).members == 24);
}
