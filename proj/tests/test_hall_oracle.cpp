#include <doctest.h>

#include "chevalley/hall_oracle.hpp"
#include "chevalley/lie_algebra.hpp"

using namespace chev;

TEST_CASE("A2 projective and simples") {
  const auto a2 = build_root_datum("A2");
  const auto& o = a2.orientation();  // 1 -> 2
  const auto p1 = build_indecomposable(a2, o, {1, 1}, 3);
  CHECK(p1.dims == std::vector<int>{1, 1});
  CHECK_FALSE(p1.maps[0](0, 0).is_zero());
  const auto s1 = build_indecomposable(a2, o, {1, 0}, 3);
  const auto s2 = build_indecomposable(a2, o, {0, 1}, 3);
  CHECK(hom_dim(s1, s1) == 1);
  CHECK(hom_dim(s1, s2) == 0);
  CHECK(hom_dim(p1, p1) == 1);
  // S2 is a sub of P1, S1 a quotient
  CHECK(hom_dim(s2, p1) == 1);
  CHECK(hom_dim(p1, s1) == 1);
  CHECK(hom_dim(p1, s2) == 0);
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    const auto l = build_indecomposable(a2, o, {1, 1}, p);
    CHECK(filtration_count(l, {1, 0}, {0, 1}) == 1);
    CHECK(filtration_count(l, {0, 1}, {1, 0}) == 0);
    CHECK(filtration_count(l, {1, 1}, {0, 0}) == 1);
  }
}

TEST_CASE("every indecomposable is a brick") {
  for (const std::string t : {"A3", "A4", "D4"}) {
    const auto r = build_root_datum(t);
    for (int k = 0; k < r.num_positive(); ++k)
      for (std::uint32_t p : {2u, 3u}) {
        const auto m = build_indecomposable(r, r.orientation(), r.root(k), p);
        CHECK(m.dims == std::vector<int>(r.root(k).begin(), r.root(k).end()));
        CHECK(hom_dim(m, m) == 1);
      }
  }
  CHECK_THROWS_AS(build_indecomposable(build_root_datum("B2"), build_root_datum("B2").orientation(), {1, 0}, 2),
                  HallError);
}

TEST_CASE("hom dims satisfy the Euler form") {
  // dim Hom - dim Ext = <x, y>; with Ext^1(X,Y) = D Hom(Y, tau X) unavailable we only check
  // that hom is nonnegative and Hom(X,Y) and Ext^1(X,Y) never both vanish when <x,y> != 0
  for (const std::string t : {"A3", "D4"}) {
    auto r = std::make_shared<const RootDatum>(build_root_datum(t, t == "A3" ? "2>1,2>3" : "default"));
    const Section s(r);
    const auto hom = make_hom_oracle(*r, 3);
    for (int a = 0; a < r->num_positive(); ++a)
      for (int b = 0; b < r->num_positive(); ++b) {
        const int h = *hom(r->orientation(), r->root(a), r->root(b));
        const long e = s.euler_form(r->root(a), r->root(b));
        CHECK(h >= 0);
        CHECK(h - e >= 0);  // dim Ext^1 >= 0
        if (a == b) CHECK(h - e == 0);
      }
  }
}

TEST_CASE("Hall polynomial fit") {
  const auto a3 = build_root_datum("A3");
  const auto fit = hall_polynomial(a3, a3.orientation(), {1, 0, 0}, {0, 1, 1});
  CHECK(fit.counts.size() == 5);
  CHECK(fit.coefficients.size() == 1);
  CHECK(fit.primes == std::vector<std::uint32_t>{2, 3, 5, 7, 11});
}

TEST_CASE("gamma oracle matches the Euler cocycle on A2, A3, D4") {
  for (const std::string t : {"A2", "A3", "D4"}) {
    for (const std::string o : {std::string("default"), std::string(t == "A2" ? "2>1" : t == "A3" ? "2>1,2>3" : "2>1,2>3,2>4")}) {
      auto r = std::make_shared<const RootDatum>(build_root_datum(t, o));
      const LieData lie(r, Scheme::euler_cocycle);
      for (int a = 0; a < r->num_positive(); ++a)
        for (int b = 0; b < r->num_positive(); ++b) {
          if (r->sum_index(a, b) < 0) continue;
          const auto g = gamma_oracle(*r, r->orientation(), r->root(a), r->root(b));
          CAPTURE(t);
          CAPTURE(o);
          CAPTURE(a);
          CAPTURE(b);
          CHECK(g.gamma == lie.gamma(a, b));
          CHECK(std::abs(g.gamma) == 1);
        }
    }
  }
}

TEST_CASE("relative position") {
  auto a2 = std::make_shared<const RootDatum>(build_root_datum("A2"));
  const Section s(a2);
  const auto hom = make_hom_oracle(*a2, 2);
  // 0 -> S2 -> P1 -> S1 -> 0 gives Ext^1(S1, S2) != 0, so S2 > S1
  CHECK(relative_position(s, Ind{1}, Ind{0}, hom) == Position::greater);
  CHECK(relative_position(s, Ind{0}, Ind{1}, hom) == Position::less);
  auto a3 = std::make_shared<const RootDatum>(build_root_datum("A3"));
  const Section s3(a3);
  const auto hom3 = make_hom_oracle(*a3, 2);
  CHECK(relative_position(s3, Ind{0}, Ind{2}, hom3) == Position::none);
  auto b2 = std::make_shared<const RootDatum>(build_root_datum("B2"));
  CHECK(relative_position(Section(b2), Ind{0}, Ind{1}, make_hom_oracle(*b2)) == Position::unsupported);

  // antisymmetry and sign consistency with the Hall constants, over all non-opposite pairs
  for (const std::string t : {"A2", "A3", "D4"}) {
    auto r = std::make_shared<const RootDatum>(build_root_datum(t));
    const Section sec(r);
    const auto h = make_hom_oracle(*r, 2);
    const LieData lie(r, Scheme::euler_cocycle);
    for (int a = 0; a < r->num_roots(); ++a)
      for (int b = 0; b < r->num_roots(); ++b) {
        if (a == r->negative(b)) continue;
        const auto p = relative_position(sec, Ind{a}, Ind{b}, h);
        const auto q = relative_position(sec, Ind{b}, Ind{a}, h);
        CHECK(p != Position::unsupported);
        if (p == Position::greater) CHECK(q == Position::less);
        if (p == Position::none) CHECK(q == Position::none);
        // Ext^1(Y, X) = 0 rules out X as a sub of L, so gamma_XY = phi_XY(1)
        if (r->is_positive(a) && r->is_positive(b) && r->sum_index(a, b) >= 0) {
          const auto g = gamma_oracle(*r, r->orientation(), r->root(a), r->root(b));
          CAPTURE(t);
          CAPTURE(a);
          CAPTURE(b);
          if (p == Position::less) {
            for (auto c : g.yx.counts) CHECK(c == 0);
            CHECK(lie.gamma(a, b) == g.xy.value_at(1));
          }
          if (p == Position::greater) {
            for (auto c : g.xy.counts) CHECK(c == 0);
            CHECK(lie.gamma(a, b) == -g.yx.value_at(1));
          }
        }
      }
  }
}

TEST_CASE("sign of gamma against relative position") {
  // A2: S2 > S1 yet gamma_{S2,S1} = -1 with quotient-first Hall numbers
  auto a2 = std::make_shared<const RootDatum>(build_root_datum("A2"));
  const auto h = make_hom_oracle(*a2, 2);
  CHECK(relative_position(Section(a2), Ind{1}, Ind{0}, h) == Position::greater);
  CHECK(gamma_oracle(*a2, a2->orientation(), {0, 1}, {1, 0}).gamma == -1);
  // D4: phi(q) = q - 2 evaluates to -1, which flips the sign relation
  const auto d4 = build_root_datum("D4");
  const auto g = gamma_oracle(d4, d4.orientation(), {1, 1, 0, 0}, {0, 1, 1, 1});
  CHECK(g.xy.counts == std::vector<std::int64_t>{0, 1, 3, 5, 9});
  CHECK(g.xy.coefficients == std::vector<mpq_class>{-2, 1});
  CHECK(g.gamma == -1);
}

TEST_CASE("relative position does not depend on the chosen section") {
  auto a3 = std::make_shared<const RootDatum>(build_root_datum("A3"));
  const Section s(a3);
  const Section t = s.reflect(2);
  const auto h = make_hom_oracle(*a3, 2);
  for (int a = 0; a < a3->num_roots(); ++a)
    for (int b = 0; b < a3->num_roots(); ++b) {
      if (a == a3->negative(b)) continue;
      CHECK(relative_position(s, Ind{a}, Ind{b}, h) == relative_position(t, Ind{a}, Ind{b}, h));
    }
}

TEST_CASE("dimension guard") {
  const auto d4 = build_root_datum("D4");
  const auto l = build_indecomposable(d4, d4.orientation(), {1, 2, 1, 1}, 2);
  CHECK_NOTHROW(filtration_count(l, {1, 1, 1, 1}, {0, 1, 0, 0}));
  Representation big = simple_representation(Field::prime(2), d4.orientation(), 4, 0);
  big.dims = {3, 3, 3, 0};
  CHECK_THROWS_AS(filtration_count(big, {3, 3, 3, 0}, {0, 0, 0, 0}), HallError);
}

TEST_CASE("cocycle exponent uses <beta, alpha>") {
  // gamma_{a1,a2} = +1 for 1 -> 2 while <a1, a2> = -1 is odd
  auto a2 = std::make_shared<const RootDatum>(build_root_datum("A2"));
  const Section s(a2);
  CHECK(gamma_oracle(*a2, a2->orientation(), {1, 0}, {0, 1}).gamma == 1);
  CHECK(s.euler_form({1, 0}, {0, 1}) == -1);
  CHECK(s.euler_form({0, 1}, {1, 0}) == 0);
}
