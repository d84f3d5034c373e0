#include <doctest.h>

#include "chevalley/group.hpp"

using namespace chev;

namespace {

std::shared_ptr<const LieData> lie_for(const std::string& t, Scheme s = Scheme::extraspecial) {
  return std::make_shared<const LieData>(std::make_shared<const RootDatum>(build_root_datum(t)), s);
}

}  // namespace

TEST_CASE("generator columns") {
  const Group g(lie_for("A2"), Field::rationals());
  const auto& r = g.datum();
  const Field& f = g.field();
  CHECK(g.E(0, f.zero()).is_identity());
  for (int x = 0; x < r.num_roots(); ++x) {
    const Scalar t = f.from_rational(mpq_class(2, 3));
    const Matrix e = g.E(x, t);
    // E_X(t) u_TX = u_TX + t H'_X + t^2 u_X
    const int col = g.lie().u_index(r.negative(x));
    const RootVec c = r.coroot(x);
    for (int row = 0; row < g.dim(); ++row) {
      Scalar expect = f.zero();
      if (row == col) expect = f.one();
      if (row < r.rank()) expect = t * f.from_int(c[row]);
      if (row == g.lie().u_index(x)) expect = t * t;
      CHECK(e(row, col) == expect);
    }
    // E_X(t) H'_Y = H'_Y + A_YX t u_X
    for (int y = 0; y < r.rank(); ++y)
      for (int row = 0; row < g.dim(); ++row) {
        Scalar expect = row == y ? f.one() : f.zero();
        if (row == g.lie().u_index(x)) expect = f.from_int(a_coeff(r, Ind{y}, Ind{x})) * t;
        CHECK(e(row, y) == expect);
      }
    CHECK(e.determinant() == f.one());
  }
}

TEST_CASE("one-parameter laws and n, h calculus") {
  std::mt19937_64 rng(11);
  for (const std::string t : {"A2", "B2", "G2"})
    for (const Field f : {Field::rationals(), Field::prime(7)}) {
      const Group g(lie_for(t), f);
      const auto& r = g.datum();
      for (int x = 0; x < r.num_roots(); ++x) {
        const Scalar a = random_scalar(f, rng, true), b = random_scalar(f, rng, true);
        CHECK(g.E(x, a) * g.E(x, b) == g.E(x, a + b));
        CHECK(g.h(x, a) * g.h(x, b) == g.h(x, a * b));
        CHECK(g.n(x, f.one()) * g.n(x, -f.one()) == g.identity());
        CHECK(g.n(x, a) == g.h(x, a) * g.n(x, f.one()));
        const Matrix hm = g.h(x, a);
        CHECK(hm.is_diagonal());
        CHECK(hm(g.lie().u_index(x), g.lie().u_index(x)) == a * a);
        for (int y = 0; y < r.num_roots(); ++y)
          CHECK(hm(g.lie().u_index(y), g.lie().u_index(y)) == a.pow(a_coeff(r, Ind{x}, Ind{y})));
        // n(t) E_X(s) n(t)^{-1} = E_TX(t^{-2} s)
        CHECK(g.n(x, a) * g.E(x, b) * g.n(x, -a) == g.E(r.negative(x), b / (a * a)));
        CHECK(g.eta(x, x) == 1);
        for (int y = 0; y < r.num_roots(); ++y) {
          // eta_XY eta_{X, omega_X(Y)} = (-1)^{A_XY}
          const int w = omega(r, Ind{x}, Ind{y}).root;
          CHECK(g.eta(x, y) * g.eta(x, w) == ((a_coeff(r, Ind{x}, Ind{y}) % 2 == 0) ? 1 : -1));
          // n E_Y(s) n^{-1} = E_{omega_X(Y)}(eta t^{-A} s)
          CHECK(g.n(x, a) * g.E(y, b) * g.n(x, -a) ==
                g.E(w, f.from_int(g.eta(x, y)) * a.pow(-a_coeff(r, Ind{x}, Ind{y})) * b));
          // h E_Y(s) h^{-1} = E_Y(t^{A_XY} s)
          CHECK(g.h(x, a) * g.E(y, b) * g.h(x, a.inverse()) == g.E(y, a.pow(a_coeff(r, Ind{x}, Ind{y})) * b));
        }
      }
    }
}

TEST_CASE("commutator formula") {
  std::mt19937_64 rng(5);
  for (const std::string t : {"A2", "A3", "B2", "G2"})
    for (const Field f : {Field::rationals(), Field::prime(5)}) {
      const Group g(lie_for(t), f);
      const auto& r = g.datum();
      for (int x = 0; x < r.num_roots(); ++x)
        for (int y = 0; y < r.num_roots(); ++y) {
          if (x == y || x == r.negative(y)) continue;
          CAPTURE(t);
          CAPTURE(x);
          CAPTURE(y);
          CHECK(verify_commutator(g, x, y, 5, rng));
        }
    }
}
