// Acceptance suite: one PASS/FAIL line per criterion.
// Usage: acceptance [criterion ...]   (no arguments runs 1-10)

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <memory>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "chevalley/bruhat.hpp"
#include "chevalley/checks.hpp"
#include "chevalley/enumerate.hpp"
#include "chevalley/hall_oracle.hpp"
#include "chevalley/lie_algebra.hpp"
#include "chevalley/root_data.hpp"

using namespace chev;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [failed: " << what << "]";
    }
  }
};

std::shared_ptr<const RootDatum> datum_of(const std::string& t) {
  return std::make_shared<const RootDatum>(build_root_datum(t));
}

Scheme natural_scheme(const RootDatum& r) { return r.simply_laced() ? Scheme::euler_cocycle : Scheme::extraspecial; }

std::vector<Scheme> offered_schemes(const RootDatum& r) {
  if (r.simply_laced()) return {Scheme::euler_cocycle, Scheme::extraspecial};
  return {Scheme::extraspecial};
}

Group group_of(const std::string& t, const Field& f) {
  auto r = datum_of(t);
  return Group(std::make_shared<const LieData>(r, natural_scheme(*r)), f);
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

struct Case {
  std::string type;
  int q;
  std::size_t order;
};
const std::vector<Case> kOrders = {{"A1", 2, 6},     {"A1", 3, 12},    {"A2", 2, 168},   {"A2", 3, 5616},
                                   {"A3", 2, 20160}, {"B2", 2, 720},   {"B2", 3, 25920}, {"G2", 2, 12096}};

// 1. predicted_order equals the enumerated order, under 300 s in total
void criterion1(Outcome& o) {
  const auto t0 = std::chrono::steady_clock::now();
  for (const auto& c : kOrders) {
    const Group g = group_of(c.type, Field::finite(c.q));
    const EnumeratedGroup G(g);
    const auto rep = order_reconciliation(g.datum(), c.q, G.size());
    o.detail << " " << c.type << "(" << c.q << ")=" << G.size();
    o.require(rep.equal && G.size() == c.order, c.type + "(" + std::to_string(c.q) + ")");
  }
  const double s = seconds_since(t0);
  o.detail << "; " << s << " s";
  o.require(s < 300.0, "time budget 300 s");
}

// 2. height tables of E6 and F4
void criterion2(Outcome& o) {
  const std::vector<int> e6 = {6, 5, 5, 5, 4, 3, 3, 2, 1, 1, 1};
  const std::vector<int> f4 = {4, 3, 3, 3, 3, 2, 2, 1, 1, 1, 1};
  o.require(height_histogram(build_root_datum("E6")) == e6, "E6 k_i");
  o.require(height_histogram(build_root_datum("F4")) == f4, "F4 k_i");
  o.detail << " E6 and F4 k_i sequences";
}

// 3. Jacobi identity, zero violations under every offered scheme
void criterion3(Outcome& o) {
  std::size_t algebras = 0;
  for (const std::string t : {"A1", "A2", "A3", "A4", "B2", "B3", "B4", "C3", "D4", "F4", "G2", "E6"}) {
    auto r = datum_of(t);
    for (Scheme s : offered_schemes(*r)) {
      const LieData lie(r, s);
      o.require(jacobi_check(lie, 1).empty(), t + "/" + to_string(s));
      ++algebras;
    }
  }
  o.detail << " " << algebras << " (type, scheme) pairs";
}

// 4. Hall-counting gamma equals the Euler cocycle
void criterion4(Outcome& o) {
  std::size_t pairs = 0;
  for (const std::string t : {"A2", "A3", "D4"}) {
    auto r = datum_of(t);
    const LieData lie(r, Scheme::euler_cocycle);
    for (int a = 0; a < r->num_positive(); ++a)
      for (int b = 0; b < r->num_positive(); ++b) {
        if (r->sum_index(a, b) < 0) continue;
        const auto g = gamma_oracle(*r, r->orientation(), r->root(a), r->root(b));
        o.require(g.gamma == lie.gamma(a, b), t + " pair " + std::to_string(a) + "," + std::to_string(b));
        ++pairs;
      }
  }
  o.detail << " " << pairs << " ordered pairs";
}

// 5. commutator formula over Q and F5, 20 trials; G2 magnitudes 2, 3, 3
void criterion5(Outcome& o) {
  std::mt19937_64 rng(5);
  std::size_t pairs = 0;
  for (const std::string t : {"A2", "A3", "B2", "G2"})
    for (const Field& f : {Field::rationals(), Field::prime(5)}) {
      const Group g = group_of(t, f);
      const RootDatum& r = g.datum();
      for (int x = 0; x < r.num_roots(); ++x)
        for (int y = 0; y < r.num_roots(); ++y) {
          if (x == y || y == r.negative(x)) continue;
          o.require(verify_commutator(g, x, y, 20, rng), t + "/" + f.name());
          ++pairs;
        }
    }
  const LieData g2(datum_of("G2"), Scheme::extraspecial);
  bool found = false;
  for (int x = 0; x < g2.datum().num_roots() && !found; ++x)
    for (int y = 0; y < g2.datum().num_roots() && !found; ++y) {
      if (x == y || y == g2.datum().negative(x)) continue;
      int c11 = 0, c12 = 0, c21 = 0;
      for (const auto& term : commutator_expand(g2, x, y)) {
        if (term.i == 1 && term.j == 1) c11 = term.c;
        if (term.i == 1 && term.j == 2) c12 = term.c;
        if (term.i == 2 && term.j == 1) c21 = term.c;
      }
      found = std::abs(c11) == 2 && c12 == -3 * (c11 / 2) && c21 == 3 * (c11 / 2);
    }
  o.require(found, "G2 pair with C11=2s, C12=-3s, C21=3s");
  o.detail << " " << pairs << " (pair, field) cases; G2 magnitudes found";
}

// 6. Bruhat decomposition on 1000 random words per group; cell sizes on A2(2)
void criterion6(Outcome& o) {
  std::mt19937_64 rng(6);
  for (const auto& [t, q] : std::vector<std::pair<std::string, int>>{{"A2", 3}, {"B2", 3}, {"A3", 2}}) {
    const Group g = group_of(t, Field::finite(q));
    std::size_t bad = 0;
    for (int k = 0; k < 1000; ++k) {
      const Word w = random_word(g, 20, rng);
      try {
        const BruhatForm a = bruhat(g, w, BruhatStrategy::sequential, nullptr, true);
        const BruhatForm b = bruhat(g, w, BruhatStrategy::divide, &rng, true);
        if (!(a == b) || !u_minus_supported(g, a)) ++bad;
      } catch (const GroupError&) {
        ++bad;
      }
    }
    o.require(bad == 0, t + "(" + std::to_string(q) + ") " + std::to_string(bad) + " bad words");
  }
  const EnumeratedGroup G(group_of("A2", Field::finite(2)));
  const auto cells = bruhat_cells(G);
  o.require(cells.sizes_match && cells.cells.size() == 6, "A2(2) cell sizes");
  o.detail << " 3000 words certified, strategies agree; A2(2) |BwB| = " << cells.borel_order << " q^l(w)";
}

// 7. simplicity, derived subgroup and center on enumerated groups
void criterion7(Outcome& o) {
  for (const auto& c : kOrders) {
    const EnumeratedGroup G(group_of(c.type, Field::finite(c.q)));
    const auto s = structure_checks(G);
    const std::string name = c.type + "(" + std::to_string(c.q) + ")";
    o.require(s.center_trivial, name + " center");
    const bool exception = (c.type == "A1" && c.q <= 3) || (c.type == "B2" && c.q == 2) || (c.type == "G2" && c.q == 2);
    if (exception) {
      o.require(!s.simple && !s.derived_is_whole, name + " should be non-simple with G' != G");
    } else {
      o.require(s.simple, name + " simple");
    }
    o.detail << " " << name << (s.simple ? ":simple" : ":not-simple") << "/|G'|=" << s.derived_order;
  }
}

// 8. Poincare identity for rank <= 4 types and E6, q in {2,3,4}
void criterion8(Outcome& o) {
  std::size_t cases = 0;
  for (const auto& t : supported_types()) {
    const RootDatum r = build_root_datum(t);
    if (r.rank() > 4 && t != "E6") continue;
    for (std::uint64_t q : {2, 3, 4}) {
      o.require(poincare_identity(r, q).equal, t + " q=" + std::to_string(q));
      ++cases;
    }
  }
  o.detail << " " << cases << " (type, q) cases";
}

// 9. Steinberg relations over F7 and Q; center orders
void criterion9(Outcome& o) {
  std::mt19937_64 rng(9);
  for (const std::string t : {"A2", "B2", "G2"})
    for (const Field& f : {Field::prime(7), Field::rationals()}) {
      const auto rep = steinberg_check(group_of(t, f), 3, rng);
      o.require(rep.ok(), t + "/" + f.name());
    }
  const std::int64_t a24 = steinberg_center_order(build_root_datum("A2"), 4);
  const std::int64_t a13 = steinberg_center_order(build_root_datum("A1"), 3);
  const std::int64_t a22 = steinberg_center_order(build_root_datum("A2"), 2);
  o.require(a24 == 3 && a13 == 2 && a22 == 1, "center orders");
  o.require(a24 == torus_kernel_count(build_root_datum("A2"), 4), "A2(4) direct torus count");
  o.detail << " relations (1)-(4) on A2, B2, G2; centers " << a24 << "," << a13 << "," << a22;
}

// 10. divided powers integral; (ad u_X)^5 = 0
void criterion10(Outcome& o) {
  int worst = 0;
  for (const auto& t : supported_types()) {
    auto r = datum_of(t);
    const auto rep = nilpotency_check(LieData(r, natural_scheme(*r)));
    o.require(rep.integral, t + " integrality");
    o.require(rep.fifth_power_zero, t + " fifth power");
    worst = std::max(worst, rep.max_nonzero_power);
  }
  o.detail << " " << supported_types().size() << " types; highest nonzero power " << worst;
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::function<void(Outcome&)>> criteria = {criterion1, criterion2, criterion3, criterion4,
                                                                criterion5, criterion6, criterion7, criterion8,
                                                                criterion9, criterion10};
  std::vector<int> which;
  for (int i = 1; i < argc; ++i) which.push_back(std::atoi(argv[i]));
  if (which.empty())
    for (int i = 1; i <= 10; ++i) which.push_back(i);
  bool all = true;
  for (int k : which) {
    if (k < 1 || k > 10) {
      std::cerr << "unknown criterion " << k << "\n";
      return 2;
    }
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      criteria[k - 1](o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    std::printf("criterion %d: %s:%s (%.1f s)\n", k, o.pass ? "PASS" : "FAIL", o.detail.str().c_str(),
                seconds_since(t0));
    std::fflush(stdout);
    all = all && o.pass;
  }
  return all ? 0 : 1;
}
