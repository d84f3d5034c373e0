#include "chevalley/cli.hpp"

#include <algorithm>
#include <optional>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "chevalley/bruhat.hpp"
#include "chevalley/checks.hpp"
#include "chevalley/enumerate.hpp"
#include "chevalley/hall_oracle.hpp"
#include "chevalley/lie_algebra.hpp"
#include "chevalley/root_data.hpp"
#include "chevalley/weyl.hpp"

namespace chev {

namespace {

using Json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string S(long long v) { return std::to_string(v); }
std::string S(const mpz_class& v) { return v.get_str(); }

struct Options {
  std::string format = "text";
  std::uint64_t seed = 0;
  std::string orientation = "default";
  std::string type;
  std::optional<std::uint64_t> q;
  std::string field;
  // subcommand options
  std::string word, x, y, scheme, strategy = "sequential", what;
  int trials = 20;
  int check_trials = 3;
  std::size_t guard = 50000;
  bool cells = false;
};

std::shared_ptr<const RootDatum> datum_of(const Options& o) {
  if (o.type.empty()) throw UsageError("--type is required");
  return std::make_shared<const RootDatum>(build_root_datum(o.type, o.orientation));
}

Scheme default_scheme(const RootDatum& r) { return r.simply_laced() ? Scheme::euler_cocycle : Scheme::extraspecial; }

Scheme scheme_of(const Options& o, const RootDatum& r) {
  if (o.scheme.empty()) return default_scheme(r);
  return parse_scheme(o.scheme);
}

std::optional<Field> field_of(const Options& o) {
  std::optional<Field> f;
  if (!o.field.empty()) f = Field::parse(o.field);
  if (o.q) {
    const Field g = Field::finite(*o.q);
    if (f && *f != g) throw UsageError("--q and --field disagree");
    f = g;
  }
  return f;
}

std::uint64_t require_q(const Options& o) {
  const auto f = field_of(o);
  if (!f || !f->is_finite()) throw UsageError("this command needs a finite field (--q N)");
  return f->order();
}

Scalar parse_scalar(const Field& f, const std::string& text) {
  mpq_class v;
  if (text.empty() || v.set_str(text, 10) != 0) throw UsageError("cannot parse parameter '" + text + "'");
  v.canonicalize();
  return f.from_rational(v);
}

Word parse_word(const Group& g, const std::string& text) {
  Word w;
  std::stringstream ss(text);
  std::string atom;
  while (std::getline(ss, atom, ',')) {
    atom.erase(std::remove_if(atom.begin(), atom.end(), ::isspace), atom.end());
    std::vector<std::string> parts;
    std::stringstream as(atom);
    for (std::string p; std::getline(as, p, ':');) parts.push_back(p);
    if (parts.size() < 2 || parts.size() > 3 || parts[0].size() != 1)
      throw UsageError("word atoms look like E:a1:1, n:a2 or h:a1+a2:2; got '" + atom + "'");
    WordAtom a;
    switch (parts[0][0]) {
      case 'E': a.kind = WordAtom::Kind::E; break;
      case 'h': a.kind = WordAtom::Kind::h; break;
      case 'n': a.kind = WordAtom::Kind::n; break;
      default: throw UsageError("atom kind must be E, h or n; got '" + parts[0] + "'");
    }
    a.root = parse_root(g.datum(), parts[1]);
    a.t = parts.size() == 3 ? parse_scalar(g.field(), parts[2]) : g.field().one();
    if (a.kind != WordAtom::Kind::E && a.t.is_zero()) throw UsageError("h and n atoms need a nonzero parameter");
    w.push_back(a);
  }
  if (w.empty()) throw UsageError("empty word");
  return w;
}

Json base(const std::string& command, const Options& o) {
  Json j;
  j["schema_version"] = "1";
  j["command"] = command;
  Json in;
  if (!o.what.empty()) in["check"] = o.what;
  if (!o.type.empty()) in["type"] = o.type;
  in["orientation"] = o.orientation;
  if (o.q) in["q"] = S(static_cast<long long>(*o.q));
  if (!o.field.empty()) in["field"] = o.field;
  in["seed"] = std::to_string(o.seed);
  if (!o.scheme.empty()) in["scheme"] = o.scheme;
  if (!o.word.empty()) in["word"] = o.word;
  if (!o.x.empty()) in["x"] = o.x;
  if (!o.y.empty()) in["y"] = o.y;
  j["inputs"] = in;
  return j;
}

Json int_list(const std::vector<int>& v) {
  Json a = Json::array();
  for (int x : v) a.push_back(S(x));
  return a;
}

Json uword_json(const RootDatum& r, const UWord& w) {
  Json a = Json::array();
  for (const auto& f : w) a.push_back({{"root", root_label(r, f.root)}, {"t", f.t.to_string()}});
  return a;
}

Json form_json(const Group& g, const BruhatForm& f) {
  Json torus = Json::array();
  for (const auto& c : f.torus) torus.push_back(c.to_string());
  std::vector<int> letters;
  for (int i : f.weyl_word) letters.push_back(i + 1);
  return {{"u_prime", uword_json(g.datum(), f.u_prime)},
          {"torus", torus},
          {"weyl_word", int_list(letters)},
          {"u_minus", uword_json(g.datum(), f.u_minus)}};
}

bool exception_listed(const std::string& type, std::uint64_t q) {
  return (type == "A1" && (q == 2 || q == 3)) || (type == "B2" && q == 2) || (type == "G2" && q == 2);
}

Json cmd_info(const Options& o) {
  const auto r = datum_of(o);
  Json j = base("info", o);
  Json cartan = Json::array();
  for (int i = 0; i < r->rank(); ++i) {
    Json row = Json::array();
    for (int k = 0; k < r->rank(); ++k) row.push_back(S(r->cartan()(i, k)));
    cartan.push_back(row);
  }
  mpz_class w = 1;
  for (int x : exponents(*r)) w *= x + 1;
  Json divisors = Json::array();
  for (auto d : elementary_divisors(r->cartan())) divisors.push_back(S(d));
  j["rank"] = S(r->rank());
  j["positive_roots"] = S(r->num_positive());
  j["simply_laced"] = r->simply_laced();
  j["cartan"] = cartan;
  j["height_histogram"] = int_list(height_histogram(*r));
  j["exponents"] = int_list(exponents(*r));
  j["weyl_order"] = S(w);
  j["elementary_divisors"] = divisors;
  j["ok"] = true;
  return j;
}

Json cmd_order(const Options& o) {
  const auto r = datum_of(o);
  const std::uint64_t q = require_q(o);
  Json j = base("order", o);
  const mpz_class predicted = predicted_order(*r, q);
  const mpz_class formula = weyl_formula_order(*r, q);
  j["order"] = S(predicted);
  j["predicted_order"] = S(predicted);
  j["weyl_formula_order"] = S(formula);
  j["torus_divisor"] = S(cartan_divisor(*r, q));
  j["exponents"] = int_list(exponents(*r));
  bool ok = predicted == formula;
  if (q <= 256 && predicted <= o.guard) {
    const Group g(std::make_shared<const LieData>(r, default_scheme(*r)), Field::finite(q));
    const EnumeratedGroup G(g, o.guard);
    j["enumerated_order"] = S(static_cast<long long>(G.size()));
    ok = ok && mpz_class(static_cast<unsigned long>(G.size())) == predicted;
  } else {
    j["enumerated_order"] = nullptr;
  }
  j["ok"] = ok;
  return j;
}

Json cmd_enumerate(const Options& o) {
  const auto r = datum_of(o);
  const std::uint64_t q = require_q(o);
  const Group g(std::make_shared<const LieData>(r, default_scheme(*r)), Field::finite(q));
  const EnumeratedGroup G(g, o.guard);
  const auto s = structure_checks(G);
  const auto u = unipotent_intersection(G);
  const auto n = weyl_quotient(G);
  Json j = base("enumerate", o);
  j["order"] = S(static_cast<long long>(G.size()));
  j["predicted_order"] = S(predicted_order(*r, q));
  j["structure"] = {{"simple", s.simple},
                    {"derived_is_whole", s.derived_is_whole},
                    {"center_trivial", s.center_trivial},
                    {"derived_order", S(static_cast<long long>(s.derived_order))},
                    {"center_order", S(static_cast<long long>(s.center_order))},
                    {"conjugacy_classes", S(static_cast<long long>(s.classes))}};
  j["unipotent"] = {{"u_order", S(static_cast<long long>(u.u_order))},
                    {"v_order", S(static_cast<long long>(u.v_order))},
                    {"intersection", S(static_cast<long long>(u.intersection))}};
  j["weyl_quotient"] = {{"n_order", S(static_cast<long long>(n.n_order))},
                        {"h_order", S(static_cast<long long>(n.h_order))},
                        {"weyl_order", S(static_cast<long long>(n.weyl_order))}};
  bool ok = mpz_class(static_cast<unsigned long>(G.size())) == predicted_order(*r, q) && s.center_trivial &&
            u.intersection == 1 && n.n_order == n.h_order * n.weyl_order;
  if (o.cells) {
    const auto c = bruhat_cells(G);
    Json cells = Json::array();
    for (const auto& [word, size] : c.cells) {
      std::vector<int> letters;
      for (int i : word) letters.push_back(i + 1);
      cells.push_back({{"weyl_word", int_list(letters)}, {"size", S(static_cast<long long>(size))}});
    }
    j["cells"] = {{"borel_order", S(static_cast<long long>(c.borel_order))},
                  {"sizes_match", c.sizes_match},
                  {"cells", cells}};
    ok = ok && c.sizes_match;
  }
  j["ok"] = ok;
  return j;
}

Json cmd_bruhat(const Options& o, std::mt19937_64& rng) {
  const auto r = datum_of(o);
  const auto f = field_of(o);
  if (!f) throw UsageError("bruhat needs a field (--q N or --field Q)");
  if (o.word.empty()) throw UsageError("--word is required");
  const Group g(std::make_shared<const LieData>(r, scheme_of(o, *r)), *f);
  const Word w = parse_word(g, o.word);
  Json j = base("bruhat", o);
  Json atoms = Json::array();
  for (const auto& a : w) atoms.push_back(a.to_string(*r));
  j["atoms"] = atoms;
  j["strategy"] = o.strategy;
  const Matrix target = g.word(w);
  BruhatForm form;
  bool ok = true;
  if (o.strategy == "sequential" || o.strategy == "both") form = bruhat(g, w, BruhatStrategy::sequential, nullptr, false);
  if (o.strategy == "divide") form = bruhat(g, w, BruhatStrategy::divide, &rng, false);
  if (o.strategy == "both") {
    const bool agree = bruhat(g, w, BruhatStrategy::divide, &rng, false) == form;
    j["strategies_agree"] = agree;
    ok = agree;
  }
  const bool certified = reassemble(g, form) == target;
  j["form"] = form_json(g, form);
  j["certified"] = certified;
  j["u_minus_supported"] = u_minus_supported(g, form);
  j["ok"] = ok && certified && u_minus_supported(g, form);
  return j;
}

Json cmd_commutator(const Options& o, std::mt19937_64& rng) {
  const auto r = datum_of(o);
  if (o.x.empty() || o.y.empty()) throw UsageError("--x and --y are required");
  const int x = parse_root(*r, o.x), y = parse_root(*r, o.y);
  if (x == y || y == r->negative(x)) throw UsageError("the commutator formula needs X != Y and X != -Y");
  const auto f = field_of(o).value_or(Field::rationals());
  const Group g(std::make_shared<const LieData>(r, scheme_of(o, *r)), f);
  Json terms = Json::array();
  for (const auto& t : commutator_expand(g.lie(), x, y))
    terms.push_back({{"i", S(t.i)}, {"j", S(t.j)}, {"root", root_label(*r, t.root)}, {"c", S(t.c)}});
  Json j = base("commutator", o);
  j["terms"] = terms;
  const bool ok = verify_commutator(g, x, y, o.trials, rng);
  j["verified"] = ok;
  j["ok"] = ok;
  return j;
}

Json cmd_constants(const Options& o) {
  const auto r = datum_of(o);
  const Scheme s = scheme_of(o, *r);
  const LieData lie(r, s);
  Json c = Json::array();
  for (int a = 0; a < r->num_roots(); ++a)
    for (int b = 0; b < r->num_roots(); ++b) {
      const int sum = r->sum_index(a, b);
      if (sum < 0) continue;
      c.push_back({{"x", root_label(*r, a)}, {"y", root_label(*r, b)}, {"sum", root_label(*r, sum)},
                   {"gamma", S(lie.gamma(a, b))}});
    }
  Json j = base("constants", o);
  j["scheme"] = to_string(s);
  j["constants"] = c;
  j["ok"] = true;
  return j;
}

Json cmd_check(const Options& o, std::mt19937_64& rng) {
  const auto r = datum_of(o);
  Json j = base("check", o);
  if (o.what == "jacobi") {
    std::vector<Scheme> schemes;
    if (!o.scheme.empty())
      schemes.push_back(parse_scheme(o.scheme));
    else if (r->simply_laced())
      schemes = {Scheme::euler_cocycle, Scheme::extraspecial};
    else
      schemes = {Scheme::extraspecial};
    Json rows = Json::array();
    bool ok = true;
    for (Scheme s : schemes) {
      const auto bad = jacobi_check(LieData(r, s), 1u << 30);
      rows.push_back({{"scheme", to_string(s)}, {"violations", S(static_cast<long long>(bad.size()))}});
      ok = ok && bad.empty();
    }
    j["schemes"] = rows;
    j["ok"] = ok;
  } else if (o.what == "steinberg") {
    const auto f = field_of(o).value_or(Field::rationals());
    const Group g(std::make_shared<const LieData>(r, scheme_of(o, *r)), f);
    const auto rep = steinberg_check(g, o.check_trials, rng);
    Json rows = Json::array();
    for (int k = 0; k < 4; ++k)
      rows.push_back({{"relation", S(k + 1)},
                      {"checked", S(static_cast<long long>(rep.checked[k]))},
                      {"failed", S(static_cast<long long>(rep.failed[k]))}});
    j["relations"] = rows;
    bool ok = rep.ok();
    if (f.is_finite()) {
      const auto center = steinberg_center_order(*r, f.order());
      j["center_order"] = S(center);
      if (std::pow(double(f.order() - 1), r->rank()) <= 1e6) {
        const auto direct = torus_kernel_count(*r, f.order());
        j["torus_kernel_count"] = S(direct);
        ok = ok && direct == center;
      }
    }
    j["ok"] = ok;
  } else if (o.what == "poincare") {
    const std::uint64_t q = o.q.value_or(2);
    const auto rep = poincare_identity(*r, q);
    j["lhs"] = S(rep.lhs);
    j["rhs"] = rep.rhs.get_str();
    j["equal"] = rep.equal;
    j["ok"] = rep.equal;
  } else if (o.what == "hall") {
    if (!hall_supported(*r)) throw UsageError("Hall counting supports A1-A4 and D4");
    const LieData lie(r, Scheme::euler_cocycle);
    long long pairs = 0, mismatches = 0;
    for (int a = 0; a < r->num_positive(); ++a)
      for (int b = 0; b < r->num_positive(); ++b) {
        if (r->sum_index(a, b) < 0) continue;
        ++pairs;
        if (gamma_oracle(*r, r->orientation(), r->root(a), r->root(b)).gamma != lie.gamma(a, b)) ++mismatches;
      }
    j["pairs"] = S(pairs);
    j["mismatches"] = S(mismatches);
    j["ok"] = mismatches == 0;
  } else if (o.what == "simplicity") {
    const std::uint64_t q = require_q(o);
    const Group g(std::make_shared<const LieData>(r, default_scheme(*r)), Field::finite(q));
    const EnumeratedGroup G(g, o.guard);
    const auto s = structure_checks(G);
    const bool listed = exception_listed(o.type, q);
    j["order"] = S(static_cast<long long>(s.order));
    j["simple"] = s.simple;
    j["derived_is_whole"] = s.derived_is_whole;
    j["center_trivial"] = s.center_trivial;
    j["derived_order"] = S(static_cast<long long>(s.derived_order));
    j["center_order"] = S(static_cast<long long>(s.center_order));
    j["exception_listed"] = listed;
    j["ok"] = s.center_trivial && s.simple == !listed;
  } else {
    throw UsageError("unknown check '" + o.what + "'");
  }
  return j;
}

std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (!v.is_array()) return v.dump();
  std::string out;
  for (const auto& e : v) out += (out.empty() ? "" : ",") + scalar_text(e);
  return out.empty() ? "-" : out;
}

void render_text(const Json& j, std::ostream& out, int indent) {
  const std::string pad(indent, ' ');
  for (const auto& [key, v] : j.items()) {
    if (v.is_object()) {
      out << pad << key << ":\n";
      render_text(v, out, indent + 2);
    } else if (v.is_array() && !v.empty() && (v[0].is_object() || v[0].is_array())) {
      out << pad << key << ":\n";
      for (const auto& row : v) {
        out << pad << "  -";
        if (row.is_array()) {
          for (const auto& e : row) out << " " << scalar_text(e);
        } else {
          for (const auto& [k2, v2] : row.items()) out << " " << k2 << "=" << scalar_text(v2);
        }
        out << "\n";
      }
    } else if (v.is_array()) {
      out << pad << key << ":";
      for (const auto& e : v) out << " " << scalar_text(e);
      out << "\n";
    } else {
      out << pad << key << ": " << scalar_text(v) << "\n";
    }
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Chevalley groups from root data: orders, Bruhat normal forms and structure checks", "chevalley-cli"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--seed", o.seed, "seed for every randomized trial");
  app.add_option("--orientation", o.orientation, "quiver orientation, e.g. 1>2,3>2");
  app.add_option("--type", o.type, "root system type, e.g. A2, G2, E6");
  app.add_option("--q", o.q, "order of the finite field");
  app.add_option("--field", o.field, "Q, F5, F4, ...");
  app.add_option("--guard", o.guard, "largest group order to enumerate");

  auto* info = app.add_subcommand("info", "root datum summary");
  auto* order = app.add_subcommand("order", "group order from the formula, with an enumeration cross-check");
  auto* enumerate = app.add_subcommand("enumerate", "list the group and run structure checks");
  enumerate->add_flag("--cells", o.cells, "count elements per Bruhat cell");
  auto* bruhat_cmd = app.add_subcommand("bruhat", "Bruhat normal form u' h n_w u of a word");
  bruhat_cmd->add_option("--word", o.word, "atoms such as E:a1:1,n:a2,E:-a1:2")->required();
  bruhat_cmd->add_option("--strategy", o.strategy, "sequential, divide or both")
      ->check(CLI::IsMember({"sequential", "divide", "both"}));
  bruhat_cmd->add_option("--scheme", o.scheme, "cocycle or extraspecial");
  auto* comm = app.add_subcommand("commutator", "commutator constants of two root groups");
  comm->add_option("--x", o.x, "first root")->required();
  comm->add_option("--y", o.y, "second root")->required();
  comm->add_option("--trials", o.trials, "random trials for the matrix check");
  comm->add_option("--scheme", o.scheme, "cocycle or extraspecial");
  auto* check = app.add_subcommand("check", "run one verification");
  check->add_option("what", o.what, "jacobi, steinberg, poincare, hall or simplicity")
      ->required()
      ->check(CLI::IsMember({"jacobi", "steinberg", "poincare", "hall", "simplicity"}));
  check->add_option("--trials", o.check_trials, "random trials per relation");
  check->add_option("--scheme", o.scheme, "cocycle or extraspecial");
  auto* constants = app.add_subcommand("constants", "structure constants gamma(X, Y)");
  constants->add_option("--scheme", o.scheme, "cocycle or extraspecial");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  std::mt19937_64 rng(o.seed);
  Json report;
  try {
    if (info->parsed()) report = cmd_info(o);
    else if (order->parsed()) report = cmd_order(o);
    else if (enumerate->parsed()) report = cmd_enumerate(o);
    else if (bruhat_cmd->parsed()) report = cmd_bruhat(o, rng);
    else if (comm->parsed()) report = cmd_commutator(o, rng);
    else if (check->parsed()) report = cmd_check(o, rng);
    else if (constants->parsed()) report = cmd_constants(o);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  if (o.format == "json")
    out << report.dump(2) << "\n";
  else
    render_text(report, out, 0);
  return report["ok"].get<bool>() ? 0 : 1;
}

}  // namespace chev
