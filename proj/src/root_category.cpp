#include "chevalley/root_category.hpp"

namespace chev {

long euler_pair(const RootDatum& datum, Ind x, Ind y) { return datum.inner(x.root, y.root); }

int a_coeff(const RootDatum& datum, Ind x, Ind y) {
  const long num = euler_pair(datum, x, y);
  const int d = d_of(datum, x);
  if (num % d != 0) throw RootDataError("A_XY is not integral");
  return static_cast<int>(num / d);
}

Ind omega(const RootDatum& datum, Ind x, Ind y) {
  if (y == x || y == shift(datum, x)) return shift(datum, y);
  const int a = a_coeff(datum, x, y);
  RootVec v = datum.root(y.root);
  const RootVec& r = datum.root(x.root);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] -= a * r[i];
  return Ind{datum.index_of(v)};
}

Ladder ladder(const RootDatum& datum, Ind x, Ind y) {
  if (x == y || x == shift(datum, y)) throw RootDataError("ladder needs X not isomorphic to Y or TY");
  Ladder l;
  l.x = x;
  l.y = y;
  const RootVec& a = datum.root(x.root);
  const RootVec& b = datum.root(y.root);
  auto combo = [&](int i, int j) {
    RootVec v(a.size());
    for (std::size_t k = 0; k < v.size(); ++k) v[k] = i * a[k] + j * b[k];
    return v;
  };
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) l.at[i][j] = (i == 0 && j == 0) ? -1 : datum.index_of(combo(i, j));
  while (datum.index_of(combo(-(l.p + 1), 1)) >= 0) ++l.p;
  while (datum.index_of(combo(l.q + 1, 1)) >= 0) ++l.q;
  return l;
}

std::string ladder_template(const RootDatum& datum, const Ladder& l) {
  // roots in the rational span of root(X), root(Y)
  const RootVec& a = datum.root(l.x.root);
  const RootVec& b = datum.root(l.y.root);
  int count = 0;
  for (const auto& v : datum.roots()) {
    bool in_span = true;
    // v in span(a, b) iff all 3x3 minors of [a b v] vanish; a, b independent
    for (std::size_t i = 0; i < v.size() && in_span; ++i)
      for (std::size_t j = i + 1; j < v.size() && in_span; ++j)
        for (std::size_t k = j + 1; k < v.size() && in_span; ++k) {
          const long det = static_cast<long>(a[i]) * (b[j] * v[k] - b[k] * v[j]) -
                           static_cast<long>(a[j]) * (b[i] * v[k] - b[k] * v[i]) +
                           static_cast<long>(a[k]) * (b[i] * v[j] - b[j] * v[i]);
          in_span = det == 0;
        }
    count += in_span;
  }
  switch (count) {
    case 4: return "A1xA1";
    case 6: return "A2";
    case 8: return "B2";
    case 12: return "G2";
  }
  return "unknown";
}

Section::Section(std::shared_ptr<const RootDatum> datum)
    : datum_(std::move(datum)), orientation_(datum_->orientation()), weyl_(WeylElement::identity(*datum_)) {}

std::vector<Ind> Section::simples() const {
  const WeylElement inv = weyl_.inverse();
  std::vector<Ind> out;
  for (int i = 0; i < datum_->rank(); ++i) out.push_back(Ind{inv.apply(i)});
  return out;
}

Section Section::reflect(int i) const {
  if (i < 0 || i >= datum_->rank()) throw RootDataError("vertex out of range");
  if (!orientation_.is_sink(i) && !orientation_.is_source(i))
    throw RootDataError("reflection needs a sink or a source");
  Section s = *this;
  s.orientation_ = orientation_.reversed_at(i);
  s.weyl_ = weyl_.simple_times(*datum_, i);
  return s;
}

long Section::euler_form(const RootVec& a, const RootVec& b) const {
  long s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += static_cast<long>(a[i]) * b[i] * datum_->symmetrizer()[i];
  for (auto [t, h] : orientation_.arrows) {
    s += static_cast<long>(a[t]) * b[h] * datum_->symmetrizer()[t] * datum_->cartan()(t, h);
  }
  return s;
}

std::string to_string(Position p) {
  switch (p) {
    case Position::greater: return "X>Y";
    case Position::less: return "X<Y";
    case Position::none: return "none";
    case Position::unsupported: return "unsupported";
  }
  return "unsupported";
}

Position relative_position(const Section& section, Ind x, Ind y, const HomOracle& hom) {
  const RootDatum& r = section.datum();
  if (x == shift(r, y)) throw RootDataError("relative_position needs X not isomorphic to TY");
  if (x == y) return Position::none;
  const bool bx = section.in_b(x), by = section.in_b(y);
  auto vec = [&](Ind z) { return r.root(section.dim(z)); };
  auto pos = [&](Ind z) { return r.root(section.in_b(z) ? section.dim(z) : r.negative(section.dim(z))); };
  std::optional<int> ext_yx, ext_xy;  // Ext^1(Y, X), Ext^1(X, Y)
  const Orientation& o = section.orientation();
  if (bx == by) {
    // both in B, or both in TB (apply T to both)
    const RootVec a = pos(x), b = pos(y);
    const auto hyx = hom(o, b, a), hxy = hom(o, a, b);
    if (!hyx || !hxy) return Position::unsupported;
    ext_yx = *hyx - section.euler_form(b, a);
    ext_xy = *hxy - section.euler_form(a, b);
  } else if (bx) {
    // Y = T Y0: Ext^1(Y, X) = Hom(Y0, X), Ext^1(X, Y) = Hom(X, Y0)
    ext_yx = hom(o, pos(y), vec(x));
    ext_xy = hom(o, vec(x), pos(y));
  } else {
    // X = T X0: Ext^1(Y, X) = Hom(Y, X0), Ext^1(X, Y) = Hom(X0, Y)
    ext_yx = hom(o, vec(y), pos(x));
    ext_xy = hom(o, pos(x), vec(y));
  }
  if (!ext_yx || !ext_xy) return Position::unsupported;
  if (*ext_yx != 0 && *ext_xy == 0) return Position::greater;
  if (*ext_xy != 0 && *ext_yx == 0) return Position::less;
  return Position::none;
}

}  // namespace chev
