#include "chevalley/field.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>
#include <tuple>

namespace chev {

namespace detail {

struct FieldData {
  FieldKind kind = FieldKind::rationals;
  std::uint32_t p = 0;
  unsigned k = 0;
  std::uint32_t q = 0;
  std::vector<std::uint32_t> poly;  // monic, c_0..c_k
  // Full tables for prime-power fields; prime fields use direct residues.
  std::vector<std::uint16_t> add_table, mul_table;
  std::vector<std::uint32_t> neg_table, inv_table;
};

}  // namespace detail

namespace {

using detail::FieldData;

using Poly = std::vector<std::uint32_t>;  // coefficients mod p, low to high

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mod(Poly a, const Poly& m, std::uint32_t p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  // m is monic
  while (a.size() > dm) {
    const std::uint64_t lead = a.back();
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) {
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - (lead * m[i]) % p) % p);
    }
    trim(a);
  }
  return a;
}

bool poly_irreducible(const Poly& f, std::uint32_t p) {
  const unsigned k = static_cast<unsigned>(f.size() - 1);
  // Trial division by all monic polynomials of degree 1..k/2.
  for (unsigned d = 1; 2 * d <= k; ++d) {
    std::uint64_t count = 1;
    for (unsigned i = 0; i < d; ++i) count *= p;
    for (std::uint64_t c = 0; c < count; ++c) {
      Poly g(d + 1, 0);
      g[d] = 1;
      std::uint64_t x = c;
      for (unsigned i = 0; i < d; ++i) {
        g[i] = static_cast<std::uint32_t>(x % p);
        x /= p;
      }
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

Poly least_irreducible(std::uint32_t p, unsigned k) {
  std::uint64_t count = 1;
  for (unsigned i = 0; i < k; ++i) count *= p;
  // Order: the coefficient vector (c_{k-1}, ..., c_0) read as a base-p number.
  for (std::uint64_t c = 0; c < count; ++c) {
    Poly f(k + 1, 0);
    f[k] = 1;
    std::uint64_t x = c;
    for (unsigned i = 0; i < k; ++i) {
      f[i] = static_cast<std::uint32_t>(x % p);
      x /= p;
    }
    if (poly_irreducible(f, p)) return f;
  }
  throw FieldError("no irreducible polynomial found");
}

Poly decode(std::uint32_t code, std::uint32_t p, unsigned k) {
  Poly a(k, 0);
  for (unsigned i = 0; i < k; ++i) {
    a[i] = code % p;
    code /= p;
  }
  return a;
}

std::uint32_t encode(const Poly& a, std::uint32_t p, unsigned k) {
  std::uint32_t code = 0;
  for (unsigned i = k; i-- > 0;) code = code * p + (i < a.size() ? a[i] : 0);
  return code;
}

std::uint64_t mod_pow(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = r * b % m;
    b = b * b % m;
    e >>= 1;
  }
  return r;
}

std::unique_ptr<FieldData> make_prime_power(std::uint32_t p, unsigned k) {
  auto d = std::make_unique<FieldData>();
  d->kind = FieldKind::prime_power;
  d->p = p;
  d->k = k;
  std::uint64_t q = 1;
  for (unsigned i = 0; i < k; ++i) q *= p;
  if (q > 4096) throw FieldError("prime-power fields are limited to q <= 4096");
  d->q = static_cast<std::uint32_t>(q);
  d->poly = least_irreducible(p, k);
  d->add_table.resize(q * q);
  d->mul_table.resize(q * q);
  d->neg_table.resize(q);
  d->inv_table.assign(q, 0);
  for (std::uint32_t a = 0; a < q; ++a) {
    const Poly pa = decode(a, p, k);
    Poly neg(k);
    for (unsigned i = 0; i < k; ++i) neg[i] = (p - pa[i]) % p;
    d->neg_table[a] = encode(neg, p, k);
    for (std::uint32_t b = 0; b < q; ++b) {
      const Poly pb = decode(b, p, k);
      Poly sum(k);
      for (unsigned i = 0; i < k; ++i) sum[i] = (pa[i] + pb[i]) % p;
      d->add_table[a * q + b] = static_cast<std::uint16_t>(encode(sum, p, k));
      Poly prod(2 * k, 0);
      for (unsigned i = 0; i < k; ++i)
        for (unsigned j = 0; j < k; ++j)
          prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t(pa[i]) * pb[j]) % p);
      d->mul_table[a * q + b] = static_cast<std::uint16_t>(encode(poly_mod(prod, d->poly, p), p, k));
    }
  }
  for (std::uint32_t a = 1; a < q; ++a)
    for (std::uint32_t b = 1; b < q; ++b)
      if (d->mul_table[a * q + b] == 1) {
        d->inv_table[a] = b;
        break;
      }
  return d;
}

class Registry {
 public:
  static Registry& instance() {
    static Registry r;
    return r;
  }
  const FieldData* rationals() const { return &rationals_; }
  const FieldData* get(std::uint32_t p, unsigned k) {
    std::lock_guard lock(mutex_);
    auto& slot = fields_[{p, k}];
    if (!slot) {
      if (k == 1) {
        slot = std::make_unique<FieldData>();
        slot->kind = FieldKind::prime;
        slot->p = p;
        slot->k = 1;
        slot->q = p;
      } else {
        slot = make_prime_power(p, k);
      }
    }
    return slot.get();
  }

 private:
  Registry() = default;
  FieldData rationals_;
  std::mutex mutex_;
  std::map<std::pair<std::uint32_t, unsigned>, std::unique_ptr<FieldData>> fields_;
};

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::pair<std::uint32_t, unsigned> prime_power_decomposition(std::uint64_t q) {
  if (q < 2) return {0, 0};
  std::uint64_t p = 2;
  while (q % p != 0) ++p;
  unsigned k = 0;
  std::uint64_t r = q;
  while (r % p == 0) {
    r /= p;
    ++k;
  }
  if (r != 1 || p > UINT32_MAX) return {0, 0};
  return {static_cast<std::uint32_t>(p), k};
}

// ---------------------------------------------------------------- Field

Field::Field() : data_(Registry::instance().rationals()) {}

Field Field::rationals() { return Field(); }

Field Field::prime(std::uint32_t p) {
  if (!is_prime(p)) throw FieldError("not a prime: " + std::to_string(p));
  if (p > 65521) throw FieldError("prime fields are limited to p < 65536");
  return Field(Registry::instance().get(p, 1));
}

Field Field::prime_power(std::uint32_t p, unsigned k) {
  if (!is_prime(p)) throw FieldError("not a prime: " + std::to_string(p));
  if (k == 0) throw FieldError("extension degree must be positive");
  if (k == 1) return prime(p);
  return Field(Registry::instance().get(p, k));
}

Field Field::finite(std::uint64_t q) {
  const auto [p, k] = prime_power_decomposition(q);
  if (p == 0) throw FieldError("not a prime power: " + std::to_string(q));
  return prime_power(p, k);
}

namespace {

std::uint64_t parse_uint(std::string_view s, std::string_view whole) {
  if (s.empty()) throw FieldError("malformed field spec: " + std::string(whole));
  std::uint64_t v = 0;
  for (char c : s) {
    if (c < '0' || c > '9') throw FieldError("malformed field spec: " + std::string(whole));
    v = v * 10 + static_cast<std::uint64_t>(c - '0');
    if (v > (1ull << 40)) throw FieldError("field order too large: " + std::string(whole));
  }
  return v;
}

}  // namespace

Field Field::parse(std::string_view spec) {
  if (spec == "Q" || spec == "QQ") return rationals();
  if (spec.empty() || spec[0] != 'F') throw FieldError("malformed field spec: " + std::string(spec));
  const auto eq = spec.find('=');
  if (eq == std::string_view::npos) return finite(parse_uint(spec.substr(1), spec));
  // F4=F2^2
  const std::uint64_t q = parse_uint(spec.substr(1, eq - 1), spec);
  const auto rhs = spec.substr(eq + 1);
  const auto caret = rhs.find('^');
  if (rhs.empty() || rhs[0] != 'F' || caret == std::string_view::npos)
    throw FieldError("malformed field spec: " + std::string(spec));
  const std::uint64_t p = parse_uint(rhs.substr(1, caret - 1), spec);
  const std::uint64_t k = parse_uint(rhs.substr(caret + 1), spec);
  if (p > UINT32_MAX || k > 64) throw FieldError("malformed field spec: " + std::string(spec));
  Field f = prime_power(static_cast<std::uint32_t>(p), static_cast<unsigned>(k));
  if (f.order() != q) throw FieldError("inconsistent field spec: " + std::string(spec));
  return f;
}

FieldKind Field::kind() const { return data_->kind; }
bool Field::is_finite() const { return data_->kind != FieldKind::rationals; }
std::uint32_t Field::characteristic() const { return data_->p; }
unsigned Field::degree() const { return data_->k; }
std::uint64_t Field::order() const { return data_->q; }
const std::vector<std::uint32_t>& Field::reduction_polynomial() const { return data_->poly; }

std::string Field::name() const {
  switch (data_->kind) {
    case FieldKind::rationals:
      return "Q";
    case FieldKind::prime:
      return "F" + std::to_string(data_->p);
    case FieldKind::prime_power:
      return "F" + std::to_string(data_->q) + "=F" + std::to_string(data_->p) + "^" + std::to_string(data_->k);
  }
  return "?";
}

Scalar Field::zero() const { return is_finite() ? Scalar(*this, 0u) : Scalar(*this, mpq_class(0)); }
Scalar Field::one() const { return is_finite() ? Scalar(*this, 1u) : Scalar(*this, mpq_class(1)); }

Scalar Field::from_int(long long v) const {
  if (!is_finite()) return Scalar(*this, mpq_class(static_cast<long>(v)));
  const long long p = data_->p;
  long long r = v % p;
  if (r < 0) r += p;
  // The prime subfield sits at codes 0..p-1 in both representations.
  return Scalar(*this, static_cast<std::uint32_t>(r));
}

Scalar Field::from_integer(const mpz_class& v) const {
  if (!is_finite()) return Scalar(*this, mpq_class(v));
  mpz_class r = v % data_->p;
  if (r < 0) r += data_->p;
  return Scalar(*this, static_cast<std::uint32_t>(r.get_ui()));
}

Scalar Field::from_rational(const mpq_class& v) const {
  if (!is_finite()) return Scalar(*this, v);
  const Scalar den = from_integer(v.get_den());
  if (den.is_zero()) throw FieldError("denominator vanishes in " + name());
  return from_integer(v.get_num()) / den;
}

Scalar Field::from_code(std::uint32_t c) const {
  if (!is_finite()) throw FieldError("codes are only defined for finite fields");
  if (c >= data_->q) throw FieldError("code out of range");
  return Scalar(*this, c);
}

std::vector<Scalar> Field::units() const {
  if (!is_finite()) throw FieldError("units() requires a finite field");
  std::vector<Scalar> out;
  out.reserve(data_->q - 1);
  for (std::uint32_t c = 1; c < data_->q; ++c) out.emplace_back(*this, c);
  return out;
}

std::vector<Scalar> Field::elements() const {
  if (!is_finite()) throw FieldError("elements() requires a finite field");
  std::vector<Scalar> out;
  for (std::uint32_t c = 0; c < data_->q; ++c) out.emplace_back(*this, c);
  return out;
}

std::uint32_t Field::add_code(std::uint32_t a, std::uint32_t b) const {
  if (data_->kind == FieldKind::prime) {
    const std::uint32_t s = a + b;
    return s >= data_->p ? s - data_->p : s;
  }
  return data_->add_table[a * data_->q + b];
}

std::uint32_t Field::neg_code(std::uint32_t a) const {
  if (data_->kind == FieldKind::prime) return a == 0 ? 0 : data_->p - a;
  return data_->neg_table[a];
}

std::uint32_t Field::sub_code(std::uint32_t a, std::uint32_t b) const { return add_code(a, neg_code(b)); }

std::uint32_t Field::mul_code(std::uint32_t a, std::uint32_t b) const {
  if (data_->kind == FieldKind::prime)
    return static_cast<std::uint32_t>(std::uint64_t(a) * b % data_->p);
  return data_->mul_table[a * data_->q + b];
}

std::uint32_t Field::inv_code(std::uint32_t a) const {
  if (a == 0) throw FieldError("division by zero in " + name());
  if (data_->kind == FieldKind::prime) return static_cast<std::uint32_t>(mod_pow(a, data_->p - 2, data_->p));
  return data_->inv_table[a];
}

// ---------------------------------------------------------------- Scalar

Scalar::Scalar() : value_(mpq_class(0)) {}

Scalar::Scalar(const Field& f, std::uint32_t code) : field_(f), value_(code) {
  if (!f.is_finite()) value_ = mpq_class(code);
}

Scalar::Scalar(const Field& f, mpq_class value) : field_(f), value_(std::move(value)) {
  if (f.is_finite()) throw FieldError("rational value given for finite field " + f.name());
  std::get<mpq_class>(value_).canonicalize();
}

bool Scalar::is_zero() const {
  if (field_.is_finite()) return std::get<std::uint32_t>(value_) == 0;
  return sgn(std::get<mpq_class>(value_)) == 0;
}

bool Scalar::is_one() const {
  if (field_.is_finite()) return std::get<std::uint32_t>(value_) == 1;
  return std::get<mpq_class>(value_) == 1;
}

std::uint32_t Scalar::code() const {
  if (!field_.is_finite()) throw FieldError("code() on a rational scalar");
  return std::get<std::uint32_t>(value_);
}

const mpq_class& Scalar::rational() const {
  if (field_.is_finite()) throw FieldError("rational() on a finite-field scalar");
  return std::get<mpq_class>(value_);
}

void Scalar::require_same_field(const Scalar& b) const {
  if (field_ != b.field_) throw FieldError("mixed-field operands: " + field_.name() + " and " + b.field_.name());
}

Scalar Scalar::operator+(const Scalar& b) const {
  require_same_field(b);
  if (field_.is_finite()) return Scalar(field_, field_.add_code(code(), b.code()));
  return Scalar(field_, mpq_class(rational() + b.rational()));
}

Scalar Scalar::operator-(const Scalar& b) const {
  require_same_field(b);
  if (field_.is_finite()) return Scalar(field_, field_.sub_code(code(), b.code()));
  return Scalar(field_, mpq_class(rational() - b.rational()));
}

Scalar Scalar::operator*(const Scalar& b) const {
  require_same_field(b);
  if (field_.is_finite()) return Scalar(field_, field_.mul_code(code(), b.code()));
  return Scalar(field_, mpq_class(rational() * b.rational()));
}

Scalar Scalar::operator/(const Scalar& b) const {
  require_same_field(b);
  return *this * b.inverse();
}

Scalar Scalar::operator-() const {
  if (field_.is_finite()) return Scalar(field_, field_.neg_code(code()));
  return Scalar(field_, mpq_class(-rational()));
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw FieldError("division by zero in " + field_.name());
  if (field_.is_finite()) return Scalar(field_, field_.inv_code(code()));
  return Scalar(field_, mpq_class(1 / rational()));
}

Scalar Scalar::pow(long long e) const {
  Scalar base = e < 0 ? inverse() : *this;
  unsigned long long n = e < 0 ? static_cast<unsigned long long>(-e) : static_cast<unsigned long long>(e);
  Scalar r = field_.one();
  while (n) {
    if (n & 1) r *= base;
    base *= base;
    n >>= 1;
  }
  return r;
}

bool Scalar::operator==(const Scalar& b) const {
  if (field_ != b.field_) return false;
  return value_ == b.value_;
}

std::string Scalar::to_string() const {
  if (!field_.is_finite()) return rational().get_str();
  if (field_.kind() == FieldKind::prime) return std::to_string(code());
  // prime-power elements print as polynomials in x, e.g. "x+1"
  const Poly a = decode(code(), field_.characteristic(), field_.degree());
  std::ostringstream os;
  bool first = true;
  for (unsigned i = field_.degree(); i-- > 0;) {
    if (a[i] == 0) continue;
    if (!first) os << '+';
    first = false;
    if (i == 0 || a[i] != 1) os << a[i];
    if (i >= 1) os << 'x';
    if (i >= 2) os << '^' << i;
  }
  if (first) os << '0';
  return os.str();
}

Scalar field_arithmetic(const Scalar& a, const Scalar& b, FieldOp op) {
  switch (op) {
    case FieldOp::add:
      return a + b;
    case FieldOp::sub:
      return a - b;
    case FieldOp::mul:
      return a * b;
    case FieldOp::div:
      return a / b;
  }
  throw FieldError("unknown field operation");
}

}  // namespace chev
