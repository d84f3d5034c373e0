#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <gmpxx.h>

namespace chev {

/// Raised on division by zero, mixed-field operands and malformed field specs.
class FieldError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class FieldKind { rationals, prime, prime_power };

namespace detail {
struct FieldData;
}

class Scalar;

/// Handle to an interned coefficient field: Q, F_p, or F_p[x]/(f).
///
/// Handles are cheap to copy and compare by identity; two handles describing
/// the same field always point at the same interned data.
class Field {
 public:
  Field();  // the rationals

  static Field rationals();
  static Field prime(std::uint32_t p);
  /// F_{p^k} with the lexicographically least monic irreducible of degree k.
  static Field prime_power(std::uint32_t p, unsigned k);
  /// Any finite field of order q (prime or prime power).
  static Field finite(std::uint64_t q);
  /// "Q", "F5", "F4=F2^2" or "F4".
  static Field parse(std::string_view spec);

  FieldKind kind() const;
  bool is_finite() const;
  std::uint32_t characteristic() const;  // 0 for Q
  unsigned degree() const;               // k; 1 for prime fields, 0 for Q
  std::uint64_t order() const;           // q; 0 for Q
  /// Coefficients c_0..c_k of the monic reduction polynomial (prime powers only).
  const std::vector<std::uint32_t>& reduction_polynomial() const;
  std::string name() const;

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(long long v) const;
  Scalar from_integer(const mpz_class& v) const;
  Scalar from_rational(const mpq_class& v) const;
  /// Element with canonical code c (finite fields; c in [0, q)).
  Scalar from_code(std::uint32_t c) const;

  /// Nonzero elements in increasing code order (finite fields only).
  std::vector<Scalar> units() const;
  std::vector<Scalar> elements() const;

  // Raw code arithmetic for finite fields, used by the packed matrix kernels.
  std::uint32_t add_code(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t sub_code(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t mul_code(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t neg_code(std::uint32_t a) const;
  std::uint32_t inv_code(std::uint32_t a) const;

  bool operator==(const Field& other) const { return data_ == other.data_; }
  bool operator!=(const Field& other) const { return data_ != other.data_; }

 private:
  explicit Field(const detail::FieldData* d) : data_(d) {}
  const detail::FieldData* data_;
  friend class Scalar;
};

/// Exact field element in canonical form.
///
/// Finite-field elements are stored as codes in [0, q): the residue for F_p,
/// the base-p packed coefficient vector for F_{p^k}. Rationals are reduced
/// GMP fractions.
class Scalar {
 public:
  Scalar();  // rational zero
  Scalar(const Field& f, std::uint32_t code);
  Scalar(const Field& f, mpq_class value);

  const Field& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  std::uint32_t code() const;           // finite fields
  const mpq_class& rational() const;    // rationals

  Scalar operator+(const Scalar& b) const;
  Scalar operator-(const Scalar& b) const;
  Scalar operator*(const Scalar& b) const;
  Scalar operator/(const Scalar& b) const;
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
  Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
  Scalar& operator*=(const Scalar& b) { return *this = *this * b; }
  Scalar inverse() const;
  /// Integer power; negative exponents require a unit.
  Scalar pow(long long e) const;

  bool operator==(const Scalar& b) const;
  bool operator!=(const Scalar& b) const { return !(*this == b); }

  std::string to_string() const;

 private:
  void require_same_field(const Scalar& b) const;
  Field field_;
  std::variant<std::uint32_t, mpq_class> value_;
};

enum class FieldOp { add, sub, mul, div };
Scalar field_arithmetic(const Scalar& a, const Scalar& b, FieldOp op);

bool is_prime(std::uint64_t n);
/// (p, k) with q = p^k, or nullopt-equivalent {0,0} when q is not a prime power.
std::pair<std::uint32_t, unsigned> prime_power_decomposition(std::uint64_t q);

}  // namespace chev
