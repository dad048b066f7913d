#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

namespace solenoid {

/// Arbitrary-precision signed integer.
///
/// Values that fit in a signed 64-bit word are stored inline and use
/// overflow-checked machine arithmetic; anything larger is promoted to a GMP
/// integer. Results are always demoted back to the inline form when they fit,
/// so two equal values always share a representation.
class Integer {
 public:
  Integer() = default;
  Integer(std::int64_t v) : rep_(v) {}  // NOLINT(google-explicit-constructor)
  Integer(int v) : rep_(static_cast<std::int64_t>(v)) {}  // NOLINT
  explicit Integer(const mpz_class& v);

  /// Parses an optionally signed decimal literal. Throws ParseError.
  static Integer parse(std::string_view text);

  [[nodiscard]] bool is_small() const { return std::holds_alternative<std::int64_t>(rep_); }
  /// Inline value; only valid when is_small().
  [[nodiscard]] std::int64_t small() const { return std::get<std::int64_t>(rep_); }
  [[nodiscard]] mpz_class to_mpz() const;

  [[nodiscard]] int sign() const;
  [[nodiscard]] bool is_zero() const { return sign() == 0; }
  [[nodiscard]] bool fits_int64() const { return is_small(); }
  [[nodiscard]] std::string to_string() const;

  Integer operator-() const;
  friend Integer operator+(const Integer& a, const Integer& b);
  friend Integer operator-(const Integer& a, const Integer& b);
  friend Integer operator*(const Integer& a, const Integer& b);

  Integer& operator+=(const Integer& o) { return *this = *this + o; }
  Integer& operator-=(const Integer& o) { return *this = *this - o; }
  Integer& operator*=(const Integer& o) { return *this = *this * o; }

  friend bool operator==(const Integer& a, const Integer& b);
  friend std::strong_ordering operator<=>(const Integer& a, const Integer& b);

 private:
  std::variant<std::int64_t, mpz_class> rep_{std::int64_t{0}};
};

Integer abs(const Integer& a);
/// Quotient rounded toward negative infinity. Divisor must be nonzero.
Integer floor_div(const Integer& a, const Integer& b);
/// Remainder in [0, |m|). Modulus must be nonzero.
Integer mod(const Integer& a, const Integer& m);
Integer gcd(const Integer& a, const Integer& b);
Integer pow(const Integer& base, unsigned exp);

std::ostream& operator<<(std::ostream& os, const Integer& v);

}  // namespace solenoid
