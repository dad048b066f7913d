#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>

#include <gmpxx.h>

#include "solenoid/integer.hpp"

namespace solenoid {

/// Exact fraction in lowest terms with a positive denominator; zero is 0/1.
///
/// Like Integer, small values live inline (numerator and denominator each in
/// a signed 64-bit word, intermediate products in 128 bits) and overflow
/// promotes to a GMP rational.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t v) : rep_(Small{v, 1}) {}  // NOLINT(google-explicit-constructor)
  Rational(int v) : rep_(Small{v, 1}) {}           // NOLINT(google-explicit-constructor)
  Rational(const Integer& v);                      // NOLINT(google-explicit-constructor)
  /// num/den reduced to lowest terms. Throws PreconditionError when den == 0.
  Rational(const Integer& num, const Integer& den);
  explicit Rational(const mpq_class& v);

  /// Parses "n/d" or "n". Throws ParseError on malformed text or zero denominator.
  static Rational parse(std::string_view text);

  [[nodiscard]] Integer numerator() const;
  [[nodiscard]] Integer denominator() const;
  [[nodiscard]] mpq_class to_mpq() const;
  [[nodiscard]] bool is_small() const { return std::holds_alternative<Small>(rep_); }

  [[nodiscard]] int sign() const;
  [[nodiscard]] bool is_zero() const { return sign() == 0; }
  [[nodiscard]] bool is_integer() const;
  /// Canonical "n/d" form; zero prints as "0/1".
  [[nodiscard]] std::string to_string() const;

  Rational operator-() const;
  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b);
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  struct Small {
    std::int64_t num;
    std::int64_t den;
  };
  std::variant<Small, mpq_class> rep_{Small{0, 1}};

  friend struct RationalAccess;
};

std::ostream& operator<<(std::ostream& os, const Rational& v);

Rational abs(const Rational& x);
/// 2^a 3^b as an exact rational (negative exponents allowed).
Rational two_three_power(std::int64_t a, std::int64_t b);

/// Largest integer <= x.
Integer floor(const Rational& x);

/// Real integer and fractional parts: x = first + second with 0 <= second < 1.
std::pair<Integer, Rational> floor_frac(const Rational& x);

/// Only membership in this two-element set is meaningful.
enum class Prime : unsigned { two = 2, three = 3 };

/// The three places of G = R x Q2 x Q3.
enum class Place { real, two_adic, three_adic };

[[nodiscard]] constexpr unsigned value(Prime p) { return static_cast<unsigned>(p); }
[[nodiscard]] const char* to_string(Prime p);
[[nodiscard]] const char* to_string(Place p);

/// p^e as an Integer. Small exponents are served from a table.
Integer prime_power(Prime p, unsigned e);

/// Exponent of p in x, or nullopt for x == 0 (infinite valuation).
std::optional<std::int64_t> valuation(const Rational& x, Prime p);

/// |x|_p = p^(-val_p(x)), with |0|_p = 0.
Rational padic_norm(const Rational& x, Prime p);

/// True when val_p(x) >= 0 or x == 0.
bool is_padic_integral(const Rational& x, Prime p);

/// The p-adic fractional part: the unique t/p^j with 0 <= t < p^j and
/// j = max(0, -val_p(x)) such that x - t/p^j is p-integral.
Rational padic_fractional_part(const Rational& x, Prime p);

/// For p-integral x, the representative of x mod p^e in [0, p^e).
/// Throws PreconditionError when x is not p-integral.
Integer padic_residue(const Rational& x, Prime p, unsigned e);

/// The n-th p-adic digit of a p-integral x.
unsigned padic_digit(const Rational& x, unsigned n, Prime p);

/// True when the denominator of x has no prime factor other than 2 and 3.
bool in_z_sixth(const Rational& x);

}  // namespace solenoid
