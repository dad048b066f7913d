#include "solenoid/rational.hpp"

#include <array>
#include <limits>
#include <ostream>

#include "solenoid/errors.hpp"
#include "wide.hpp"

namespace solenoid {

using detail::fits_i64;
using detail::gcd128;
using detail::gcd64;
using detail::i128;
using detail::u128;
using detail::uabs;

namespace {

constexpr unsigned kMaxSmallExp2 = 62;
constexpr unsigned kMaxSmallExp3 = 39;

constexpr std::array<std::int64_t, kMaxSmallExp2 + 1> make_pow2() {
  std::array<std::int64_t, kMaxSmallExp2 + 1> t{};
  t[0] = 1;
  for (unsigned i = 1; i < t.size(); ++i) t[i] = t[i - 1] * 2;
  return t;
}

constexpr std::array<std::int64_t, kMaxSmallExp3 + 1> make_pow3() {
  std::array<std::int64_t, kMaxSmallExp3 + 1> t{};
  t[0] = 1;
  for (unsigned i = 1; i < t.size(); ++i) t[i] = t[i - 1] * 3;
  return t;
}

constexpr auto kPow2 = make_pow2();
constexpr auto kPow3 = make_pow3();

// p^e when it fits in an int64, else 0.
std::int64_t small_prime_power(Prime p, unsigned e) {
  if (p == Prime::two) return e <= kMaxSmallExp2 ? kPow2[e] : 0;
  return e <= kMaxSmallExp3 ? kPow3[e] : 0;
}

// Inverse of a modulo m for gcd(a, m) == 1, 0 <= a < m.
std::int64_t inverse_mod(std::int64_t a, std::int64_t m) {
  i128 old_r = a;
  i128 r = m;
  i128 old_s = 1;
  i128 s = 0;
  while (r != 0) {
    const i128 q = old_r / r;
    const i128 tr = old_r - q * r;
    old_r = r;
    r = tr;
    const i128 ts = old_s - q * s;
    old_s = s;
    s = ts;
  }
  i128 inv = old_s % m;
  if (inv < 0) inv += m;
  return static_cast<std::int64_t>(inv);
}

mpq_class make_mpq(const mpz_class& num, const mpz_class& den) {
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace

struct RationalAccess {
  static Rational small(std::int64_t num, std::int64_t den) {
    Rational r;
    r.rep_ = Rational::Small{num, den};
    return r;
  }
};

namespace {

// Builds a canonical value from a 128-bit fraction with den > 0.
Rational from_wide(i128 num, i128 den) {
  const u128 g = gcd128(uabs(num), static_cast<u128>(den));
  if (g > 1) {
    num /= static_cast<i128>(g);
    den /= static_cast<i128>(g);
  }
  if (fits_i64(num) && fits_i64(den)) {
    return RationalAccess::small(static_cast<std::int64_t>(num), static_cast<std::int64_t>(den));
  }
  return Rational(make_mpq(detail::to_mpz(num), detail::to_mpz(den)));
}

}  // namespace

Rational::Rational(const Integer& v) {
  if (v.is_small()) {
    rep_ = Small{v.small(), 1};
  } else {
    rep_ = mpq_class(v.to_mpz());
  }
}

Rational::Rational(const Integer& num, const Integer& den) {
  if (den.is_zero()) throw PreconditionError("rational with zero denominator");
  if (num.is_small() && den.is_small()) {
    i128 n = num.small();
    i128 d = den.small();
    if (d < 0) {
      n = -n;
      d = -d;
    }
    const u128 g = gcd128(uabs(n), static_cast<u128>(d));
    n /= static_cast<i128>(g);
    d /= static_cast<i128>(g);
    if (fits_i64(n) && fits_i64(d)) {
      rep_ = Small{static_cast<std::int64_t>(n), static_cast<std::int64_t>(d)};
      return;
    }
    *this = Rational(make_mpq(detail::to_mpz(n), detail::to_mpz(d)));
    return;
  }
  *this = Rational(make_mpq(num.to_mpz(), den.to_mpz()));
}

Rational::Rational(const mpq_class& v) {
  if (detail::mpz_fits_i64(v.get_num()) && detail::mpz_fits_i64(v.get_den())) {
    rep_ = Small{detail::mpz_to_i64(v.get_num()), detail::mpz_to_i64(v.get_den())};
  } else {
    rep_ = v;
  }
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(Integer::parse(text));
  const Integer num = Integer::parse(text.substr(0, slash));
  const Integer den = Integer::parse(text.substr(slash + 1));
  if (den.is_zero()) throw ParseError("rational '" + std::string(text) + "' has zero denominator");
  return {num, den};
}

Integer Rational::numerator() const {
  if (is_small()) return Integer(std::get<Small>(rep_).num);
  return Integer(mpz_class(std::get<mpq_class>(rep_).get_num()));
}

Integer Rational::denominator() const {
  if (is_small()) return Integer(std::get<Small>(rep_).den);
  return Integer(mpz_class(std::get<mpq_class>(rep_).get_den()));
}

mpq_class Rational::to_mpq() const {
  if (is_small()) {
    const auto& s = std::get<Small>(rep_);
    return mpq_class(mpz_class(static_cast<long>(s.num)), mpz_class(static_cast<long>(s.den)));
  }
  return std::get<mpq_class>(rep_);
}

int Rational::sign() const {
  if (is_small()) {
    const auto n = std::get<Small>(rep_).num;
    return (n > 0) - (n < 0);
  }
  return sgn(std::get<mpq_class>(rep_));
}

bool Rational::is_integer() const {
  if (is_small()) return std::get<Small>(rep_).den == 1;
  return std::get<mpq_class>(rep_).get_den() == 1;
}

std::string Rational::to_string() const {
  return numerator().to_string() + "/" + denominator().to_string();
}

Rational Rational::operator-() const {
  if (is_small()) {
    const auto& s = std::get<Small>(rep_);
    return from_wide(-static_cast<i128>(s.num), s.den);
  }
  return Rational(mpq_class(-std::get<mpq_class>(rep_)));
}

Rational operator+(const Rational& a, const Rational& b) {
  if (a.is_small() && b.is_small()) {
    const auto& x = std::get<Rational::Small>(a.rep_);
    const auto& y = std::get<Rational::Small>(b.rep_);
    if (x.den == y.den) return from_wide(static_cast<i128>(x.num) + y.num, x.den);
    return from_wide(static_cast<i128>(x.num) * y.den + static_cast<i128>(y.num) * x.den,
                     static_cast<i128>(x.den) * y.den);
  }
  return Rational(mpq_class(a.to_mpq() + b.to_mpq()));
}

Rational operator-(const Rational& a, const Rational& b) {
  if (a.is_small() && b.is_small()) {
    const auto& x = std::get<Rational::Small>(a.rep_);
    const auto& y = std::get<Rational::Small>(b.rep_);
    if (x.den == y.den) return from_wide(static_cast<i128>(x.num) - y.num, x.den);
    return from_wide(static_cast<i128>(x.num) * y.den - static_cast<i128>(y.num) * x.den,
                     static_cast<i128>(x.den) * y.den);
  }
  return Rational(mpq_class(a.to_mpq() - b.to_mpq()));
}

Rational operator*(const Rational& a, const Rational& b) {
  if (a.is_small() && b.is_small()) {
    const auto& x = std::get<Rational::Small>(a.rep_);
    const auto& y = std::get<Rational::Small>(b.rep_);
    if (x.num == 0 || y.num == 0) return {};
    const std::uint64_t g1 = gcd64(static_cast<std::uint64_t>(uabs(x.num)),
                                   static_cast<std::uint64_t>(y.den));
    const std::uint64_t g2 = gcd64(static_cast<std::uint64_t>(uabs(y.num)),
                                   static_cast<std::uint64_t>(x.den));
    const i128 num = (static_cast<i128>(x.num) / static_cast<i128>(g1)) *
                     (static_cast<i128>(y.num) / static_cast<i128>(g2));
    const i128 den = (static_cast<i128>(x.den) / static_cast<i128>(g2)) *
                     (static_cast<i128>(y.den) / static_cast<i128>(g1));
    if (fits_i64(num) && fits_i64(den)) {
      return RationalAccess::small(static_cast<std::int64_t>(num), static_cast<std::int64_t>(den));
    }
    return Rational(make_mpq(detail::to_mpz(num), detail::to_mpz(den)));
  }
  return Rational(mpq_class(a.to_mpq() * b.to_mpq()));
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw PreconditionError("rational division by zero");
  if (b.is_small()) {
    const auto& y = std::get<Rational::Small>(b.rep_);
    Rational inv;
    if (y.num > 0) {
      inv.rep_ = Rational::Small{y.den, y.num};
    } else if (y.num != std::numeric_limits<std::int64_t>::min()) {
      inv.rep_ = Rational::Small{-y.den, -y.num};
    } else {
      inv = Rational(make_mpq(mpz_class(static_cast<long>(-y.den)),
                              -mpz_class(static_cast<long>(y.num))));
    }
    return a * inv;
  }
  return Rational(mpq_class(a.to_mpq() / b.to_mpq()));
}

bool operator==(const Rational& a, const Rational& b) {
  if (a.is_small() != b.is_small()) return false;
  if (a.is_small()) {
    const auto& x = std::get<Rational::Small>(a.rep_);
    const auto& y = std::get<Rational::Small>(b.rep_);
    return x.num == y.num && x.den == y.den;
  }
  return std::get<mpq_class>(a.rep_) == std::get<mpq_class>(b.rep_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  if (a.is_small() && b.is_small()) {
    const auto& x = std::get<Rational::Small>(a.rep_);
    const auto& y = std::get<Rational::Small>(b.rep_);
    return static_cast<i128>(x.num) * y.den <=> static_cast<i128>(y.num) * x.den;
  }
  const int c = cmp(a.to_mpq(), b.to_mpq());
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::ostream& operator<<(std::ostream& os, const Rational& v) { return os << v.to_string(); }

Rational abs(const Rational& x) { return x.sign() < 0 ? -x : x; }

Rational two_three_power(std::int64_t a, std::int64_t b) {
  const auto ua = static_cast<unsigned>(a < 0 ? -a : a);
  const auto ub = static_cast<unsigned>(b < 0 ? -b : b);
  const Integer p2 = prime_power(Prime::two, ua);
  const Integer p3 = prime_power(Prime::three, ub);
  Integer num = 1;
  Integer den = 1;
  (a >= 0 ? num : den) *= p2;
  (b >= 0 ? num : den) *= p3;
  return {num, den};
}

Integer floor(const Rational& x) { return floor_div(x.numerator(), x.denominator()); }

std::pair<Integer, Rational> floor_frac(const Rational& x) {
  Integer f = floor(x);
  Rational frac = x - Rational(f);
  return {std::move(f), std::move(frac)};
}

const char* to_string(Prime p) { return p == Prime::two ? "2" : "3"; }

const char* to_string(Place p) {
  switch (p) {
    case Place::real:
      return "real";
    case Place::two_adic:
      return "two_adic";
    case Place::three_adic:
      return "three_adic";
  }
  return "?";
}

Integer prime_power(Prime p, unsigned e) {
  if (const std::int64_t s = small_prime_power(p, e); s != 0) return Integer(s);
  mpz_class out;
  mpz_ui_pow_ui(out.get_mpz_t(), value(p), e);
  return Integer(out);
}

namespace {

std::int64_t integer_valuation(const Integer& v, Prime p) {
  if (v.is_small()) {
    std::uint64_t m = static_cast<std::uint64_t>(uabs(v.small()));
    if (p == Prime::two) return __builtin_ctzll(m);
    std::int64_t k = 0;
    while (m % 3 == 0) {
      m /= 3;
      ++k;
    }
    return k;
  }
  const mpz_class z = v.to_mpz();
  if (p == Prime::two) return static_cast<std::int64_t>(mpz_scan1(z.get_mpz_t(), 0));
  mpz_class rest;
  const mpz_class three(3);
  return static_cast<std::int64_t>(
      mpz_remove(rest.get_mpz_t(), z.get_mpz_t(), three.get_mpz_t()));
}

}  // namespace

std::optional<std::int64_t> valuation(const Rational& x, Prime p) {
  if (x.is_zero()) return std::nullopt;
  return integer_valuation(x.numerator(), p) - integer_valuation(x.denominator(), p);
}

Rational padic_norm(const Rational& x, Prime p) {
  const auto v = valuation(x, p);
  if (!v) return {};
  return *v >= 0 ? Rational(Integer(1), prime_power(p, static_cast<unsigned>(*v)))
                 : Rational(prime_power(p, static_cast<unsigned>(-*v)));
}

bool is_padic_integral(const Rational& x, Prime p) {
  const Integer d = x.denominator();
  if (d.is_small()) return d.small() % value(p) != 0;
  return mpz_divisible_ui_p(d.to_mpz().get_mpz_t(), value(p)) == 0;
}

Rational padic_fractional_part(const Rational& x, Prime p) {
  const auto v = valuation(x, p);
  if (!v || *v >= 0) return {};
  const auto j = static_cast<unsigned>(-*v);
  const Integer pj = prime_power(p, j);
  return {padic_residue(x * Rational(pj), p, j), pj};
}

Integer padic_residue(const Rational& x, Prime p, unsigned e) {
  if (!is_padic_integral(x, p)) {
    throw PreconditionError("value " + x.to_string() + " is not " + to_string(p) + "-adic integral");
  }
  if (e == 0) return 0;
  const Integer num = x.numerator();
  const Integer den = x.denominator();
  const std::int64_t m = small_prime_power(p, e);
  if (m != 0 && num.is_small() && den.is_small()) {
    std::int64_t n = num.small() % m;
    if (n < 0) n += m;
    const std::int64_t inv = inverse_mod(den.small() % m, m);
    return Integer(static_cast<std::int64_t>((static_cast<u128>(n) * static_cast<u128>(inv)) %
                                             static_cast<u128>(m)));
  }
  const mpz_class modulus = prime_power(p, e).to_mpz();
  mpz_class inv;
  mpz_invert(inv.get_mpz_t(), den.to_mpz().get_mpz_t(), modulus.get_mpz_t());
  mpz_class r = num.to_mpz() * inv;
  mpz_mod(r.get_mpz_t(), r.get_mpz_t(), modulus.get_mpz_t());
  return Integer(r);
}

unsigned padic_digit(const Rational& x, unsigned n, Prime p) {
  const Integer r = padic_residue(x, p, n + 1);
  const Integer d = floor_div(r, prime_power(p, n));
  return static_cast<unsigned>(d.small());
}

bool in_z_sixth(const Rational& x) {
  Integer d = x.denominator();
  if (d.is_small()) {
    std::uint64_t m = static_cast<std::uint64_t>(d.small());
    m >>= __builtin_ctzll(m);
    while (m % 3 == 0) m /= 3;
    return m == 1;
  }
  mpz_class z = d.to_mpz();
  const mpz_class two(2);
  const mpz_class three(3);
  mpz_remove(z.get_mpz_t(), z.get_mpz_t(), two.get_mpz_t());
  mpz_remove(z.get_mpz_t(), z.get_mpz_t(), three.get_mpz_t());
  return z == 1;
}

}  // namespace solenoid
