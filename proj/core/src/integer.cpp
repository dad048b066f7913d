#include "solenoid/integer.hpp"

#include <ostream>

#include "solenoid/errors.hpp"
#include "wide.hpp"

namespace solenoid {

using detail::fits_i64;
using detail::i128;

namespace {

Integer from_wide(i128 v) {
  if (fits_i64(v)) return Integer(static_cast<std::int64_t>(v));
  return Integer(detail::to_mpz(v));
}

}  // namespace

Integer::Integer(const mpz_class& v) {
  if (detail::mpz_fits_i64(v)) {
    rep_ = detail::mpz_to_i64(v);
  } else {
    rep_ = v;
  }
}

Integer Integer::parse(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw ParseError("empty integer literal");
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) throw ParseError("malformed integer literal '" + s + "'");
  for (std::size_t k = i; k < s.size(); ++k) {
    if (s[k] < '0' || s[k] > '9') throw ParseError("malformed integer literal '" + s + "'");
  }
  if (s[0] == '+') s.erase(0, 1);
  return Integer(mpz_class(s, 10));
}

mpz_class Integer::to_mpz() const {
  if (is_small()) return mpz_class(static_cast<long>(small()));
  return std::get<mpz_class>(rep_);
}

int Integer::sign() const {
  if (is_small()) return (small() > 0) - (small() < 0);
  return sgn(std::get<mpz_class>(rep_));
}

std::string Integer::to_string() const {
  if (is_small()) return std::to_string(small());
  return std::get<mpz_class>(rep_).get_str();
}

Integer Integer::operator-() const {
  if (is_small()) return from_wide(-static_cast<i128>(small()));
  return Integer(mpz_class(-std::get<mpz_class>(rep_)));
}

Integer operator+(const Integer& a, const Integer& b) {
  if (a.is_small() && b.is_small()) return from_wide(static_cast<i128>(a.small()) + b.small());
  return Integer(mpz_class(a.to_mpz() + b.to_mpz()));
}

Integer operator-(const Integer& a, const Integer& b) {
  if (a.is_small() && b.is_small()) return from_wide(static_cast<i128>(a.small()) - b.small());
  return Integer(mpz_class(a.to_mpz() - b.to_mpz()));
}

Integer operator*(const Integer& a, const Integer& b) {
  if (a.is_small() && b.is_small()) return from_wide(static_cast<i128>(a.small()) * b.small());
  return Integer(mpz_class(a.to_mpz() * b.to_mpz()));
}

bool operator==(const Integer& a, const Integer& b) {
  if (a.is_small() != b.is_small()) return false;
  if (a.is_small()) return a.small() == b.small();
  return std::get<mpz_class>(a.rep_) == std::get<mpz_class>(b.rep_);
}

std::strong_ordering operator<=>(const Integer& a, const Integer& b) {
  if (a.is_small() && b.is_small()) return a.small() <=> b.small();
  const int c = cmp(a.to_mpz(), b.to_mpz());
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

Integer abs(const Integer& a) { return a.sign() < 0 ? -a : a; }

Integer floor_div(const Integer& a, const Integer& b) {
  if (b.is_zero()) throw PreconditionError("integer division by zero");
  if (a.is_small() && b.is_small()) {
    const i128 n = a.small();
    const i128 d = b.small();
    i128 q = n / d;
    if ((n % d != 0) && ((n < 0) != (d < 0))) --q;
    return from_wide(q);
  }
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), a.to_mpz().get_mpz_t(), b.to_mpz().get_mpz_t());
  return Integer(q);
}

Integer mod(const Integer& a, const Integer& m) {
  if (m.is_zero()) throw PreconditionError("integer modulus is zero");
  if (a.is_small() && m.is_small()) {
    const i128 mm = m.small() < 0 ? -static_cast<i128>(m.small()) : m.small();
    i128 r = static_cast<i128>(a.small()) % mm;
    if (r < 0) r += mm;
    return from_wide(r);
  }
  mpz_class r;
  const mpz_class mm = abs(m.to_mpz());
  mpz_mod(r.get_mpz_t(), a.to_mpz().get_mpz_t(), mm.get_mpz_t());
  return Integer(r);
}

Integer gcd(const Integer& a, const Integer& b) {
  if (a.is_small() && b.is_small()) {
    return from_wide(static_cast<i128>(
        detail::gcd128(detail::uabs(a.small()), detail::uabs(b.small()))));
  }
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a.to_mpz().get_mpz_t(), b.to_mpz().get_mpz_t());
  return Integer(g);
}

Integer pow(const Integer& base, unsigned exp) {
  Integer result(1);
  Integer b = base;
  while (exp != 0) {
    if (exp & 1U) result *= b;
    exp >>= 1U;
    if (exp != 0) b *= b;
  }
  return result;
}

std::ostream& operator<<(std::ostream& os, const Integer& v) { return os << v.to_string(); }

}  // namespace solenoid
