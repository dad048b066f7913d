#include "solenoid/direction.hpp"

#include "solenoid/errors.hpp"

namespace solenoid {

namespace {

void require_nonzero(std::int64_t a, std::int64_t b) {
  if (a == 0 && b == 0) throw PreconditionError("direction (0,0) has no partition or height");
}

// 2^max(a,0) 3^max(b,0) and 2^max(-a,0) 3^max(-b,0).
std::pair<Integer, Integer> num_den(std::int64_t a, std::int64_t b) {
  const auto ua = static_cast<unsigned>(a < 0 ? -a : a);
  const auto ub = static_cast<unsigned>(b < 0 ? -b : b);
  Integer num = 1;
  Integer den = 1;
  (a >= 0 ? num : den) *= prime_power(Prime::two, ua);
  (b >= 0 ? num : den) *= prime_power(Prime::three, ub);
  return {num, den};
}

Stability sign_to_stability(int s) {
  if (s > 0) return Stability::unstable;
  if (s < 0) return Stability::stable;
  return Stability::neutral;
}

}  // namespace

Integer height(std::int64_t a, std::int64_t b) {
  require_nonzero(a, b);
  auto [num, den] = num_den(a, b);
  return std::max(num, den);
}

Entropy entropy(std::int64_t a, std::int64_t b) { return {height(a, b)}; }

LyapunovTriple lyapunov(std::int64_t a, std::int64_t b) {
  return {{LogCoefficients{a, b}, LogCoefficients{-a, 0}, LogCoefficients{0, -b}}};
}

const char* to_string(Cone c) {
  switch (c) {
    case Cone::positive_quadrant:
      return "a>0,b>0";
    case Cone::a_neg_b_pos_expanding:
      return "a<0,b>0,2^a3^b>1";
    case Cone::a_pos_b_neg_expanding:
      return "a>0,b<0,2^a3^b>1";
    case Cone::negative_quadrant:
      return "a<0,b<0";
    case Cone::a_pos_b_neg_contracting:
      return "a>0,b<0,2^a3^b<1";
    case Cone::a_neg_b_pos_contracting:
      return "a<0,b>0,2^a3^b<1";
    case Cone::line_a0:
      return "line_a0";
    case Cone::line_b0:
      return "line_b0";
    case Cone::origin:
      return "origin";
  }
  return "?";
}

const char* to_string(Stability s) {
  switch (s) {
    case Stability::stable:
      return "stable";
    case Stability::unstable:
      return "unstable";
    case Stability::neutral:
      return "neutral";
  }
  return "?";
}

const char* short_name(Stability s) {
  switch (s) {
    case Stability::stable:
      return "s";
    case Stability::unstable:
      return "u";
    case Stability::neutral:
      return "n";
  }
  return "?";
}

DirectionClass classify(std::int64_t a, std::int64_t b) {
  DirectionClass out;
  out.a = a;
  out.b = b;
  // Real exponent a log2 + b log3 has the sign of (2^a+ 3^b+) - (2^a- 3^b-).
  const auto [num, den] = num_den(a, b);
  const int real_sign = (num > den) - (num < den);
  out.signature = {sign_to_stability(real_sign), sign_to_stability((a < 0) - (a > 0)),
                   sign_to_stability((b < 0) - (b > 0))};
  out.expansive = a != 0 && b != 0;
  if (a == 0 && b == 0) {
    out.cone = Cone::origin;
  } else if (a == 0) {
    out.cone = Cone::line_a0;
  } else if (b == 0) {
    out.cone = Cone::line_b0;
  } else if (a > 0 && b > 0) {
    out.cone = Cone::positive_quadrant;
  } else if (a < 0 && b < 0) {
    out.cone = Cone::negative_quadrant;
  } else if (a < 0) {
    out.cone = real_sign > 0 ? Cone::a_neg_b_pos_expanding : Cone::a_neg_b_pos_contracting;
  } else {
    out.cone = real_sign > 0 ? Cone::a_pos_b_neg_expanding : Cone::a_pos_b_neg_contracting;
  }
  return out;
}

Rational periodic_point_count(std::int64_t a, std::int64_t b, unsigned n) {
  require_nonzero(a, b);
  if (n == 0) throw PreconditionError("period must be positive");
  const Rational x = two_three_power(a * static_cast<std::int64_t>(n), b * static_cast<std::int64_t>(n)) -
                     Rational(1);
  return abs(x) * padic_norm(x, Prime::two) * padic_norm(x, Prime::three);
}

std::vector<Rational> exp_log_series(const std::vector<Rational>& counts) {
  // Z = exp(L) with L' = sum F_n z^(n-1) gives k c_k = sum_{n=1}^k F_n c_{k-n}.
  std::vector<Rational> c(counts.size() + 1);
  c[0] = 1;
  for (std::size_t k = 1; k <= counts.size(); ++k) {
    Rational acc;
    for (std::size_t n = 1; n <= k; ++n) acc += counts[n - 1] * c[k - n];
    c[k] = acc / Rational(static_cast<std::int64_t>(k));
  }
  return c;
}

std::vector<Rational> rational_zeta_coefficients(const Rational& low, const Rational& high, unsigned order) {
  std::vector<Rational> c(order + 1);
  c[0] = 1;
  Rational high_pow = 1;
  for (unsigned k = 1; k <= order; ++k) {
    c[k] = high_pow * (high - low);
    high_pow *= high;
  }
  return c;
}

ZetaSeries zeta_series(std::int64_t a, std::int64_t b, unsigned order) {
  require_nonzero(a, b);
  if (order == 0) throw PreconditionError("zeta order must be positive");
  ZetaSeries z;
  z.a = a;
  z.b = b;
  for (unsigned n = 1; n <= order; ++n) z.counts.push_back(periodic_point_count(a, b, n));
  z.series = exp_log_series(z.counts);

  const Integer h = height(a, b);
  Integer hp = 1;
  for (unsigned n = 1; n <= order; ++n) {
    hp *= h;
    z.cover_counts.push_back(hp);
  }
  z.cover_series = rational_zeta_coefficients(0, Rational(h), order);

  const DirectionClass cls = classify(a, b);
  if (cls.cone == Cone::positive_quadrant) {
    ClosedFormZeta cf;
    cf.expression = "(1-z)/(1-" + h.to_string() + "z)";
    cf.coefficients = rational_zeta_coefficients(1, Rational(h), order);
    cf.matches = cf.coefficients == z.series;
    z.closed_form = std::move(cf);
  } else if (cls.cone == Cone::a_neg_b_pos_expanding) {
    const Integer two_abs = prime_power(Prime::two, static_cast<unsigned>(-a));
    const Integer three_b = prime_power(Prime::three, static_cast<unsigned>(b));
    ClosedFormZeta cf;
    cf.expression = "(1-" + two_abs.to_string() + "z)/(1-" + three_b.to_string() + "z)";
    cf.coefficients = rational_zeta_coefficients(Rational(two_abs), Rational(three_b), order);
    cf.matches = cf.coefficients == z.series;
    z.closed_form = std::move(cf);

    ClosedFormZeta printed;
    const Rational two_signed = two_three_power(a, 0);
    printed.expression = "(1-2^a z)/(1-3^b z) with a=" + std::to_string(a) + ": (1-" +
                         two_signed.to_string() + "z)/(1-" + three_b.to_string() + "z)";
    printed.coefficients = rational_zeta_coefficients(two_signed, Rational(three_b), order);
    printed.matches = printed.coefficients == z.series;
    z.printed_formula = std::move(printed);
    if (!z.printed_formula->matches) {
      z.notes.push_back(
          "the printed formula (1-2^a z)/(1-3^b z) does not match the adelic periodic-point "
          "count for negative a; the count matches (1-2^|a| z)/(1-3^b z)");
    }
  }
  if (!cls.expansive) {
    z.notes.push_back("non-expansive direction: no rational closed form is asserted");
  }
  return z;
}

}  // namespace solenoid
