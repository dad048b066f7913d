#include "solenoid/point.hpp"

#include <algorithm>
#include <optional>

#include "solenoid/errors.hpp"

namespace solenoid {

bool in_fundamental_domain(const AdeleTriple& g) {
  return g.real.sign() >= 0 && g.real < Rational(1) && is_padic_integral(g.two, Prime::two) &&
         is_padic_integral(g.three, Prime::three);
}

SolenoidPoint::SolenoidPoint(Rational real, Rational two, Rational three)
    : real_(std::move(real)), two_(std::move(two)), three_(std::move(three)) {
  if (!in_fundamental_domain({real_, two_, three_})) {
    throw PreconditionError("point (" + real_.to_string() + ", " + two_.to_string() + ", " +
                            three_.to_string() + ") is not in [0,1) x Z2 x Z3");
  }
}

Reduction reduce_to_fundamental_domain(const AdeleTriple& g) {
  const Rational frac2 = padic_fractional_part(g.two, Prime::two);
  const Rational frac3 = padic_fractional_part(g.three, Prime::three);
  const Rational shift = frac2 + frac3 + Rational(floor(g.real - frac2 - frac3));
  return {SolenoidPoint(g.real - shift, g.two - shift, g.three - shift), shift};
}

SolenoidPoint add(const SolenoidPoint& s, const SolenoidPoint& t) {
  const auto [carry, real] = floor_frac(s.real() + t.real());
  const Rational c(carry);
  return {real, s.two() + t.two() - c, s.three() + t.three() - c};
}

SolenoidPoint neg(const SolenoidPoint& x) {
  return reduce_to_fundamental_domain({-x.real(), -x.two(), -x.three()}).point;
}

SolenoidPoint act(const SolenoidPoint& x, std::int64_t a, std::int64_t b) {
  if (a == 0 && b == 0) return x;
  const Rational q = two_three_power(a, b);
  return reduce_to_fundamental_domain({q * x.real(), q * x.two(), q * x.three()}).point;
}

Rational distance(const SolenoidPoint& x, const SolenoidPoint& y, DistanceBounds bounds) {
  const AdeleTriple diff{x.real() - y.real(), x.two() - y.two(), x.three() - y.three()};
  std::optional<Rational> best;
  Integer scale = 1;
  for (unsigned k = 0; k <= bounds.denom_bound; ++k, scale *= 6) {
    const Integer limit = Integer(static_cast<std::int64_t>(bounds.height_bound)) * scale;
    for (Integer u = -limit; u <= limit; u += 1) {
      const Rational r(u, scale);
      const Rational norm = std::max({abs(diff.real + r), padic_norm(diff.two + r, Prime::two),
                                      padic_norm(diff.three + r, Prime::three)});
      if (!best || norm < *best) best = norm;
    }
  }
  return *best;
}

WilsonTrace wilson_forward(const SolenoidPoint& x, unsigned depth) {
  WilsonTrace trace;
  trace.levels.reserve(depth + 1);
  trace.levels.push_back(x.real());
  const Rational sixth(Integer(1), Integer(6));
  for (unsigned k = 0; k < depth; ++k) {
    const auto d2 = static_cast<std::int64_t>(padic_digit(x.two(), k, Prime::two));
    const auto d3 = static_cast<std::int64_t>(padic_digit(x.three(), k, Prime::three));
    trace.levels.push_back(trace.levels.back() * sixth + Rational(Integer(3 * d2 + d3), Integer(6)));
  }
  return trace;
}

WilsonDigits wilson_backward(const WilsonTrace& trace) {
  if (trace.levels.empty()) throw PreconditionError("Wilson trace has no levels");
  for (const Rational& z : trace.levels) {
    if (z.sign() < 0 || z >= Rational(1)) {
      throw PreconditionError("Wilson level " + z.to_string() + " is outside [0,1)");
    }
  }
  WilsonDigits out;
  out.real = trace.levels.front();
  out.depth = static_cast<unsigned>(trace.levels.size() - 1);
  out.two_mod = 0;
  out.three_mod = 0;
  Integer p2 = 1;
  Integer p3 = 1;
  for (std::size_t k = 0; k + 1 < trace.levels.size(); ++k) {
    const Rational step = Rational(6) * trace.levels[k + 1] - trace.levels[k];
    if (!step.is_integer()) {
      throw PreconditionError("Wilson levels " + std::to_string(k) + " and " +
                              std::to_string(k + 1) + " violate 6 z_{k+1} = z_k (mod 1)");
    }
    const Integer m = step.numerator();
    // 6 z_{k+1} - z_k lies in (-1, 6), so m = 3 d2 + d3 has a unique digit pair.
    if (m.sign() < 0 || m > Integer(5)) {
      throw PreconditionError("Wilson step " + std::to_string(k) + " admits no digit pair");
    }
    const std::int64_t v = m.small();
    out.two_mod += Integer(v / 3) * p2;
    out.three_mod += Integer(v % 3) * p3;
    p2 *= 2;
    p3 *= 3;
  }
  return out;
}

}  // namespace solenoid
