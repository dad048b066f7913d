#pragma once

#include <cstdint>
#include <vector>

#include "solenoid/rational.hpp"

namespace solenoid {

/// An element of G = R x Q2 x Q3 with rational coordinates.
struct AdeleTriple {
  Rational real;
  Rational two;
  Rational three;

  friend bool operator==(const AdeleTriple&, const AdeleTriple&) = default;
};

/// Canonical coset representative in the fundamental domain
/// F = [0,1) x Z2 x Z3: 0 <= real < 1, `two` is 2-integral and `three` is
/// 3-integral.
class SolenoidPoint {
 public:
  /// The identity (0, 0, 0).
  SolenoidPoint() = default;
  /// Throws PreconditionError when the coordinates are outside F.
  SolenoidPoint(Rational real, Rational two, Rational three);

  [[nodiscard]] const Rational& real() const { return real_; }
  [[nodiscard]] const Rational& two() const { return two_; }
  [[nodiscard]] const Rational& three() const { return three_; }
  [[nodiscard]] AdeleTriple as_triple() const { return {real_, two_, three_}; }

  friend bool operator==(const SolenoidPoint&, const SolenoidPoint&) = default;

 private:
  Rational real_;
  Rational two_;
  Rational three_;
};

bool in_fundamental_domain(const AdeleTriple& g);

struct Reduction {
  SolenoidPoint point;
  /// The Z[1/6] translate removed: point + (shift, shift, shift) == input.
  Rational shift;
};

/// Brings an arbitrary rational element of G into F by subtracting the
/// diagonal element r = {x2}_2 + {x3}_3 + floor(x_real - {x2}_2 - {x3}_3).
Reduction reduce_to_fundamental_domain(const AdeleTriple& g);

/// Group law on F: coordinatewise sum carried back into F.
SolenoidPoint add(const SolenoidPoint& s, const SolenoidPoint& t);
SolenoidPoint neg(const SolenoidPoint& x);

/// The automorphism alpha^(a,b): multiplication by 2^a 3^b, then reduction.
SolenoidPoint act(const SolenoidPoint& x, std::int64_t a, std::int64_t b);

struct DistanceBounds {
  unsigned denom_bound = 3;
  unsigned height_bound = 3;
};

/// Upper bound for the quotient metric: the minimum, over diagonal shifts
/// r = u/6^k with k <= denom_bound and |u| <= height_bound 6^k, of the largest
/// of the three place norms of x - y + r.
Rational distance(const SolenoidPoint& x, const SolenoidPoint& y, DistanceBounds bounds = {});

/// Projective-limit coordinates z_0..z_K with 6 z_{k+1} = z_k (mod 1).
struct WilsonTrace {
  std::vector<Rational> levels;

  friend bool operator==(const WilsonTrace&, const WilsonTrace&) = default;
};

/// Digits recovered from a trace of depth K.
struct WilsonDigits {
  Rational real;
  Integer two_mod;    ///< x_two mod 2^K
  Integer three_mod;  ///< x_three mod 3^K
  unsigned depth = 0;

  friend bool operator==(const WilsonDigits&, const WilsonDigits&) = default;
};

WilsonTrace wilson_forward(const SolenoidPoint& x, unsigned depth);

/// Inverse of wilson_forward on the first K digits. Throws PreconditionError
/// on an empty trace, a level outside [0,1), or a step with 6 z_{k+1} - z_k
/// not an integer.
WilsonDigits wilson_backward(const WilsonTrace& trace);

}  // namespace solenoid
