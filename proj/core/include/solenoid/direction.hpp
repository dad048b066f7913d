#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "solenoid/rational.hpp"

namespace solenoid {

/// Naive height of 2^a 3^b in lowest terms: max(|numerator|, denominator).
/// Throws PreconditionError for (0,0).
Integer height(std::int64_t a, std::int64_t b);

/// Topological entropy log H, kept symbolic: only the base H is stored.
struct Entropy {
  Integer base;
  [[nodiscard]] std::string to_string() const { return "log " + base.to_string(); }
};

Entropy entropy(std::int64_t a, std::int64_t b);

enum class Stability { stable, unstable, neutral };

/// Lyapunov exponent c2 log 2 + c3 log 3, stored exactly.
struct LogCoefficients {
  std::int64_t c2 = 0;
  std::int64_t c3 = 0;
  friend bool operator==(const LogCoefficients&, const LogCoefficients&) = default;
};

/// Exponents at the places (R, Q2, Q3) = ((a, b), (-a, 0), (0, -b)).
struct LyapunovTriple {
  std::array<LogCoefficients, 3> coefficients;
};

LyapunovTriple lyapunov(std::int64_t a, std::int64_t b);

enum class Cone {
  positive_quadrant,      ///< a>0, b>0
  a_neg_b_pos_expanding,  ///< a<0, b>0, 2^a 3^b > 1
  a_pos_b_neg_expanding,  ///< a>0, b<0, 2^a 3^b > 1
  negative_quadrant,      ///< a<0, b<0
  a_pos_b_neg_contracting,///< a>0, b<0, 2^a 3^b < 1
  a_neg_b_pos_contracting,///< a<0, b>0, 2^a 3^b < 1
  line_a0,
  line_b0,
  origin,
};

/// Human-readable label, e.g. "a<0,b>0,2^a3^b>1".
const char* to_string(Cone c);
const char* to_string(Stability s);
/// "u", "s" or "n".
const char* short_name(Stability s);

struct DirectionClass {
  std::int64_t a = 0;
  std::int64_t b = 0;
  /// Indexed by place: real, two_adic, three_adic.
  std::array<Stability, 3> signature{};
  Cone cone = Cone::origin;
  bool expansive = false;
};

DirectionClass classify(std::int64_t a, std::int64_t b);

/// Number of points of period n: the product over v in {inf, 2, 3} of
/// |q^n - 1|_v with q = 2^a 3^b.
Rational periodic_point_count(std::int64_t a, std::int64_t b, unsigned n);

/// Coefficients c_0..c_N of exp(sum_{n=1}^N F_n z^n / n).
std::vector<Rational> exp_log_series(const std::vector<Rational>& counts);

/// Coefficients c_0..c_N of (1 - low z)/(1 - high z).
std::vector<Rational> rational_zeta_coefficients(const Rational& low, const Rational& high, unsigned order);

struct ClosedFormZeta {
  std::string expression;
  std::vector<Rational> coefficients;
  bool matches = false;
};

struct ZetaSeries {
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::vector<Rational> counts;             ///< F_1..F_N
  std::vector<Rational> series;             ///< exp(sum F_n z^n/n), c_0..c_N
  std::vector<Integer> cover_counts;        ///< H^1..H^N (symbolic cover)
  std::vector<Rational> cover_series;       ///< 1/(1 - H z), c_0..c_N
  std::optional<ClosedFormZeta> closed_form;
  /// Literal formula printed for the region a<0, b>0, 2^a3^b>1, evaluated
  /// with the signed exponent a; only present in that region.
  std::optional<ClosedFormZeta> printed_formula;
  std::vector<std::string> notes;
};

ZetaSeries zeta_series(std::int64_t a, std::int64_t b, unsigned order);

}  // namespace solenoid
