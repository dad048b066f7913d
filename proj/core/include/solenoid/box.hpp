#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "solenoid/point.hpp"
#include "solenoid/rational.hpp"

namespace solenoid {

/// The p-adic coset residue + p^exp Z_p, with 0 <= residue < p^exp.
/// exp == 0 is the whole ring Z_p.
struct PadicClass {
  Prime prime = Prime::two;
  Integer residue = 0;
  unsigned exp = 0;

  PadicClass() = default;
  /// Throws PreconditionError when the residue is out of range.
  PadicClass(Prime p, Integer residue, unsigned exp);
  static PadicClass whole(Prime p) { return {p, 0, 0}; }

  /// Ordered by (exp, residue); the prime is assumed equal.
  friend std::strong_ordering operator<=>(const PadicClass& a, const PadicClass& b);
  friend bool operator==(const PadicClass& a, const PadicClass& b) = default;
};

/// The p^(new_exp - c.exp) subcosets of c at exponent new_exp, in residue order.
std::vector<PadicClass> refine_class(const PadicClass& c, unsigned new_exp);

/// Nonempty intersection of two cosets of the same prime (the finer one), if any.
std::optional<PadicClass> meet(const PadicClass& a, const PadicClass& b);
bool compatible(const PadicClass& a, const PadicClass& b);
bool contains(const PadicClass& c, const Rational& x);

/// [lo, hi) x cls2 x cls3 with 0 <= lo < hi <= 1 and lo, hi in Z[1/6].
class Box {
 public:
  /// Throws PreconditionError when the invariants fail.
  Box(Rational lo, Rational hi, PadicClass two, PadicClass three);
  /// [lo, hi) x Z2 x Z3.
  static Box interval(Rational lo, Rational hi);

  [[nodiscard]] const Rational& lo() const { return lo_; }
  [[nodiscard]] const Rational& hi() const { return hi_; }
  [[nodiscard]] const PadicClass& two() const { return two_; }
  [[nodiscard]] const PadicClass& three() const { return three_; }
  [[nodiscard]] Rational width() const { return hi_ - lo_; }

  friend bool operator==(const Box&, const Box&) = default;

 private:
  Rational lo_;
  Rational hi_;
  PadicClass two_;
  PadicClass three_;
};

/// Lexicographic (cls2.exp, cls2.residue, cls3.exp, cls3.residue, lo, hi).
bool canonical_less(const Box& a, const Box& b);

std::optional<Box> intersect(const Box& a, const Box& b);
bool intersects(const Box& a, const Box& b);
bool contains_point(const Box& box, const SolenoidPoint& x);
Rational haar_measure(const Box& box);

/// A finite disjoint union of boxes kept in normalized order.
class BoxSet {
 public:
  BoxSet() = default;
  /// Normalizes; throws PreconditionError if two boxes overlap.
  explicit BoxSet(std::vector<Box> boxes);
  BoxSet(std::initializer_list<Box> boxes) : BoxSet(std::vector<Box>(boxes)) {}

  /// Skips the overlap check; the caller guarantees disjointness.
  static BoxSet from_disjoint(std::vector<Box> boxes);
  /// Skips both the overlap check and normalization.
  static BoxSet from_disjoint_raw(std::vector<Box> boxes);
  static BoxSet whole_space();

  [[nodiscard]] const std::vector<Box>& boxes() const { return boxes_; }
  [[nodiscard]] std::size_t size() const { return boxes_.size(); }
  [[nodiscard]] bool empty() const { return boxes_.empty(); }

  /// Representation equality; see equals() for set equality.
  friend bool operator==(const BoxSet&, const BoxSet&) = default;

 private:
  std::vector<Box> boxes_;
};

/// Merges real-adjacent boxes with equal cosets and complete sibling cosets
/// over equal real intervals until nothing changes, then sorts canonically.
std::vector<Box> normalize(std::vector<Box> boxes);
bool pairwise_disjoint(std::span<const Box> boxes);

BoxSet intersect(const BoxSet& s, const BoxSet& t);
bool intersects(const BoxSet& s, const BoxSet& t);
BoxSet unite(const BoxSet& s, const BoxSet& t);
BoxSet subtract(const BoxSet& s, const BoxSet& t);
inline bool is_empty(const BoxSet& s) { return s.empty(); }
/// Set equality (both differences empty), independent of representation.
bool equals(const BoxSet& s, const BoxSet& t);
Rational haar_measure(const BoxSet& s);
bool contains_point(const BoxSet& s, const SolenoidPoint& x);

/// Image of a box under alpha^(a,b), as disjoint (unnormalized) boxes.
std::vector<Box> image(const Box& box, std::int64_t a, std::int64_t b);
BoxSet image(const BoxSet& s, std::int64_t a, std::int64_t b);

}  // namespace solenoid
