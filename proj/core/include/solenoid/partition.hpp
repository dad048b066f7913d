#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "solenoid/box.hpp"
#include "solenoid/direction.hpp"

namespace solenoid {

/// Symbolic code of an atom: the parent atom indices it was cut from.
using Word = std::vector<std::uint32_t>;

/// Default bound on the number of intersections one enumeration may attempt.
inline constexpr std::uint64_t kDefaultCap = 1'000'000;

/// Indexed atoms; atom i carries the symbolic word words[i].
struct Partition {
  std::vector<BoxSet> atoms;
  std::vector<Word> words;

  [[nodiscard]] std::size_t size() const { return atoms.size(); }
};

/// The H(2^a 3^b) atoms [j/H, (j+1)/H) x Z2 x Z3. Rejects (0,0).
Partition xi(std::int64_t a, std::int64_t b);
/// The one-atom partition {X}.
Partition trivial_partition();
/// Atomwise image under alpha^(a,b); words are kept.
Partition image(const Partition& p, std::int64_t a, std::int64_t b);
/// All nonempty pairwise intersections, ordered by (p index, q index).
Partition join(const Partition& p, const Partition& q);
/// Exact check: atoms are nonempty, pairwise disjoint and have total measure 1.
bool is_partition_of_space(const Partition& p);

/// Per-coordinate size of the atoms of a refinement.
///
/// The real diameter of an atom is max(hi) - min(lo) over its boxes (no
/// wraparound). The p-adic fields are the smallest coset exponent over all
/// boxes of all atoms, so the widest p-adic coset has width p^-exp.
struct RefinementReport {
  int depth = 0;
  std::uint64_t atom_count = 0;
  Rational real_diam_max;
  unsigned two_exp_min = 0;
  unsigned three_exp_min = 0;
  bool all_rectangles = true;
};

struct AtomShape {
  Rational real_diam;
  unsigned two_exp = 0;
  unsigned three_exp = 0;
  bool rectangle = false;
};

/// Shape of a nonempty normalized box list.
AtomShape atom_shape(std::span<const Box> boxes);

struct OrbitJoin {
  Partition partition;
  RefinementReport report;
};

/// The join of alpha^(ja, jb)(xi^(a,b)) for j_min <= j <= j_max; words are
/// (i_{j_min}, ..., i_{j_max}) and atoms come in lexicographic word order.
/// Throws ResourceLimitError after `cap` attempted intersections.
OrbitJoin orbit_join(std::int64_t a, std::int64_t b, int j_min, int j_max,
                     std::uint64_t cap = kDefaultCap);

/// Same report as orbit_join without materializing the atoms.
RefinementReport orbit_join_report(std::int64_t a, std::int64_t b, int j_min, int j_max,
                                   std::uint64_t cap = kDefaultCap);

/// alpha(A_{i_1}) n ... n alpha^n(A_{i_n}) for a, b > 0, named by
/// k = i_n and ells = (i_{n-1}, ..., i_1):
/// [0,1) x (2^(an) Z2 - C) x (3^(bn) Z3 - C) with C = k H^(n-1) + ells[0] H^(n-2) + ... .
Box closed_form_forward_atom(std::int64_t a, std::int64_t b, std::uint32_t k,
                             std::span<const std::uint32_t> ells);

/// A_{i_0} n alpha^-1(A_{i_1}) n ... n alpha^-n(A_{i_n}) for a, b > 0, named by
/// k = i_n and ells = (i_{n-1}, ..., i_0):
/// [k/H^(n+1) + D, (k+1)/H^(n+1) + D) x Z2 x Z3 with D = sum_i ells[i-1]/H^(n+1-i).
Box closed_form_backward_atom(std::int64_t a, std::int64_t b, std::uint32_t k,
                              std::span<const std::uint32_t> ells);

struct MarkovReport {
  std::int64_t a = 0;
  std::int64_t b = 0;
  int depth = 0;
  bool passed = false;
  std::uint64_t forward_cylinders = 0;    ///< nonempty words i_0..i_n
  std::uint64_t backward_cylinders = 0;   ///< nonempty words i_-n..i_0
  std::uint64_t two_sided_cylinders = 0;  ///< nonempty words i_-n..i_n
  std::uint64_t pairs_checked = 0;
  bool full_shift = false;
  std::optional<Word> counterexample;     ///< i_-n..i_n
};

/// Checks, over all words of length 2n+1, that a nonempty forward cylinder
/// and a nonempty backward cylinder sharing i_0 always meet.
MarkovReport markov_check(std::int64_t a, std::int64_t b, int n, std::uint64_t cap = kDefaultCap);

struct TransitionMatrix {
  std::size_t size = 0;
  std::vector<std::uint8_t> allowed;  ///< row-major

  [[nodiscard]] bool at(std::size_t i, std::size_t j) const { return allowed[i * size + j] != 0; }
};

/// Entry (i,j) is set iff alpha^(a,b)(A_i) meets A_j.
TransitionMatrix transition_matrix(std::int64_t a, std::int64_t b);
/// Number of allowed words of length n >= 1.
Integer count_words(const TransitionMatrix& m, unsigned n);
/// trace(M^n): periodic points of period n of the subshift.
Integer count_periodic_words(const TransitionMatrix& m, unsigned n);

struct GeneratorProfile {
  std::int64_t a = 0;
  std::int64_t b = 0;
  RefinementReport baseline;              ///< xi itself (depth 0)
  std::vector<RefinementReport> reports;  ///< depths 1..n_max
  bool generating_trend = false;
  std::vector<Place> obstructed;          ///< coordinates whose width never shrinks
};

/// Refinement reports of the orbit joins over [-n, n] for n = 1..n_max.
GeneratorProfile generator_profile(std::int64_t a, std::int64_t b, int n_max,
                                   std::uint64_t cap = kDefaultCap);

}  // namespace solenoid
