#include "solenoid/box.hpp"

#include <algorithm>
#include <tuple>

#include "solenoid/errors.hpp"

namespace solenoid {

// ---------------------------------------------------------------------------
// PadicClass

PadicClass::PadicClass(Prime p, Integer res, unsigned e) : prime(p), residue(std::move(res)), exp(e) {
  if (residue.sign() < 0 || residue >= prime_power(prime, exp)) {
    throw PreconditionError("residue " + residue.to_string() + " out of range for modulus " +
                            to_string(prime) + "^" + std::to_string(exp));
  }
}

std::strong_ordering operator<=>(const PadicClass& a, const PadicClass& b) {
  if (a.exp != b.exp) return a.exp <=> b.exp;
  return a.residue <=> b.residue;
}

std::vector<PadicClass> refine_class(const PadicClass& c, unsigned new_exp) {
  if (new_exp < c.exp) {
    throw PreconditionError("cannot refine a class of exponent " + std::to_string(c.exp) +
                            " to exponent " + std::to_string(new_exp));
  }
  const Integer step = prime_power(c.prime, c.exp);
  const Integer count = prime_power(c.prime, new_exp - c.exp);
  if (!count.is_small()) throw ResourceLimitError("coset refinement too large");
  std::vector<PadicClass> out;
  out.reserve(static_cast<std::size_t>(count.small()));
  Integer r = c.residue;
  for (std::int64_t i = 0; i < count.small(); ++i, r += step) out.emplace_back(c.prime, r, new_exp);
  return out;
}

std::optional<PadicClass> meet(const PadicClass& a, const PadicClass& b) {
  if (!compatible(a, b)) return std::nullopt;
  return a.exp >= b.exp ? a : b;
}

bool compatible(const PadicClass& a, const PadicClass& b) {
  const PadicClass& coarse = a.exp <= b.exp ? a : b;
  const PadicClass& fine = a.exp <= b.exp ? b : a;
  if (coarse.exp == 0) return true;
  if (coarse.exp == fine.exp) return coarse.residue == fine.residue;
  return mod(fine.residue, prime_power(coarse.prime, coarse.exp)) == coarse.residue;
}

bool contains(const PadicClass& c, const Rational& x) {
  if (!is_padic_integral(x, c.prime)) return false;
  return c.exp == 0 || padic_residue(x, c.prime, c.exp) == c.residue;
}

// ---------------------------------------------------------------------------
// Box

Box::Box(Rational lo, Rational hi, PadicClass two, PadicClass three)
    : lo_(std::move(lo)), hi_(std::move(hi)), two_(std::move(two)), three_(std::move(three)) {
  if (lo_.sign() < 0 || !(lo_ < hi_) || hi_ > Rational(1)) {
    throw PreconditionError("box interval [" + lo_.to_string() + ", " + hi_.to_string() +
                            ") is not a nonempty subinterval of [0,1)");
  }
  if (!in_z_sixth(lo_) || !in_z_sixth(hi_)) {
    throw PreconditionError("box endpoints must lie in Z[1/6]");
  }
  if (two_.prime != Prime::two || three_.prime != Prime::three) {
    throw PreconditionError("box cosets must be 2-adic then 3-adic");
  }
}

Box Box::interval(Rational lo, Rational hi) {
  return {std::move(lo), std::move(hi), PadicClass::whole(Prime::two),
          PadicClass::whole(Prime::three)};
}

bool canonical_less(const Box& a, const Box& b) {
  if (auto c = a.two() <=> b.two(); c != 0) return c < 0;
  if (auto c = a.three() <=> b.three(); c != 0) return c < 0;
  if (auto c = a.lo() <=> b.lo(); c != 0) return c < 0;
  return a.hi() < b.hi();
}

bool intersects(const Box& a, const Box& b) {
  return a.lo() < b.hi() && b.lo() < a.hi() && compatible(a.two(), b.two()) &&
         compatible(a.three(), b.three());
}

std::optional<Box> intersect(const Box& a, const Box& b) {
  if (!(a.lo() < b.hi() && b.lo() < a.hi())) return std::nullopt;
  auto two = meet(a.two(), b.two());
  if (!two) return std::nullopt;
  auto three = meet(a.three(), b.three());
  if (!three) return std::nullopt;
  return Box(std::max(a.lo(), b.lo()), std::min(a.hi(), b.hi()), std::move(*two),
             std::move(*three));
}

bool contains_point(const Box& box, const SolenoidPoint& x) {
  return box.lo() <= x.real() && x.real() < box.hi() && contains(box.two(), x.two()) &&
         contains(box.three(), x.three());
}

Rational haar_measure(const Box& box) {
  return box.width() /
         Rational(prime_power(Prime::two, box.two().exp) * prime_power(Prime::three, box.three().exp));
}

// ---------------------------------------------------------------------------
// Normalization

namespace {

bool merge_real_adjacent(std::vector<Box>& boxes) {
  std::sort(boxes.begin(), boxes.end(), canonical_less);
  bool changed = false;
  std::vector<Box> out;
  out.reserve(boxes.size());
  for (Box& b : boxes) {
    if (!out.empty()) {
      const Box& last = out.back();
      if (last.two() == b.two() && last.three() == b.three() && last.hi() == b.lo()) {
        out.back() = Box(last.lo(), b.hi(), last.two(), last.three());
        changed = true;
        continue;
      }
    }
    out.push_back(std::move(b));
  }
  boxes = std::move(out);
  return changed;
}

// Replaces every complete family of p sibling cosets over the same real
// interval (and same other coset) by their parent coset.
bool merge_siblings(std::vector<Box>& boxes, Prime p) {
  const auto cls = [p](const Box& b) -> const PadicClass& { return p == Prime::two ? b.two() : b.three(); };
  const auto other = [p](const Box& b) -> const PadicClass& { return p == Prime::two ? b.three() : b.two(); };
  const auto parent_residue = [&](const Box& b) {
    const PadicClass& c = cls(b);
    return mod(c.residue, prime_power(p, c.exp - 1));
  };
  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < boxes.size(); ++i) {
    if (cls(boxes[i]).exp > 0) order.push_back(i);
  }
  if (order.size() < value(p)) return false;
  std::vector<Integer> parents(boxes.size());
  for (std::size_t i : order) parents[i] = parent_residue(boxes[i]);
  const auto key = [&](std::size_t i) {
    const Box& b = boxes[i];
    return std::tie(b.lo(), b.hi(), other(b), cls(b).exp, parents[i]);
  };
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    if (key(x) != key(y)) return key(x) < key(y);
    return cls(boxes[x]).residue < cls(boxes[y]).residue;
  });
  std::vector<bool> removed(boxes.size(), false);
  std::vector<Box> merged;
  for (std::size_t start = 0; start < order.size();) {
    std::size_t end = start + 1;
    while (end < order.size() && key(order[end]) == key(order[start])) ++end;
    if (end - start == value(p)) {
      const Box& b = boxes[order[start]];
      PadicClass parent(p, parents[order[start]], cls(b).exp - 1);
      merged.push_back(p == Prime::two ? Box(b.lo(), b.hi(), parent, b.three())
                                       : Box(b.lo(), b.hi(), b.two(), parent));
      for (std::size_t k = start; k < end; ++k) removed[order[k]] = true;
    }
    start = end;
  }
  if (merged.empty()) return false;
  std::vector<Box> out;
  out.reserve(boxes.size());
  for (std::size_t i = 0; i < boxes.size(); ++i) {
    if (!removed[i]) out.push_back(std::move(boxes[i]));
  }
  for (Box& b : merged) out.push_back(std::move(b));
  boxes = std::move(out);
  return true;
}

}  // namespace

std::vector<Box> normalize(std::vector<Box> boxes) {
  bool changed = true;
  while (changed) {
    changed = merge_real_adjacent(boxes);
    changed = merge_siblings(boxes, Prime::two) || changed;
    changed = merge_siblings(boxes, Prime::three) || changed;
  }
  std::sort(boxes.begin(), boxes.end(), canonical_less);
  return boxes;
}

bool pairwise_disjoint(std::span<const Box> boxes) {
  std::vector<const Box*> order;
  order.reserve(boxes.size());
  for (const Box& b : boxes) order.push_back(&b);
  std::sort(order.begin(), order.end(), [](const Box* x, const Box* y) { return x->lo() < y->lo(); });
  // Sweep over real left endpoints, keeping boxes whose interval is still open.
  std::vector<const Box*> active;
  for (const Box* b : order) {
    std::erase_if(active, [&](const Box* o) { return o->hi() <= b->lo(); });
    for (const Box* o : active) {
      if (compatible(o->two(), b->two()) && compatible(o->three(), b->three())) return false;
    }
    active.push_back(b);
  }
  return true;
}

// ---------------------------------------------------------------------------
// BoxSet

BoxSet::BoxSet(std::vector<Box> boxes) {
  if (!pairwise_disjoint(boxes)) throw PreconditionError("boxes of a BoxSet must be disjoint");
  boxes_ = normalize(std::move(boxes));
}

BoxSet BoxSet::from_disjoint(std::vector<Box> boxes) {
  BoxSet s;
  s.boxes_ = normalize(std::move(boxes));
  return s;
}

BoxSet BoxSet::from_disjoint_raw(std::vector<Box> boxes) {
  BoxSet s;
  s.boxes_ = std::move(boxes);
  return s;
}

BoxSet BoxSet::whole_space() { return from_disjoint_raw({Box::interval(0, 1)}); }

BoxSet intersect(const BoxSet& s, const BoxSet& t) {
  std::vector<Box> out;
  for (const Box& a : s.boxes()) {
    for (const Box& b : t.boxes()) {
      if (auto c = intersect(a, b)) out.push_back(std::move(*c));
    }
  }
  return BoxSet::from_disjoint(std::move(out));
}

bool intersects(const BoxSet& s, const BoxSet& t) {
  for (const Box& a : s.boxes()) {
    for (const Box& b : t.boxes()) {
      if (intersects(a, b)) return true;
    }
  }
  return false;
}

namespace {

// The part of the coset `outer` not covered by the finer coset `inner`, as
// (p - 1) * (inner.exp - outer.exp) disjoint cosets.
std::vector<PadicClass> coset_complement(const PadicClass& outer, const PadicClass& inner) {
  std::vector<PadicClass> out;
  const Prime p = outer.prime;
  for (unsigned level = outer.exp + 1; level <= inner.exp; ++level) {
    const Integer below = prime_power(p, level - 1);
    const Integer prefix = mod(inner.residue, below);
    const Integer on_path = mod(inner.residue, prime_power(p, level));
    for (unsigned d = 0; d < value(p); ++d) {
      Integer r = prefix + Integer(static_cast<std::int64_t>(d)) * below;
      if (r != on_path) out.emplace_back(p, std::move(r), level);
    }
  }
  return out;
}

void subtract_box(const Box& a, const Box& b, std::vector<Box>& out) {
  if (!intersects(a, b)) {
    out.push_back(a);
    return;
  }
  if (a.lo() < b.lo()) out.emplace_back(a.lo(), b.lo(), a.two(), a.three());
  if (b.hi() < a.hi()) out.emplace_back(b.hi(), a.hi(), a.two(), a.three());
  const Rational lo = std::max(a.lo(), b.lo());
  const Rational hi = std::min(a.hi(), b.hi());
  PadicClass two = a.two();
  if (a.two().exp < b.two().exp) {
    for (PadicClass& c : coset_complement(a.two(), b.two())) out.emplace_back(lo, hi, std::move(c), a.three());
    two = b.two();
  }
  if (a.three().exp < b.three().exp) {
    for (PadicClass& c : coset_complement(a.three(), b.three())) out.emplace_back(lo, hi, two, std::move(c));
  }
}

}  // namespace

BoxSet subtract(const BoxSet& s, const BoxSet& t) {
  std::vector<Box> current = s.boxes();
  std::vector<Box> next;
  for (const Box& b : t.boxes()) {
    next.clear();
    for (const Box& a : current) subtract_box(a, b, next);
    std::swap(current, next);
    if (current.empty()) break;
  }
  return BoxSet::from_disjoint(std::move(current));
}

BoxSet unite(const BoxSet& s, const BoxSet& t) {
  std::vector<Box> boxes = s.boxes();
  const BoxSet extra = subtract(t, s);
  boxes.insert(boxes.end(), extra.boxes().begin(), extra.boxes().end());
  return BoxSet::from_disjoint(std::move(boxes));
}

bool equals(const BoxSet& s, const BoxSet& t) {
  if (s == t) return true;
  if (haar_measure(s) != haar_measure(t)) return false;
  return subtract(s, t).empty() && subtract(t, s).empty();
}

Rational haar_measure(const BoxSet& s) {
  Rational total;
  for (const Box& b : s.boxes()) total += haar_measure(b);
  return total;
}

bool contains_point(const BoxSet& s, const SolenoidPoint& x) {
  return std::any_of(s.boxes().begin(), s.boxes().end(),
                     [&](const Box& b) { return contains_point(b, x); });
}

// ---------------------------------------------------------------------------
// Images under alpha^(a,b)

std::vector<Box> image(const Box& box, std::int64_t a, std::int64_t b) {
  if (a == 0 && b == 0) return {box};
  const Rational q = two_three_power(a, b);
  // Refine so that q times each coset is a coset of a subgroup of Z_p.
  const auto e2_src = static_cast<unsigned>(std::max<std::int64_t>(box.two().exp, -a));
  const auto e3_src = static_cast<unsigned>(std::max<std::int64_t>(box.three().exp, -b));
  const auto e2 = static_cast<unsigned>(a + e2_src);
  const auto e3 = static_cast<unsigned>(b + e3_src);
  const Integer m2 = prime_power(Prime::two, e2);
  const Integer m3 = prime_power(Prime::three, e3);
  const Rational qlo = q * box.lo();
  const Rational qhi = q * box.hi();

  std::vector<Box> out;
  for (const PadicClass& t : refine_class(box.two(), e2_src)) {
    const Rational qt = q * Rational(t.residue);
    const Rational frac2 = padic_fractional_part(qt, Prime::two);
    for (const PadicClass& s : refine_class(box.three(), e3_src)) {
      const Rational qs = q * Rational(s.residue);
      const Rational rho = frac2 + padic_fractional_part(qs, Prime::three);
      const Rational lo = qlo - rho;
      const Rational hi = qhi - rho;
      const Integer k_first = floor(lo);
      // Residues at the first integer step; each further step subtracts 1.
      Integer r2 = padic_residue(qt - rho - Rational(k_first), Prime::two, e2);
      Integer r3 = padic_residue(qs - rho - Rational(k_first), Prime::three, e3);
      for (Integer k = k_first; Rational(k) < hi; k += 1) {
        const Rational kr(k);
        const Rational piece_lo = std::max(lo, kr) - kr;
        const Rational piece_hi = std::min(hi, kr + Rational(1)) - kr;
        out.emplace_back(piece_lo, piece_hi, PadicClass(Prime::two, r2, e2),
                         PadicClass(Prime::three, r3, e3));
        r2 = e2 == 0 ? Integer(0) : mod(r2 - Integer(1), m2);
        r3 = e3 == 0 ? Integer(0) : mod(r3 - Integer(1), m3);
      }
    }
  }
  return out;
}

BoxSet image(const BoxSet& s, std::int64_t a, std::int64_t b) {
  if (a == 0 && b == 0) return s;
  std::vector<Box> out;
  for (const Box& box : s.boxes()) {
    std::vector<Box> part = image(box, a, b);
    out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  return BoxSet::from_disjoint(std::move(out));
}

}  // namespace solenoid
