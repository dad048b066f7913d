#include "solenoid/partition.hpp"

#include <algorithm>

#include "parallel.hpp"
#include "solenoid/errors.hpp"

namespace solenoid {

namespace {

using detail::WorkBudget;

struct Cylinder {
  BoxSet set;
  Word word;
};

std::size_t small_height(std::int64_t a, std::int64_t b) {
  const Integer h = height(a, b);
  if (!h.is_small() || h.small() > (std::int64_t{1} << 32)) {
    throw ResourceLimitError("partition with " + h.to_string() + " atoms is too large");
  }
  return static_cast<std::size_t>(h.small());
}

// Cylinders of the join of alpha^(j a, j b)(xi) for j_first <= j <= j_last,
// in lexicographic word order. Empty prefixes spawn nothing.
std::vector<Cylinder> chain(std::int64_t a, std::int64_t b, int j_first, int j_last,
                            WorkBudget& budget) {
  const Partition base = xi(a, b);
  std::vector<Cylinder> current;
  {
    const Partition first = image(base, a * j_first, b * j_first);
    current.reserve(first.size());
    for (std::size_t i = 0; i < first.size(); ++i) {
      current.push_back({first.atoms[i], {static_cast<std::uint32_t>(i)}});
    }
  }
  for (int j = j_first + 1; j <= j_last; ++j) {
    const Partition layer = image(base, a * j, b * j);
    budget.charge(current.size() * layer.size());
    std::vector<std::vector<Cylinder>> grown(current.size());
    detail::parallel_for(current.size(), [&](std::size_t c) {
      for (std::size_t k = 0; k < layer.size(); ++k) {
        BoxSet piece = intersect(current[c].set, layer.atoms[k]);
        if (piece.empty()) continue;
        Word w = current[c].word;
        w.push_back(static_cast<std::uint32_t>(k));
        grown[c].push_back({std::move(piece), std::move(w)});
      }
    });
    std::vector<Cylinder> next;
    for (auto& g : grown) {
      for (auto& cyl : g) next.push_back(std::move(cyl));
    }
    current = std::move(next);
  }
  return current;
}

// Forward cylinders grouped by their first letter.
std::vector<std::vector<const Cylinder*>> group_by_first(const std::vector<Cylinder>& cyls,
                                                         std::size_t letters) {
  std::vector<std::vector<const Cylinder*>> groups(letters);
  for (const Cylinder& c : cyls) groups[c.word.front()].push_back(&c);
  return groups;
}

// Raw pairwise box intersections of two sets.
std::vector<Box> raw_intersection(const BoxSet& s, const BoxSet& t) {
  std::vector<Box> out;
  for (const Box& x : s.boxes()) {
    for (const Box& y : t.boxes()) {
      if (auto z = intersect(x, y)) out.push_back(std::move(*z));
    }
  }
  return out;
}

void absorb(RefinementReport& r, const AtomShape& s) {
  if (r.atom_count == 0) {
    r.real_diam_max = s.real_diam;
    r.two_exp_min = s.two_exp;
    r.three_exp_min = s.three_exp;
  } else {
    r.real_diam_max = std::max(r.real_diam_max, s.real_diam);
    r.two_exp_min = std::min(r.two_exp_min, s.two_exp);
    r.three_exp_min = std::min(r.three_exp_min, s.three_exp);
  }
  r.all_rectangles = r.all_rectangles && s.rectangle;
  ++r.atom_count;
}

void merge_report(RefinementReport& into, const RefinementReport& part) {
  if (part.atom_count == 0) return;
  if (into.atom_count == 0) {
    const int depth = into.depth;
    into = part;
    into.depth = depth;
    return;
  }
  into.real_diam_max = std::max(into.real_diam_max, part.real_diam_max);
  into.two_exp_min = std::min(into.two_exp_min, part.two_exp_min);
  into.three_exp_min = std::min(into.three_exp_min, part.three_exp_min);
  into.all_rectangles = into.all_rectangles && part.all_rectangles;
  into.atom_count += part.atom_count;
}

int report_depth(int j_min, int j_max) { return std::max(-j_min, j_max); }

// Visits every nonempty atom of the orbit join. start(count) runs once with
// the number of backward cylinders; on_atom(i, boxes, back, front) then runs
// for the atoms whose backward half is cylinder i, possibly in parallel
// across i but in lexicographic order within one i.
template <class Start, class OnAtom>
void orbit_pairs(std::int64_t a, std::int64_t b, int j_min, int j_max, std::uint64_t cap,
                 Start&& start, OnAtom&& on_atom) {
  if (j_min > j_max) throw PreconditionError("empty orbit range");
  WorkBudget budget(cap);
  const std::size_t h = small_height(a, b);
  if (j_min > 0 || j_max < 0) {
    const std::vector<Cylinder> all = chain(a, b, j_min, j_max, budget);
    start(all.size());
    detail::parallel_for(all.size(), [&](std::size_t i) {
      on_atom(i, all[i].set.boxes(), all[i].word, Word{});
    });
    return;
  }
  const std::vector<Cylinder> backward = chain(a, b, j_min, 0, budget);
  const std::vector<Cylinder> forward = chain(a, b, 0, j_max, budget);
  const auto groups = group_by_first(forward, h);
  start(backward.size());
  detail::parallel_for(backward.size(), [&](std::size_t i) {
    const Cylinder& back = backward[i];
    const auto& partners = groups[back.word.back()];
    budget.charge(partners.size());
    for (const Cylinder* fwd : partners) {
      std::vector<Box> boxes = raw_intersection(back.set, fwd->set);
      if (boxes.empty()) continue;
      on_atom(i, std::move(boxes), back.word, fwd->word);
    }
  });
}

Word splice(const Word& back, const Word& front) {
  Word w = back;
  if (!front.empty()) w.insert(w.end(), front.begin() + 1, front.end());
  return w;
}

}  // namespace

Partition xi(std::int64_t a, std::int64_t b) {
  const std::size_t h = small_height(a, b);
  const Rational step(Integer(1), Integer(static_cast<std::int64_t>(h)));
  Partition p;
  p.atoms.reserve(h);
  p.words.reserve(h);
  for (std::size_t j = 0; j < h; ++j) {
    const Rational lo = step * Rational(static_cast<std::int64_t>(j));
    p.atoms.push_back(BoxSet::from_disjoint_raw({Box::interval(lo, lo + step)}));
    p.words.push_back({static_cast<std::uint32_t>(j)});
  }
  return p;
}

Partition trivial_partition() { return {{BoxSet::whole_space()}, {Word{}}}; }

Partition image(const Partition& p, std::int64_t a, std::int64_t b) {
  Partition out;
  out.words = p.words;
  out.atoms.resize(p.size());
  detail::parallel_for(p.size(), [&](std::size_t i) { out.atoms[i] = image(p.atoms[i], a, b); });
  return out;
}

Partition join(const Partition& p, const Partition& q) {
  std::vector<Partition> rows(p.size());
  detail::parallel_for(p.size(), [&](std::size_t i) {
    for (std::size_t j = 0; j < q.size(); ++j) {
      BoxSet piece = intersect(p.atoms[i], q.atoms[j]);
      if (piece.empty()) continue;
      Word w = p.words[i];
      w.insert(w.end(), q.words[j].begin(), q.words[j].end());
      rows[i].atoms.push_back(std::move(piece));
      rows[i].words.push_back(std::move(w));
    }
  });
  Partition out;
  for (Partition& r : rows) {
    std::move(r.atoms.begin(), r.atoms.end(), std::back_inserter(out.atoms));
    std::move(r.words.begin(), r.words.end(), std::back_inserter(out.words));
  }
  return out;
}

bool is_partition_of_space(const Partition& p) {
  Rational total;
  std::vector<Box> all;
  for (const BoxSet& atom : p.atoms) {
    if (atom.empty()) return false;
    total += haar_measure(atom);
    all.insert(all.end(), atom.boxes().begin(), atom.boxes().end());
  }
  return total == Rational(1) && pairwise_disjoint(all);
}

AtomShape atom_shape(std::span<const Box> boxes) {
  if (boxes.empty()) throw PreconditionError("shape of an empty atom");
  AtomShape s;
  Rational lo = boxes.front().lo();
  Rational hi = boxes.front().hi();
  for (const Box& box : boxes) {
    lo = std::min(lo, box.lo());
    hi = std::max(hi, box.hi());
  }
  s.real_diam = hi - lo;
  s.two_exp = boxes.front().two().exp;
  s.three_exp = boxes.front().three().exp;
  for (const Box& box : boxes) {
    s.two_exp = std::min(s.two_exp, box.two().exp);
    s.three_exp = std::min(s.three_exp, box.three().exp);
  }
  s.rectangle = boxes.size() == 1;
  return s;
}

OrbitJoin orbit_join(std::int64_t a, std::int64_t b, int j_min, int j_max, std::uint64_t cap) {
  std::vector<std::vector<Cylinder>> rows;
  orbit_pairs(
      a, b, j_min, j_max, cap, [&rows](std::size_t count) { rows.resize(count); },
      [&rows](std::size_t i, std::vector<Box> boxes, const Word& back, const Word& front) {
        rows[i].push_back({BoxSet::from_disjoint(std::move(boxes)), splice(back, front)});
      });
  OrbitJoin out;
  out.report.depth = report_depth(j_min, j_max);
  for (auto& row : rows) {
    for (Cylinder& c : row) {
      absorb(out.report, atom_shape(c.set.boxes()));
      out.partition.atoms.push_back(std::move(c.set));
      out.partition.words.push_back(std::move(c.word));
    }
  }
  return out;
}

RefinementReport orbit_join_report(std::int64_t a, std::int64_t b, int j_min, int j_max,
                                   std::uint64_t cap) {
  std::vector<RefinementReport> parts;
  orbit_pairs(
      a, b, j_min, j_max, cap, [&parts](std::size_t count) { parts.resize(count); },
      [&parts](std::size_t i, std::vector<Box> boxes, const Word&, const Word&) {
        if (boxes.size() > 1) boxes = normalize(std::move(boxes));
        absorb(parts[i], atom_shape(boxes));
      });
  RefinementReport out;
  out.depth = report_depth(j_min, j_max);
  for (const RefinementReport& part : parts) merge_report(out, part);
  return out;
}

Box closed_form_forward_atom(std::int64_t a, std::int64_t b, std::uint32_t k,
                             std::span<const std::uint32_t> ells) {
  if (a <= 0 || b <= 0) throw PreconditionError("closed forms need a > 0 and b > 0");
  const Integer h = height(a, b);
  if (Integer(std::int64_t{k}) >= h ||
      std::any_of(ells.begin(), ells.end(), [&](std::uint32_t l) { return Integer(std::int64_t{l}) >= h; })) {
    throw PreconditionError("atom index out of range");
  }
  const auto n = static_cast<unsigned>(ells.size() + 1);
  Integer offset = Integer(static_cast<std::int64_t>(k));
  for (std::uint32_t l : ells) offset = offset * h + Integer(static_cast<std::int64_t>(l));
  const Integer m2 = prime_power(Prime::two, static_cast<unsigned>(a) * n);
  const Integer m3 = prime_power(Prime::three, static_cast<unsigned>(b) * n);
  return {0, 1, PadicClass(Prime::two, mod(-offset, m2), static_cast<unsigned>(a) * n),
          PadicClass(Prime::three, mod(-offset, m3), static_cast<unsigned>(b) * n)};
}

Box closed_form_backward_atom(std::int64_t a, std::int64_t b, std::uint32_t k,
                              std::span<const std::uint32_t> ells) {
  if (a <= 0 || b <= 0) throw PreconditionError("closed forms need a > 0 and b > 0");
  const Integer h = height(a, b);
  if (Integer(std::int64_t{k}) >= h ||
      std::any_of(ells.begin(), ells.end(), [&](std::uint32_t l) { return Integer(std::int64_t{l}) >= h; })) {
    throw PreconditionError("atom index out of range");
  }
  const auto n = static_cast<unsigned>(ells.size());
  // D = sum_i ells[i-1] / H^(n+1-i), accumulated as a numerator over H^n.
  Integer num = 0;
  for (auto it = ells.rbegin(); it != ells.rend(); ++it) num = num * h + Integer(static_cast<std::int64_t>(*it));
  const Integer hn = pow(h, n);
  const Rational d(num, hn);
  const Rational step(Integer(1), hn * h);
  const Rational lo = d + step * Rational(Integer(static_cast<std::int64_t>(k)));
  return Box::interval(lo, lo + step);
}

MarkovReport markov_check(std::int64_t a, std::int64_t b, int n, std::uint64_t cap) {
  if (n < 1) throw PreconditionError("markov depth must be at least 1");
  MarkovReport r;
  r.a = a;
  r.b = b;
  r.depth = n;
  WorkBudget budget(cap);
  const std::size_t h = small_height(a, b);
  const std::vector<Cylinder> backward = chain(a, b, -n, 0, budget);
  const std::vector<Cylinder> forward = chain(a, b, 0, n, budget);
  r.backward_cylinders = backward.size();
  r.forward_cylinders = forward.size();
  const auto groups = group_by_first(forward, h);

  std::vector<std::uint64_t> met(backward.size(), 0);
  std::vector<std::uint64_t> checked(backward.size(), 0);
  std::vector<std::optional<Word>> failures(backward.size());
  detail::parallel_for(backward.size(), [&](std::size_t i) {
    const Cylinder& back = backward[i];
    const auto& partners = groups[back.word.back()];
    budget.charge(partners.size());
    for (const Cylinder* fwd : partners) {
      ++checked[i];
      if (intersects(back.set, fwd->set)) {
        ++met[i];
      } else if (!failures[i]) {
        failures[i] = splice(back.word, fwd->word);
      }
    }
  });
  for (std::size_t i = 0; i < backward.size(); ++i) {
    r.two_sided_cylinders += met[i];
    r.pairs_checked += checked[i];
    if (!r.counterexample && failures[i]) r.counterexample = failures[i];
  }
  r.passed = !r.counterexample.has_value();

  const Integer half = pow(Integer(static_cast<std::int64_t>(h)), static_cast<unsigned>(n + 1));
  const Integer full = pow(Integer(static_cast<std::int64_t>(h)), static_cast<unsigned>(2 * n + 1));
  r.full_shift = Integer(static_cast<std::int64_t>(r.forward_cylinders)) == half &&
                 Integer(static_cast<std::int64_t>(r.backward_cylinders)) == half &&
                 Integer(static_cast<std::int64_t>(r.two_sided_cylinders)) == full;
  return r;
}

TransitionMatrix transition_matrix(std::int64_t a, std::int64_t b) {
  const Partition base = xi(a, b);
  const Partition moved = image(base, a, b);
  TransitionMatrix m;
  m.size = base.size();
  m.allowed.assign(m.size * m.size, 0);
  detail::parallel_for(m.size, [&](std::size_t i) {
    for (std::size_t j = 0; j < m.size; ++j) {
      m.allowed[i * m.size + j] = intersects(moved.atoms[i], base.atoms[j]) ? 1 : 0;
    }
  });
  return m;
}

namespace {

using Matrix = std::vector<Integer>;

Matrix multiply(const Matrix& x, const Matrix& y, std::size_t n) {
  Matrix z(n * n, Integer(0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      if (x[i * n + k].is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) z[i * n + j] += x[i * n + k] * y[k * n + j];
    }
  }
  return z;
}

Matrix to_integer_matrix(const TransitionMatrix& m) {
  Matrix out(m.size * m.size);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = Integer(m.allowed[i]);
  return out;
}

}  // namespace

Integer count_words(const TransitionMatrix& m, unsigned n) {
  if (n == 0) throw PreconditionError("word length must be positive");
  std::vector<Integer> v(m.size, Integer(1));
  for (unsigned step = 1; step < n; ++step) {
    std::vector<Integer> w(m.size, Integer(0));
    for (std::size_t i = 0; i < m.size; ++i) {
      for (std::size_t j = 0; j < m.size; ++j) {
        if (m.at(i, j)) w[i] += v[j];
      }
    }
    v = std::move(w);
  }
  Integer total = 0;
  for (const Integer& x : v) total += x;
  return total;
}

Integer count_periodic_words(const TransitionMatrix& m, unsigned n) {
  if (n == 0) throw PreconditionError("period must be positive");
  const Matrix base = to_integer_matrix(m);
  Matrix power = base;
  for (unsigned step = 1; step < n; ++step) power = multiply(power, base, m.size);
  Integer trace = 0;
  for (std::size_t i = 0; i < m.size; ++i) trace += power[i * m.size + i];
  return trace;
}

GeneratorProfile generator_profile(std::int64_t a, std::int64_t b, int n_max, std::uint64_t cap) {
  if (n_max < 1) throw PreconditionError("n_max must be at least 1");
  GeneratorProfile g;
  g.a = a;
  g.b = b;
  const Integer h = height(a, b);
  g.baseline.depth = 0;
  g.baseline.atom_count = static_cast<std::uint64_t>(small_height(a, b));
  g.baseline.real_diam_max = Rational(Integer(1), h);
  for (int n = 1; n <= n_max; ++n) g.reports.push_back(orbit_join_report(a, b, -n, n, cap));

  bool real_dec = true;
  bool two_dec = true;
  bool three_dec = true;
  bool real_const = true;
  bool two_const = true;
  bool three_const = true;
  const RefinementReport* prev = &g.baseline;
  for (const RefinementReport& r : g.reports) {
    real_dec = real_dec && r.real_diam_max < prev->real_diam_max;
    two_dec = two_dec && r.two_exp_min > prev->two_exp_min;
    three_dec = three_dec && r.three_exp_min > prev->three_exp_min;
    real_const = real_const && r.real_diam_max == prev->real_diam_max;
    two_const = two_const && r.two_exp_min == prev->two_exp_min;
    three_const = three_const && r.three_exp_min == prev->three_exp_min;
    prev = &r;
  }
  g.generating_trend = real_dec && two_dec && three_dec;
  if (real_const) g.obstructed.push_back(Place::real);
  if (two_const) g.obstructed.push_back(Place::two_adic);
  if (three_const) g.obstructed.push_back(Place::three_adic);
  return g;
}

}  // namespace solenoid
