#include "solenoid/serialize.hpp"

#include <sstream>

#include "solenoid/errors.hpp"

namespace solenoid {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw ParseError(std::string("missing JSON field \"") + key + "\"");
  }
  return j.at(key);
}

template <class T>
std::vector<T> list_of(const Json& j, const char* key) {
  return field(j, key).get<std::vector<T>>();
}

std::string place_name(Place p) {
  switch (p) {
    case Place::real:
      return "real";
    case Place::two_adic:
      return "two";
    case Place::three_adic:
      return "three";
  }
  return "?";
}

}  // namespace

void to_json(Json& j, const Integer& v) {
  if (v.is_small()) {
    j = v.small();
  } else {
    j = v.to_string();
  }
}

void from_json(const Json& j, Integer& v) {
  if (j.is_number_integer()) {
    v = Integer(j.get<std::int64_t>());
  } else if (j.is_string()) {
    v = Integer::parse(j.get<std::string>());
  } else {
    throw ParseError("expected an integer, got " + j.dump());
  }
}

void to_json(Json& j, const Rational& v) { j = v.to_string(); }

void from_json(const Json& j, Rational& v) {
  if (!j.is_string()) throw ParseError("expected a rational string \"n/d\", got " + j.dump());
  v = Rational::parse(j.get<std::string>());
}

void to_json(Json& j, const SolenoidPoint& p) {
  j = Json{{"real", p.real()}, {"two", p.two()}, {"three", p.three()}};
}

void to_json(Json& j, const Reduction& r) { j = Json{{"point", r.point}, {"shift", r.shift}}; }

void from_json(const Json& j, Reduction& r) {
  r.point = field(j, "point").get<SolenoidPoint>();
  r.shift = field(j, "shift").get<Rational>();
}

void to_json(Json& j, const WilsonTrace& t) { j = Json{{"levels", t.levels}}; }

void from_json(const Json& j, WilsonTrace& t) { t.levels = list_of<Rational>(j, "levels"); }

void to_json(Json& j, const WilsonDigits& d) {
  j = Json{{"real", d.real}, {"two_mod", d.two_mod}, {"three_mod", d.three_mod}, {"depth", d.depth}};
}

void from_json(const Json& j, WilsonDigits& d) {
  d.real = field(j, "real").get<Rational>();
  d.two_mod = field(j, "two_mod").get<Integer>();
  d.three_mod = field(j, "three_mod").get<Integer>();
  d.depth = field(j, "depth").get<unsigned>();
}

void to_json(Json& j, const PadicClass& c) { j = Json{{"res", c.residue}, {"exp", c.exp}}; }

void to_json(Json& j, const Box& b) {
  j = Json{{"real", Json::array({b.lo(), b.hi()})}, {"two", b.two()}, {"three", b.three()}};
}

void to_json(Json& j, const BoxSet& s) { j = Json{{"boxes", s.boxes()}}; }

void from_json(const Json& j, BoxSet& s) {
  s = BoxSet::from_disjoint_raw(list_of<Box>(j, "boxes"));
  if (!pairwise_disjoint(s.boxes())) throw ParseError("box set JSON has overlapping boxes");
}

void to_json(Json& j, const Partition& p) {
  j = Json::array();
  for (std::size_t i = 0; i < p.size(); ++i) {
    j.push_back(Json{{"word", p.words[i]}, {"atom", p.atoms[i]}});
  }
}

void from_json(const Json& j, Partition& p) {
  if (!j.is_array()) throw ParseError("partition JSON must be an array");
  p = {};
  for (const Json& item : j) {
    p.words.push_back(field(item, "word").get<Word>());
    p.atoms.push_back(field(item, "atom").get<BoxSet>());
  }
}

void to_json(Json& j, const RefinementReport& r) {
  j = Json{{"depth", r.depth},
           {"atom_count", r.atom_count},
           {"real_diam_max", r.real_diam_max},
           {"two_exp_min", r.two_exp_min},
           {"three_exp_min", r.three_exp_min},
           {"all_rectangles", r.all_rectangles}};
}

void from_json(const Json& j, RefinementReport& r) {
  r.depth = field(j, "depth").get<int>();
  r.atom_count = field(j, "atom_count").get<std::uint64_t>();
  r.real_diam_max = field(j, "real_diam_max").get<Rational>();
  r.two_exp_min = field(j, "two_exp_min").get<unsigned>();
  r.three_exp_min = field(j, "three_exp_min").get<unsigned>();
  r.all_rectangles = field(j, "all_rectangles").get<bool>();
}

void to_json(Json& j, const MarkovReport& r) {
  j = Json{{"a", r.a},
           {"b", r.b},
           {"depth", r.depth},
           {"passed", r.passed},
           {"forward_cylinders", r.forward_cylinders},
           {"backward_cylinders", r.backward_cylinders},
           {"two_sided_cylinders", r.two_sided_cylinders},
           {"pairs_checked", r.pairs_checked},
           {"full_shift", r.full_shift},
           {"counterexample", r.counterexample ? Json(*r.counterexample) : Json(nullptr)}};
}

void from_json(const Json& j, MarkovReport& r) {
  r.a = field(j, "a").get<std::int64_t>();
  r.b = field(j, "b").get<std::int64_t>();
  r.depth = field(j, "depth").get<int>();
  r.passed = field(j, "passed").get<bool>();
  r.forward_cylinders = field(j, "forward_cylinders").get<std::uint64_t>();
  r.backward_cylinders = field(j, "backward_cylinders").get<std::uint64_t>();
  r.two_sided_cylinders = field(j, "two_sided_cylinders").get<std::uint64_t>();
  r.pairs_checked = field(j, "pairs_checked").get<std::uint64_t>();
  r.full_shift = field(j, "full_shift").get<bool>();
  const Json& c = field(j, "counterexample");
  r.counterexample = c.is_null() ? std::nullopt : std::optional<Word>(c.get<Word>());
}

void to_json(Json& j, const TransitionMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.size; ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < m.size; ++k) row.push_back(m.at(i, k) ? 1 : 0);
    rows.push_back(std::move(row));
  }
  j = Json{{"size", m.size}, {"rows", std::move(rows)}};
}

void from_json(const Json& j, TransitionMatrix& m) {
  m.size = field(j, "size").get<std::size_t>();
  const auto rows = list_of<std::vector<int>>(j, "rows");
  if (rows.size() != m.size) throw ParseError("transition matrix row count mismatch");
  m.allowed.clear();
  for (const auto& row : rows) {
    if (row.size() != m.size) throw ParseError("transition matrix row length mismatch");
    for (int v : row) m.allowed.push_back(v != 0 ? 1 : 0);
  }
}

void to_json(Json& j, const GeneratorProfile& g) {
  Json obstructed = Json::array();
  for (Place p : g.obstructed) obstructed.push_back(place_name(p));
  j = Json{{"a", g.a},
           {"b", g.b},
           {"baseline", g.baseline},
           {"reports", g.reports},
           {"generating_trend", g.generating_trend},
           {"obstructed", std::move(obstructed)}};
}

void from_json(const Json& j, GeneratorProfile& g) {
  g.a = field(j, "a").get<std::int64_t>();
  g.b = field(j, "b").get<std::int64_t>();
  g.baseline = field(j, "baseline").get<RefinementReport>();
  g.reports = list_of<RefinementReport>(j, "reports");
  g.generating_trend = field(j, "generating_trend").get<bool>();
  g.obstructed.clear();
  for (const auto& name : list_of<std::string>(j, "obstructed")) g.obstructed.push_back(parse_place(name));
}

void to_json(Json& j, const Entropy& e) { j = Json{{"base", e.base}, {"entropy", e.to_string()}}; }

void from_json(const Json& j, Entropy& e) { e.base = field(j, "base").get<Integer>(); }

void to_json(Json& j, const DirectionClass& c) {
  Json signature = Json::array();
  for (Stability s : c.signature) signature.push_back(to_string(s));
  j = Json{{"a", c.a},
           {"b", c.b},
           {"signature", std::move(signature)},
           {"cone", to_string(c.cone)},
           {"expansive", c.expansive}};
}

void from_json(const Json& j, DirectionClass& c) {
  c.a = field(j, "a").get<std::int64_t>();
  c.b = field(j, "b").get<std::int64_t>();
  const auto sig = list_of<std::string>(j, "signature");
  if (sig.size() != 3) throw ParseError("signature must have three entries");
  for (std::size_t i = 0; i < 3; ++i) c.signature[i] = parse_stability(sig[i]);
  c.cone = parse_cone(field(j, "cone").get<std::string>());
  c.expansive = field(j, "expansive").get<bool>();
}

void to_json(Json& j, const ClosedFormZeta& z) {
  j = Json{{"expression", z.expression}, {"coefficients", z.coefficients}, {"matches", z.matches}};
}

void from_json(const Json& j, ClosedFormZeta& z) {
  z.expression = field(j, "expression").get<std::string>();
  z.coefficients = list_of<Rational>(j, "coefficients");
  z.matches = field(j, "matches").get<bool>();
}

void to_json(Json& j, const ZetaSeries& z) {
  j = Json{{"a", z.a},
           {"b", z.b},
           {"counts", z.counts},
           {"series", z.series},
           {"cover_counts", z.cover_counts},
           {"cover_series", z.cover_series},
           {"closed_form", z.closed_form ? Json(*z.closed_form) : Json(nullptr)},
           {"printed_formula", z.printed_formula ? Json(*z.printed_formula) : Json(nullptr)},
           {"notes", z.notes}};
}

void from_json(const Json& j, ZetaSeries& z) {
  z.a = field(j, "a").get<std::int64_t>();
  z.b = field(j, "b").get<std::int64_t>();
  z.counts = list_of<Rational>(j, "counts");
  z.series = list_of<Rational>(j, "series");
  z.cover_counts = list_of<Integer>(j, "cover_counts");
  z.cover_series = list_of<Rational>(j, "cover_series");
  const auto optional_form = [&](const char* key) -> std::optional<ClosedFormZeta> {
    const Json& v = field(j, key);
    if (v.is_null()) return std::nullopt;
    return v.get<ClosedFormZeta>();
  };
  z.closed_form = optional_form("closed_form");
  z.printed_formula = optional_form("printed_formula");
  z.notes = list_of<std::string>(j, "notes");
}

Stability parse_stability(const std::string& text) {
  for (Stability s : {Stability::stable, Stability::unstable, Stability::neutral}) {
    if (text == to_string(s) || text == short_name(s)) return s;
  }
  throw ParseError("unknown stability \"" + text + "\"");
}

Cone parse_cone(const std::string& text) {
  for (Cone c : {Cone::positive_quadrant, Cone::a_neg_b_pos_expanding, Cone::a_pos_b_neg_expanding,
                 Cone::negative_quadrant, Cone::a_pos_b_neg_contracting,
                 Cone::a_neg_b_pos_contracting, Cone::line_a0, Cone::line_b0, Cone::origin}) {
    if (text == to_string(c)) return c;
  }
  throw ParseError("unknown cone \"" + text + "\"");
}

Place parse_place(const std::string& text) {
  for (Place p : {Place::real, Place::two_adic, Place::three_adic}) {
    if (text == place_name(p)) return p;
  }
  throw ParseError("unknown place \"" + text + "\"");
}

std::string to_csv(const TransitionMatrix& m) {
  std::ostringstream out;
  for (std::size_t i = 0; i < m.size; ++i) {
    for (std::size_t k = 0; k < m.size; ++k) out << (k ? "," : "") << (m.at(i, k) ? 1 : 0);
    out << '\n';
  }
  return out.str();
}

}  // namespace solenoid

namespace nlohmann {

solenoid::SolenoidPoint adl_serializer<solenoid::SolenoidPoint>::from_json(const solenoid::Json& j) {
  using solenoid::Rational;
  if (!j.is_object()) throw solenoid::ParseError("point JSON must be an object");
  return {j.at("real").get<Rational>(), j.at("two").get<Rational>(), j.at("three").get<Rational>()};
}

solenoid::Box adl_serializer<solenoid::Box>::from_json(const solenoid::Json& j) {
  using solenoid::Prime;
  using solenoid::Rational;
  if (!j.is_object() || !j.contains("real") || !j.at("real").is_array() || j.at("real").size() != 2) {
    throw solenoid::ParseError("box JSON needs \"real\": [lo, hi]");
  }
  const auto cls = [&](const char* key, Prime p) -> solenoid::PadicClass {
    if (!j.contains(key)) throw solenoid::ParseError(std::string("box JSON needs \"") + key + "\"");
    const auto& c = j.at(key);
    return {p, c.at("res").get<solenoid::Integer>(), c.at("exp").get<unsigned>()};
  };
  return {j.at("real")[0].get<Rational>(), j.at("real")[1].get<Rational>(), cls("two", Prime::two),
          cls("three", Prime::three)};
}

}  // namespace nlohmann
