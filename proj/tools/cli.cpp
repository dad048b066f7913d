#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "solenoid/errors.hpp"
#include "solenoid/render.hpp"
#include "solenoid/serialize.hpp"

namespace solenoid::cli {

namespace {

struct Common {
  std::int64_t a = 0;
  std::int64_t b = 0;
  int depth = 1;
  unsigned order = 6;
  std::string out_path;
  std::string format;
  std::uint64_t cap = kDefaultCap;
};

struct SetSource {
  std::string set_json;
  std::string input;
  std::optional<std::size_t> atom;
};

struct RenderOptions {
  std::string projection = "isometric";
  unsigned monna2 = 4;
  unsigned monna3 = 3;
  unsigned width = 480;
  unsigned height = 400;
  std::optional<std::size_t> shade;
};

void add_direction(CLI::App* cmd, Common& c) {
  cmd->add_option("--a", c.a, "exponent of 2")->required();
  cmd->add_option("--b", c.b, "exponent of 3")->required();
}

void add_output(CLI::App* cmd, Common& c, std::initializer_list<const char*> formats) {
  cmd->add_option("--out", c.out_path, "write the result to FILE instead of standard output");
  const std::vector<std::string> allowed(formats.begin(), formats.end());
  cmd->add_option("--format", c.format, "output format")->check(CLI::IsMember(allowed));
}

void add_source(CLI::App* cmd, SetSource& s) {
  cmd->add_option("--set", s.set_json, "box set as JSON {\"boxes\":[...]}");
  cmd->add_option("--input", s.input, "file holding a box set as JSON");
  cmd->add_option("--atom", s.atom, "atom index of xi^(a,b)");
}

void add_render(CLI::App* cmd, RenderOptions& r) {
  cmd->add_option("--projection", r.projection, "isometric or three_faces")
      ->check(CLI::IsMember({"isometric", "three_faces"}));
  cmd->add_option("--monna2", r.monna2, "2-adic Monna grid depth");
  cmd->add_option("--monna3", r.monna3, "3-adic Monna grid depth");
  cmd->add_option("--width", r.width, "canvas width in pixels");
  cmd->add_option("--height", r.height, "canvas height in pixels");
}

RenderSpec render_spec(const RenderOptions& r) {
  RenderSpec spec;
  spec.projection = parse_projection(r.projection);
  spec.monna_depth_2 = r.monna2;
  spec.monna_depth_3 = r.monna3;
  spec.width = r.width;
  spec.height = r.height;
  spec.shaded_atom = r.shade;
  return spec;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

BoxSet resolve_set(const SetSource& s, std::int64_t a, std::int64_t b) {
  const int given = !s.set_json.empty() + !s.input.empty() + s.atom.has_value();
  if (given != 1) throw ParseError("give exactly one of --set, --input, --atom");
  if (s.atom) {
    const Partition p = xi(a, b);
    if (*s.atom >= p.size()) {
      throw PreconditionError("atom " + std::to_string(*s.atom) + " out of range for " +
                              std::to_string(p.size()) + " atoms");
    }
    return p.atoms[*s.atom];
  }
  const Json j = parse_json(s.set_json.empty() ? read_file(s.input) : s.set_json);
  try {
    return j.get<BoxSet>();
  } catch (const Json::exception& e) {
    throw ParseError(std::string("malformed box set: ") + e.what());
  }
}

std::vector<Rational> parse_rationals(const std::string& text, std::size_t count, const char* what) {
  std::vector<Rational> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(Rational::parse(item));
  if (out.size() != count) {
    throw ParseError(std::string(what) + " needs " + std::to_string(count) +
                     " comma-separated rationals, got \"" + text + "\"");
  }
  return out;
}

SolenoidPoint parse_point(const std::string& text) {
  const auto v = parse_rationals(text, 3, "a point");
  return {v[0], v[1], v[2]};
}

std::vector<std::pair<std::int64_t, std::int64_t>> parse_directions(const std::string& text) {
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ';')) {
    if (item.empty()) continue;
    const auto comma = item.find(',');
    if (comma == std::string::npos) throw ParseError("direction \"" + item + "\" is not a,b");
    try {
      std::size_t used_a = 0;
      std::size_t used_b = 0;
      const std::string sa = item.substr(0, comma);
      const std::string sb = item.substr(comma + 1);
      const std::int64_t a = std::stoll(sa, &used_a);
      const std::int64_t b = std::stoll(sb, &used_b);
      if (used_a != sa.size() || used_b != sb.size()) throw std::invalid_argument(item);
      out.emplace_back(a, b);
    } catch (const std::logic_error&) {
      throw ParseError("direction \"" + item + "\" is not a,b");
    }
  }
  return out;
}

void emit(const Common& c, const std::string& body, std::ostream& out) {
  if (c.out_path.empty()) {
    out << body;
    return;
  }
  std::ofstream file(c.out_path, std::ios::binary);
  if (!file) throw ParseError("cannot write " + c.out_path);
  file << body;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

void zeta_table(const ZetaSeries& z, std::ostream& err) {
  const auto table = [&](const ClosedFormZeta& form, const char* title) {
    err << title << ": " << form.expression << (form.matches ? "  (matches)" : "  (differs)") << '\n';
    err << std::left << std::setw(4) << "k" << std::setw(24) << "computed" << "closed form\n";
    for (std::size_t k = 0; k < z.series.size(); ++k) {
      err << std::setw(4) << k << std::setw(24) << z.series[k].to_string()
          << form.coefficients[k].to_string() << '\n';
    }
  };
  if (z.closed_form) table(*z.closed_form, "closed form");
  if (z.printed_formula) table(*z.printed_formula, "printed formula");
  for (const auto& note : z.notes) err << "note: " << note << '\n';
}

std::string generator_verdict(const GeneratorProfile& g) {
  const int depth = static_cast<int>(g.reports.size());
  if (g.generating_trend) return "consistent with generating through depth " + std::to_string(depth);
  std::string out;
  for (Place p : g.obstructed) {
    out += std::string(out.empty() ? "" : "; ") + "obstructed(" +
           (p == Place::real ? "R" : p == Place::two_adic ? "Q2" : "Q3") + ")";
  }
  return out.empty() ? "no generating trend through depth " + std::to_string(depth) : out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations on the x2,x3 solenoid", "solenoid"};
  app.require_subcommand(1);
  Common c;
  SetSource source;
  RenderOptions ropt;
  std::string x_text;
  std::string y_text;
  std::string real_text;
  std::string two_text;
  std::string three_text;
  std::string directions_text;
  bool act_first = false;
  bool atoms = false;

  auto* reduce = app.add_subcommand("reduce", "reduce an element of R x Q2 x Q3 into the fundamental domain");
  reduce->add_option("--real", real_text)->required();
  reduce->add_option("--two", two_text)->required();
  reduce->add_option("--three", three_text)->required();
  add_output(reduce, c, {"json"});

  auto* add_cmd = app.add_subcommand("add", "group law of two points");
  add_cmd->add_option("--x", x_text, "real,two,three")->required();
  add_cmd->add_option("--y", y_text, "real,two,three")->required();
  add_output(add_cmd, c, {"json"});

  auto* act_cmd = app.add_subcommand("act", "apply alpha^(a,b) to a point");
  act_cmd->add_option("--x", x_text, "real,two,three")->required();
  add_direction(act_cmd, c);
  add_output(act_cmd, c, {"json"});

  auto* image_cmd = app.add_subcommand("image", "image of a box set under alpha^(a,b)");
  add_direction(image_cmd, c);
  add_source(image_cmd, source);
  add_output(image_cmd, c, {"json", "svg"});
  add_render(image_cmd, ropt);

  auto* partition_cmd = app.add_subcommand("partition", "the partition xi^(a,b)");
  add_direction(partition_cmd, c);
  add_output(partition_cmd, c, {"json", "svg"});
  add_render(partition_cmd, ropt);
  partition_cmd->add_option("--shade", ropt.shade, "atom drawn shaded (svg)");

  auto* refine_cmd = app.add_subcommand("refine", "refinement report of the orbit join over [-n, n]");
  add_direction(refine_cmd, c);
  refine_cmd->add_option("--depth", c.depth)->required()->check(CLI::PositiveNumber);
  refine_cmd->add_option("--cap", c.cap, "intersection cap");
  refine_cmd->add_flag("--atoms", atoms, "also list every atom with its word");
  add_output(refine_cmd, c, {"json"});

  auto* markov_cmd = app.add_subcommand("markov-check", "finite-depth Markov condition");
  add_direction(markov_cmd, c);
  markov_cmd->add_option("--depth", c.depth)->required()->check(CLI::PositiveNumber);
  markov_cmd->add_option("--cap", c.cap, "intersection cap");
  add_output(markov_cmd, c, {"json", "csv"});

  auto* generator_cmd = app.add_subcommand("generator-check", "refinement trend for depths 1..n");
  add_direction(generator_cmd, c);
  generator_cmd->add_option("--depth", c.depth, "largest depth n")->required()->check(CLI::PositiveNumber);
  generator_cmd->add_option("--cap", c.cap, "intersection cap");
  add_output(generator_cmd, c, {"json"});

  auto* classify_cmd = app.add_subcommand("classify", "stability signature and cone of a direction");
  add_direction(classify_cmd, c);
  add_output(classify_cmd, c, {"json"});

  auto* entropy_cmd = app.add_subcommand("entropy", "topological entropy log H");
  add_direction(entropy_cmd, c);
  add_output(entropy_cmd, c, {"json"});

  auto* zeta_cmd = app.add_subcommand("zeta", "periodic-point counts and zeta coefficients");
  add_direction(zeta_cmd, c);
  zeta_cmd->add_option("--order", c.order)->required()->check(CLI::PositiveNumber);
  add_output(zeta_cmd, c, {"json"});

  auto* wilson_cmd = app.add_subcommand("wilson", "projective-limit trace of a point and its inverse");
  wilson_cmd->add_option("--x", x_text, "real,two,three")->required();
  wilson_cmd->add_option("--depth", c.depth)->required()->check(CLI::NonNegativeNumber);
  add_output(wilson_cmd, c, {"json"});

  auto* render_cmd = app.add_subcommand("render", "SVG of a box set");
  render_cmd->add_option("--a", c.a, "exponent of 2");
  render_cmd->add_option("--b", c.b, "exponent of 3");
  add_source(render_cmd, source);
  render_cmd->add_flag("--act", act_first, "draw the image under alpha^(a,b)");
  add_output(render_cmd, c, {"svg"});
  add_render(render_cmd, ropt);

  auto* gallery_cmd = app.add_subcommand("gallery", "images of A_0 across expansive cones");
  gallery_cmd->add_option("--directions", directions_text, "a,b;a,b;...")->required();
  add_output(gallery_cmd, c, {"svg"});
  add_render(gallery_cmd, ropt);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kBadArguments;
  }

  if (c.format.empty()) c.format = render_cmd->parsed() || gallery_cmd->parsed() ? "svg" : "json";

  try {
    if (reduce->parsed()) {
      const AdeleTriple g{Rational::parse(real_text), Rational::parse(two_text), Rational::parse(three_text)};
      emit(c, dump(Json(reduce_to_fundamental_domain(g))), out);
    } else if (add_cmd->parsed()) {
      emit(c, dump(Json(add(parse_point(x_text), parse_point(y_text)))), out);
    } else if (act_cmd->parsed()) {
      emit(c, dump(Json(act(parse_point(x_text), c.a, c.b))), out);
    } else if (image_cmd->parsed()) {
      const BoxSet result = image(resolve_set(source, c.a, c.b), c.a, c.b);
      emit(c, c.format == "svg" ? render_boxset(result, render_spec(ropt)) : dump(Json(result)), out);
    } else if (partition_cmd->parsed()) {
      const Partition p = xi(c.a, c.b);
      emit(c, c.format == "svg" ? render_partition(p, render_spec(ropt)) : dump(Json(p)), out);
    } else if (refine_cmd->parsed()) {
      Json j;
      if (atoms) {
        const OrbitJoin joined = orbit_join(c.a, c.b, -c.depth, c.depth, c.cap);
        j = Json{{"report", joined.report}, {"atoms", joined.partition}};
      } else {
        j = Json{{"report", orbit_join_report(c.a, c.b, -c.depth, c.depth, c.cap)}};
      }
      emit(c, dump(j), out);
    } else if (markov_cmd->parsed()) {
      const TransitionMatrix m = transition_matrix(c.a, c.b);
      if (c.format == "csv") {
        emit(c, to_csv(m), out);
      } else {
        const MarkovReport r = markov_check(c.a, c.b, c.depth, c.cap);
        emit(c, dump(Json{{"markov", r}, {"transition_matrix", m}}), out);
      }
    } else if (generator_cmd->parsed()) {
      const GeneratorProfile g = generator_profile(c.a, c.b, c.depth, c.cap);
      emit(c, dump(Json{{"profile", g}, {"verdict", generator_verdict(g)}}), out);
    } else if (classify_cmd->parsed()) {
      const LyapunovTriple ly = lyapunov(c.a, c.b);
      Json exps = Json::array();
      for (const auto& e : ly.coefficients) exps.push_back(Json{{"log2", e.c2}, {"log3", e.c3}});
      emit(c, dump(Json{{"class", classify(c.a, c.b)}, {"lyapunov", exps}}), out);
    } else if (entropy_cmd->parsed()) {
      emit(c, dump(Json(entropy(c.a, c.b))), out);
    } else if (zeta_cmd->parsed()) {
      const ZetaSeries z = zeta_series(c.a, c.b, c.order);
      emit(c, dump(Json(z)), out);
      zeta_table(z, err);
    } else if (wilson_cmd->parsed()) {
      const WilsonTrace t = wilson_forward(parse_point(x_text), static_cast<unsigned>(c.depth));
      emit(c, dump(Json{{"trace", t}, {"digits", wilson_backward(t)}}), out);
    } else if (render_cmd->parsed()) {
      BoxSet s = resolve_set(source, c.a, c.b);
      if (act_first) s = image(s, c.a, c.b);
      emit(c, render_boxset(s, render_spec(ropt)), out);
    } else if (gallery_cmd->parsed()) {
      emit(c, render_cone_gallery(parse_directions(directions_text), render_spec(ropt)), out);
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kBadArguments;
  } catch (const PreconditionError& e) {
    err << "precondition violated: " << e.what() << '\n';
    return kPrecondition;
  } catch (const ResourceLimitError& e) {
    err << "resource limit: " << e.what() << '\n';
    return kResourceLimit;
  }
  return kOk;
}

}  // namespace solenoid::cli
