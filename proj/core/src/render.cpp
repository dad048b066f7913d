#include "solenoid/render.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "parallel.hpp"
#include "solenoid/errors.hpp"

namespace solenoid {

namespace {

struct Vec3 {
  Rational x, y, z;
};

struct Vec2 {
  Rational x, y;
};

struct Cuboid {
  Rational x0, x1, y0, y1, z0, z1;
};

constexpr const char* kFrameStroke = "#9a9a9a";
constexpr const char* kGridStroke = "#dddddd";
constexpr const char* kOutline = "#333333";
constexpr std::array<const char*, 3> kShaded = {"#6b8fc7", "#3f6aa8", "#2d4f80"};
constexpr std::array<const char*, 3> kPlain = {"#f4f4f4", "#e2e2e2", "#cfcfcf"};

std::string num(const Rational& x) { return format_fixed6(x); }

Cuboid cuboid_of(const Box& b) {
  auto [y0, y1] = monna_interval(b.two());
  auto [z0, z1] = monna_interval(b.three());
  return {b.lo(), b.hi(), std::move(y0), std::move(y1), std::move(z0), std::move(z1)};
}

// Exact 2:1 dimetric view of the unit cube, scaled into the canvas.
class Dimetric {
 public:
  explicit Dimetric(const RenderSpec& spec) {
    const Rational w(static_cast<std::int64_t>(spec.width));
    const Rational h(static_cast<std::int64_t>(spec.height));
    const Rational side = std::min(w, h);
    margin_ = side / Rational(10);
    // Projected cube spans [-1,1] horizontally and [-1,1] vertically.
    scale_ = (side - margin_ * Rational(2)) / Rational(2);
    origin_x_ = (w - side) / Rational(2) + margin_;
    origin_y_ = (h - side) / Rational(2) + margin_;
  }

  [[nodiscard]] Vec2 operator()(const Vec3& p) const {
    const Rational sx = p.x - p.y;
    const Rational sy = (p.x + p.y) / Rational(2) - p.z;
    return {origin_x_ + (sx + Rational(1)) * scale_, origin_y_ + (sy + Rational(1)) * scale_};
  }

 private:
  Rational margin_, scale_, origin_x_, origin_y_;
};

std::string polygon(const std::vector<Vec2>& pts, const char* fill, const char* stroke,
                    const char* extra = "") {
  std::ostringstream out;
  out << "<polygon points=\"";
  for (std::size_t i = 0; i < pts.size(); ++i) {
    out << (i ? " " : "") << num(pts[i].x) << ',' << num(pts[i].y);
  }
  out << "\" fill=\"" << fill << "\" stroke=\"" << stroke << "\" stroke-width=\"1\"" << extra
      << "/>\n";
  return out.str();
}

std::string line(const Vec2& a, const Vec2& b, const char* stroke, const char* width = "1") {
  std::ostringstream out;
  out << "<line x1=\"" << num(a.x) << "\" y1=\"" << num(a.y) << "\" x2=\"" << num(b.x) << "\" y2=\""
      << num(b.y) << "\" stroke=\"" << stroke << "\" stroke-width=\"" << width << "\"/>\n";
  return out.str();
}

std::string text(const Vec2& at, const std::string& body, const char* anchor = "middle") {
  std::ostringstream out;
  out << "<text x=\"" << num(at.x) << "\" y=\"" << num(at.y)
      << "\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"" << anchor << "\">" << body
      << "</text>\n";
  return out.str();
}

std::string svg_open(unsigned width, unsigned height) {
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n"
      << "<rect x=\"0\" y=\"0\" width=\"" << width << "\" height=\"" << height
      << "\" fill=\"#ffffff\"/>\n";
  return out.str();
}

std::string cuboid_faces(const Dimetric& view, const Cuboid& c, const std::array<const char*, 3>& fills) {
  const auto P = [&](const Rational& x, const Rational& y, const Rational& z) { return view({x, y, z}); };
  std::string out;
  out += polygon({P(c.x0, c.y0, c.z1), P(c.x1, c.y0, c.z1), P(c.x1, c.y1, c.z1), P(c.x0, c.y1, c.z1)},
                 fills[0], kOutline);
  out += polygon({P(c.x1, c.y0, c.z0), P(c.x1, c.y1, c.z0), P(c.x1, c.y1, c.z1), P(c.x1, c.y0, c.z1)},
                 fills[1], kOutline);
  out += polygon({P(c.x0, c.y1, c.z0), P(c.x1, c.y1, c.z0), P(c.x1, c.y1, c.z1), P(c.x0, c.y1, c.z1)},
                 fills[2], kOutline);
  return out;
}

// Unit cube edges, Monna grid on the floor (2-adic) and back wall (3-adic), axis labels.
std::string cube_frame(const Dimetric& view, const RenderSpec& spec) {
  const Rational zero, one(1);
  std::string out = "<g class=\"frame\">\n";
  const Integer n2 = prime_power(Prime::two, spec.monna_depth_2);
  for (Integer k = 1; k < n2; k += 1) {
    const Rational y(k, n2);
    out += line(view({zero, y, zero}), view({one, y, zero}), kGridStroke);
  }
  const Integer n3 = prime_power(Prime::three, spec.monna_depth_3);
  for (Integer k = 1; k < n3; k += 1) {
    const Rational z(k, n3);
    out += line(view({zero, zero, z}), view({zero, one, z}), kGridStroke);
  }
  const std::array<Vec3, 8> v = {Vec3{zero, zero, zero}, {one, zero, zero}, {one, one, zero},
                                 {zero, one, zero},      {zero, zero, one}, {one, zero, one},
                                 {one, one, one},        {zero, one, one}};
  constexpr std::array<std::pair<int, int>, 12> edges = {
      {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 5}, {5, 6}, {6, 7}, {7, 4}, {0, 4}, {1, 5}, {2, 6}, {3, 7}}};
  for (auto [a, b] : edges) out += line(view(v[a]), view(v[b]), kFrameStroke);
  const Rational off(Integer(1), Integer(12));
  out += text(view({one + off, zero, zero}), "R");
  out += text(view({zero, one + off, zero}), "Z2");
  out += text(view({zero, zero, one + off}), "Z3");
  out += "</g>\n";
  return out;
}

std::string draw_isometric(const std::vector<std::pair<Cuboid, bool>>& items, const RenderSpec& spec) {
  const Dimetric view(spec);
  std::string out = svg_open(spec.width, spec.height);
  out += cube_frame(view, spec);
  std::vector<std::size_t> order(items.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  // Painter's order: far corners first.
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    const Cuboid& a = items[i].first;
    const Cuboid& b = items[j].first;
    return a.x0 + a.y0 + a.z0 < b.x0 + b.y0 + b.z0;
  });
  out += "<g class=\"boxes\">\n";
  for (std::size_t i : order) out += cuboid_faces(view, items[i].first, items[i].second ? kShaded : kPlain);
  out += "</g>\n</svg>\n";
  return out;
}

std::string draw_three_faces(const std::vector<std::pair<Cuboid, bool>>& items, const RenderSpec& spec) {
  const Rational w(static_cast<std::int64_t>(spec.width));
  const Rational h(static_cast<std::int64_t>(spec.height));
  const Rational cell = std::min(w / Rational(3), h);
  const Rational margin = cell / Rational(8);
  const Rational side = cell - margin * Rational(2);
  const Rational top = (h - cell) / Rational(2) + margin;
  std::string out = svg_open(spec.width, spec.height);
  struct Face {
    const char* h_label;
    const char* v_label;
    int h_axis;
    int v_axis;
  };
  constexpr std::array<Face, 3> faces = {
      {{"R", "Z2", 0, 1}, {"R", "Z3", 0, 2}, {"Z2", "Z3", 1, 2}}};
  const auto lo = [](const Cuboid& c, int axis) -> const Rational& {
    return axis == 0 ? c.x0 : axis == 1 ? c.y0 : c.z0;
  };
  const auto hi = [](const Cuboid& c, int axis) -> const Rational& {
    return axis == 0 ? c.x1 : axis == 1 ? c.y1 : c.z1;
  };
  for (std::size_t f = 0; f < faces.size(); ++f) {
    const Rational left = cell * Rational(static_cast<std::int64_t>(f)) + margin;
    const auto at = [&](const Rational& u, const Rational& v) {
      return Vec2{left + u * side, top + (Rational(1) - v) * side};
    };
    out += "<g class=\"face\">\n";
    out += polygon({at(0, 0), at(1, 0), at(1, 1), at(0, 1)}, "none", kFrameStroke);
    for (const auto& [c, shaded] : items) {
      const int ha = faces[f].h_axis;
      const int va = faces[f].v_axis;
      out += polygon({at(lo(c, ha), lo(c, va)), at(hi(c, ha), lo(c, va)), at(hi(c, ha), hi(c, va)),
                      at(lo(c, ha), hi(c, va))},
                     shaded ? kShaded[0] : kPlain[1], kOutline, " fill-opacity=\"0.5\"");
    }
    out += text(at(Rational(Integer(1), Integer(2)), Rational(Integer(-1), Integer(12))), faces[f].h_label);
    out += text(at(Rational(Integer(-1), Integer(12)), Rational(Integer(1), Integer(2))), faces[f].v_label);
    out += "</g>\n";
  }
  out += "</svg>\n";
  return out;
}

std::string draw(const std::vector<std::pair<Cuboid, bool>>& items, const RenderSpec& spec) {
  return spec.projection == Projection::isometric ? draw_isometric(items, spec)
                                                  : draw_three_faces(items, spec);
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<':
        out += "&lt;";
        break;
      case '>':
        out += "&gt;";
        break;
      case '&':
        out += "&amp;";
        break;
      default:
        out += c;
    }
  }
  return out;
}

// The (a,b) plane over [-3,3]^2 with the three non-expansive lines.
std::string direction_diagram(const std::vector<std::pair<std::int64_t, std::int64_t>>& directions,
                              const Rational& left, const Rational& top, const Rational& size) {
  const Rational range(3);
  const auto at = [&](const Rational& a, const Rational& b) {
    return Vec2{left + (a + range) / (range * Rational(2)) * size,
                top + (range - b) / (range * Rational(2)) * size};
  };
  std::string out = "<g class=\"directions\">\n";
  out += polygon({at(-range, -range), at(range, -range), at(range, range), at(-range, range)}, "none",
                 kFrameStroke);
  out += line(at(0, -range), at(0, range), kOutline);
  out += line(at(-range, 0), at(range, 0), kOutline);
  // 2^a 3^b = 1 is b = -a log 2 / log 3; the slope is drawn to six places.
  const Rational slope = Rational::parse("-630930/1000000");
  out += line(at(-range, -range * slope), at(range, range * slope), kOutline, "2");
  out += text(at(Rational(Integer(14), Integer(5)), Rational(Integer(1), Integer(5))), "a", "end");
  out += text(at(Rational(Integer(1), Integer(5)), Rational(Integer(14), Integer(5))), "b", "start");
  out += text(at(range, range * slope - Rational(Integer(1), Integer(4))), "2^a3^b=1", "end");
  for (const auto& [a, b] : directions) {
    const Vec2 p = at(Rational(a), Rational(b));
    out += "<circle cx=\"" + num(p.x) + "\" cy=\"" + num(p.y) + "\" r=\"3\" fill=\"" + kShaded[1] + "\"/>\n";
  }
  out += "</g>\n";
  return out;
}

}  // namespace

void RenderSpec::validate() const {
  if (monna_depth_2 < 1 || monna_depth_3 < 1) throw PreconditionError("Monna depths must be at least 1");
  if (width == 0 || height == 0) throw PreconditionError("canvas size must be positive");
  if (monna_depth_2 > 12 || monna_depth_3 > 8) throw PreconditionError("Monna grid depth too large to draw");
}

Projection parse_projection(const std::string& text) {
  if (text == "isometric") return Projection::isometric;
  if (text == "three_faces") return Projection::three_faces;
  throw ParseError("unknown projection \"" + text + "\" (isometric or three_faces)");
}

const char* to_string(Projection p) { return p == Projection::isometric ? "isometric" : "three_faces"; }

std::pair<Rational, Rational> monna_interval(const PadicClass& c) {
  const Integer p(static_cast<std::int64_t>(value(c.prime)));
  Rational offset;
  Rational weight(Integer(1), p);
  Integer rest = c.residue;
  for (unsigned n = 0; n < c.exp; ++n) {
    offset += weight * Rational(mod(rest, p));
    rest = floor_div(rest, p);
    weight = weight / Rational(p);
  }
  return {offset, offset + Rational(Integer(1), prime_power(c.prime, c.exp))};
}

std::string format_fixed6(const Rational& x) {
  const Rational scaled = abs(x) * Rational(1'000'000);
  const Integer rounded = floor(scaled + Rational(Integer(1), Integer(2)));
  std::string digits = rounded.to_string();
  if (digits.size() < 7) digits.insert(0, 7 - digits.size(), '0');
  std::string out = digits.substr(0, digits.size() - 6) + "." + digits.substr(digits.size() - 6);
  if (x.sign() < 0 && !rounded.is_zero()) out.insert(0, "-");
  return out;
}

std::string render_boxset(const BoxSet& s, const RenderSpec& spec) {
  spec.validate();
  if (s.empty()) throw PreconditionError("cannot render an empty box set");
  std::vector<std::pair<Cuboid, bool>> items;
  for (const Box& b : s.boxes()) items.emplace_back(cuboid_of(b), true);
  return draw(items, spec);
}

std::string render_partition(const Partition& p, const RenderSpec& spec) {
  spec.validate();
  if (p.size() == 0) throw PreconditionError("cannot render an empty partition");
  if (spec.shaded_atom && *spec.shaded_atom >= p.size()) {
    throw PreconditionError("shaded atom index " + std::to_string(*spec.shaded_atom) +
                            " out of range for " + std::to_string(p.size()) + " atoms");
  }
  std::vector<std::pair<Cuboid, bool>> items;
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (const Box& b : p.atoms[i].boxes()) items.emplace_back(cuboid_of(b), spec.shaded_atom == i);
  }
  return draw(items, spec);
}

BoxSet gallery_panel_set(std::int64_t a, std::int64_t b) { return image(xi(a, b).atoms[0], a, b); }

std::string render_cone_gallery(const std::vector<std::pair<std::int64_t, std::int64_t>>& directions,
                                const RenderSpec& panel_spec) {
  panel_spec.validate();
  for (const auto& [a, b] : directions) {
    if (!classify(a, b).expansive) {
      throw PreconditionError("direction (" + std::to_string(a) + "," + std::to_string(b) +
                              ") is not expansive; gallery panels need expansive directions");
    }
  }
  std::vector<std::string> panels(directions.size());
  detail::parallel_for(directions.size(), [&](std::size_t i) {
    panels[i] = render_boxset(gallery_panel_set(directions[i].first, directions[i].second), panel_spec);
  });

  const std::size_t columns = std::clamp<std::size_t>(directions.size(), 1, 3);
  const std::size_t rows = (directions.size() + columns - 1) / columns;
  const unsigned caption = 24;
  const unsigned diagram = 240;
  const unsigned width = std::max<unsigned>(static_cast<unsigned>(columns) * panel_spec.width, diagram);
  const unsigned height = diagram + static_cast<unsigned>(rows) * (panel_spec.height + caption);

  std::string out = svg_open(width, height);
  const unsigned plane = diagram - 2 * 16;
  out += direction_diagram(directions, Rational(static_cast<std::int64_t>((width - plane) / 2)), Rational(16),
                           Rational(static_cast<std::int64_t>(plane)));
  for (std::size_t i = 0; i < panels.size(); ++i) {
    const auto [a, b] = directions[i];
    const unsigned x = static_cast<unsigned>(i % columns) * panel_spec.width;
    const unsigned y = diagram + static_cast<unsigned>(i / columns) * (panel_spec.height + caption);
    const std::string label = "(" + std::to_string(a) + "," + std::to_string(b) + ") " + to_string(classify(a, b).cone);
    out += "<g class=\"panel\" transform=\"translate(" + std::to_string(x) + "," + std::to_string(y) + ")\">\n";
    out += text({Rational(static_cast<std::int64_t>(panel_spec.width / 2)), Rational(16)}, escape(label));
    out += "<g transform=\"translate(0," + std::to_string(caption) + ")\">\n";
    out += panels[i];
    out += "</g>\n</g>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace solenoid
