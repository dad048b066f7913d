#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "solenoid/box.hpp"
#include "solenoid/partition.hpp"

namespace solenoid {

enum class Projection { isometric, three_faces };

struct RenderSpec {
  Projection projection = Projection::isometric;
  /// Depth of the Monna-map subdivision grid drawn on each p-adic axis.
  unsigned monna_depth_2 = 4;
  unsigned monna_depth_3 = 3;
  unsigned width = 480;
  unsigned height = 400;
  /// render_partition: the atom drawn shaded. render_boxset ignores it.
  std::optional<std::size_t> shaded_atom;

  /// Throws PreconditionError unless depths and canvas are positive.
  void validate() const;
};

Projection parse_projection(const std::string& text);
const char* to_string(Projection p);

/// Monna image of the coset residue + p^exp Z_p: [offset, offset + p^-exp].
std::pair<Rational, Rational> monna_interval(const PadicClass& c);

/// Six-decimal rendering of an exact rational, rounding half away from zero.
std::string format_fixed6(const Rational& x);

/// Standalone SVG (no XML prolog) of the boxes of s, all shaded. Throws
/// PreconditionError on an empty set.
std::string render_boxset(const BoxSet& s, const RenderSpec& spec);

/// Every atom outlined; spec.shaded_atom, if set, filled.
std::string render_partition(const Partition& p, const RenderSpec& spec);

/// Panels render_boxset(image(A_0 of xi^(a,b), a, b)) embedded verbatim, one
/// per direction in input order (duplicates kept), under a diagram of the
/// (a,b) plane with the lines a=0, b=0 and 2^a 3^b = 1. Throws
/// PreconditionError for a non-expansive direction.
std::string render_cone_gallery(const std::vector<std::pair<std::int64_t, std::int64_t>>& directions,
                                const RenderSpec& panel_spec);

/// The shaded set of one gallery panel.
BoxSet gallery_panel_set(std::int64_t a, std::int64_t b);

}  // namespace solenoid
