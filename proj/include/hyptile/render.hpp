#pragma once

// Static SVG figures of the tiling. Geometry stays exact until the final
// conversion to document coordinates (fixed six decimals).

#include "hyptile/tiling.hpp"
#include "hyptile/torus.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hyptile {

struct Style {
  std::string big_fill = "#e8b04a";
  std::string small_fill = "#3f6fb5";
  std::string stroke = "#202020";
};

/// Axis-aligned window in the plane (or its first two coordinates).
struct Viewport {
  RatVec lo;
  RatVec hi;
  Rational scale = 40;  // document units per length unit
  Style style;
};

/// One emitted rectangle. tile_lo/tile_hi are the unclipped tile extents in
/// the drawing plane; lo/hi the part inside the viewport.
struct PlacedRect {
  TileRef tile;
  RatVec tile_lo;
  RatVec tile_hi;
  RatVec lo;
  RatVec hi;
  std::string fill;
};

struct Figure {
  RatVec lo;
  RatVec hi;
  std::vector<PlacedRect> rects;
  std::string svg;
};

/// n = 2 only (Errc::InvalidParams otherwise, or for a degenerate viewport).
Figure render_tiling_2d(const TilingParams& params, const Viewport& vp);

/// n = 3 only. One figure per z: the tiles whose half-open x_3 extent [a, b)
/// contains z, cut by the plane x_3 = z.
std::vector<Figure> render_slices_3d(const TilingParams& params, const std::vector<Rational>& z_values,
                                     const Viewport& vp);

/// n = 2 only. m x m grid, one colour per owner id, owner boundaries stroked.
/// Never validates the assignment.
Figure render_torus_map(const TorusTiling& tiling, const Rational& cell_size = 24);

/// Wavefront OBJ (vertices + quad faces) of the n = 3 tiles meeting [lo, hi].
std::string export_mesh_obj(const TilingParams& params, const RatVec& lo, const RatVec& hi);

/// Round half away from zero to six decimals.
std::string format_fixed6(const Rational& value);

struct CoverAudit {
  Rational covered_area;
  Rational viewport_area;
  bool overlap_free = true;
  std::optional<std::string> counterexample;

  bool exact() const { return overlap_free && covered_area == viewport_area; }
};

/// Exact area bookkeeping and pairwise overlap test on the clipped rectangles.
CoverAudit audit_cover(const Figure& figure);

/// True iff no two tiles of the same kind share a full edge (unclipped geometry).
bool audit_same_size_adjacency(const Figure& figure, std::string* counterexample = nullptr);

}  // namespace hyptile
