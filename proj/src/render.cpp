#include "hyptile/render.hpp"

#include "hyptile/error.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace hyptile {

std::string format_fixed6(const Rational& value) {
  static const BigInt kScale = 1'000'000;
  const Rational scaled = abs(value) * Rational(kScale);
  const BigInt rounded = floor(Rational(scaled + Rational(1, 2)));
  BigInt whole = rounded / kScale;
  BigInt frac = rounded % kScale;
  std::string digits = frac.str();
  digits.insert(0, 6 - digits.size(), '0');
  const bool negative = value < 0 && rounded != 0;
  return (negative ? "-" : "") + whole.str() + "." + digits;
}

namespace {

void check_viewport(const Viewport& vp, std::size_t min_dim) {
  if (vp.lo.size() < 2 || vp.lo.size() != vp.hi.size() || vp.lo.size() < min_dim)
    throw Error(Errc::InvalidParams, "viewport needs matching lo/hi of dimension 2 or 3");
  for (std::size_t i = 0; i < 2; ++i)
    if (!(vp.lo[i] < vp.hi[i])) throw Error(Errc::InvalidParams, "viewport must satisfy lo < hi");
  if (vp.scale <= 0) throw Error(Errc::InvalidParams, "viewport scale must be positive");
}

class SvgWriter {
 public:
  SvgWriter(const RatVec& lo, const RatVec& hi, const Rational& scale) : lo_(lo), hi_(hi), scale_(scale) {
    const std::string w = format_fixed6((hi[0] - lo[0]) * scale);
    const std::string h = format_fixed6((hi[1] - lo[1]) * scale);
    out_ << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
         << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h << "\" viewBox=\"0 0 "
         << w << " " << h << "\">\n";
  }

  void rect(const RatVec& lo, const RatVec& hi, const std::string& fill, const std::string& stroke) {
    // The document's y axis points down.
    out_ << "  <rect x=\"" << x(lo[0]) << "\" y=\"" << y(hi[1]) << "\" width=\""
         << format_fixed6((hi[0] - lo[0]) * scale_) << "\" height=\"" << format_fixed6((hi[1] - lo[1]) * scale_)
         << "\" fill=\"" << fill << "\"";
    if (!stroke.empty()) out_ << " stroke=\"" << stroke << "\" stroke-width=\"1\"";
    out_ << "/>\n";
  }

  void line(const Rational& x1, const Rational& y1, const Rational& x2, const Rational& y2, const std::string& stroke) {
    out_ << "  <line x1=\"" << x(x1) << "\" y1=\"" << y(y1) << "\" x2=\"" << x(x2) << "\" y2=\"" << y(y2)
         << "\" stroke=\"" << stroke << "\" stroke-width=\"2\"/>\n";
  }

  std::string finish() {
    out_ << "</svg>\n";
    return out_.str();
  }

 private:
  std::string x(const Rational& v) const { return format_fixed6((v - lo_[0]) * scale_); }
  std::string y(const Rational& v) const { return format_fixed6((hi_[1] - v) * scale_); }

  RatVec lo_, hi_;
  Rational scale_;
  std::ostringstream out_;
};

std::string fill_for(TileKind kind, const Style& style) {
  return kind == TileKind::Big ? style.big_fill : style.small_fill;
}

std::optional<PlacedRect> clip(const TileRef& tile, const RatVec& tile_lo, const RatVec& tile_hi, const RatVec& lo,
                               const RatVec& hi, const Style& style) {
  PlacedRect r{tile, tile_lo, tile_hi, RatVec(2), RatVec(2), fill_for(tile.kind, style)};
  for (std::size_t i = 0; i < 2; ++i) {
    r.lo[i] = std::max(tile_lo[i], lo[i]);
    r.hi[i] = std::min(tile_hi[i], hi[i]);
    if (!(r.lo[i] < r.hi[i])) return std::nullopt;
  }
  return r;
}

Figure finish_figure(RatVec lo, RatVec hi, std::vector<PlacedRect> rects, const Viewport& vp) {
  Figure f{std::move(lo), std::move(hi), std::move(rects), {}};
  SvgWriter svg(f.lo, f.hi, vp.scale);
  for (const auto& r : f.rects) svg.rect(r.lo, r.hi, r.fill, vp.style.stroke);
  f.svg = svg.finish();
  return f;
}

}  // namespace

Figure render_tiling_2d(const TilingParams& params, const Viewport& vp) {
  if (params.n() != 2) throw Error(Errc::InvalidParams, "2D rendering needs n = 2");
  check_viewport(vp, 2);
  const RatVec lo{vp.lo[0], vp.lo[1]}, hi{vp.hi[0], vp.hi[1]};
  const BasisA basis = build_basis(params);
  std::vector<PlacedRect> rects;
  for (const auto& tile : tiles_in_box(lo, hi, params)) {
    const Box box = tile_box(tile, params, basis);
    if (auto r = clip(tile, box.lo, box.hi, lo, hi, vp.style)) rects.push_back(std::move(*r));
  }
  return finish_figure(lo, hi, std::move(rects), vp);
}

std::vector<Figure> render_slices_3d(const TilingParams& params, const std::vector<Rational>& z_values,
                                     const Viewport& vp) {
  if (params.n() != 3) throw Error(Errc::InvalidParams, "slice rendering needs n = 3");
  check_viewport(vp, 2);
  const RatVec lo{vp.lo[0], vp.lo[1]}, hi{vp.hi[0], vp.hi[1]};
  const BasisA basis = build_basis(params);
  const Rational pad = params.p() / 2;
  std::vector<Figure> out;
  for (const auto& z : z_values) {
    std::vector<PlacedRect> rects;
    for (const auto& tile : tiles_in_box({lo[0], lo[1], z - pad}, {hi[0], hi[1], z + pad}, params)) {
      const Box box = tile_box(tile, params, basis);
      if (!(box.lo[2] <= z && z < box.hi[2])) continue;
      if (auto r = clip(tile, {box.lo[0], box.lo[1]}, {box.hi[0], box.hi[1]}, lo, hi, vp.style))
        rects.push_back(std::move(*r));
    }
    out.push_back(finish_figure(lo, hi, std::move(rects), vp));
  }
  return out;
}

Figure render_torus_map(const TorusTiling& t, const Rational& cell_size) {
  if (t.params.n() != 2) throw Error(Errc::InvalidParams, "torus map rendering needs n = 2");
  const std::int64_t m = t.params.m();
  auto colour = [](std::int32_t id) {
    if (id < 0) return std::string("#ffffff");
    // Multiplication by an odd constant permutes 24-bit values, so ids map to distinct colours.
    const auto v = (static_cast<std::uint32_t>(id) * 2654435761u + 0x5a3c91u) & 0xffffffu;
    char buf[8];
    std::snprintf(buf, sizeof buf, "#%06x", v);
    return std::string(buf);
  };

  Figure f{{Rational(0), Rational(0)}, {Rational(m), Rational(m)}, {}, {}};
  SvgWriter svg(f.lo, f.hi, cell_size);
  for (std::int64_t y = 0; y < m; ++y) {
    for (std::int64_t x = 0; x < m; ++x) {
      const std::int32_t id = t.owner.at(t.index_of({x, y}));
      TileRef ref{id % 2 == 0 ? TileKind::Big : TileKind::Small, {}};
      if (id >= 0 && static_cast<std::size_t>(id / 2) < t.residues.size())
        for (auto c : t.residues[static_cast<std::size_t>(id / 2)]) ref.anchor.emplace_back(c);
      RatVec lo{Rational(x), Rational(y)}, hi{Rational(x + 1), Rational(y + 1)};
      PlacedRect r{ref, lo, hi, lo, hi, colour(id)};
      svg.rect(r.lo, r.hi, r.fill, "");
      f.rects.push_back(std::move(r));
    }
  }
  const std::string stroke = "#000000";
  for (std::int64_t y = 0; y < m; ++y) {
    for (std::int64_t x = 0; x < m; ++x) {
      const std::int32_t id = t.owner.at(t.index_of({x, y}));
      const std::int32_t right = t.owner.at(t.index_of({(x + 1) % m, y}));
      const std::int32_t up = t.owner.at(t.index_of({x, (y + 1) % m}));
      if (id != right) svg.line(Rational(x + 1), Rational(y), Rational(x + 1), Rational(y + 1), stroke);
      if (id != up) svg.line(Rational(x), Rational(y + 1), Rational(x + 1), Rational(y + 1), stroke);
    }
  }
  f.svg = svg.finish();
  return f;
}

std::string export_mesh_obj(const TilingParams& params, const RatVec& lo, const RatVec& hi) {
  if (params.n() != 3) throw Error(Errc::InvalidParams, "mesh export needs n = 3");
  const BasisA basis = build_basis(params);
  std::ostringstream out;
  out << "# hyptile n=3 p=" << to_string(params.p()) << " q=" << to_string(params.q()) << "\n";
  std::size_t base = 1;
  for (const auto& tile : tiles_in_box(lo, hi, params)) {
    const Box box = tile_box(tile, params, basis);
    out << "o " << to_string(tile.kind) << "_" << to_string(tile.anchor) << "\n";
    for (int corner = 0; corner < 8; ++corner) {
      out << "v";
      for (std::size_t i = 0; i < 3; ++i) out << " " << format_fixed6((corner >> i) & 1 ? box.hi[i] : box.lo[i]);
      out << "\n";
    }
    // Corner index bits are (x, y, z).
    static constexpr int kFaces[6][4] = {{0, 2, 3, 1}, {4, 5, 7, 6}, {0, 1, 5, 4},
                                         {2, 6, 7, 3}, {0, 4, 6, 2}, {1, 3, 7, 5}};
    for (const auto& face : kFaces) {
      out << "f";
      for (int v : face) out << " " << base + static_cast<std::size_t>(v);
      out << "\n";
    }
    base += 8;
  }
  return out.str();
}

CoverAudit audit_cover(const Figure& figure) {
  CoverAudit audit;
  audit.viewport_area = (figure.hi[0] - figure.lo[0]) * (figure.hi[1] - figure.lo[1]);
  audit.covered_area = 0;
  const auto& rects = figure.rects;
  for (const auto& r : rects) audit.covered_area += (r.hi[0] - r.lo[0]) * (r.hi[1] - r.lo[1]);
  for (std::size_t a = 0; a < rects.size() && audit.overlap_free; ++a) {
    for (std::size_t b = a + 1; b < rects.size(); ++b) {
      bool overlap = true;
      for (std::size_t i = 0; i < 2 && overlap; ++i)
        overlap = std::max(rects[a].lo[i], rects[b].lo[i]) < std::min(rects[a].hi[i], rects[b].hi[i]);
      if (overlap) {
        audit.overlap_free = false;
        audit.counterexample = to_string(rects[a].tile.kind) + " " + to_string(rects[a].tile.anchor) + " overlaps " +
                               to_string(rects[b].tile.kind) + " " + to_string(rects[b].tile.anchor);
        break;
      }
    }
  }
  return audit;
}

bool audit_same_size_adjacency(const Figure& figure, std::string* counterexample) {
  const auto& rects = figure.rects;
  for (std::size_t a = 0; a < rects.size(); ++a) {
    for (std::size_t b = 0; b < rects.size(); ++b) {
      if (a == b || rects[a].tile.kind != rects[b].tile.kind) continue;
      // b is a's translate by its own side along one axis.
      for (std::size_t i = 0; i < 2; ++i) {
        const std::size_t o = 1 - i;
        if (rects[b].tile_lo[i] == rects[a].tile_hi[i] && rects[b].tile_lo[o] == rects[a].tile_lo[o] &&
            rects[b].tile_hi[o] == rects[a].tile_hi[o]) {
          if (counterexample)
            *counterexample = to_string(rects[a].tile.kind) + " tiles " + to_string(rects[a].tile.anchor) + " and " +
                              to_string(rects[b].tile.anchor) + " share an edge";
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace hyptile
