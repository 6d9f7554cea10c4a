#include "hyptile/error.hpp"
#include "hyptile/render.hpp"

#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

using namespace hyptile;

namespace {

template <class F>
Errc error_code(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no hyptile::Error thrown");
  return Errc::Parse;
}

Viewport square(Rational lo, Rational hi, std::size_t dim = 2) {
  Viewport vp;
  vp.lo = RatVec(dim, lo);
  vp.hi = RatVec(dim, hi);
  return vp;
}

std::size_t count_lines(const std::string& text, const std::string& prefix) {
  std::istringstream in(text);
  std::size_t n = 0;
  for (std::string line; std::getline(in, line);) {
    const auto start = line.find_first_not_of(' ');
    n += start != std::string::npos && line.compare(start, prefix.size(), prefix) == 0;
  }
  return n;
}

std::set<std::pair<int, std::string>> tile_keys(const Figure& f) {
  std::set<std::pair<int, std::string>> out;
  for (const auto& r : f.rects) out.insert({static_cast<int>(r.tile.kind), to_string(r.tile.anchor)});
  return out;
}

}  // namespace

TEST_SUITE("render") {
  TEST_CASE("format_fixed6") {
    CHECK(format_fixed6(Rational(1, 3)) == "0.333333");
    CHECK(format_fixed6(Rational(2, 3)) == "0.666667");
    CHECK(format_fixed6(Rational(-2, 3)) == "-0.666667");
    CHECK(format_fixed6(Rational(5, 10'000'000)) == "0.000001");
    CHECK(format_fixed6(Rational(-5, 10'000'000)) == "-0.000001");
    CHECK(format_fixed6(Rational(-1, 100'000'000)) == "0.000000");
    CHECK(format_fixed6(Rational(42)) == "42.000000");
  }

  TEST_CASE("2D cover of [0,10]^2 is exact for p=1, q=2") {
    const TilingParams params(2, 1, 2);
    const Figure f = render_tiling_2d(params, square(0, 10));
    const CoverAudit audit = audit_cover(f);
    CHECK(audit.viewport_area == 100);
    CHECK(audit.covered_area == 100);
    CHECK(audit.overlap_free);
    CHECK(audit.exact());
    CHECK(audit_same_size_adjacency(f));
    CHECK(f.svg.rfind("<?xml", 0) == 0);
    CHECK(count_lines(f.svg, "<svg") == 1);
    CHECK(count_lines(f.svg, "<rect") == f.rects.size());
  }

  TEST_CASE("rational sides and an offset viewport") {
    const TilingParams params(2, Rational(2, 3), Rational(7, 4));
    Viewport vp;
    vp.lo = RatVec{Rational(-13, 7), Rational(5, 3)};
    vp.hi = RatVec{Rational(29, 5), Rational(41, 4)};
    const CoverAudit audit = audit_cover(render_tiling_2d(params, vp));
    CHECK(audit.exact());
  }

  TEST_CASE("p=2, q=3: every small square is surrounded by big squares") {
    const TilingParams params(2, 2, 3);
    const Figure f = render_tiling_2d(params, square(-10, 20));
    CHECK(audit_cover(f).exact());
    std::string counterexample;
    CHECK(audit_same_size_adjacency(f, &counterexample));
    CHECK(counterexample.empty());
    int checked = 0;
    for (const auto& r : f.rects) {
      if (r.tile.kind != TileKind::Small || r.tile_lo[0] < 0 || r.tile_lo[1] < 0 || r.tile_hi[0] > 10 ||
          r.tile_hi[1] > 10)
        continue;
      const Rational eps(1, 1000);
      const Rational mx = (r.tile_lo[0] + r.tile_hi[0]) / 2, my = (r.tile_lo[1] + r.tile_hi[1]) / 2;
      for (const RatVec& probe : {RatVec{r.tile_lo[0] - eps, my}, RatVec{r.tile_hi[0] + eps, my},
                                  RatVec{mx, r.tile_lo[1] - eps}, RatVec{mx, r.tile_hi[1] + eps}})
        CHECK(locate(probe, params).kind == TileKind::Big);
      ++checked;
    }
    CHECK(checked > 5);
  }

  TEST_CASE("adjacency audit catches same-size neighbours") {
    const TilingParams params(2, 1, 2);
    Figure f = render_tiling_2d(params, square(0, 6));
    PlacedRect twin = f.rects.front();
    const Rational w = twin.tile_hi[0] - twin.tile_lo[0];
    for (auto* v : {&twin.tile_lo, &twin.tile_hi, &twin.lo, &twin.hi}) (*v)[0] += w;
    twin.tile.anchor[0] += 1000;  // distinct identity
    f.rects.push_back(twin);
    std::string counterexample;
    CHECK_FALSE(audit_same_size_adjacency(f, &counterexample));
    CHECK_FALSE(counterexample.empty());
    CHECK_FALSE(audit_cover(f).exact());
  }

  TEST_CASE("byte-stable output") {
    const TilingParams params(2, 1, 2);
    CHECK(render_tiling_2d(params, square(0, 10)).svg == render_tiling_2d(params, square(0, 10)).svg);
    const TilingParams p3(3, 1, 2);
    CHECK(render_slices_3d(p3, {Rational(1, 2)}, square(0, 6)).front().svg ==
          render_slices_3d(p3, {Rational(1, 2)}, square(0, 6)).front().svg);
  }

  TEST_CASE("errors") {
    CHECK(error_code([] { render_tiling_2d(TilingParams(3, 1, 2), square(0, 1)); }) == Errc::InvalidParams);
    CHECK(error_code([] { render_tiling_2d(TilingParams(2, 1, 2), square(1, 1)); }) == Errc::InvalidParams);
    CHECK(error_code([] { render_slices_3d(TilingParams(2, 1, 2), {0}, square(0, 1)); }) == Errc::InvalidParams);
    Viewport bad = square(0, 1);
    bad.scale = 0;
    CHECK(error_code([&] { render_tiling_2d(TilingParams(2, 1, 2), bad); }) == Errc::InvalidParams);
    CHECK(error_code([] { render_torus_map(build_torus_tiling(TorusParams(3, 1, 2))); }) == Errc::InvalidParams);
    CHECK(error_code([] { export_mesh_obj(TilingParams(2, 1, 2), {0, 0}, {1, 1}); }) == Errc::InvalidParams);
  }
}

TEST_SUITE("render slices") {
  const TilingParams params(3, 1, 2);

  TEST_CASE("each slice is an exact planar cover") {
    const std::vector<Rational> zs{Rational(1, 2), 0, 1, 2, Rational(5, 2), Rational(-7, 3)};
    for (const auto& f : render_slices_3d(params, zs, square(-2, 8))) {
      CHECK(audit_cover(f).exact());
    }
    CHECK(audit_cover(render_slices_3d(TilingParams(3, 2, 3), {Rational(4, 3)}, square(0, 9)).front()).exact());
  }

  TEST_CASE("a tile appears iff z lies in its half-open x_3 extent") {
    const BasisA basis = build_basis(params);
    const std::vector<Rational> zs{0, 1, 2};  // boundary heights
    const auto figures = render_slices_3d(params, zs, square(0, 6));
    for (std::size_t k = 0; k < zs.size(); ++k) {
      for (const auto& r : figures[k].rects) {
        const Box b = tile_box(r.tile, params, basis);
        CHECK(b.lo[2] <= zs[k]);
        CHECK(zs[k] < b.hi[2]);
      }
    }
  }

  TEST_CASE("consecutive slices differ only where tiles end or begin") {
    const BasisA basis = build_basis(params);
    const Rational z1(1, 2), z2(7, 4);
    const auto figures = render_slices_3d(params, {z1, z2}, square(0, 6));
    std::map<std::pair<int, std::string>, TileRef> all;
    for (const auto& f : figures)
      for (const auto& r : f.rects) all.emplace(std::make_pair(static_cast<int>(r.tile.kind), to_string(r.tile.anchor)), r.tile);
    const auto a = tile_keys(figures[0]), b = tile_keys(figures[1]);
    for (const auto& [key, tile] : all) {
      const Box box = tile_box(tile, params, basis);
      const bool in_a = a.count(key) > 0, in_b = b.count(key) > 0;
      if (in_a && !in_b) CHECK((z1 < box.hi[2] && box.hi[2] <= z2));
      if (!in_a && in_b) CHECK((z1 < box.lo[2] && box.lo[2] <= z2));
      if (in_a && in_b) CHECK((box.lo[2] <= z1 && z2 < box.hi[2]));
    }
    CHECK(a != b);
  }

  TEST_CASE("mesh export") {
    const RatVec lo{0, 0, 0}, hi{3, 3, 3};
    const auto tiles = tiles_in_box(lo, hi, params);
    const std::string obj = export_mesh_obj(params, lo, hi);
    CHECK(count_lines(obj, "v ") == 8 * tiles.size());
    CHECK(count_lines(obj, "f ") == 6 * tiles.size());
    CHECK(obj == export_mesh_obj(params, lo, hi));
  }
}

TEST_SUITE("render torus map") {
  TEST_CASE("n=2, p=1, q=2 grid") {
    const TorusTiling t = build_torus_tiling(TorusParams(2, 1, 2));
    const Figure f = render_torus_map(t);
    CHECK(f.rects.size() == 25);
    std::map<std::string, int> cells_per_colour;
    for (const auto& r : f.rects) ++cells_per_colour[r.fill];
    CHECK(cells_per_colour.size() == 10);  // 2 m^{n-1}
    int fours = 0, ones = 0;
    for (const auto& [colour, cells] : cells_per_colour) {
      fours += cells == 4;
      ones += cells == 1;
    }
    CHECK(fours == 5);
    CHECK(ones == 5);
    CHECK(f.svg == render_torus_map(t).svg);
  }

  TEST_CASE("distinct colours for larger moduli") {
    const TorusTiling t = build_torus_tiling(TorusParams(2, 3, 4));
    std::set<std::string> colours;
    for (const auto& r : render_torus_map(t).rects) colours.insert(r.fill);
    CHECK(colours.size() == 2 * 25);
  }

  TEST_CASE("a corrupted assignment still renders") {
    TorusTiling t = build_torus_tiling(TorusParams(2, 1, 2));
    t.owner[0] = -1;
    t.owner[7] = 12345;
    const Figure f = render_torus_map(t);
    CHECK(f.rects.size() == 25);
    CHECK_FALSE(f.svg.empty());
  }
}
