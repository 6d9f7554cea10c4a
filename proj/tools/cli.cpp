#include "cli.hpp"

#include "hyptile/error.hpp"
#include "hyptile/render.hpp"
#include "hyptile/report.hpp"
#include "hyptile/symmetry.hpp"
#include "hyptile/torus.hpp"
#include "hyptile/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace hyptile::cli {

namespace {

constexpr std::uint64_t kMaxSamples = 10'000'000;
constexpr std::uint64_t kMaxCellBudget = 1'000'000'000;

struct RunConfig {
  std::string subcommand;
  int n = 0;
  std::string p;
  std::string q;
  std::string point;
  std::string vector;
  std::string box;
  std::string out_path;
  std::string format = "human";
  std::uint64_t samples = 10'000;
  std::uint64_t cell_budget = kDefaultCellBudget;
  std::uint64_t seed = VerifyOptions{}.seed;
  bool brute_force = false;
  int axis = 0;
  std::vector<std::string> z_values;
  bool torus_map = false;
  bool mesh = false;
  std::string scale = "40";
};

/// Thrown for flag-level problems; carries the offending flag.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Outcome {
  int status = kExitOk;
  std::string human;
  nlohmann::json structured;
};

bool structured(const RunConfig& c) { return c.format == "structured"; }

TilingParams tiling_params(const RunConfig& c) {
  try {
    return TilingParams(c.n, parse_rational(c.p), parse_rational(c.q));
  } catch (const Error& e) {
    throw UsageError(std::string("--n/--p/--q: ") + e.what());
  }
}

std::int64_t integer_flag(const std::string& flag, const std::string& text) {
  Rational r;
  try {
    r = parse_rational(text);
  } catch (const Error& e) {
    throw UsageError(flag + ": " + e.what());
  }
  if (denominator_of(r) != 1 || abs(r) > Rational(std::numeric_limits<std::int32_t>::max()))
    throw UsageError(flag + ": torus commands need a (moderate) integer, got '" + text + "'");
  return numerator_of(r).convert_to<std::int64_t>();
}

TorusParams torus_params(const RunConfig& c) {
  try {
    return TorusParams(c.n, integer_flag("--p", c.p), integer_flag("--q", c.q));
  } catch (const Error& e) {
    throw UsageError(std::string("--n/--p/--q: ") + e.what());
  }
}

RatVec vector_flag(const std::string& flag, const std::string& text, std::size_t n) {
  if (text.empty()) throw UsageError(flag + " is required");
  RatVec v;
  try {
    v = parse_vector(text);
  } catch (const Error& e) {
    throw UsageError(flag + ": " + e.what());
  }
  if (v.size() != n)
    throw UsageError(flag + ": expected " + std::to_string(n) + " coordinates, got " + std::to_string(v.size()));
  return v;
}

/// `dims` lists the accepted coordinate counts.
std::pair<RatVec, RatVec> box_flag(const std::string& text, std::vector<std::size_t> dims) {
  const auto sep = text.find("..");
  if (sep == std::string::npos) throw UsageError("--box: expected 'lo..hi', e.g. 0,0..10,10");
  RatVec lo, hi;
  try {
    lo = parse_vector(text.substr(0, sep));
    hi = parse_vector(text.substr(sep + 2));
  } catch (const Error& e) {
    throw UsageError(std::string("--box: ") + e.what());
  }
  const std::size_t n = lo.size();
  if (hi.size() != n || std::find(dims.begin(), dims.end(), n) == dims.end())
    throw UsageError("--box: expected " + std::to_string(dims.front()) + " coordinates on each side");
  for (std::size_t i = 0; i < n; ++i)
    if (!(lo[i] < hi[i])) throw UsageError("--box: need lo < hi in every coordinate");
  return {std::move(lo), std::move(hi)};
}

std::string matrix_text(const RatMat& m) {
  std::ostringstream os;
  for (std::size_t i = 0; i < m.size(); ++i) {
    os << "  [";
    for (std::size_t j = 0; j < m.size(); ++j) os << (j ? ", " : "") << std::setw(5) << to_string(m(i, j));
    os << "]\n";
  }
  return os.str();
}

std::string matrix_text(const IntMat& m) { return matrix_text(to_rational(m)); }

Outcome cmd_basis(const RunConfig& c) {
  const TilingParams params = tiling_params(c);
  const BasisA basis = build_basis(params);
  const ReductionBasis rb = build_reduction_basis(params);
  Outcome o;
  o.human = "A (columns a_1..a_n):\n" + matrix_text(basis.matrix) + "det(A) = " + to_string(basis.det) +
            "\nreduction basis (columns b_1..b_n):\n" + matrix_text(rb.matrix) +
            "fundamental domain: [0," + to_string(params.q()) + ")^" + std::to_string(params.n()) + " u [0," +
            to_string(params.p()) + ")^" + std::to_string(params.n() - 1) + " x [" + to_string(params.q()) + "," +
            to_string(params.q() + params.p()) + ")\n";
  o.structured = report_header("basis");
  o.structured["n"] = params.n();
  o.structured["p"] = to_string(params.p());
  o.structured["q"] = to_string(params.q());
  o.structured["A"] = to_json(basis.matrix);
  o.structured["det"] = to_string(basis.det);
  o.structured["reduction_basis"] = to_json(rb.matrix);
  return o;
}

Outcome cmd_locate(const RunConfig& c) {
  const TilingParams params = tiling_params(c);
  const RatVec x = vector_flag("--point", c.point, params.dim());
  const CanonicalPoint cp = canonicalize(x, params);
  const TileKind kind = in_big_box(cp.c, params) ? TileKind::Big : TileKind::Small;
  Outcome o;
  o.human = to_string(kind) + " k=" + to_string(cp.k) + "\n";
  o.structured = report_header("locate");
  o.structured["point"] = to_json(x);
  o.structured["kind"] = to_string(kind);
  o.structured["k"] = to_json(cp.k);
  o.structured["representative"] = to_json(cp.c);
  return o;
}

Outcome cmd_member(const RunConfig& c) {
  const TilingParams params = tiling_params(c);
  const RatVec v = vector_flag("--vector", c.vector, params.dim());
  const BasisA basis = build_basis(params);
  const bool member = is_lattice_member(v, basis);
  const RatVec coords = solve_exact(basis.matrix, v);
  Outcome o;
  o.status = member ? kExitOk : kExitVerificationFailed;
  o.human = member ? "member k=" + to_string(coords) + "\n"
                   : "not a member (A^-1 v = " + to_string(coords) + ")\n";
  o.structured = report_header("member");
  o.structured["vector"] = to_json(v);
  o.structured["member"] = member;
  o.structured["coordinates"] = to_json(coords);
  return o;
}

Outcome cmd_verify(const RunConfig& c) {
  const TilingParams params = tiling_params(c);
  VerifyOptions options;
  options.samples = c.samples;
  options.seed = c.seed;
  const VerifyReport report = run_verification(params, options);
  Outcome o;
  o.status = report.passed() ? kExitOk : kExitVerificationFailed;
  for (const auto& check : report.checks) {
    o.human += (check.passed ? "PASS " : "FAIL ") + check.name + ": " + check.detail;
    if (check.counterexample) o.human += " [counterexample: " + *check.counterexample + "]";
    o.human += "\n";
  }
  o.human += report.passed() ? "all checks passed\n" : "verification FAILED\n";
  o.structured = to_json(report);
  return o;
}

Outcome cmd_symmetries(const RunConfig& c) {
  const TilingParams params = tiling_params(c);
  const auto closed = stabilizer_closed_form(params.n());
  Outcome o;
  o.structured = report_header("symmetries");
  o.structured["n"] = params.n();
  auto list = nlohmann::json::array();
  o.human = "stabilizer (order " + std::to_string(closed.size()) + "):\n";
  for (const auto& s : closed) {
    o.human += "  " + s.to_string() + "\n";
    list.push_back(s.to_string());
  }
  o.structured["closed_form"] = list;
  if (c.brute_force) {
    std::vector<SignedPermutation> brute;
    try {
      brute = stabilizer_brute_force(params.n(), build_basis(params));
    } catch (const Error& e) {
      throw UsageError(std::string("--brute-force: ") + e.what());
    }
    const bool agree = brute == closed;
    o.status = agree ? kExitOk : kExitVerificationFailed;
    o.human += "brute force over all signed permutations: " + std::to_string(brute.size()) + " elements, " +
               (agree ? "matches closed form\n" : "MISMATCH\n");
    if (!agree)
      for (const auto& s : brute)
        if (std::find(closed.begin(), closed.end(), s) == closed.end())
          o.human += "  counterexample: " + s.to_string() + "\n";
    auto bl = nlohmann::json::array();
    for (const auto& s : brute) bl.push_back(s.to_string());
    o.structured["brute_force"] = bl;
    o.structured["agree"] = agree;
  }
  return o;
}

Outcome cmd_period(const RunConfig& c) {
  const TorusParams params = torus_params(c);
  std::vector<std::int64_t> periods;
  for (int axis = 1; axis <= params.n(); ++axis) periods.push_back(minimal_axis_period(params, axis));
  const bool entry_check = adjugate_entry_check(params);
  Outcome o;
  if (c.axis != 0) {
    if (c.axis < 1 || c.axis > params.n()) throw UsageError("--axis must lie in [1, n]");
    o.human = std::to_string(periods[static_cast<std::size_t>(c.axis - 1)]) + "\n";
  } else if (std::all_of(periods.begin(), periods.end(), [&](auto v) { return v == periods.front(); })) {
    o.human = std::to_string(periods.front()) + "\n";
  } else {
    for (std::size_t i = 0; i < periods.size(); ++i)
      o.human += "axis " + std::to_string(i + 1) + ": " + std::to_string(periods[i]) + "\n";
  }
  o.structured = report_header("period");
  o.structured["n"] = params.n();
  o.structured["p"] = params.p();
  o.structured["q"] = params.q();
  o.structured["m"] = params.m();
  o.structured["min_period_per_axis"] = periods;
  o.structured["adjugate_entry_check"] = entry_check;
  return o;
}

std::string torus_text(const TorusReport& r) {
  std::ostringstream os;
  os << "torus (Z/" << r.m << ")^" << r.n << "  p=" << r.p << " q=" << r.q << "\n"
     << "  residues: " << r.residue_count << "  big cubes: " << r.big_count << "  small cubes: " << r.small_count
     << "\n"
     << "  exact cover: " << (r.exact_cover ? "yes" : "NO") << "  unilateral: " << (r.unilateral ? "yes" : "NO")
     << "\n"
     << "  minimal axis period: " << r.min_period << "\n";
  if (r.scan_candidates) {
    os << "  scanned index-" << r.m << " sublattices: " << *r.scan_candidates << ", tiling survivors: "
       << r.survivors.size() << "\n";
    for (const auto& s : r.survivors) {
      os << "    hnf rows [";
      for (std::size_t i = 0; i < s.hnf.size(); ++i) {
        os << (i ? "; " : "");
        for (std::size_t j = 0; j < s.hnf[i].size(); ++j) os << (j ? " " : "") << s.hnf[i][j];
      }
      os << "]" << (s.is_reference ? " (A)" : "") << "  equivalent via "
         << (s.equivalence ? *s.equivalence : std::string("NONE")) << "\n";
    }
  }
  if (r.counterexample) os << "  counterexample: " << *r.counterexample << "\n";
  return os.str();
}

Outcome cmd_torus(const RunConfig& c, bool scan) {
  const TorusParams params = torus_params(c);
  const TorusReport r = make_torus_report(params, c.cell_budget, scan);
  Outcome o;
  bool ok = r.exact_cover && r.unilateral;
  if (scan) {
    ok = ok && std::any_of(r.survivors.begin(), r.survivors.end(), [](const auto& s) { return s.is_reference; }) &&
         std::all_of(r.survivors.begin(), r.survivors.end(), [](const auto& s) { return s.equivalence.has_value(); });
  }
  o.status = ok ? kExitOk : kExitVerificationFailed;
  o.human = torus_text(r);
  o.structured = to_json(r);
  return o;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("--out: cannot write '" + path + "'");
  f << content;
}

std::string numbered_path(const std::string& path, std::size_t index) {
  std::ostringstream suffix;
  suffix << "_" << std::setw(3) << std::setfill('0') << index;
  const auto dot = path.rfind('.');
  const auto slash = path.rfind('/');
  if (dot == std::string::npos || (slash != std::string::npos && dot < slash)) return path + suffix.str();
  return path.substr(0, dot) + suffix.str() + path.substr(dot);
}

Outcome cmd_render(const RunConfig& c, std::ostream& out) {
  Outcome o;
  o.structured = report_header("render");
  Rational scale;
  try {
    scale = parse_rational(c.scale);
  } catch (const Error& e) {
    throw UsageError(std::string("--scale: ") + e.what());
  }

  std::vector<std::pair<std::string, std::string>> documents;  // (path, content)
  // Slices of the 3D tiling may show equal squares side by side, so the
  // adjacency audit only applies to planar tilings.
  auto add_figure = [&](const Figure& f, const std::string& path, bool planar) {
    nlohmann::json entry{{"path", path}, {"rectangles", f.rects.size()}, {"exact_cover", audit_cover(f).exact()}};
    if (planar) entry["same_size_adjacency_free"] = audit_same_size_adjacency(f);
    o.structured["documents"].push_back(std::move(entry));
    documents.emplace_back(path, f.svg);
  };

  if (c.torus_map) {
    const TorusParams tp = torus_params(c);
    if (tp.n() != 2) throw UsageError("--torus: torus maps need --n 2");
    const Figure f = render_torus_map(build_torus_tiling(tp, c.cell_budget));
    documents.emplace_back(c.out_path, f.svg);
    o.structured["documents"].push_back({{"path", c.out_path}, {"rectangles", f.rects.size()}});
  } else {
    const TilingParams params = tiling_params(c);
    Viewport vp;
    vp.scale = scale;
    if (c.box.empty()) {
      vp.lo = RatVec(params.dim(), Rational(0));
      vp.hi = RatVec(params.dim(), Rational(10));
    } else if (params.n() == 3 && !c.mesh) {
      std::tie(vp.lo, vp.hi) = box_flag(c.box, {2, 3});  // slices use the first two coordinates
    } else {
      std::tie(vp.lo, vp.hi) = box_flag(c.box, {params.dim()});
    }
    if (c.mesh) {
      if (params.n() != 3) throw UsageError("--mesh: mesh export needs --n 3");
      documents.emplace_back(c.out_path, export_mesh_obj(params, vp.lo, vp.hi));
      o.structured["documents"].push_back({{"path", c.out_path}});
    } else if (params.n() == 2) {
      add_figure(render_tiling_2d(params, vp), c.out_path, true);
    } else if (params.n() == 3) {
      std::vector<Rational> zs;
      for (const auto& z : c.z_values) {
        try {
          zs.push_back(parse_rational(z));
        } catch (const Error& e) {
          throw UsageError(std::string("--z: ") + e.what());
        }
      }
      if (zs.empty()) zs.push_back(Rational(1, 2));
      const auto figures = render_slices_3d(params, zs, vp);
      for (std::size_t i = 0; i < figures.size(); ++i)
        add_figure(figures[i], c.out_path.empty() || figures.size() == 1 ? c.out_path : numbered_path(c.out_path, i), false);
    } else {
      throw UsageError("render: --n must be 2 or 3");
    }
  }

  for (const auto& [path, content] : documents) {
    if (path.empty()) {
      if (!structured(c)) out << content;
    } else {
      write_file(path, content);
      if (!structured(c)) o.human += "wrote " + path + "\n";
    }
  }
  bool ok = true;
  for (const auto& d : o.structured["documents"]) {
    if (d.contains("exact_cover") && !d["exact_cover"].get<bool>()) ok = false;
    if (d.contains("same_size_adjacency_free") && !d["same_size_adjacency_free"].get<bool>()) ok = false;
  }
  o.status = ok ? kExitOk : kExitVerificationFailed;
  return o;
}

void add_params(CLI::App* sub, RunConfig& c) {
  sub->add_option("--n", c.n, "dimension (>= 2)")->required();
  sub->add_option("--p", c.p, "small side length, integer or a/b")->required();
  sub->add_option("--q", c.q, "big side length, integer or a/b")->required();
}

void add_output(CLI::App* sub, RunConfig& c) {
  sub->add_option("--out", c.out_path, "write the report or document to PATH");
  sub->add_option("--format", c.format, "human | structured")
      ->check(CLI::IsMember({"human", "structured"}));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"hyptile: exact two-size hypercube lattice tilings", "hyptile"};
  app.require_subcommand(1);
  RunConfig c;

  auto* basis = app.add_subcommand("basis", "print the lattice basis, reduction basis and domain");
  add_params(basis, c);
  add_output(basis, c);

  auto* locate = app.add_subcommand("locate", "find the tile containing a point");
  add_params(locate, c);
  add_output(locate, c);
  locate->add_option("--point", c.point, "comma-separated rationals")->required();

  auto* member = app.add_subcommand("member", "test lattice membership (exit 1 if not a member)");
  add_params(member, c);
  add_output(member, c);
  member->add_option("--vector", c.vector, "comma-separated rationals")->required();

  auto* verify = app.add_subcommand("verify", "run the property suite");
  add_params(verify, c);
  add_output(verify, c);
  verify->add_option("--samples", c.samples, "random samples per check")
      ->check(CLI::Range(std::uint64_t{1}, kMaxSamples));
  verify->add_option("--seed", c.seed, "random seed");

  auto* symmetries = app.add_subcommand("symmetries", "list the stabilizer in the hyperoctahedral group");
  add_params(symmetries, c);
  add_output(symmetries, c);
  symmetries->add_flag("--brute-force", c.brute_force, "cross-check against all signed permutations (n <= 6)");

  auto* period = app.add_subcommand("period", "minimal period along the coordinate axes");
  add_params(period, c);
  add_output(period, c);
  period->add_option("--axis", c.axis, "only this axis (1-based)");

  auto* torus = app.add_subcommand("torus", "build and audit the tiling of (Z/m)^n");
  add_params(torus, c);
  add_output(torus, c);
  torus->add_option("--cell-budget", c.cell_budget, "maximum number of torus cells")
      ->check(CLI::Range(std::uint64_t{1}, kMaxCellBudget));

  auto* scan = app.add_subcommand("scan", "scan all index-m sublattices for tilings (n <= 3)");
  add_params(scan, c);
  add_output(scan, c);
  scan->add_option("--cell-budget", c.cell_budget, "maximum number of torus cells")
      ->check(CLI::Range(std::uint64_t{1}, kMaxCellBudget));

  auto* render = app.add_subcommand("render", "write SVG figures (or an OBJ mesh)");
  add_params(render, c);
  add_output(render, c);
  render->add_option("--box", c.box, "viewport lo..hi, e.g. 0,0..10,10");
  render->add_option("--z", c.z_values, "slice heights for n = 3")->delimiter(',');
  render->add_option("--scale", c.scale, "document units per length unit");
  render->add_flag("--torus", c.torus_map, "draw the (Z/m)^2 cell map instead");
  render->add_flag("--mesh", c.mesh, "export an OBJ mesh of the n = 3 tiles in --box");
  render->add_option("--cell-budget", c.cell_budget, "maximum number of torus cells")
      ->check(CLI::Range(std::uint64_t{1}, kMaxCellBudget));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << "run 'hyptile --help' for usage\n";
    return kExitUsage;
  }

  const CLI::App* chosen = app.get_subcommands().front();
  c.subcommand = chosen->get_name();

  try {
    Outcome o;
    if (c.subcommand == "basis") o = cmd_basis(c);
    else if (c.subcommand == "locate") o = cmd_locate(c);
    else if (c.subcommand == "member") o = cmd_member(c);
    else if (c.subcommand == "verify") o = cmd_verify(c);
    else if (c.subcommand == "symmetries") o = cmd_symmetries(c);
    else if (c.subcommand == "period") o = cmd_period(c);
    else if (c.subcommand == "torus") o = cmd_torus(c, false);
    else if (c.subcommand == "scan") o = cmd_torus(c, true);
    else if (c.subcommand == "render") o = cmd_render(c, out);

    if (c.subcommand == "render") {
      if (structured(c)) out << o.structured.dump(2) << "\n";
      else out << o.human;
    } else {
      const std::string text = structured(c) ? o.structured.dump(2) + "\n" : o.human;
      if (c.out_path.empty()) {
        out << text;
      } else {
        write_file(c.out_path, text);
      }
    }
    return o.status;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    if (e.code() == Errc::CoverViolation) {
      err << "verification failure: " << e.what() << "\n";
      return kExitVerificationFailed;
    }
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace hyptile::cli
