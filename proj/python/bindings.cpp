#include "hyptile/error.hpp"
#include "hyptile/render.hpp"
#include "hyptile/report.hpp"
#include "hyptile/symmetry.hpp"
#include "hyptile/torus.hpp"
#include "hyptile/verify.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace hyptile;

// Rationals cross the boundary as "a/b" strings and big integers as decimal
// strings; the Python package turns them into Fraction and int.

namespace {

using StrVec = std::vector<std::string>;
using StrMat = std::vector<StrVec>;

TilingParams params_of(int n, const std::string& p, const std::string& q) {
  return TilingParams(n, parse_rational(p), parse_rational(q));
}

RatVec vec_of(const StrVec& v) {
  RatVec out;
  for (const auto& s : v) out.push_back(parse_rational(s));
  return out;
}

StrVec strs(const RatVec& v) {
  StrVec out;
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

StrVec strs(const IntVec& v) {
  StrVec out;
  for (const auto& x : v) out.push_back(x.str());
  return out;
}

StrMat rows(const RatMat& m) {
  StrMat out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    StrVec row;
    for (std::size_t j = 0; j < m.size(); ++j) row.push_back(to_string(m(i, j)));
    out.push_back(std::move(row));
  }
  return out;
}

RatMat mat_of(const StrMat& rows) {
  std::vector<RatVec> r;
  for (const auto& row : rows) r.push_back(vec_of(row));
  return RatMat::from_rows(r);
}

StrVec perm_strings(const std::vector<SignedPermutation>& v) {
  StrVec out;
  for (const auto& s : v) out.push_back(s.to_string());
  return out;
}

}  // namespace

PYBIND11_MODULE(_hyptile, m) {
  m.doc() = "Exact two-size hypercube lattice tilings (native core)";

  // Messages start with the error code name, e.g. "InvalidParams: ...".
  py::register_exception<Error>(m, "HyptileError", PyExc_ValueError);

  m.def("det", [](const StrMat& matrix) { return to_string(det(mat_of(matrix))); });
  m.def("adjugate", [](const StrMat& matrix) { return rows(adjugate(mat_of(matrix))); });
  m.def("solve_exact", [](const StrMat& matrix, const StrVec& v) { return strs(solve_exact(mat_of(matrix), vec_of(v))); });

  m.def("basis", [](int n, const std::string& p, const std::string& q) {
    return rows(build_basis(params_of(n, p, q)).matrix);
  });
  m.def("reduction_basis", [](int n, const std::string& p, const std::string& q) {
    return rows(build_reduction_basis(params_of(n, p, q)).matrix);
  });
  m.def("canonicalize", [](int n, const std::string& p, const std::string& q, const StrVec& x) {
    const CanonicalPoint cp = canonicalize(vec_of(x), params_of(n, p, q));
    return py::make_tuple(strs(cp.c), strs(cp.k));
  });
  m.def("locate", [](int n, const std::string& p, const std::string& q, const StrVec& x) {
    const TileRef t = locate(vec_of(x), params_of(n, p, q));
    return py::make_tuple(to_string(t.kind), strs(t.anchor));
  });
  m.def("is_lattice_member", [](int n, const std::string& p, const std::string& q, const StrVec& v) {
    return is_lattice_member(vec_of(v), build_basis(params_of(n, p, q)));
  });
  m.def("check_unilateral", [](int n, const std::string& p, const std::string& q) {
    return check_unilateral(params_of(n, p, q));
  });
  m.def("tiles_in_box", [](int n, const std::string& p, const std::string& q, const StrVec& lo, const StrVec& hi) {
    std::vector<py::tuple> out;
    for (const auto& t : tiles_in_box(vec_of(lo), vec_of(hi), params_of(n, p, q)))
      out.push_back(py::make_tuple(to_string(t.kind), strs(t.anchor)));
    return out;
  });

  m.def("stabilizer_closed_form", [](int n) { return perm_strings(stabilizer_closed_form(n)); });
  m.def("stabilizer_brute_force", [](int n, const std::string& p, const std::string& q) {
    return perm_strings(stabilizer_brute_force(n, build_basis(params_of(n, p, q))));
  });
  m.def("lattice_equivalent",
        [](const StrMat& bc, int n, const std::string& p, const std::string& q) -> std::optional<std::string> {
          const auto s = lattice_equivalent(mat_of(bc), params_of(n, p, q));
          if (!s) return std::nullopt;
          return s->to_string();
        });

  m.def("minimal_axis_period", [](int n, std::int64_t p, std::int64_t q, int axis) {
    return minimal_axis_period(TorusParams(n, p, q), axis);
  });
  m.def("adjugate_entry_check", [](int n, std::int64_t p, std::int64_t q) {
    return adjugate_entry_check(TorusParams(n, p, q));
  });
  m.def(
      "torus_report",
      [](int n, std::int64_t p, std::int64_t q, bool scan, std::uint64_t cell_budget) {
        return to_json(make_torus_report(TorusParams(n, p, q), cell_budget, scan)).dump();
      },
      py::arg("n"), py::arg("p"), py::arg("q"), py::arg("scan") = false, py::arg("cell_budget") = kDefaultCellBudget);
  m.def(
      "verify",
      [](int n, const std::string& p, const std::string& q, std::uint64_t samples, std::uint64_t seed) {
        VerifyOptions options;
        options.samples = samples;
        options.seed = seed;
        return to_json(run_verification(params_of(n, p, q), options)).dump();
      },
      py::arg("n"), py::arg("p"), py::arg("q"), py::arg("samples") = VerifyOptions{}.samples,
      py::arg("seed") = VerifyOptions{}.seed);

  m.def(
      "render_2d",
      [](const std::string& p, const std::string& q, const StrVec& lo, const StrVec& hi, const std::string& scale) {
        Viewport vp;
        vp.lo = vec_of(lo);
        vp.hi = vec_of(hi);
        vp.scale = parse_rational(scale);
        const Figure f = render_tiling_2d(params_of(2, p, q), vp);
        const CoverAudit audit = audit_cover(f);
        return py::make_tuple(f.svg, audit.exact(), audit_same_size_adjacency(f));
      },
      py::arg("p"), py::arg("q"), py::arg("lo"), py::arg("hi"), py::arg("scale") = "40");
  m.def("render_torus_map", [](std::int64_t p, std::int64_t q) {
    return render_torus_map(build_torus_tiling(TorusParams(2, p, q))).svg;
  });
}
