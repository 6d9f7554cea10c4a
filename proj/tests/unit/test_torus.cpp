#include "oracles.hpp"

#include "hyptile/error.hpp"
#include "hyptile/torus.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

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

std::int64_t mod(std::int64_t a, std::int64_t m) { return ((a % m) + m) % m; }

/// Smallest l in 1..limit with l e_axis in A Z^n, by Gaussian elimination.
std::int64_t direct_period(const TorusParams& params, int axis, std::int64_t limit) {
  const RatMat a = oracle::basis_by_hand(params.n(), params.p(), params.q());
  for (std::int64_t l = 1; l <= limit; ++l)
    if (oracle::gauss_member(a, Rational(l) * unit_vector(params.dim(), static_cast<std::size_t>(axis - 1)))) return l;
  return 0;
}

/// All residues of the lattice spanned by `columns` mod m, by closing under addition.
std::set<Cell> residue_closure(const std::vector<Cell>& columns, std::int64_t m) {
  const std::size_t n = columns.front().size();
  std::set<Cell> all{Cell(n, 0)};
  bool grew = true;
  while (grew) {
    grew = false;
    for (const Cell& r : std::vector<Cell>(all.begin(), all.end()))
      for (const Cell& c : columns) {
        Cell s(n);
        for (std::size_t i = 0; i < n; ++i) s[i] = mod(r[i] + c[i], m);
        grew |= all.insert(s).second;
      }
  }
  return all;
}

/// Number of tiles covering each cell, counted per cell (no placement).
bool naive_exact_cover(const std::set<Cell>& residues, std::int64_t p, std::int64_t q, std::int64_t m, std::size_t n) {
  std::vector<std::int64_t> cell(n, 0);
  while (true) {
    int cover = 0;
    for (const Cell& r : residues) {
      Cell d(n);
      for (std::size_t i = 0; i < n; ++i) d[i] = mod(cell[i] - r[i], m);
      bool big = true, small = true;
      for (std::size_t i = 0; i + 1 < n; ++i) {
        big = big && d[i] < q;
        small = small && d[i] < p;
      }
      big = big && d[n - 1] < q;
      small = small && d[n - 1] >= q && d[n - 1] < q + p;
      cover += big + small;
    }
    if (cover != 1) return false;
    std::size_t i = 0;
    while (i < n && ++cell[i] == m) cell[i++] = 0;
    if (i == n) return true;
  }
}

std::vector<Cell> columns_of(const IntMat& h) {
  std::vector<Cell> out;
  for (std::size_t j = 0; j < h.size(); ++j) {
    Cell c;
    for (std::size_t i = 0; i < h.size(); ++i) c.push_back(h(i, j).convert_to<std::int64_t>());
    out.push_back(c);
  }
  return out;
}

std::int64_t sigma(std::int64_t m) {
  std::int64_t s = 0;
  for (std::int64_t d = 1; d <= m; ++d)
    if (m % d == 0) s += d;
  return s;
}

}  // namespace

TEST_SUITE("torus params") {
  TEST_CASE("validation") {
    CHECK(TorusParams(2, 1, 2).m() == 5);
    CHECK(TorusParams(3, 2, 3).m() == 35);
    CHECK(TorusParams(4, 1, 2).m() == 17);
    CHECK(error_code([] { TorusParams(2, 2, 4); }) == Errc::InvalidParams);
    CHECK(error_code([] { TorusParams(2, 3, 2); }) == Errc::InvalidParams);
    CHECK(error_code([] { TorusParams(2, 0, 1); }) == Errc::InvalidParams);
    CHECK(error_code([] { TorusParams(1, 1, 2); }) == Errc::InvalidParams);
    CHECK(error_code([] { TorusParams(40, 1, 2); }) == Errc::InvalidParams);  // m overflows
  }
}

TEST_SUITE("periods") {
  TEST_CASE("minimal_axis_period examples") {
    CHECK(minimal_axis_period(TorusParams(2, 1, 2), 1) == 5);
    for (int i = 1; i <= 3; ++i) CHECK(minimal_axis_period(TorusParams(3, 1, 2), i) == 9);
    for (int i = 1; i <= 2; ++i) CHECK(minimal_axis_period(TorusParams(2, 2, 3), i) == 13);
    CHECK(error_code([] { minimal_axis_period(TorusParams(2, 1, 2), 0); }) == Errc::InvalidParams);
    CHECK(error_code([] { minimal_axis_period(TorusParams(2, 1, 2), 3); }) == Errc::InvalidParams);
  }

  TEST_CASE("direct scan l = 1..m confirms minimality and axis independence") {
    for (int n = 2; n <= 4; ++n)
      for (const auto& [p, q] : std::vector<std::pair<int, int>>{{1, 2}, {2, 3}, {1, 3}, {3, 4}}) {
        const TorusParams params(n, p, q);
        for (int axis = 1; axis <= n; ++axis) {
          CHECK(minimal_axis_period(params, axis) == params.m());
          if (params.m() <= 400) CHECK(direct_period(params, axis, params.m()) == params.m());
        }
      }
    CHECK(direct_period(TorusParams(2, 1, 2), 1, 5) == 5);
    CHECK(direct_period(TorusParams(2, 1, 2), 2, 5) == 5);
  }

  TEST_CASE("adjugate entry check") {
    CHECK(adjugate_entry_check(TorusParams(2, 1, 2)));
    CHECK(adjugate_entry_check(TorusParams(3, 2, 3)));
    CHECK(adjugate_entry_check(TorusParams(4, 1, 2)));
    // Cramer determinants by cofactor expansion.
    const TorusParams params(3, 2, 3);
    const RatMat a = oracle::basis_by_hand(3, 2, 3);
    for (std::size_t i = 0; i < 3; ++i) {
      RatMat ai = a;
      ai.set_column(i, unit_vector(3, i));
      CHECK(abs(oracle::laplace_det(ai)) == 9);
    }
    CHECK(std::gcd(params.m(), std::int64_t{9}) == 1);
  }

  TEST_CASE("m A^{-1} = adj(A) is integral") {
    for (int n = 2; n <= 5; ++n) {
      const TorusParams params(n, 2, 3);
      const BasisA b = build_basis(params.tiling());
      CHECK(b.det == Rational(params.m()));
      CHECK(is_integral(b.adjugate));
      for (std::size_t i = 0; i < params.dim(); ++i)
        CHECK(is_lattice_member(Rational(params.m()) * unit_vector(params.dim(), i), b));
    }
  }
}

TEST_SUITE("torus tiling") {
  TEST_CASE("n=2, p=1, q=2 residues") {
    const TorusTiling t = build_torus_tiling(TorusParams(2, 1, 2));
    CHECK(t.cell_count() == 25);
    const std::set<Cell> got(t.residues.begin(), t.residues.end());
    CHECK(got == std::set<Cell>{{0, 0}, {2, 4}, {4, 3}, {1, 2}, {3, 1}});
    CHECK(t.big_count() == 5);
    CHECK(t.small_count() == 5);
    CHECK(std::none_of(t.owner.begin(), t.owner.end(), [](auto o) { return o < 0; }));
  }

  TEST_CASE("index_of and cell_at are inverse") {
    const TorusTiling t = build_torus_tiling(TorusParams(3, 1, 2));
    for (std::uint64_t i = 0; i < t.cell_count(); ++i) CHECK(t.index_of(t.cell_at(i)) == i);
  }

  TEST_CASE("exact cover, subgroup order and owner volumes") {
    for (const auto& [n, p, q] : std::vector<std::tuple<int, int, int>>{
             {2, 1, 2}, {2, 2, 3}, {2, 3, 4}, {3, 1, 2}, {3, 2, 3}, {4, 1, 2}}) {
      const TorusParams params(n, p, q);
      const TorusTiling t = build_torus_tiling(params);
      std::uint64_t cells = 1, order = 1;
      for (int i = 0; i < n; ++i) cells *= static_cast<std::uint64_t>(params.m());
      for (int i = 1; i < n; ++i) order *= static_cast<std::uint64_t>(params.m());
      CHECK(t.cell_count() == cells);
      CHECK(t.residues.size() == order);
      CHECK(t.big_count() == order);
      CHECK(cells == order * static_cast<std::uint64_t>(pow(BigInt(q), n) + pow(BigInt(p), n)));
      // Each owner holds exactly its cube's volume.
      std::vector<std::uint64_t> per_owner(2 * order, 0);
      for (auto o : t.owner) {
        REQUIRE(o >= 0);
        ++per_owner[static_cast<std::size_t>(o)];
      }
      std::uint64_t big = 1, small = 1;
      for (int i = 0; i < n; ++i) {
        big *= static_cast<std::uint64_t>(q);
        small *= static_cast<std::uint64_t>(p);
      }
      for (std::size_t id = 0; id < per_owner.size(); ++id) CHECK(per_owner[id] == (id % 2 == 0 ? big : small));
    }
  }

  TEST_CASE("residues agree with a closure oracle") {
    for (const auto& [n, p, q] : std::vector<std::tuple<int, int, int>>{{2, 1, 2}, {2, 2, 3}, {3, 1, 2}}) {
      const TorusParams params(n, p, q);
      const TorusTiling t = build_torus_tiling(params);
      std::vector<Cell> cols;
      const RatMat a = oracle::basis_by_hand(n, p, q);
      for (std::size_t j = 0; j < params.dim(); ++j) {
        Cell c;
        for (std::size_t i = 0; i < params.dim(); ++i) c.push_back(mod(numerator_of(a(i, j)).convert_to<std::int64_t>(), params.m()));
        cols.push_back(c);
      }
      const std::set<Cell> oracle_set = residue_closure(cols, params.m());
      CHECK(std::set<Cell>(t.residues.begin(), t.residues.end()) == oracle_set);
      CHECK(naive_exact_cover(oracle_set, p, q, params.m(), params.dim()));
    }
  }

  TEST_CASE("budget guard") {
    CHECK(error_code([] { build_torus_tiling(TorusParams(3, 1, 2), 700); }) == Errc::BudgetExceeded);
    CHECK_NOTHROW(build_torus_tiling(TorusParams(3, 1, 2), 729));
    CHECK(error_code([] { build_torus_tiling(TorusParams(6, 2, 3)); }) == Errc::BudgetExceeded);
  }

  TEST_CASE("cover_torus reports a violation for a wrong lattice") {
    const CoverResult r = cover_torus(2, 1, 2, 5, {{1, 0}, {0, 5}});
    CHECK_FALSE(r.exact());
    REQUIRE(r.violation);
    CHECK_FALSE(r.violation->empty());
    const CoverResult ok = cover_torus(2, 1, 2, 5, {{2, 4}, {1, 2}});
    CHECK(ok.exact());
  }
}

TEST_SUITE("torus unilaterality") {
  TEST_CASE("valid tilings are unilateral by both checks") {
    for (const auto& [n, p, q] : std::vector<std::tuple<int, int, int>>{
             {2, 1, 2}, {2, 2, 3}, {2, 3, 4}, {3, 1, 2}, {3, 2, 3}, {4, 1, 2}}) {
      const TorusTiling t = build_torus_tiling(TorusParams(n, p, q));
      const UnilateralAudit audit = audit_unilateral_torus(t);
      CHECK(audit.residue_check);
      CHECK(audit.facet_scan);
      CHECK(audit.residue_check == audit.facet_scan);
      CHECK(verify_unilateral_torus(t));
    }
  }

  TEST_CASE("injected adjacent big cube is caught by the facet scan") {
    for (const auto& [n, p, q] : std::vector<std::tuple<int, int, int>>{{2, 1, 2}, {3, 1, 2}, {2, 2, 3}}) {
      TorusTiling t = build_torus_tiling(TorusParams(n, p, q));
      const std::int64_t m = t.params.m();
      const auto fresh = static_cast<std::int32_t>(2 * t.residues.size());  // even id: big
      // Overwrite the q-cube right next to residue 0's big cube along axis 1.
      Cell offset(t.params.dim(), 0);
      while (true) {
        Cell cell = offset;
        cell[0] = mod(cell[0] + q, m);
        t.owner[t.index_of(cell)] = fresh;
        std::size_t i = 0;
        while (i < offset.size() && ++offset[i] == q) offset[i++] = 0;
        if (i == offset.size()) break;
      }
      const UnilateralAudit audit = audit_unilateral_torus(t);
      CHECK_FALSE(audit.facet_scan);
      CHECK_FALSE(audit.ok());
      CHECK(audit.counterexample.has_value());
      CHECK_FALSE(verify_unilateral_torus(t));
    }
  }
}

TEST_SUITE("packing") {
  TEST_CASE("packing counts") {
    const PackingReport r2 = packing_report(TorusParams(2, 1, 2));
    CHECK(r2.cube_count == 5);
    CHECK(r2.modulus == 5);
    CHECK(r2.side == 2);
    CHECK(r2.odd_cycle_case);
    const PackingReport r3 = packing_report(TorusParams(3, 1, 2));
    CHECK(r3.cube_count == 81);
    CHECK(r3.modulus == 9);
    CHECK(r3.cell_count == 729);
    const PackingReport r23 = packing_report(TorusParams(2, 2, 3));
    CHECK(r23.cube_count == 13);
    CHECK(r23.side == 3);
    CHECK_FALSE(r23.odd_cycle_case);
    for (int n = 2; n <= 4; ++n) {
      const std::int64_t m = (std::int64_t{1} << n) + 1;
      std::uint64_t expected = 1;
      for (int i = 1; i < n; ++i) expected *= static_cast<std::uint64_t>(m);
      CHECK(packing_report(TorusParams(n, 1, 2)).cube_count == expected);
    }
  }
}

TEST_SUITE("scan") {
  TEST_CASE("HNF sublattice enumeration counts") {
    CHECK(enumerate_hnf_sublattices(2, 5).size() == 6);
    for (std::int64_t m = 1; m <= 30; ++m) CHECK(enumerate_hnf_sublattices(2, m).size() == static_cast<std::size_t>(sigma(m)));
    CHECK(enumerate_hnf_sublattices(3, 5).size() == 31);   // 1 + p + p^2
    CHECK(enumerate_hnf_sublattices(3, 7).size() == 57);
    CHECK(enumerate_hnf_sublattices(4, 2).size() == 15);   // 2^4 - 1 index-2 sublattices
  }

  TEST_CASE("enumerated bases are distinct HNFs of the right index") {
    const auto all = enumerate_hnf_sublattices(3, 12);
    std::set<std::string> seen;
    for (const auto& h : all) {
      CHECK(hnf(h) == h);
      CHECK(det(h) == 12);
      std::string key;
      for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) key += h(i, j).str() + ",";
      seen.insert(key);
    }
    CHECK(seen.size() == all.size());
  }

  TEST_CASE("budget and dimension guards") {
    CHECK(error_code([] { enumerate_hnf_sublattices(3, 9, 10); }) == Errc::BudgetExceeded);
    CHECK(error_code([] { scan_candidate_lattices(TorusParams(4, 1, 2)); }) == Errc::BudgetExceeded);
  }

  TEST_CASE("n=2, p=1, q=2 scan") {
    const TorusParams params(2, 1, 2);
    const ScanReport r = scan_candidate_lattices(params);
    CHECK(r.candidates == 6);
    const IntMat reference = hnf(IntMat::from_rows({{2, 1}, {-1, 2}}));
    REQUIRE_FALSE(r.survivors.empty());
    CHECK(std::count_if(r.survivors.begin(), r.survivors.end(), [&](const auto& s) {
            return s.is_reference && s.hnf == reference;
          }) == 1);
    for (const auto& s : r.survivors) {
      REQUIRE(s.equivalence);
      CHECK(same_lattice(s.equivalence->rational_matrix() * build_basis(params.tiling()).matrix, to_rational(s.hnf)));
    }
    // Survivors agree with a per-cell cover oracle on every candidate.
    std::size_t oracle_survivors = 0;
    for (const auto& h : enumerate_hnf_sublattices(2, 5)) {
      const bool tiles = naive_exact_cover(residue_closure(columns_of(h), 5), 1, 2, 5, 2);
      oracle_survivors += tiles;
      const bool listed = std::any_of(r.survivors.begin(), r.survivors.end(), [&](const auto& s) { return s.hnf == h; });
      CHECK(tiles == listed);
    }
    CHECK(oracle_survivors == r.survivors.size());
  }

  TEST_CASE("other small scans contain the reference and only equivalent survivors") {
    for (const auto& [n, p, q] : std::vector<std::tuple<int, int, int>>{{2, 2, 3}, {2, 1, 3}, {3, 1, 2}}) {
      const TorusParams params(n, p, q);
      const ScanReport r = scan_candidate_lattices(params);
      CHECK(r.candidates == enumerate_hnf_sublattices(n, params.m()).size());
      CHECK(std::any_of(r.survivors.begin(), r.survivors.end(), [](const auto& s) { return s.is_reference; }));
      for (const auto& s : r.survivors) CHECK(s.equivalence.has_value());
    }
  }
}
