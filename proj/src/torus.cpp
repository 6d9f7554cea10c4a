#include "hyptile/torus.hpp"

#include "hyptile/error.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>

namespace hyptile {

TorusParams::TorusParams(int n, std::int64_t p, std::int64_t q) : n_(n), p_(p), q_(q), m_(0) {
  if (n_ < 2) throw Error(Errc::InvalidParams, "dimension must be at least 2");
  if (p_ <= 0 || p_ >= q_) throw Error(Errc::InvalidParams, "need integers 0 < p < q");
  if (std::gcd(p_, q_) != 1)
    throw Error(Errc::InvalidParams,
                "p and q must be coprime (gcd(" + std::to_string(p_) + "," + std::to_string(q_) + ") != 1)");
  const BigInt m = pow(BigInt(p_), static_cast<unsigned>(n_)) + pow(BigInt(q_), static_cast<unsigned>(n_));
  if (m > BigInt(std::numeric_limits<std::int32_t>::max()))
    throw Error(Errc::InvalidParams, "modulus p^n + q^n = " + m.str() + " is too large");
  m_ = m.convert_to<std::int64_t>();
}

namespace {

IntMat integer_basis(const TorusParams& params) {
  return scale_to_integer(build_basis(params.tiling()).matrix, BigInt(1));
}

std::uint64_t checked_cell_count(int n, std::int64_t m, std::uint64_t budget) {
  std::uint64_t cells = 1;
  for (int i = 0; i < n; ++i) {
    if (cells > budget / static_cast<std::uint64_t>(m))
      throw Error(Errc::BudgetExceeded, "torus has more than " + std::to_string(budget) + " cells");
    cells *= static_cast<std::uint64_t>(m);
  }
  return cells;
}

std::int64_t mod(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

std::string cell_string(const Cell& c) {
  std::string s = "(";
  for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::to_string(c[i]);
  return s + ")";
}

class Grid {
 public:
  Grid(std::size_t n, std::int64_t m) : n_(n), m_(m) {}

  std::uint64_t index(const Cell& c) const {
    std::uint64_t idx = 0;
    for (std::size_t i = n_; i-- > 0;) idx = idx * static_cast<std::uint64_t>(m_) + static_cast<std::uint64_t>(c[i]);
    return idx;
  }
  Cell cell(std::uint64_t idx) const {
    Cell c(n_);
    for (std::size_t i = 0; i < n_; ++i) {
      c[i] = static_cast<std::int64_t>(idx % static_cast<std::uint64_t>(m_));
      idx /= static_cast<std::uint64_t>(m_);
    }
    return c;
  }
  Cell shifted(const Cell& base, const Cell& offset) const {
    Cell c(n_);
    for (std::size_t i = 0; i < n_; ++i) c[i] = mod(base[i] + offset[i], m_);
    return c;
  }

 private:
  std::size_t n_;
  std::int64_t m_;
};

/// Calls f(offset) for every offset in the box [lo, lo + extent).
template <class F>
void for_each_offset(const Cell& lo, const Cell& extent, F&& f) {
  const std::size_t n = lo.size();
  Cell o = lo;
  while (true) {
    f(o);
    std::size_t i = 0;
    while (i < n && o[i] + 1 == lo[i] + extent[i]) {
      o[i] = lo[i];
      ++i;
    }
    if (i == n) return;
    ++o[i];
  }
}

}  // namespace

std::uint64_t TorusTiling::index_of(const Cell& c) const { return Grid(params.dim(), params.m()).index(c); }

Cell TorusTiling::cell_at(std::uint64_t index) const { return Grid(params.dim(), params.m()).cell(index); }

std::int64_t minimal_axis_period(const TorusParams& params, int axis) {
  if (axis < 1 || axis > params.n())
    throw Error(Errc::InvalidParams, "axis must lie in [1, " + std::to_string(params.n()) + "]");
  const IntMat adj = adjugate(integer_basis(params));
  BigInt g = 0;
  for (std::size_t r = 0; r < params.dim(); ++r)
    g = boost::multiprecision::gcd(g, adj(r, static_cast<std::size_t>(axis - 1)));
  const BigInt m(params.m());
  return BigInt(m / boost::multiprecision::gcd(m, g)).convert_to<std::int64_t>();
}

bool adjugate_entry_check(const TorusParams& params) {
  const IntMat a = integer_basis(params);
  const BigInt expected = pow(BigInt(params.q()), static_cast<unsigned>(params.n() - 1));
  for (std::size_t i = 0; i < params.dim(); ++i) {
    IntMat cramer = a;
    for (std::size_t r = 0; r < params.dim(); ++r) cramer(r, i) = r == i ? 1 : 0;
    if (abs(det(cramer)) != expected) return false;
  }
  return boost::multiprecision::gcd(BigInt(params.m()), expected) == 1;
}

CoverResult cover_torus(int n, std::int64_t p, std::int64_t q, std::int64_t m, const std::vector<Cell>& generators,
                        std::uint64_t cell_budget) {
  const std::uint64_t cells = checked_cell_count(n, m, cell_budget);
  const auto dim = static_cast<std::size_t>(n);
  const Grid grid(dim, m);

  CoverResult out;
  // Residue subgroup by BFS over generator additions.
  std::vector<char> seen(cells, 0);
  std::deque<std::uint64_t> queue{0};
  seen[0] = 1;
  while (!queue.empty()) {
    const Cell c = grid.cell(queue.front());
    queue.pop_front();
    out.residues.push_back(c);
    for (const auto& g : generators) {
      const std::uint64_t next = grid.index(grid.shifted(c, g));
      if (!seen[next]) {
        seen[next] = 1;
        queue.push_back(next);
      }
    }
  }

  out.owner.assign(cells, -1);
  const Cell zero(dim, 0);
  const Cell big_extent(dim, q);
  Cell small_lo(dim, 0), small_extent(dim, p);
  small_lo[dim - 1] = q;
  for (std::size_t r = 0; r < out.residues.size() && !out.violation; ++r) {
    const Cell& base = out.residues[r];
    auto place = [&](const Cell& lo, const Cell& extent, std::int32_t id) {
      for_each_offset(lo, extent, [&](const Cell& o) {
        if (out.violation) return;
        const Cell c = grid.shifted(base, o);
        auto& slot = out.owner[grid.index(c)];
        if (slot != -1) {
          out.violation = "cell " + cell_string(c) + " covered twice";
          return;
        }
        slot = id;
      });
    };
    place(zero, big_extent, static_cast<std::int32_t>(2 * r));
    place(small_lo, small_extent, static_cast<std::int32_t>(2 * r + 1));
  }
  if (!out.violation) {
    const auto hole = std::find(out.owner.begin(), out.owner.end(), -1);
    if (hole != out.owner.end())
      out.violation = "cell " + cell_string(grid.cell(static_cast<std::uint64_t>(hole - out.owner.begin()))) +
                      " not covered";
  }
  return out;
}

TorusTiling build_torus_tiling(const TorusParams& params, std::uint64_t cell_budget) {
  const IntMat a = integer_basis(params);
  std::vector<Cell> generators;
  for (std::size_t j = 0; j < params.dim(); ++j) {
    Cell g(params.dim());
    for (std::size_t i = 0; i < params.dim(); ++i) g[i] = mod(a(i, j).convert_to<std::int64_t>(), params.m());
    generators.push_back(std::move(g));
  }
  CoverResult cover = cover_torus(params.n(), params.p(), params.q(), params.m(), generators, cell_budget);

  std::uint64_t expected = 1;
  for (int i = 0; i + 1 < params.n(); ++i) expected *= static_cast<std::uint64_t>(params.m());
  if (cover.residues.size() != expected)
    throw Error(Errc::CoverViolation, "residue group has order " + std::to_string(cover.residues.size()) +
                                          ", expected " + std::to_string(expected));
  if (cover.violation) throw Error(Errc::CoverViolation, *cover.violation);
  return TorusTiling{params, std::move(cover.residues), std::move(cover.owner)};
}

UnilateralAudit audit_unilateral_torus(const TorusTiling& t) {
  const std::size_t n = t.params.dim();
  const std::int64_t m = t.params.m();
  const Grid grid(n, m);
  UnilateralAudit audit;

  std::vector<char> is_residue(t.cell_count(), 0);
  for (const auto& r : t.residues) is_residue[grid.index(r)] = 1;
  for (std::size_t i = 0; i < n && audit.residue_check; ++i) {
    for (std::int64_t side : {t.params.p(), t.params.q()}) {
      Cell v(n, 0);
      v[i] = side % m;
      if (is_residue[grid.index(v)]) {
        audit.residue_check = false;
        audit.counterexample = "lattice contains " + std::to_string(side) + "*e_" + std::to_string(i + 1) + " mod m";
        break;
      }
    }
  }

  // Facet scan reconstructed from the assignment alone: a region is a cube of
  // side s if it has s^n cells forming corner + [0,s)^n.
  std::int32_t max_id = -1;
  for (auto id : t.owner) max_id = std::max(max_id, id);
  const auto ids = static_cast<std::size_t>(max_id + 1);
  std::vector<std::uint64_t> count(ids, 0), corner(ids, 0), corners(ids, 0);
  for (std::uint64_t idx = 0; idx < t.cell_count(); ++idx) {
    const std::int32_t id = t.owner[idx];
    if (id < 0) continue;
    ++count[static_cast<std::size_t>(id)];
    const Cell c = grid.cell(idx);
    bool is_corner = true;
    for (std::size_t i = 0; i < n && is_corner; ++i) {
      Cell back(n, 0);
      back[i] = -1;
      if (t.owner[grid.index(grid.shifted(c, back))] == id) is_corner = false;
    }
    if (is_corner) {
      corner[static_cast<std::size_t>(id)] = idx;
      ++corners[static_cast<std::size_t>(id)];
    }
  }
  std::vector<std::int64_t> side(ids, 0);
  for (std::size_t id = 0; id < ids; ++id) {
    if (corners[id] != 1) continue;
    std::int64_t s = 1;
    while (true) {
      std::uint64_t v = 1;
      for (std::size_t i = 0; i < n; ++i) v *= static_cast<std::uint64_t>(s);
      if (v >= count[id]) {
        if (v != count[id]) s = 0;
        break;
      }
      ++s;
    }
    if (s == 0 || s >= m) continue;
    const Cell base = grid.cell(corner[id]);
    bool cube = true;
    for_each_offset(Cell(n, 0), Cell(n, s), [&](const Cell& o) {
      if (t.owner[grid.index(grid.shifted(base, o))] != static_cast<std::int32_t>(id)) cube = false;
    });
    if (cube) side[id] = s;
  }
  for (std::size_t id = 0; id < ids && audit.facet_scan; ++id) {
    if (side[id] == 0) continue;
    const Cell base = grid.cell(corner[id]);
    for (std::size_t i = 0; i < n; ++i) {
      Cell step(n, 0);
      step[i] = side[id];
      const std::uint64_t next = grid.index(grid.shifted(base, step));
      const std::int32_t other = t.owner[next];
      if (other < 0) continue;
      const auto o = static_cast<std::size_t>(other);
      if (side[o] == side[id] && corner[o] == next) {
        audit.facet_scan = false;
        if (!audit.counterexample)
          audit.counterexample = "cubes of side " + std::to_string(side[id]) + " at " + cell_string(base) + " and " +
                                 cell_string(grid.cell(next)) + " share a facet";
        break;
      }
    }
  }
  return audit;
}

bool verify_unilateral_torus(const TorusTiling& tiling) { return audit_unilateral_torus(tiling).ok(); }

PackingReport packing_report(const TorusParams& params, std::uint64_t cell_budget) {
  const TorusTiling t = build_torus_tiling(params, cell_budget);
  PackingReport r;
  r.n = params.n();
  r.modulus = params.m();
  r.side = params.q();
  r.cube_count = t.big_count();
  r.cell_count = t.cell_count();
  r.odd_cycle_case = params.p() == 1 && params.q() == 2;
  return r;
}

std::vector<IntMat> enumerate_hnf_sublattices(int n, std::int64_t index, std::uint64_t budget) {
  if (n < 1 || index < 1) throw Error(Errc::InvalidParams, "need n >= 1 and index >= 1");
  const auto dim = static_cast<std::size_t>(n);

  // Ordered factorizations index = d_1 * ... * d_n.
  std::vector<Cell> diagonals;
  Cell current;
  auto factor = [&](auto&& self, std::int64_t rest) -> void {
    if (current.size() + 1 == dim) {
      current.push_back(rest);
      diagonals.push_back(current);
      current.pop_back();
      return;
    }
    for (std::int64_t d = 1; d <= rest; ++d) {
      if (rest % d) continue;
      current.push_back(d);
      self(self, rest / d);
      current.pop_back();
    }
  };
  factor(factor, index);

  // Row i holds i free entries in [0, d_i).
  std::uint64_t total = 0;
  for (const auto& d : diagonals) {
    std::uint64_t c = 1;
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < i; ++j) {
        c *= static_cast<std::uint64_t>(d[i]);
        if (c > budget) throw Error(Errc::BudgetExceeded, "more than " + std::to_string(budget) + " HNF candidates");
      }
    total += c;
    if (total > budget) throw Error(Errc::BudgetExceeded, "more than " + std::to_string(budget) + " HNF candidates");
  }

  std::vector<IntMat> out;
  out.reserve(total);
  for (const auto& d : diagonals) {
    std::vector<std::pair<std::size_t, std::size_t>> free;
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < i; ++j) free.emplace_back(i, j);
    std::vector<std::int64_t> value(free.size(), 0);
    while (true) {
      IntMat h(dim);
      for (std::size_t i = 0; i < dim; ++i) h(i, i) = d[i];
      for (std::size_t f = 0; f < free.size(); ++f) h(free[f].first, free[f].second) = value[f];
      out.push_back(std::move(h));
      std::size_t f = 0;
      while (f < free.size() && value[f] + 1 == d[free[f].first]) {
        value[f] = 0;
        ++f;
      }
      if (f == free.size()) break;
      ++value[f];
    }
  }
  return out;
}

ScanReport scan_candidate_lattices(const TorusParams& params, std::uint64_t hnf_budget, std::uint64_t cell_budget) {
  if (params.n() > 3) throw Error(Errc::BudgetExceeded, "lattice scan is limited to n <= 3");
  const std::size_t n = params.dim();
  const std::int64_t m = params.m();
  checked_cell_count(params.n(), m, cell_budget);
  const TilingParams tiling = params.tiling();
  const IntMat reference = hnf(integer_basis(params));

  ScanReport report;
  const std::vector<IntMat> candidates = enumerate_hnf_sublattices(params.n(), m, hnf_budget);
  report.candidates = candidates.size();
  for (const auto& h : candidates) {
    std::vector<Cell> generators;
    for (std::size_t j = 0; j < n; ++j) {
      Cell g(n);
      for (std::size_t i = 0; i < n; ++i) g[i] = mod(h(i, j).convert_to<std::int64_t>(), m);
      generators.push_back(std::move(g));
    }
    const CoverResult cover = cover_torus(params.n(), params.p(), params.q(), m, generators, cell_budget);
    if (!cover.exact()) continue;
    ScanSurvivor s;
    s.hnf = h;
    s.is_reference = h == reference;
    s.equivalence = lattice_equivalent(to_rational(h), tiling);
    report.survivors.push_back(std::move(s));
  }
  return report;
}

}  // namespace hyptile
