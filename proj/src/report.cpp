#include "hyptile/report.hpp"

#include "hyptile/error.hpp"

namespace hyptile {

nlohmann::json report_header(const std::string& kind) {
  return nlohmann::json{{"schema", "hyptile." + kind}, {"version", kReportVersion}};
}

nlohmann::json to_json(const RatVec& v) {
  auto out = nlohmann::json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

nlohmann::json to_json(const IntVec& v) {
  auto out = nlohmann::json::array();
  for (const auto& x : v) out.push_back(x.str());
  return out;
}

nlohmann::json to_json(const RatMat& m) {
  auto out = nlohmann::json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    auto row = nlohmann::json::array();
    for (std::size_t j = 0; j < m.size(); ++j) row.push_back(to_string(m(i, j)));
    out.push_back(std::move(row));
  }
  return out;
}

nlohmann::json to_json(const IntMat& m) {
  auto out = nlohmann::json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    auto row = nlohmann::json::array();
    for (std::size_t j = 0; j < m.size(); ++j) row.push_back(m(i, j).str());
    out.push_back(std::move(row));
  }
  return out;
}

TorusReport make_torus_report(const TorusParams& params, std::uint64_t cell_budget, bool scan,
                              std::uint64_t hnf_budget) {
  TorusReport r;
  r.n = params.n();
  r.p = params.p();
  r.q = params.q();
  r.m = params.m();
  for (int axis = 1; axis <= params.n(); ++axis) r.min_period_per_axis.push_back(minimal_axis_period(params, axis));
  r.min_period = r.min_period_per_axis.front();

  try {
    const TorusTiling t = build_torus_tiling(params, cell_budget);
    r.residue_count = t.residues.size();
    r.big_count = t.big_count();
    r.small_count = t.small_count();
    r.exact_cover = true;
    const UnilateralAudit audit = audit_unilateral_torus(t);
    r.unilateral = audit.ok();
    if (audit.counterexample) r.counterexample = audit.counterexample;
  } catch (const Error& e) {
    if (e.code() != Errc::CoverViolation) throw;
    r.exact_cover = false;
    r.counterexample = e.what();
  }

  if (scan) {
    const ScanReport s = scan_candidate_lattices(params, hnf_budget, cell_budget);
    r.scan_candidates = s.candidates;
    for (const auto& survivor : s.survivors) {
      SurvivorRecord rec;
      for (std::size_t i = 0; i < survivor.hnf.size(); ++i) {
        std::vector<std::int64_t> row;
        for (std::size_t j = 0; j < survivor.hnf.size(); ++j)
          row.push_back(survivor.hnf(i, j).convert_to<std::int64_t>());
        rec.hnf.push_back(std::move(row));
      }
      rec.is_reference = survivor.is_reference;
      if (survivor.equivalence) rec.equivalence = survivor.equivalence->to_string();
      r.survivors.push_back(std::move(rec));
    }
  }
  return r;
}

nlohmann::json to_json(const TorusReport& r) {
  nlohmann::json doc = report_header("torus");
  doc["n"] = r.n;
  doc["p"] = r.p;
  doc["q"] = r.q;
  doc["m"] = r.m;
  doc["residue_count"] = r.residue_count;
  doc["big_count"] = r.big_count;
  doc["small_count"] = r.small_count;
  doc["exact_cover"] = r.exact_cover;
  doc["unilateral"] = r.unilateral;
  doc["min_period"] = r.min_period;
  doc["min_period_per_axis"] = r.min_period_per_axis;
  doc["scan_candidates"] = r.scan_candidates ? nlohmann::json(*r.scan_candidates) : nlohmann::json(nullptr);
  auto survivors = nlohmann::json::array();
  for (const auto& s : r.survivors) {
    survivors.push_back({{"hnf", s.hnf},
                         {"is_reference", s.is_reference},
                         {"equivalence", s.equivalence ? nlohmann::json(*s.equivalence) : nlohmann::json(nullptr)}});
  }
  doc["survivors"] = std::move(survivors);
  doc["counterexample"] = r.counterexample ? nlohmann::json(*r.counterexample) : nlohmann::json(nullptr);
  return doc;
}

TorusReport torus_report_from_json(const nlohmann::json& doc) {
  try {
    if (doc.at("schema") != "hyptile.torus") throw Error(Errc::Parse, "not a torus report");
    if (doc.at("version") != kReportVersion) throw Error(Errc::Parse, "unsupported report version");
    TorusReport r;
    doc.at("n").get_to(r.n);
    doc.at("p").get_to(r.p);
    doc.at("q").get_to(r.q);
    doc.at("m").get_to(r.m);
    doc.at("residue_count").get_to(r.residue_count);
    doc.at("big_count").get_to(r.big_count);
    doc.at("small_count").get_to(r.small_count);
    doc.at("exact_cover").get_to(r.exact_cover);
    doc.at("unilateral").get_to(r.unilateral);
    doc.at("min_period").get_to(r.min_period);
    doc.at("min_period_per_axis").get_to(r.min_period_per_axis);
    if (!doc.at("scan_candidates").is_null()) r.scan_candidates = doc.at("scan_candidates").get<std::uint64_t>();
    for (const auto& s : doc.at("survivors")) {
      SurvivorRecord rec;
      s.at("hnf").get_to(rec.hnf);
      s.at("is_reference").get_to(rec.is_reference);
      if (!s.at("equivalence").is_null()) rec.equivalence = s.at("equivalence").get<std::string>();
      r.survivors.push_back(std::move(rec));
    }
    if (!doc.at("counterexample").is_null()) r.counterexample = doc.at("counterexample").get<std::string>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::Parse, std::string("malformed torus report: ") + e.what());
  }
}

nlohmann::json to_json(const VerifyReport& report) {
  nlohmann::json doc = report_header("verify");
  doc["passed"] = report.passed();
  auto checks = nlohmann::json::array();
  for (const auto& c : report.checks) {
    checks.push_back({{"name", c.name},
                      {"passed", c.passed},
                      {"detail", c.detail},
                      {"counterexample", c.counterexample ? nlohmann::json(*c.counterexample) : nlohmann::json(nullptr)}});
  }
  doc["checks"] = std::move(checks);
  return doc;
}

}  // namespace hyptile
