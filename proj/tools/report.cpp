#include "cli.hpp"

namespace gpk::cli {

using nlohmann::ordered_json;

ordered_json certificate_json(const SmoothnessCertificate& cert, bool timings) {
  ordered_json patches = ordered_json::array();
  for (const auto& v : cert.patches) {
    ordered_json p;
    p["pivot"] = v.name;
    p["unit_ideal"] = v.unit_ideal();
    p["outcome"] = to_string(v.outcome);
    p["pairs"] = v.stats.pairs_processed;
    p["max_degree"] = v.stats.max_degree;
    if (timings) p["millis"] = v.millis;
    if (!v.note.empty()) p["note"] = v.note;
    patches.push_back(std::move(p));
  }
  ordered_json j;
  j["prime"] = cert.prime;
  j["matrix_sha"] = cert.matrix_sha;
  j["patches"] = std::move(patches);
  j["smooth"] = cert.smooth;
  if (cert.inconclusive) j["inconclusive"] = true;
  return j;
}

ordered_json matrix_json(const MatrixFF& m) {
  ordered_json rows = ordered_json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    ordered_json row = ordered_json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m.field().to_signed(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

ordered_json cohomology_json(const CohomologyAnswer& a) {
  ordered_json j;
  j["zero"] = a.zero;
  if (!a.zero) {
    j["degree"] = a.degree;
    j["weight"] = a.nu;
    j["dim"] = a.dim;
  }
  j["description"] = a.describe();
  return j;
}

ordered_json claims_json(const std::vector<ClaimCheck>& claims) {
  ordered_json arr = ordered_json::array();
  for (const auto& c : claims) {
    arr.push_back({{"name", c.name}, {"expected", c.expected}, {"actual", c.actual}, {"pass", c.pass}});
  }
  return arr;
}

ordered_json trace_json(const TraceReport& r) {
  ordered_json types = ordered_json::array();
  for (const auto& t : r.inputs) types.push_back(t.to_string());
  return {{"kind", r.kind == 1 ? "I" : "II"}, {"types", types}, {"mult1", r.mult1}, {"trace", r.trace}};
}

ordered_json count_json(const CountReport& r) {
  ordered_json j;
  j["q"] = r.q;
  j["n_X"] = r.n_x;
  j["n_Y"] = r.n_y;
  j["n_Gr"] = r.n_gr;
  if (r.n_q) {
    j["n_Q"] = *r.n_q;
    j["n_Q_from_X"] = r.predicted_from_x;
    j["n_Q_from_Y"] = r.predicted_from_y;
  }
  j["verdict"] = r.verified() ? "n_X = n_Y" : "MISMATCH";
  return j;
}

}  // namespace gpk::cli
