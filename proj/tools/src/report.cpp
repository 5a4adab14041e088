#include "ospd/cli/report.hpp"

#include <atomic>
#include <fstream>
#include <stdexcept>
#include <thread>

namespace ospd::cli {

json scalar_json(const exactlin::Scalar& s) { return {{"re", s.re().str()}, {"im", s.im().str()}}; }

json matrix_json(const exactlin::ExactMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(scalar_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json algebra_dump(const superalg::Superalgebra& a) {
  json basis = json::array();
  for (const auto& x : a.basis())
    basis.push_back({{"parity", superalg::to_string(x.parity())}, {"entries", matrix_json(x.entries())}});
  json form = nullptr;
  if (a.label().form) form = superalg::to_string(*a.label().form);
  return {{"label", a.label().str()},
          {"blockSizes", {a.sizes().even, a.sizes().odd}},
          {"form", form},
          {"basis", std::move(basis)}};
}

json fingerprint_json(const superalg::StructureFingerprint& f) {
  json split = json::array();
  for (const auto& s : f.odd_module_split) {
    json parts = json::array();
    for (const auto& [mult, dim] : s.parts) parts.push_back({{"multiplicity", mult}, {"dim", dim}});
    split.push_back({{"ideal", s.ideal}, {"parts", std::move(parts)}});
  }
  return {{"evenDim", f.even_dim},
          {"oddDim", f.odd_dim},
          {"evenIdealDims", f.even_ideal_dims},
          {"oddModuleSplit", std::move(split)}};
}

json report_json(const decomp::DecompositionReport& r) {
  auto dims = [](const decomp::GradedDims& d) { return json::array({d.even, d.odd}); };
  json out = {{"dims", {{"S", dims(r.dims_s)}, {"K", dims(r.dims_k)}, {"L", dims(r.dims_l)}}},
              {"sumRank", r.sum_rank},
              {"intersectionDim", r.intersection_dim},
              {"closureK", r.closure_k},
              {"closureL", r.closure_l},
              {"properK", r.proper_k},
              {"properL", r.proper_l},
              {"verdict", decomp::to_string(r.verdict)},
              {"reason", r.reason},
              {"detail", r.detail}};
  out["fingerprintK"] = r.fingerprint_k ? fingerprint_json(*r.fingerprint_k) : json(nullptr);
  out["fingerprintL"] = r.fingerprint_l ? fingerprint_json(*r.fingerprint_l) : json(nullptr);
  return out;
}

json components_json(const std::vector<repmod::ModuleComponent>& parts) {
  json out = json::array();
  for (const auto& c : parts) {
    json weight = nullptr;
    if (c.highest_weight) weight = *c.highest_weight;
    out.push_back({{"dim", c.dim()}, {"type", repmod::to_string(c.type)}, {"highestWeight", weight}});
  }
  return out;
}

json module_table_json(const decomp::ModuleTable& t) {
  return {{"V", components_json(t.v)}, {"W", components_json(t.w)}};
}

json screen_row_json(const decomp::ScreenRow& row) {
  return {{"K", row.pair.k.str()},
          {"L", row.pair.l.str()},
          {"status", decomp::to_string(row.verdict.status)},
          {"rule", row.verdict.rule},
          {"detail", row.verdict.detail}};
}

json document(const json& command, const json& results, const json& timing) {
  return {{"schemaVersion", kSchemaVersion}, {"command", command}, {"results", results}, {"timing", timing}};
}

std::string canonical_dump(const json& doc) { return doc.dump(2) + "\n"; }

void write_atomic(const std::filesystem::path& path, const std::string& text) {
  static std::atomic<unsigned> counter{0};
  const auto tid = std::hash<std::thread::id>{}(std::this_thread::get_id());
  std::filesystem::path tmp = path;
  tmp += ".tmp." + std::to_string(tid) + "." + std::to_string(counter++);
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot write " + tmp.string());
    f << text;
    f.flush();
    if (!f) throw std::runtime_error("write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace ospd::cli
