#include "cpm/stats.hpp"

#include <fstream>
#include <ostream>
#include <string>

namespace cpm {

std::uint64_t expected_strict_reductions(std::uint64_t n_k, unsigned k, unsigned z) {
  return n_k * k * binomial(k - 1, z);
}

std::optional<std::uint64_t> peak_rss_kb() {
  std::ifstream status("/proc/self/status");
  std::string line;
  while (std::getline(status, line)) {
    if (line.rfind("VmHWM:", 0) == 0) return std::stoull(line.substr(6));
  }
  return std::nullopt;
}

nlohmann::ordered_json report(const PercResult& result, const ReportOptions& options) {
  const RunStats& s = result.stats;
  nlohmann::ordered_json doc;
  doc["mode"] = to_string(result.mode);
  doc["k"] = result.k;
  doc["z"] = result.z;
  doc["n_k"] = s.n_k;
  doc["finds"] = s.finds;
  doc["unions"] = s.unions;
  doc["makesets"] = s.makesets;
  doc["uf_nodes"] = result.uf.count_nodes();
  doc["communities"] = result.uf.count_roots();
  doc["peak_keys"] = s.peak_keys;
  doc["key_width"] = result.keys.width();
  doc["key_bytes"] = s.peak_keys * result.keys.width() * sizeof(VertexId);
  doc["reductions"] = s.reductions;
  doc["setz_mean"] = s.setz_mean();
  doc["setz_max"] = s.setz_max;
  if (result.mode == Mode::cpmz) {
    doc["predicted_reductions_n_k"] = expected_strict_reductions(s.n_k, result.k, result.z);
    if (options.n_k_minus_1) {
      doc["predicted_reductions_n_k_minus_1"] =
          expected_strict_reductions(*options.n_k_minus_1, result.k, result.z);
    }
  }
  doc["wall_time"] = options.include_timing ? s.wall_time : 0.0;
  if (options.include_rss) {
    if (const auto rss = peak_rss_kb()) doc["peak_rss_kb"] = *rss;
  }
  return doc;
}

void write_report_text(const nlohmann::ordered_json& doc, std::ostream& out) {
  for (const auto& [key, value] : doc.items()) {
    out << key << '=' << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
  }
}

}  // namespace cpm
