#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>

#include <nlohmann/json.hpp>

#include "cpm/percolation.hpp"

namespace cpm {

struct ReportOptions {
  // When false, wall_time is reported as 0 so that reports are byte-stable.
  bool include_timing = true;
  // Adds peak_rss_kb read from the OS (Linux only; omitted elsewhere).
  bool include_rss = false;
  // Number of (k-1)-cliques of the graph, when the caller knows it. Adds
  // the reduction count predicted from it.
  std::optional<std::uint64_t> n_k_minus_1;
};

// Flat, ordered key/value summary of a run.
nlohmann::ordered_json report(const PercResult& result, const ReportOptions& options = {});

// `key=value` per line, same keys and order as the JSON form.
void write_report_text(const nlohmann::ordered_json& doc, std::ostream& out);

// Expected number of z-clique reductions in strict mode: n_k * k * C(k-1, z).
std::uint64_t expected_strict_reductions(std::uint64_t n_k, unsigned k, unsigned z);

std::optional<std::uint64_t> peak_rss_kb();

}  // namespace cpm
