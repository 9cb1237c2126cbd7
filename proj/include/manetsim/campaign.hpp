#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "manetsim/results.hpp"
#include "manetsim/scenario.hpp"

namespace manetsim {

// One cell of the density x mode x seed sweep.
struct CampaignCell {
  std::uint32_t nodes = 0;
  Mode mode = Mode::Normal;
  std::uint64_t seed = 0;
  ResultsRecord results;
};

struct CampaignSpec {
  Scenario base;
  std::vector<std::uint32_t> node_counts;
  std::vector<Mode> modes;
  std::vector<std::uint64_t> seeds;
  std::string out_dir;      // empty: nothing written
  bool write_traces = false;
  bool write_results = true;
};

struct CampaignResult {
  std::vector<CampaignCell> cells;

  const CampaignCell* cell(std::uint32_t nodes, Mode mode,
                           std::uint64_t seed) const;
  // Mean of a per-run metric over seeds; absent runs are excluded.
  double mean_metric(std::uint32_t nodes, Mode mode,
                     const std::string& metric) const;
};

// Cartesian sweep; deterministic cell order (nodes, mode, seed). Writes
// per-run artifacts plus campaign.tsv and one series file per reported
// figure when out_dir is set. Throws on the first failing run.
CampaignResult run_campaign(const CampaignSpec& spec);

std::string campaign_table(const CampaignResult& result,
                           const std::vector<std::uint32_t>& node_counts,
                           const std::vector<Mode>& modes);

// One file per metric: rows are node densities, one column per mode.
void write_series_files(const CampaignResult& result,
                        const std::vector<std::uint32_t>& node_counts,
                        const std::vector<Mode>& modes,
                        const std::string& out_dir);

// Per-run metric by name ("pdr", "avg_delay_ms", "nrl", "routing_packets",
// "throughput_pps", "throughput_bps", "drop_pct", "packets_received").
MetricValue run_metric(const ResultsRecord& r, const std::string& name);

struct RecountReport {
  bool ok = false;
  Counters recounted;
  std::vector<std::string> diffs;
};

// Recomputes every ledger counter and interval bucket from the trace alone
// and diffs them against the stored results record.
RecountReport recount_against(const std::string& trace_text,
                              const ResultsRecord& results);
RecountReport recount_files(const std::string& trace_path,
                            const std::string& results_path);

}  // namespace manetsim
