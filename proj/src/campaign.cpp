#include "manetsim/campaign.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "manetsim/simulation.hpp"
#include "manetsim/trace.hpp"

namespace manetsim {
namespace {

std::string fmt6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

std::string cell_stem(std::uint32_t nodes, Mode mode, std::uint64_t seed) {
  return "n" + std::to_string(nodes) + "_" + mode_name(mode) + "_s" +
         std::to_string(seed);
}

const std::vector<std::pair<std::string, std::string>>& series_specs() {
  // metric name -> series file stem, one per reported figure
  static const std::vector<std::pair<std::string, std::string>> specs = {
      {"drop_pct", "series_drop_pct"},
      {"pdr", "series_pdr"},
      {"routing_packets", "series_routing_load"},
      {"throughput_pps", "series_throughput"},
      {"packets_received", "series_packets_received"},
  };
  return specs;
}

}  // namespace

MetricValue run_metric(const ResultsRecord& r, const std::string& name) {
  const Counters& c = r.counters;
  if (name == "pdr") return pdr(c);
  if (name == "avg_delay_ms") return avg_delay_ms(c);
  if (name == "nrl") return nrl(c);
  if (name == "routing_packets") {
    return MetricValue{static_cast<double>(c.routing_total())};
  }
  if (name == "throughput_pps") return throughput_pps(c, r.duration_s);
  if (name == "throughput_bps") {
    return throughput_bps(c, r.duration_s, r.payload_bytes);
  }
  if (name == "drop_pct") return drop_pct(c);
  if (name == "packets_received") {
    return MetricValue{static_cast<double>(c.received_unique)};
  }
  throw std::invalid_argument("unknown metric '" + name + "'");
}

const CampaignCell* CampaignResult::cell(std::uint32_t nodes, Mode mode,
                                         std::uint64_t seed) const {
  for (const auto& c : cells) {
    if (c.nodes == nodes && c.mode == mode && c.seed == seed) return &c;
  }
  return nullptr;
}

double CampaignResult::mean_metric(std::uint32_t nodes, Mode mode,
                                   const std::string& metric) const {
  double sum = 0;
  std::size_t count = 0;
  for (const auto& c : cells) {
    if (c.nodes != nodes || c.mode != mode) continue;
    const MetricValue v = run_metric(c.results, metric);
    if (v.absent) continue;
    sum += v.value;
    ++count;
  }
  return count == 0 ? 0.0 : sum / static_cast<double>(count);
}

CampaignResult run_campaign(const CampaignSpec& spec) {
  if (spec.node_counts.empty()) {
    throw ConfigError("node_counts", "campaign needs at least one density");
  }
  if (spec.modes.empty()) {
    throw ConfigError("modes", "campaign needs at least one mode");
  }
  if (spec.seeds.empty()) {
    throw ConfigError("seeds", "campaign needs at least one seed");
  }
  const bool writing = !spec.out_dir.empty();
  if (writing) {
    std::filesystem::create_directories(spec.out_dir);
  }
  CampaignResult out;
  for (std::uint32_t nodes : spec.node_counts) {
    for (Mode mode : spec.modes) {
      for (std::uint64_t seed : spec.seeds) {
        Scenario s = spec.base;
        s.node_count = nodes;
        s.mode = mode;
        s.seed = seed;
        try {
          Simulation sim(s);
          sim.run();
          CampaignCell cell{nodes, mode, seed, sim.results()};
          if (writing) {
            const std::string stem =
                spec.out_dir + "/" + cell_stem(nodes, mode, seed);
            if (spec.write_results) {
              cell.results.write_file(stem + ".results");
            }
            if (spec.write_traces) {
              sim.write_trace(stem + ".trace");
            }
          }
          out.cells.push_back(std::move(cell));
        } catch (const std::exception& e) {
          throw std::runtime_error("campaign cell " +
                                   cell_stem(nodes, mode, seed) +
                                   " failed: " + e.what());
        }
      }
    }
  }
  if (writing) {
    std::ofstream table(spec.out_dir + "/campaign.tsv", std::ios::binary);
    table << campaign_table(out, spec.node_counts, spec.modes);
    write_series_files(out, spec.node_counts, spec.modes, spec.out_dir);
  }
  return out;
}

std::string campaign_table(const CampaignResult& result,
                           const std::vector<std::uint32_t>& node_counts,
                           const std::vector<Mode>& modes) {
  std::string out =
      "nodes\tmode\tpdr\tavg_delay_ms\tnrl\trouting_packets\t"
      "throughput_pps\tdrop_pct\tpackets_received\n";
  static const char* cols[] = {"pdr",            "avg_delay_ms",
                               "nrl",            "routing_packets",
                               "throughput_pps", "drop_pct",
                               "packets_received"};
  for (std::uint32_t nodes : node_counts) {
    for (Mode mode : modes) {
      out += std::to_string(nodes);
      out += '\t';
      out += mode_name(mode);
      for (const char* col : cols) {
        out += '\t';
        out += fmt6(result.mean_metric(nodes, mode, col));
      }
      out += '\n';
    }
  }
  return out;
}

void write_series_files(const CampaignResult& result,
                        const std::vector<std::uint32_t>& node_counts,
                        const std::vector<Mode>& modes,
                        const std::string& out_dir) {
  for (const auto& [metric, stem] : series_specs()) {
    std::ofstream f(out_dir + "/" + stem + ".tsv", std::ios::binary);
    f << "nodes";
    for (Mode mode : modes) {
      f << '\t' << mode_name(mode);
    }
    f << '\n';
    for (std::uint32_t nodes : node_counts) {
      f << nodes;
      for (Mode mode : modes) {
        f << '\t' << fmt6(result.mean_metric(nodes, mode, metric));
      }
      f << '\n';
    }
  }
}

RecountReport recount_against(const std::string& trace_text,
                              const ResultsRecord& results) {
  RecountReport report;
  const ParsedTrace parsed = parse_trace(trace_text);
  const RecountedRun run =
      recount_events(parsed, results.duration_s, results.interval_s);
  report.recounted = run.counters;
  const Counters& a = run.counters;
  const Counters& b = results.counters;
  auto check = [&report](const char* name, auto x, auto y) {
    if (x != y) {
      report.diffs.push_back(std::string(name) + ": trace " +
                             std::to_string(x) + " != results " +
                             std::to_string(y));
    }
  };
  check("sent", a.sent, b.sent);
  check("received_unique", a.received_unique, b.received_unique);
  check("received_dup", a.received_dup, b.received_dup);
  check("dropped_attacker", a.dropped_attacker, b.dropped_attacker);
  check("dropped_ttl", a.dropped_ttl, b.dropped_ttl);
  check("dropped_buffer", a.dropped_buffer, b.dropped_buffer);
  check("dropped_noroute", a.dropped_noroute, b.dropped_noroute);
  check("routing_rreq", a.routing_rreq, b.routing_rreq);
  check("routing_rrep", a.routing_rrep, b.routing_rrep);
  check("routing_rerr", a.routing_rerr, b.routing_rerr);
  check("routing_alert", a.routing_alert, b.routing_alert);
  check("delay_sum_us", a.delay_sum_us, b.delay_sum_us);
  check("delay_samples", a.delay_samples, b.delay_samples);
  check("in_flight", a.in_flight, b.in_flight);
  if (run.intervals.size() != results.intervals.size()) {
    report.diffs.push_back("interval count mismatch");
  } else {
    for (std::size_t i = 0; i < run.intervals.size(); ++i) {
      if (!(run.intervals[i] == results.intervals[i])) {
        report.diffs.push_back("interval " + std::to_string(i) + " differs");
      }
    }
  }
  if (!a.conserved()) {
    report.diffs.push_back("trace recount violates packet conservation");
  }
  report.ok = report.diffs.empty();
  return report;
}

RecountReport recount_files(const std::string& trace_path,
                            const std::string& results_path) {
  std::ifstream in(trace_path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot read trace file '" + trace_path + "'");
  }
  std::stringstream ss;
  ss << in.rdbuf();
  return recount_against(ss.str(), ResultsRecord::load_file(results_path));
}

}  // namespace manetsim
