// Command-line front end over the manetsim C API.
//
//   manetsim run       one scenario: trace + results + metric summary
//   manetsim campaign  density x mode x seed sweep with table and series files
//   manetsim recount   recompute metrics from a trace, diff against results
//
// Exit codes: 0 success, 1 configuration error, 2 runtime failure
// (simulation error or recount mismatch).

#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "manetsim.h"

namespace {

int exit_code(msim_status status) {
  switch (status) {
    case MSIM_OK: return 0;
    case MSIM_ERR_ARG:
    case MSIM_ERR_CONFIG:
    case MSIM_ERR_IO: return 1;
    case MSIM_ERR_RUNTIME: return 2;
  }
  return 2;
}

int report_failure(msim_status status, const char* action) {
  std::fprintf(stderr, "manetsim: %s failed (%s): %s\n", action,
               msim_status_name(status), msim_last_error());
  return exit_code(status);
}

struct ScenarioHandle {
  msim_scenario* ptr = msim_scenario_new();
  ~ScenarioHandle() { msim_scenario_free(ptr); }
};

// "k=v" assignments from --set plus the dedicated flags.
int apply_settings(msim_scenario* s, const std::string& config_path,
                   const std::vector<std::string>& sets) {
  if (!config_path.empty()) {
    const msim_status st = msim_scenario_load(s, config_path.c_str());
    if (st != MSIM_OK) return report_failure(st, "loading config");
  }
  for (const std::string& kv : sets) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) {
      std::fprintf(stderr, "manetsim: --set expects key=value, got '%s'\n",
                   kv.c_str());
      return 1;
    }
    const std::string key = kv.substr(0, eq);
    const std::string value = kv.substr(eq + 1);
    const msim_status st =
        msim_scenario_set(s, key.c_str(), value.c_str());
    if (st != MSIM_OK) return report_failure(st, "applying setting");
  }
  return 0;
}

std::vector<std::uint64_t> parse_seed_list(const std::string& spec) {
  std::vector<std::uint64_t> out;
  std::string item;
  std::stringstream ss(spec);
  while (std::getline(ss, item, ',')) {
    const auto dash = item.find('-');
    if (dash != std::string::npos && dash > 0) {
      const std::uint64_t lo = std::stoull(item.substr(0, dash));
      const std::uint64_t hi = std::stoull(item.substr(dash + 1));
      for (std::uint64_t v = lo; v <= hi; ++v) out.push_back(v);
    } else if (!item.empty()) {
      out.push_back(std::stoull(item));
    }
  }
  return out;
}

void print_metrics(const msim_results* results) {
  static const char* metrics[] = {"pdr",            "avg_delay_ms",
                                  "nrl",            "routing_packets",
                                  "throughput_pps", "throughput_bps",
                                  "drop_pct"};
  for (const char* name : metrics) {
    double value = 0;
    int absent = 0;
    if (msim_results_metric(results, name, &value, &absent) != MSIM_OK) {
      continue;
    }
    if (absent) {
      std::printf("%s = absent\n", name);
    } else {
      std::printf("%s = %.6f\n", name, value);
    }
  }
  std::uint64_t detections = 0;
  msim_results_counter(results, "detections", &detections);
  std::printf("detections = %llu\n",
              static_cast<unsigned long long>(detections));
  for (std::size_t i = 0; i < detections; ++i) {
    double t = 0;
    std::uint32_t ids_node = 0;
    std::uint32_t subject = 0;
    msim_results_detection(results, i, &t, &ids_node, &subject);
    std::printf("detection %zu: t=%.6f ids=%u subject=%u\n", i, t, ids_node,
                subject);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"deterministic MANET multipath-routing simulator"};
  app.require_subcommand(1);

  std::string config_path;
  std::vector<std::string> sets;

  // run
  auto* run = app.add_subcommand("run", "run one scenario");
  std::string trace_path, results_path;
  bool quiet = false;
  run->add_option("--config", config_path, "scenario config file");
  run->add_option("--set", sets, "override: key=value (repeatable)");
  std::string nodes, mode, seed;
  run->add_option("--nodes", nodes, "traffic node count");
  run->add_option("--mode", mode, "normal|attack|ids");
  run->add_option("--seed", seed, "scenario seed");
  run->add_option("--trace", trace_path, "write the event trace here");
  run->add_option("--results", results_path, "write the results record here");
  run->add_flag("--quiet", quiet, "suppress the metric summary");

  // campaign
  auto* campaign = app.add_subcommand("campaign", "density/mode/seed sweep");
  std::string counts_csv = "20,40,60,80,100";
  std::string modes_csv = "normal,attack,ids";
  std::string seeds_spec = "1";
  std::string out_dir = "campaign_out";
  bool traces = false;
  campaign->add_option("--config", config_path, "scenario config file");
  campaign->add_option("--set", sets, "override: key=value (repeatable)");
  campaign->add_option("--node-counts", counts_csv, "densities, e.g. 20,40");
  campaign->add_option("--modes", modes_csv, "e.g. normal,attack,ids");
  campaign->add_option("--seeds", seeds_spec, "e.g. 1,2,5 or 1-10");
  campaign->add_option("--out", out_dir, "output directory");
  campaign->add_flag("--traces", traces, "also write per-run traces");

  // recount
  auto* recount = app.add_subcommand("recount", "verify a trace/results pair");
  std::string rc_trace, rc_results;
  recount->add_option("--trace", rc_trace, "trace file")->required();
  recount->add_option("--results", rc_results, "results record")->required();

  CLI11_PARSE(app, argc, argv);

  if (run->parsed()) {
    ScenarioHandle s;
    if (!nodes.empty()) sets.insert(sets.begin(), "nodes=" + nodes);
    if (!mode.empty()) sets.push_back("mode=" + mode);
    if (!seed.empty()) sets.push_back("seed=" + seed);
    if (int rc = apply_settings(s.ptr, config_path, sets)) return rc;
    msim_results* results = nullptr;
    const msim_status st =
        msim_run(s.ptr, trace_path.empty() ? nullptr : trace_path.c_str(),
                 results_path.empty() ? nullptr : results_path.c_str(),
                 &results);
    if (st != MSIM_OK) return report_failure(st, "run");
    if (!quiet) print_metrics(results);
    msim_results_free(results);
    return 0;
  }

  if (campaign->parsed()) {
    ScenarioHandle s;
    if (int rc = apply_settings(s.ptr, config_path, sets)) return rc;
    std::vector<std::uint32_t> counts;
    for (std::uint64_t v : parse_seed_list(counts_csv)) {
      counts.push_back(static_cast<std::uint32_t>(v));
    }
    const std::vector<std::uint64_t> seeds = parse_seed_list(seeds_spec);
    if (counts.empty() || seeds.empty()) {
      std::fprintf(stderr, "manetsim: empty node-count or seed list\n");
      return 1;
    }
    const msim_status st =
        msim_campaign(s.ptr, counts.data(), counts.size(), modes_csv.c_str(),
                      seeds.data(), seeds.size(), out_dir.c_str(),
                      traces ? 1 : 0);
    if (st != MSIM_OK) return report_failure(st, "campaign");
    std::printf("campaign written to %s\n", out_dir.c_str());
    return 0;
  }

  if (recount->parsed()) {
    std::string report(16384, '\0');
    const msim_status st = msim_recount(rc_trace.c_str(), rc_results.c_str(),
                                        report.data(), report.size());
    std::printf("%s\n", report.c_str());
    if (st != MSIM_OK && st != MSIM_ERR_RUNTIME) {
      return report_failure(st, "recount");
    }
    return st == MSIM_OK ? 0 : 2;
  }

  return 0;
}
