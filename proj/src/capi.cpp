#include "manetsim.h"

#include <cstring>
#include <sstream>
#include <string>

#include "manetsim/campaign.hpp"
#include "manetsim/results.hpp"
#include "manetsim/scenario.hpp"
#include "manetsim/simulation.hpp"

using namespace manetsim;

struct msim_scenario {
  Scenario value;
};

struct msim_results {
  ResultsRecord value;
};

namespace {

thread_local std::string g_last_error;

msim_status fail(msim_status status, const std::string& message) {
  g_last_error = message;
  return status;
}

template <typename Fn>
msim_status guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const ConfigError& e) {
    return fail(MSIM_ERR_CONFIG, e.what());
  } catch (const std::exception& e) {
    return fail(MSIM_ERR_RUNTIME, e.what());
  }
}

bool copy_out(const std::string& s, char* out, size_t out_size) {
  if (!out || out_size == 0 || s.size() + 1 > out_size) return false;
  std::memcpy(out, s.c_str(), s.size() + 1);
  return true;
}

}  // namespace

extern "C" {

const char* msim_version(void) { return "1.0.0"; }

const char* msim_status_name(msim_status status) {
  switch (status) {
    case MSIM_OK: return "ok";
    case MSIM_ERR_ARG: return "invalid argument";
    case MSIM_ERR_CONFIG: return "invalid configuration";
    case MSIM_ERR_IO: return "io error";
    case MSIM_ERR_RUNTIME: return "runtime error";
  }
  return "unknown";
}

const char* msim_last_error(void) { return g_last_error.c_str(); }

msim_scenario* msim_scenario_new(void) { return new msim_scenario{}; }

void msim_scenario_free(msim_scenario* s) { delete s; }

msim_status msim_scenario_set(msim_scenario* s, const char* key,
                              const char* value) {
  if (!s || !key || !value) return fail(MSIM_ERR_ARG, "null argument");
  return guarded([&] {
    s->value.set(key, value);
    return MSIM_OK;
  });
}

msim_status msim_scenario_get(const msim_scenario* s, const char* key,
                              char* out, size_t out_size) {
  if (!s || !key) return fail(MSIM_ERR_ARG, "null argument");
  return guarded([&]() -> msim_status {
    const std::string v = s->value.get(key);
    if (!copy_out(v, out, out_size)) {
      return fail(MSIM_ERR_ARG, "output buffer too small");
    }
    return MSIM_OK;
  });
}

msim_status msim_scenario_load(msim_scenario* s, const char* path) {
  if (!s || !path) return fail(MSIM_ERR_ARG, "null argument");
  return guarded([&]() -> msim_status {
    try {
      s->value = Scenario::load_file(path);
    } catch (const ConfigError& e) {
      if (std::string(e.field) == "config") {
        return fail(MSIM_ERR_IO, e.what());
      }
      throw;
    }
    return MSIM_OK;
  });
}

msim_status msim_scenario_validate(const msim_scenario* s) {
  if (!s) return fail(MSIM_ERR_ARG, "null argument");
  return guarded([&] {
    s->value.validate();
    return MSIM_OK;
  });
}

msim_status msim_run(const msim_scenario* s, const char* trace_path,
                     const char* results_path, msim_results** out) {
  if (!s) return fail(MSIM_ERR_ARG, "null scenario");
  return guarded([&]() -> msim_status {
    Simulation sim(s->value);
    sim.run();
    ResultsRecord results = sim.results();
    if (trace_path) sim.write_trace(trace_path);
    if (results_path) results.write_file(results_path);
    if (out) {
      *out = new msim_results{std::move(results)};
    }
    return MSIM_OK;
  });
}

void msim_results_free(msim_results* r) { delete r; }

msim_status msim_results_counter(const msim_results* r, const char* name,
                                 uint64_t* out) {
  if (!r || !name || !out) return fail(MSIM_ERR_ARG, "null argument");
  const Counters& c = r->value.counters;
  const std::string n = name;
  if (n == "sent") *out = c.sent;
  else if (n == "received_unique") *out = c.received_unique;
  else if (n == "received_dup") *out = c.received_dup;
  else if (n == "dropped_attacker") *out = c.dropped_attacker;
  else if (n == "dropped_ttl") *out = c.dropped_ttl;
  else if (n == "dropped_buffer") *out = c.dropped_buffer;
  else if (n == "dropped_noroute") *out = c.dropped_noroute;
  else if (n == "routing_rreq") *out = c.routing_rreq;
  else if (n == "routing_rrep") *out = c.routing_rrep;
  else if (n == "routing_rerr") *out = c.routing_rerr;
  else if (n == "routing_alert") *out = c.routing_alert;
  else if (n == "routing_packets") *out = c.routing_total();
  else if (n == "delay_samples") *out = c.delay_samples;
  else if (n == "in_flight") *out = static_cast<uint64_t>(c.in_flight);
  else if (n == "detections") *out = r->value.detections.size();
  else return fail(MSIM_ERR_ARG, "unknown counter '" + n + "'");
  return MSIM_OK;
}

msim_status msim_results_metric(const msim_results* r, const char* name,
                                double* out, int* absent) {
  if (!r || !name || !out) return fail(MSIM_ERR_ARG, "null argument");
  return guarded([&]() -> msim_status {
    const MetricValue v = run_metric(r->value, name);
    *out = v.value;
    if (absent) *absent = v.absent ? 1 : 0;
    return MSIM_OK;
  });
}

msim_status msim_results_detection(const msim_results* r, size_t index,
                                   double* time_s, uint32_t* ids_node,
                                   uint32_t* subject) {
  if (!r) return fail(MSIM_ERR_ARG, "null results");
  if (index >= r->value.detections.size()) {
    return fail(MSIM_ERR_ARG, "detection index out of range");
  }
  const DetectionEvent& d = r->value.detections[index];
  if (time_s) *time_s = d.at.seconds();
  if (ids_node) *ids_node = d.ids_node;
  if (subject) *subject = d.subject;
  return MSIM_OK;
}

msim_status msim_results_write(const msim_results* r, const char* path) {
  if (!r || !path) return fail(MSIM_ERR_ARG, "null argument");
  return guarded([&]() -> msim_status {
    try {
      r->value.write_file(path);
    } catch (const std::exception& e) {
      return fail(MSIM_ERR_IO, e.what());
    }
    return MSIM_OK;
  });
}

msim_status msim_campaign(const msim_scenario* base,
                          const uint32_t* node_counts, size_t n_counts,
                          const char* modes_csv, const uint64_t* seeds,
                          size_t n_seeds, const char* out_dir,
                          int write_traces) {
  if (!base || !node_counts || !modes_csv || !seeds || !out_dir) {
    return fail(MSIM_ERR_ARG, "null argument");
  }
  return guarded([&]() -> msim_status {
    CampaignSpec spec;
    spec.base = base->value;
    spec.node_counts.assign(node_counts, node_counts + n_counts);
    std::stringstream ss(modes_csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (!item.empty()) spec.modes.push_back(parse_mode(item));
    }
    spec.seeds.assign(seeds, seeds + n_seeds);
    spec.out_dir = out_dir;
    spec.write_traces = write_traces != 0;
    run_campaign(spec);
    return MSIM_OK;
  });
}

msim_status msim_recount(const char* trace_path, const char* results_path,
                         char* report, size_t report_size) {
  if (!trace_path || !results_path) {
    return fail(MSIM_ERR_ARG, "null argument");
  }
  return guarded([&]() -> msim_status {
    RecountReport rep;
    try {
      rep = recount_files(trace_path, results_path);
    } catch (const std::exception& e) {
      return fail(MSIM_ERR_IO, e.what());
    }
    std::string text = rep.ok ? "recount ok" : "recount mismatch";
    for (const auto& d : rep.diffs) {
      text += "\n  " + d;
    }
    if (report && report_size > 0) {
      const size_t n = std::min(report_size - 1, text.size());
      std::memcpy(report, text.data(), n);
      report[n] = '\0';
    }
    if (!rep.ok) {
      return fail(MSIM_ERR_RUNTIME, text);
    }
    return MSIM_OK;
  });
}

}  // extern "C"
