/* manetsim: deterministic MANET routing simulator.
 *
 * C API over the simulation core: opaque handles, status codes, and
 * string-keyed scenario configuration matching the config-file schema.
 * Thread safety: handles are not shared between threads; the last-error
 * message is thread-local.
 */
#ifndef MANETSIM_H
#define MANETSIM_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  MSIM_OK = 0,
  MSIM_ERR_ARG = 1,     /* bad handle / unknown name / short buffer */
  MSIM_ERR_CONFIG = 2,  /* invalid scenario configuration */
  MSIM_ERR_IO = 3,      /* file could not be read or written */
  MSIM_ERR_RUNTIME = 4, /* simulation failure or recount mismatch */
} msim_status;

typedef struct msim_scenario msim_scenario;
typedef struct msim_results msim_results;

const char* msim_version(void);
const char* msim_status_name(msim_status status);
/* Message for the most recent failing call on this thread. */
const char* msim_last_error(void);

/* --- scenario configuration ------------------------------------------- */

msim_scenario* msim_scenario_new(void);
void msim_scenario_free(msim_scenario* s);
msim_status msim_scenario_set(msim_scenario* s, const char* key,
                              const char* value);
msim_status msim_scenario_get(const msim_scenario* s, const char* key,
                              char* out, size_t out_size);
msim_status msim_scenario_load(msim_scenario* s, const char* path);
msim_status msim_scenario_validate(const msim_scenario* s);

/* --- single run --------------------------------------------------------- */

/* Runs one scenario. trace_path and results_path may be NULL to skip
 * writing those artifacts. On success *out owns the run's results. */
msim_status msim_run(const msim_scenario* s, const char* trace_path,
                     const char* results_path, msim_results** out);

void msim_results_free(msim_results* r);
/* Counter names: sent, received_unique, received_dup, dropped_attacker,
 * dropped_ttl, dropped_buffer, dropped_noroute, routing_rreq, routing_rrep,
 * routing_rerr, routing_alert, routing_packets, delay_samples, in_flight,
 * detections. */
msim_status msim_results_counter(const msim_results* r, const char* name,
                                 uint64_t* out);
/* Metric names: pdr, avg_delay_ms, nrl, routing_packets, throughput_pps,
 * throughput_bps, drop_pct, packets_received. *absent is set when the
 * metric has no defined value (zero denominator). */
msim_status msim_results_metric(const msim_results* r, const char* name,
                                double* out, int* absent);
msim_status msim_results_detection(const msim_results* r, size_t index,
                                   double* time_s, uint32_t* ids_node,
                                   uint32_t* subject);
msim_status msim_results_write(const msim_results* r, const char* path);

/* --- campaigns and recounts --------------------------------------------- */

/* Cartesian sweep over node counts x modes x seeds; writes per-run results
 * (and traces when write_traces != 0), campaign.tsv and the per-figure
 * series files into out_dir. modes_csv example: "normal,attack,ids". */
msim_status msim_campaign(const msim_scenario* base,
                          const uint32_t* node_counts, size_t n_counts,
                          const char* modes_csv, const uint64_t* seeds,
                          size_t n_seeds, const char* out_dir,
                          int write_traces);

/* Recomputes all counters from a trace file and diffs them against a
 * results record. MSIM_OK only when every value matches; a human-readable
 * report is placed in report (truncated to report_size). */
msim_status msim_recount(const char* trace_path, const char* results_path,
                         char* report, size_t report_size);

#ifdef __cplusplus
}
#endif

#endif /* MANETSIM_H */
