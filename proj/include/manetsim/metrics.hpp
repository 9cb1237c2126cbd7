#pragma once

#include <cstdint>
#include <vector>

#include "manetsim/messages.hpp"
#include "manetsim/types.hpp"

namespace manetsim {

enum class DropCause { Attacker, Ttl, Buffer, NoRoute };

const char* drop_name(DropCause c);

// Raw monotone counters a run accumulates. Derived metrics are computed
// from these, and an independent trace recount must reproduce them exactly.
struct Counters {
  std::uint64_t sent = 0;
  std::uint64_t received_unique = 0;
  std::uint64_t received_dup = 0;
  std::uint64_t dropped_attacker = 0;
  std::uint64_t dropped_ttl = 0;
  std::uint64_t dropped_buffer = 0;
  std::uint64_t dropped_noroute = 0;
  std::uint64_t routing_rreq = 0;
  std::uint64_t routing_rrep = 0;
  std::uint64_t routing_rerr = 0;
  std::uint64_t routing_alert = 0;
  std::int64_t delay_sum_us = 0;
  std::uint64_t delay_samples = 0;
  std::int64_t in_flight = 0;

  std::uint64_t drops_total() const {
    return dropped_attacker + dropped_ttl + dropped_buffer + dropped_noroute;
  }
  std::uint64_t routing_total() const {
    return routing_rreq + routing_rrep + routing_rerr + routing_alert;
  }
  bool conserved() const {
    return sent == received_unique + drops_total() +
                       static_cast<std::uint64_t>(in_flight);
  }
  friend bool operator==(const Counters&, const Counters&) = default;
};

struct IntervalBucket {
  std::uint64_t sent = 0;
  std::uint64_t received_unique = 0;
  std::uint64_t dropped_attacker = 0;
  std::uint64_t dropped_ttl = 0;
  std::uint64_t dropped_buffer = 0;
  std::uint64_t dropped_noroute = 0;
  std::uint64_t routing = 0;
  std::int64_t delay_sum_us = 0;
  std::uint64_t delay_samples = 0;
  friend bool operator==(const IntervalBucket&, const IntervalBucket&) = default;
};

class MetricsLedger {
 public:
  MetricsLedger() : MetricsLedger(1.0, 1.0) {}
  MetricsLedger(double duration_s, double interval_s);

  void on_sent(SimTime t);
  void on_received_unique(SimTime t, SimTime delay);
  void on_received_dup(SimTime t);
  void on_drop(SimTime t, DropCause cause);
  void on_ctrl_tx(SimTime t, CtrlKind kind);

  const Counters& counters() const { return counters_; }
  const std::vector<IntervalBucket>& intervals() const { return buckets_; }
  double interval_s() const { return interval_s_; }

  static std::size_t bucket_index(SimTime t, double interval_s,
                                  std::size_t bucket_count);

 private:
  IntervalBucket& bucket(SimTime t);
  Counters counters_;
  std::vector<IntervalBucket> buckets_;
  double interval_s_ = 1.0;
};

// Derived metric with the zero-denominator policy: degenerate inputs
// produce flagged/absent values, never silent zeros.
struct MetricValue {
  double value = 0;
  bool absent = false;
  bool flagged = false;
};

MetricValue pdr(const Counters& c);               // ratio in [0,1]
MetricValue avg_delay_ms(const Counters& c);      // milliseconds
MetricValue nrl(const Counters& c);               // routing pkts per delivered
MetricValue throughput_pps(const Counters& c, double elapsed_s);
MetricValue throughput_bps(const Counters& c, double elapsed_s,
                           std::uint32_t payload_bytes);
MetricValue drop_pct(const Counters& c);          // percent of sent

}  // namespace manetsim
