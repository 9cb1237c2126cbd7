#include "manetsim/metrics.hpp"

#include <cmath>

namespace manetsim {

const char* drop_name(DropCause c) {
  switch (c) {
    case DropCause::Attacker: return "drop_attacker";
    case DropCause::Ttl: return "drop_ttl";
    case DropCause::Buffer: return "drop_buffer";
    case DropCause::NoRoute: return "drop_noroute";
  }
  return "drop";
}

MetricsLedger::MetricsLedger(double duration_s, double interval_s)
    : interval_s_(interval_s) {
  const auto n = static_cast<std::size_t>(std::ceil(duration_s / interval_s));
  buckets_.assign(n > 0 ? n : 1, IntervalBucket{});
}

std::size_t MetricsLedger::bucket_index(SimTime t, double interval_s,
                                        std::size_t bucket_count) {
  const auto interval_us =
      static_cast<std::int64_t>(std::llround(interval_s * 1e6));
  auto idx = static_cast<std::size_t>(t.us / interval_us);
  if (idx >= bucket_count) idx = bucket_count - 1;  // end boundary clamps
  return idx;
}

IntervalBucket& MetricsLedger::bucket(SimTime t) {
  return buckets_[bucket_index(t, interval_s_, buckets_.size())];
}

void MetricsLedger::on_sent(SimTime t) {
  ++counters_.sent;
  ++counters_.in_flight;
  ++bucket(t).sent;
}

void MetricsLedger::on_received_unique(SimTime t, SimTime delay) {
  ++counters_.received_unique;
  --counters_.in_flight;
  counters_.delay_sum_us += delay.us;
  ++counters_.delay_samples;
  auto& b = bucket(t);
  ++b.received_unique;
  b.delay_sum_us += delay.us;
  ++b.delay_samples;
}

void MetricsLedger::on_received_dup(SimTime t) {
  ++counters_.received_dup;
  (void)t;
}

void MetricsLedger::on_drop(SimTime t, DropCause cause) {
  --counters_.in_flight;
  auto& b = bucket(t);
  switch (cause) {
    case DropCause::Attacker:
      ++counters_.dropped_attacker;
      ++b.dropped_attacker;
      break;
    case DropCause::Ttl:
      ++counters_.dropped_ttl;
      ++b.dropped_ttl;
      break;
    case DropCause::Buffer:
      ++counters_.dropped_buffer;
      ++b.dropped_buffer;
      break;
    case DropCause::NoRoute:
      ++counters_.dropped_noroute;
      ++b.dropped_noroute;
      break;
  }
}

void MetricsLedger::on_ctrl_tx(SimTime t, CtrlKind kind) {
  switch (kind) {
    case CtrlKind::Rreq: ++counters_.routing_rreq; break;
    case CtrlKind::Rrep: ++counters_.routing_rrep; break;
    case CtrlKind::Rerr: ++counters_.routing_rerr; break;
    case CtrlKind::Alert: ++counters_.routing_alert; break;
  }
  ++bucket(t).routing;
}

MetricValue pdr(const Counters& c) {
  if (c.sent == 0) {
    return MetricValue{1.0, false, true};  // vacuous success, flagged
  }
  return MetricValue{static_cast<double>(c.received_unique) /
                     static_cast<double>(c.sent)};
}

MetricValue avg_delay_ms(const Counters& c) {
  if (c.delay_samples == 0) {
    return MetricValue{0.0, true, true};
  }
  const double mean_us = static_cast<double>(c.delay_sum_us) /
                         static_cast<double>(c.delay_samples);
  return MetricValue{mean_us / 1000.0};
}

MetricValue nrl(const Counters& c) {
  if (c.received_unique == 0) {
    return MetricValue{0.0, true, true};
  }
  return MetricValue{static_cast<double>(c.routing_total()) /
                     static_cast<double>(c.received_unique)};
}

MetricValue throughput_pps(const Counters& c, double elapsed_s) {
  if (elapsed_s <= 0) {
    return MetricValue{0.0, true, true};
  }
  return MetricValue{static_cast<double>(c.received_unique) / elapsed_s};
}

MetricValue throughput_bps(const Counters& c, double elapsed_s,
                           std::uint32_t payload_bytes) {
  MetricValue v = throughput_pps(c, elapsed_s);
  v.value *= static_cast<double>(payload_bytes);
  return v;
}

MetricValue drop_pct(const Counters& c) {
  if (c.sent == 0) {
    return MetricValue{0.0, true, true};
  }
  return MetricValue{100.0 * static_cast<double>(c.drops_total()) /
                     static_cast<double>(c.sent)};
}

}  // namespace manetsim
