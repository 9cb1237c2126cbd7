#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "manetsim/metrics.hpp"
#include "manetsim/scenario.hpp"
#include "manetsim/types.hpp"

namespace manetsim {

struct DetectionEvent {
  SimTime at{};
  NodeId ids_node = kNoNode;
  NodeId subject = kNoNode;
  std::uint64_t handed = 0;
  std::uint64_t confirmed = 0;
};

// Everything one run reports: the scenario echo (including the ground-truth
// attacker ids), raw counters, per-interval buckets, derived metrics and
// detection events. Serializes to a flat text record.
struct ResultsRecord {
  std::string scenario_text;
  std::vector<NodeId> attacker_nodes;
  std::vector<NodeId> ids_monitor_nodes;
  double duration_s = 0;
  double interval_s = 1;
  std::uint32_t payload_bytes = 512;
  Counters counters;
  std::vector<IntervalBucket> intervals;
  std::vector<DetectionEvent> detections;

  std::string serialize() const;
  static ResultsRecord parse(const std::string& text);
  void write_file(const std::string& path) const;
  static ResultsRecord load_file(const std::string& path);
};

}  // namespace manetsim
