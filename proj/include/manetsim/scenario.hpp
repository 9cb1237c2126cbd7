#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "manetsim/mobility.hpp"
#include "manetsim/types.hpp"

namespace manetsim {

enum class Mode { Normal, Attack, Ids };

const char* mode_name(Mode m);
Mode parse_mode(const std::string& s);

struct ConfigError : std::runtime_error {
  std::string field;
  ConfigError(std::string field_name, const std::string& what)
      : std::runtime_error("config field '" + field_name + "': " + what),
        field(std::move(field_name)) {}
};

// Full experiment configuration. Defaults reproduce the reference setup:
// 800x800 m area, 250 m range, speeds 3..30 m/s, 100 s runs, CBR at
// 3 packets/s, 4 attackers and 2 monitor nodes.
struct Scenario {
  std::uint32_t node_count = 50;
  double area_width = 800.0;
  double area_height = 800.0;
  double range = 250.0;
  double v_min = 3.0;
  double v_max = 30.0;
  double pause_s = 0.0;
  double duration_s = 100.0;
  Mode mode = Mode::Normal;
  std::uint32_t attacker_count = 4;
  std::uint32_t ids_count = 2;
  std::uint32_t flow_count = 10;
  std::uint32_t cbr_rate_pps = 3;
  std::uint32_t payload_bytes = 512;
  double flow_start_s = 0.0;
  double flow_stop_s = -1.0;  // negative: run until the scenario ends
  std::uint64_t seed = 1;

  // protocol constants
  double mobility_tick_s = 0.1;
  double per_hop_latency_ms = 2.0;
  double jitter_ms = 0.5;
  double route_lifetime_s = 10.0;
  double discovery_timeout_s = 1.0;
  std::uint32_t discovery_retries = 3;
  double discovery_backoff = 2.0;
  std::uint32_t data_ttl = 32;
  std::uint32_t buffer_capacity = 64;
  std::uint32_t audit_min_packets = 5;
  double audit_period_s = 1.0;
  double confirm_window_s = 0.5;
  std::uint32_t fake_hop_count = 1;
  std::uint32_t seq_inflation = 100;
  // Monitors audit as one system with network-wide visibility by default;
  // set false to restrict each observation to the monitors' radio range.
  bool ids_global_view = true;
  double join_stagger_s = 0.0;
  double metrics_interval_s = 1.0;

  // Optional pinned placement / traffic pattern, mainly for tests and the
  // routing oracle. Empty means "draw from the topology/traffic streams".
  std::vector<Vec2> positions;
  std::vector<std::pair<NodeId, NodeId>> flow_pairs;

  // Population layout: ids [0, node_count) carry traffic; attackers and
  // monitor nodes are appended after them, present only in the modes that
  // use them.
  std::uint32_t effective_attackers() const {
    return mode == Mode::Normal ? 0 : attacker_count;
  }
  std::uint32_t effective_ids() const {
    return mode == Mode::Ids ? ids_count : 0;
  }
  std::uint32_t total_nodes() const {
    return node_count + effective_attackers() + effective_ids();
  }
  std::vector<NodeId> attacker_nodes() const;
  std::vector<NodeId> ids_nodes() const;

  AreaBounds bounds() const { return AreaBounds{area_width, area_height}; }

  void validate() const;  // throws ConfigError naming the offending field

  void set(const std::string& key, const std::string& value);
  std::string get(const std::string& key) const;
  static const std::vector<std::string>& keys();

  std::string serialize() const;  // sorted "key = value" lines
  static Scenario parse(const std::string& text);
  static Scenario load_file(const std::string& path);
};

}  // namespace manetsim
