#pragma once

// Shared fixtures and oracles for the simulator tests.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <queue>
#include <string>
#include <vector>

#include "manetsim/scenario.hpp"
#include "manetsim/trace.hpp"

namespace testsup {

using manetsim::NodeId;
using manetsim::Scenario;
using manetsim::Vec2;

// Static, jitter-free scenario over pinned positions. Node count is the
// full population; attacker/monitor roles follow the usual id layout.
inline Scenario static_scenario(std::vector<Vec2> positions,
                                std::uint32_t traffic_nodes,
                                manetsim::Mode mode = manetsim::Mode::Normal) {
  Scenario s;
  s.node_count = traffic_nodes;
  s.mode = mode;
  s.v_min = 0;
  s.v_max = 0;
  s.jitter_ms = 0;
  s.duration_s = 30;
  s.flow_pairs = {{0, 1}};  // placeholder; most fixtures override
  s.positions = std::move(positions);
  return s;
}

// Independent shortest-path oracle over the disk graph (hop metric).
// Returns hop counts from src; unreachable nodes get UINT32_MAX.
inline std::vector<std::uint32_t> bfs_hops(const std::vector<Vec2>& pos,
                                           double range, NodeId src) {
  const std::size_t n = pos.size();
  std::vector<std::uint32_t> dist(n, std::numeric_limits<std::uint32_t>::max());
  std::queue<NodeId> frontier;
  dist[src] = 0;
  frontier.push(src);
  while (!frontier.empty()) {
    const NodeId u = frontier.front();
    frontier.pop();
    for (NodeId v = 0; v < n; ++v) {
      if (v == u || dist[v] != std::numeric_limits<std::uint32_t>::max()) {
        continue;
      }
      const double dx = pos[u].x - pos[v].x;
      const double dy = pos[u].y - pos[v].y;
      if (dx * dx + dy * dy <= range * range) {
        dist[v] = dist[u] + 1;
        frontier.push(v);
      }
    }
  }
  return dist;
}

// Events of one kind, optionally filtered by node.
inline std::vector<manetsim::TraceEvent> events_of(
    const manetsim::ParsedTrace& trace, const std::string& kind,
    NodeId node = manetsim::kNoNode) {
  std::vector<manetsim::TraceEvent> out;
  for (const auto& ev : trace.events) {
    if (ev.kind != kind) continue;
    if (node != manetsim::kNoNode && ev.node != node) continue;
    out.push_back(ev);
  }
  return out;
}

// Forwarding chain of one packet: the sequence of transmitting nodes.
inline std::vector<NodeId> forwarding_chain(const manetsim::ParsedTrace& trace,
                                            std::uint64_t pid) {
  std::vector<NodeId> out;
  for (const auto& ev : trace.events) {
    if (ev.kind == "fwd" && ev.has_pid && ev.pid == pid) {
      out.push_back(ev.node);
    }
  }
  return out;
}

inline bool has_repeats(const std::vector<NodeId>& chain) {
  std::vector<NodeId> sorted = chain;
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end();
}

}  // namespace testsup
