#pragma once

#include <cstdint>
#include <deque>
#include <map>
#include <set>
#include <utility>

#include "manetsim/messages.hpp"
#include "manetsim/mobility.hpp"
#include "manetsim/routing_table.hpp"
#include "manetsim/types.hpp"

namespace manetsim {

enum class Role { Normal, Blackhole, IdsMonitor };

const char* role_name(Role r);

// Flood dedup record: which previous hops of one (origin, broadcast_id)
// flood were already processed.
struct FloodSeen {
  SimTime expires{};
  std::set<NodeId> prev_hops;
  std::uint32_t replied_seq = 0;  // destination's reply seq, shared per flood
};

struct DiscoveryState {
  bool active = false;
  std::uint32_t attempt = 0;
  std::uint64_t token = 0;  // invalidates stale timeout timers
};

struct NodeState {
  NodeId id = kNoNode;
  Role role = Role::Normal;
  bool active = true;  // false until a staggered join fires
  SimTime join_at{};
  NodeKinematics kin;
  RoutingTable table;
  std::map<std::pair<NodeId, std::uint32_t>, FloodSeen> seen;
  std::uint32_t own_seq = 0;
  std::uint32_t next_broadcast_id = 0;
  std::set<NodeId> blacklist;
  std::map<NodeId, std::deque<DataPacket>> buffers;  // per destination
  std::map<NodeId, DiscoveryState> discovery;
  std::uint32_t max_seen_seq = 0;  // black hole: basis for inflated replies
};

}  // namespace manetsim
