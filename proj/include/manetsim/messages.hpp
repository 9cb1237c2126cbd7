#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "manetsim/types.hpp"

namespace manetsim {

enum class CtrlKind { Rreq, Rrep, Rerr, Alert };

const char* ctrl_name(CtrlKind k);

// One routing control record. (origin, broadcast_id) identifies a flood;
// hop_count increments exactly once per relay.
struct ControlMessage {
  CtrlKind kind = CtrlKind::Rreq;
  NodeId origin = kNoNode;         // flood originator (RREQ/ALERT), RREP's requester
  NodeId target = kNoNode;         // sought destination; RERR's dead destination
  std::uint32_t broadcast_id = 0;
  std::uint32_t hop_count = 0;
  std::uint32_t origin_seq = 0;
  std::uint32_t dest_seq = 0;
  NodeId replier = kNoNode;        // RREP only: node that generated the reply
  NodeId alert_subject = kNoNode;  // ALERT only
};

struct DataPacket {
  std::uint64_t id = 0;
  std::uint32_t flow = 0;
  std::uint32_t seq = 0;
  SimTime created_at{};
  std::uint32_t ttl = 0;  // hops remaining
  NodeId source = kNoNode;
  NodeId destination = kNoNode;
  std::vector<NodeId> visited;
};

using Message = std::variant<ControlMessage, DataPacket>;

}  // namespace manetsim
