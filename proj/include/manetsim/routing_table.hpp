#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "manetsim/types.hpp"

namespace manetsim {

// One learned way to a destination. Alternatives of an entry are kept
// sorted by (hop_count, learned_at, next_hop), so the head is always the
// minimum-hop path and equal-hop ties resolve to the earliest learned.
struct PathAlternative {
  NodeId next_hop = kNoNode;
  std::uint32_t hop_count = 0;  // >= 1
  SimTime learned_at{};
  NodeId replier = kNoNode;  // node whose reply installed this path
};

struct RouteEntry {
  NodeId destination = kNoNode;
  std::uint32_t dest_seq = 0;
  bool valid = false;
  SimTime last_used{};
  std::vector<PathAlternative> paths;

  const PathAlternative* head() const {
    return paths.empty() ? nullptr : &paths.front();
  }
};

class RoutingTable {
 public:
  RouteEntry* find(NodeId dest);
  const RouteEntry* find(NodeId dest) const;

  // Installs or refreshes one alternative, enforcing sequence-number
  // freshness: a newer dest_seq wipes every existing path, an equal one
  // adds a first-hop-disjoint alternative (or improves an existing one),
  // an older one is ignored. Returns false for stale updates.
  bool install_path(NodeId dest, std::uint32_t dest_seq, NodeId next_hop,
                    std::uint32_t hop_count, SimTime now, NodeId replier);

  // Lowest-hop alternative whose next hop is not blacklisted, or nullptr.
  // Entries idle past `lifetime` are invalidated on the way.
  const PathAlternative* select_path(NodeId dest,
                                     const std::set<NodeId>& blacklist,
                                     SimTime now, SimTime lifetime);

  void touch(NodeId dest, SimTime now);

  // Removes every alternative through a dead neighbor. Returns the
  // destinations whose entries lost their last path.
  std::vector<NodeId> prune_neighbor(NodeId dead);

  // Removes paths through one destination's alternatives matching `dead`.
  // Returns true when the entry lost its last path.
  bool prune_entry_next_hop(NodeId dest, NodeId dead);

  // Blacklist purge: drops alternatives whose next hop or replier is the
  // subject. Returns destinations whose entries lost their last path.
  std::vector<NodeId> purge_subject(NodeId subject);

  const std::map<NodeId, RouteEntry>& entries() const { return entries_; }

 private:
  RouteEntry& obtain(NodeId dest);
  std::map<NodeId, RouteEntry> entries_;
};

}  // namespace manetsim
