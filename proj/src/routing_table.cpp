#include "manetsim/routing_table.hpp"

#include <algorithm>

namespace manetsim {
namespace {

bool path_order(const PathAlternative& a, const PathAlternative& b) {
  if (a.hop_count != b.hop_count) return a.hop_count < b.hop_count;
  if (a.learned_at != b.learned_at) return a.learned_at < b.learned_at;
  return a.next_hop < b.next_hop;
}

}  // namespace

RouteEntry* RoutingTable::find(NodeId dest) {
  auto it = entries_.find(dest);
  return it == entries_.end() ? nullptr : &it->second;
}

const RouteEntry* RoutingTable::find(NodeId dest) const {
  auto it = entries_.find(dest);
  return it == entries_.end() ? nullptr : &it->second;
}

RouteEntry& RoutingTable::obtain(NodeId dest) {
  RouteEntry& e = entries_[dest];
  e.destination = dest;
  return e;
}

bool RoutingTable::install_path(NodeId dest, std::uint32_t dest_seq,
                                NodeId next_hop, std::uint32_t hop_count,
                                SimTime now, NodeId replier) {
  RouteEntry& e = obtain(dest);
  if (!e.valid || dest_seq > e.dest_seq) {
    e.paths.clear();
    e.dest_seq = dest_seq;
    e.valid = true;
    e.paths.push_back(PathAlternative{next_hop, hop_count, now, replier});
    e.last_used = now;
    return true;
  }
  if (dest_seq < e.dest_seq) {
    return false;  // stale
  }
  auto same_hop = std::find_if(
      e.paths.begin(), e.paths.end(),
      [next_hop](const PathAlternative& p) { return p.next_hop == next_hop; });
  if (same_hop != e.paths.end()) {
    if (hop_count < same_hop->hop_count) {
      same_hop->hop_count = hop_count;
      same_hop->learned_at = now;
      same_hop->replier = replier;
    }
  } else {
    e.paths.push_back(PathAlternative{next_hop, hop_count, now, replier});
  }
  std::sort(e.paths.begin(), e.paths.end(), path_order);
  e.last_used = now;
  return true;
}

const PathAlternative* RoutingTable::select_path(
    NodeId dest, const std::set<NodeId>& blacklist, SimTime now,
    SimTime lifetime) {
  RouteEntry* e = find(dest);
  if (!e || !e->valid) return nullptr;
  if (now - e->last_used > lifetime) {
    e->valid = false;
    e->paths.clear();
    return nullptr;
  }
  for (const auto& p : e->paths) {
    if (!blacklist.contains(p.next_hop)) {
      return &p;
    }
  }
  return nullptr;
}

void RoutingTable::touch(NodeId dest, SimTime now) {
  if (RouteEntry* e = find(dest)) {
    e->last_used = now;
  }
}

std::vector<NodeId> RoutingTable::prune_neighbor(NodeId dead) {
  std::vector<NodeId> emptied;
  for (auto& [dest, e] : entries_) {
    if (!e.valid) continue;
    if (prune_entry_next_hop(dest, dead)) {
      emptied.push_back(dest);
    }
  }
  return emptied;
}

bool RoutingTable::prune_entry_next_hop(NodeId dest, NodeId dead) {
  RouteEntry* e = find(dest);
  if (!e || !e->valid) return false;
  const auto before = e->paths.size();
  std::erase_if(e->paths, [dead](const PathAlternative& p) {
    return p.next_hop == dead;
  });
  if (e->paths.empty() && before > 0) {
    e->valid = false;
    return true;
  }
  return false;
}

std::vector<NodeId> RoutingTable::purge_subject(NodeId subject) {
  std::vector<NodeId> emptied;
  for (auto& [dest, e] : entries_) {
    if (!e.valid) continue;
    const auto before = e.paths.size();
    std::erase_if(e.paths, [subject](const PathAlternative& p) {
      return p.next_hop == subject || p.replier == subject;
    });
    if (e.paths.empty() && before > 0) {
      e.valid = false;
      emptied.push_back(dest);
    }
  }
  return emptied;
}

}  // namespace manetsim
