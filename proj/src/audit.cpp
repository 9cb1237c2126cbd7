#include "manetsim/audit.hpp"

#include <algorithm>

namespace manetsim {

void AuditLedger::record_handoff(const AuditKey& key, std::uint64_t pid,
                                 SimTime now, SimTime window) {
  ++entries_[key].handed;
  pending_.push_back(Pending{key, pid, now + window});
}

void AuditLedger::record_delivered(const AuditKey& key) {
  auto& e = entries_[key];
  ++e.handed;
  ++e.confirmed;
}

void AuditLedger::confirm_packet(NodeId subject, std::uint64_t pid) {
  for (auto it = pending_.begin(); it != pending_.end();) {
    if (it->key.subject == subject && it->pid == pid) {
      ++entries_[it->key].confirmed;
      it = pending_.erase(it);
    } else {
      ++it;
    }
  }
}

void AuditLedger::confirm_work(NodeId subject, NodeId destination) {
  for (auto it = pending_.begin(); it != pending_.end();) {
    if (it->key.subject == subject && it->key.destination == destination) {
      ++entries_[it->key].confirmed;
      it = pending_.erase(it);
    } else {
      ++it;
    }
  }
}

AuditEvidence AuditLedger::evidence(NodeId subject, SimTime now) const {
  AuditEvidence ev;
  std::uint64_t handed = 0;
  for (const auto& [key, counts] : entries_) {
    if (key.subject != subject) continue;
    handed += counts.handed;
    ev.confirmed += counts.confirmed;
  }
  std::uint64_t immature = 0;
  for (const auto& p : pending_) {
    if (p.key.subject == subject && p.matures_at > now) {
      ++immature;
    }
  }
  ev.handed_matured = handed - immature;
  return ev;
}

std::vector<NodeId> AuditLedger::subjects() const {
  std::vector<NodeId> out;
  for (const auto& [key, counts] : entries_) {
    if (out.empty() || out.back() != key.subject) {
      if (std::find(out.begin(), out.end(), key.subject) == out.end()) {
        out.push_back(key.subject);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

AuditCounts AuditLedger::counts(const AuditKey& key) const {
  auto it = entries_.find(key);
  return it == entries_.end() ? AuditCounts{} : it->second;
}

Verdict audit_subject(const AuditEvidence& ev, std::uint32_t min_packets) {
  if (ev.handed_matured >= min_packets && ev.confirmed == 0) {
    return Verdict::Mismatch;
  }
  return Verdict::Consistent;
}

}  // namespace manetsim
