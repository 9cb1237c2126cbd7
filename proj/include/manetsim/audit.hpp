#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "manetsim/types.hpp"

namespace manetsim {

// Forwarding-audit bookkeeping shared by the monitor nodes. A handoff
// sender->subject is recorded only when the subject itself is inside some
// monitor's radio range, so its follow-up transmission (or silence) is
// genuinely observable. A recorded handoff is confirmed by any overheard
// transmission that shows the subject worked on the packet: re-emitting it,
// or originating a route request / route error for its destination. Route
// replies never confirm - advertising a route is exactly what a black hole
// does while dropping.
struct AuditKey {
  NodeId sender = kNoNode;
  NodeId subject = kNoNode;  // the audited next hop
  NodeId destination = kNoNode;
  friend auto operator<=>(const AuditKey&, const AuditKey&) = default;
};

struct AuditCounts {
  std::uint64_t handed = 0;
  std::uint64_t confirmed = 0;
};

struct AuditEvidence {
  std::uint64_t handed_matured = 0;  // handoffs past the confirm window
  std::uint64_t confirmed = 0;
};

enum class Verdict { Consistent, Mismatch };

class AuditLedger {
 public:
  // Data handoff overheard with the subject in range. Creates a pending
  // confirmation that matures after `window`.
  void record_handoff(const AuditKey& key, std::uint64_t pid, SimTime now,
                      SimTime window);

  // Final-hop handoff: arrival at the destination is itself the proof.
  void record_delivered(const AuditKey& key);

  // Subject re-emitted packet `pid` (delivery outcome irrelevant).
  void confirm_packet(NodeId subject, std::uint64_t pid);

  // Subject originated an RREQ or RERR for `destination`; confirms every
  // pending packet it holds toward that destination.
  void confirm_work(NodeId subject, NodeId destination);

  AuditEvidence evidence(NodeId subject, SimTime now) const;
  std::vector<NodeId> subjects() const;  // ascending
  AuditCounts counts(const AuditKey& key) const;
  std::uint64_t pending_count() const { return pending_.size(); }

 private:
  struct Pending {
    AuditKey key;
    std::uint64_t pid = 0;
    SimTime matures_at{};
  };
  std::map<AuditKey, AuditCounts> entries_;
  std::vector<Pending> pending_;
};

Verdict audit_subject(const AuditEvidence& ev, std::uint32_t min_packets);

}  // namespace manetsim
