#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "manetsim/messages.hpp"
#include "manetsim/metrics.hpp"
#include "manetsim/types.hpp"

namespace manetsim {

struct Scenario;

// Append-only run log, one line per event:
//   <time> <kind> <node> <peer|-> <packet|-> [detail...]
// Written so that every ledger metric can be recounted from the file alone.
class TraceWriter {
 public:
  void header(const Scenario& s);
  void send(SimTime t, NodeId src, std::uint64_t pid, std::uint32_t flow,
            std::uint32_t seq, NodeId dst);
  void fwd(SimTime t, NodeId from, NodeId to, std::uint64_t pid,
           std::uint32_t ttl, bool delivered);
  void recv(SimTime t, NodeId node, NodeId from, std::uint64_t pid,
            std::int64_t delay_us, bool dup);
  void drop(SimTime t, DropCause cause, NodeId node, std::uint64_t pid);
  void ctrl(SimTime t, const ControlMessage& msg, NodeId node, NodeId peer);
  void ctrl_drop(SimTime t, NodeId node, NodeId peer, const char* reason);
  void linkbreak(SimTime t, NodeId node, NodeId dead);
  void observe(SimTime t, NodeId ids_node, NodeId to, std::uint64_t pid,
               NodeId from, bool auditable);
  void detect(SimTime t, NodeId ids_node, NodeId subject, std::uint64_t handed,
              std::uint64_t confirmed);

  const std::string& text() const { return buf_; }
  void write_file(const std::string& path) const;

 private:
  void stamp(SimTime t, const char* kind, NodeId node, NodeId peer,
             std::uint64_t pid, bool has_pid);
  std::string buf_;
};

// One parsed trace line, enough for recounts and test assertions.
struct TraceEvent {
  SimTime t{};
  std::string kind;
  NodeId node = kNoNode;
  NodeId peer = kNoNode;
  std::uint64_t pid = 0;
  bool has_pid = false;
  std::string detail;  // raw "k=v ..." tail

  std::string field(const std::string& key) const;  // "" when missing
};

struct ParsedTrace {
  std::string scenario_text;  // embedded config, reparseable
  std::vector<TraceEvent> events;
};

ParsedTrace parse_trace(const std::string& text);

// Independent recount of the ledger from a trace: consumes only the event
// lines, never the simulator's own counters.
struct RecountedRun {
  Counters counters;
  std::vector<IntervalBucket> intervals;
};

RecountedRun recount_events(const ParsedTrace& trace, double duration_s,
                            double interval_s);

}  // namespace manetsim
