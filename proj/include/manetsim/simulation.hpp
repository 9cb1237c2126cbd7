#pragma once

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "manetsim/audit.hpp"
#include "manetsim/event_queue.hpp"
#include "manetsim/messages.hpp"
#include "manetsim/metrics.hpp"
#include "manetsim/mobility.hpp"
#include "manetsim/node.hpp"
#include "manetsim/results.hpp"
#include "manetsim/rng.hpp"
#include "manetsim/scenario.hpp"
#include "manetsim/trace.hpp"

namespace manetsim {

struct CbrFlow {
  std::uint32_t id = 0;
  NodeId source = kNoNode;
  NodeId destination = kNoNode;
  std::uint32_t rate_pps = 3;
  SimTime start{};
  SimTime stop{};
};

// One deterministic run: a single-threaded event loop over the virtual
// clock. Two runs with the same scenario produce byte-identical traces.
class Simulation {
 public:
  explicit Simulation(Scenario scenario);

  void run();                    // to scenario duration
  void run_until_s(double t_s);  // partial run, tests only
  ResultsRecord results() const;

  SimTime now() const { return queue_.now(); }
  const Scenario& scenario() const { return scenario_; }
  const MetricsLedger& ledger() const { return ledger_; }
  const std::string& trace_text() const { return trace_.text(); }
  void write_trace(const std::string& path) const { trace_.write_file(path); }

  // Introspection for tests and the acceptance harness.
  std::size_t node_count() const { return nodes_.size(); }
  const NodeState& node(NodeId n) const { return nodes_[n]; }
  const Adjacency& adjacency() const { return adjacency_; }
  std::vector<Vec2> positions() const;
  const std::vector<CbrFlow>& flows() const { return flows_; }
  const std::vector<DetectionEvent>& detections() const { return detections_; }
  const AuditLedger& audit_ledger() const { return audit_; }
  std::set<NodeId> blacklist_union() const;

  // Schedules a route discovery at `t_s` without traffic (routing oracle).
  void request_route_at(double t_s, NodeId src, NodeId dst);
  // Repositions a node mid-run (test hook; rebuilds adjacency).
  void teleport_at(double t_s, NodeId n, Vec2 pos);

  // Invoked after every mobility tick with the fresh positions/adjacency.
  std::function<void(SimTime, const std::vector<Vec2>&, const Adjacency&)>
      tick_observer;

 private:
  struct EvMobility {};
  struct EvAudit { NodeId ids_node; };
  struct EvEmit { std::uint32_t flow; std::uint32_t seq; };
  struct EvDeliver { NodeId from; NodeId to; Message msg; };
  struct EvDiscoveryTimeout { NodeId node; NodeId dest; std::uint64_t token; };
  struct EvProbe { NodeId src; NodeId dst; };
  struct EvTeleport { NodeId node; Vec2 pos; };
  using Payload = std::variant<EvMobility, EvAudit, EvEmit, EvDeliver,
                               EvDiscoveryTimeout, EvProbe, EvTeleport>;

  void init();
  void dispatch(Payload& p);

  // engine pieces
  void on_mobility_tick();
  void on_audit_tick(NodeId ids_node);
  void on_emit(std::uint32_t flow_idx, std::uint32_t seq);
  void on_deliver(NodeId from, NodeId to, Message& msg);
  void on_discovery_timeout(NodeId node, NodeId dest, std::uint64_t token);

  // routing
  void originate_discovery(NodeState& n, NodeId dest);
  void send_rreq(NodeState& n, NodeId dest);
  void handle_rreq(NodeState& n, const ControlMessage& msg, NodeId prev);
  void handle_rrep(NodeState& n, ControlMessage msg, NodeId prev);
  void handle_rerr(NodeState& n, const ControlMessage& msg, NodeId prev);
  void handle_alert(NodeState& n, ControlMessage msg, NodeId prev);
  void forward_data(NodeState& n, DataPacket pkt, NodeId prev);
  void handle_link_break(NodeState& n, NodeId dead);
  void flush_buffer(NodeState& n, NodeId dest);
  void fail_discovery(NodeState& n, NodeId dest);

  // adversary
  void blackhole_handle_rreq(NodeState& n, const ControlMessage& msg,
                             NodeId prev);

  // intrusion detection
  void ids_observe_handoff(NodeId from, NodeId to, const DataPacket& pkt,
                           bool delivered);
  void ids_observe_emission(NodeId emitter, std::uint64_t pid);
  void ids_observe_work(NodeId emitter, NodeId dest);
  void start_alert(NodeState& ids_node, NodeId subject);
  void apply_blacklist(NodeState& n, NodeId subject);

  // channel
  SimTime hop_delay();
  bool unicast(NodeId from, NodeId to, Message msg);
  void broadcast_ctrl(NodeId from, const ControlMessage& msg);
  bool in_radio_range(NodeId a, NodeId b) const;

  std::uint32_t bump_seq_for_reply(NodeState& n, std::uint32_t requested);
  SimTime route_lifetime() const;

  Scenario scenario_;
  EventQueue<Payload> queue_;
  std::vector<NodeState> nodes_;
  std::vector<Vec2> pos_;
  std::vector<char> active_;
  Adjacency adjacency_;
  std::vector<CbrFlow> flows_;
  MetricsLedger ledger_;
  TraceWriter trace_;
  RngStream jitter_rng_;
  std::vector<RngStream> mobility_rng_;
  AuditLedger audit_;                 // shared by all monitor nodes
  std::set<NodeId> alerted_;          // subjects already announced
  std::vector<DetectionEvent> detections_;
  std::set<std::pair<std::uint32_t, std::uint32_t>> delivered_;  // flow, seq
  std::uint64_t next_pid_ = 1;
  SimTime latency_{};
  SimTime jitter_max_{};
  SimTime seen_lifetime_{};
  bool finished_ = false;
};

}  // namespace manetsim
