#include "manetsim/simulation.hpp"

#include <algorithm>
#include <cmath>

namespace manetsim {

const char* role_name(Role r) {
  switch (r) {
    case Role::Normal: return "normal";
    case Role::Blackhole: return "blackhole";
    case Role::IdsMonitor: return "ids";
  }
  return "normal";
}

Simulation::Simulation(Scenario scenario)
    : scenario_(std::move(scenario)),
      jitter_rng_(scenario_.seed, RngStream::Label::Jitter) {
  scenario_.validate();
  latency_ = SimTime::from_seconds(scenario_.per_hop_latency_ms / 1000.0);
  jitter_max_ = SimTime::from_seconds(scenario_.jitter_ms / 1000.0);
  seen_lifetime_ = SimTime::from_seconds(10.0);
  ledger_ = MetricsLedger(scenario_.duration_s, scenario_.metrics_interval_s);
  init();
}

void Simulation::init() {
  const std::uint32_t total = scenario_.total_nodes();
  nodes_.resize(total);
  pos_.resize(total);
  active_.resize(total);
  mobility_rng_.reserve(total);

  const auto attackers = scenario_.attacker_nodes();
  const auto monitors = scenario_.ids_nodes();
  for (NodeId i = 0; i < total; ++i) {
    NodeState& n = nodes_[i];
    n.id = i;
    if (std::find(attackers.begin(), attackers.end(), i) != attackers.end()) {
      n.role = Role::Blackhole;
    } else if (std::find(monitors.begin(), monitors.end(), i) !=
               monitors.end()) {
      n.role = Role::IdsMonitor;
    }
    RngStream placement(scenario_.seed, RngStream::Label::Topology, i);
    if (!scenario_.positions.empty()) {
      n.kin.position = scenario_.positions[i];
    } else {
      n.kin.position = draw_point(scenario_.bounds(), placement);
    }
    n.kin.waypoint = n.kin.position;  // first tick draws a fresh target
    if (scenario_.join_stagger_s > 0) {
      n.join_at =
          SimTime::from_seconds(placement.uniform(0, scenario_.join_stagger_s));
    }
    n.active = n.join_at.us == 0;
    pos_[i] = n.kin.position;
    active_[i] = n.active;
    mobility_rng_.emplace_back(scenario_.seed, RngStream::Label::Mobility, i);
  }
  adjacency_ = Adjacency(pos_, active_, scenario_.range);

  // Traffic pattern: explicit pairs, or node-disjoint pairs drawn from a
  // shuffle of the traffic-capable population.
  std::vector<std::pair<NodeId, NodeId>> pairs = scenario_.flow_pairs;
  if (pairs.empty()) {
    RngStream traffic(scenario_.seed, RngStream::Label::Traffic);
    std::vector<NodeId> ids(scenario_.node_count);
    for (NodeId i = 0; i < scenario_.node_count; ++i) ids[i] = i;
    for (std::size_t i = ids.size() - 1; i > 0; --i) {
      const auto j = traffic.uniform_u64(i + 1);
      std::swap(ids[i], ids[j]);
    }
    for (std::uint32_t f = 0; f < scenario_.flow_count; ++f) {
      pairs.emplace_back(ids[2 * f], ids[2 * f + 1]);
    }
  }
  const SimTime end = SimTime::from_seconds(scenario_.duration_s);
  const SimTime flow_start = SimTime::from_seconds(scenario_.flow_start_s);
  const SimTime flow_stop = scenario_.flow_stop_s < 0
                                ? end
                                : SimTime::from_seconds(scenario_.flow_stop_s);
  for (std::uint32_t f = 0; f < pairs.size(); ++f) {
    flows_.push_back(CbrFlow{f, pairs[f].first, pairs[f].second,
                             scenario_.cbr_rate_pps, flow_start, flow_stop});
  }

  trace_.header(scenario_);

  // CBR emissions at exact 1/rate spacing on the microsecond grid.
  for (std::uint32_t f = 0; f < flows_.size(); ++f) {
    const CbrFlow& flow = flows_[f];
    for (std::uint32_t k = 0;; ++k) {
      const SimTime at{flow.start.us +
                       static_cast<std::int64_t>(k) * 1000000 / flow.rate_pps};
      if (at >= flow.stop) break;
      queue_.schedule(at, EvEmit{f, k});
    }
  }

  const SimTime tick = SimTime::from_seconds(scenario_.mobility_tick_s);
  if (tick <= end) {
    queue_.schedule(tick, EvMobility{});
  }
  const SimTime audit = SimTime::from_seconds(scenario_.audit_period_s);
  for (NodeId m : monitors) {
    if (audit <= end) {
      queue_.schedule(audit, EvAudit{m});
    }
  }
}

void Simulation::run() { run_until_s(scenario_.duration_s); }

void Simulation::run_until_s(double t_s) {
  const SimTime end = SimTime::from_seconds(t_s);
  while (auto ev = queue_.pop_until(end)) {
    dispatch(ev->payload);
  }
}

void Simulation::dispatch(Payload& p) {
  std::visit(
      [this](auto& ev) {
        using T = std::decay_t<decltype(ev)>;
        if constexpr (std::is_same_v<T, EvMobility>) {
          on_mobility_tick();
        } else if constexpr (std::is_same_v<T, EvAudit>) {
          on_audit_tick(ev.ids_node);
        } else if constexpr (std::is_same_v<T, EvEmit>) {
          on_emit(ev.flow, ev.seq);
        } else if constexpr (std::is_same_v<T, EvDeliver>) {
          on_deliver(ev.from, ev.to, ev.msg);
        } else if constexpr (std::is_same_v<T, EvDiscoveryTimeout>) {
          on_discovery_timeout(ev.node, ev.dest, ev.token);
        } else if constexpr (std::is_same_v<T, EvProbe>) {
          NodeState& n = nodes_[ev.src];
          if (!n.table.select_path(ev.dst, n.blacklist, now(),
                                   route_lifetime()) &&
              !n.discovery[ev.dst].active) {
            originate_discovery(n, ev.dst);
          }
        } else if constexpr (std::is_same_v<T, EvTeleport>) {
          NodeState& n = nodes_[ev.node];
          n.kin.position = ev.pos;
          n.kin.waypoint = ev.pos;
          pos_[ev.node] = ev.pos;
          adjacency_ = Adjacency(pos_, active_, scenario_.range);
        }
      },
      p);
}

SimTime Simulation::route_lifetime() const {
  return SimTime::from_seconds(scenario_.route_lifetime_s);
}

void Simulation::on_mobility_tick() {
  const SimTime t = now();
  const SimTime tick = SimTime::from_seconds(scenario_.mobility_tick_s);
  const SimTime started = t - tick;
  const AreaBounds bounds = scenario_.bounds();
  const SpeedRange speeds{scenario_.v_min, scenario_.v_max};
  const SimTime pause = SimTime::from_seconds(scenario_.pause_s);
  for (NodeId i = 0; i < nodes_.size(); ++i) {
    NodeState& n = nodes_[i];
    if (!n.active && n.join_at <= t) {
      n.active = true;
    }
    if (!n.active) continue;
    n.kin = step_waypoint(n.kin, started, tick, bounds, speeds, pause,
                          mobility_rng_[i]);
    pos_[i] = n.kin.position;
    active_[i] = true;
  }
  adjacency_ = Adjacency(pos_, active_, scenario_.range);
  if (tick_observer) {
    tick_observer(t, pos_, adjacency_);
  }
  const SimTime next = t + tick;
  if (next <= SimTime::from_seconds(scenario_.duration_s)) {
    queue_.schedule(next, EvMobility{});
  }
}

void Simulation::on_emit(std::uint32_t flow_idx, std::uint32_t seq) {
  const CbrFlow& flow = flows_[flow_idx];
  NodeState& src = nodes_[flow.source];
  if (!src.active) return;  // not joined yet: nothing was sent
  DataPacket pkt;
  pkt.id = next_pid_++;
  pkt.flow = flow.id;
  pkt.seq = seq;
  pkt.created_at = now();
  pkt.ttl = scenario_.data_ttl;
  pkt.source = flow.source;
  pkt.destination = flow.destination;
  ledger_.on_sent(now());
  trace_.send(now(), flow.source, pkt.id, flow.id, seq, flow.destination);
  forward_data(src, std::move(pkt), kNoNode);
}

SimTime Simulation::hop_delay() {
  const std::uint64_t jitter_us = jitter_max_.us <= 0
                                      ? 0
                                      : jitter_rng_.uniform_u64(
                                            static_cast<std::uint64_t>(
                                                jitter_max_.us) +
                                            1);
  return latency_ + SimTime::from_us(static_cast<std::int64_t>(jitter_us));
}

bool Simulation::in_radio_range(NodeId a, NodeId b) const {
  return a == b || adjacency_.connected(a, b);
}

bool Simulation::unicast(NodeId from, NodeId to, Message msg) {
  if (const auto* ctrl = std::get_if<ControlMessage>(&msg)) {
    trace_.ctrl(now(), *ctrl, from, to);
    ledger_.on_ctrl_tx(now(), ctrl->kind);
  }
  if (!adjacency_.connected(from, to)) {
    return false;
  }
  queue_.schedule(now() + hop_delay(), EvDeliver{from, to, std::move(msg)});
  return true;
}

void Simulation::broadcast_ctrl(NodeId from, const ControlMessage& msg) {
  trace_.ctrl(now(), msg, from, kNoNode);
  ledger_.on_ctrl_tx(now(), msg.kind);
  for (NodeId nbr : adjacency_.neighbors(from)) {
    queue_.schedule(now() + hop_delay(), EvDeliver{from, nbr, Message{msg}});
  }
}

void Simulation::on_deliver(NodeId from, NodeId to, Message& msg) {
  NodeState& n = nodes_[to];
  if (!n.active) return;
  if (auto* pkt = std::get_if<DataPacket>(&msg)) {
    forward_data(n, std::move(*pkt), from);
    return;
  }
  const ControlMessage& ctrl = std::get<ControlMessage>(msg);
  if (n.role == Role::Blackhole) {
    n.max_seen_seq = std::max({n.max_seen_seq, ctrl.origin_seq, ctrl.dest_seq});
    if (ctrl.kind == CtrlKind::Rreq) {
      blackhole_handle_rreq(n, ctrl, from);
    }
    return;  // a black hole relays nothing
  }
  switch (ctrl.kind) {
    case CtrlKind::Rreq: handle_rreq(n, ctrl, from); break;
    case CtrlKind::Rrep: handle_rrep(n, ctrl, from); break;
    case CtrlKind::Rerr: handle_rerr(n, ctrl, from); break;
    case CtrlKind::Alert: handle_alert(n, ctrl, from); break;
  }
}

void Simulation::forward_data(NodeState& n, DataPacket pkt, NodeId prev) {
  (void)prev;
  if (n.role == Role::Blackhole && pkt.source != n.id) {
    ledger_.on_drop(now(), DropCause::Attacker);
    trace_.drop(now(), DropCause::Attacker, n.id, pkt.id);
    return;
  }
  if (pkt.destination == n.id) {
    const auto key = std::make_pair(pkt.flow, pkt.seq);
    const SimTime delay = now() - pkt.created_at;
    if (delivered_.contains(key)) {
      ledger_.on_received_dup(now());
      trace_.recv(now(), n.id, prev, pkt.id, delay.us, true);
    } else {
      delivered_.insert(key);
      ledger_.on_received_unique(now(), delay);
      trace_.recv(now(), n.id, prev, pkt.id, delay.us, false);
    }
    return;
  }
  if (pkt.ttl == 0) {
    ledger_.on_drop(now(), DropCause::Ttl);
    trace_.drop(now(), DropCause::Ttl, n.id, pkt.id);
    return;
  }
  while (true) {
    const PathAlternative* path =
        n.table.select_path(pkt.destination, n.blacklist, now(),
                            route_lifetime());
    if (!path) break;
    const NodeId next = path->next_hop;
    n.table.touch(pkt.destination, now());
    if (pkt.visited.empty() || pkt.visited.back() != n.id) {
      pkt.visited.push_back(n.id);
    }
    DataPacket copy = pkt;
    copy.ttl -= 1;
    const bool delivered = adjacency_.connected(n.id, next);
    trace_.fwd(now(), n.id, next, pkt.id, copy.ttl, delivered);
    ids_observe_emission(n.id, pkt.id);
    ids_observe_handoff(n.id, next, copy, delivered);
    if (delivered) {
      queue_.schedule(now() + hop_delay(),
                      EvDeliver{n.id, next, Message{std::move(copy)}});
      return;
    }
    handle_link_break(n, next);
  }
  // no usable route: hold the packet and go look for one
  auto& buf = n.buffers[pkt.destination];
  if (buf.size() >= scenario_.buffer_capacity) {
    const DataPacket& oldest = buf.front();
    ledger_.on_drop(now(), DropCause::Buffer);
    trace_.drop(now(), DropCause::Buffer, n.id, oldest.id);
    buf.pop_front();
  }
  const NodeId dest = pkt.destination;
  buf.push_back(std::move(pkt));
  if (!n.discovery[dest].active) {
    originate_discovery(n, dest);
  }
}

void Simulation::handle_link_break(NodeState& n, NodeId dead) {
  trace_.linkbreak(now(), n.id, dead);
  const std::vector<NodeId> emptied = n.table.prune_neighbor(dead);
  for (NodeId dest : emptied) {
    ControlMessage rerr;
    rerr.kind = CtrlKind::Rerr;
    rerr.origin = n.id;
    rerr.target = dest;
    broadcast_ctrl(n.id, rerr);
    ids_observe_work(n.id, dest);
  }
}

void Simulation::handle_rerr(NodeState& n, const ControlMessage& msg,
                             NodeId prev) {
  if (n.table.prune_entry_next_hop(msg.target, prev)) {
    ControlMessage rerr = msg;
    rerr.origin = n.id;
    rerr.hop_count = msg.hop_count + 1;
    broadcast_ctrl(n.id, rerr);
    ids_observe_work(n.id, msg.target);
  }
}

void Simulation::originate_discovery(NodeState& n, NodeId dest) {
  DiscoveryState& ds = n.discovery[dest];
  ds.active = true;
  ds.attempt = 1;
  ++ds.token;
  send_rreq(n, dest);
  queue_.schedule(now() + SimTime::from_seconds(scenario_.discovery_timeout_s),
                  EvDiscoveryTimeout{n.id, dest, ds.token});
}

void Simulation::send_rreq(NodeState& n, NodeId dest) {
  ++n.own_seq;
  const std::uint32_t bid = n.next_broadcast_id++;
  ControlMessage msg;
  msg.kind = CtrlKind::Rreq;
  msg.origin = n.id;
  msg.target = dest;
  msg.broadcast_id = bid;
  msg.hop_count = 0;
  msg.origin_seq = n.own_seq;
  const RouteEntry* e = n.table.find(dest);
  msg.dest_seq = e ? e->dest_seq : 0;
  FloodSeen& seen = n.seen[{n.id, bid}];
  seen.expires = now() + seen_lifetime_;
  broadcast_ctrl(n.id, msg);
  ids_observe_work(n.id, dest);
}

void Simulation::on_discovery_timeout(NodeId node, NodeId dest,
                                      std::uint64_t token) {
  NodeState& n = nodes_[node];
  DiscoveryState& ds = n.discovery[dest];
  if (!ds.active || ds.token != token) return;
  if (n.table.select_path(dest, n.blacklist, now(), route_lifetime())) {
    // a reply raced the timer
    ds.active = false;
    ++ds.token;
    flush_buffer(n, dest);
    return;
  }
  if (ds.attempt < scenario_.discovery_retries) {
    ++ds.attempt;
    send_rreq(n, dest);
    const double factor =
        std::pow(scenario_.discovery_backoff, ds.attempt - 1);
    queue_.schedule(
        now() + SimTime::from_seconds(scenario_.discovery_timeout_s * factor),
        EvDiscoveryTimeout{node, dest, ds.token});
    return;
  }
  fail_discovery(n, dest);
}

void Simulation::fail_discovery(NodeState& n, NodeId dest) {
  DiscoveryState& ds = n.discovery[dest];
  ds.active = false;
  ++ds.token;
  auto it = n.buffers.find(dest);
  if (it == n.buffers.end()) return;
  for (const DataPacket& pkt : it->second) {
    ledger_.on_drop(now(), DropCause::NoRoute);
    trace_.drop(now(), DropCause::NoRoute, n.id, pkt.id);
  }
  n.buffers.erase(it);
}

void Simulation::flush_buffer(NodeState& n, NodeId dest) {
  auto it = n.buffers.find(dest);
  if (it == n.buffers.end()) return;
  while (!it->second.empty()) {
    if (!n.table.select_path(dest, n.blacklist, now(), route_lifetime())) {
      return;  // route died mid-flush; packets stay buffered
    }
    DataPacket pkt = std::move(it->second.front());
    it->second.pop_front();
    forward_data(n, std::move(pkt), kNoNode);
    it = n.buffers.find(dest);
    if (it == n.buffers.end()) return;
  }
  n.buffers.erase(it);
}

std::uint32_t Simulation::bump_seq_for_reply(NodeState& n,
                                             std::uint32_t requested) {
  n.own_seq = std::max(n.own_seq, requested) + 1;
  return n.own_seq;
}

void Simulation::handle_rreq(NodeState& n, const ControlMessage& msg,
                             NodeId prev) {
  if (msg.origin == n.id) return;  // own flood echoed back
  auto key = std::make_pair(msg.origin, msg.broadcast_id);
  auto it = n.seen.find(key);
  if (it != n.seen.end() && now() > it->second.expires) {
    n.seen.erase(it);
    it = n.seen.end();
  }
  const bool first_copy = it == n.seen.end();
  // Reverse path toward the requester; duplicates via a new previous hop
  // contribute first-hop-disjoint alternatives.
  n.table.install_path(msg.origin, msg.origin_seq, prev, msg.hop_count + 1,
                       now(), msg.origin);
  flush_buffer(n, msg.origin);
  if (first_copy) {
    FloodSeen& seen = n.seen[key];
    seen.expires = now() + seen_lifetime_;
    seen.prev_hops.insert(prev);
    if (n.id == msg.target) {
      seen.replied_seq = bump_seq_for_reply(n, msg.dest_seq);
      ControlMessage rrep;
      rrep.kind = CtrlKind::Rrep;
      rrep.origin = msg.origin;
      rrep.target = n.id;
      rrep.broadcast_id = msg.broadcast_id;
      rrep.hop_count = 0;
      rrep.dest_seq = seen.replied_seq;
      rrep.replier = n.id;
      unicast(n.id, prev, Message{rrep});
    } else {
      ControlMessage fwd = msg;
      fwd.hop_count = msg.hop_count + 1;
      broadcast_ctrl(n.id, fwd);
    }
    return;
  }
  FloodSeen& seen = it->second;
  if (seen.prev_hops.insert(prev).second && n.id == msg.target) {
    // Another disjoint approach to the destination: answer it too, with the
    // same per-flood sequence so the requester keeps both alternatives.
    ControlMessage rrep;
    rrep.kind = CtrlKind::Rrep;
    rrep.origin = msg.origin;
    rrep.target = n.id;
    rrep.broadcast_id = msg.broadcast_id;
    rrep.hop_count = 0;
    rrep.dest_seq = seen.replied_seq != 0 ? seen.replied_seq
                                          : bump_seq_for_reply(n, msg.dest_seq);
    rrep.replier = n.id;
    if (seen.replied_seq == 0) seen.replied_seq = rrep.dest_seq;
    unicast(n.id, prev, Message{rrep});
  }
}

void Simulation::handle_rrep(NodeState& n, ControlMessage msg, NodeId prev) {
  if (n.blacklist.contains(prev) || n.blacklist.contains(msg.replier)) {
    trace_.ctrl_drop(now(), n.id, prev, "blacklisted");
    return;
  }
  const bool installed = n.table.install_path(
      msg.target, msg.dest_seq, prev, msg.hop_count + 1, now(), msg.replier);
  if (installed) {
    flush_buffer(n, msg.target);
  }
  if (n.id == msg.origin) {
    DiscoveryState& ds = n.discovery[msg.target];
    if (ds.active) {
      ds.active = false;
      ++ds.token;  // retire the pending timeout
    }
    return;
  }
  const PathAlternative* back =
      n.table.select_path(msg.origin, n.blacklist, now(), route_lifetime());
  if (!back) {
    trace_.ctrl_drop(now(), n.id, prev, "stale_rrep");
    return;
  }
  n.table.touch(msg.origin, now());
  msg.hop_count += 1;
  if (!unicast(n.id, back->next_hop, Message{msg})) {
    handle_link_break(n, back->next_hop);
  }
}

void Simulation::handle_alert(NodeState& n, ControlMessage msg, NodeId prev) {
  (void)prev;
  auto key = std::make_pair(msg.origin, msg.broadcast_id);
  if (n.seen.contains(key)) return;
  FloodSeen& seen = n.seen[key];
  seen.expires = now() + seen_lifetime_;
  const NodeId subject = msg.alert_subject;
  if (subject == n.id) return;
  if (n.blacklist.contains(subject)) return;  // known: no change, no re-flood
  apply_blacklist(n, subject);
  msg.hop_count += 1;
  broadcast_ctrl(n.id, msg);
}

void Simulation::apply_blacklist(NodeState& n, NodeId subject) {
  n.blacklist.insert(subject);
  n.table.purge_subject(subject);
}

void Simulation::blackhole_handle_rreq(NodeState& n, const ControlMessage& msg,
                                       NodeId prev) {
  auto key = std::make_pair(msg.origin, msg.broadcast_id);
  if (n.seen.contains(key)) return;  // one lure per flood
  FloodSeen& seen = n.seen[key];
  seen.expires = now() + seen_lifetime_;
  seen.prev_hops.insert(prev);
  ControlMessage fake;
  fake.kind = CtrlKind::Rrep;
  fake.origin = msg.origin;
  fake.target = msg.target;
  fake.broadcast_id = msg.broadcast_id;
  fake.hop_count = scenario_.fake_hop_count;
  fake.dest_seq = n.max_seen_seq + scenario_.seq_inflation;
  fake.replier = n.id;
  unicast(n.id, prev, Message{fake});
}

void Simulation::ids_observe_handoff(NodeId from, NodeId to,
                                     const DataPacket& pkt, bool delivered) {
  if (scenario_.mode != Mode::Ids) return;
  NodeId heard_by = kNoNode;
  bool recordable = false;
  for (NodeId m : scenario_.ids_nodes()) {
    if (!nodes_[m].active) continue;
    const bool hears = scenario_.ids_global_view || in_radio_range(m, from) ||
                       in_radio_range(m, to);
    if (hears && heard_by == kNoNode) heard_by = m;
    // Judging the receiver requires hearing the receiver's own radio, so a
    // handoff enters the ledger only when the receiver itself is in range.
    if (delivered &&
        (scenario_.ids_global_view || in_radio_range(m, to))) {
      recordable = true;
    }
  }
  if (heard_by == kNoNode) return;
  const bool final_hop = to == pkt.destination;
  const bool auditable = recordable && !final_hop && pkt.ttl > 0;
  trace_.observe(now(), heard_by, to, pkt.id, from, auditable);
  if (!recordable) return;
  const AuditKey key{from, to, pkt.destination};
  if (final_hop) {
    audit_.record_delivered(key);
  } else if (pkt.ttl > 0) {
    audit_.record_handoff(key, pkt.id, now(),
                          SimTime::from_seconds(scenario_.confirm_window_s));
  }
}

void Simulation::ids_observe_emission(NodeId emitter, std::uint64_t pid) {
  if (scenario_.mode != Mode::Ids) return;
  for (NodeId m : scenario_.ids_nodes()) {
    if (!nodes_[m].active) continue;
    if (scenario_.ids_global_view || in_radio_range(m, emitter)) {
      audit_.confirm_packet(emitter, pid);
      return;
    }
  }
}

void Simulation::ids_observe_work(NodeId emitter, NodeId dest) {
  if (scenario_.mode != Mode::Ids) return;
  for (NodeId m : scenario_.ids_nodes()) {
    if (!nodes_[m].active) continue;
    if (scenario_.ids_global_view || in_radio_range(m, emitter)) {
      audit_.confirm_work(emitter, dest);
      return;
    }
  }
}

void Simulation::on_audit_tick(NodeId ids_node) {
  NodeState& m = nodes_[ids_node];
  if (m.active) {
    for (NodeId subject : audit_.subjects()) {
      if (alerted_.contains(subject)) continue;
      const AuditEvidence ev = audit_.evidence(subject, now());
      if (audit_subject(ev, scenario_.audit_min_packets) ==
          Verdict::Mismatch) {
        detections_.push_back(
            DetectionEvent{now(), ids_node, subject, ev.handed_matured,
                           ev.confirmed});
        trace_.detect(now(), ids_node, subject, ev.handed_matured,
                      ev.confirmed);
        alerted_.insert(subject);
        start_alert(m, subject);
      }
    }
  }
  const SimTime next =
      now() + SimTime::from_seconds(scenario_.audit_period_s);
  if (next <= SimTime::from_seconds(scenario_.duration_s)) {
    queue_.schedule(next, EvAudit{ids_node});
  }
}

void Simulation::start_alert(NodeState& ids_node, NodeId subject) {
  apply_blacklist(ids_node, subject);
  ControlMessage msg;
  msg.kind = CtrlKind::Alert;
  msg.origin = ids_node.id;
  msg.target = kNoNode;
  msg.broadcast_id = ids_node.next_broadcast_id++;
  msg.hop_count = 0;
  msg.alert_subject = subject;
  FloodSeen& seen = ids_node.seen[{ids_node.id, msg.broadcast_id}];
  seen.expires = now() + seen_lifetime_;
  broadcast_ctrl(ids_node.id, msg);
}

std::vector<Vec2> Simulation::positions() const { return pos_; }

std::set<NodeId> Simulation::blacklist_union() const {
  std::set<NodeId> out;
  for (const NodeState& n : nodes_) {
    out.insert(n.blacklist.begin(), n.blacklist.end());
  }
  return out;
}

void Simulation::request_route_at(double t_s, NodeId src, NodeId dst) {
  queue_.schedule(SimTime::from_seconds(t_s), EvProbe{src, dst});
}

void Simulation::teleport_at(double t_s, NodeId n, Vec2 pos) {
  queue_.schedule(SimTime::from_seconds(t_s), EvTeleport{n, pos});
}

ResultsRecord Simulation::results() const {
  ResultsRecord r;
  r.scenario_text = scenario_.serialize();
  r.attacker_nodes = scenario_.attacker_nodes();
  r.ids_monitor_nodes = scenario_.ids_nodes();
  r.duration_s = scenario_.duration_s;
  r.interval_s = scenario_.metrics_interval_s;
  r.payload_bytes = scenario_.payload_bytes;
  r.counters = ledger_.counters();
  r.intervals = ledger_.intervals();
  r.detections = detections_;
  return r;
}

}  // namespace manetsim
