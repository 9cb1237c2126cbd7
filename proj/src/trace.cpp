#include "manetsim/trace.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "manetsim/scenario.hpp"

namespace manetsim {

const char* ctrl_name(CtrlKind k) {
  switch (k) {
    case CtrlKind::Rreq: return "rreq";
    case CtrlKind::Rrep: return "rrep";
    case CtrlKind::Rerr: return "rerr";
    case CtrlKind::Alert: return "alert";
  }
  return "ctrl";
}

namespace {

std::string id_or_dash(NodeId n) {
  return n == kNoNode ? "-" : std::to_string(n);
}

}  // namespace

void TraceWriter::stamp(SimTime t, const char* kind, NodeId node, NodeId peer,
                        std::uint64_t pid, bool has_pid) {
  buf_ += format_seconds(t);
  buf_ += ' ';
  buf_ += kind;
  buf_ += ' ';
  buf_ += id_or_dash(node);
  buf_ += ' ';
  buf_ += id_or_dash(peer);
  buf_ += ' ';
  if (has_pid) {
    buf_ += 'p';
    buf_ += std::to_string(pid);
  } else {
    buf_ += '-';
  }
}

void TraceWriter::header(const Scenario& s) {
  buf_ += "# manetsim trace v1\n";
  std::stringstream ss(s.serialize());
  std::string line;
  while (std::getline(ss, line)) {
    buf_ += "# ";
    buf_ += line;
    buf_ += '\n';
  }
}

void TraceWriter::send(SimTime t, NodeId src, std::uint64_t pid,
                       std::uint32_t flow, std::uint32_t seq, NodeId dst) {
  stamp(t, "send", src, kNoNode, pid, true);
  buf_ += " flow=" + std::to_string(flow) + " seq=" + std::to_string(seq) +
          " dst=" + std::to_string(dst) + "\n";
}

void TraceWriter::fwd(SimTime t, NodeId from, NodeId to, std::uint64_t pid,
                      std::uint32_t ttl, bool delivered) {
  stamp(t, "fwd", from, to, pid, true);
  buf_ += " ttl=" + std::to_string(ttl) +
          " ok=" + (delivered ? std::string("1") : std::string("0")) + "\n";
}

void TraceWriter::recv(SimTime t, NodeId node, NodeId from, std::uint64_t pid,
                       std::int64_t delay_us, bool dup) {
  stamp(t, "recv", node, from, pid, true);
  buf_ += " delay_us=" + std::to_string(delay_us) +
          " dup=" + (dup ? std::string("1") : std::string("0")) + "\n";
}

void TraceWriter::drop(SimTime t, DropCause cause, NodeId node,
                       std::uint64_t pid) {
  stamp(t, drop_name(cause), node, kNoNode, pid, true);
  buf_ += '\n';
}

void TraceWriter::ctrl(SimTime t, const ControlMessage& msg, NodeId node,
                       NodeId peer) {
  stamp(t, ctrl_name(msg.kind), node, peer, 0, false);
  buf_ += " id=" + std::to_string(msg.origin) + ":" +
          std::to_string(msg.broadcast_id) +
          " hops=" + std::to_string(msg.hop_count);
  switch (msg.kind) {
    case CtrlKind::Rreq:
      buf_ += " target=" + std::to_string(msg.target) +
              " oseq=" + std::to_string(msg.origin_seq);
      break;
    case CtrlKind::Rrep:
      buf_ += " target=" + std::to_string(msg.target) +
              " dseq=" + std::to_string(msg.dest_seq) +
              " replier=" + std::to_string(msg.replier);
      break;
    case CtrlKind::Rerr:
      buf_ += " dest=" + std::to_string(msg.target);
      break;
    case CtrlKind::Alert:
      buf_ += " subject=" + std::to_string(msg.alert_subject);
      break;
  }
  buf_ += '\n';
}

void TraceWriter::ctrl_drop(SimTime t, NodeId node, NodeId peer,
                            const char* reason) {
  stamp(t, "ctrl_drop", node, peer, 0, false);
  buf_ += " reason=";
  buf_ += reason;
  buf_ += '\n';
}

void TraceWriter::linkbreak(SimTime t, NodeId node, NodeId dead) {
  stamp(t, "linkbreak", node, dead, 0, false);
  buf_ += '\n';
}

void TraceWriter::observe(SimTime t, NodeId ids_node, NodeId to,
                          std::uint64_t pid, NodeId from, bool auditable) {
  stamp(t, "obs", ids_node, to, pid, true);
  buf_ += " from=" + std::to_string(from) +
          " auditable=" + (auditable ? std::string("1") : std::string("0")) +
          "\n";
}

void TraceWriter::detect(SimTime t, NodeId ids_node, NodeId subject,
                         std::uint64_t handed, std::uint64_t confirmed) {
  stamp(t, "detect", ids_node, subject, 0, false);
  buf_ += " handed=" + std::to_string(handed) +
          " confirmed=" + std::to_string(confirmed) + "\n";
}

void TraceWriter::write_file(const std::string& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot write trace file '" + path + "'");
  }
  out << buf_;
}

std::string TraceEvent::field(const std::string& key) const {
  const std::string want = key + "=";
  std::size_t pos = 0;
  while (pos < detail.size()) {
    const std::size_t end = detail.find(' ', pos);
    const std::string token = detail.substr(
        pos, end == std::string::npos ? std::string::npos : end - pos);
    if (token.rfind(want, 0) == 0) {
      return token.substr(want.size());
    }
    if (end == std::string::npos) break;
    pos = end + 1;
  }
  return "";
}

ParsedTrace parse_trace(const std::string& text) {
  ParsedTrace out;
  std::stringstream ss(text);
  std::string line;
  while (std::getline(ss, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      if (line.rfind("# manetsim", 0) == 0) continue;
      out.scenario_text += line.size() > 2 ? line.substr(2) : "";
      out.scenario_text += '\n';
      continue;
    }
    std::istringstream ls(line);
    std::string t_str, node_str, peer_str, pid_str;
    TraceEvent ev;
    if (!(ls >> t_str >> ev.kind >> node_str >> peer_str >> pid_str)) {
      throw std::runtime_error("malformed trace line: " + line);
    }
    ev.t = SimTime::from_seconds(std::stod(t_str));
    ev.node = node_str == "-" ? kNoNode
                              : static_cast<NodeId>(std::stoul(node_str));
    ev.peer = peer_str == "-" ? kNoNode
                              : static_cast<NodeId>(std::stoul(peer_str));
    if (pid_str != "-" && pid_str.size() > 1 && pid_str[0] == 'p') {
      ev.pid = std::stoull(pid_str.substr(1));
      ev.has_pid = true;
    }
    std::getline(ls, ev.detail);
    if (!ev.detail.empty() && ev.detail[0] == ' ') {
      ev.detail.erase(0, 1);
    }
    out.events.push_back(std::move(ev));
  }
  return out;
}

RecountedRun recount_events(const ParsedTrace& trace, double duration_s,
                            double interval_s) {
  RecountedRun run;
  const auto n_buckets = static_cast<std::size_t>(
      std::ceil(duration_s / interval_s));
  run.intervals.assign(n_buckets > 0 ? n_buckets : 1, IntervalBucket{});
  Counters& c = run.counters;
  auto bucket = [&](SimTime t) -> IntervalBucket& {
    return run.intervals[MetricsLedger::bucket_index(t, interval_s,
                                                     run.intervals.size())];
  };
  for (const auto& ev : trace.events) {
    if (ev.kind == "send") {
      ++c.sent;
      ++bucket(ev.t).sent;
    } else if (ev.kind == "recv") {
      if (ev.field("dup") == "1") {
        ++c.received_dup;
      } else {
        ++c.received_unique;
        const std::int64_t d = std::stoll(ev.field("delay_us"));
        c.delay_sum_us += d;
        ++c.delay_samples;
        auto& b = bucket(ev.t);
        ++b.received_unique;
        b.delay_sum_us += d;
        ++b.delay_samples;
      }
    } else if (ev.kind == "drop_attacker") {
      ++c.dropped_attacker;
      ++bucket(ev.t).dropped_attacker;
    } else if (ev.kind == "drop_ttl") {
      ++c.dropped_ttl;
      ++bucket(ev.t).dropped_ttl;
    } else if (ev.kind == "drop_buffer") {
      ++c.dropped_buffer;
      ++bucket(ev.t).dropped_buffer;
    } else if (ev.kind == "drop_noroute") {
      ++c.dropped_noroute;
      ++bucket(ev.t).dropped_noroute;
    } else if (ev.kind == "rreq") {
      ++c.routing_rreq;
      ++bucket(ev.t).routing;
    } else if (ev.kind == "rrep") {
      ++c.routing_rrep;
      ++bucket(ev.t).routing;
    } else if (ev.kind == "rerr") {
      ++c.routing_rerr;
      ++bucket(ev.t).routing;
    } else if (ev.kind == "alert") {
      ++c.routing_alert;
      ++bucket(ev.t).routing;
    }
  }
  c.in_flight = static_cast<std::int64_t>(c.sent) -
                static_cast<std::int64_t>(c.received_unique) -
                static_cast<std::int64_t>(c.drops_total());
  return run;
}

}  // namespace manetsim
