#include "manetsim/results.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace manetsim {
namespace {

std::string fmt6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

std::string metric_line(const char* name, MetricValue v) {
  std::string out = name;
  out += " = ";
  if (v.absent) {
    out += "absent";
  } else {
    out += fmt6(v.value);
  }
  if (v.flagged) out += " flagged";
  out += '\n';
  return out;
}

std::string ids_csv(const std::vector<NodeId>& ids) {
  std::string out;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(ids[i]);
  }
  return out;
}

std::vector<NodeId> parse_ids_csv(const std::string& s) {
  std::vector<NodeId> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(static_cast<NodeId>(std::stoul(item)));
  }
  return out;
}

}  // namespace

std::string ResultsRecord::serialize() const {
  std::string out = "# manetsim results v1\n";
  out += "[scenario]\n" + scenario_text;
  out += "[meta]\n";
  out += "attackers = " + ids_csv(attacker_nodes) + "\n";
  out += "ids_monitors = " + ids_csv(ids_monitor_nodes) + "\n";
  out += "duration = " + fmt6(duration_s) + "\n";
  out += "interval = " + fmt6(interval_s) + "\n";
  out += "payload = " + std::to_string(payload_bytes) + "\n";
  out += "[counters]\n";
  const Counters& c = counters;
  out += "sent = " + std::to_string(c.sent) + "\n";
  out += "received_unique = " + std::to_string(c.received_unique) + "\n";
  out += "received_dup = " + std::to_string(c.received_dup) + "\n";
  out += "dropped_attacker = " + std::to_string(c.dropped_attacker) + "\n";
  out += "dropped_ttl = " + std::to_string(c.dropped_ttl) + "\n";
  out += "dropped_buffer = " + std::to_string(c.dropped_buffer) + "\n";
  out += "dropped_noroute = " + std::to_string(c.dropped_noroute) + "\n";
  out += "routing_rreq = " + std::to_string(c.routing_rreq) + "\n";
  out += "routing_rrep = " + std::to_string(c.routing_rrep) + "\n";
  out += "routing_rerr = " + std::to_string(c.routing_rerr) + "\n";
  out += "routing_alert = " + std::to_string(c.routing_alert) + "\n";
  out += "delay_sum_us = " + std::to_string(c.delay_sum_us) + "\n";
  out += "delay_samples = " + std::to_string(c.delay_samples) + "\n";
  out += "in_flight = " + std::to_string(c.in_flight) + "\n";
  out += "[metrics]\n";
  out += metric_line("pdr", pdr(c));
  out += metric_line("avg_delay_ms", avg_delay_ms(c));
  out += metric_line("nrl", nrl(c));
  out += "routing_packets = " + std::to_string(c.routing_total()) + "\n";
  out += metric_line("throughput_pps", throughput_pps(c, duration_s));
  out += metric_line("throughput_bps",
                     throughput_bps(c, duration_s, payload_bytes));
  out += metric_line("drop_pct", drop_pct(c));
  out += "[detections]\n";
  for (const auto& d : detections) {
    out += format_seconds(d.at) + " ids=" + std::to_string(d.ids_node) +
           " subject=" + std::to_string(d.subject) +
           " handed=" + std::to_string(d.handed) +
           " confirmed=" + std::to_string(d.confirmed) + "\n";
  }
  out += "[intervals]\n";
  out += "# idx sent recv drop_att drop_ttl drop_buf drop_nor routing"
         " delay_us samples\n";
  for (std::size_t i = 0; i < intervals.size(); ++i) {
    const IntervalBucket& b = intervals[i];
    out += std::to_string(i) + " " + std::to_string(b.sent) + " " +
           std::to_string(b.received_unique) + " " +
           std::to_string(b.dropped_attacker) + " " +
           std::to_string(b.dropped_ttl) + " " +
           std::to_string(b.dropped_buffer) + " " +
           std::to_string(b.dropped_noroute) + " " +
           std::to_string(b.routing) + " " +
           std::to_string(b.delay_sum_us) + " " +
           std::to_string(b.delay_samples) + "\n";
  }
  return out;
}

ResultsRecord ResultsRecord::parse(const std::string& text) {
  ResultsRecord r;
  std::stringstream ss(text);
  std::string line;
  std::string section;
  auto kv = [](const std::string& l) -> std::pair<std::string, std::string> {
    const auto eq = l.find('=');
    if (eq == std::string::npos) return {"", ""};
    auto trim = [](std::string s) {
      const auto b = s.find_first_not_of(" \t");
      const auto e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    return {trim(l.substr(0, eq)), trim(l.substr(eq + 1))};
  };
  while (std::getline(ss, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line[0] == '[') {
      section = line;
      continue;
    }
    if (line[0] == '#') {
      continue;
    }
    if (section == "[scenario]") {
      r.scenario_text += line + "\n";
    } else if (section == "[meta]") {
      auto [k, v] = kv(line);
      if (k == "attackers") r.attacker_nodes = parse_ids_csv(v);
      else if (k == "ids_monitors") r.ids_monitor_nodes = parse_ids_csv(v);
      else if (k == "duration") r.duration_s = std::stod(v);
      else if (k == "interval") r.interval_s = std::stod(v);
      else if (k == "payload") r.payload_bytes =
          static_cast<std::uint32_t>(std::stoul(v));
    } else if (section == "[counters]") {
      auto [k, v] = kv(line);
      Counters& c = r.counters;
      if (k == "sent") c.sent = std::stoull(v);
      else if (k == "received_unique") c.received_unique = std::stoull(v);
      else if (k == "received_dup") c.received_dup = std::stoull(v);
      else if (k == "dropped_attacker") c.dropped_attacker = std::stoull(v);
      else if (k == "dropped_ttl") c.dropped_ttl = std::stoull(v);
      else if (k == "dropped_buffer") c.dropped_buffer = std::stoull(v);
      else if (k == "dropped_noroute") c.dropped_noroute = std::stoull(v);
      else if (k == "routing_rreq") c.routing_rreq = std::stoull(v);
      else if (k == "routing_rrep") c.routing_rrep = std::stoull(v);
      else if (k == "routing_rerr") c.routing_rerr = std::stoull(v);
      else if (k == "routing_alert") c.routing_alert = std::stoull(v);
      else if (k == "delay_sum_us") c.delay_sum_us = std::stoll(v);
      else if (k == "delay_samples") c.delay_samples = std::stoull(v);
      else if (k == "in_flight") c.in_flight = std::stoll(v);
    } else if (section == "[detections]") {
      DetectionEvent d;
      std::istringstream ls(line);
      std::string t_str, ids_str, subj_str, handed_str, conf_str;
      ls >> t_str >> ids_str >> subj_str >> handed_str >> conf_str;
      auto after = [](const std::string& s) {
        return s.substr(s.find('=') + 1);
      };
      d.at = SimTime::from_seconds(std::stod(t_str));
      d.ids_node = static_cast<NodeId>(std::stoul(after(ids_str)));
      d.subject = static_cast<NodeId>(std::stoul(after(subj_str)));
      d.handed = std::stoull(after(handed_str));
      d.confirmed = std::stoull(after(conf_str));
      r.detections.push_back(d);
    } else if (section == "[intervals]") {
      std::istringstream ls(line);
      std::size_t idx = 0;
      IntervalBucket b;
      ls >> idx >> b.sent >> b.received_unique >> b.dropped_attacker >>
          b.dropped_ttl >> b.dropped_buffer >> b.dropped_noroute >>
          b.routing >> b.delay_sum_us >> b.delay_samples;
      r.intervals.push_back(b);
    }
  }
  return r;
}

void ResultsRecord::write_file(const std::string& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot write results file '" + path + "'");
  }
  out << serialize();
}

ResultsRecord ResultsRecord::load_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot read results file '" + path + "'");
  }
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

}  // namespace manetsim
