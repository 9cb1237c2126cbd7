#include "manetsim/scenario.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

namespace manetsim {
namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

double to_double(const std::string& key, const std::string& v) {
  try {
    std::size_t pos = 0;
    const double d = std::stod(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    return d;
  } catch (const std::exception&) {
    throw ConfigError(key, "expected a number, got '" + v + "'");
  }
}

std::uint64_t to_u64(const std::string& key, const std::string& v) {
  try {
    std::size_t pos = 0;
    const unsigned long long u = std::stoull(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    return u;
  } catch (const std::exception&) {
    throw ConfigError(key, "expected a non-negative integer, got '" + v + "'");
  }
}

bool to_bool(const std::string& key, const std::string& v) {
  if (v == "0" || v == "false" || v == "off") return false;
  if (v == "1" || v == "true" || v == "on") return true;
  throw ConfigError(key, "expected 0/1, got '" + v + "'");
}

std::string positions_to_string(const std::vector<Vec2>& ps) {
  std::string out;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    if (i) out += ",";
    out += fmt_double(ps[i].x) + ":" + fmt_double(ps[i].y);
  }
  return out;
}

std::vector<Vec2> positions_from_string(const std::string& key,
                                        const std::string& v) {
  std::vector<Vec2> out;
  if (trim(v).empty()) return out;
  std::stringstream ss(v);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) {
      throw ConfigError(key, "expected x:y pairs, got '" + item + "'");
    }
    out.push_back(Vec2{to_double(key, trim(item.substr(0, colon))),
                       to_double(key, trim(item.substr(colon + 1)))});
  }
  return out;
}

std::string pairs_to_string(const std::vector<std::pair<NodeId, NodeId>>& ps) {
  std::string out;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(ps[i].first) + ">" + std::to_string(ps[i].second);
  }
  return out;
}

std::vector<std::pair<NodeId, NodeId>> pairs_from_string(const std::string& key,
                                                         const std::string& v) {
  std::vector<std::pair<NodeId, NodeId>> out;
  if (trim(v).empty()) return out;
  std::stringstream ss(v);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto gt = item.find('>');
    if (gt == std::string::npos) {
      throw ConfigError(key, "expected src>dst pairs, got '" + item + "'");
    }
    out.emplace_back(
        static_cast<NodeId>(to_u64(key, trim(item.substr(0, gt)))),
        static_cast<NodeId>(to_u64(key, trim(item.substr(gt + 1)))));
  }
  return out;
}

struct Field {
  const char* name;
  std::function<std::string(const Scenario&)> get;
  std::function<void(Scenario&, const std::string&)> set;
};

const std::vector<Field>& fields() {
  auto num = [](const char* name, double Scenario::* member) {
    return Field{
        name,
        [member](const Scenario& s) { return fmt_double(s.*member); },
        [name, member](Scenario& s, const std::string& v) {
          s.*member = to_double(name, v);
        }};
  };
  auto u32 = [](const char* name, std::uint32_t Scenario::* member) {
    return Field{
        name,
        [member](const Scenario& s) { return std::to_string(s.*member); },
        [name, member](Scenario& s, const std::string& v) {
          s.*member = static_cast<std::uint32_t>(to_u64(name, v));
        }};
  };
  static const std::vector<Field> table = {
      u32("nodes", &Scenario::node_count),
      num("area_width", &Scenario::area_width),
      num("area_height", &Scenario::area_height),
      num("range", &Scenario::range),
      num("v_min", &Scenario::v_min),
      num("v_max", &Scenario::v_max),
      num("pause", &Scenario::pause_s),
      num("duration", &Scenario::duration_s),
      Field{"mode",
            [](const Scenario& s) { return mode_name(s.mode); },
            [](Scenario& s, const std::string& v) { s.mode = parse_mode(v); }},
      u32("attackers", &Scenario::attacker_count),
      u32("ids_nodes", &Scenario::ids_count),
      u32("flows", &Scenario::flow_count),
      u32("cbr_rate", &Scenario::cbr_rate_pps),
      u32("payload", &Scenario::payload_bytes),
      num("flow_start", &Scenario::flow_start_s),
      num("flow_stop", &Scenario::flow_stop_s),
      Field{"seed",
            [](const Scenario& s) { return std::to_string(s.seed); },
            [](Scenario& s, const std::string& v) {
              s.seed = to_u64("seed", v);
            }},
      num("mobility_tick", &Scenario::mobility_tick_s),
      num("per_hop_latency_ms", &Scenario::per_hop_latency_ms),
      num("jitter_ms", &Scenario::jitter_ms),
      num("route_lifetime", &Scenario::route_lifetime_s),
      num("discovery_timeout", &Scenario::discovery_timeout_s),
      u32("discovery_retries", &Scenario::discovery_retries),
      num("discovery_backoff", &Scenario::discovery_backoff),
      u32("data_ttl", &Scenario::data_ttl),
      u32("buffer_capacity", &Scenario::buffer_capacity),
      u32("audit_min_packets", &Scenario::audit_min_packets),
      num("audit_period", &Scenario::audit_period_s),
      num("confirm_window", &Scenario::confirm_window_s),
      u32("fake_hop_count", &Scenario::fake_hop_count),
      u32("seq_inflation", &Scenario::seq_inflation),
      Field{"ids_global_view",
            [](const Scenario& s) {
              return std::string(s.ids_global_view ? "1" : "0");
            },
            [](Scenario& s, const std::string& v) {
              s.ids_global_view = to_bool("ids_global_view", v);
            }},
      num("join_stagger", &Scenario::join_stagger_s),
      num("metrics_interval", &Scenario::metrics_interval_s),
      Field{"positions",
            [](const Scenario& s) { return positions_to_string(s.positions); },
            [](Scenario& s, const std::string& v) {
              s.positions = positions_from_string("positions", v);
            }},
      Field{"flow_pairs",
            [](const Scenario& s) { return pairs_to_string(s.flow_pairs); },
            [](Scenario& s, const std::string& v) {
              s.flow_pairs = pairs_from_string("flow_pairs", v);
            }},
  };
  return table;
}

const Field* find_field(const std::string& key) {
  for (const auto& f : fields()) {
    if (key == f.name) return &f;
  }
  return nullptr;
}

}  // namespace

const char* mode_name(Mode m) {
  switch (m) {
    case Mode::Normal: return "normal";
    case Mode::Attack: return "attack";
    case Mode::Ids: return "ids";
  }
  return "normal";
}

Mode parse_mode(const std::string& s) {
  if (s == "normal") return Mode::Normal;
  if (s == "attack") return Mode::Attack;
  if (s == "ids") return Mode::Ids;
  throw ConfigError("mode", "expected normal|attack|ids, got '" + s + "'");
}

std::vector<NodeId> Scenario::attacker_nodes() const {
  std::vector<NodeId> out(effective_attackers());
  std::iota(out.begin(), out.end(), node_count);
  return out;
}

std::vector<NodeId> Scenario::ids_nodes() const {
  std::vector<NodeId> out(effective_ids());
  std::iota(out.begin(), out.end(), node_count + effective_attackers());
  return out;
}

void Scenario::validate() const {
  if (node_count < 2) throw ConfigError("nodes", "need at least 2 nodes");
  if (area_width <= 0) throw ConfigError("area_width", "must be positive");
  if (area_height <= 0) throw ConfigError("area_height", "must be positive");
  if (range <= 0) throw ConfigError("range", "must be positive");
  if (v_min < 0) throw ConfigError("v_min", "must be non-negative");
  if (v_max < v_min) throw ConfigError("v_max", "must be >= v_min");
  if (pause_s < 0) throw ConfigError("pause", "must be non-negative");
  if (duration_s <= 0) throw ConfigError("duration", "must be positive");
  if (mode != Mode::Normal && attacker_count < 1) {
    throw ConfigError("attackers", "attack/ids modes need at least 1 attacker");
  }
  if (mode == Mode::Ids && ids_count < 1) {
    throw ConfigError("ids_nodes", "ids mode needs at least 1 monitor node");
  }
  if (cbr_rate_pps < 1) throw ConfigError("cbr_rate", "must be >= 1");
  if (payload_bytes < 1) throw ConfigError("payload", "must be >= 1");
  if (flow_start_s < 0) throw ConfigError("flow_start", "must be non-negative");
  const double stop = flow_stop_s < 0 ? duration_s : flow_stop_s;
  if (stop > duration_s) throw ConfigError("flow_stop", "must be <= duration");
  if (flow_start_s > stop) throw ConfigError("flow_start", "must be <= flow_stop");
  if (mobility_tick_s <= 0) throw ConfigError("mobility_tick", "must be positive");
  if (per_hop_latency_ms <= 0) {
    throw ConfigError("per_hop_latency_ms", "must be positive");
  }
  if (jitter_ms < 0) throw ConfigError("jitter_ms", "must be non-negative");
  if (route_lifetime_s <= 0) throw ConfigError("route_lifetime", "must be positive");
  if (discovery_timeout_s <= 0) {
    throw ConfigError("discovery_timeout", "must be positive");
  }
  if (discovery_retries < 1) {
    throw ConfigError("discovery_retries", "must be >= 1");
  }
  if (discovery_backoff < 1) {
    throw ConfigError("discovery_backoff", "must be >= 1");
  }
  if (data_ttl < 1) throw ConfigError("data_ttl", "must be >= 1");
  if (buffer_capacity < 1) throw ConfigError("buffer_capacity", "must be >= 1");
  if (audit_min_packets < 1) {
    throw ConfigError("audit_min_packets", "must be >= 1");
  }
  if (audit_period_s <= 0) throw ConfigError("audit_period", "must be positive");
  if (confirm_window_s <= 0) {
    throw ConfigError("confirm_window", "must be positive");
  }
  if (fake_hop_count < 1) throw ConfigError("fake_hop_count", "must be >= 1");
  if (seq_inflation < 1) throw ConfigError("seq_inflation", "must be >= 1");
  if (join_stagger_s < 0) throw ConfigError("join_stagger", "must be non-negative");
  if (metrics_interval_s <= 0) {
    throw ConfigError("metrics_interval", "must be positive");
  }
  if (!positions.empty() && positions.size() != total_nodes()) {
    throw ConfigError("positions",
                      "expected " + std::to_string(total_nodes()) +
                          " entries, got " + std::to_string(positions.size()));
  }
  for (const auto& p : positions) {
    if (!bounds().contains(p)) {
      throw ConfigError("positions", "point outside the simulation area");
    }
  }
  if (flow_pairs.empty()) {
    if (flow_count < 1) throw ConfigError("flows", "must be >= 1");
    if (2 * flow_count > node_count) {
      throw ConfigError("flows", "disjoint pairs need 2*flows <= nodes");
    }
  } else {
    std::set<NodeId> seen;
    for (const auto& [src, dst] : flow_pairs) {
      if (src >= node_count || dst >= node_count) {
        throw ConfigError("flow_pairs", "endpoints must be traffic nodes");
      }
      if (src == dst) throw ConfigError("flow_pairs", "src == dst");
      if (!seen.insert(src).second || !seen.insert(dst).second) {
        throw ConfigError("flow_pairs", "pairs must be node-disjoint");
      }
    }
  }
}

void Scenario::set(const std::string& key, const std::string& value) {
  const Field* f = find_field(key);
  if (!f) throw ConfigError(key, "unknown key");
  f->set(*this, value);
}

std::string Scenario::get(const std::string& key) const {
  const Field* f = find_field(key);
  if (!f) throw ConfigError(key, "unknown key");
  return f->get(*this);
}

const std::vector<std::string>& Scenario::keys() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& f : fields()) out.push_back(f.name);
    return out;
  }();
  return names;
}

std::string Scenario::serialize() const {
  std::vector<std::string> names = keys();
  std::sort(names.begin(), names.end());
  std::string out;
  for (const auto& name : names) {
    const std::string value = get(name);
    if ((name == "positions" || name == "flow_pairs") && value.empty()) {
      continue;
    }
    out += name + " = " + value + "\n";
  }
  return out;
}

Scenario Scenario::parse(const std::string& text) {
  Scenario s;
  std::stringstream ss(text);
  std::string line;
  int lineno = 0;
  while (std::getline(ss, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("line " + std::to_string(lineno),
                        "expected 'key = value'");
    }
    s.set(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
  return s;
}

Scenario Scenario::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config", "cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

}  // namespace manetsim
