#include "manetsim/mobility.hpp"

#include <algorithm>
#include <cmath>

namespace manetsim {

double distance(Vec2 a, Vec2 b) {
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  return std::sqrt(dx * dx + dy * dy);
}

Vec2 draw_point(const AreaBounds& bounds, RngStream& rng) {
  // Two draws in fixed order so trajectories replay exactly.
  const double x = rng.uniform(0.0, bounds.width);
  const double y = rng.uniform(0.0, bounds.height);
  return Vec2{x, y};
}

NodeKinematics step_waypoint(NodeKinematics k, SimTime now, SimTime dt,
                             const AreaBounds& bounds, const SpeedRange& speeds,
                             SimTime pause, RngStream& rng) {
  SimTime t = now;
  const SimTime end = now + dt;
  while (t < end) {
    if (t < k.pause_until) {
      t = std::min(k.pause_until, end);
      continue;
    }
    if (k.position == k.waypoint) {
      k.waypoint = draw_point(bounds, rng);
      k.speed = rng.uniform(speeds.v_min, speeds.v_max);
      continue;
    }
    const double dist = distance(k.position, k.waypoint);
    const double remaining_s = (end - t).seconds();
    const double reach = k.speed * remaining_s;
    if (k.speed <= 0.0) {
      break;
    }
    if (reach >= dist) {
      k.position = k.waypoint;
      t = t + SimTime::from_seconds(dist / k.speed);
      k.pause_until = t + pause;
      continue;
    }
    const double frac = reach / dist;
    k.position.x += (k.waypoint.x - k.position.x) * frac;
    k.position.y += (k.waypoint.y - k.position.y) * frac;
    break;
  }
  return k;
}

Adjacency::Adjacency(std::span<const Vec2> positions,
                     std::span<const char> active, double range) {
  const std::size_t n = positions.size();
  neighbors_.assign(n, {});
  const double range_sq = range * range;
  for (std::size_t i = 0; i < n; ++i) {
    if (!active[i]) continue;
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!active[j]) continue;
      const double dx = positions[i].x - positions[j].x;
      const double dy = positions[i].y - positions[j].y;
      if (dx * dx + dy * dy <= range_sq) {
        neighbors_[i].push_back(static_cast<NodeId>(j));
        neighbors_[j].push_back(static_cast<NodeId>(i));
      }
    }
  }
}

bool Adjacency::connected(NodeId a, NodeId b) const {
  if (a >= neighbors_.size() || b >= neighbors_.size()) return false;
  const auto& nb = neighbors_[a];
  return std::find(nb.begin(), nb.end(), b) != nb.end();
}

}  // namespace manetsim
