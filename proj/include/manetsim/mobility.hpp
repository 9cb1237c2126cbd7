#pragma once

#include <span>
#include <vector>

#include "manetsim/rng.hpp"
#include "manetsim/types.hpp"

namespace manetsim {

struct Vec2 {
  double x = 0;
  double y = 0;
  friend bool operator==(const Vec2&, const Vec2&) = default;
};

struct AreaBounds {
  double width = 0;
  double height = 0;
  bool contains(Vec2 p) const {
    return p.x >= 0 && p.x <= width && p.y >= 0 && p.y <= height;
  }
};

struct SpeedRange {
  double v_min = 0;
  double v_max = 0;
};

struct NodeKinematics {
  Vec2 position;
  Vec2 waypoint;
  double speed = 0;
  SimTime pause_until{};
};

double distance(Vec2 a, Vec2 b);

Vec2 draw_point(const AreaBounds& bounds, RngStream& rng);

// Advances one random-waypoint tick of length dt starting at `now`. Pauses,
// arrivals and fresh waypoint draws are consumed within the tick, so several
// legs can be walked when dt is long. Positions never leave the bounds: the
// area is convex and every waypoint is drawn inside it.
NodeKinematics step_waypoint(NodeKinematics k, SimTime now, SimTime dt,
                             const AreaBounds& bounds, const SpeedRange& speeds,
                             SimTime pause, RngStream& rng);

// Symmetric disk graph over the active nodes. Distance exactly equal to the
// range counts as connected.
class Adjacency {
 public:
  Adjacency() = default;
  Adjacency(std::span<const Vec2> positions, std::span<const char> active,
            double range);

  std::size_t size() const { return neighbors_.size(); }
  bool connected(NodeId a, NodeId b) const;
  const std::vector<NodeId>& neighbors(NodeId n) const { return neighbors_[n]; }

 private:
  std::vector<std::vector<NodeId>> neighbors_;
};

}  // namespace manetsim
