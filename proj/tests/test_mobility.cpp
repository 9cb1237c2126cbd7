#include <cmath>
#include <vector>

#include "doctest.h"
#include "manetsim/mobility.hpp"
#include "manetsim/rng.hpp"

using namespace manetsim;

namespace {
SimTime sec(double s) { return SimTime::from_seconds(s); }
const AreaBounds kArea{800, 800};
}

TEST_CASE("straight-line kinematics") {
  RngStream rng(1, RngStream::Label::Mobility, 0);
  NodeKinematics k;
  k.position = {0, 0};
  k.waypoint = {100, 0};
  k.speed = 10;
  k = step_waypoint(k, sec(0), sec(1), kArea, SpeedRange{10, 10}, SimTime{},
                    rng);
  CHECK(k.position.x == doctest::Approx(10.0));
  CHECK(k.position.y == doctest::Approx(0.0));
}

TEST_CASE("arrival with zero pause draws a fresh waypoint inside bounds") {
  RngStream rng(2, RngStream::Label::Mobility, 0);
  NodeKinematics k;
  k.position = {50, 50};
  k.waypoint = {50, 50};
  k.speed = 5;
  k = step_waypoint(k, sec(0), sec(0.1), kArea, SpeedRange{3, 30}, SimTime{},
                    rng);
  CHECK(kArea.contains(k.waypoint));
  CHECK(k.waypoint.x != 50.0);  // fresh draw, not the old target
  CHECK(kArea.contains(k.position));
}

TEST_CASE("pause holds the node in place until it expires") {
  RngStream rng(3, RngStream::Label::Mobility, 0);
  NodeKinematics k;
  k.position = {10, 10};
  k.waypoint = {100, 10};
  k.speed = 10;
  k.pause_until = sec(0.5);
  k = step_waypoint(k, sec(0), sec(0.5), kArea, SpeedRange{10, 10}, sec(1),
                    rng);
  CHECK(k.position.x == doctest::Approx(10.0));
  k = step_waypoint(k, sec(0.5), sec(1.0), kArea, SpeedRange{10, 10}, sec(1),
                    rng);
  CHECK(k.position.x == doctest::Approx(20.0));
}

TEST_CASE("10000 ticks keep speeds and positions inside their ranges") {
  RngStream rng(4, RngStream::Label::Mobility, 7);
  NodeKinematics k;
  k.position = {400, 400};
  k.waypoint = {400, 400};
  const SpeedRange speeds{3, 30};
  SimTime t{};
  const SimTime dt = sec(0.1);
  for (int i = 0; i < 10000; ++i) {
    k = step_waypoint(k, t, dt, kArea, speeds, SimTime{}, rng);
    t = t + dt;
    CHECK(kArea.contains(k.position));
    CHECK(k.speed >= 3.0);
    CHECK(k.speed < 30.0);
  }
}

TEST_CASE("distance exactly at the range connects, beyond does not") {
  const std::vector<Vec2> close{{0, 0}, {250, 0}};
  const std::vector<char> active{1, 1};
  Adjacency at_range(close, active, 250);
  CHECK(at_range.connected(0, 1));
  CHECK(at_range.connected(1, 0));

  const std::vector<Vec2> apart{{0, 0}, {250.1, 0}};
  Adjacency beyond(apart, active, 250);
  CHECK_FALSE(beyond.connected(0, 1));
}

TEST_CASE("adjacency equals the brute-force pairwise oracle") {
  RngStream rng(5, RngStream::Label::Topology, 0);
  for (int round = 0; round < 20; ++round) {
    std::vector<Vec2> pos;
    std::vector<char> active;
    for (int i = 0; i < 20; ++i) {
      pos.push_back(draw_point(kArea, rng));
      active.push_back(1);
    }
    Adjacency adj(pos, active, 250);
    for (NodeId i = 0; i < 20; ++i) {
      CHECK_FALSE(adj.connected(i, i));
      for (NodeId j = 0; j < 20; ++j) {
        if (i == j) continue;
        const double dx = pos[i].x - pos[j].x;
        const double dy = pos[i].y - pos[j].y;
        const bool expect = dx * dx + dy * dy <= 250.0 * 250.0;
        CHECK(adj.connected(i, j) == expect);
        CHECK(adj.connected(i, j) == adj.connected(j, i));
      }
    }
  }
}

TEST_CASE("inactive nodes never appear in the graph") {
  const std::vector<Vec2> pos{{0, 0}, {100, 0}, {200, 0}};
  const std::vector<char> active{1, 0, 1};
  Adjacency adj(pos, active, 250);
  CHECK_FALSE(adj.connected(0, 1));
  CHECK_FALSE(adj.connected(1, 2));
  CHECK(adj.connected(0, 2));
}
