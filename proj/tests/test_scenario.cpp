#include <string>

#include "doctest.h"
#include "manetsim/scenario.hpp"

using namespace manetsim;

TEST_CASE("defaults validate and reproduce the reference setup") {
  Scenario s;
  CHECK_NOTHROW(s.validate());
  CHECK(s.area_width == 800.0);
  CHECK(s.area_height == 800.0);
  CHECK(s.range == 250.0);
  CHECK(s.v_min == 3.0);
  CHECK(s.v_max == 30.0);
  CHECK(s.duration_s == 100.0);
  CHECK(s.cbr_rate_pps == 3);
  CHECK(s.attacker_count == 4);
  CHECK(s.ids_count == 2);
}

TEST_CASE("serialize/parse round-trips every field") {
  Scenario s;
  s.node_count = 20;
  s.mode = Mode::Ids;
  s.seed = 99;
  s.v_max = 12.5;
  s.jitter_ms = 0.25;
  s.positions = {{1.5, 2.5}, {3, 4}};
  s.flow_pairs = {{0, 1}, {2, 3}};
  const Scenario back = Scenario::parse(s.serialize());
  CHECK(back.serialize() == s.serialize());
  CHECK(back.node_count == 20);
  CHECK(back.mode == Mode::Ids);
  CHECK(back.seed == 99);
  CHECK(back.positions.size() == 2);
  CHECK(back.positions[0].x == 1.5);
  CHECK(back.flow_pairs.size() == 2);
}

TEST_CASE("population layout per mode") {
  Scenario s;
  s.node_count = 20;
  s.mode = Mode::Normal;
  CHECK(s.total_nodes() == 20);
  CHECK(s.attacker_nodes().empty());
  CHECK(s.ids_nodes().empty());
  s.mode = Mode::Attack;
  CHECK(s.total_nodes() == 24);
  CHECK(s.attacker_nodes() == std::vector<NodeId>{20, 21, 22, 23});
  CHECK(s.ids_nodes().empty());
  s.mode = Mode::Ids;
  CHECK(s.total_nodes() == 26);
  CHECK(s.ids_nodes() == std::vector<NodeId>{24, 25});
}

TEST_CASE("config errors name the offending field") {
  Scenario s;
  s.mode = Mode::Ids;
  s.ids_count = 0;
  try {
    s.validate();
    FAIL("expected ConfigError");
  } catch (const ConfigError& e) {
    CHECK(e.field == "ids_nodes");
  }

  s = Scenario{};
  s.mode = Mode::Attack;
  s.attacker_count = 0;
  CHECK_THROWS_AS(s.validate(), ConfigError);

  s = Scenario{};
  s.node_count = 10;
  s.flow_count = 10;  // needs 20 endpoints
  try {
    s.validate();
    FAIL("expected ConfigError");
  } catch (const ConfigError& e) {
    CHECK(e.field == "flows");
  }
}

TEST_CASE("unknown keys and malformed values are rejected") {
  Scenario s;
  CHECK_THROWS_AS(s.set("no_such_key", "1"), ConfigError);
  CHECK_THROWS_AS(s.set("nodes", "twenty"), ConfigError);
  CHECK_THROWS_AS(s.set("mode", "evil"), ConfigError);
  CHECK_THROWS_AS(Scenario::parse("nodes 20\n"), ConfigError);
  CHECK_NOTHROW(Scenario::parse("# comment\nnodes = 20\n"));
}

TEST_CASE("explicit flow pairs must be disjoint traffic nodes") {
  Scenario s;
  s.node_count = 10;
  s.flow_pairs = {{0, 1}, {1, 2}};  // node 1 reused
  CHECK_THROWS_AS(s.validate(), ConfigError);
  s.flow_pairs = {{0, 0}};
  CHECK_THROWS_AS(s.validate(), ConfigError);
  s.flow_pairs = {{0, 11}};  // beyond the traffic population
  CHECK_THROWS_AS(s.validate(), ConfigError);
  s.flow_pairs = {{0, 1}, {2, 3}};
  CHECK_NOTHROW(s.validate());
}

TEST_CASE("flow window validation") {
  Scenario s;
  s.flow_stop_s = 200.0;  // beyond duration
  CHECK_THROWS_AS(s.validate(), ConfigError);
  s.flow_stop_s = 50.0;
  s.flow_start_s = 60.0;
  CHECK_THROWS_AS(s.validate(), ConfigError);
  s.flow_start_s = 50.0;  // empty window is a valid degenerate case
  CHECK_NOTHROW(s.validate());
}
