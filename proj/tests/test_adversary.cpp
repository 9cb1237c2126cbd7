#include "doctest.h"
#include "manetsim/simulation.hpp"
#include "support.hpp"

using namespace manetsim;
using namespace testsup;

namespace {

// Source 0 has an honest 3-hop chain 0-1-2-3 and one adjacent black hole.
// Traffic population is nodes 0..3; the attacker id follows them (4).
Scenario lure_fixture() {
  Scenario s = static_scenario(
      {{0, 0}, {0, 200}, {0, 400}, {0, 600}, {200, 0}}, 4, Mode::Attack);
  s.attacker_count = 1;
  s.flow_pairs = {{0, 3}};
  return s;
}

}  // namespace

TEST_CASE("a fake reply lures the requester onto the black hole") {
  Scenario s = lure_fixture();
  s.flow_stop_s = 0;
  Simulation sim(s);
  sim.request_route_at(1.0, 0, 3);
  sim.run();

  const NodeId attacker = s.attacker_nodes()[0];
  const RouteEntry* e = sim.node(0).table.find(3);
  REQUIRE(e != nullptr);
  REQUIRE(e->head() != nullptr);
  CHECK(e->head()->next_hop == attacker);
  CHECK(e->head()->replier == attacker);
  // the truthful reply lost the freshness comparison and was purged
  CHECK(e->paths.size() == 1);
  CHECK(e->dest_seq >= s.seq_inflation);
}

TEST_CASE("one lure per flood, fresh lure per new flood") {
  Scenario s = lure_fixture();
  s.flow_stop_s = 0;
  Simulation sim(s);
  sim.request_route_at(1.0, 0, 3);
  sim.request_route_at(12.0, 0, 2);  // second, distinct discovery
  sim.run_until_s(11.0);
  const NodeId attacker = s.attacker_nodes()[0];
  ParsedTrace trace = parse_trace(sim.trace_text());
  CHECK(events_of(trace, "rrep", attacker).size() == 1);
  sim.run();
  trace = parse_trace(sim.trace_text());
  CHECK(events_of(trace, "rrep", attacker).size() == 2);
}

TEST_CASE("data entering the black hole is destroyed and counted") {
  Scenario s = lure_fixture();
  s.duration_s = 30;
  Simulation sim(s);
  sim.run();

  const NodeId attacker = s.attacker_nodes()[0];
  const Counters& c = sim.ledger().counters();
  CHECK(c.dropped_attacker > 0);
  CHECK(c.received_unique == 0);
  CHECK(c.conserved());

  const ParsedTrace trace = parse_trace(sim.trace_text());
  CHECK(events_of(trace, "drop_attacker", attacker).size() ==
        c.dropped_attacker);
  // a black hole answers control traffic but never forwards anything
  CHECK(!events_of(trace, "rrep", attacker).empty());
  CHECK(events_of(trace, "fwd", attacker).empty());
  CHECK(events_of(trace, "rreq", attacker).empty());
}

TEST_CASE("the fake reply outranks any truthful reply on freshness") {
  RoutingTable t;
  // truthful reply first
  t.install_path(3, 5, 1, 3, SimTime::from_seconds(1), 3);
  // inflated fake arrives later yet replaces everything
  t.install_path(3, 105, 9, 2, SimTime::from_seconds(2), 9);
  CHECK(t.find(3)->head()->next_hop == 9);
  // a later truthful reply is now stale
  CHECK_FALSE(t.install_path(3, 6, 1, 3, SimTime::from_seconds(3), 3));
  CHECK(t.find(3)->head()->next_hop == 9);
}

TEST_CASE("attack-mode sweep: attackers swallow whatever crosses them") {
  Scenario s;
  s.node_count = 20;
  s.mode = Mode::Attack;
  s.duration_s = 30;
  s.seed = 5;
  Simulation sim(s);
  sim.run();
  const ParsedTrace trace = parse_trace(sim.trace_text());
  for (NodeId a : s.attacker_nodes()) {
    CHECK(events_of(trace, "fwd", a).empty());
    CHECK(events_of(trace, "rreq", a).empty());
    CHECK(events_of(trace, "rerr", a).empty());
  }
  CHECK(sim.ledger().counters().conserved());
}
