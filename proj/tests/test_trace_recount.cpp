#include <string>

#include "doctest.h"
#include "manetsim/campaign.hpp"
#include "manetsim/simulation.hpp"
#include "support.hpp"

using namespace manetsim;
using namespace testsup;

TEST_CASE("same seed yields byte-identical traces; a new seed differs") {
  for (auto mode : {Mode::Normal, Mode::Attack, Mode::Ids}) {
    Scenario s;
    s.node_count = 20;
    s.mode = mode;
    s.duration_s = 15;
    s.seed = 7;
    Simulation a(s);
    a.run();
    Simulation b(s);
    b.run();
    CHECK(a.trace_text() == b.trace_text());

    s.seed = 8;
    Simulation c(s);
    c.run();
    CHECK(a.trace_text() != c.trace_text());
  }
}

TEST_CASE("recount reproduces every ledger value from the trace alone") {
  for (auto mode : {Mode::Normal, Mode::Attack, Mode::Ids}) {
    Scenario s;
    s.node_count = 20;
    s.mode = mode;
    s.duration_s = 20;
    s.seed = 11;
    Simulation sim(s);
    sim.run();
    const RecountReport report =
        recount_against(sim.trace_text(), sim.results());
    for (const auto& d : report.diffs) {
      CAPTURE(d);
    }
    CHECK(report.ok);
    CHECK(report.recounted == sim.ledger().counters());
  }
}

TEST_CASE("recount flags a tampered trace") {
  Scenario s;
  s.node_count = 20;
  s.duration_s = 10;
  Simulation sim(s);
  sim.run();
  std::string tampered = sim.trace_text();
  const auto pos = tampered.find(" recv ");
  REQUIRE(pos != std::string::npos);
  tampered.replace(pos, 6, " fwdx ");  // drop one delivery line
  const RecountReport report = recount_against(tampered, sim.results());
  CHECK_FALSE(report.ok);
  CHECK(!report.diffs.empty());
}

TEST_CASE("results records round-trip through their text form") {
  Scenario s;
  s.node_count = 20;
  s.mode = Mode::Ids;
  s.duration_s = 15;
  s.seed = 2;
  Simulation sim(s);
  sim.run();
  const ResultsRecord r = sim.results();
  const ResultsRecord back = ResultsRecord::parse(r.serialize());
  CHECK(back.counters == r.counters);
  CHECK(back.intervals.size() == r.intervals.size());
  CHECK(back.detections.size() == r.detections.size());
  CHECK(back.attacker_nodes == r.attacker_nodes);
  CHECK(back.duration_s == r.duration_s);
  CHECK(back.serialize() == r.serialize());
}

TEST_CASE("trace parser exposes the embedded scenario") {
  Scenario s = static_scenario({{0, 0}, {200, 0}}, 2);
  s.flow_pairs = {{0, 1}};
  s.duration_s = 5;
  Simulation sim(s);
  sim.run();
  const ParsedTrace trace = parse_trace(sim.trace_text());
  const Scenario embedded = Scenario::parse(trace.scenario_text);
  CHECK(embedded.duration_s == 5);
  CHECK(embedded.node_count == 2);
  CHECK(embedded.flow_pairs.size() == 1);
}

TEST_CASE("a duplicate delivery line counts once for pdr and carries a flag") {
  // recount path: hand-build a tiny trace with a duplicated sequence number
  const std::string trace_text =
      "# manetsim trace v1\n"
      "0.000000 send 0 - p1 flow=0 seq=0 dst=1\n"
      "0.002000 recv 1 0 p1 delay_us=2000 dup=0\n"
      "0.003000 recv 1 0 p1 delay_us=3000 dup=1\n";
  const ParsedTrace parsed = parse_trace(trace_text);
  const RecountedRun run = recount_events(parsed, 1.0, 1.0);
  CHECK(run.counters.sent == 1);
  CHECK(run.counters.received_unique == 1);
  CHECK(run.counters.received_dup == 1);
  CHECK(run.counters.delay_sum_us == 2000);
}
