#include <algorithm>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "manetsim/event_queue.hpp"
#include "manetsim/rng.hpp"

using namespace manetsim;

namespace {
SimTime sec(double s) { return SimTime::from_seconds(s); }
}

TEST_CASE("event at the current clock is accepted and fires first") {
  EventQueue<int> q;
  q.schedule(sec(0.0), 1);
  q.schedule(sec(5.0), 2);
  auto ev = q.pop_until(sec(100));
  REQUIRE(ev.has_value());
  CHECK(ev->payload == 1);
  CHECK(q.now() == sec(0.0));
}

TEST_CASE("simultaneous events fire in scheduling order") {
  EventQueue<char> q;
  q.schedule(sec(5.0), 'A');
  q.schedule(sec(5.0), 'B');
  q.schedule(sec(1.0), 'x');
  std::string order;
  while (auto ev = q.pop_until(sec(10))) {
    order += ev->payload;
  }
  CHECK(order == "xAB");
}

TEST_CASE("scheduling in the past is a logic error") {
  EventQueue<int> q;
  q.schedule(sec(2.0), 0);
  (void)q.pop_until(sec(2.0));
  CHECK(q.now() == sec(2.0));
  CHECK_THROWS_AS(q.schedule(sec(1.0), 1), std::logic_error);
}

TEST_CASE("draining an empty queue just advances the clock") {
  EventQueue<int> q;
  CHECK_FALSE(q.pop_until(sec(100)).has_value());
  CHECK(q.now() == sec(100));
  CHECK(q.processed() == 0);
}

TEST_CASE("the end boundary is inclusive") {
  EventQueue<int> q;
  q.schedule(sec(1.0), 1);
  q.schedule(sec(2.0), 2);
  q.schedule(sec(3.0), 3);
  int count = 0;
  while (q.pop_until(sec(2.0))) ++count;
  CHECK(count == 2);
  CHECK(q.now() == sec(2.0));
  CHECK(q.pending() == 1);
}

TEST_CASE("cancelled events never fire") {
  EventQueue<int> q;
  auto h = q.schedule(sec(1.0), 1);
  q.schedule(sec(2.0), 2);
  CHECK(q.cancel(h));
  CHECK_FALSE(q.cancel(h));  // already gone
  auto ev = q.pop_until(sec(10));
  REQUIRE(ev.has_value());
  CHECK(ev->payload == 2);
}

TEST_CASE("random schedules process every event exactly once, in order") {
  RngStream rng(11, RngStream::Label::Topology, 0);
  EventQueue<int> q;
  const int n = 2000;
  std::vector<int> seen(n, 0);
  for (int i = 0; i < n; ++i) {
    q.schedule(SimTime::from_us(static_cast<std::int64_t>(
                   rng.uniform_u64(1000000))),
               i);
  }
  SimTime prev{};
  int count = 0;
  while (auto ev = q.pop_until(sec(2.0))) {
    CHECK(ev->at >= prev);
    prev = ev->at;
    ++seen[ev->payload];
    ++count;
  }
  CHECK(count == n);
  CHECK(std::all_of(seen.begin(), seen.end(), [](int c) { return c == 1; }));
}

TEST_CASE("events scheduled while draining are not lost") {
  EventQueue<int> q;
  q.schedule(sec(1.0), 0);
  int fired = 0;
  while (auto ev = q.pop_until(sec(10))) {
    ++fired;
    if (ev->payload == 0) {
      q.schedule(sec(5.0), 1);  // inside the window
    }
  }
  CHECK(fired == 2);
}
