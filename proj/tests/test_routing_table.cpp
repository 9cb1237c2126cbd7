#include <set>

#include "doctest.h"
#include "manetsim/rng.hpp"
#include "manetsim/routing_table.hpp"

using namespace manetsim;

namespace {
SimTime sec(double s) { return SimTime::from_seconds(s); }
const std::set<NodeId> kNoBlacklist;
const SimTime kLifetime = sec(10);
}

TEST_CASE("first install creates the entry") {
  RoutingTable t;
  CHECK(t.install_path(9, 1, 7, 3, sec(1), 9));
  const RouteEntry* e = t.find(9);
  REQUIRE(e != nullptr);
  CHECK(e->valid);
  CHECK(e->dest_seq == 1);
  REQUIRE(e->paths.size() == 1);
  CHECK(e->paths[0].next_hop == 7);
  CHECK(e->paths[0].hop_count == 3);
}

TEST_CASE("equal-hop alternative keeps the earlier head") {
  RoutingTable t;
  t.install_path(9, 1, 7, 3, sec(1), 9);
  t.install_path(9, 1, 5, 3, sec(2), 9);
  const RouteEntry* e = t.find(9);
  REQUIRE(e->paths.size() == 2);
  CHECK(e->paths[0].next_hop == 7);  // tie broken by learned_at
  CHECK(e->paths[1].next_hop == 5);
}

TEST_CASE("newer sequence purges every old path") {
  RoutingTable t;
  t.install_path(9, 1, 7, 3, sec(1), 9);
  t.install_path(9, 1, 5, 4, sec(2), 9);
  t.install_path(9, 2, 6, 9, sec(3), 9);  // fresher but worse hop count
  const RouteEntry* e = t.find(9);
  CHECK(e->dest_seq == 2);
  REQUIRE(e->paths.size() == 1);
  CHECK(e->paths[0].next_hop == 6);
  CHECK(e->paths[0].hop_count == 9);
}

TEST_CASE("stale sequence is ignored") {
  RoutingTable t;
  t.install_path(9, 5, 7, 3, sec(1), 9);
  CHECK_FALSE(t.install_path(9, 4, 5, 1, sec(2), 9));
  CHECK(t.find(9)->paths.size() == 1);
}

TEST_CASE("same next hop improves in place, never duplicates") {
  RoutingTable t;
  t.install_path(9, 1, 7, 5, sec(1), 9);
  t.install_path(9, 1, 7, 3, sec(2), 9);
  t.install_path(9, 1, 7, 4, sec(3), 9);  // worse: ignored
  const RouteEntry* e = t.find(9);
  REQUIRE(e->paths.size() == 1);
  CHECK(e->paths[0].hop_count == 3);
}

TEST_CASE("select_path returns the minimum-hop non-blacklisted alternative") {
  RoutingTable t;
  t.install_path(9, 1, 2, 2, sec(1), 9);
  t.install_path(9, 1, 3, 3, sec(1), 9);
  t.install_path(9, 1, 4, 4, sec(1), 9);

  const PathAlternative* p = t.select_path(9, kNoBlacklist, sec(2), kLifetime);
  REQUIRE(p != nullptr);
  CHECK(p->hop_count == 2);

  std::set<NodeId> blk{2};
  p = t.select_path(9, blk, sec(2), kLifetime);
  REQUIRE(p != nullptr);
  CHECK(p->hop_count == 3);

  blk = {2, 3, 4};
  CHECK(t.select_path(9, blk, sec(2), kLifetime) == nullptr);
}

TEST_CASE("idle entries expire") {
  RoutingTable t;
  t.install_path(9, 1, 7, 3, sec(0), 9);
  CHECK(t.select_path(9, kNoBlacklist, sec(9.5), kLifetime) != nullptr);
  t.touch(9, sec(9.5));
  CHECK(t.select_path(9, kNoBlacklist, sec(19), kLifetime) != nullptr);
  CHECK(t.select_path(9, kNoBlacklist, sec(30), kLifetime) == nullptr);
  CHECK_FALSE(t.find(9)->valid);
}

TEST_CASE("failover keeps the surviving alternative") {
  RoutingTable t;
  t.install_path(9, 1, 7, 3, sec(1), 9);
  t.install_path(9, 1, 11, 4, sec(1), 9);
  const auto emptied = t.prune_neighbor(7);
  CHECK(emptied.empty());
  const RouteEntry* e = t.find(9);
  CHECK(e->valid);
  REQUIRE(e->paths.size() == 1);
  CHECK(e->paths[0].next_hop == 11);
}

TEST_CASE("losing the last path invalidates the entry") {
  RoutingTable t;
  t.install_path(9, 1, 7, 3, sec(1), 9);
  const auto emptied = t.prune_neighbor(7);
  REQUIRE(emptied.size() == 1);
  CHECK(emptied[0] == 9);
  CHECK_FALSE(t.find(9)->valid);
}

TEST_CASE("blacklist purge removes next-hop and replier matches") {
  RoutingTable t;
  t.install_path(9, 1, 13, 2, sec(1), 9);   // via the subject
  t.install_path(9, 1, 8, 3, sec(1), 9);    // clean
  t.install_path(4, 7, 2, 2, sec(1), 13);   // learned from the subject
  const auto emptied = t.purge_subject(13);
  const RouteEntry* e = t.find(9);
  REQUIRE(e->paths.size() == 1);
  CHECK(e->paths[0].next_hop == 8);
  CHECK_FALSE(t.find(4)->valid);
  REQUIRE(emptied.size() == 1);
  CHECK(emptied[0] == 4);
}

TEST_CASE("random installs keep entries sorted and first-hop disjoint") {
  RngStream rng(17, RngStream::Label::Topology, 1);
  RoutingTable t;
  SimTime now{};
  for (int i = 0; i < 2000; ++i) {
    now = now + SimTime::from_us(100);
    const NodeId dest = static_cast<NodeId>(rng.uniform_u64(4));
    const NodeId hop = static_cast<NodeId>(10 + rng.uniform_u64(6));
    const auto seq = static_cast<std::uint32_t>(rng.uniform_u64(8));
    const auto hops = static_cast<std::uint32_t>(1 + rng.uniform_u64(6));
    t.install_path(dest, seq, hop, hops, now, dest);
    const RouteEntry* e = t.find(dest);
    REQUIRE(e != nullptr);
    std::set<NodeId> hops_seen;
    for (std::size_t k = 0; k < e->paths.size(); ++k) {
      CHECK(e->paths[k].hop_count >= 1);
      CHECK(hops_seen.insert(e->paths[k].next_hop).second);  // disjoint
      if (k > 0) {
        CHECK(e->paths[k].hop_count >= e->paths[k - 1].hop_count);
      }
      CHECK(e->paths[k].hop_count >= e->paths[0].hop_count);  // head is Min
    }
  }
}
