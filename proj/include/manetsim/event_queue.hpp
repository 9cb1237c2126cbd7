#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <unordered_set>
#include <vector>

#include "manetsim/types.hpp"

namespace manetsim {

struct EventHandle {
  std::uint64_t id = 0;
};

// Min-heap on (fire_time, sequence). The sequence counter is a monotone
// insertion index, so simultaneous events always fire in scheduling order.
// Cancellation is lazy: cancelled ids are skipped when popped.
template <typename Payload>
class EventQueue {
 public:
  struct Event {
    SimTime at;
    std::uint64_t seq = 0;
    std::uint64_t id = 0;
    Payload payload;
  };

  SimTime now() const { return clock_; }
  std::size_t pending() const { return live_.size(); }
  std::uint64_t processed() const { return processed_; }

  EventHandle schedule(SimTime at, Payload payload) {
    if (at < clock_) {
      throw std::logic_error("event scheduled in the past");
    }
    Event ev{at, next_seq_++, next_id_++, std::move(payload)};
    const std::uint64_t id = ev.id;
    live_.insert(id);
    heap_.push_back(std::move(ev));
    std::push_heap(heap_.begin(), heap_.end(), Later{});
    return EventHandle{id};
  }

  // True if the event existed and had not fired yet.
  bool cancel(EventHandle h) { return live_.erase(h.id) > 0; }

  // Pops the next event with fire_time <= end and advances the clock to it.
  // When none remains, the clock advances to end and nullopt is returned.
  std::optional<Event> pop_until(SimTime end) {
    while (!heap_.empty()) {
      if (heap_.front().at > end) {
        break;
      }
      std::pop_heap(heap_.begin(), heap_.end(), Later{});
      Event ev = std::move(heap_.back());
      heap_.pop_back();
      if (live_.erase(ev.id) == 0) {
        continue;  // cancelled
      }
      clock_ = ev.at;
      ++processed_;
      return ev;
    }
    if (end > clock_) {
      clock_ = end;
    }
    return std::nullopt;
  }

 private:
  struct Later {
    bool operator()(const Event& a, const Event& b) const {
      if (a.at != b.at) return a.at > b.at;
      return a.seq > b.seq;
    }
  };

  std::vector<Event> heap_;
  std::unordered_set<std::uint64_t> live_;
  SimTime clock_{};
  std::uint64_t next_seq_ = 0;
  std::uint64_t next_id_ = 1;
  std::uint64_t processed_ = 0;
};

}  // namespace manetsim
